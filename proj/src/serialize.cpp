#include "tatecoh/serialize.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tatecoh/error.hpp"

namespace tatecoh {

using nlohmann::json;

namespace {

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

FieldElement scalar_from(const FieldDescriptor& f, const json& j) {
  if (j.is_string()) return FieldElement::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return FieldElement::from_int(f, j.get<std::int64_t>());
  throw Error(ErrorCode::ParseError, "scalar must be a string or an integer");
}

Matrix matrix_from(const FieldDescriptor& f, std::size_t dim, const json& j) {
  if (!j.is_array() || j.size() != dim) throw Error(ErrorCode::ParseError, "action matrix must have " + std::to_string(dim) + " rows");
  Matrix m(f, dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!j[r].is_array() || j[r].size() != dim) throw Error(ErrorCode::ParseError, "action matrix row has wrong length");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = scalar_from(f, j[r][c]);
  }
  return m;
}

nlohmann::ordered_json field_json(const FieldDescriptor& f) {
  nlohmann::ordered_json j;
  switch (f.kind()) {
    case FieldKind::Rationals:
      j["kind"] = "rationals";
      break;
    case FieldKind::PrimeField:
      j["kind"] = "prime";
      j["p"] = f.parameter();
      break;
    case FieldKind::Cyclotomic:
      j["kind"] = "cyclotomic";
      j["N"] = f.parameter();
      break;
  }
  return j;
}

FieldDescriptor field_from(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw Error(ErrorCode::ParseError, "field needs a \"kind\"");
  const std::string kind = j["kind"];
  auto param = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) throw Error(ErrorCode::ParseError, std::string("field needs an integer \"") + key + "\"");
    return j[key].get<std::int64_t>();
  };
  if (kind == "rationals") return FieldDescriptor::rationals();
  if (kind == "prime") return FieldDescriptor::prime(param("p"));
  if (kind == "cyclotomic") return FieldDescriptor::cyclotomic(param("N"));
  throw Error(ErrorCode::ParseError, "unknown field kind '" + kind + "'");
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Vector vector_from(const FieldDescriptor& f, const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) throw Error(ErrorCode::ParseError, std::string(what) + " must have " + std::to_string(n) + " entries");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from(f, x));
  return v;
}

std::size_t index_from(const json& j, std::size_t n) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() >= n) throw Error(ErrorCode::ParseError, "basis index out of range");
  return j.get<std::size_t>();
}

void write_lines(std::ostringstream& os, const char* key, const std::vector<json>& items, bool last) {
  os << "  \"" << key << "\": [";
  for (std::size_t i = 0; i < items.size(); ++i) os << (i ? ",\n    " : "\n    ") << items[i].dump();
  os << (items.empty() ? "]" : "\n  ]") << (last ? "\n" : ",\n");
}

}  // namespace

std::string algebra_to_json(const Algebra& a, const HopfAlgebra* h) {
  const std::size_t n = a.dim();
  std::ostringstream os;
  os << "{\n";
  os << "  \"field\": " << field_json(a.field()).dump() << ",\n";
  os << "  \"basis\": " << json(a.labels()).dump() << ",\n";
  os << "  \"unit\": " << vector_json(a.unit()).dump() << ",\n";
  std::vector<json> mult;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      json e = json::array();
      for (const auto& t : sparse_from_dense(dense_from_sparse(a.field(), n, a.product(i, j))))
        e.push_back(json::array({t.coef.to_string(), t.index}));
      mult.push_back(std::move(e));
    }
  write_lines(os, "mult", mult, h == nullptr);
  if (h) {
    std::vector<json> co;
    for (std::size_t i = 0; i < n; ++i) {
      json e = json::array();
      Vector d = h->apply_coproduct(a.basis_vector(i));
      for (std::size_t p = 0; p < n * n; ++p)
        if (!d[p].is_zero()) e.push_back(json::array({d[p].to_string(), p / n, p % n}));
      co.push_back(std::move(e));
    }
    write_lines(os, "coproduct", co, false);
    os << "  \"counit\": " << vector_json(h->counit()).dump() << ",\n";
    std::vector<json> rows;
    for (std::size_t r = 0; r < n; ++r) rows.push_back(vector_json(h->antipode().row(r)));
    write_lines(os, "antipode", rows, true);
  }
  os << "}\n";
  return os.str();
}

std::string hopf_to_json(const HopfAlgebra& h) { return algebra_to_json(h.algebra(), &h); }

Input input_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "top level must be an object");
  for (const char* key : {"field", "basis", "unit", "mult"})
    if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing key \"") + key + "\"");
  const FieldDescriptor f = field_from(j["field"]);
  if (!j["basis"].is_array() || j["basis"].empty()) throw Error(ErrorCode::ParseError, "basis must be a nonempty list");
  std::vector<std::string> labels;
  for (const auto& l : j["basis"]) {
    if (!l.is_string()) throw Error(ErrorCode::ParseError, "basis labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  const std::size_t n = labels.size();
  Vector unit = vector_from(f, j["unit"], n, "unit");
  const auto& mj = j["mult"];
  if (!mj.is_array() || mj.size() != n * n) throw Error(ErrorCode::ParseError, "mult must have dim^2 entries");
  std::vector<SparseVector> table(n * n);
  for (std::size_t p = 0; p < n * n; ++p) {
    if (!mj[p].is_array()) throw Error(ErrorCode::ParseError, "mult entries must be lists");
    Vector acc = zero_vector(f, n);
    for (const auto& t : mj[p]) {
      if (!t.is_array() || t.size() != 2) throw Error(ErrorCode::ParseError, "mult terms are [coef, k]");
      acc[index_from(t[1], n)] += scalar_from(f, t[0]);
    }
    table[p] = sparse_from_dense(acc);
  }
  Input in;
  in.name = "file";
  in.algebra = Algebra::create(f, labels, unit, std::move(table));
  const int present = int(j.contains("coproduct")) + int(j.contains("counit")) + int(j.contains("antipode"));
  if (present == 0) return in;
  if (present != 3) throw Error(ErrorCode::ParseError, "coproduct, counit and antipode must be given together");
  const auto& cj = j["coproduct"];
  if (!cj.is_array() || cj.size() != n) throw Error(ErrorCode::ParseError, "coproduct must have dim entries");
  Coproduct delta(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!cj[i].is_array()) throw Error(ErrorCode::ParseError, "coproduct entries must be lists");
    Vector acc = zero_vector(f, n * n);
    for (const auto& t : cj[i]) {
      if (!t.is_array() || t.size() != 3) throw Error(ErrorCode::ParseError, "coproduct terms are [coef, j, k]");
      acc[index_from(t[1], n) * n + index_from(t[2], n)] += scalar_from(f, t[0]);
    }
    for (std::size_t p = 0; p < n * n; ++p)
      if (!acc[p].is_zero()) delta[i].push_back({acc[p], p / n, p % n});
  }
  Vector counit = vector_from(f, j["counit"], n, "counit");
  const auto& sj = j["antipode"];
  if (!sj.is_array() || sj.size() != n) throw Error(ErrorCode::ParseError, "antipode must have dim rows");
  Matrix s(f, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    Vector row = vector_from(f, sj[r], n, "antipode row");
    for (std::size_t c = 0; c < n; ++c) s(r, c) = row[c];
  }
  in.hopf = HopfAlgebra::create(in.algebra, std::move(delta), std::move(counit), std::move(s));
  return in;
}

Input load_input(const std::string& source) {
  const std::string prefix = "builtin:";
  if (source.compare(0, prefix.size(), prefix) == 0) return builtin(source.substr(prefix.size()));
  std::ifstream in(source);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + source + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  Input out = input_from_json(ss.str());
  out.name = source;
  return out;
}

std::string module_to_json(const Module& m, bool compact) {
  json out;
  out["dim"] = m.dim();
  json acts = json::array();
  if (compact) {
    for (const auto& g : m.generator_actions()) acts.push_back(matrix_json(g));
    out["generator_action"] = std::move(acts);
  } else {
    for (std::size_t i = 0; i < m.algebra().dim(); ++i) acts.push_back(matrix_json(m.action(i)));
    out["action"] = std::move(acts);
  }
  return out.dump(compact ? -1 : 1) + "\n";
}

Module module_from_json(const Algebra& a, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_unsigned())
    throw Error(ErrorCode::ParseError, "module needs a nonnegative integer \"dim\"");
  const std::size_t dim = j["dim"].get<std::size_t>();
  const auto& f = a.field();
  if (j.contains("generator_action")) {
    const auto& g = j["generator_action"];
    if (!g.is_array() || g.size() != a.generators().size())
      throw Error(ErrorCode::ParseError, "one generator matrix per algebra generator is required");
    std::vector<Matrix> gens;
    for (const auto& x : g) gens.push_back(matrix_from(f, dim, x));
    return Module::create(a, dim, std::move(gens));
  }
  if (!j.contains("action") || !j["action"].is_array() || j["action"].size() != a.dim())
    throw Error(ErrorCode::ParseError, "module needs one action matrix per algebra basis element");
  std::vector<Matrix> acts;
  for (const auto& x : j["action"]) acts.push_back(matrix_from(f, dim, x));
  if (dim == 0) return Module::zero(a);
  return Module::from_basis_action(a, acts);
}

}  // namespace tatecoh
