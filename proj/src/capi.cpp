#include "tatecoh/tatecoh.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "tatecoh/error.hpp"
#include "tatecoh/examples.hpp"
#include "tatecoh/serialize.hpp"
#include "tatecoh/tate.hpp"

struct tc_input {
  tatecoh::Input value;
};
struct tc_module {
  tatecoh::Module value;
};
struct tc_table {
  tatecoh::CohomologyTable value;
};

namespace {

using namespace tatecoh;
using ojson = nlohmann::ordered_json;

thread_local std::string g_last_error;

class NotHopf : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class F>
tc_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return TC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<tc_status>(static_cast<int>(e.code()));
  } catch (const NotHopf& e) {
    g_last_error = e.what();
    return TC_ERR_NOT_HOPF;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TC_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

const HopfAlgebra& hopf_of(const tc_input* in) {
  require(in, "input");
  if (!in->value.hopf) throw NotHopf("'" + in->value.name + "' has no Hopf structure");
  return *in->value.hopf;
}

Engine engine_of(tc_engine e) { return e == TC_ENGINE_FREE ? Engine::Free : Engine::Minimal; }

std::string function_value(const Algebra& a, const Vector& f, std::size_t i) {
  (void)a;
  return f[i].to_string();
}

std::string info_text(const Input& in) {
  const HopfAlgebra& h = *in.hopf;
  const Algebra& a = h.algebra();
  std::ostringstream os;
  os << "name: " << in.name << "\n";
  os << "field: " << a.field().name() << "\n";
  os << "dim: " << a.dim() << "\n";
  os << "basis:";
  for (const auto& l : a.labels()) os << " " << l;
  os << "\n";
  auto order = antipode_order(h);
  os << "antipode order: " << (order ? std::to_string(*order) : "none found") << "\n";
  for (const auto& v : integrals(h, Side::Left, Where::Algebra)) os << "left integral: " << format_element(a, v) << "\n";
  for (const auto& v : integrals(h, Side::Right, Where::Algebra)) os << "right integral: " << format_element(a, v) << "\n";
  Vector alpha = modular_function(h);
  for (std::size_t i = 0; i < a.dim(); ++i) os << "alpha(" << a.labels()[i] << ") = " << function_value(a, alpha, i) << "\n";
  Nakayama nu = nakayama_via_modular(h);
  for (std::size_t i = 0; i < a.dim(); ++i)
    os << "nu(" << a.labels()[i] << ") = " << format_element(a, nu.matrix.column(i)) << "\n";
  os << "nu order: " << nu.order << "\n";
  os << "nu^2 = 1: " << (nakayama_square(h).identity ? "yes" : "no") << "\n";
  return os.str();
}

std::string info_json(const Input& in) {
  const HopfAlgebra& h = *in.hopf;
  const Algebra& a = h.algebra();
  ojson j;
  j["name"] = in.name;
  j["field"] = a.field().name();
  j["dim"] = a.dim();
  j["basis"] = a.labels();
  auto order = antipode_order(h);
  j["antipode_order"] = order ? ojson(*order) : ojson(nullptr);
  auto elems = [&](const std::vector<Vector>& vs) {
    ojson out = ojson::array();
    for (const auto& v : vs) out.push_back(format_element(a, v));
    return out;
  };
  j["left_integrals"] = elems(integrals(h, Side::Left, Where::Algebra));
  j["right_integrals"] = elems(integrals(h, Side::Right, Where::Algebra));
  Vector alpha = modular_function(h);
  Nakayama nu = nakayama_via_modular(h);
  ojson al, nj;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    al[a.labels()[i]] = alpha[i].to_string();
    nj[a.labels()[i]] = format_element(a, nu.matrix.column(i));
  }
  j["alpha"] = std::move(al);
  j["nu"] = std::move(nj);
  j["nu_order"] = nu.order;
  j["nu_squared_identity"] = nakayama_square(h).identity;
  return j.dump(1) + "\n";
}

std::string vec_string(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + "]";
}

}  // namespace

extern "C" {

const char* tc_version(void) { return "0.1.0"; }

const char* tc_last_error_message(void) { return g_last_error.c_str(); }

const char* tc_status_name(tc_status status) {
  switch (status) {
    case TC_OK:
      return "ok";
    case TC_ERR_NOT_HOPF:
      return "NotHopf";
    case TC_ERR_INTERNAL:
      return "Internal";
    default:
      if (status >= TC_ERR_MIXED_FIELDS && status <= TC_ERR_INVALID_ARGUMENT)
        return error_code_name(static_cast<ErrorCode>(static_cast<int>(status)));
      return "Unknown";
  }
}

void tc_string_free(char* s) { delete[] s; }

void tc_set_seed(uint64_t seed) { set_default_seed(seed); }

tc_status tc_input_load(const char* source, tc_input** out) {
  return guard([&] {
    require(source, "source");
    require(out, "out");
    *out = new tc_input{load_input(source)};
  });
}

tc_status tc_input_from_json(const char* text, tc_input** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new tc_input{input_from_json(text)};
  });
}

void tc_input_free(tc_input* in) { delete in; }

tc_status tc_builtin_names(char** out) {
  return guard([&] {
    require(out, "out");
    std::string s;
    for (const auto& n : builtin_names()) s += n + "\n";
    *out = dup(s);
  });
}

size_t tc_input_dim(const tc_input* in) { return in ? in->value.algebra.dim() : 0; }

int tc_input_is_hopf(const tc_input* in) { return in && in->value.hopf ? 1 : 0; }

tc_status tc_input_validate(const tc_input* in, int* valid, char** report) {
  return guard([&] {
    require(in, "input");
    require(valid, "valid");
    ValidationReport r = in->value.algebra.validate();
    if (r.ok() && in->value.hopf) r = validate_hopf(*in->value.hopf);
    *valid = r.ok() ? 1 : 0;
    if (report) {
      std::string s;
      for (const auto& v : r.violations) s += v + "\n";
      if (r.ok()) s = in->value.hopf ? "valid Hopf algebra\n" : "valid algebra\n";
      *report = dup(s);
    }
  });
}

tc_status tc_input_info(const tc_input* in, tc_format format, char** out) {
  return guard([&] {
    hopf_of(in);
    require(out, "out");
    *out = dup(format == TC_FORMAT_JSON ? info_json(in->value) : info_text(in->value));
  });
}

tc_status tc_input_export(const tc_input* in, char** out) {
  return guard([&] {
    require(in, "input");
    require(out, "out");
    const HopfAlgebra* h = in->value.hopf ? &*in->value.hopf : nullptr;
    *out = dup(algebra_to_json(in->value.algebra, h));
  });
}

tc_status tc_module_trivial(const tc_input* in, tc_module** out) {
  return guard([&] { *out = new tc_module{trivial_module(hopf_of(in))}; });
}

tc_status tc_module_adjoint(const tc_input* in, tc_module** out) {
  return guard([&] { *out = new tc_module{adjoint_module(hopf_of(in))}; });
}

tc_status tc_module_counit_kernel(const tc_input* in, tc_module** out) {
  return guard([&] { *out = new tc_module{counit_kernel_module(hopf_of(in))}; });
}

tc_status tc_module_regular(const tc_input* in, tc_module** out) {
  return guard([&] {
    require(in, "input");
    *out = new tc_module{Module::regular(in->value.algebra)};
  });
}

tc_status tc_module_from_json(const tc_input* in, const char* text, tc_module** out) {
  return guard([&] {
    require(in, "input");
    require(text, "text");
    Module m = module_from_json(in->value.algebra, text);
    ValidationReport r = m.validate();
    if (!r.ok()) throw Error(ErrorCode::ValidationFailed, "module: " + r.violations.front());
    *out = new tc_module{std::move(m)};
  });
}

tc_status tc_module_load(const tc_input* in, const char* path, tc_module** out) {
  require(path, "path");
  std::ifstream f(path);
  if (!f) {
    g_last_error = std::string("ParseError: cannot open '") + path + "'";
    return TC_ERR_PARSE;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  return tc_module_from_json(in, ss.str().c_str(), out);
}

size_t tc_module_dim(const tc_module* m) { return m ? m->value.dim() : 0; }

void tc_module_free(tc_module* m) { delete m; }

tc_status tc_tate_cohomology(const tc_input* in, const tc_module* m, int lo, int hi, tc_engine engine, tc_table** out) {
  return guard([&] {
    require(m, "module");
    *out = new tc_table{tate_cohomology(hopf_of(in), m->value, lo, hi, engine_of(engine))};
  });
}

tc_status tc_tate_hochschild(const tc_input* in, int lo, int hi, tc_engine engine, tc_table** out) {
  return guard([&] { *out = new tc_table{tate_hochschild(hopf_of(in), lo, hi, engine_of(engine))}; });
}

tc_status tc_tate_spliced(const tc_input* in, int lo, int hi, tc_table** out) {
  return guard([&] {
    const HopfAlgebra& h = hopf_of(in);
    if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty degree range");
    const int length = std::max(std::abs(lo), std::abs(hi)) + 1;
    CompleteResolution r = spliced_complete_resolution(h, length);
    const Module k = trivial_module(h);
    CohomologyTable t;
    t.label = "H^n(A, k)";
    t.route = "spliced";
    t.lo = lo;
    t.hi = hi;
    for (int n = lo; n <= hi; ++n) t.entries.push_back({n, cohomology_from_resolution(r, k, n), {}});
    *out = new tc_table{std::move(t)};
  });
}

tc_status tc_table_range(const tc_table* t, int* lo, int* hi) {
  return guard([&] {
    require(t, "table");
    if (lo) *lo = t->value.lo;
    if (hi) *hi = t->value.hi;
  });
}

tc_status tc_table_dim(const tc_table* t, int degree, size_t* dim) {
  return guard([&] {
    require(t, "table");
    require(dim, "dim");
    *dim = t->value.dim(degree);
  });
}

tc_status tc_table_render(const tc_table* t, tc_format format, int representatives, char** out) {
  return guard([&] {
    require(t, "table");
    *out = dup(format == TC_FORMAT_JSON ? table_to_json(t->value, representatives != 0) : table_to_text(t->value));
  });
}

void tc_table_free(tc_table* t) { delete t; }

tc_status tc_check(const tc_input* in, const char* which, int lo, int hi, int upto, tc_format format,
                   tc_check_status* result, char** report) {
  return guard([&] {
    const HopfAlgebra& h = hopf_of(in);
    require(which, "which");
    const std::string w = which;
    CheckReport r;
    if (w == "positive")
      r = check_positive_agreement(h, trivial_module(h), upto);
    else if (w == "theorem")
      r = check_theorem_iso(h, lo, hi);
    else if (w == "summand")
      r = check_summand_decomposition(h, lo, hi);
    else if (w == "symmetry")
      r = check_nu_symmetry(h, lo, hi);
    else
      throw Error(ErrorCode::InvalidArgument, "unknown check '" + w + "'");
    if (result) *result = r.skipped ? TC_CHECK_SKIP : (r.passed() ? TC_CHECK_PASS : TC_CHECK_FAIL);
    if (report) *report = dup(format == TC_FORMAT_JSON ? report_to_json(r) : report_to_text(r));
  });
}

tc_status tc_cup(const tc_input* in, int i, int j, tc_format format, char** out) {
  return guard([&] {
    const HopfAlgebra& h = hopf_of(in);
    require(out, "out");
    const int lo = std::min({0, i, j, i + j}), hi = std::max({0, i, j, i + j});
    RingTable t = ring_table(h, lo, hi);
    auto dim = [&](int d) { return t.dims[d - lo]; };
    std::vector<const RingEntry*> rows;
    for (const auto& e : t.entries)
      if (e.i == i && e.j == j) rows.push_back(&e);
    if (format == TC_FORMAT_JSON) {
      ojson js;
      js["i"] = i;
      js["j"] = j;
      js["dims"] = {{"i", dim(i)}, {"j", dim(j)}, {"sum", dim(i + j)}};
      ojson prods = ojson::array();
      for (const auto* e : rows) {
        ojson p;
        p["a"] = e->a;
        p["b"] = e->b;
        ojson c = ojson::array();
        for (const auto& x : e->product) c.push_back(x.to_string());
        p["product"] = std::move(c);
        prods.push_back(std::move(p));
      }
      js["products"] = std::move(prods);
      js["unit"] = t.unit_ok;
      js["associative"] = t.associative;
      js["triples"] = t.triples_checked;
      *out = dup(js.dump(1) + "\n");
      return;
    }
    std::ostringstream os;
    os << "H^" << i << " x H^" << j << " -> H^" << i + j << "  (dims " << dim(i) << ", " << dim(j) << ", " << dim(i + j)
       << ")\n";
    for (const auto* e : rows) os << "e" << e->a << " * e" << e->b << " = " << vec_string(e->product) << "\n";
    os << "unit: " << (t.unit_ok ? "ok" : "FAIL") << "\n";
    os << "associativity: " << (t.associative ? "ok" : "FAIL") << " (" << t.triples_checked << " triples in [" << lo
       << ", " << hi << "])\n";
    *out = dup(os.str());
  });
}

}  // extern "C"
