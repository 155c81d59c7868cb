#include "tatecoh/stable.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "tatecoh/error.hpp"
#include "tatecoh/serialize.hpp"

namespace tatecoh {

std::string engine_name(Engine e) { return e == Engine::Minimal ? "minimal" : "free"; }

Engine parse_engine(const std::string& s) {
  if (s == "minimal") return Engine::Minimal;
  if (s == "free") return Engine::Free;
  throw Error(ErrorCode::InvalidArgument, "unknown engine '" + s + "'");
}

namespace {

// A e as a module: echelon basis, word coordinates of the basis and generator actions.
struct BlockData {
  std::vector<Vector> rows;
  std::vector<Vector> words;
  std::vector<Matrix> actions;
};

std::mutex block_mutex;
std::map<std::string, std::shared_ptr<const BlockData>> block_cache;

std::shared_ptr<const BlockData> block_data(const Algebra& a, const Vector& e) {
  std::string key = a.structure_fingerprint();
  for (const auto& x : e) key += "|" + x.to_string();
  {
    std::lock_guard<std::mutex> lock(block_mutex);
    auto it = block_cache.find(key);
    if (it != block_cache.end()) return it->second;
  }
  auto data = std::make_shared<BlockData>();
  EchelonBasis span(a.field(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) span.add(a.multiply(a.basis_vector(j), e));
  data->rows = span.rows();
  for (const auto& r : data->rows) data->words.push_back(a.word_coordinates(r));
  const std::size_t d = data->rows.size();
  for (auto g : a.generators()) {
    Matrix m(a.field(), d, d);
    for (std::size_t c = 0; c < d; ++c) m.set_column(c, span.coordinates(a.multiply(a.basis_vector(g), data->rows[c])));
    data->actions.push_back(std::move(m));
  }
  std::lock_guard<std::mutex> lock(block_mutex);
  block_cache.emplace(key, data);
  return data;
}

Vector combine(const FieldDescriptor& f, std::size_t dim, const std::vector<Vector>& vs, const Vector& coeffs) {
  Vector out = zero_vector(f, dim);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    const FieldElement neg = -coeffs[k];
    for (std::size_t i = 0; i < dim; ++i)
      if (!vs[k][i].is_zero()) out[i].sub_mul(neg, vs[k][i]);
  }
  return out;
}

// Fills projective, epi and kernel data once generators, idempotents and blocks are set.
void finish_cover(Cover& c) {
  const Module& m = c.module;
  const Algebra& a = m.algebra();
  const auto& f = m.field();
  std::vector<std::shared_ptr<const BlockData>> data;
  for (const auto& e : c.idempotents) data.push_back(block_data(a, e));
  c.offsets.assign(1, 0);
  c.blocks.clear();
  c.block_words.clear();
  for (const auto& d : data) {
    c.blocks.push_back(d->rows);
    c.block_words.push_back(d->words);
    c.offsets.push_back(c.offsets.back() + d->rows.size());
  }
  const std::size_t dp = c.offsets.back();
  const std::size_t ng = a.generators().size();
  std::vector<Matrix> gens(ng, Matrix(f, dp, dp));
  for (std::size_t t = 0; t < data.size(); ++t)
    for (std::size_t g = 0; g < ng; ++g) {
      const Matrix& x = data[t]->actions[g];
      for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t q = 0; q < x.cols(); ++q)
          if (!x(r, q).is_zero()) gens[g](c.offsets[t] + r, c.offsets[t] + q) = x(r, q);
    }
  c.projective = Module::create(a, dp, std::move(gens));

  c.epi = Matrix(f, m.dim(), dp);
  for (std::size_t t = 0; t < data.size(); ++t) {
    auto orb = m.orbit(c.generators[t]);
    for (std::size_t r = 0; r < data[t]->words.size(); ++r)
      c.epi.set_column(c.offsets[t] + r, combine(f, m.dim(), orb, data[t]->words[r]));
  }
  if (rank(c.epi) != m.dim()) throw Error(ErrorCode::ExactnessFailure, "cover map is not surjective");

  const auto red = rref(c.epi);
  std::vector<bool> pivot(dp, false);
  for (auto q : red.pivots) pivot[q] = true;
  c.kernel_columns.clear();
  for (std::size_t q = 0; q < dp; ++q)
    if (!pivot[q]) c.kernel_columns.push_back(q);
  const std::size_t dk = c.kernel_columns.size();
  std::vector<Vector> kvecs;
  for (auto q : c.kernel_columns) {
    Vector v = unit_vector(f, dp, q);
    for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = -red.reduced(i, q);
    kvecs.push_back(std::move(v));
  }
  c.inclusion = Matrix::from_columns(f, dp, kvecs);
  std::vector<Matrix> kgens(ng, Matrix(f, dk, dk));
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t j = 0; j < dk; ++j) {
      Vector img = c.projective.act_generator(g, kvecs[j]);
      for (std::size_t i = 0; i < dk; ++i) kgens[g](i, j) = img[c.kernel_columns[i]];
    }
  c.kernel = Module::create(a, dk, std::move(kgens));
}

Cover zero_cover(const Module& m, Engine engine) {
  Cover c;
  c.module = m;
  c.engine = engine;
  c.projective = Module::zero(m.algebra());
  c.epi = Matrix(m.field(), 0, 0);
  c.offsets = {0};
  c.kernel = Module::zero(m.algebra());
  c.inclusion = Matrix(m.field(), 0, 0);
  return c;
}

// Echelon basis of JM, or nullopt if the radical is unavailable.
std::optional<EchelonBasis> try_radical_submodule(const Module& m) {
  try {
    return radical_submodule(m);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::RadicalVerificationFailed) throw;
    return std::nullopt;
  }
}

Vector lift_from_top(const Module& m, const EchelonBasis& jm, const Vector& t) {
  Vector v = zero_vector(m.field(), m.dim());
  const auto freec = jm.free_columns();
  for (std::size_t i = 0; i < freec.size(); ++i) v[freec[i]] = t[i];
  return v;
}

}  // namespace

Cover free_cover(const Module& m) {
  if (m.dim() == 0) return zero_cover(m, Engine::Free);
  const auto& f = m.field();
  auto jm = try_radical_submodule(m);
  EchelonBasis none(f, m.dim());
  const EchelonBasis& rad = jm ? *jm : none;
  Module t = quotient(m, rad);
  // Greedy choice of few generators of the top, measured inside the top.
  std::mt19937_64 rng(0x5eed);
  std::vector<Vector> chosen;
  EchelonBasis span(f, t.dim());
  while (span.dim() < t.dim()) {
    std::vector<Vector> cands;
    for (std::size_t j = 0; j < t.dim(); ++j)
      if (!span.contains(unit_vector(f, t.dim(), j))) cands.push_back(unit_vector(f, t.dim(), j));
    for (int r = 0; r < 4; ++r) {
      Vector v(t.dim(), FieldElement(f));
      for (auto& x : v) x = FieldElement::random(f, rng, 3);
      cands.push_back(std::move(v));
    }
    std::size_t best = 0, gain = 0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      auto orb = t.orbit(cands[i]);
      EchelonBasis trial = span;
      for (const auto& v : orb) trial.add(v);
      if (trial.dim() - span.dim() > gain) {
        gain = trial.dim() - span.dim();
        best = i;
      }
      if (trial.dim() == t.dim()) break;
    }
    for (const auto& v : t.orbit(cands[best])) span.add(v);
    chosen.push_back(cands[best]);
  }
  Cover c;
  c.module = m;
  c.engine = Engine::Free;
  for (const auto& v : chosen) {
    c.generators.push_back(lift_from_top(m, rad, v));
    c.idempotents.push_back(m.algebra().unit());
  }
  finish_cover(c);
  return c;
}

Cover projective_cover(const Module& m) {
  const Algebra& a = m.algebra();
  const auto& idem = a.primitive_idempotents();
  const auto& rad = a.radical();
  if (rad.basis.empty()) {
    Cover c = zero_cover(m, Engine::Minimal);
    c.projective = m;
    c.epi = Matrix::identity(m.field(), m.dim());
    c.inclusion = Matrix(m.field(), m.dim(), 0);
    return c;
  }
  if (m.dim() == 0) return zero_cover(m, Engine::Minimal);
  auto jm = radical_submodule(m);
  Module t = quotient(m, jm);
  Cover c;
  c.module = m;
  c.engine = Engine::Minimal;
  for (const auto& e : idem) {
    Matrix r = t.action_of(e);
    for (const auto& col : image_basis(r).columns()) {
      c.generators.push_back(m.act(e, lift_from_top(m, jm, col)));
      c.idempotents.push_back(e);
    }
  }
  finish_cover(c);
  return c;
}

Cover make_cover(const Module& m, Engine engine) {
  if (engine == Engine::Free) return free_cover(m);
  try {
    return projective_cover(m);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotSplitCommutative && e.code() != ErrorCode::RadicalVerificationFailed) throw;
    Cover c = free_cover(m);
    return c;
  }
}

Vector kernel_coordinates(const Cover& c, const Vector& p) {
  Vector out;
  out.reserve(c.kernel_columns.size());
  for (auto q : c.kernel_columns) out.push_back(p[q]);
  return out;
}

Vector lift_to_cover(const Cover& c, const Vector& m) { return solve(c.epi, m); }

bool kernel_in_radical(const Cover& c) {
  if (c.kernel.dim() == 0) return true;
  auto jp = radical_submodule(c.projective);
  for (std::size_t j = 0; j < c.inclusion.cols(); ++j)
    if (!jp.contains(c.inclusion.column(j))) return false;
  return true;
}

Matrix omega_shift(const Cover& cx, const Cover& cy, const Matrix& f) {
  const auto& fd = cx.module.field();
  Matrix out(fd, cy.kernel.dim(), cx.kernel.dim());
  if (cx.kernel.dim() == 0 || cy.kernel.dim() == 0) return out;
  const std::size_t dpy = cy.projective.dim();
  Matrix h(fd, dpy, cx.projective.dim());
  for (std::size_t t = 0; t < cx.generators.size(); ++t) {
    Vector y = lift_to_cover(cy, f * cx.generators[t]);
    auto orb = cy.projective.orbit(y);
    for (std::size_t r = 0; r < cx.block_words[t].size(); ++r)
      h.set_column(cx.offsets[t] + r, combine(fd, dpy, orb, cx.block_words[t][r]));
  }
  Matrix hz = h * cx.inclusion;
  for (std::size_t j = 0; j < hz.cols(); ++j) out.set_column(j, kernel_coordinates(cy, hz.column(j)));
  return out;
}

Module syzygy(const Module& m, Engine engine) { return make_cover(m, engine).kernel; }

Module cosyzygy(const Module& m, Engine engine) {
  Module d = dual_module(m);
  Module k = syzygy(d, engine);
  if (engine == Engine::Free) k = strip_free_summands(k).module;
  return dual_module(k);
}

ProjectivityResult is_projective(const Module& m) {
  ProjectivityResult res;
  if (m.dim() == 0) {
    res.projective = true;
    res.section = Matrix(m.field(), 0, 0);
    return res;
  }
  Cover c = free_cover(m);
  auto hom = hom_space(m, c.projective);
  if (hom.empty()) return res;
  const std::size_t d = m.dim();
  std::vector<Vector> cols;
  for (const auto& h : hom) cols.push_back((c.epi * h.matrix).flatten());
  Matrix sys = Matrix::from_columns(m.field(), d * d, cols);
  auto x = try_solve(sys, Matrix::identity(m.field(), d).flatten());
  if (!x) return res;
  Matrix s(m.field(), c.projective.dim(), d);
  for (std::size_t i = 0; i < hom.size(); ++i)
    if (!(*x)[i].is_zero()) s = s + hom[i].matrix.scaled((*x)[i]);
  res.projective = true;
  res.section = std::move(s);
  return res;
}

// ---------------------------------------------------------------------------

namespace {

// PHom(M, N): maps m -> f(m) n with f in Hom(M, A) from the Frobenius form.
std::vector<Vector> projective_maps_frobenius(const Module& m, const Module& n, const Vector& lambda) {
  const Algebra& a = m.algebra();
  const auto& f = a.field();
  const std::size_t na = a.dim();
  const auto& wp = a.words();
  Matrix ginv = inverse(a.gram_matrix(lambda));
  Matrix cw = wp.inverse * ginv.transpose();  // column i: word coordinates of c_i
  const auto& pres = m.presentation();
  const std::size_t s = pres.generators.size();
  const std::size_t dm = m.dim(), dn = n.dim();
  std::vector<Matrix> y;  // y[t]: dm x na with columns c_i m_t
  for (std::size_t t = 0; t < s; ++t) y.push_back(pres.orbit.block(0, t * na, dm, na) * cw);
  std::vector<Vector> out;
  for (std::size_t v = 0; v < dn; ++v) {
    Matrix bv = Matrix::from_columns(f, dn, n.orbit(unit_vector(f, dn, v))) * wp.inverse;  // columns b_i n_v
    std::vector<Matrix> z;
    for (std::size_t t = 0; t < s; ++t) z.push_back(bv * y[t].transpose());
    for (std::size_t q = 0; q < dm; ++q) {
      Vector img(s * dn, FieldElement(f));
      for (std::size_t t = 0; t < s; ++t)
        for (std::size_t i = 0; i < dn; ++i) img[t * dn + i] = z[t](i, q);
      out.push_back(std::move(img));
    }
  }
  return out;
}

std::vector<Vector> projective_maps_cover(const Module& m, const Module& n) {
  Cover c = free_cover(n);
  const std::size_t s = m.presentation().generators.size();
  const std::size_t dp = c.projective.dim();
  std::vector<Vector> out;
  for (const auto& x : hom_images(m, c.projective)) {
    Vector img;
    for (std::size_t t = 0; t < s; ++t) {
      Vector v = c.epi * Vector(x.begin() + t * dp, x.begin() + (t + 1) * dp);
      img.insert(img.end(), v.begin(), v.end());
    }
    out.push_back(std::move(img));
  }
  return out;
}

}  // namespace

Matrix StableHom::representative(std::size_t i) const { return map_from_images(source, target, representatives.at(i)); }

Vector StableHom::classify(const Matrix& f) const {
  const auto& fd = source.field();
  if (representatives.empty()) return {};
  Vector v = images_of_map(source, f);
  std::vector<Vector> cols = projective_maps;
  cols.insert(cols.end(), representatives.begin(), representatives.end());
  auto x = try_solve(Matrix::from_columns(fd, v.size(), cols), v);
  if (!x) throw Error(ErrorCode::InvalidArgument, "map is not a module homomorphism");
  return Vector(x->begin() + projective_maps.size(), x->end());
}

bool StableHom::stably_zero(const Matrix& f) const {
  for (const auto& x : classify(f))
    if (!x.is_zero()) return false;
  return true;
}

StableHom stable_hom(const Module& m, const Module& n) {
  StableHom out;
  out.source = m;
  out.target = n;
  out.hom = hom_images(m, n);
  if (out.hom.empty()) return out;
  std::vector<Vector> cands;
  if (auto lambda = m.algebra().frobenius_form())
    cands = projective_maps_frobenius(m, n, *lambda);
  else
    cands = projective_maps_cover(m, n);
  const std::size_t amb = out.hom[0].size();
  EchelonBasis ph(m.field(), amb);
  for (const auto& c : cands) {
    if (ph.dim() == out.hom.size()) break;
    if (ph.add(c)) out.projective_maps.push_back(c);
  }
  EchelonBasis all = ph;
  for (const auto& h : out.hom)
    if (all.add(h)) out.representatives.push_back(h);
  if (out.projective_maps.size() + out.representatives.size() != out.hom.size())
    throw Error(ErrorCode::ValidationFailed, "projective maps do not lie in the Hom space");
  return out;
}

// ---------------------------------------------------------------------------

StripResult strip_free_summands(const Module& m, std::uint64_t seed) {
  StripResult res{m, 0, seed};
  const Algebra& a = m.algebra();
  const std::size_t na = a.dim();
  if (m.dim() < na || na == 0) return res;
  const auto& f = m.field();
  const auto soc = socle_submodule(Module::regular(a)).rows();
  // A m is free iff soc(A) m has dimension dim soc(A); the sum with earlier
  // summands is direct iff the socle images stay independent.
  EchelonBasis z(f, m.dim());
  std::vector<Vector> chosen;
  auto try_add = [&](const Vector& v) {
    if ((chosen.size() + 1) * na > m.dim()) return false;
    std::vector<Vector> imgs;
    EchelonBasis local(f, m.dim());
    for (const auto& s : soc) {
      Vector r = z.reduce(m.act(s, v));
      if (!local.add(r)) return false;
      imgs.push_back(std::move(r));
    }
    for (const auto& r : imgs) z.add(r);
    chosen.push_back(v);
    return true;
  };
  for (std::size_t j = 0; j < m.dim() && (chosen.size() + 1) * na <= m.dim(); ++j) try_add(unit_vector(f, m.dim(), j));
  std::mt19937_64 rng(seed);
  int failures = 0;
  while (failures < 6 && (chosen.size() + 1) * na <= m.dim()) {
    Vector v(m.dim(), FieldElement(f));
    for (auto& x : v) x = FieldElement::random(f, rng, 3);
    if (try_add(v))
      failures = 0;
    else
      ++failures;
  }
  if (chosen.empty()) return res;
  EchelonBasis s(f, m.dim());
  for (const auto& v : chosen)
    for (const auto& w : m.orbit(v)) s.add(w);
  if (s.dim() != chosen.size() * na) throw Error(ErrorCode::ValidationFailed, "free summands are not independent");
  res.module = quotient(m, s);
  res.removed = chosen.size();
  return res;
}

// ---------------------------------------------------------------------------

namespace {
std::atomic<std::uint64_t> g_seed{1};
}  // namespace

void set_default_seed(std::uint64_t seed) { g_seed = seed; }
std::uint64_t default_seed() { return g_seed; }

SyzygyTower::SyzygyTower(Module base, Engine engine, bool strip, std::uint64_t seed)
    : base_(std::move(base)), engine_(engine), strip_(strip && engine == Engine::Free), seed_(seed) {
  up_.push_back(base_);
  down_.push_back(base_);
}

std::string SyzygyTower::cache_path(int n) const {
  const char* dir = std::getenv("TATECOH_CACHE_DIR");
  if (!dir || !*dir || (!strip_ && engine_ == Engine::Free)) return {};
  std::ostringstream os;
  os << dir << "/" << base_.algebra().structure_fingerprint() << "-" << base_.fingerprint() << "-" << engine_name(engine_)
     << (strip_ ? "-s" + std::to_string(seed_) : "") << "-" << n << ".json";
  return os.str();
}

namespace {

std::optional<Module> load_cached(const std::string& path, const Algebra& a) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return module_from_json(a, ss.str());
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_cached(const std::string& path, const Module& m) {
  if (path.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << module_to_json(m, true);
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

Module SyzygyTower::build_up(int n) {
  if (auto c = load_cached(cache_path(n), base_.algebra())) return *c;
  Module k = make_cover(up_[n - 1], engine_).kernel;
  if (strip_) k = strip_free_summands(k, seed_).module;
  store_cached(cache_path(n), k);
  return k;
}

Module SyzygyTower::build_down(int n) {
  if (auto c = load_cached(cache_path(-n), base_.algebra())) return *c;
  Module d = dual_module(down_[n - 1]);
  Module k = make_cover(d, engine_).kernel;
  if (strip_) k = strip_free_summands(k, seed_).module;
  Module out = dual_module(k);
  store_cached(cache_path(-n), out);
  return out;
}

Module SyzygyTower::at(int n) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (n >= 0) {
    while (static_cast<int>(up_.size()) <= n) up_.push_back(build_up(static_cast<int>(up_.size())));
    return up_[n];
  }
  const int k = -n;
  while (static_cast<int>(down_.size()) <= k) down_.push_back(build_down(static_cast<int>(down_.size())));
  return down_[k];
}

Cover SyzygyTower::cover_at(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "covers are kept for nonnegative levels only");
  if (strip_) throw Error(ErrorCode::InvalidArgument, "covers are not kept for stripped towers");
  std::lock_guard<std::mutex> lock(mutex_);
  while (static_cast<int>(covers_.size()) <= n) {
    const std::size_t k = covers_.size();
    if (up_.size() <= k) up_.push_back(covers_.back().kernel);
    Cover c = make_cover(up_[k], engine_);
    if (up_.size() > k + 1)
      up_[k + 1] = c.kernel;
    else
      up_.push_back(c.kernel);
    covers_.push_back(std::move(c));
  }
  return covers_[n];
}

LevelSequence SyzygyTower::sequence_at(int n) {
  if (n >= 0) {
    Cover c = cover_at(n);
    return {c.projective, c.inclusion, c.epi};
  }
  if (strip_) throw Error(ErrorCode::InvalidArgument, "level sequences are not kept for stripped towers");
  std::lock_guard<std::mutex> lock(mutex_);
  const std::size_t want = static_cast<std::size_t>(-n);
  while (cocovers_.size() < want) {
    const std::size_t k = cocovers_.size();
    Cover c = make_cover(dual_module(down_[k]), engine_);
    Module next = dual_module(c.kernel);
    if (down_.size() > k + 1)
      down_[k + 1] = next;
    else
      down_.push_back(next);
    cocovers_.push_back({dual_module(c.projective), c.epi.transpose(), c.inclusion.transpose()});
  }
  return cocovers_[want - 1];
}

std::shared_ptr<SyzygyTower> syzygy_tower(const Module& m, Engine engine, bool strip) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<SyzygyTower>> towers;
  std::ostringstream key;
  strip = strip && engine == Engine::Free;
  const std::uint64_t seed = default_seed();
  key << m.algebra().id() << "/" << m.fingerprint() << "/" << engine_name(engine) << "/" << strip << "/" << seed;
  std::lock_guard<std::mutex> lock(mu);
  auto& t = towers[key.str()];
  if (!t) t = std::make_shared<SyzygyTower>(m, engine, strip, seed);
  return t;
}

}  // namespace tatecoh
