#pragma once

// Tate and Tate-Hochschild cohomology in all integer degrees.
//
// Degree n of Ext(M, N) is the stable Hom space from Omega^n M to N, with
// Omega^n = (Omega^{-1})^|n| for negative n. A second route splices a projective
// resolution of the trivial module with its Hopf dual and takes homology of the
// Hom complex.

#include <cstddef>
#include <string>
#include <vector>

#include "tatecoh/hopf.hpp"
#include "tatecoh/stable.hpp"

namespace tatecoh {

// A stable map Omega^degree(M) -> N.
struct TateClass {
  int degree = 0;
  Matrix representative;
  Engine engine = Engine::Minimal;
};

struct TateExt {
  int degree = 0;
  Module source;  // Omega^degree M
  Module target;
  StableHom stable;
  std::vector<TateClass> basis;
  std::size_t dim() const { return basis.size(); }
};

TateExt tate_ext(const Module& m, const Module& n, int degree, Engine engine);

struct CohomologyEntry {
  int degree = 0;
  std::size_t dim = 0;
  std::vector<TateClass> basis;
};

struct CohomologyTable {
  std::string label;
  int lo = 0;
  int hi = -1;
  Engine engine = Engine::Minimal;
  std::string route;  // overrides the engine name in output when set
  std::vector<CohomologyEntry> entries;  // one per degree, lo..hi

  std::vector<std::size_t> dims() const;
  std::size_t dim(int degree) const;
};

CohomologyTable ext_table(const Module& m, const Module& n, int lo, int hi, Engine engine, std::string label = {});
// Ext(k, M) over A.
CohomologyTable tate_cohomology(const HopfAlgebra& h, const Module& m, int lo, int hi, Engine engine);
// Ext(A, A) over the enveloping algebra.
CohomologyTable tate_hochschild(const HopfAlgebra& h, int lo, int hi, Engine engine);

std::string table_to_text(const CohomologyTable& t);
// {"label": ..., "engine": ..., "rows": [{"degree": n, "dim": d}, ...]}; with
// representatives each row also carries "representatives": [matrix, ...].
std::string table_to_json(const CohomologyTable& t, bool representatives = false);

// Classical Ext^n(M, N), n >= 0, from the minimal projective resolution of M.
std::size_t classical_ext(const Module& m, const Module& n, int degree);

// P_i for i in [-length, length], d_i: P_i -> P_{i-1} for i in [-length + 1, length].
// P_0 -> k -> P_{-1} is the splice, P_{-i} is the Hopf dual of P_{i-1}.
struct CompleteResolution {
  int length = 0;
  std::vector<Module> terms;         // terms[i + length] = P_i
  std::vector<Matrix> differentials; // differentials[i + length] = d_i, empty at i = -length
  Matrix augmentation;               // P_0 -> k
  Matrix coaugmentation;             // k -> P_{-1}
  Matrix splice;                     // d_0 = coaugmentation * augmentation

  const Module& term(int i) const;
  const Matrix& differential(int i) const;
  // Degrees where cohomology is defined.
  int safe_lo() const { return -length + 1; }
  int safe_hi() const { return length - 1; }
};

// Throws ExactnessFailure naming the degree when a certificate fails.
CompleteResolution spliced_complete_resolution(const HopfAlgebra& h, int length);
// Throws DegreeOutsideWindow outside [safe_lo, safe_hi].
std::size_t cohomology_from_resolution(const CompleteResolution& r, const Module& m, int degree);

// Products on Ext(k, k). The cup product of a in degree i and b in degree j is
// the stable composite a o Omega^i(b): Omega^{i+j} k -> Omega^i k -> k, with no
// sign attached. Shifts run through the minimal tower in both directions.
class CupProduct {
 public:
  explicit CupProduct(const HopfAlgebra& h);

  const Module& trivial() const { return trivial_; }
  // Basis of degree n with stable Hom data for classification.
  const TateExt& group(int degree);
  // Omega^steps(f) for a map f: Omega^a k -> Omega^b k (steps may be negative).
  Matrix shift(const Matrix& f, int a, int b, int steps);
  // Class of the product in the basis of degree i + j.
  Vector product(int i, const Vector& a, int j, const Vector& b);
  Matrix composite(const TateClass& a, const TateClass& b);
  Vector classify(int degree, const Matrix& f);
  Vector identity_class();

 private:
  Matrix shift_once(const Matrix& f, int a, int b);
  Matrix unshift_once(const Matrix& f, int a, int b);

  HopfAlgebra hopf_;
  Module trivial_;
  std::shared_ptr<SyzygyTower> tower_;
  std::vector<std::pair<int, TateExt>> groups_;
};

TateClass cup_product(CupProduct& ring, const TateClass& a, const TateClass& b);

struct RingEntry {
  int i = 0, a = 0, j = 0, b = 0;  // basis index a of degree i times basis index b of degree j
  Vector product;                  // coordinates in degree i + j
};

struct RingTable {
  int lo = 0, hi = -1;
  std::vector<std::size_t> dims;   // dims[n - lo]
  std::vector<RingEntry> entries;
  std::size_t triples_checked = 0;
  bool associative = true;
  bool unit_ok = true;
};

RingTable ring_table(const HopfAlgebra& h, int lo, int hi);

struct CheckRow {
  int degree = 0;
  std::string what;
  long long lhs = 0;
  long long rhs = 0;
  bool ok = true;
};

struct CheckReport {
  std::string name;
  bool skipped = false;
  std::string notice;
  std::vector<CheckRow> rows;

  bool passed() const;
  std::vector<CheckRow> mismatches() const;
};

// Ext(k, M) and HH against classical Ext in degrees 1..upto.
CheckReport check_positive_agreement(const HopfAlgebra& h, const Module& m, int upto);
// dim HH^n(A, A) = dim Ext^n(k, A^ad).
CheckReport check_theorem_iso(const HopfAlgebra& h, int lo, int hi, Engine engine = Engine::Minimal);
// dim Ext^n(k, A^ad) = dim Ext^n(k, k) + dim Ext^n(k, Ker eps) with the splitting certified.
CheckReport check_summand_decomposition(const HopfAlgebra& h, int lo, int hi, Engine engine = Engine::Minimal);
// dim HH^n = dim HH^{-(n+1)}; skipped when nu^2 != id.
CheckReport check_nu_symmetry(const HopfAlgebra& h, int lo, int hi, Engine engine = Engine::Minimal);

std::string report_to_text(const CheckReport& r);
std::string report_to_json(const CheckReport& r);

}  // namespace tatecoh
