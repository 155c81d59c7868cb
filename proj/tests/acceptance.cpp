// One line per acceptance criterion: "criterion N: PASS|FAIL  detail  [seconds]".

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "helpers.hpp"
#include "tatecoh/error.hpp"
#include "tatecoh/examples.hpp"
#include "tatecoh/tate.hpp"

using namespace tatecoh;
using testing::same_span;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string row(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<std::size_t> table(const HopfAlgebra& h, const Module& m, int lo, int hi, Engine e) {
  return tate_cohomology(h, m, lo, hi, e).dims();
}

std::vector<std::size_t> hh(const HopfAlgebra& h, int lo, int hi, Engine e) { return tate_hochschild(h, lo, hi, e).dims(); }

Vector basis(const Algebra& a, std::size_t i) { return a.basis_vector(i); }

Vector scaled(Vector v, const FieldElement& c) {
  for (auto& x : v) x *= c;
  return v;
}

Vector add(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// Index of a basis label.
std::size_t at(const Algebra& a, const std::string& label) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.labels()[i] == label) return i;
  throw Error(ErrorCode::InvalidArgument, "no basis element " + label);
}

void criterion1(Outcome& o) {
  HopfAlgebra h = sweedler(FieldDescriptor::rationals());
  const Algebra& a = h.algebra();
  const auto& f = h.field();
  const FieldElement one = FieldElement::one(f);
  const std::size_t g = at(a, "g"), x = at(a, "x"), gx = at(a, "gx");
  o.expect(same_span(integrals(h, Side::Left, Where::Algebra), {add(basis(a, x), basis(a, gx))}), "left integral x+gx");
  o.expect(same_span(integrals(h, Side::Right, Where::Algebra), {add(basis(a, x), scaled(basis(a, gx), -one))}),
           "right integral x-gx");
  o.expect(modular_function(h)[g] == -one, "alpha(g) = -1");
  for (const Nakayama& nu : {nakayama_via_modular(h), nakayama_via_frobenius(h)}) {
    o.expect(nu.matrix.column(g) == scaled(basis(a, g), -one), "nu(g) = -g");
    o.expect(nu.matrix.column(x) == scaled(basis(a, x), -one), "nu(x) = -x");
    o.expect((nu.matrix * nu.matrix).is_identity(), "nu^2 = id");
  }
  o.expect(antipode_order(h) == 4, "S order 4");
  o.expect(nakayama_square(h).identity, "nakayama_square reports id");
}

void criterion2(Outcome& o) {
  for (auto f : {FieldDescriptor::cyclotomic(3), FieldDescriptor::prime(7)}) {
    HopfAlgebra h = taft(3, f);
    const Algebra& a = h.algebra();
    const std::size_t g = at(a, "g"), x = at(a, "x"), gx = at(a, "gx");
    // omega from the relation x g = omega g x
    const Vector xg = a.multiply(basis(a, x), basis(a, g));
    const FieldElement w = xg[gx];
    o.expect(xg == scaled(basis(a, gx), w), f.name() + ": x g is a multiple of g x");
    o.expect(w * w * w == FieldElement::one(f) && w != FieldElement::one(f), f.name() + ": omega primitive cube root");
    Vector sum = zero_vector(f, a.dim());
    const Vector x2 = a.power(basis(a, x), 2);
    for (std::size_t j = 0; j < 3; ++j) sum = add(sum, a.multiply(x2, a.power(basis(a, g), j)));
    o.expect(same_span(integrals(h, Side::Right, Where::Algebra), {sum}), f.name() + ": right integral sum x^2 g^j");
    o.expect(modular_function(h)[g] == w, f.name() + ": alpha(g) = omega");
    for (const Nakayama& nu : {nakayama_via_modular(h), nakayama_via_frobenius(h)}) {
      o.expect(nu.matrix.column(g) == scaled(basis(a, g), w), f.name() + ": nu(g) = omega g");
      o.expect(nu.matrix.column(x) == scaled(basis(a, x), w), f.name() + ": nu(x) = omega x");
      o.expect(!(nu.matrix * nu.matrix).is_identity(), f.name() + ": nu^2 != id");
    }
    o.expect(!nakayama_square(h).identity, f.name() + ": nakayama_square reports not id");
    o.note(f.name() + " omega = " + w.to_string());
  }
}

void criterion3(Outcome& o) {
  HopfAlgebra h = sweedler(FieldDescriptor::rationals());
  std::vector<std::size_t> expected;
  for (int n = -6; n <= 6; ++n) {
    const bool one = (n < -1 && n % 2 != 0) || (n >= 0 && n % 2 == 0) || n == -1 || n == 0;
    expected.push_back(one ? 1 : 0);
  }
  for (Engine e : {Engine::Minimal, Engine::Free}) {
    auto got = table(h, trivial_module(h), -6, 6, e);
    o.expect(got == expected, engine_name(e) + " table " + row(got) + " vs expected " + row(expected));
  }
}

void criterion4(Outcome& o) {
  HopfAlgebra h2 = taft(2, FieldDescriptor::rationals());
  auto d2 = hh(h2, -4, 4, Engine::Minimal);
  o.expect(d2 == std::vector<std::size_t>(9, 1), "N=2: " + row(d2));
  HopfAlgebra h3 = taft(3, FieldDescriptor::cyclotomic(3));
  o.expect(h3.enveloping().dim() == 81, "N=3 enveloping dimension 81");
  auto d3 = hh(h3, -3, 3, Engine::Minimal);
  o.expect(d3 == std::vector<std::size_t>(7, 1), "N=3: " + row(d3));
  o.note("N=2 " + row(d2) + "; N=3 " + row(d3));
}

void criterion5(Outcome& o) {
  for (const char* name : {"sweedler", "kz2_f2"}) {
    HopfAlgebra h = builtin(name).hopf.value();
    const int lo = -4, hi = 4;
    auto d = hh(h, lo, hi, Engine::Minimal);
    for (int n = lo; n <= hi; ++n) {
      const int m = -(n + 1);
      if (m < lo || m > hi) continue;
      o.expect(d[n - lo] == d[m - lo], std::string(name) + " HH^" + std::to_string(n) + " vs HH^" + std::to_string(m));
    }
    o.expect(check_nu_symmetry(h, lo, hi).passed(), std::string(name) + " symmetry check");
    o.note(std::string(name) + " HH " + row(d));
  }
}

void criterion6(Outcome& o) {
  struct Case {
    HopfAlgebra h;
    int lo, hi;
    const char* name;
  };
  for (const Case& c : {Case{sweedler(FieldDescriptor::rationals()), -4, 4, "H4"},
                        Case{taft(3, FieldDescriptor::cyclotomic(3)), -2, 2, "Taft(3)"}}) {
    auto lhs = hh(c.h, c.lo, c.hi, Engine::Minimal);
    auto rhs = table(c.h, adjoint_module(c.h), c.lo, c.hi, Engine::Minimal);
    o.expect(lhs == rhs, std::string(c.name) + " HH " + row(lhs) + " vs H(A^ad) " + row(rhs));
    o.expect(check_theorem_iso(c.h, c.lo, c.hi).passed(), std::string(c.name) + " theorem check");
  }
}

void criterion7(Outcome& o) {
  struct Case {
    HopfAlgebra h;
    int lo, hi;
    const char* name;
  };
  for (const Case& c : {Case{sweedler(FieldDescriptor::rationals()), -4, 4, "H4"},
                        Case{taft(3, FieldDescriptor::cyclotomic(3)), -2, 2, "Taft(3)"}}) {
    Module k = trivial_module(c.h), ker = counit_kernel_module(c.h), ad = adjoint_module(c.h);
    Matrix s = adjoint_splitting(c.h);
    o.expect(is_homomorphism(direct_sum(k, ker), ad, s) && rank(s) == ad.dim(),
             std::string(c.name) + " k + Ker eps -> A^ad is an isomorphism");
    auto dad = table(c.h, ad, c.lo, c.hi, Engine::Minimal);
    auto dk = table(c.h, k, c.lo, c.hi, Engine::Minimal);
    auto dker = ext_table(k, ker, c.lo, c.hi, Engine::Minimal).dims();
    for (std::size_t i = 0; i < dad.size(); ++i)
      o.expect(dad[i] == dk[i] + dker[i], std::string(c.name) + " degree " + std::to_string(c.lo + int(i)));
    o.expect(check_summand_decomposition(c.h, c.lo, c.hi).passed(), std::string(c.name) + " summand check");
  }
}

void criterion8(Outcome& o) {
  std::size_t compared = 0;
  for (const auto& name : builtin_names()) {
    Input in = builtin(name);
    if (!in.hopf) continue;
    const HopfAlgebra& h = *in.hopf;
    Module k = trivial_module(h);
    Module a = algebra_as_enveloping_module(h);
    for (Engine e : {Engine::Minimal, Engine::Free}) {
      auto dk = table(h, k, 1, 4, e);
      auto dad = table(h, adjoint_module(h), 1, 4, e);
      auto dhh = hh(h, 1, 4, e);
      for (int n = 1; n <= 4; ++n) {
        const std::string tag = name + " " + engine_name(e) + " n=" + std::to_string(n);
        o.expect(dk[n - 1] == classical_ext(k, k, n), tag + " Ext_A(k, k)");
        o.expect(dad[n - 1] == classical_ext(k, adjoint_module(h), n), tag + " Ext_A(k, A^ad)");
        o.expect(dhh[n - 1] == classical_ext(a, a, n), tag + " Ext_A^e(A, A)");
        compared += 3;
      }
    }
  }
  o.note(std::to_string(compared) + " comparisons");
}

void criterion9(Outcome& o) {
  auto agree = [&](const std::string& tag, const std::function<std::vector<std::size_t>(Engine)>& f) {
    auto m = f(Engine::Minimal), fr = f(Engine::Free);
    o.expect(m == fr, tag + ": minimal " + row(m) + " free " + row(fr));
    return m;
  };
  HopfAlgebra h4 = sweedler(FieldDescriptor::rationals());
  HopfAlgebra t3 = taft(3, FieldDescriptor::cyclotomic(3));
  agree("H4 trivial", [&](Engine e) { return table(h4, trivial_module(h4), -6, 6, e); });
  agree("H4 adjoint", [&](Engine e) { return table(h4, adjoint_module(h4), -4, 4, e); });
  agree("H4 HH", [&](Engine e) { return hh(h4, -4, 4, e); });
  agree("Taft(3) HH", [&](Engine e) { return hh(t3, -3, 3, e); });
  agree("Taft(3) adjoint", [&](Engine e) { return table(t3, adjoint_module(t3), -2, 2, e); });
  agree("Taft(3) counit kernel", [&](Engine e) { return ext_table(trivial_module(t3), counit_kernel_module(t3), -2, 2, e).dims(); });

  for (const auto& name : builtin_names()) {
    Input in = builtin(name);
    if (!in.hopf) continue;
    const HopfAlgebra& h = *in.hopf;
    CompleteResolution r = spliced_complete_resolution(h, 5);
    auto stable = agree(name + " trivial", [&](Engine e) { return table(h, trivial_module(h), r.safe_lo(), r.safe_hi(), e); });
    std::vector<std::size_t> spliced;
    for (int n = r.safe_lo(); n <= r.safe_hi(); ++n) spliced.push_back(cohomology_from_resolution(r, trivial_module(h), n));
    o.expect(stable == spliced, name + ": stable " + row(stable) + " spliced " + row(spliced));
  }

  for (const char* name : {"kz3_q", "kz3_cyclo"}) {
    HopfAlgebra h = builtin(name).hopf.value();
    const std::vector<std::size_t> zero(9, 0);
    agree(std::string(name) + " trivial", [&](Engine e) {
      auto d = table(h, trivial_module(h), -4, 4, e);
      o.expect(d == zero, std::string(name) + " trivial table is zero");
      return d;
    });
    agree(std::string(name) + " adjoint", [&](Engine e) {
      auto d = table(h, adjoint_module(h), -4, 4, e);
      o.expect(d == zero, std::string(name) + " adjoint table is zero");
      return d;
    });
    agree(std::string(name) + " HH", [&](Engine e) {
      auto d = hh(h, -4, 4, e);
      o.expect(d == zero, std::string(name) + " HH table is zero");
      return d;
    });
  }

  for (const char* name : {"kz2_f2", "dual_f2"}) {
    HopfAlgebra h = builtin(name).hopf.value();
    const std::vector<std::size_t> ones(13, 1);
    agree(std::string(name) + " trivial", [&](Engine e) {
      auto d = table(h, trivial_module(h), -6, 6, e);
      o.expect(d == ones, std::string(name) + " trivial table is all ones");
      return d;
    });
    CompleteResolution r = spliced_complete_resolution(h, 7);
    for (int n = -6; n <= 6; ++n)
      o.expect(cohomology_from_resolution(r, trivial_module(h), n) == 1, std::string(name) + " spliced all ones");
    auto dhh = agree(std::string(name) + " HH", [&](Engine e) { return hh(h, -4, 4, e); });
    o.note(std::string(name) + " HH " + row(dhh));
  }
}

void criterion10(Outcome& o) {
  for (const char* name : {"sweedler", "kz2_f2"}) {
    HopfAlgebra h = builtin(name).hopf.value();
    const auto& f = h.field();
    RingTable t = ring_table(h, -4, 4);
    o.expect(t.unit_ok, std::string(name) + " unit");
    o.expect(t.associative, std::string(name) + " associativity");
    o.note(std::string(name) + " " + std::to_string(t.triples_checked) + " triples");
    CupProduct ring(h);
    o.expect(ring.identity_class() == Vector{FieldElement::one(f)}, std::string(name) + " identity class");
    // bilinearity: scalars and sums in each factor
    std::mt19937_64 rng(7);
    for (int i = -2; i <= 2; ++i)
      for (int j = -2; j <= 2; ++j) {
        const std::size_t di = ring.group(i).dim(), dj = ring.group(j).dim();
        if (!di || !dj || !ring.group(i + j).dim()) continue;
        auto rnd = [&](std::size_t n) {
          Vector v;
          for (std::size_t k = 0; k < n; ++k) v.push_back(FieldElement::random(f, rng, 5));
          return v;
        };
        Vector a1 = rnd(di), a2 = rnd(di), b = rnd(dj);
        FieldElement c = FieldElement::random(f, rng, 5);
        Vector lhs = ring.product(i, add(scaled(a1, c), a2), j, b);
        Vector rhs = add(scaled(ring.product(i, a1, j, b), c), ring.product(i, a2, j, b));
        o.expect(lhs == rhs, std::string(name) + " linear in the left factor");
        lhs = ring.product(j, b, i, add(scaled(a1, c), a2));
        rhs = add(scaled(ring.product(j, b, i, a1), c), ring.product(j, b, i, a2));
        o.expect(lhs == rhs, std::string(name) + " linear in the right factor");
      }
  }
  HopfAlgebra h = sweedler(FieldDescriptor::rationals());
  CupProduct ring(h);
  Vector z2 = ring.product(2, {FieldElement::one(h.field())}, 2, {FieldElement::one(h.field())});
  o.expect(z2.size() == 1 && !z2[0].is_zero(), "degree-2 generator squares to a nonzero class");
  auto z = testing::cocycles(h, 2);
  o.expect(z.size() == 1, "Ext^2(k, k) is one dimensional");
  if (z.size() == 1) o.expect(!testing::yoneda(h, 2, z[0], 2, z[0]).is_zero(), "Yoneda square in degree 4 is nonzero");
}

struct Criterion {
  int number;
  double limit;  // seconds, 0 for none
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  app.add_option("--criterion", only, "Run only these criteria")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all = {
      {1, 1.0, criterion1},  {2, 5.0, criterion2},   {3, 30.0, criterion3}, {4, 600.0, criterion4},
      {5, 0.0, criterion5},  {6, 0.0, criterion6},   {7, 0.0, criterion7},  {8, 0.0, criterion8},
      {9, 0.0, criterion9},  {10, 0.0, criterion10},
  };
  bool ok = true;
  for (const auto& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.number) == only.end()) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    if (c.limit > 0 && secs >= c.limit) o.expect(false, "runtime " + std::string(timing) + " over the limit");
    std::cout << "criterion " << c.number << ": " << (o.pass ? "PASS" : "FAIL") << "  [" << timing << "]";
    for (const auto& n : o.notes) std::cout << "  " << n << ";";
    std::cout << "\n";
    ok = ok && o.pass;
  }
  return ok ? 0 : 1;
}
