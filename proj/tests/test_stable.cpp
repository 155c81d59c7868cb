#include "doctest.h"
#include "helpers.hpp"
#include "tatecoh/error.hpp"
#include "tatecoh/examples.hpp"
#include "tatecoh/stable.hpp"

using namespace tatecoh;
using testing::brute_hom_dim;

namespace {

HopfAlgebra h4() { return sweedler(FieldDescriptor::rationals()); }
HopfAlgebra taft3() { return taft(3, FieldDescriptor::cyclotomic(3)); }

// dim Hom(M, N) minus the maps that factor through the projective cover of N.
std::size_t stable_dim_via_cover(const Module& m, const Module& n) {
  Cover c = projective_cover(n);
  std::vector<Vector> images;
  for (const auto& g : hom_space(m, c.projective)) images.push_back(images_of_map(m, c.epi * g.matrix));
  std::size_t through = 0;
  if (!images.empty()) through = rank(Matrix::from_columns(m.field(), images.front().size(), images));
  return hom_space(m, n).size() - through;
}

bool same_module(const Module& a, const Module& b) {
  return modules_isomorphic(a, b).verdict == IsoVerdict::Isomorphic;
}

}  // namespace

TEST_CASE("projective covers") {
  HopfAlgebra h = h4();
  Module k = trivial_module(h);
  Cover c = projective_cover(k);
  CHECK(c.projective.dim() == 2);
  CHECK(c.kernel.dim() == 1);
  CHECK(kernel_in_radical(c));
  CHECK(is_homomorphism(c.projective, k, c.epi));
  CHECK(is_homomorphism(c.kernel, c.projective, c.inclusion));
  CHECK(rank(c.epi) == 1);
  CHECK(is_zero((c.epi * c.inclusion).flatten()));

  Cover f = free_cover(k);
  CHECK(f.projective.dim() == 4);
  CHECK(f.kernel.dim() == 3);
  Cover r = free_cover(Module::regular(h.algebra()));
  CHECK(r.projective.dim() == 4);
  CHECK(r.kernel.dim() == 0);
  CHECK(r.epi.is_identity());
}

TEST_CASE("taft syzygies alternate") {
  HopfAlgebra t = taft3();
  auto tower = syzygy_tower(trivial_module(t), Engine::Minimal);
  for (int n = 1; n <= 6; ++n) CHECK(tower->at(n).dim() == (n % 2 ? 2u : 1u));
  for (int n = -6; n <= -1; ++n) CHECK(tower->at(n).dim() == (n % 2 ? 2u : 1u));
}

TEST_CASE("projectivity") {
  HopfAlgebra h = h4();
  Module a = Module::regular(h.algebra());
  Module k = trivial_module(h);
  auto pa = is_projective(a);
  CHECK(pa.projective);
  CHECK(is_projective(projective_cover(k).projective).projective);
  CHECK_FALSE(is_projective(k).projective);
  CHECK_FALSE(is_projective(adjoint_module(h)).projective);
  Module semisimple = trivial_module(cyclic_group_algebra(3, FieldDescriptor::rationals()));
  CHECK(is_projective(semisimple).projective);
  CHECK(is_projective(enveloping_left_restriction(h)).projective);
  CHECK(is_projective(enveloping_right_restriction(h)).projective);
}

TEST_CASE("stable hom") {
  HopfAlgebra h = h4();
  Module k = trivial_module(h);
  Module a = Module::regular(h.algebra());
  auto s = stable_hom(k, k);
  CHECK(s.dim() == 1);
  CHECK_FALSE(s.stably_zero(Matrix::identity(k.field(), 1)));
  CHECK(stable_hom(a, k).dim() == 0);
  CHECK(stable_hom(k, a).dim() == 0);
  Module z = trivial_module(cyclic_group_algebra(3, FieldDescriptor::rationals()));
  CHECK(stable_hom(z, z).dim() == 0);
  auto r = s.representative(0);
  CHECK(is_homomorphism(k, k, r));
  CHECK(s.classify(r.scaled(FieldElement::from_int(k.field(), 3))) ==
        Vector{FieldElement::from_int(k.field(), 3)});
}

TEST_CASE("stable hom against maps through the projective cover") {
  for (HopfAlgebra h : {h4(), taft3(), taft(3, FieldDescriptor::prime(7))}) {
    std::vector<Module> ms = {trivial_module(h), adjoint_module(h), counit_kernel_module(h),
                              syzygy(trivial_module(h), Engine::Minimal)};
    for (const auto& m : ms)
      for (const auto& n : ms) CHECK(stable_hom(m, n).dim() == stable_dim_via_cover(m, n));
  }
}

TEST_CASE("stable hom is shift invariant and additive") {
  HopfAlgebra h = h4();
  std::vector<Module> ms = {trivial_module(h), adjoint_module(h), counit_kernel_module(h)};
  for (const auto& m : ms)
    for (const auto& n : ms) {
      const auto d = stable_hom(m, n).dim();
      CHECK(stable_hom(syzygy(m, Engine::Minimal), syzygy(n, Engine::Minimal)).dim() == d);
      CHECK(stable_hom(cosyzygy(m, Engine::Minimal), cosyzygy(n, Engine::Minimal)).dim() == d);
      CHECK(stable_hom(direct_sum(m, n), n).dim() == d + stable_hom(n, n).dim());
    }
}

TEST_CASE("syzygy and cosyzygy are inverse") {
  for (HopfAlgebra h : {h4(), taft3()}) {
    Module k = trivial_module(h);
    CHECK(same_module(cosyzygy(syzygy(k, Engine::Minimal), Engine::Minimal), k));
    CHECK(same_module(syzygy(cosyzygy(k, Engine::Minimal), Engine::Minimal), k));
  }
  HopfAlgebra h = h4();
  Module k = trivial_module(h);
  Module inv = cosyzygy(k, Engine::Minimal);
  CHECK(inv.dim() == 1);
  CHECK_FALSE(same_module(inv, k));
}

TEST_CASE("free summands are stripped") {
  HopfAlgebra h = h4();
  Module k = trivial_module(h);
  Module a = Module::regular(h.algebra());
  auto r = strip_free_summands(direct_sum({a, k, a}));
  CHECK(r.removed == 2);
  CHECK(same_module(r.module, k));
  CHECK(strip_free_summands(k).removed == 0);
}

TEST_CASE("engines give stably equivalent syzygies") {
  for (HopfAlgebra h : {h4(), taft3()}) {
    Module k = trivial_module(h);
    auto mt = syzygy_tower(k, Engine::Minimal);
    auto ft = syzygy_tower(k, Engine::Free);
    for (int n = -4; n <= 4; ++n) {
      CAPTURE(n);
      Module x = mt->at(n), y = ft->at(n);
      const auto d = stable_hom(x, x).dim();
      CHECK(stable_hom(x, y).dim() == d);
      CHECK(stable_hom(y, x).dim() == d);
      CHECK(stable_hom(y, y).dim() == d);
    }
  }
}

TEST_CASE("two-sided level sequences are exact") {
  for (HopfAlgebra h : {h4(), taft3()}) {
    SyzygyTower tower(trivial_module(h), Engine::Minimal, false);
    for (int n = -4; n <= 4; ++n) {
      CAPTURE(n);
      LevelSequence s = tower.sequence_at(n);
      Module lo = tower.at(n + 1), hi = tower.at(n);
      CHECK(is_projective(s.projective).projective);
      CHECK(is_homomorphism(lo, s.projective, s.inclusion));
      CHECK(is_homomorphism(s.projective, hi, s.projection));
      CHECK(rank(s.inclusion) == lo.dim());
      CHECK(rank(s.projection) == hi.dim());
      CHECK(s.projective.dim() == lo.dim() + hi.dim());
      CHECK(is_zero((s.projection * s.inclusion).flatten()));
    }
  }
}

TEST_CASE("hom dimensions on syzygies agree with the direct system") {
  HopfAlgebra h = taft3();
  auto tower = syzygy_tower(trivial_module(h), Engine::Minimal);
  for (int n = -3; n <= 3; ++n)
    for (int m = -3; m <= 3; ++m) CHECK(hom_space(tower->at(n), tower->at(m)).size() == brute_hom_dim(tower->at(n), tower->at(m)));
}
