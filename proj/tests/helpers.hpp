#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tatecoh/hopf.hpp"
#include "tatecoh/matrix.hpp"
#include "tatecoh/stable.hpp"

namespace testing {

inline tatecoh::Vector vec(const tatecoh::FieldDescriptor& f, const std::vector<std::string>& xs) {
  tatecoh::Vector v;
  for (const auto& x : xs) v.push_back(tatecoh::FieldElement::parse(f, x));
  return v;
}

inline bool same_span(const std::vector<tatecoh::Vector>& a, const std::vector<tatecoh::Vector>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  const auto& f = a.front().front().field();
  const std::size_t n = a.front().size();
  auto ma = tatecoh::Matrix::from_columns(f, n, a);
  auto mb = tatecoh::Matrix::from_columns(f, n, b);
  std::vector<tatecoh::Vector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  auto mab = tatecoh::Matrix::from_columns(f, n, both);
  return rank(ma) == rank(mb) && rank(ma) == rank(mab);
}

// dim Hom_A(M, N) from the Kronecker system f rho_M(b_i) = rho_N(b_i) f over all
// basis elements, without going through presentations.
inline std::size_t brute_hom_dim(const tatecoh::Module& m, const tatecoh::Module& n) {
  const auto& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim(), da = m.algebra().dim();
  tatecoh::Matrix sys(f, da * dn * dm, dn * dm);
  for (std::size_t b = 0; b < da; ++b) {
    auto am = m.action(b), an = n.action(b);
    // unknown f(r, c) at column r * dm + c; equation (f am - an f)(r, c)
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) {
        const std::size_t row = (b * dn + r) * dm + c;
        for (std::size_t k = 0; k < dm; ++k) sys(row, r * dm + k) += am(k, c);
        for (std::size_t k = 0; k < dn; ++k) sys(row, k * dm + c) -= an(r, k);
      }
  }
  return dn * dm - rank(sys);
}

// Some module map f: P -> Q with target o f = g, found in Hom(P, Q).
inline tatecoh::Matrix lift_through(const tatecoh::Module& p, const tatecoh::Module& q, const tatecoh::Matrix& target, const tatecoh::Matrix& g) {
  auto basis = tatecoh::hom_space(p, q);
  const auto& fld = p.field();
  std::vector<tatecoh::Vector> cols;
  for (const auto& b : basis) cols.push_back((target * b.matrix).flatten());
  tatecoh::Vector rhs = g.flatten();
  tatecoh::Matrix sys = tatecoh::Matrix::from_columns(fld, rhs.size(), cols);
  auto c = tatecoh::try_solve(sys, rhs);
  if (!c) throw std::runtime_error("no lift through the resolution");
  tatecoh::Matrix f(fld, q.dim(), p.dim());
  for (std::size_t i = 0; i < basis.size(); ++i) f = f + basis[i].matrix.scaled((*c)[i]);
  return f;
}

// Yoneda product of cocycles z: P_i -> k and w: P_j -> k on the minimal
// resolution: lift w to a chain map P_{j+s} -> P_s for s = 0..i and compose z
// with the last component. Returns the cocycle P_{i+j} -> k.
inline tatecoh::Matrix yoneda(const tatecoh::HopfAlgebra& h, int i, const tatecoh::Matrix& z, int j, const tatecoh::Matrix& w) {
  tatecoh::SyzygyTower tower(tatecoh::trivial_module(h), tatecoh::Engine::Minimal, false);
  auto proj = [&](int n) { return tower.cover_at(n).projective; };
  // P_n -> P_{n-1} for n >= 1, P_0 -> k for n = 0
  auto d = [&](int n) { return n == 0 ? tower.cover_at(0).epi : tower.cover_at(n - 1).inclusion * tower.cover_at(n).epi; };
  tatecoh::Matrix f = lift_through(proj(j), proj(0), d(0), w);
  for (int s = 1; s <= i; ++s) f = lift_through(proj(j + s), proj(s), d(s), f * d(j + s));
  return z * f;
}

// Nonzero maps P_n -> k, a basis of Ext^n(k, k) since the resolution is minimal.
inline std::vector<tatecoh::Matrix> cocycles(const tatecoh::HopfAlgebra& h, int n) {
  tatecoh::SyzygyTower tower(tatecoh::trivial_module(h), tatecoh::Engine::Minimal, false);
  std::vector<tatecoh::Matrix> out;
  for (auto& m : tatecoh::hom_space(tower.cover_at(n).projective, tatecoh::trivial_module(h))) out.push_back(m.matrix);
  return out;
}

}  // namespace testing
