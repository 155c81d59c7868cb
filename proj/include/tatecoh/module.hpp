#pragma once

// Finite dimensional left modules, module maps and Hom spaces.
//
// A module stores one action matrix per algebra generator (Algebra::generators);
// the action of an arbitrary element is recovered through the word program.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tatecoh/algebra.hpp"
#include "tatecoh/matrix.hpp"

namespace tatecoh {

// Generators m_t of M together with the orbit matrix whose column t*n + k is
// w_k m_t (n = dim A); pivot columns of the orbit matrix form a basis of M.
struct Presentation {
  std::vector<Vector> generators;
  Matrix orbit;
  Matrix relations;                  // kernel basis of orbit
  std::vector<std::size_t> pivots;   // pivot columns of orbit
  Matrix pivot_inverse;              // inverse of orbit restricted to pivots
};

class Module {
 public:
  Module() = default;

  static Module create(const Algebra& algebra, std::size_t dim, std::vector<Matrix> generator_actions);
  // One matrix per basis element of the algebra.
  static Module from_basis_action(const Algebra& algebra, const std::vector<Matrix>& basis_actions);
  static Module zero(const Algebra& algebra);
  static Module regular(const Algebra& algebra);

  bool valid_handle() const { return static_cast<bool>(impl_); }
  const Algebra& algebra() const;
  const FieldDescriptor& field() const;
  std::size_t dim() const;
  const std::vector<Matrix>& generator_actions() const;

  Vector act_generator(std::size_t g, const Vector& m) const;
  // w_k m for every word.
  std::vector<Vector> orbit(const Vector& m) const;
  Vector act(const Vector& a, const Vector& m) const;
  Matrix action(std::size_t basis_index) const;
  Matrix action_of(const Vector& a) const;
  const std::vector<Matrix>& word_actions() const;

  // Checks rho(1) = id and the structure constant relations on all basis pairs.
  ValidationReport validate() const;
  const std::string& fingerprint() const;
  const Presentation& presentation() const;
  bool same(const Module& other) const { return impl_ == other.impl_; }

  struct Impl;

 private:
  explicit Module(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

struct ModuleMap {
  Module source;
  Module target;
  Matrix matrix;  // target.dim x source.dim
};

bool is_homomorphism(const Module& source, const Module& target, const Matrix& f);
ModuleMap identity_map(const Module& m);

// Hom_A(M, N). hom_images returns a basis in generator-image coordinates: the
// concatenation (f(m_1), ..., f(m_s)) for the generators of M's presentation.
std::vector<Vector> hom_images(const Module& m, const Module& n);
Matrix map_from_images(const Module& m, const Module& n, const Vector& images);
Vector images_of_map(const Module& m, const Matrix& f);
std::vector<ModuleMap> hom_space(const Module& m, const Module& n);

// Submodules and quotients.
EchelonBasis submodule_generated(const Module& m, const std::vector<Vector>& seeds);
Module submodule(const Module& m, const EchelonBasis& sub);
Module quotient(const Module& m, const EchelonBasis& sub);
// Coordinates of v (in the span) with respect to submodule(m, sub)'s basis.
Vector submodule_coordinates(const EchelonBasis& sub, const Vector& v);

EchelonBasis radical_submodule(const Module& m);   // J M
EchelonBasis socle_submodule(const Module& m);     // {m : J m = 0}
Module radical_of_module(const Module& m);
Module top(const Module& m);
Module socle(const Module& m);
// Lifts of a basis of M / JM.
std::vector<Vector> top_lifts(const Module& m);

// Plain dual: a left module over the opposite algebra via transposed actions.
Module dual_module(const Module& m);
Module direct_sum(const Module& m, const Module& n);
Module direct_sum(const std::vector<Module>& parts);
// Restriction of scalars along an algebra map phi: B -> A given as a dim A x dim B matrix.
Module restrict_module(const Module& m, const Algebra& b, const Matrix& phi);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Undecided };
struct IsoResult {
  IsoVerdict verdict;
  Matrix certificate;  // invertible intertwiner when isomorphic
  std::uint64_t seed;
};
IsoResult modules_isomorphic(const Module& m, const Module& n, std::uint64_t seed = 1, int attempts = 64);

}  // namespace tatecoh
