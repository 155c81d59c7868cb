#pragma once

// Builders for the standard examples and the builtin registry used by the CLI.

#include <optional>
#include <string>
#include <vector>

#include "tatecoh/hopf.hpp"

namespace tatecoh {

// Basis {1, g, x, gx}; requires characteristic != 2.
HopfAlgebra sweedler(const FieldDescriptor& field);
// Basis g^i x^j, index i + N j (i varies fastest).
HopfAlgebra taft(int n, const FieldDescriptor& field);
HopfAlgebra cyclic_group_algebra(int n, const FieldDescriptor& field);
// k[t]/(t^2) on the basis {1, t}.
Algebra dual_numbers(const FieldDescriptor& field);
// Over F_2 only: F_2[Z_2] written on the basis {1, t = 1 + g}.
HopfAlgebra dual_numbers_hopf(const FieldDescriptor& field);

// An algebra with optional Hopf structure, as read from a file or the registry.
struct Input {
  std::string name;
  Algebra algebra;
  std::optional<HopfAlgebra> hopf;
};

std::vector<std::string> builtin_names();
Input builtin(const std::string& name);

}  // namespace tatecoh
