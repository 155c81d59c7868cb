#pragma once

// JSON reading and writing for algebras, Hopf algebras and modules.
//
// Module files use {"dim": m, "action": [one m x m matrix per algebra basis element]}.
// The compact form {"dim": m, "generator_action": [...]} lists only the matrices of
// the algebra generators and is what the Omega tower cache writes.

#include <string>

#include "tatecoh/examples.hpp"
#include "tatecoh/module.hpp"

namespace tatecoh {

// Canonical text of an algebra, with the coalgebra keys when h is given.
std::string algebra_to_json(const Algebra& a, const HopfAlgebra* h = nullptr);
std::string hopf_to_json(const HopfAlgebra& h);
// Throws ParseError on malformed input; does not validate the axioms.
Input input_from_json(const std::string& text);
// A path to a JSON file or "builtin:<name>".
Input load_input(const std::string& source);

std::string module_to_json(const Module& m, bool compact = false);
Module module_from_json(const Algebra& a, const std::string& text);

}  // namespace tatecoh
