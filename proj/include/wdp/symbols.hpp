#pragma once
// Symbolic class literals. Named classes ("e3", "L:1,4", "M0:1,2", "M1:2,3,5",
// "M2:", "M2:1,6", "M3:8", "f1", "f2", "s", "f") round-trip to coefficient
// vectors relative to a model. Rendering returns "" when a vector matches no
// named family pattern.

#include <string>

#include "wdp/lattice.hpp"

namespace wdp {

// Throws Error{parse_error} on malformed or out-of-range literals and
// Error{invalid_argument} when the literal does not exist on the model.
DivisorClass parse_class_symbol(const LatticeModel& model, const std::string& s);

// Symbol grammar plus bracketed coefficient vectors "[c0,c1,...]" for classes
// outside the named families (rank-checked against the model).
DivisorClass parse_class_literal(const LatticeModel& model, const std::string& s);

std::string class_symbol(const LatticeModel& model, const DivisorClass& d);

}  // namespace wdp
