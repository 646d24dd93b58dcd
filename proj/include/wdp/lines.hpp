#pragma once
// Line sets: enumeration of the (-1)-class families of a model and the
// filter selecting the classes that stay irreducible on a surface with a
// declared (-2)-configuration, plus per-line incidence data.

#include <utility>
#include <vector>

#include "wdp/lattice.hpp"
#include "wdp/roots.hpp"

namespace wdp {

// All classes E with E*E=-1, K*E=-1 on the model, sorted lexicographically.
// Empty for both rank-2 degree-8 models.
std::vector<DivisorClass> enumerate_minus_one_classes(const LatticeModel& model);

// The (-1)-classes E with (E*M) >= 0 against every configuration root M,
// i.e. the classes of irreducible (-1)-curves on the configured surface.
struct LineSet {
  std::vector<DivisorClass> classes;  // sorted lexicographically

  bool contains(const DivisorClass& d) const;
  std::size_t size() const noexcept { return classes.size(); }
};

LineSet lines(const Configuration& config);

// Incidence data of one line against the configured surface. m2x holds the
// declared (-2)-curves pairing x with the line, m1x the other lines of the
// configuration pairing x. Pairings of 3 or more do not occur in any checked
// configuration; they are reported in the overflow fields, never dropped.
struct IncidenceProfile {
  std::vector<DivisorClass> m21, m22;  // roots with pairing 1, 2
  std::vector<DivisorClass> m11, m12;  // other lines with pairing 1, 2
  std::vector<std::pair<DivisorClass, Coeff>> root_overflow;
  std::vector<std::pair<DivisorClass, Coeff>> line_overflow;

  // Roots met, counting a multiplicity-2 meeting once.
  std::size_t roots_met() const { return m21.size() + m22.size(); }
};

// Throws Error{not_in_line_set} if the class is not in lines(config).
IncidenceProfile incidence(const Configuration& config, const DivisorClass& line);

// Lines meeting at least one configuration root, sorted lexicographically.
std::vector<DivisorClass> lines_meeting_roots(const Configuration& config);

}  // namespace wdp
