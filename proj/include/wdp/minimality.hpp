#pragma once
// Minimality layer: the quasi-minimality test on a configuration, the
// alpha/beta line statistics used to refute quasi-minimality degree by
// degree, the minimal-type membership test against the classification
// catalog, and the cylinder existence verdict for minimal surfaces.

#include <optional>
#include <string>
#include <vector>

#include "wdp/lines.hpp"
#include "wdp/roots.hpp"

namespace wdp {

class Catalog;

struct QuasiMinimalityReport {
  bool verdict = false;
  // Whether the Dynkin type is mA1 or mA2 for some m >= 1.
  bool type_check = false;
  // A line with no positively-meeting partner of equal incidence profile,
  // when one exists (lexicographically first such line).
  std::optional<DivisorClass> witness;
};

QuasiMinimalityReport is_quasi_minimal(const Configuration& config);

struct AlphaBetaReport {
  int alpha = 0;
  // Lines meeting exactly alpha declared (-2)-curves, a multiplicity-2
  // meeting counted once. beta is the size of this list.
  std::vector<DivisorClass> beta_lines;
  bool pairwise_disjoint = false;
  // Every line positively meeting a beta line meets a number of declared
  // (-2)-curves different from alpha.
  bool witness_holds = false;
};

// Pre: alpha >= 1 (throws Error{invalid_argument} otherwise).
AlphaBetaReport alpha_beta(const Configuration& config, int alpha);

// True when (degree, resolved type) is one of the seven minimal quasi-minimal
// types: (8,A1), (4,2A1(1)), (2,A1), (2,A2), (2,4A1(2)), (1,2A1), (1,2A2).
// The ambiguity suffix is resolved through the catalog by line count; throws
// Error{catalog_miss} when the triple matches no catalog row.
bool minimal_type_membership(int degree, const std::string& base_ade,
                          int line_count, const Catalog& catalog);

struct CylinderVerdict {
  bool a1_cylinder = false;
  bool a2_plane = false;  // implies a1_cylinder
};

// Cylinder existence for a minimal surface of the given degree over a
// perfect base field. Degrees below 8 admit neither. In degree 8 a rational
// point gives both, a section of the conic fibration gives the first.
// Throws Error{not_applicable} when minimal is false.
CylinderVerdict cylinder_verdict(int degree, bool minimal, bool has_section,
                                 bool has_rational_point);

}  // namespace wdp
