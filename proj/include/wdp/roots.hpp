#pragma once
// Root systems: enumeration of the effective (-2)-class families of a model,
// validated configurations of declared irreducible (-2)-curves, and ADE
// classification of their intersection graphs.

#include <string>
#include <vector>

#include "wdp/lattice.hpp"

namespace wdp {

// All classes D with D*D=-2, K*D=0 that can be represented by effective
// curves on the model, sorted lexicographically by coefficient vector.
std::vector<DivisorClass> enumerate_minus_two_classes(const LatticeModel& model);

// Largest admissible configuration size: 9-degree on blow-ups, 1 on
// Hirzebruch2, 0 on the smooth quadric.
int max_configuration_size(const LatticeModel& model);

struct Diagnostic {
  std::string code;     // stable machine-readable tag
  std::string message;  // human-readable detail
  std::vector<DivisorClass> offenders;
};

// Checks, in order: class vectors well formed, every root is a member of the
// effective (-2) family, no duplicates, pairwise pairings in {0,1}, graph is
// a disjoint union of ADE diagrams, size bound. Empty result means valid.
std::vector<Diagnostic> validate_configuration(const LatticeModel& model,
                                               const std::vector<DivisorClass>& roots);

// A model together with a valid set of declared irreducible (-2)-curves.
// Construction validates; roots are stored sorted so all derived data is
// independent of input order.
class Configuration {
public:
  Configuration(LatticeModel model, std::vector<DivisorClass> roots);

  const LatticeModel& model() const noexcept { return model_; }
  const std::vector<DivisorClass>& roots() const noexcept { return roots_; }
  std::size_t size() const noexcept { return roots_.size(); }

private:
  LatticeModel model_;
  std::vector<DivisorClass> roots_;
};

// Dynkin type of the configuration graph, e.g. "", "A1", "A3+2A1", "D4+A1",
// "E6". Components are sorted by rank descending, then letter E > D > A;
// repeated components get a multiplicity prefix.
std::string ade_type(const Configuration& config);

// Classification of an explicit pairing graph given as a Gram matrix of
// (-2)-classes (diagonal -2, off-diagonal 0 or 1). Returns "" on the empty
// graph. Throws Error{invalid_configuration} if the graph is not a disjoint
// union of ADE diagrams.
std::string ade_type_of_gram(const std::vector<std::vector<Coeff>>& gram);

}  // namespace wdp
