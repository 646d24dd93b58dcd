#pragma once
// Descent layer: reflections in (-2)-classes, finite groups of lattice
// isometries given by generator matrices (Galois actions on the geometric
// Picard lattice), invariant rank, the orbit-contraction minimality test,
// conic fiber classes with their singular-fiber decompositions, and the
// second fibration paired to a first one in degrees 1, 2, 4.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "wdp/lattice.hpp"
#include "wdp/lines.hpp"
#include "wdp/roots.hpp"

namespace wdp {

// d + (d*r) r, the reflection of d in a (-2)-class r. Pre: r*r = -2.
DivisorClass reflect(const LatticeModel& model, const DivisorClass& root,
                     const DivisorClass& d);

// Row-major square integer matrix acting on column coefficient vectors.
using Matrix = std::vector<std::vector<Coeff>>;

Matrix identity_matrix(int n);
DivisorClass apply_matrix(const Matrix& m, const DivisorClass& d);

// A finite group of integer isometries of the configured lattice, given by
// generators. Construction validates each generator (preserves the pairing,
// fixes the canonical class, permutes the declared (-2)-curves and the full
// (-1)-class set) and enumerates the generated group, which is finite for
// any valid input; the element cap only guards against invalid data.
class GaloisAction {
public:
  static GaloisAction make(const Configuration& config,
                           std::vector<Matrix> generators,
                           std::size_t element_cap = 10000);

  const LatticeModel& model() const noexcept { return model_; }
  const std::vector<Matrix>& generators() const noexcept { return generators_; }
  const std::vector<Matrix>& elements() const noexcept { return elements_; }
  std::size_t group_order() const noexcept { return elements_.size(); }

private:
  GaloisAction(LatticeModel model, std::vector<Matrix> generators,
               std::vector<Matrix> elements)
      : model_(std::move(model)),
        generators_(std::move(generators)),
        elements_(std::move(elements)) {}

  LatticeModel model_;
  std::vector<Matrix> generators_;
  std::vector<Matrix> elements_;
};

// Rank of the invariant sublattice, computed exactly by fraction-free
// elimination on the stacked (g - id) blocks over the generators.
int invariant_rank(const GaloisAction& action);

struct MinimalityReport {
  bool minimal = false;
  // On false: a contractible line orbit (singleton, or pairwise disjoint of
  // size >= 2), the one containing the lexicographically first such line.
  std::vector<DivisorClass> witness_orbit;
};

MinimalityReport is_minimal(const Configuration& config,
                            const GaloisAction& action);

struct FiberClass {
  DivisorClass fiber;  // f*f = 0, K*f = -2
  // Unordered pairs {E, E'} of configuration lines with E + E' = fiber,
  // each pair sorted, the list sorted lexicographically.
  std::vector<std::pair<DivisorClass, DivisorClass>> decompositions;
};

// Conic fiber classes of the model (independent of the configuration),
// each with its singular-fiber decompositions over lines(config).
// Sorted lexicographically by fiber class.
std::vector<FiberClass> fiber_classes(const Configuration& config);

// The complementary conic fibration (4/degree)(-K) - f1 in degrees 1, 2, 4.
// Pre: f1*f1 = 0, K*f1 = -2 (throws Error{not_a_fiber_class}), degree in
// {1,2,4} (throws Error{unsupported_degree}).
DivisorClass dual_fibration(const LatticeModel& model, const DivisorClass& f1);

}  // namespace wdp
