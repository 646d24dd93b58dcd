#include "wdp/descent.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wdp {

namespace {

constexpr Coeff kMaxMatrixEntry = 1000000;

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<Coeff>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Coeff aik = a[i][k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += aik * b[k][j];
    }
  return out;
}

void check_generator_shape(const LatticeModel& model, const Matrix& g) {
  const std::size_t n = static_cast<std::size_t>(model.rank());
  if (g.size() != n)
    throw Error(Errc::invalid_action, "generator matrix has wrong size");
  for (const auto& row : g) {
    if (row.size() != n)
      throw Error(Errc::invalid_action, "generator matrix is not square");
    for (Coeff x : row)
      if (x > kMaxMatrixEntry || x < -kMaxMatrixEntry)
        throw Error(Errc::invalid_action, "generator entry out of range");
  }
}

// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
int integer_rank(std::vector<std::vector<__int128>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  __int128 prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

DivisorClass reflect(const LatticeModel& model, const DivisorClass& root,
                     const DivisorClass& d) {
  if (model.self(root) != -2)
    throw Error(Errc::invalid_argument,
                "reflection requires a (-2)-class, got self-pairing " +
                    std::to_string(model.self(root)));
  return d + model.pair(d, root) * root;
}

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<Coeff>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

DivisorClass apply_matrix(const Matrix& m, const DivisorClass& d) {
  const std::size_t n = m.size();
  if (d.rank() != n)
    throw Error(Errc::invalid_argument, "rank mismatch in matrix application");
  DivisorClass out(std::vector<Coeff>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.c[i] += m[i][j] * d.c[j];
  return out;
}

GaloisAction GaloisAction::make(const Configuration& config,
                                std::vector<Matrix> generators,
                                std::size_t element_cap) {
  const LatticeModel& model = config.model();
  const int n = model.rank();

  const auto all_lines = enumerate_minus_one_classes(model);
  const auto& roots = config.roots();
  const DivisorClass k = model.canonical_class();

  for (const auto& g : generators) {
    check_generator_shape(model, g);
    // Isometry: pairing of transformed basis vectors is unchanged.
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const Coeff want = model.pair(model.basis(i), model.basis(j));
        const Coeff got =
            model.pair(apply_matrix(g, model.basis(i)), apply_matrix(g, model.basis(j)));
        if (want != got)
          throw Error(Errc::invalid_action, "generator does not preserve the pairing");
      }
    if (!(apply_matrix(g, k) == k))
      throw Error(Errc::invalid_action, "generator does not fix the canonical class");
    for (const auto& r : roots)
      if (!std::binary_search(roots.begin(), roots.end(), apply_matrix(g, r)))
        throw Error(Errc::invalid_action,
                    "generator does not permute the declared (-2)-curves");
    for (const auto& e : all_lines)
      if (!std::binary_search(all_lines.begin(), all_lines.end(), apply_matrix(g, e)))
        throw Error(Errc::invalid_action,
                    "generator does not permute the (-1)-classes");
  }

  // Closure under products; valid generators span a finite group, so the
  // cap is only reachable on oversized groups.
  std::set<Matrix> seen;
  std::vector<Matrix> queue;
  seen.insert(identity_matrix(n));
  queue.push_back(identity_matrix(n));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Matrix cur = queue[head];
    for (const auto& g : generators) {
      Matrix next = multiply(g, cur);
      if (seen.insert(next).second) {
        if (seen.size() > element_cap)
          throw Error(Errc::group_cap_exceeded,
                      "generated group exceeds the element cap of " +
                          std::to_string(element_cap));
        queue.push_back(std::move(next));
      }
    }
  }
  return GaloisAction(model, std::move(generators),
                      std::vector<Matrix>(seen.begin(), seen.end()));
}

int invariant_rank(const GaloisAction& action) {
  const int n = action.model().rank();
  std::vector<std::vector<__int128>> stacked;
  for (const auto& g : action.generators())
    for (int i = 0; i < n; ++i) {
      std::vector<__int128> row(n);
      for (int j = 0; j < n; ++j)
        row[j] = static_cast<__int128>(g[i][j]) - (i == j ? 1 : 0);
      stacked.push_back(std::move(row));
    }
  if (stacked.empty()) return n;  // trivial action
  return n - integer_rank(std::move(stacked));
}

MinimalityReport is_minimal(const Configuration& config, const GaloisAction& action) {
  if (!(action.model() == config.model()))
    throw Error(Errc::invalid_argument,
                "action and configuration use different models");
  const LineSet set = lines(config);
  const auto& model = config.model();
  const std::size_t n = set.classes.size();

  auto index_of = [&](const DivisorClass& d) -> std::size_t {
    const auto it = std::lower_bound(set.classes.begin(), set.classes.end(), d);
    if (it == set.classes.end() || !(*it == d))
      throw Error(Errc::invalid_action,
                  "action moves a configuration line out of the line set");
    return static_cast<std::size_t>(it - set.classes.begin());
  };

  // Orbits of the generator graph.
  std::vector<int> orbit(n, -1);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t s = 0; s < n; ++s) {
    if (orbit[s] != -1) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<std::size_t> members{s};
    orbit[s] = id;
    for (std::size_t q = 0; q < members.size(); ++q)
      for (const auto& g : action.generators()) {
        const std::size_t img = index_of(apply_matrix(g, set.classes[members[q]]));
        if (orbit[img] == -1) {
          orbit[img] = id;
          members.push_back(img);
        }
      }
    orbits.push_back(std::move(members));
  }

  MinimalityReport rep;
  rep.minimal = true;
  for (std::size_t s = 0; s < n; ++s) {  // lines in lexicographic order
    const auto& members = orbits[static_cast<std::size_t>(orbit[s])];
    if (members.front() != s) continue;  // only inspect each orbit once
    bool disjoint = true;
    for (std::size_t a = 0; a < members.size() && disjoint; ++a)
      for (std::size_t b = a + 1; b < members.size() && disjoint; ++b)
        if (model.pair(set.classes[members[a]], set.classes[members[b]]) != 0)
          disjoint = false;
    if (members.size() == 1 || disjoint) {
      rep.minimal = false;
      for (std::size_t m : members) rep.witness_orbit.push_back(set.classes[m]);
      std::sort(rep.witness_orbit.begin(), rep.witness_orbit.end());
      break;
    }
  }
  return rep;
}

std::vector<FiberClass> fiber_classes(const Configuration& config) {
  const auto& model = config.model();
  std::vector<DivisorClass> fibers;
  if (model.shape() == Shape::QuadricP1xP1) {
    fibers = {model.basis(0), model.basis(1)};
  } else if (model.shape() == Shape::Hirzebruch2) {
    fibers = {model.basis(1)};
  } else {
    const auto all = enumerate_minus_one_classes(model);
    std::set<DivisorClass> seen;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        if (model.pair(all[i], all[j]) == 1) seen.insert(all[i] + all[j]);
    fibers.assign(seen.begin(), seen.end());
  }

  std::map<DivisorClass, std::vector<std::pair<DivisorClass, DivisorClass>>> decomp;
  const LineSet set = lines(config);
  for (std::size_t i = 0; i < set.classes.size(); ++i)
    for (std::size_t j = i + 1; j < set.classes.size(); ++j)
      if (model.pair(set.classes[i], set.classes[j]) == 1)
        decomp[set.classes[i] + set.classes[j]].emplace_back(set.classes[i],
                                                             set.classes[j]);

  std::vector<FiberClass> out;
  for (const auto& f : fibers) {
    FiberClass fc;
    fc.fiber = f;
    if (auto it = decomp.find(f); it != decomp.end()) {
      fc.decompositions = it->second;
      std::sort(fc.decompositions.begin(), fc.decompositions.end());
    }
    out.push_back(std::move(fc));
  }
  return out;
}

DivisorClass dual_fibration(const LatticeModel& model, const DivisorClass& f1) {
  const int d = model.degree();
  if (model.shape() != Shape::BlowupOfP2 || (d != 1 && d != 2 && d != 4))
    throw Error(Errc::unsupported_degree,
                "the complementary fibration is defined in degrees 1, 2, 4");
  check_class_vector(model, f1);
  if (model.self(f1) != 0 || model.pair(model.canonical_class(), f1) != -2)
    throw Error(Errc::not_a_fiber_class,
                "class " + f1.to_string() + " is not a conic fiber class");
  return (-4 / d) * model.canonical_class() - f1;
}

}  // namespace wdp
