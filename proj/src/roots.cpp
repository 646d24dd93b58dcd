#include "wdp/roots.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

namespace wdp {

namespace {

void push_combinations(int n, int k, int first,
                       std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(cur.size()) == k) {
    emit(cur);
    return;
  }
  for (int i = first; i <= n; ++i) {
    cur.push_back(i);
    push_combinations(n, k, i + 1, cur, emit);
    cur.pop_back();
  }
}

void for_each_combination(int n, int k,
                          const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> cur;
  push_combinations(n, k, 1, cur, emit);
}

// Component classification on an adjacency structure with pairings in {0,1}.
// Returns nullopt when the graph is not a disjoint union of ADE diagrams.
std::optional<std::string> classify_ade(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1);
  std::vector<std::pair<char, int>> parts;  // (letter, rank)

  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    std::vector<int> nodes;
    comp[start] = start;
    nodes.push_back(start);
    for (std::size_t q = 0; q < nodes.size(); ++q)
      for (int m : adj[nodes[q]])
        if (comp[m] == -1) {
          comp[m] = start;
          nodes.push_back(m);
        }

    std::size_t edges = 0;
    int branch = -1, branch_count = 0;
    for (int v : nodes) {
      edges += adj[v].size();
      if (adj[v].size() >= 4) return std::nullopt;
      if (adj[v].size() == 3) {
        ++branch_count;
        branch = v;
      }
    }
    edges /= 2;
    if (edges != nodes.size() - 1) return std::nullopt;  // cycle
    if (branch_count > 1) return std::nullopt;

    const int rank = static_cast<int>(nodes.size());
    if (branch_count == 0) {
      parts.emplace_back('A', rank);
      continue;
    }
    std::vector<int> arms;
    for (int m : adj[branch]) {
      int prev = branch, cur = m, len = 1;
      for (;;) {
        int next = -1;
        for (int w : adj[cur])
          if (w != prev) next = w;
        if (next == -1) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] != 1) return std::nullopt;
    if (arms[1] == 1) {
      parts.emplace_back('D', rank);  // arms (1,1,k), rank k+3
    } else if (arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
      parts.emplace_back('E', rank);  // E6, E7, E8
    } else {
      return std::nullopt;
    }
  }

  // Rank descending, then E > D > A; multiplicities prefixed.
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first > b.first;
  });
  std::string out;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i);
    out += parts[i].first;
    out += std::to_string(parts[i].second);
    i = j;
  }
  return out;
}

std::vector<std::vector<int>> adjacency_of(const LatticeModel& model,
                                           const std::vector<DivisorClass>& roots) {
  const std::size_t n = roots.size();
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (model.pair(roots[i], roots[j]) == 1) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
      }
  return adj;
}

}  // namespace

std::vector<DivisorClass> enumerate_minus_two_classes(const LatticeModel& model) {
  std::vector<DivisorClass> out;
  switch (model.shape()) {
    case Shape::QuadricP1xP1:
      break;  // no effective (-2)-classes
    case Shape::Hirzebruch2:
      out.push_back(model.basis(0));
      break;
    case Shape::BlowupOfP2: {
      const int n = model.points();
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          out.push_back(model.basis(i) - model.basis(j));
      if (n >= 3)
        for_each_combination(n, 3, [&](const std::vector<int>& c) {
          DivisorClass d = model.basis(0);
          for (int i : c) d -= model.basis(i);
          out.push_back(d);
        });
      if (n >= 6)
        for_each_combination(n, n - 6, [&](const std::vector<int>& t) {
          DivisorClass d = 2 * model.basis(0);
          for (int i = 1; i <= n; ++i) d -= model.basis(i);
          for (int i : t) d += model.basis(i);
          out.push_back(d);
        });
      if (n == 8)
        for (int i = 1; i <= n; ++i) {
          DivisorClass d = 3 * model.basis(0);
          for (int j = 1; j <= n; ++j) d -= model.basis(j);
          d -= model.basis(i);
          out.push_back(d);
        }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int max_configuration_size(const LatticeModel& model) {
  switch (model.shape()) {
    case Shape::BlowupOfP2: return model.points();
    case Shape::Hirzebruch2: return 1;
    case Shape::QuadricP1xP1: return 0;
  }
  return 0;
}

std::vector<Diagnostic> validate_configuration(const LatticeModel& model,
                                               const std::vector<DivisorClass>& roots) {
  std::vector<Diagnostic> out;
  for (const auto& r : roots) {
    if (static_cast<int>(r.rank()) != model.rank()) {
      out.push_back({"bad_vector",
                     "class vector " + r.to_string() + " has wrong rank for the model",
                     {r}});
      return out;
    }
  }
  const auto family = enumerate_minus_two_classes(model);
  bool members_ok = true;
  for (const auto& r : roots) {
    if (!std::binary_search(family.begin(), family.end(), r)) {
      members_ok = false;
      out.push_back({"not_a_root",
                     "class " + r.to_string() + " (self-pairing " +
                         std::to_string(model.self(r)) + ", canonical pairing " +
                         std::to_string(model.pair(model.canonical_class(), r)) +
                         ") is not an effective (-2)-class of the model",
                     {r}});
    }
  }
  std::set<DivisorClass> seen;
  for (const auto& r : roots)
    if (!seen.insert(r).second)
      out.push_back({"duplicate_root", "class " + r.to_string() + " is listed twice", {r}});
  if (!members_ok || !out.empty()) return out;

  bool pairings_ok = true;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const Coeff p = model.pair(roots[i], roots[j]);
      if (p != 0 && p != 1) {
        pairings_ok = false;
        out.push_back({"bad_pairing",
                       "classes " + roots[i].to_string() + " and " + roots[j].to_string() +
                           " pair to " + std::to_string(p) + ", expected 0 or 1",
                       {roots[i], roots[j]}});
      }
    }
  if (pairings_ok && !classify_ade(adjacency_of(model, roots)))
    out.push_back({"not_ade",
                   "the intersection graph is not a disjoint union of ADE diagrams",
                   {}});
  if (static_cast<int>(roots.size()) > max_configuration_size(model))
    out.push_back({"too_many_roots",
                   std::to_string(roots.size()) + " declared curves exceed the bound " +
                       std::to_string(max_configuration_size(model)) + " for the model",
                   {}});
  return out;
}

Configuration::Configuration(LatticeModel model, std::vector<DivisorClass> roots)
    : model_(std::move(model)), roots_(std::move(roots)) {
  auto issues = validate_configuration(model_, roots_);
  if (!issues.empty()) {
    std::string msg = issues[0].code + ": " + issues[0].message;
    if (issues.size() > 1)
      msg += " (and " + std::to_string(issues.size() - 1) + " more issues)";
    throw Error(Errc::invalid_configuration, msg);
  }
  std::sort(roots_.begin(), roots_.end());
}

std::string ade_type(const Configuration& config) {
  auto r = classify_ade(adjacency_of(config.model(), config.roots()));
  // A valid configuration always classifies.
  if (!r) throw Error(Errc::invalid_configuration, "configuration graph is not ADE");
  return *r;
}

std::string ade_type_of_gram(const std::vector<std::vector<Coeff>>& gram) {
  const std::size_t n = gram.size();
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n)
      throw Error(Errc::invalid_argument, "gram matrix is not square");
    if (gram[i][i] != -2)
      throw Error(Errc::invalid_configuration, "gram diagonal entry is not -2");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram[i][j] != gram[j][i])
        throw Error(Errc::invalid_argument, "gram matrix is not symmetric");
      if (gram[i][j] == 1) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
      } else if (gram[i][j] != 0) {
        throw Error(Errc::invalid_configuration, "off-diagonal gram entry not in {0,1}");
      }
    }
  }
  auto r = classify_ade(adj);
  if (!r)
    throw Error(Errc::invalid_configuration,
                "graph is not a disjoint union of ADE diagrams");
  return *r;
}

}  // namespace wdp
