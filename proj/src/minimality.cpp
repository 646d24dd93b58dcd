#include "wdp/minimality.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "wdp/catalog.hpp"

namespace wdp {

namespace {

// True for "A1", "A2", "mA1", "mA2" (a single token of A1 or A2 components).
bool all_components_a1_or_a2(const std::string& type) {
  if (type.empty()) return false;
  if (type.find('+') != std::string::npos) return false;
  const auto a = type.find('A');
  if (a == std::string::npos) return false;
  for (std::size_t i = 0; i < a; ++i)
    if (!std::isdigit(static_cast<unsigned char>(type[i]))) return false;
  const std::string rank = type.substr(a + 1);
  return rank == "1" || rank == "2";
}

// Per-line incidence counts against roots and the other lines.
using Signature = std::array<std::size_t, 4>;

std::vector<Signature> signatures(const Configuration& config, const LineSet& set) {
  std::vector<Signature> sig(set.classes.size(), Signature{0, 0, 0, 0});
  const auto& model = config.model();
  for (std::size_t i = 0; i < set.classes.size(); ++i) {
    for (const auto& m : config.roots()) {
      const Coeff v = model.pair(set.classes[i], m);
      if (v == 1) ++sig[i][0];
      if (v == 2) ++sig[i][1];
    }
    for (std::size_t j = 0; j < set.classes.size(); ++j) {
      if (i == j) continue;
      const Coeff v = model.pair(set.classes[i], set.classes[j]);
      if (v == 1) ++sig[i][2];
      if (v == 2) ++sig[i][3];
    }
  }
  return sig;
}

}  // namespace

QuasiMinimalityReport is_quasi_minimal(const Configuration& config) {
  QuasiMinimalityReport rep;
  rep.type_check = all_components_a1_or_a2(ade_type(config));

  const LineSet set = lines(config);
  const auto sig = signatures(config, set);
  const auto& model = config.model();
  bool partner_check = true;
  for (std::size_t i = 0; i < set.classes.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < set.classes.size() && !found; ++j) {
      if (i == j) continue;
      if (model.pair(set.classes[i], set.classes[j]) > 0 && sig[i] == sig[j])
        found = true;
    }
    if (!found) {
      partner_check = false;
      rep.witness = set.classes[i];
      break;
    }
  }
  rep.verdict = rep.type_check && partner_check;
  return rep;
}

AlphaBetaReport alpha_beta(const Configuration& config, int alpha) {
  if (alpha < 1)
    throw Error(Errc::invalid_argument, "alpha must be at least 1");
  AlphaBetaReport rep;
  rep.alpha = alpha;

  const LineSet set = lines(config);
  const auto& model = config.model();
  std::vector<std::size_t> met(set.classes.size(), 0);
  for (std::size_t i = 0; i < set.classes.size(); ++i)
    for (const auto& m : config.roots())
      if (model.pair(set.classes[i], m) >= 1) ++met[i];

  std::vector<std::size_t> beta_idx;
  for (std::size_t i = 0; i < set.classes.size(); ++i)
    if (met[i] == static_cast<std::size_t>(alpha)) {
      beta_idx.push_back(i);
      rep.beta_lines.push_back(set.classes[i]);
    }

  rep.pairwise_disjoint = true;
  for (std::size_t a = 0; a < beta_idx.size(); ++a)
    for (std::size_t b = a + 1; b < beta_idx.size(); ++b)
      if (model.pair(set.classes[beta_idx[a]], set.classes[beta_idx[b]]) != 0)
        rep.pairwise_disjoint = false;

  rep.witness_holds = true;
  for (std::size_t a : beta_idx)
    for (std::size_t j = 0; j < set.classes.size(); ++j) {
      if (j == a) continue;
      if (model.pair(set.classes[a], set.classes[j]) > 0 &&
          met[j] == static_cast<std::size_t>(alpha))
        rep.witness_holds = false;
    }
  return rep;
}

bool minimal_type_membership(int degree, const std::string& base_ade, int line_count,
                          const Catalog& catalog) {
  const std::string base = base_singularity_type(base_ade);
  const std::string resolved = catalog.resolve_type(degree, base, line_count);
  if (base_ade != base && base_ade != resolved)
    throw Error(Errc::catalog_miss,
                "type " + base_ade + " with " + std::to_string(line_count) +
                    " lines resolves to " + resolved + " in degree " +
                    std::to_string(degree));
  static const std::set<std::pair<int, std::string>> kMinimalTypes = {
      {8, "A1"},     {4, "2A1(1)"}, {2, "A1"},  {2, "A2"},
      {2, "4A1(2)"}, {1, "2A1"},    {1, "2A2"},
  };
  return kMinimalTypes.count({degree, resolved}) > 0;
}

CylinderVerdict cylinder_verdict(int degree, bool minimal, bool has_section,
                                 bool has_rational_point) {
  if (degree < 1 || degree > 8)
    throw Error(Errc::invalid_argument, "degree must be 1..8");
  if (!minimal)
    throw Error(Errc::not_applicable,
                "cylinder verdict is defined for minimal surfaces only");
  CylinderVerdict v;
  if (degree == 8) {
    v.a2_plane = has_rational_point;
    v.a1_cylinder = has_rational_point || has_section;
  }
  return v;
}

}  // namespace wdp
