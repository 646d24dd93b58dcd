#include "wdp/lines.hpp"

#include <algorithm>
#include <functional>

namespace wdp {

namespace {

void for_each_subset(int n, int k, int first, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(cur.size()) == k) {
    emit(cur);
    return;
  }
  for (int i = first; i <= n; ++i) {
    cur.push_back(i);
    for_each_subset(n, k, i + 1, cur, emit);
    cur.pop_back();
  }
}

void subsets(int n, int k, const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> cur;
  for_each_subset(n, k, 1, cur, emit);
}

}  // namespace

std::vector<DivisorClass> enumerate_minus_one_classes(const LatticeModel& model) {
  std::vector<DivisorClass> out;
  if (model.shape() != Shape::BlowupOfP2) return out;

  const int n = model.points();
  for (int i = 1; i <= n; ++i) out.push_back(model.basis(i));
  subsets(n, 2, [&](const std::vector<int>& c) {
    DivisorClass d = model.basis(0);
    for (int i : c) d -= model.basis(i);
    out.push_back(d);
  });
  if (n >= 5)
    subsets(n, 5, [&](const std::vector<int>& c) {
      DivisorClass d = 2 * model.basis(0);
      for (int i : c) d -= model.basis(i);
      out.push_back(d);
    });
  if (n >= 7)
    subsets(n, 7, [&](const std::vector<int>& u) {
      for (int i : u) {
        DivisorClass d = 3 * model.basis(0);
        for (int j : u) d -= model.basis(j);
        d -= model.basis(i);
        out.push_back(d);
      }
    });
  if (n == 8) {
    subsets(n, 3, [&](const std::vector<int>& c) {
      DivisorClass d = 4 * model.basis(0);
      for (int j = 1; j <= n; ++j) d -= model.basis(j);
      for (int i : c) d -= model.basis(i);
      out.push_back(d);
    });
    subsets(n, 2, [&](const std::vector<int>& c) {
      DivisorClass d = 5 * model.basis(0);
      for (int j = 1; j <= n; ++j) d -= 2 * model.basis(j);
      for (int i : c) d += model.basis(i);
      out.push_back(d);
    });
    for (int i = 1; i <= n; ++i) {
      DivisorClass d = 6 * model.basis(0);
      for (int j = 1; j <= n; ++j) d -= 2 * model.basis(j);
      d -= model.basis(i);
      out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool LineSet::contains(const DivisorClass& d) const {
  return std::binary_search(classes.begin(), classes.end(), d);
}

LineSet lines(const Configuration& config) {
  LineSet out;
  for (const auto& e : enumerate_minus_one_classes(config.model())) {
    bool keep = true;
    for (const auto& m : config.roots())
      if (config.model().pair(e, m) < 0) {
        keep = false;
        break;
      }
    if (keep) out.classes.push_back(e);
  }
  return out;
}

IncidenceProfile incidence(const Configuration& config, const DivisorClass& line) {
  const LineSet set = lines(config);
  if (!set.contains(line))
    throw Error(Errc::not_in_line_set,
                "class " + line.to_string() + " is not a line of the configuration");
  IncidenceProfile p;
  for (const auto& m : config.roots()) {
    const Coeff v = config.model().pair(line, m);
    if (v == 1)
      p.m21.push_back(m);
    else if (v == 2)
      p.m22.push_back(m);
    else if (v > 2)
      p.root_overflow.emplace_back(m, v);
  }
  for (const auto& e : set.classes) {
    if (e == line) continue;
    const Coeff v = config.model().pair(line, e);
    if (v == 1)
      p.m11.push_back(e);
    else if (v == 2)
      p.m12.push_back(e);
    else if (v > 2)
      p.line_overflow.emplace_back(e, v);
  }
  return p;
}

std::vector<DivisorClass> lines_meeting_roots(const Configuration& config) {
  std::vector<DivisorClass> out;
  for (const auto& e : lines(config).classes) {
    for (const auto& m : config.roots())
      if (config.model().pair(e, m) >= 1) {
        out.push_back(e);
        break;
      }
  }
  return out;
}

}  // namespace wdp
