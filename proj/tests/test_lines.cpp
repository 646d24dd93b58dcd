#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <vector>

#include "json.hpp"
#include "support/oracle.hpp"
#include "wdp/lattice.hpp"
#include "wdp/lines.hpp"
#include "wdp/roots.hpp"
#include "wdp/symbols.hpp"

using namespace wdp;

namespace {

Configuration make_config(const LatticeModel& model, const std::vector<std::string>& syms) {
  std::vector<DivisorClass> roots;
  for (const auto& s : syms) roots.push_back(parse_class_symbol(model, s));
  return Configuration(model, roots);
}

std::set<std::string> line_symbols(const LatticeModel& model, const LineSet& ls) {
  std::set<std::string> out;
  for (const auto& e : ls.classes) {
    const std::string sym = class_symbol(model, e);
    out.insert(sym.empty() ? e.to_string() : sym);
  }
  return out;
}

}  // namespace

TEST_CASE("(-1)-class enumeration agrees with the box search") {
  // Counts frozen from the independent bounded search.
  constexpr std::array<std::size_t, 8> kCounts = {0, 240, 56, 27, 16, 10, 6, 3};
  for (int degree = 1; degree <= 7; ++degree) {
    CAPTURE(degree);
    const LatticeModel model = LatticeModel::blowup(degree);
    const auto fast = enumerate_minus_one_classes(model);
    CHECK(fast.size() == kCounts[degree]);
    CHECK(fast == oracle::minus_one_box(model));
    CHECK(std::is_sorted(fast.begin(), fast.end()));
    for (const auto& e : fast) {
      CHECK(model.self(e) == -1);
      CHECK(model.pair(model.canonical_class(), e) == -1);
    }
  }
  CHECK(enumerate_minus_one_classes(LatticeModel::quadric()).empty());
  CHECK(enumerate_minus_one_classes(LatticeModel::hirzebruch2()).empty());
}

TEST_CASE("line sets under specific configurations") {
  const LatticeModel d6 = LatticeModel::blowup(6);
  CHECK(line_symbols(d6, lines(make_config(d6, {}))) ==
        std::set<std::string>{"e1", "e2", "e3", "L:1,2", "L:1,3", "L:2,3"});
  CHECK(line_symbols(d6, lines(make_config(d6, {"M0:1,2", "M0:2,3"}))) ==
        std::set<std::string>{"e3", "L:1,2"});
  CHECK(line_symbols(d6, lines(make_config(d6, {"M0:1,2", "M1:1,2,3"}))) ==
        std::set<std::string>{"e2", "e3"});

  const LatticeModel d5 = LatticeModel::blowup(5);
  CHECK(line_symbols(d5, lines(make_config(d5, {"M1:1,2,3"}))) ==
        std::set<std::string>{"e1", "e2", "e3", "e4", "L:1,4", "L:2,4", "L:3,4"});

  const LatticeModel d4 = LatticeModel::blowup(4);
  CHECK(line_symbols(d4, lines(make_config(d4, {"M0:1,2", "M1:3,4,5"}))) ==
        std::set<std::string>{"e2", "e3", "e4", "e5", "L:1,2", "L:1,3", "L:1,4",
                              "L:1,5"});
  CHECK(lines(make_config(d4, {"M1:1,2,3", "M1:1,4,5"})).size() == 9);
  // The two length-3 chains produce different line counts.
  CHECK(lines(make_config(d4, {"M1:1,2,3", "M0:3,4", "M0:4,5"})).size() == 4);
  CHECK(lines(make_config(d4, {"M0:1,2", "M0:2,3", "M0:3,4"})).size() == 5);

  // More declared curves never add lines.
  const auto smooth = lines(make_config(d4, {})).classes;
  for (const auto& e : lines(make_config(d4, {"M0:1,2", "M1:3,4,5"})).classes)
    CHECK(std::binary_search(smooth.begin(), smooth.end(), e));
}

TEST_CASE("worked degree-one example reproduces its full line set") {
  std::ifstream in(std::string(WDP_DATA_DIR) + "/fixtures/example_b1.json");
  REQUIRE(in.good());
  const nlohmann::json j = nlohmann::json::parse(in);
  const LatticeModel model = LatticeModel::blowup(j.at("degree").get<int>());

  std::vector<DivisorClass> roots;
  for (const auto& item : j.at("roots"))
    roots.push_back(parse_class_symbol(model, item.get<std::string>()));
  const Configuration config(model, roots);

  std::vector<DivisorClass> expected;
  for (const auto& item : j.at("expected_lines")) {
    if (item.is_string()) {
      expected.push_back(parse_class_symbol(model, item.get<std::string>()));
    } else {
      expected.push_back(DivisorClass(item.get<std::vector<Coeff>>()));
    }
  }
  std::sort(expected.begin(), expected.end());

  const LineSet actual = lines(config);
  REQUIRE(expected.size() == 22);
  CHECK(actual.classes == expected);
}

TEST_CASE("incidence profiles") {
  const LatticeModel d5 = LatticeModel::blowup(5);
  const Configuration smooth = make_config(d5, {});
  const auto e1 = parse_class_symbol(d5, "e1");
  const IncidenceProfile p = incidence(smooth, e1);
  CHECK(p.m21.empty());
  CHECK(p.m22.empty());
  CHECK(p.roots_met() == 0);
  CHECK(p.m11.size() == 3);  // L:1,2, L:1,3, L:1,4
  CHECK(p.m12.empty());
  CHECK(p.root_overflow.empty());
  CHECK(p.line_overflow.empty());

  const LatticeModel d6 = LatticeModel::blowup(6);
  const Configuration two = make_config(d6, {"M0:1,2", "M1:1,2,3"});
  const IncidenceProfile q = incidence(two, parse_class_symbol(d6, "e2"));
  CHECK(q.m21.size() == 2);
  CHECK(q.m22.empty());
  CHECK(q.roots_met() == 2);
  CHECK(q.m11.empty());

  // Multiplicity-two meeting with a declared curve.
  const LatticeModel d1 = LatticeModel::blowup(1);
  const Configuration cuspish = make_config(d1, {"M3:1"});
  const IncidenceProfile r = incidence(cuspish, parse_class_symbol(d1, "e1"));
  CHECK(r.m22.size() == 1);
  CHECK(r.m21.empty());
  CHECK(r.roots_met() == 1);

  // Line-line multiplicities above two are reported, not dropped.
  const Configuration d1smooth = make_config(d1, {});
  const IncidenceProfile s = incidence(d1smooth, parse_class_symbol(d1, "e1"));
  REQUIRE(s.line_overflow.size() == 1);
  CHECK(s.line_overflow[0].second == 3);
  DivisorClass sextic = 6 * d1.basis(0);
  for (int i = 1; i <= 8; ++i) sextic -= 2 * d1.basis(i);
  sextic -= d1.basis(1);
  CHECK(s.line_overflow[0].first == sextic);

  CHECK_THROWS_AS(incidence(two, parse_class_symbol(d6, "e1")), Error);
  try {
    incidence(two, parse_class_symbol(d6, "e1"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_in_line_set);
  }
}

TEST_CASE("lines meeting declared curves") {
  const LatticeModel d6 = LatticeModel::blowup(6);
  CHECK(lines_meeting_roots(make_config(d6, {})).empty());

  const Configuration two = make_config(d6, {"M0:1,2", "M1:1,2,3"});
  const auto meeting = lines_meeting_roots(two);
  CHECK(line_symbols(d6, LineSet{meeting}) == std::set<std::string>{"e2", "e3"});

  const LatticeModel d4 = LatticeModel::blowup(4);
  const Configuration t1 = make_config(d4, {"M0:1,2", "M1:3,4,5"});
  CHECK(lines_meeting_roots(t1).size() == 8);  // every line meets a curve here
}

TEST_CASE("line set membership helper") {
  const LatticeModel d7 = LatticeModel::blowup(7);
  const LineSet ls = lines(Configuration(d7, {}));
  CHECK(ls.size() == 3);
  CHECK(ls.contains(parse_class_symbol(d7, "e1")));
  CHECK(ls.contains(parse_class_symbol(d7, "L:1,2")));
  CHECK(!ls.contains(d7.basis(0)));
}
