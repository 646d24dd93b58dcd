#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <vector>

#include "support/oracle.hpp"
#include "wdp/lattice.hpp"
#include "wdp/roots.hpp"
#include "wdp/symbols.hpp"

using namespace wdp;

TEST_CASE("effective (-2)-class enumeration agrees with the box search") {
  // Counts frozen from the independent bounded search.
  constexpr std::array<std::size_t, 8> kCounts = {0, 120, 63, 36, 20, 10, 4, 1};
  for (int degree = 1; degree <= 7; ++degree) {
    CAPTURE(degree);
    const LatticeModel model = LatticeModel::blowup(degree);
    const auto fast = enumerate_minus_two_classes(model);
    CHECK(fast.size() == kCounts[degree]);
    CHECK(fast == oracle::minus_two_box(model));
    CHECK(std::is_sorted(fast.begin(), fast.end()));
    for (const auto& r : fast) {
      CHECK(model.self(r) == -2);
      CHECK(model.pair(model.canonical_class(), r) == 0);
    }
  }
}

TEST_CASE("rank-two models have the hand-checked (-2) sets") {
  // On the quadric the numeric solutions (1,-1) and (-1,1) pair negatively
  // with one of the rulings, so neither is effective.
  const LatticeModel q = LatticeModel::quadric();
  CHECK(enumerate_minus_two_classes(q).empty());
  const DivisorClass sol({1, -1});
  CHECK(q.self(sol) == -2);
  CHECK(q.pair(q.canonical_class(), sol) == 0);
  CHECK(q.pair(sol, q.basis(0)) < 0);

  const LatticeModel h = LatticeModel::hirzebruch2();
  const auto hr = enumerate_minus_two_classes(h);
  REQUIRE(hr.size() == 1);
  CHECK(hr[0] == h.basis(0));
}

TEST_CASE("maximum configuration sizes") {
  for (int degree = 1; degree <= 7; ++degree)
    CHECK(max_configuration_size(LatticeModel::blowup(degree)) == 9 - degree);
  CHECK(max_configuration_size(LatticeModel::quadric()) == 0);
  CHECK(max_configuration_size(LatticeModel::hirzebruch2()) == 1);
}

TEST_CASE("class symbols round-trip on every enumerated class") {
  for (int degree = 1; degree <= 7; ++degree) {
    const LatticeModel model = LatticeModel::blowup(degree);
    for (const auto& r : enumerate_minus_two_classes(model)) {
      const std::string sym = class_symbol(model, r);
      REQUIRE(!sym.empty());
      CHECK(parse_class_symbol(model, sym) == r);
    }
  }
  const LatticeModel h = LatticeModel::hirzebruch2();
  CHECK(class_symbol(h, h.basis(0)) == "s");
  CHECK(class_symbol(h, h.basis(1)) == "f");
  const LatticeModel q = LatticeModel::quadric();
  CHECK(parse_class_symbol(q, "f1") == q.basis(0));
  CHECK(parse_class_symbol(q, "f2") == q.basis(1));
}

TEST_CASE("symbol parsing rejects malformed and out-of-model input") {
  const LatticeModel d4 = LatticeModel::blowup(4);
  auto code_of = [&](const LatticeModel& m, const std::string& s) {
    try {
      parse_class_symbol(m, s);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::io_error;  // sentinel: no throw
  };
  CHECK(code_of(d4, "M0:2,1") == Errc::parse_error);
  CHECK(code_of(d4, "M0:1,1") == Errc::parse_error);
  CHECK(code_of(d4, "L:1,1") == Errc::parse_error);
  CHECK(code_of(d4, "L:2,1") == Errc::io_error);  // unordered L indices are fine
  CHECK(code_of(d4, "e9") == Errc::invalid_argument);
  CHECK(code_of(d4, "e0") == Errc::io_error);
  CHECK(code_of(d4, "M2:") == Errc::invalid_argument);   // needs at least 6 points
  CHECK(code_of(d4, "M3:1") == Errc::invalid_argument);  // needs 8 points
  CHECK(code_of(d4, "") == Errc::parse_error);
  CHECK(code_of(d4, "M1:1,2") == Errc::parse_error);
  CHECK(code_of(d4, "Q:1") == Errc::parse_error);
  CHECK(code_of(LatticeModel::blowup(3), "M2:") == Errc::io_error);
  CHECK(code_of(LatticeModel::blowup(1), "M3:3") == Errc::io_error);
  CHECK(code_of(LatticeModel::quadric(), "e1") == Errc::invalid_argument);
}

TEST_CASE("configuration validation reports precise diagnostics") {
  const LatticeModel model = LatticeModel::blowup(4);
  auto sym = [&](const std::string& s) { return parse_class_symbol(model, s); };

  CHECK(validate_configuration(model, {}).empty());
  CHECK(validate_configuration(model, {sym("M0:1,2"), sym("M1:3,4,5")}).empty());

  auto first_code = [&](const std::vector<DivisorClass>& roots) {
    const auto issues = validate_configuration(model, roots);
    REQUIRE(!issues.empty());
    return issues.front().code;
  };
  CHECK(first_code({DivisorClass({0, -1, 1, 0, 0, 0})}) == "not_a_root");
  CHECK(first_code({DivisorClass({0, 1, 1, 0})}) == "bad_vector");
  CHECK(first_code({sym("M0:1,2"), sym("M0:1,2")}) == "duplicate_root");
  // (e1-e2) and (e1-e3) pair to -1.
  CHECK(first_code({sym("M0:1,2"), sym("M0:1,3")}) == "bad_pairing");
  // Oversized sets necessarily break the pairing or diagram rules as well
  // (the orthogonal complement of the canonical class has too small a rank),
  // so the size diagnostic is reported alongside, never alone.
  {
    const auto issues =
        validate_configuration(model, {sym("M0:1,2"), sym("M0:2,3"), sym("M0:3,4"),
                                       sym("M0:4,5"), sym("M1:1,2,3"), sym("M1:1,4,5")});
    REQUIRE(!issues.empty());
    bool saw_size = false;
    for (const auto& d : issues) saw_size = saw_size || d.code == "too_many_roots";
    CHECK(saw_size);
  }
}

TEST_CASE("configuration construction sorts roots and rejects invalid input") {
  const LatticeModel model = LatticeModel::blowup(4);
  auto sym = [&](const std::string& s) { return parse_class_symbol(model, s); };
  const Configuration c(model, {sym("M1:3,4,5"), sym("M0:1,2")});
  CHECK(c.size() == 2);
  CHECK(std::is_sorted(c.roots().begin(), c.roots().end()));
  const Configuration reordered(model, {sym("M0:1,2"), sym("M1:3,4,5")});
  CHECK(c.roots() == reordered.roots());

  try {
    Configuration(model, {sym("M0:1,2"), sym("M0:1,3")});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_configuration);
  }
}

TEST_CASE("ADE typing of realizable configurations") {
  auto type_at = [](int degree, const std::vector<std::string>& syms) {
    const LatticeModel model = LatticeModel::blowup(degree);
    std::vector<DivisorClass> roots;
    for (const auto& s : syms) roots.push_back(parse_class_symbol(model, s));
    return ade_type(Configuration(model, roots));
  };
  CHECK(type_at(4, {}) == "");
  CHECK(type_at(4, {"M0:1,2"}) == "A1");
  CHECK(type_at(4, {"M0:1,2", "M0:2,3"}) == "A2");
  CHECK(type_at(4, {"M0:1,2", "M0:2,3", "M0:3,4"}) == "A3");
  CHECK(type_at(4, {"M0:1,2", "M0:3,4"}) == "2A1");
  CHECK(type_at(4, {"M0:2,5", "M1:1,2,3", "M0:3,4"}) == "A3");
  // Branch node: M1:1,2,3 meets each of M0:1,4, M0:2,5, M0:3,6 once.
  CHECK(type_at(3, {"M1:1,2,3", "M0:1,4", "M0:2,5", "M0:3,6"}) == "D4");
  CHECK(type_at(1, {"M1:1,2,3", "M0:1,4", "M0:2,5", "M0:3,6", "M0:6,7"}) == "D5");
  CHECK(type_at(1, {"M1:1,2,3", "M0:1,4", "M0:2,5", "M0:5,7", "M0:3,6", "M0:6,8"}) ==
        "E6");
  // M0:4,8 meets M0:6,8 negatively, so the extended set is rejected outright.
  CHECK_THROWS_AS(type_at(1, {"M1:1,2,3", "M0:1,4", "M0:2,5", "M0:5,7", "M0:3,6",
                              "M0:6,8", "M0:4,8"}),
                  Error);
  CHECK(type_at(2, {"M1:2,3,4", "M1:2,5,6", "M1:3,5,7", "M1:4,6,7"}) == "4A1");
  CHECK(type_at(1, {"M2:1,2", "M3:2"}) == "2A1");
  CHECK(ade_type(Configuration(LatticeModel::hirzebruch2(),
                               {LatticeModel::hirzebruch2().basis(0)})) == "A1");
}

TEST_CASE("ADE typing of raw gram matrices") {
  using Gram = std::vector<std::vector<Coeff>>;
  auto chain = [](int n) {
    Gram g(n, std::vector<Coeff>(n, 0));
    for (int i = 0; i < n; ++i) g[i][i] = -2;
    for (int i = 0; i + 1 < n; ++i) g[i][i + 1] = g[i + 1][i] = 1;
    return g;
  };
  auto with_edge = [](Gram g, int i, int j) {
    g[i][j] = g[j][i] = 1;
    return g;
  };
  auto drop_edge = [](Gram g, int i, int j) {
    g[i][j] = g[j][i] = 0;
    return g;
  };

  CHECK(ade_type_of_gram({}) == "");
  CHECK(ade_type_of_gram(chain(1)) == "A1");
  CHECK(ade_type_of_gram(chain(5)) == "A5");
  // Dn: chain on n-1 nodes plus a leaf on the third node from the end.
  auto dn = [&](int n) {
    Gram g = chain(n);
    g = drop_edge(g, n - 2, n - 1);
    return with_edge(g, n - 3, n - 1);
  };
  CHECK(ade_type_of_gram(dn(4)) == "D4");
  CHECK(ade_type_of_gram(dn(5)) == "D5");
  CHECK(ade_type_of_gram(dn(8)) == "D8");
  // En: chain on n-1 nodes plus a leaf on the third node from the start.
  auto en = [&](int n) {
    Gram g = chain(n);
    g = drop_edge(g, n - 2, n - 1);
    return with_edge(g, 2, n - 1);
  };
  CHECK(ade_type_of_gram(en(6)) == "E6");
  CHECK(ade_type_of_gram(en(7)) == "E7");
  CHECK(ade_type_of_gram(en(8)) == "E8");
  // Disconnected sum ordering: rank first, then E > D > A, multiplicities.
  {
    const Gram a1 = chain(1);
    Gram g(5, std::vector<Coeff>(5, 0));
    auto put = [&](const Gram& block, int at) {
      for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = 0; j < block.size(); ++j)
          g[at + i][at + j] = block[i][j];
    };
    put(a1, 0);
    put(chain(3), 1);
    put(a1, 4);
    CHECK(ade_type_of_gram(g) == "A3+2A1");
  }

  // A 9-node chain exceeds E8 territory: still a valid diagram type name A9.
  CHECK(ade_type_of_gram(chain(9)) == "A9");

  // Invalid diagrams.
  auto expect_invalid = [](const Gram& g) {
    try {
      ade_type_of_gram(g);
      return false;
    } catch (const Error& e) {
      return e.code() == Errc::invalid_configuration;
    }
  };
  CHECK(expect_invalid(with_edge(chain(3), 0, 2)));  // triangle
  {
    Gram star = chain(5);
    star = drop_edge(star, 1, 2);
    star = drop_edge(star, 2, 3);
    star = drop_edge(star, 3, 4);
    star = with_edge(star, 0, 2);
    star = with_edge(star, 0, 3);
    star = with_edge(star, 0, 4);
    CHECK(expect_invalid(star));  // degree-4 node
  }
  {
    // Chain 0..5 with extra leaves on nodes 1 and 4: two degree-3 nodes.
    Gram g(8, std::vector<Coeff>(8, 0));
    for (int i = 0; i < 8; ++i) g[i][i] = -2;
    for (int i = 0; i + 1 < 6; ++i) g = with_edge(g, i, i + 1);
    g = with_edge(g, 1, 6);
    g = with_edge(g, 4, 7);
    CHECK(expect_invalid(g));
  }
  {
    // Arms (2,2,2) around a center: not in the A/D/E list.
    Gram g(7, std::vector<Coeff>(7, 0));
    for (int i = 0; i < 7; ++i) g[i][i] = -2;
    g = with_edge(g, 0, 1);
    g = with_edge(g, 1, 2);
    g = with_edge(g, 0, 3);
    g = with_edge(g, 3, 4);
    g = with_edge(g, 0, 5);
    g = with_edge(g, 5, 6);
    CHECK(expect_invalid(g));
  }
  CHECK_THROWS_AS(ade_type_of_gram({{-2, 2}, {2, -2}}), Error);
  CHECK_THROWS_AS(ade_type_of_gram({{-1}}), Error);
}
