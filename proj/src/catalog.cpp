#include "wdp/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "wdp/descent.hpp"
#include "wdp/lines.hpp"
#include "wdp/minimality.hpp"
#include "wdp/symbols.hpp"

namespace wdp {

namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, path + ": " + e.what());
  }
  return j;
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array())
    throw Error(Errc::parse_error, where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string())
      throw Error(Errc::parse_error, where + ": expected an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<DivisorClass> parse_symbols(const LatticeModel& model,
                                        const std::vector<std::string>& symbols) {
  std::vector<DivisorClass> out;
  for (const auto& s : symbols) out.push_back(parse_class_literal(model, s));
  return out;
}

// Entries are symbols or raw coefficient arrays; arrays cover classes with no
// symbolic name (the degree-1 cubic witnesses).
std::vector<std::string> class_literal_list(const json& j, const std::string& where) {
  if (!j.is_array())
    throw Error(Errc::parse_error, where + ": expected an array");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (item.is_string())
      out.push_back(item.get<std::string>());
    else if (item.is_array())
      out.push_back(item.dump());
    else
      throw Error(Errc::parse_error, where + ": expected symbols or coefficient arrays");
  }
  return out;
}

std::string row_label(const std::string& table, int degree, const std::string& type) {
  return table + " degree " + std::to_string(degree) + " " + type;
}

void check_type(VerifyReport& rep, const CatalogBundle& bundle,
                const Configuration& config, const std::string& where,
                const std::string& expected_type) {
  ++rep.checks;
  const std::string base = ade_type(config);
  const int count = static_cast<int>(lines(config).size());
  try {
    const std::string resolved =
        bundle.table3.resolve_type(config.model().degree(), base, count);
    if (resolved != expected_type)
      rep.issues.push_back({where, "computed type " + resolved + " with " +
                                       std::to_string(count) + " lines, tabulated as " +
                                       expected_type});
  } catch (const Error& e) {
    rep.issues.push_back({where, std::string("catalog lookup failed: ") + e.what()});
  }
}

}  // namespace

std::string base_singularity_type(const std::string& singularities) {
  const auto n = singularities.size();
  if (n >= 3 && singularities[n - 1] == ')' && singularities[n - 3] == '(')
    return singularities.substr(0, n - 3);
  return singularities;
}

Catalog Catalog::load(const std::string& tsv_path) {
  std::ifstream in(tsv_path);
  if (!in) throw Error(Errc::io_error, "cannot open " + tsv_path);
  std::vector<CatalogRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream fields(line);
    std::string deg, sing, count;
    if (!std::getline(fields, deg, '\t') || !std::getline(fields, sing, '\t') ||
        !std::getline(fields, count))
      throw Error(Errc::parse_error, tsv_path + ": malformed row: " + line);
    if (deg == "degree") continue;  // header
    try {
      rows.push_back({std::stoi(deg), sing, std::stoi(count)});
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, tsv_path + ": malformed row: " + line);
    }
  }
  return from_rows(std::move(rows));
}

Catalog Catalog::from_rows(std::vector<CatalogRow> rows) {
  std::set<std::pair<int, std::string>> keys;
  for (const auto& r : rows) {
    if (r.degree < 1 || r.degree > 8)
      throw Error(Errc::parse_error, "catalog degree out of range: " + r.singularities);
    if (r.line_count < 0)
      throw Error(Errc::parse_error, "catalog line count negative: " + r.singularities);
    if (!keys.insert({r.degree, r.singularities}).second)
      throw Error(Errc::parse_error,
                  "duplicate catalog row: degree " + std::to_string(r.degree) + " " +
                      r.singularities);
  }
  // Suffixed types come in exact (1)/(2) pairs with distinct counts,
  // the (1) row strictly smaller, and no bare row of the same base.
  std::map<std::pair<int, std::string>, std::array<const CatalogRow*, 2>> pairs;
  for (const auto& r : rows) {
    const std::string base = base_singularity_type(r.singularities);
    if (base == r.singularities) continue;
    const std::string suffix = r.singularities.substr(base.size());
    if (suffix != "(1)" && suffix != "(2)")
      throw Error(Errc::parse_error, "bad type suffix: " + r.singularities);
    pairs[{r.degree, base}][suffix == "(1)" ? 0 : 1] = &r;
  }
  for (const auto& [key, pr] : pairs) {
    if (!pr[0] || !pr[1])
      throw Error(Errc::parse_error,
                  "incomplete suffix pair: degree " + std::to_string(key.first) + " " +
                      key.second);
    if (keys.count({key.first, key.second}))
      throw Error(Errc::parse_error,
                  "type listed both bare and suffixed: " + key.second);
    if (pr[0]->line_count >= pr[1]->line_count)
      throw Error(Errc::parse_error,
                  "suffix pair out of order: degree " + std::to_string(key.first) + " " +
                      key.second);
  }
  Catalog c;
  c.rows_ = std::move(rows);
  return c;
}

const CatalogRow* Catalog::find(int degree, const std::string& singularities) const {
  for (const auto& r : rows_)
    if (r.degree == degree && r.singularities == singularities) return &r;
  return nullptr;
}

std::string Catalog::resolve_type(int degree, const std::string& base_ade,
                                  int line_count) const {
  if (const CatalogRow* r = find(degree, base_ade)) {
    if (r->line_count == line_count) return base_ade;
    throw Error(Errc::catalog_miss,
                "degree " + std::to_string(degree) + " type " + base_ade + " has " +
                    std::to_string(r->line_count) + " lines in the catalog, not " +
                    std::to_string(line_count));
  }
  for (int k = 1; k <= 2; ++k) {
    const std::string s = base_ade + "(" + std::to_string(k) + ")";
    if (const CatalogRow* r = find(degree, s); r && r->line_count == line_count)
      return s;
  }
  throw Error(Errc::catalog_miss,
              "no catalog row for degree " + std::to_string(degree) + " type " +
                  base_ade + " with " + std::to_string(line_count) + " lines");
}

LatticeModel NamedConfiguration::make_model() const {
  return LatticeModel(degree, shape);
}

Configuration NamedConfiguration::make_configuration() const {
  const LatticeModel model = make_model();
  return Configuration(model, parse_symbols(model, root_symbols));
}

CatalogBundle load_bundle(const std::string& data_dir) {
  CatalogBundle bundle;
  bundle.table3 = Catalog::load(data_dir + "/table3.tsv");

  const json t1 = load_json_file(data_dir + "/table1.json");
  for (const auto& row : t1.at("rows")) {
    Table1Row r;
    r.degree = row.at("degree").get<int>();
    r.type = row.at("type").get<std::string>();
    r.root_symbols = string_list(row.at("roots"), "table1.json roots");
    bundle.table1.push_back(std::move(r));
  }

  const json t2 = load_json_file(data_dir + "/table2.json");
  for (const auto& row : t2.at("rows")) {
    Table2Row r;
    r.degree = row.at("degree").get<int>();
    r.type = row.at("type").get<std::string>();
    r.alpha = row.at("alpha").get<int>();
    r.root_symbols = string_list(row.at("roots"), "table2.json roots");
    r.beta_line_symbols =
        class_literal_list(row.at("beta_lines"), "table2.json beta_lines");
    bundle.table2.push_back(std::move(r));
  }

  const json named = load_json_file(data_dir + "/named_configs.json");
  for (const auto& row : named.at("configs")) {
    NamedConfiguration c;
    c.name = row.at("name").get<std::string>();
    c.source = "named_configs";
    c.degree = row.at("degree").get<int>();
    c.shape = row.contains("shape") ? shape_from_name(row.at("shape").get<std::string>())
                                    : Shape::BlowupOfP2;
    c.type = row.at("type").get<std::string>();
    c.root_symbols = string_list(row.at("roots"), "named_configs.json roots");
    bundle.extras.push_back(std::move(c));
  }
  return bundle;
}

std::vector<NamedConfiguration> all_named_configurations(const CatalogBundle& bundle) {
  std::vector<NamedConfiguration> out;
  for (const auto& r : bundle.table1) {
    NamedConfiguration c;
    c.name = row_label("table1", r.degree, r.type);
    c.source = "table1";
    c.degree = r.degree;
    c.type = r.type;
    c.root_symbols = r.root_symbols;
    out.push_back(std::move(c));
  }
  for (const auto& r : bundle.table2) {
    NamedConfiguration c;
    c.name = row_label("table2", r.degree, r.type);
    c.source = "table2";
    c.degree = r.degree;
    c.type = r.type;
    c.root_symbols = r.root_symbols;
    out.push_back(std::move(c));
  }
  for (const auto& r : bundle.extras) out.push_back(r);
  return out;
}

void VerifyReport::merge(const VerifyReport& other) {
  checks += other.checks;
  issues.insert(issues.end(), other.issues.begin(), other.issues.end());
}

VerifyReport verify_table1(const CatalogBundle& bundle) {
  VerifyReport rep;
  for (const auto& row : bundle.table1) {
    const std::string where = row_label("table1", row.degree, row.type);
    const LatticeModel model = LatticeModel::blowup(row.degree);
    const Configuration config(model, parse_symbols(model, row.root_symbols));
    check_type(rep, bundle, config, where, row.type);

    const int n = model.points();
    std::vector<DivisorClass> expected;
    for (int i = 2; i <= n; ++i) {
      expected.push_back(model.basis(i));
      expected.push_back(model.basis(0) - model.basis(1) - model.basis(i));
    }
    std::sort(expected.begin(), expected.end());
    ++rep.checks;
    const auto meeting = lines_meeting_roots(config);
    if (meeting != expected)
      rep.issues.push_back({where, "meeting lines differ from {e_i, L:1,i}"});

    // The union of the meeting lines is a multiple of the pencil class
    // e0-e1 with square zero.
    ++rep.checks;
    DivisorClass sum = model.zero();
    for (const auto& e : meeting) sum += e;
    const DivisorClass pencil = model.basis(0) - model.basis(1);
    if (!(sum == static_cast<Coeff>(n - 1) * pencil) || model.self(sum) != 0)
      rep.issues.push_back(
          {where, "meeting-line union is " + sum.to_string() + ", expected " +
                      std::to_string(n - 1) + "*(e0-e1) of square zero"});

    ++rep.checks;
    if (!is_quasi_minimal(config).verdict)
      rep.issues.push_back({where, "configuration fails the quasi-minimality test"});
  }
  return rep;
}

VerifyReport verify_table2(const CatalogBundle& bundle) {
  VerifyReport rep;
  for (const auto& row : bundle.table2) {
    const std::string where = row_label("table2", row.degree, row.type);
    const LatticeModel model = LatticeModel::blowup(row.degree);
    const Configuration config(model, parse_symbols(model, row.root_symbols));
    check_type(rep, bundle, config, where, row.type);

    ++rep.checks;
    const AlphaBetaReport ab = alpha_beta(config, row.alpha);
    auto expected = parse_symbols(model, row.beta_line_symbols);
    std::sort(expected.begin(), expected.end());
    if (ab.beta_lines != expected)
      rep.issues.push_back({where, "beta lines differ from the tabulated list"});

    ++rep.checks;
    if (!ab.pairwise_disjoint || !ab.witness_holds)
      rep.issues.push_back({where, "beta lines are not disjoint witnesses"});

    ++rep.checks;
    if (is_quasi_minimal(config).verdict)
      rep.issues.push_back({where, "configuration passes the quasi-minimality test"});
  }
  return rep;
}

VerifyReport verify_table3(const CatalogBundle& bundle) {
  VerifyReport rep;
  for (const auto& named : all_named_configurations(bundle)) {
    const std::string where = named.name;
    try {
      const Configuration config = named.make_configuration();
      check_type(rep, bundle, config, where, named.type);
    } catch (const Error& e) {
      ++rep.checks;
      rep.issues.push_back({where, std::string("configuration rejected: ") + e.what()});
    }
  }
  return rep;
}

VerifyReport verify_incidence(int degree) {
  if (degree != 5 && degree != 6)
    throw Error(Errc::invalid_argument, "incidence checks cover degrees 5 and 6");
  VerifyReport rep;
  const LatticeModel model = LatticeModel::blowup(degree);
  const Configuration smooth(model, {});
  const LineSet set = lines(smooth);
  const std::string where = "incidence degree " + std::to_string(degree);
  const std::size_t want = static_cast<std::size_t>(8 - degree);

  for (const auto& e : set.classes) {
    ++rep.checks;
    std::size_t met = 0;
    for (const auto& o : set.classes)
      if (!(o == e) && model.pair(e, o) == 1) ++met;
    if (met != want)
      rep.issues.push_back(
          {where, "line " + e.to_string() + " meets " + std::to_string(met) +
                      " lines, expected " + std::to_string(want)});
  }
  for (const auto& fc : fiber_classes(smooth)) {
    ++rep.checks;
    if (fc.decompositions.size() != want)
      rep.issues.push_back(
          {where, "fiber " + fc.fiber.to_string() + " has " +
                      std::to_string(fc.decompositions.size()) +
                      " decompositions, expected " + std::to_string(want)});
  }
  return rep;
}

namespace {

// DFS state shared across the enumeration of valid root subsets.
struct EnumerationContext {
  const LatticeModel& model;
  std::vector<DivisorClass> roots;
  std::vector<DivisorClass> all_lines;
  std::vector<std::vector<Coeff>> rr;  // root x root pairings
  std::vector<std::vector<Coeff>> lr;  // line x root pairings
  std::vector<std::vector<Coeff>> ll;  // line x line pairings
  int max_roots = 0;
  std::uint64_t budget = 0;

  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<int> chosen;

  struct TypeAgg {
    std::vector<DivisorClass> representative;
    std::uint64_t configurations = 0;
    std::set<std::vector<std::array<int, 4>>> signatures;
  };
  std::map<std::pair<std::string, int>, TypeAgg> agg;

  bool ade_valid_with(int extra) const {
    std::vector<int> idx = chosen;
    idx.push_back(extra);
    const std::size_t k = idx.size();
    std::vector<std::vector<Coeff>> gram(k, std::vector<Coeff>(k, -2));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i != j) gram[i][j] = rr[idx[i]][idx[j]];
    try {
      ade_type_of_gram(gram);
      return true;
    } catch (const Error&) {
      return false;
    }
  }

  void record(const std::vector<int>& alive) {
    std::string type;
    {
      const std::size_t k = chosen.size();
      std::vector<std::vector<Coeff>> gram(k, std::vector<Coeff>(k, -2));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          if (i != j) gram[i][j] = rr[chosen[i]][chosen[j]];
      type = ade_type_of_gram(gram);
    }
    std::vector<std::array<int, 4>> sig;
    sig.reserve(alive.size());
    for (int a : alive) {
      std::array<int, 4> s{0, 0, 0, 0};
      for (int r : chosen) {
        if (lr[a][r] == 1) ++s[0];
        if (lr[a][r] == 2) ++s[1];
      }
      for (int b : alive) {
        if (b == a) continue;
        if (ll[a][b] == 1) ++s[2];
        if (ll[a][b] == 2) ++s[3];
      }
      sig.push_back(s);
    }
    std::sort(sig.begin(), sig.end());

    auto& slot = agg[{type, static_cast<int>(alive.size())}];
    if (slot.configurations == 0)
      for (int r : chosen) slot.representative.push_back(roots[r]);
    ++slot.configurations;
    slot.signatures.insert(std::move(sig));
  }

  void dfs(int first, const std::vector<int>& alive) {
    if (budget != 0 && nodes >= budget) {
      exhausted = true;
      return;
    }
    ++nodes;
    record(alive);
    if (static_cast<int>(chosen.size()) >= max_roots) return;
    for (int i = first; i < static_cast<int>(roots.size()); ++i) {
      bool compatible = true;
      for (int c : chosen) {
        const Coeff p = rr[c][i];
        if (p != 0 && p != 1) {
          compatible = false;
          break;
        }
      }
      if (!compatible || !ade_valid_with(i)) continue;
      std::vector<int> next_alive;
      next_alive.reserve(alive.size());
      for (int a : alive)
        if (lr[a][i] >= 0) next_alive.push_back(a);
      chosen.push_back(i);
      dfs(i + 1, next_alive);
      chosen.pop_back();
      if (exhausted) return;
    }
  }
};

}  // namespace

EnumerationResult enumerate_configurations(const LatticeModel& model, int max_roots,
                                           std::uint64_t node_budget,
                                           const Catalog* catalog) {
  EnumerationContext ctx{model,
                         enumerate_minus_two_classes(model),
                         enumerate_minus_one_classes(model),
                         {},
                         {},
                         {},
                         0,
                         0,
                         0,
                         false,
                         {},
                         {}};
  ctx.max_roots = std::clamp(max_roots, 0, max_configuration_size(model));
  ctx.budget = node_budget;

  const std::size_t nr = ctx.roots.size(), nl = ctx.all_lines.size();
  ctx.rr.assign(nr, std::vector<Coeff>(nr, 0));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nr; ++j)
      ctx.rr[i][j] = model.pair(ctx.roots[i], ctx.roots[j]);
  ctx.lr.assign(nl, std::vector<Coeff>(nr, 0));
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nr; ++j)
      ctx.lr[i][j] = model.pair(ctx.all_lines[i], ctx.roots[j]);
  ctx.ll.assign(nl, std::vector<Coeff>(nl, 0));
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nl; ++j)
      ctx.ll[i][j] = model.pair(ctx.all_lines[i], ctx.all_lines[j]);

  std::vector<int> alive(nl);
  for (std::size_t i = 0; i < nl; ++i) alive[i] = static_cast<int>(i);
  ctx.dfs(0, alive);

  EnumerationResult result;
  result.nodes = ctx.nodes;
  result.budget_exhausted = ctx.exhausted;
  for (auto& [key, slot] : ctx.agg) {
    EnumeratedType t;
    t.ade = key.first;
    t.line_count = key.second;
    t.representative = std::move(slot.representative);
    t.configurations = slot.configurations;
    t.signature_variants = slot.signatures.size();
    if (catalog) {
      if (t.ade.empty()) {
        t.catalog_type = "smooth";
      } else {
        try {
          t.catalog_type = catalog->resolve_type(model.degree(), t.ade, t.line_count);
        } catch (const Error&) {
          t.catalog_type = std::nullopt;
        }
      }
    }
    result.types.push_back(std::move(t));
  }
  return result;
}

}  // namespace wdp
