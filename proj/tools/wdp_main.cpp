// Command line front end over the lattice library: enumeration, line sets,
// classification, minimality tests, table verification, and the
// configuration search. Exit codes: 0 success, 1 verification mismatch,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wdp/catalog.hpp"
#include "wdp/descent.hpp"
#include "wdp/lattice.hpp"
#include "wdp/lines.hpp"
#include "wdp/minimality.hpp"
#include "wdp/roots.hpp"
#include "wdp/symbols.hpp"

namespace {

using nlohmann::json;
using namespace wdp;

#ifndef WDP_DEFAULT_DATA_DIR
#define WDP_DEFAULT_DATA_DIR "data"
#endif

struct Options {
  int degree = 0;
  bool degree_set = false;
  std::string shape;
  std::string roots_arg;
  std::string galois_file;
  int alpha = 0;
  bool alpha_set = false;
  int max_roots = -1;
  std::uint64_t budget = 0;
  bool budget_set = false;
  bool json_out = false;
  bool flag_minimal = false;
  bool flag_section = false;
  bool flag_rational_point = false;
  std::string tables = "all";
  std::string data_dir = WDP_DEFAULT_DATA_DIR;
  std::string reflect_root;
  std::string reflect_class;
};

LatticeModel make_model(const Options& opt) {
  if (!opt.degree_set)
    throw Error(Errc::invalid_argument, "--degree is required");
  if (!opt.shape.empty()) return LatticeModel(opt.degree, shape_from_name(opt.shape));
  if (opt.degree == 8)
    throw Error(Errc::invalid_argument,
                "degree 8 requires --shape QuadricP1xP1 or Hirzebruch2");
  return LatticeModel::blowup(opt.degree);
}

DivisorClass parse_class_json(const LatticeModel& model, const json& j) {
  if (j.is_string()) return parse_class_symbol(model, j.get<std::string>());
  if (j.is_array()) {
    std::vector<Coeff> v;
    for (const auto& x : j) {
      if (!x.is_number_integer())
        throw Error(Errc::parse_error, "class vector entries must be integers");
      v.push_back(x.get<Coeff>());
    }
    DivisorClass d(std::move(v));
    check_class_vector(model, d);
    return d;
  }
  throw Error(Errc::parse_error, "a class must be a symbol string or a coefficient array");
}

std::vector<DivisorClass> load_roots(const LatticeModel& model, const Options& opt) {
  if (opt.roots_arg.empty()) return {};
  std::string text = opt.roots_arg;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw Error(Errc::parse_error, "--roots argument is blank");
  if (text[first] != '[' && text[first] != '{') {
    std::ifstream in(text);
    if (!in) throw Error(Errc::io_error, "cannot open roots file " + text);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad roots JSON: ") + e.what());
  }
  const json* roots = &j;
  if (j.is_object()) {
    if (j.contains("degree") && j.at("degree").get<int>() != model.degree())
      throw Error(Errc::invalid_argument,
                  "roots JSON declares degree " + std::to_string(j.at("degree").get<int>()) +
                      ", flags give " + std::to_string(model.degree()));
    if (j.contains("shape") &&
        shape_from_name(j.at("shape").get<std::string>()) != model.shape())
      throw Error(Errc::invalid_argument, "roots JSON shape disagrees with flags");
    if (!j.contains("roots"))
      throw Error(Errc::parse_error, "roots JSON object lacks a \"roots\" key");
    roots = &j.at("roots");
  }
  if (!roots->is_array())
    throw Error(Errc::parse_error, "roots must be an array");
  std::vector<DivisorClass> out;
  for (const auto& item : *roots) out.push_back(parse_class_json(model, item));
  return out;
}

json class_json(const LatticeModel& model, const DivisorClass& d) {
  json j;
  const std::string sym = class_symbol(model, d);
  j["symbol"] = sym.empty() ? json() : json(sym);
  j["vector"] = d.c;
  return j;
}

std::string class_human(const LatticeModel& model, const DivisorClass& d) {
  const std::string sym = class_symbol(model, d);
  return sym.empty() ? d.to_string() : sym;
}

std::string join_classes(const LatticeModel& model, const std::vector<DivisorClass>& v) {
  if (v.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += class_human(model, v[i]);
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_roots(const Options& opt) {
  const LatticeModel model = make_model(opt);
  const auto roots = enumerate_minus_two_classes(model);
  if (opt.json_out) {
    json j;
    j["schema"] = "wdp.roots/1";
    j["degree"] = model.degree();
    j["shape"] = shape_name(model.shape());
    j["count"] = roots.size();
    j["roots"] = json::array();
    for (const auto& r : roots) j["roots"].push_back(class_json(model, r));
    emit(j);
  } else {
    std::cout << "count=" << roots.size() << "\n";
    for (const auto& r : roots)
      std::cout << class_human(model, r) << "\t" << r.to_string() << "\n";
  }
  return 0;
}

int run_lines(const Options& opt) {
  const LatticeModel model = make_model(opt);
  const Configuration config(model, load_roots(model, opt));
  const LineSet set = lines(config);
  if (opt.json_out) {
    json j;
    j["schema"] = "wdp.lines/1";
    j["degree"] = model.degree();
    j["shape"] = shape_name(model.shape());
    j["count"] = set.classes.size();
    j["lines"] = json::array();
    for (const auto& e : set.classes) j["lines"].push_back(class_json(model, e));
    emit(j);
  } else {
    std::cout << "count=" << set.classes.size() << "\n";
    for (const auto& e : set.classes)
      std::cout << class_human(model, e) << "\t" << e.to_string() << "\n";
  }
  return 0;
}

int run_classify(const Options& opt) {
  const LatticeModel model = make_model(opt);
  const Configuration config(model, load_roots(model, opt));
  const std::string base = ade_type(config);
  const int count = static_cast<int>(lines(config).size());

  std::string resolved;
  bool matched = false;
  if (base.empty()) {
    resolved = "smooth";
    matched = true;
  } else {
    try {
      const Catalog catalog = Catalog::load(opt.data_dir + "/table3.tsv");
      resolved = catalog.resolve_type(model.degree(), base, count);
      matched = true;
    } catch (const Error& e) {
      if (e.code() == Errc::io_error) throw;
      resolved = base;
    }
  }
  if (opt.json_out) {
    json j;
    j["schema"] = "wdp.classify/1";
    j["degree"] = model.degree();
    j["shape"] = shape_name(model.shape());
    j["base_type"] = base;
    j["type"] = resolved;
    j["lines"] = count;
    j["catalog_match"] = matched;
    emit(j);
  } else {
    std::cout << "degree=" << model.degree() << " type=" << resolved
              << " lines=" << count << "\n";
  }
  return 0;
}

int run_quasi_minimal(const Options& opt) {
  const LatticeModel model = make_model(opt);
  const Configuration config(model, load_roots(model, opt));
  const QuasiMinimalityReport rep = is_quasi_minimal(config);
  std::optional<AlphaBetaReport> ab;
  if (opt.alpha_set) ab = alpha_beta(config, opt.alpha);

  if (opt.json_out) {
    json j;
    j["schema"] = "wdp.quasi-minimal/1";
    j["degree"] = model.degree();
    j["quasi_minimal"] = rep.verdict;
    j["type_check"] = rep.type_check;
    j["witness"] = rep.witness ? class_json(model, *rep.witness) : json();
    if (ab) {
      json a;
      a["alpha"] = ab->alpha;
      a["beta"] = ab->beta_lines.size();
      a["beta_lines"] = json::array();
      for (const auto& e : ab->beta_lines) a["beta_lines"].push_back(class_json(model, e));
      a["pairwise_disjoint"] = ab->pairwise_disjoint;
      a["witness_holds"] = ab->witness_holds;
      j["alpha_beta"] = a;
    } else {
      j["alpha_beta"] = json();
    }
    emit(j);
  } else {
    std::cout << "quasi_minimal=" << (rep.verdict ? "true" : "false")
              << " type_check=" << (rep.type_check ? "true" : "false") << " witness="
              << (rep.witness ? class_human(model, *rep.witness) : std::string("-"))
              << "\n";
    if (ab)
      std::cout << "alpha=" << ab->alpha << " beta=" << ab->beta_lines.size()
                << " pairwise_disjoint=" << (ab->pairwise_disjoint ? "true" : "false")
                << " witness_holds=" << (ab->witness_holds ? "true" : "false")
                << " beta_lines=" << join_classes(model, ab->beta_lines) << "\n";
  }
  return 0;
}

std::vector<Matrix> load_galois(const std::string& path, const LatticeModel& model) {
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open galois file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad galois JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("generators"))
    throw Error(Errc::parse_error, "galois JSON lacks a \"generators\" key");
  std::vector<Matrix> out;
  for (const auto& gj : j.at("generators")) {
    Matrix m;
    if (!gj.is_array())
      throw Error(Errc::parse_error, "generator must be an array of rows");
    for (const auto& row : gj) {
      if (!row.is_array())
        throw Error(Errc::parse_error, "generator row must be an array");
      std::vector<Coeff> r;
      for (const auto& x : row) {
        if (!x.is_number_integer())
          throw Error(Errc::parse_error, "generator entries must be integers");
        r.push_back(x.get<Coeff>());
      }
      m.push_back(std::move(r));
    }
    if (m.size() != static_cast<std::size_t>(model.rank()))
      throw Error(Errc::parse_error, "generator size disagrees with the model rank");
    out.push_back(std::move(m));
  }
  return out;
}

int run_minimal(const Options& opt) {
  const LatticeModel model = make_model(opt);
  const Configuration config(model, load_roots(model, opt));
  const GaloisAction action =
      GaloisAction::make(config, load_galois(opt.galois_file, model));
  const MinimalityReport rep = is_minimal(config, action);
  const int inv_rank = invariant_rank(action);

  if (opt.json_out) {
    json j;
    j["schema"] = "wdp.minimal/1";
    j["degree"] = model.degree();
    j["minimal"] = rep.minimal;
    j["witness_orbit"] = json::array();
    for (const auto& e : rep.witness_orbit)
      j["witness_orbit"].push_back(class_json(model, e));
    j["invariant_rank"] = inv_rank;
    j["group_order"] = action.group_order();
    emit(j);
  } else {
    std::cout << "minimal=" << (rep.minimal ? "true" : "false")
              << " invariant_rank=" << inv_rank << " group_order=" << action.group_order()
              << " witness_orbit=" << join_classes(model, rep.witness_orbit) << "\n";
  }
  return 0;
}

int run_reflect(const Options& opt) {
  const LatticeModel model = make_model(opt);
  if (opt.reflect_root.empty() || opt.reflect_class.empty())
    throw Error(Errc::invalid_argument, "reflect requires ROOT and CLASS arguments");
  auto parse_arg = [&](const std::string& s) {
    if (s.front() != '[') return parse_class_symbol(model, s);
    try {
      return parse_class_json(model, json::parse(s));
    } catch (const json::exception& e) {
      throw Error(Errc::parse_error, std::string("bad class vector: ") + e.what());
    }
  };
  const DivisorClass root = parse_arg(opt.reflect_root);
  const DivisorClass cls = parse_arg(opt.reflect_class);
  const DivisorClass image = reflect(model, root, cls);
  if (opt.json_out) {
    json j;
    j["schema"] = "wdp.reflect/1";
    j["degree"] = model.degree();
    j["root"] = class_json(model, root);
    j["class"] = class_json(model, cls);
    j["image"] = class_json(model, image);
    emit(j);
  } else {
    std::cout << class_human(model, image) << "\t" << image.to_string() << "\n";
  }
  return 0;
}

int run_verdict(const Options& opt) {
  if (!opt.degree_set)
    throw Error(Errc::invalid_argument, "--degree is required");
  const CylinderVerdict v = cylinder_verdict(opt.degree, opt.flag_minimal,
                                             opt.flag_section, opt.flag_rational_point);
  if (opt.json_out) {
    json j;
    j["schema"] = "wdp.verdict/1";
    j["degree"] = opt.degree;
    j["a1_cylinder"] = v.a1_cylinder;
    j["a2_plane"] = v.a2_plane;
    emit(j);
  } else {
    std::cout << "a1_cylinder=" << (v.a1_cylinder ? "true" : "false")
              << " a2_plane=" << (v.a2_plane ? "true" : "false") << "\n";
  }
  return 0;
}

int run_enumerate(const Options& opt) {
  const LatticeModel model = make_model(opt);
  if (model.shape() == Shape::BlowupOfP2 && model.degree() <= 3 && !opt.budget_set)
    throw Error(Errc::invalid_argument,
                "exhaustive enumeration below degree 4 requires an explicit --budget");
  const int max_roots =
      opt.max_roots < 0 ? max_configuration_size(model) : opt.max_roots;
  const Catalog catalog = Catalog::load(opt.data_dir + "/table3.tsv");
  const EnumerationResult result =
      enumerate_configurations(model, max_roots, opt.budget, &catalog);

  if (opt.json_out) {
    json j;
    j["schema"] = "wdp.enumerate/1";
    j["degree"] = model.degree();
    j["shape"] = shape_name(model.shape());
    j["nodes"] = result.nodes;
    j["budget_exhausted"] = result.budget_exhausted;
    j["types"] = json::array();
    for (const auto& t : result.types) {
      json tj;
      tj["ade"] = t.ade;
      tj["lines"] = t.line_count;
      tj["configurations"] = t.configurations;
      tj["signature_variants"] = t.signature_variants;
      tj["catalog_type"] = t.catalog_type ? json(*t.catalog_type) : json();
      tj["representative"] = json::array();
      for (const auto& r : t.representative)
        tj["representative"].push_back(class_json(model, r));
      j["types"].push_back(tj);
    }
    emit(j);
  } else {
    for (const auto& t : result.types)
      std::cout << "type=" << (t.ade.empty() ? "-" : t.ade) << " lines=" << t.line_count
                << " configurations=" << t.configurations
                << " variants=" << t.signature_variants
                << " catalog=" << (t.catalog_type ? *t.catalog_type : std::string("MISS"))
                << "\n";
    std::cout << "nodes=" << result.nodes << " budget_exhausted="
              << (result.budget_exhausted ? "true" : "false") << "\n";
  }
  if (result.budget_exhausted) {
    std::cerr << "error: node budget exhausted, result is partial\n";
    return 2;
  }
  return 0;
}

int run_verify(const Options& opt) {
  const CatalogBundle bundle = load_bundle(opt.data_dir);
  std::vector<std::pair<std::string, VerifyReport>> reports;
  const bool all = opt.tables == "all";
  if (all || opt.tables.find('1') != std::string::npos)
    reports.emplace_back("table1", verify_table1(bundle));
  if (all || opt.tables.find('2') != std::string::npos)
    reports.emplace_back("table2", verify_table2(bundle));
  if (all || opt.tables.find('3') != std::string::npos)
    reports.emplace_back("table3", verify_table3(bundle));
  if (all || opt.tables.find("incidence") != std::string::npos) {
    VerifyReport inc = verify_incidence(5);
    inc.merge(verify_incidence(6));
    reports.emplace_back("incidence", inc);
  }
  if (reports.empty())
    throw Error(Errc::invalid_argument,
                "--tables expects a combination of 1, 2, 3, incidence, or all");

  bool ok = true;
  int checks = 0;
  for (const auto& [name, rep] : reports) {
    ok = ok && rep.ok();
    checks += rep.checks;
  }
  if (opt.json_out) {
    json j;
    j["schema"] = "wdp.verify/1";
    j["checks"] = checks;
    j["ok"] = ok;
    j["reports"] = json::array();
    for (const auto& [name, rep] : reports) {
      json rj;
      rj["table"] = name;
      rj["checks"] = rep.checks;
      rj["issues"] = json::array();
      for (const auto& issue : rep.issues) {
        json ij;
        ij["where"] = issue.where;
        ij["message"] = issue.message;
        rj["issues"].push_back(ij);
      }
      j["reports"].push_back(rj);
    }
    emit(j);
  } else {
    for (const auto& [name, rep] : reports) {
      std::cout << name << ": checks=" << rep.checks << " issues=" << rep.issues.size()
                << "\n";
      for (const auto& issue : rep.issues)
        std::cout << "  [" << issue.where << "] " << issue.message << "\n";
    }
    std::cout << "ok=" << (ok ? "true" : "false") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact lattice computations for weak del Pezzo surfaces"};
  app.require_subcommand(1);

  auto add_model_flags = [&](CLI::App* cmd) {
    cmd->add_option("--degree", opt.degree, "surface degree")
        ->check(CLI::Range(1, 8))
        ->each([&](const std::string&) { opt.degree_set = true; });
    cmd->add_option("--shape", opt.shape,
                    "lattice shape: BlowupOfP2, QuadricP1xP1, Hirzebruch2");
    cmd->add_flag("--json", opt.json_out, "machine readable output");
  };
  auto add_roots_flag = [&](CLI::App* cmd) {
    cmd->add_option("--roots", opt.roots_arg,
                    "declared (-2)-curves: inline JSON or a file path");
  };

  CLI::App* roots_cmd = app.add_subcommand("roots", "enumerate the effective (-2)-classes");
  add_model_flags(roots_cmd);

  CLI::App* lines_cmd = app.add_subcommand("lines", "list the lines of a configuration");
  add_model_flags(lines_cmd);
  add_roots_flag(lines_cmd);

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Dynkin type, line count, catalog match");
  add_model_flags(classify_cmd);
  add_roots_flag(classify_cmd);
  classify_cmd->add_option("--data-dir", opt.data_dir, "catalog data directory");

  CLI::App* qm_cmd = app.add_subcommand("quasi-minimal", "quasi-minimality test");
  add_model_flags(qm_cmd);
  add_roots_flag(qm_cmd);
  qm_cmd->add_option("--alpha", opt.alpha, "also report lines meeting exactly alpha curves")
      ->each([&](const std::string&) { opt.alpha_set = true; });

  CLI::App* min_cmd = app.add_subcommand("minimal", "orbit minimality under a Galois action");
  add_model_flags(min_cmd);
  add_roots_flag(min_cmd);
  min_cmd->add_option("--galois", opt.galois_file, "JSON file with generator matrices");

  CLI::App* reflect_cmd = app.add_subcommand("reflect", "reflect CLASS in the (-2)-class ROOT");
  add_model_flags(reflect_cmd);
  reflect_cmd->add_option("root", opt.reflect_root, "reflection root")->required();
  reflect_cmd->add_option("class", opt.reflect_class, "class to reflect")->required();

  CLI::App* verdict_cmd = app.add_subcommand("verdict", "cylinder existence for a minimal surface");
  add_model_flags(verdict_cmd);
  verdict_cmd->add_flag("--minimal", opt.flag_minimal, "the surface is minimal");
  verdict_cmd->add_flag("--section", opt.flag_section, "the conic fibration has a section");
  verdict_cmd->add_flag("--rational-point", opt.flag_rational_point,
                        "the surface has a rational point");

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "search all configurations of a degree");
  add_model_flags(enum_cmd);
  enum_cmd->add_option("--max-roots", opt.max_roots, "largest configuration size to visit");
  enum_cmd->add_option("--budget", opt.budget, "search node budget")
      ->each([&](const std::string&) { opt.budget_set = true; });
  enum_cmd->add_option("--data-dir", opt.data_dir, "catalog data directory");

  CLI::App* verify_cmd = app.add_subcommand("verify", "replay the classification tables");
  verify_cmd->add_flag("--json", opt.json_out, "machine readable output");
  verify_cmd->add_option("--tables", opt.tables, "which checks: 1, 2, 3, incidence, all");
  verify_cmd->add_option("--data-dir", opt.data_dir, "catalog data directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(roots_cmd)) return run_roots(opt);
    if (app.got_subcommand(lines_cmd)) return run_lines(opt);
    if (app.got_subcommand(classify_cmd)) return run_classify(opt);
    if (app.got_subcommand(qm_cmd)) return run_quasi_minimal(opt);
    if (app.got_subcommand(min_cmd)) return run_minimal(opt);
    if (app.got_subcommand(reflect_cmd)) return run_reflect(opt);
    if (app.got_subcommand(verdict_cmd)) return run_verdict(opt);
    if (app.got_subcommand(enum_cmd)) return run_enumerate(opt);
    if (app.got_subcommand(verify_cmd)) return run_verify(opt);
  } catch (const Error& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
