#pragma once
// Catalog layer: the classification tables shipped under data/, replay
// verification of every tabulated configuration against the computational
// layers, and the search enumerating all ADE configurations of a model.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wdp/lattice.hpp"
#include "wdp/roots.hpp"

namespace wdp {

struct CatalogRow {
  int degree = 0;
  std::string singularities;  // Dynkin type, possibly with an "(1)"/"(2)" suffix
  int line_count = 0;
};

// Strips a trailing "(k)" disambiguation suffix, if present.
std::string base_singularity_type(const std::string& singularities);

// The (degree, singularity type) -> line count classification table.
class Catalog {
public:
  static Catalog load(const std::string& tsv_path);
  static Catalog from_rows(std::vector<CatalogRow> rows);

  const std::vector<CatalogRow>& rows() const noexcept { return rows_; }
  const CatalogRow* find(int degree, const std::string& singularities) const;

  // Full catalog name for a computed (degree, Dynkin type, line count),
  // appending the "(k)" suffix where the base type is ambiguous. Throws
  // Error{catalog_miss} when no row matches.
  std::string resolve_type(int degree, const std::string& base_ade,
                           int line_count) const;

private:
  std::vector<CatalogRow> rows_;
};

struct NamedConfiguration {
  std::string name;
  std::string source;  // data file the entry came from
  int degree = 0;
  Shape shape = Shape::BlowupOfP2;
  std::string type;  // catalog singularity type, with suffix where ambiguous
  std::vector<std::string> root_symbols;

  LatticeModel make_model() const;
  Configuration make_configuration() const;
};

struct Table1Row {
  int degree = 0;
  std::string type;
  std::vector<std::string> root_symbols;
};

struct Table2Row {
  int degree = 0;
  std::string type;
  int alpha = 0;
  std::vector<std::string> root_symbols;
  std::vector<std::string> beta_line_symbols;
};

struct CatalogBundle {
  Catalog table3;
  std::vector<Table1Row> table1;
  std::vector<Table2Row> table2;
  std::vector<NamedConfiguration> extras;  // entries outside tables 1 and 2
};

CatalogBundle load_bundle(const std::string& data_dir);

// Every bundled configuration as a named entry: table 1 rows, table 2 rows,
// then the extras, in file order.
std::vector<NamedConfiguration> all_named_configurations(const CatalogBundle& bundle);

struct VerifyIssue {
  std::string where;
  std::string message;
};

struct VerifyReport {
  int checks = 0;
  std::vector<VerifyIssue> issues;
  bool ok() const noexcept { return issues.empty(); }
  void merge(const VerifyReport& other);
};

// Replays each minimal configuration: its meeting lines are exactly
// {e_i, L:1,i | i = 2..9-degree}, their sum C = (8-degree)(e0-e1) with
// C*C = 0, and the configuration passes the quasi-minimality test.
VerifyReport verify_table1(const CatalogBundle& bundle);

// Replays each non-minimal quasi-minimal candidate: Dynkin type, beta lines
// at the tabulated alpha, their disjointness and witness property, and
// failure of the quasi-minimality test.
VerifyReport verify_table2(const CatalogBundle& bundle);

// Recomputes (type, line count) for every bundled configuration and checks
// it against the catalog.
VerifyReport verify_table3(const CatalogBundle& bundle);

// Smooth-model incidence checks in degrees 5 and 6: every line meets exactly
// 8-degree other lines with pairing 1, and every conic fiber class has
// exactly 8-degree singular-fiber decompositions.
VerifyReport verify_incidence(int degree);

struct EnumeratedType {
  std::string ade;  // base Dynkin type ("" for the empty configuration)
  int line_count = 0;
  std::vector<DivisorClass> representative;  // first configuration found
  std::uint64_t configurations = 0;          // root subsets with this (ade, line count)
  std::size_t signature_variants = 0;        // distinct per-line incidence fingerprints
  std::optional<std::string> catalog_type;   // resolved catalog name, if any
};

struct EnumerationResult {
  std::vector<EnumeratedType> types;  // sorted by (ade, line_count)
  std::uint64_t nodes = 0;            // search tree nodes visited
  bool budget_exhausted = false;
};

// Depth-first search over all valid configurations of the model with at most
// max_roots declared curves (clamped to the model bound). node_budget of 0
// means unlimited; when the budget runs out the partial result is returned
// with budget_exhausted set. When a catalog is given, each type is resolved
// against it and unmatched types keep catalog_type empty.
EnumerationResult enumerate_configurations(const LatticeModel& model,
                                           int max_roots,
                                           std::uint64_t node_budget,
                                           const Catalog* catalog);

}  // namespace wdp
