#pragma once

// Bundled published energy tables and comparison against the solver.

#include "starkdirac/model.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace starkdirac {

enum class TableId { Table1, Table2, GevSequence };

std::string to_string(TableId id);
// Accepts "table1", "table2", "gev". Throws UnknownTable otherwise.
TableId table_from_string(const std::string &name);

class UnknownTable : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class IntegrityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class CellFlag { None, SuspectedTypo, Unreconciled, Blank };
std::string to_string(CellFlag f);

struct ReferenceCell {
  int row = 0;         // level index n
  std::string col;     // e.g. "C=-10.3;eps=0.5"
  double C = 0.0;
  double eps = 0.0;
  std::optional<double> value; // empty for blank cells
  CellFlag flag = CellFlag::None;
};

struct ReferenceTable {
  TableId id = TableId::Table2;
  std::vector<ReferenceCell> cells;
  ModelParams base; // parameters shared by every cell; C and eps vary per cell
  std::string provenance;
};

std::string default_data_dir();
std::string file_name(TableId id);
// Lower-case hex SHA-256 of the bundled file contents.
std::string pinned_sha256(TableId id);
std::string sha256_hex(const std::string &bytes);

// Reads <data_dir>/<file>, checks the pinned hash and parses it.
ReferenceTable load_reference(TableId id, const std::string &data_dir = default_data_dir());

enum class Reconciliation { Reconciled, Unreconciled };

struct ComparisonCell {
  int row = 0;
  std::string col;
  std::optional<double> computed;
  std::optional<double> published;
  double abs_delta = 0.0; // NaN when either side is missing
  bool pass = false;
  bool gating = true;
  std::string status; // solver status
  std::string note;
};

struct ComparisonReport {
  TableId id = TableId::Table2;
  double tolerance = 0.0;
  std::vector<ComparisonCell> cells;
  int passed = 0;
  int failed = 0;
  int informational = 0;
  double max_abs_delta = 0.0;
  Reconciliation reconciliation = Reconciliation::Reconciled;
  bool gating = true;
  std::vector<std::string> notes;

  // A non-gating report always counts as ok.
  bool ok() const { return !gating || failed == 0; }
};

ComparisonReport compare(TableId id, double tolerance,
                         const std::string &data_dir = default_data_dir());

std::string report_text(const ComparisonReport &r);
std::string report_json(const ComparisonReport &r);

} // namespace starkdirac
