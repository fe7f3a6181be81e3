#include "starkdirac/reference_data.hpp"

#include "starkdirac/csv_format.hpp"
#include "starkdirac/spectra.hpp"

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace starkdirac {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IntegrityError("cannot open reference file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CellFlag flag_from_string(const std::string &s) {
  if (s.empty())
    return CellFlag::None;
  if (s == "SuspectedTypo")
    return CellFlag::SuspectedTypo;
  if (s == "Unreconciled")
    return CellFlag::Unreconciled;
  if (s == "Blank")
    return CellFlag::Blank;
  throw IntegrityError("unknown cell flag '" + s + "'");
}

// "C=-10.3;eps=0.5" and friends; unknown keys are ignored.
void parse_col_key(ReferenceCell &cell) {
  std::stringstream ss(cell.col);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      continue;
    const std::string key = item.substr(0, eq);
    const double val = std::stod(item.substr(eq + 1));
    if (key == "C")
      cell.C = val;
    else if (key == "eps")
      cell.eps = val;
  }
}

std::vector<std::string> split_csv_line(const std::string &line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

ModelParams base_params(TableId id) {
  ModelParams p;
  p.q = 1.0;
  if (id == TableId::GevSequence) {
    p.M = 1.0;
    p.omega0 = 1.0;
    p.sym = SymmetryKind::Spin;
  } else {
    p.M = 1.5;
    p.omega0 = 1.0 / 2.4;
    p.sym = id == TableId::Table1 ? SymmetryKind::Spin : SymmetryKind::Pseudospin;
  }
  return p;
}

void tally(ComparisonReport &r) {
  r.passed = r.failed = r.informational = 0;
  r.max_abs_delta = 0.0;
  for (const auto &c : r.cells) {
    if (!c.gating)
      ++r.informational;
    else if (c.pass)
      ++r.passed;
    else
      ++r.failed;
    if (c.gating && std::isfinite(c.abs_delta))
      r.max_abs_delta = std::max(r.max_abs_delta, c.abs_delta);
  }
}

} // namespace

std::string to_string(TableId id) {
  switch (id) {
  case TableId::Table1: return "table1";
  case TableId::Table2: return "table2";
  case TableId::GevSequence: return "gev";
  }
  return "?";
}

TableId table_from_string(const std::string &name) {
  if (name == "table1")
    return TableId::Table1;
  if (name == "table2")
    return TableId::Table2;
  if (name == "gev" || name == "gev_sequence")
    return TableId::GevSequence;
  throw UnknownTable("unknown reference table '" + name + "' (expected table1|table2|gev)");
}

std::string to_string(CellFlag f) {
  switch (f) {
  case CellFlag::None: return "";
  case CellFlag::SuspectedTypo: return "SuspectedTypo";
  case CellFlag::Unreconciled: return "Unreconciled";
  case CellFlag::Blank: return "Blank";
  }
  return "?";
}

std::string default_data_dir() { return STARKDIRAC_DATA_DIR; }

std::string file_name(TableId id) {
  switch (id) {
  case TableId::Table1: return "table1.csv";
  case TableId::Table2: return "table2.csv";
  case TableId::GevSequence: return "gev_sequence.csv";
  }
  return "";
}

std::string pinned_sha256(TableId id) {
  switch (id) {
  case TableId::Table1: return "4c230849eb6da509a6a91e4d8351cb21f5cb22b1a3afa196613a30d8e480e178";
  case TableId::Table2: return "cd85c5035dbf89c6655e668d6741d5e60a179b377fa330bda1a2a7a6d02064d1";
  case TableId::GevSequence: return "e5202aacf052f1be86a1a268dc212044273a206673a83101de537eea9ba34c7f";
  }
  return "";
}

std::string sha256_hex(const std::string &bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw IntegrityError("SHA-256 computation failed");
  std::ostringstream ss;
  for (unsigned int i = 0; i < len; ++i)
    ss << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return ss.str();
}

ReferenceTable load_reference(TableId id, const std::string &data_dir) {
  const std::string path = data_dir + "/" + file_name(id);
  const std::string bytes = read_file(path);
  if (sha256_hex(bytes) != pinned_sha256(id))
    throw IntegrityError("reference data " + path + " does not match its pinned hash");

  ReferenceTable t;
  t.id = id;
  t.base = base_params(id);
  switch (id) {
  case TableId::Table1:
    t.provenance = "spin symmetry energy levels, M = 1.5, w0 = 1/2.4, hbar = c = q = 1; "
                   "not reproducible from the cubic at these parameters";
    break;
  case TableId::Table2:
    t.provenance = "pseudospin symmetry energy levels, M = 1.5, w0 = 1/2.4, hbar = c = q = 1";
    break;
  case TableId::GevSequence:
    t.provenance = "relativistic oscillator s-wave levels, M = 1, w0 = 1, eps = 0, C_s = 0";
    break;
  }

  std::istringstream in(bytes);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    if (header) {
      header = false;
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 4)
      throw IntegrityError("malformed reference row: " + line);
    ReferenceCell c;
    c.row = std::stoi(f[0]);
    c.col = f[1];
    parse_col_key(c);
    if (!f[2].empty())
      c.value = std::stod(f[2]);
    c.flag = flag_from_string(f[3]);
    t.cells.push_back(c);
  }
  return t;
}

ComparisonReport compare(TableId id, double tolerance, const std::string &data_dir) {
  const auto table = load_reference(id, data_dir);
  ComparisonReport r;
  r.id = id;
  r.tolerance = tolerance;
  r.gating = id != TableId::Table1;
  r.reconciliation = id == TableId::Table1 ? Reconciliation::Unreconciled
                                           : Reconciliation::Reconciled;

  for (const auto &cell : table.cells) {
    ComparisonCell out;
    out.row = cell.row;
    out.col = cell.col;
    out.published = cell.value;
    out.abs_delta = kNaN;

    ModelParams p = table.base;
    p.C = cell.C;
    p.eps = cell.eps;
    const auto lv = solve_level(p, cell.row);
    out.status = to_string(lv.status);
    if (lv.bound())
      out.computed = lv.E;
    if (out.computed && out.published)
      out.abs_delta = std::abs(*out.computed - *out.published);

    switch (id) {
    case TableId::GevSequence: {
      const double ho = relativistic_ho_level(p.M, p.omega0, cell.row);
      const double dho = std::abs(ho - *cell.value);
      out.pass = lv.bound() && out.abs_delta <= tolerance && dho <= tolerance;
      out.note = "closed-form oscillator root " + fmt17(ho);
      break;
    }
    case TableId::Table2:
      if (cell.flag == CellFlag::Blank) {
        out.pass = !lv.bound();
        out.note = out.pass ? "blank cell, no bound level" : "blank cell but solver finds a level";
      } else if (cell.flag == CellFlag::SuspectedTypo) {
        out.gating = false;
        out.note = "suspected typo; recomputed value " +
                   (out.computed ? fmt17(*out.computed) : std::string("none"));
      } else {
        out.pass = lv.bound() && out.abs_delta <= tolerance;
      }
      break;
    case TableId::Table1:
      out.gating = false;
      out.note = "unreconciled";
      break;
    }
    r.cells.push_back(out);
  }
  tally(r);

  if (id == TableId::Table2) {
    ModelParams p = table.base;
    p.C = -10.3;
    const auto scan = scan_breakdown(p, 0);
    r.notes.push_back(
        "C_ps=-10.3, n=0 eps scan: e^2 >= 4p from eps = " +
        (scan.discriminant_threshold ? fmt17(*scan.discriminant_threshold) : std::string("none")) +
        ", bound level lost from eps = " +
        (scan.root_loss_threshold ? fmt17(*scan.root_loss_threshold) : std::string("none")) +
        " (published window 1.81-1.90)");
  }
  if (id == TableId::Table1) {
    ModelParams p = table.base;
    const auto lv = solve_level(p, 0);
    const auto oracle = oracle_level(OracleEquation::SpinLevel, p, 0);
    const auto closed = spin_energy_eps0_closed_form(p, 0);
    r.notes.push_back("C_s=0, eps=0, n=0: cubic root " + fmt17(lv.E) + ", bisection oracle " +
                      (oracle ? fmt17(*oracle) : std::string("none")) +
                      ", published value 0.271140");
    r.notes.push_back("eps=0 closed form (published u term) gives " + fmt17(closed.real()) +
                      (std::abs(closed.imag()) > 0.0 ? " + " + fmt17(closed.imag()) + "i" : "") +
                      "; depressed-cubic route is authoritative");
  }
  return r;
}

std::string report_text(const ComparisonReport &r) {
  std::ostringstream os;
  os << "table " << to_string(r.id) << "  tolerance " << fmt17(r.tolerance)
     << "  reconciliation "
     << (r.reconciliation == Reconciliation::Reconciled ? "Reconciled" : "Unreconciled")
     << (r.gating ? "  gating" : "  informational") << "\n";
  for (const auto &c : r.cells) {
    os << "  n=" << c.row << " " << c.col << "  published="
       << (c.published ? fmt17(*c.published) : std::string("-")) << "  computed="
       << (c.computed ? fmt17(*c.computed) : std::string("-")) << "  delta="
       << fmt17(c.abs_delta) << "  " << (c.gating ? (c.pass ? "PASS" : "FAIL") : "INFO");
    if (!c.note.empty())
      os << "  (" << c.note << ")";
    os << "\n";
  }
  for (const auto &n : r.notes)
    os << "  note: " << n << "\n";
  os << "summary: passed " << r.passed << ", failed " << r.failed << ", informational "
     << r.informational << ", max |delta| " << fmt17(r.max_abs_delta) << "\n";
  return os.str();
}

std::string report_json(const ComparisonReport &r) {
  nlohmann::ordered_json j;
  j["table"] = to_string(r.id);
  j["tolerance"] = r.tolerance;
  j["gating"] = r.gating;
  j["reconciliation_status"] =
      r.reconciliation == Reconciliation::Reconciled ? "Reconciled" : "Unreconciled";
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["informational"] = r.informational;
  j["max_abs_delta"] = r.max_abs_delta;
  auto &cells = j["cells"] = nlohmann::ordered_json::array();
  for (const auto &c : r.cells) {
    nlohmann::ordered_json e;
    e["n"] = c.row;
    e["col"] = c.col;
    e["published"] = c.published ? nlohmann::ordered_json(*c.published) : nlohmann::ordered_json(nullptr);
    e["computed"] =
        c.computed ? nlohmann::ordered_json(*c.computed) : nlohmann::ordered_json(nullptr);
    e["abs_delta"] = std::isfinite(c.abs_delta) ? nlohmann::ordered_json(c.abs_delta)
                                                : nlohmann::ordered_json(nullptr);
    e["pass"] = c.pass;
    e["gating"] = c.gating;
    e["status"] = c.status;
    e["note"] = c.note;
    cells.push_back(e);
  }
  j["notes"] = r.notes;
  return j.dump(2);
}

} // namespace starkdirac
