#pragma once

// Reference data shipped with the repository and the harness that recomputes
// it from first principles. Six tables are tracked:
//   I    MCS membership grid, d=4        (mcs_grid_d4.txt)
//   II   d=4 family analysis             (detectors_d4.txt: delta/detector/locc)
//   III  MCS membership grid, d=5        (mcs_grid_d5.txt)
//   IV   MCS membership grid, d=6        (mcs_grid_d6.txt)
//   V    MCS membership grid, d=8        (mcs_grid_d8.txt)
//   VI   d=6 family detector catalog     (detectors_d6.txt)
// plus the representative 4-GBS sets for d=4 and d=6 (reps_d4/reps_d6.txt).
// All files are UTF-8, line-oriented "row|col|value" records; '#' starts a
// comment. Cell rendering: GPMs as "m,n", MCS labels as "Ci,j", lists
// ';'-joined in sorted order, empty sets as "{}".

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gbs/analysis.hpp"
#include "gbs/mcs.hpp"
#include "gbs/pauli.hpp"

namespace gbs::corpus {

enum class TableId { I, II, III, IV, V, VI };

inline const char* to_string(TableId id) {
  switch (id) {
    case TableId::I: return "I";
    case TableId::II: return "II";
    case TableId::III: return "III";
    case TableId::IV: return "IV";
    case TableId::V: return "V";
    default: return "VI";
  }
}

inline std::optional<TableId> parse_table_id(std::string_view s) {
  if (s == "I") return TableId::I;
  if (s == "II") return TableId::II;
  if (s == "III") return TableId::III;
  if (s == "IV") return TableId::IV;
  if (s == "V") return TableId::V;
  if (s == "VI") return TableId::VI;
  return std::nullopt;
}

struct UnsupportedDimension : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Data directory: $GBSDETECT_DATA_DIR when set, else the compiled-in
/// repository path.
inline std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("GBSDETECT_DATA_DIR")) return env;
#ifdef GBSDETECT_DATA_DIR
  return GBSDETECT_DATA_DIR;
#else
  return "data";
#endif
}

// --- rendering helpers ------------------------------------------------------

inline std::string render_gpm_list(const std::set<Gpm>& gs) {
  if (gs.empty()) return "{}";
  std::string out;
  for (const auto& g : gs) {
    if (!out.empty()) out += ';';
    out += gbs::to_string(g);
  }
  return out;
}

template <typename Range>
inline std::string render_mcs_list(const Range& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ';';
    out += gbs::to_string(id);
  }
  return out.empty() ? "{}" : out;
}

// --- data-file parsing -------------------------------------------------------

struct Record {
  std::string row, col, value;
};

inline std::vector<Record> read_records(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open data file: " + file.string());
  std::vector<Record> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    const auto p1 = line.find('|');
    if (p1 == std::string::npos)
      throw std::runtime_error("malformed record in " + file.string() + ": " + line);
    const auto p2 = line.find('|', p1 + 1);
    if (p2 == std::string::npos) {
      out.push_back({line.substr(0, p1), line.substr(p1 + 1), ""});
    } else {
      out.push_back({line.substr(0, p1), line.substr(p1 + 1, p2 - p1 - 1), line.substr(p2 + 1)});
    }
  }
  return out;
}

inline std::vector<Gpm> parse_gpm_list(const std::string& text) {
  std::vector<Gpm> out;
  if (text == "{}" || text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw std::runtime_error("malformed GPM: " + item);
    out.push_back({std::stoi(item.substr(0, comma)), std::stoi(item.substr(comma + 1))});
  }
  return out;
}

// --- representative catalogs -------------------------------------------------

struct RepresentativeCatalog {
  Dimension d;
  std::vector<std::pair<std::string, GbsSet>> entries;
  std::string provenance;  // source data file
};

inline RepresentativeCatalog representatives(Dimension d,
                                             const std::filesystem::path& data_dir = default_data_dir()) {
  if (d != Dimension{4} && d != Dimension{6})
    throw UnsupportedDimension("representatives: no catalog for d=" + std::to_string(d.value()));
  const std::string file = d == Dimension{4} ? "reps_d4.txt" : "reps_d6.txt";
  RepresentativeCatalog catalog{d, {}, file};
  // reps files carry two-field name|elements records; the list parses out
  // of the `col` slot.
  for (const auto& rec : read_records(data_dir / file))
    catalog.entries.emplace_back(rec.row, GbsSet(d, parse_gpm_list(rec.col)));
  return catalog;
}

// --- table reproduction ------------------------------------------------------

struct CellDiff {
  std::string row, col, expected, actual;
};

struct TableDiff {
  TableId id{};
  int cells_total = 0;
  std::vector<CellDiff> mismatches;
  bool ok() const { return mismatches.empty(); }
};

namespace detail {

inline Dimension grid_dimension(TableId id) {
  switch (id) {
    case TableId::I: return Dimension{4};
    case TableId::III: return Dimension{5};
    case TableId::IV: return Dimension{6};
    case TableId::V: return Dimension{8};
    default: throw std::invalid_argument("not a grid table");
  }
}

inline std::string table_file(TableId id) {
  switch (id) {
    case TableId::I: return "mcs_grid_d4.txt";
    case TableId::II: return "detectors_d4.txt";
    case TableId::III: return "mcs_grid_d5.txt";
    case TableId::IV: return "mcs_grid_d6.txt";
    case TableId::V: return "mcs_grid_d8.txt";
    default: return "detectors_d6.txt";
  }
}

}  // namespace detail

/// Recompute every cell of the identified table and diff it against the
/// shipped data file. An empty mismatch list means the file reproduces.
inline TableDiff reproduce_table(TableId id,
                                 const std::filesystem::path& data_dir = default_data_dir()) {
  TableDiff diff;
  diff.id = id;
  const auto records = read_records(data_dir / detail::table_file(id));

  // recomputed[row][col] = value
  std::map<std::string, std::map<std::string, std::string>> actual;
  switch (id) {
    case TableId::I:
    case TableId::III:
    case TableId::IV:
    case TableId::V: {
      const Dimension d = detail::grid_dimension(id);
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n)
          actual[std::to_string(m)][std::to_string(n)] = render_mcs_list(mcs_containing({m, n}, d));
      break;
    }
    case TableId::II: {
      for (const auto& [name, set] : representatives(Dimension{4}, data_dir).entries) {
        actual[name]["delta"] = render_gpm_list(diff_set(set).elements());
        actual[name]["detector"] = render_mcs_list(detectors_of(set));
        const auto v = verdict(set);
        actual[name]["locc"] = v.status == VerdictStatus::Distinguishable ? "Y" : "N";
      }
      break;
    }
    case TableId::VI: {
      for (const auto& [name, set] : representatives(Dimension{6}, data_dir).entries)
        actual[name]["detector"] = render_mcs_list(detectors_of(set));
      break;
    }
  }

  for (const auto& rec : records) {
    ++diff.cells_total;
    const auto row_it = actual.find(rec.row);
    const std::string got = row_it == actual.end() ? std::string{"<missing row>"}
                                                   : row_it->second[rec.col];
    if (got != rec.value) diff.mismatches.push_back({rec.row, rec.col, rec.value, got});
  }
  return diff;
}

inline std::vector<TableId> all_tables() {
  return {TableId::I, TableId::II, TableId::III, TableId::IV, TableId::V, TableId::VI};
}

}  // namespace gbs::corpus
