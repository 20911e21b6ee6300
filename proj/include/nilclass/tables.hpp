// Table-reproduction drivers: instantiate representatives per the sampling
// manifest, compute the invariants, compare them cell by cell against the
// recorded values, and emit deterministic reports.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilclass/manifest.hpp"
#include "nilclass/matrix.hpp"

namespace nilclass {

struct TableCell {
  std::string check;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct TableRow {
  std::string label;
  std::vector<TableCell> cells;
  bool pass = true;
};

struct TableReport {
  std::string table;
  std::string title;
  std::uint64_t seed = kDefaultSeed;
  std::vector<TableRow> rows;
  bool pass = true;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

const std::vector<std::string>& table_ids();  // T1 T2 T3 T4 T5 T8 T9 A B

TableReport reproduce_table(const std::string& id, const Manifest& manifest,
                            std::uint64_t seed = kDefaultSeed);

}  // namespace nilclass
