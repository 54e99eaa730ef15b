#pragma once

#include <string>

#include <json.hpp>

#include "aeu/axiom_lab.hpp"
#include "aeu/engine.hpp"
#include "aeu/lottery.hpp"

namespace aeu {

/// Canonical rendering shared by all writers: two-space indent plus a
/// trailing newline. Reduce/round-trip byte-identity is stated against this
/// form.
std::string canonical_dump(const Json& j);

Json read_json_file(const std::string& path);  // throws ParseError
void write_text_file(const std::string& path, const std::string& content);

// --- lottery files ---------------------------------------------------------

struct LotteryFile {
  SemiringDescriptor desc;
  ConsequenceSpace space;
  Lottery lottery;
};

Json lottery_node_to_json(const Lottery& l, const ConsequenceSpace& space);
Lottery lottery_node_from_json(const SemiringDescriptor& d,
                               const ConsequenceSpace& space, const Json& node,
                               const std::string& file, const std::string& at);

LotteryFile lottery_file_from_json(const Json& j, const std::string& file);
Json lottery_file_to_json(const LotteryFile& f);
LotteryFile read_lottery_file(const std::string& path);

// --- measure / act files ---------------------------------------------------

struct MeasureFile {
  SemiringDescriptor desc;
  PlausibilityMeasure measure;
};

MeasureFile measure_file_from_json(const Json& j, const std::string& file);
Json measure_file_to_json(const MeasureFile& f);
MeasureFile read_measure_file(const std::string& path);

Act act_from_json(const Json& j, const std::string& file);
Json act_to_json(const Act& act);
Act read_act_file(const std::string& path);

// --- utility files ---------------------------------------------------------

struct UtilityFile {
  SemiringDescriptor desc;
  UtilityAssignment utility;
};

UtilityFile utility_file_from_json(const Json& j, const std::string& file);
Json utility_file_to_json(const UtilityFile& f);
UtilityFile read_utility_file(const std::string& path);

// --- preference tables -----------------------------------------------------

struct TableFile {
  SemiringDescriptor desc;
  ConsequenceSpace space;
  PreferenceTable table;
};

TableFile table_file_from_json(const Json& j, const std::string& file);
Json table_file_to_json(const TableFile& f);
TableFile read_table_file(const std::string& path);

}  // namespace aeu
