#include "aeu/io.hpp"

#include <fstream>
#include <sstream>

namespace aeu {

namespace {

[[noreturn]] void parse_fail(const std::string& file, const std::string& at,
                             const std::string& what) {
  throw ParseError(file, at.empty() ? what : at + ": " + what);
}

const Json& expect_field(const Json& j, const char* key,
                         const std::string& file, const std::string& at) {
  if (!j.is_object() || !j.contains(key))
    parse_fail(file, at, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string expect_string(const Json& j, const char* key,
                          const std::string& file, const std::string& at) {
  const Json& v = expect_field(j, key, file, at);
  if (!v.is_string())
    parse_fail(file, at, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

SemiringDescriptor descriptor_field(const Json& j, const std::string& file) {
  try {
    return SemiringDescriptor::parse(expect_string(j, "semiring", file, ""));
  } catch (const InputError& e) {
    parse_fail(file, "semiring", e.what());
  }
}

ConsequenceSpace space_from_fields(const Json& j, const std::string& file,
                                   const std::string& at) {
  const Json& names = expect_field(j, "consequences", file, at);
  if (!names.is_array())
    parse_fail(file, at, "'consequences' must be an array of names");
  std::vector<std::string> list;
  for (const Json& n : names) {
    if (!n.is_string()) parse_fail(file, at, "consequence names must be strings");
    list.push_back(n.get<std::string>());
  }
  try {
    return ConsequenceSpace(std::move(list), expect_string(j, "best", file, at),
                            expect_string(j, "worst", file, at));
  } catch (const InputError& e) {
    parse_fail(file, at, e.what());
  }
}

SemiringValue literal_field(const SemiringDescriptor& d, const Json& v,
                            const std::string& file, const std::string& at) {
  if (!v.is_string()) parse_fail(file, at, "value literals must be strings");
  try {
    return parse_literal(d, v.get<std::string>());
  } catch (const InputError& e) {
    parse_fail(file, at, e.what());
  }
}

BinaryValue binary_field(const SemiringDescriptor& d, const Json& v,
                         const std::string& file, const std::string& at) {
  if (!v.is_array() || v.size() != 2)
    parse_fail(file, at, "scale values are two-element arrays of literals");
  try {
    return BinaryValue{literal_field(d, v[0], file, at),
                       literal_field(d, v[1], file, at)};
  } catch (const InvariantViolation& e) {
    parse_fail(file, at, e.what());
  }
}

}  // namespace

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line number for the message.
    std::size_t line = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(path, "line " + std::to_string(line) + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
}

// --- lottery files ----------------------------------------------------------

Json lottery_node_to_json(const Lottery& l, const ConsequenceSpace& space) {
  Json node;
  if (l.is_simple()) {
    Json dist = Json::object();
    for (const std::string& name : space.names()) {
      const auto it = l.dist().find(name);
      if (it != l.dist().end()) dist[name] = to_literal(it->second);
    }
    node["simple"] = std::move(dist);
    return node;
  }
  Json branches = Json::array();
  for (const Lottery::Branch& b : l.branches())
    branches.push_back(Json::array(
        {to_literal(b.coeff), lottery_node_to_json(*b.sub, space)}));
  node["compound"] = std::move(branches);
  return node;
}

Lottery lottery_node_from_json(const SemiringDescriptor& d,
                               const ConsequenceSpace& space, const Json& node,
                               const std::string& file, const std::string& at) {
  if (!node.is_object() || node.size() != 1 ||
      (!node.contains("simple") && !node.contains("compound")))
    parse_fail(file, at, "lottery node must be {\"simple\":...} or {\"compound\":...}");
  try {
    if (node.contains("simple")) {
      const Json& dist_json = node.at("simple");
      if (!dist_json.is_object())
        parse_fail(file, at, "'simple' must map consequences to literals");
      Lottery::Dist dist;
      for (const auto& [name, lit] : dist_json.items()) {
        if (!space.contains(name))
          parse_fail(file, at, "unknown consequence '" + name + "'");
        dist.emplace(name, literal_field(d, lit, file, at + ".simple." + name));
      }
      return Lottery::simple(d, std::move(dist));
    }
    const Json& branches_json = node.at("compound");
    if (!branches_json.is_array() || branches_json.empty())
      parse_fail(file, at, "'compound' must be a nonempty array of branches");
    std::vector<std::pair<SemiringValue, Lottery>> parts;
    std::size_t idx = 0;
    for (const Json& branch : branches_json) {
      const std::string here = at + ".compound[" + std::to_string(idx) + "]";
      if (!branch.is_array() || branch.size() != 2)
        parse_fail(file, here, "branch must be [coefficient, node]");
      parts.emplace_back(
          literal_field(d, branch[0], file, here),
          lottery_node_from_json(d, space, branch[1], file, here));
      ++idx;
    }
    return Lottery::compound(d, std::move(parts));
  } catch (const InvariantViolation& e) {
    parse_fail(file, at, e.what());
  }
}

LotteryFile lottery_file_from_json(const Json& j, const std::string& file) {
  const SemiringDescriptor d = descriptor_field(j, file);
  ConsequenceSpace space = space_from_fields(j, file, "");
  Lottery l = lottery_node_from_json(
      d, space, expect_field(j, "lottery", file, ""), file, "lottery");
  return {d, std::move(space), std::move(l)};
}

Json lottery_file_to_json(const LotteryFile& f) {
  Json j;
  j["semiring"] = f.desc.str();
  j["consequences"] = f.space.names();
  j["best"] = f.space.best();
  j["worst"] = f.space.worst();
  j["lottery"] = lottery_node_to_json(f.lottery, f.space);
  return j;
}

LotteryFile read_lottery_file(const std::string& path) {
  return lottery_file_from_json(read_json_file(path), path);
}

// --- measure files ----------------------------------------------------------

MeasureFile measure_file_from_json(const Json& j, const std::string& file) {
  const SemiringDescriptor d = descriptor_field(j, file);
  const Json& states_json = expect_field(j, "states", file, "");
  if (!states_json.is_array())
    parse_fail(file, "states", "must be an array of names");
  std::vector<std::string> states;
  for (const Json& s : states_json) {
    if (!s.is_string()) parse_fail(file, "states", "state names must be strings");
    states.push_back(s.get<std::string>());
  }
  const Json& weights_json = expect_field(j, "weights", file, "");
  if (!weights_json.is_object())
    parse_fail(file, "weights", "must map states to literals");
  std::map<std::string, SemiringValue> weights;
  for (const auto& [name, lit] : weights_json.items())
    weights.emplace(name, literal_field(d, lit, file, "weights." + name));
  try {
    return {d, PlausibilityMeasure(d, std::move(states), std::move(weights))};
  } catch (const InvariantViolation& e) {
    parse_fail(file, "weights", e.what());
  } catch (const InputError& e) {
    parse_fail(file, "weights", e.what());
  }
}

Json measure_file_to_json(const MeasureFile& f) {
  Json j;
  j["semiring"] = f.desc.str();
  j["states"] = f.measure.states();
  Json weights = Json::object();
  for (const std::string& s : f.measure.states())
    weights[s] = to_literal(f.measure.weight(s));
  j["weights"] = std::move(weights);
  return j;
}

MeasureFile read_measure_file(const std::string& path) {
  return measure_file_from_json(read_json_file(path), path);
}

Act act_from_json(const Json& j, const std::string& file) {
  const Json& map = expect_field(j, "act", file, "");
  if (!map.is_object())
    parse_fail(file, "act", "must map states to consequences");
  Act act;
  for (const auto& [state, consequence] : map.items()) {
    if (!consequence.is_string())
      parse_fail(file, "act", "consequence names must be strings");
    act.assignment.emplace(state, consequence.get<std::string>());
  }
  return act;
}

Json act_to_json(const Act& act) {
  Json map = Json::object();
  for (const auto& [state, consequence] : act.assignment)
    map[state] = consequence;
  Json j;
  j["act"] = std::move(map);
  return j;
}

Act read_act_file(const std::string& path) {
  return act_from_json(read_json_file(path), path);
}

// --- utility files ----------------------------------------------------------

UtilityFile utility_file_from_json(const Json& j, const std::string& file) {
  const SemiringDescriptor d = descriptor_field(j, file);
  ConsequenceSpace space = space_from_fields(j, file, "");
  const Json& u_json = expect_field(j, "u", file, "");
  if (!u_json.is_object())
    parse_fail(file, "u", "must map consequences to scale values");
  std::map<std::string, BinaryValue> u;
  for (const auto& [name, v] : u_json.items())
    u.emplace(name, binary_field(d, v, file, "u." + name));
  try {
    return {d, UtilityAssignment(std::move(space), d, std::move(u))};
  } catch (const InputError& e) {
    parse_fail(file, "u", e.what());
  }
}

Json utility_file_to_json(const UtilityFile& f) {
  Json j;
  j["semiring"] = f.desc.str();
  j["consequences"] = f.utility.space().names();
  j["best"] = f.utility.space().best();
  j["worst"] = f.utility.space().worst();
  Json u = Json::object();
  for (const std::string& name : f.utility.space().names()) {
    const BinaryValue& v = f.utility.at(name);
    u[name] = Json::array({to_literal(v.first()), to_literal(v.second())});
  }
  j["u"] = std::move(u);
  return j;
}

UtilityFile read_utility_file(const std::string& path) {
  return utility_file_from_json(read_json_file(path), path);
}

// --- preference tables ------------------------------------------------------

TableFile table_file_from_json(const Json& j, const std::string& file) {
  const SemiringDescriptor d = descriptor_field(j, file);
  ConsequenceSpace space =
      space_from_fields(expect_field(j, "space", file, ""), file, "space");
  const Json& lotteries_json = expect_field(j, "lotteries", file, "");
  if (!lotteries_json.is_array())
    parse_fail(file, "lotteries", "must be an array of named lottery nodes");
  PreferenceTable table;
  std::map<std::string, std::size_t> index_of;
  std::size_t idx = 0;
  for (const Json& entry : lotteries_json) {
    const std::string at = "lotteries[" + std::to_string(idx) + "]";
    const std::string name = expect_string(entry, "name", file, at);
    if (index_of.count(name))
      parse_fail(file, at, "duplicate lottery name '" + name + "'");
    Lottery l = lottery_node_from_json(
        d, space, expect_field(entry, "lottery", file, at), file, at);
    index_of.emplace(name, table.lotteries.size());
    table.lotteries.push_back({name, std::move(l)});
    ++idx;
  }
  const std::size_t n = table.lotteries.size();
  table.relation.assign(n, std::vector<Comparison>(n, Comparison::Incomparable));
  std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
  const Json& rel_json = expect_field(j, "relation", file, "");
  if (!rel_json.is_array())
    parse_fail(file, "relation", "must be an array of [a, b, verdict] triples");
  for (const Json& row : rel_json) {
    if (!row.is_array() || row.size() != 3 || !row[0].is_string() ||
        !row[1].is_string() || !row[2].is_string())
      parse_fail(file, "relation", "entries must be [nameA, nameB, \"G|L|E|I\"]");
    const auto a = index_of.find(row[0].get<std::string>());
    const auto b = index_of.find(row[1].get<std::string>());
    if (a == index_of.end() || b == index_of.end())
      parse_fail(file, "relation", "verdict references an unknown lottery name");
    const auto verdict = comparison_from_letter(row[2].get<std::string>());
    if (!verdict)
      parse_fail(file, "relation", "verdicts are one of G, L, E, I");
    table.relation[a->second][b->second] = *verdict;
    given[a->second][b->second] = true;
  }
  // Diagonal defaults to Equivalent; a missing mirror entry is derived.
  for (std::size_t a = 0; a < n; ++a) {
    if (!given[a][a]) {
      table.relation[a][a] = Comparison::Equivalent;
      given[a][a] = true;
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (given[a][b] && !given[b][a]) {
        table.relation[b][a] = reversed(table.relation[a][b]);
        given[b][a] = true;
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!given[a][b])
        parse_fail(file, "relation",
                   "missing verdict for pair ('" + table.lotteries[a].name +
                       "', '" + table.lotteries[b].name + "')");
  try {
    table.validate();
  } catch (const InputError& e) {
    parse_fail(file, "relation", e.what());
  }
  return {d, std::move(space), std::move(table)};
}

Json table_file_to_json(const TableFile& f) {
  Json j;
  j["semiring"] = f.desc.str();
  Json space;
  space["consequences"] = f.space.names();
  space["best"] = f.space.best();
  space["worst"] = f.space.worst();
  j["space"] = std::move(space);
  Json lotteries = Json::array();
  for (const NamedLottery& nl : f.table.lotteries) {
    Json entry;
    entry["name"] = nl.name;
    entry["lottery"] = lottery_node_to_json(nl.lottery, f.space);
    lotteries.push_back(std::move(entry));
  }
  j["lotteries"] = std::move(lotteries);
  Json rel = Json::array();
  for (std::size_t a = 0; a < f.table.lotteries.size(); ++a)
    for (std::size_t b = 0; b < f.table.lotteries.size(); ++b)
      rel.push_back(Json::array({f.table.lotteries[a].name,
                                 f.table.lotteries[b].name,
                                 to_letter(f.table.relation[a][b])}));
  j["relation"] = std::move(rel);
  return j;
}

TableFile read_table_file(const std::string& path) {
  return table_file_from_json(read_json_file(path), path);
}

}  // namespace aeu
