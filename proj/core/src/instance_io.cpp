#include "dire/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace dire {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
  throw Error(ErrorCode::kParseError, (path.empty() ? std::string("<root>") : path) + ": " + reason);
}

std::string child(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string child(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

const Json& require(const Json& object, std::string_view key, const std::string& path) {
  const auto it = object.find(std::string(key));
  if (it == object.end()) fail(child(path, key), "missing");
  return *it;
}

int as_int(const Json& value, const std::string& path) {
  if (!value.is_number_integer()) fail(path, "expected an integer");
  const auto number = value.get<long long>();
  if (number < std::numeric_limits<int>::min() || number > std::numeric_limits<int>::max()) {
    fail(path, "integer out of range");
  }
  return static_cast<int>(number);
}

const Json& as_array(const Json& value, const std::string& path) {
  if (!value.is_array()) fail(path, "expected an array");
  return value;
}

const Json& as_object(const Json& value, const std::string& path) {
  if (!value.is_object()) fail(path, "expected an object");
  return value;
}

std::vector<int> int_list(const Json& value, const std::string& path) {
  std::vector<int> result;
  const auto& array = as_array(value, path);
  for (std::size_t i = 0; i < array.size(); ++i) result.push_back(as_int(array[i], child(path, i)));
  return result;
}

std::vector<Attribute> parse_attributes(const Json& doc, std::string_view key) {
  std::vector<Attribute> attributes;
  const std::string path(key);
  const auto it = doc.find(path);
  if (it == doc.end()) return attributes;
  const auto& array = as_array(*it, path);
  for (std::size_t a = 0; a < array.size(); ++a) {
    const std::string at = child(path, a);
    const auto& entry = as_object(array[a], at);
    Attribute attribute;
    const auto& name = require(entry, "name", at);
    if (!name.is_string()) fail(child(at, "name"), "expected a string");
    attribute.name = name.get<std::string>();
    if (const auto partial = entry.find("partial"); partial != entry.end()) {
      if (!partial->is_boolean()) fail(child(at, "partial"), "expected a boolean");
      attribute.partial = partial->get<bool>();
    }
    const std::string groups_path = child(at, "groups");
    const auto& groups = as_object(require(entry, "groups", at), groups_path);
    for (const auto& [label, members] : groups.items()) {
      attribute.groups.push_back({label, int_list(members, child(groups_path, label))});
    }
    attributes.push_back(std::move(attribute));
  }
  return attributes;
}

BoundTable parse_bounds(const Json& doc, std::string_view key, const std::vector<Attribute>& attributes) {
  BoundTable table;
  const std::string path(key);
  const auto it = doc.find(path);
  if (it == doc.end()) {
    if (!attributes.empty()) fail(path, "missing");
    return table;
  }
  const auto& object = as_object(*it, path);
  for (const auto& attribute : attributes) {
    const std::string at = child(path, attribute.name);
    const auto& row = as_object(require(object, attribute.name, path), at);
    std::vector<int> bounds;
    for (const auto& group : attribute.groups) {
      bounds.push_back(as_int(require(row, group.label, at), child(at, group.label)));
    }
    if (row.size() != attribute.groups.size()) fail(at, "names an unknown group");
    table.push_back(std::move(bounds));
  }
  if (object.size() != attributes.size()) fail(path, "names an unknown attribute");
  return table;
}

std::optional<CommitteeTable> parse_winning_committees(const Json& doc,
                                                       const std::vector<Attribute>& attributes) {
  const std::string path = "winning_committees";
  const auto it = doc.find(path);
  if (it == doc.end()) return std::nullopt;
  const auto& object = as_object(*it, path);
  CommitteeTable table;
  for (const auto& attribute : attributes) {
    const std::string at = child(path, attribute.name);
    const auto& row = as_object(require(object, attribute.name, path), at);
    std::vector<Committee> committees;
    for (const auto& population : attribute.groups) {
      const std::string where = child(at, population.label);
      auto members = int_list(require(row, population.label, at), where);
      try {
        committees.emplace_back(std::move(members));
      } catch (const Error& error) {
        fail(where, error.what());
      }
    }
    table.push_back(std::move(committees));
  }
  return table;
}

Json attributes_to_json(const std::vector<Attribute>& attributes) {
  Json array = Json::array();
  for (const auto& attribute : attributes) {
    Json entry = Json::object();
    entry["name"] = attribute.name;
    if (attribute.partial) entry["partial"] = true;
    Json groups = Json::object();
    for (const auto& group : attribute.groups) groups[group.label] = group.members;
    entry["groups"] = std::move(groups);
    array.push_back(std::move(entry));
  }
  return array;
}

Json bounds_to_json(const std::vector<Attribute>& attributes, const BoundTable& bounds) {
  Json object = Json::object();
  for (std::size_t a = 0; a < attributes.size(); ++a) {
    Json row = Json::object();
    for (std::size_t g = 0; g < attributes[a].groups.size(); ++g) {
      row[attributes[a].groups[g].label] = bounds[a][g];
    }
    object[attributes[a].name] = std::move(row);
  }
  return object;
}

}  // namespace

DiReInstance instance_from_json(const Json& doc, const ParseOptions& options) {
  as_object(doc, "");
  const int m = as_int(require(doc, "m", ""), "m");
  const int n = as_int(require(doc, "n", ""), "n");
  const int k = as_int(require(doc, "k", ""), "k");

  Rule rule;
  if (const auto it = doc.find("rule"); it != doc.end()) {
    if (!it->is_string()) fail("rule", "expected a string");
    const auto kind = parse_rule_kind(it->get<std::string>());
    if (!kind) fail("rule", "unknown rule '" + it->get<std::string>() + "'");
    rule.kind = *kind;
  }
  if (const auto it = doc.find("scoring"); it != doc.end()) {
    std::vector<Score> values;
    const auto& array = as_array(*it, "scoring");
    for (std::size_t i = 0; i < array.size(); ++i) values.push_back(as_int(array[i], child("scoring", i)));
    try {
      rule.scoring = ScoringVector(std::move(values));
    } catch (const Error& error) {
      fail("scoring", error.what());
    }
  }
  if (options.rule_override) rule = *options.rule_override;

  std::vector<Ranking> rankings;
  const auto& ranking_array = as_array(require(doc, "rankings", ""), "rankings");
  for (std::size_t v = 0; v < ranking_array.size(); ++v) {
    rankings.push_back(int_list(ranking_array[v], child("rankings", v)));
  }
  if (static_cast<int>(rankings.size()) != n) {
    fail("rankings", "has " + std::to_string(rankings.size()) + " rows but n = " + std::to_string(n));
  }
  std::vector<CandidateId> priority;
  if (const auto it = doc.find("priority"); it != doc.end()) priority = int_list(*it, "priority");
  std::vector<std::string> names;
  if (const auto it = doc.find("candidates"); it != doc.end()) {
    const auto& array = as_array(*it, "candidates");
    for (std::size_t i = 0; i < array.size(); ++i) {
      if (!array[i].is_string()) fail(child("candidates", i), "expected a string");
      names.push_back(array[i].get<std::string>());
    }
  }

  AttributeScheme scheme;
  scheme.candidate_attributes = parse_attributes(doc, "candidate_attributes");
  scheme.voter_attributes = parse_attributes(doc, "voter_attributes");
  auto diversity = parse_bounds(doc, "diversity_bounds", scheme.candidate_attributes);
  auto representation = parse_bounds(doc, "representation_bounds", scheme.voter_attributes);
  auto winners = parse_winning_committees(doc, scheme.voter_attributes);

  InstanceOptions instance_options;
  instance_options.allow_zero_bounds = options.allow_zero_bounds;
  if (const auto it = doc.find("allow_zero_bounds"); it != doc.end()) {
    if (!it->is_boolean()) fail("allow_zero_bounds", "expected a boolean");
    instance_options.allow_zero_bounds = instance_options.allow_zero_bounds || it->get<bool>();
  }
  instance_options.oracle_cap = options.oracle_cap;

  DiReInstance instance(PreferenceProfile(m, std::move(rankings), std::move(priority)),
                        std::move(scheme), k, std::move(rule), std::move(diversity),
                        std::move(representation), std::move(winners), instance_options);
  instance.set_candidate_names(std::move(names));
  return instance;
}

DiReInstance parse_instance_text(std::string_view text, const ParseOptions& options) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& error) {
    throw Error(ErrorCode::kParseError, std::string("invalid JSON: ") + error.what());
  }
  return instance_from_json(doc, options);
}

DiReInstance parse_instance(const std::string& path, const ParseOptions& options) {
  return parse_instance_text(read_text_file(path), options);
}

Json instance_to_json(const DiReInstance& instance) {
  const auto& profile = instance.profile();
  const auto& scheme = instance.scheme();
  Json doc = Json::object();
  doc["m"] = instance.candidate_count();
  doc["n"] = instance.voter_count();
  doc["k"] = instance.k();
  doc["rule"] = std::string(to_string(instance.rule().kind));
  if (instance.rule().scoring) {
    const auto values = instance.rule().scoring->values();
    doc["scoring"] = std::vector<Score>(values.begin(), values.end());
  }
  if (instance.options().allow_zero_bounds) doc["allow_zero_bounds"] = true;
  if (!instance.candidate_names().empty()) doc["candidates"] = instance.candidate_names();
  const auto priority = profile.priority();
  doc["priority"] = std::vector<CandidateId>(priority.begin(), priority.end());
  Json rankings = Json::array();
  for (const auto& ranking : profile.rankings()) rankings.push_back(ranking);
  doc["rankings"] = std::move(rankings);
  doc["candidate_attributes"] = attributes_to_json(scheme.candidate_attributes);
  doc["voter_attributes"] = attributes_to_json(scheme.voter_attributes);
  doc["diversity_bounds"] = bounds_to_json(scheme.candidate_attributes, instance.diversity_bounds());
  doc["representation_bounds"] =
      bounds_to_json(scheme.voter_attributes, instance.representation_bounds());
  Json winners = Json::object();
  for (std::size_t a = 0; a < scheme.voter_attributes.size(); ++a) {
    Json row = Json::object();
    for (std::size_t p = 0; p < scheme.voter_attributes[a].groups.size(); ++p) {
      const auto members = instance.winning_committees()[a][p].members();
      row[scheme.voter_attributes[a].groups[p].label] =
          std::vector<CandidateId>(members.begin(), members.end());
    }
    winners[scheme.voter_attributes[a].name] = std::move(row);
  }
  doc["winning_committees"] = std::move(winners);
  return doc;
}

std::string format_instance(const DiReInstance& instance) {
  return instance_to_json(instance).dump(2) + "\n";
}

void write_instance(const DiReInstance& instance, const std::string& path) {
  write_text_file(path, format_instance(instance));
}

Json reduction_map_to_json(const ReductionMap& map) {
  Json doc = Json::object();
  doc["kind"] = map.kind;
  doc["cover_size"] = map.cover_size;
  doc["committee_size"] = map.committee_size;
  if (map.target_score) doc["target_score"] = *map.target_score;
  doc["vertex_candidates"] = map.vertex_candidates;
  doc["edge_constraints"] = map.edge_constraints;
  Json blocks = Json::array();
  for (const auto& block : map.blocks) {
    blocks.push_back(Json{{"owner", block.owner}, {"t1", block.t1}, {"t2", block.t2}, {"t3", block.t3}});
  }
  doc["blocks"] = std::move(blocks);
  return doc;
}

namespace {

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view text, char separator) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(separator, start);
    parts.push_back(trim(text.substr(start, end == std::string_view::npos ? text.size() - start : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

long long parse_number(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    const long long value = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": bad number '" + token + "'");
  }
}

void add_rows(SocData& data, long long count, const std::vector<std::string>& ids, int line) {
  if (count < 0) throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": negative count");
  Ranking ranking;
  for (const auto& id : ids) {
    if (id.find('{') != std::string::npos) {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": ties are not supported");
    }
    ranking.push_back(static_cast<CandidateId>(parse_number(id, line) - 1));
  }
  for (long long i = 0; i < count; ++i) data.rankings.push_back(ranking);
}

}  // namespace

SocData parse_soc(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  SocData data;
  std::size_t index = 0;
  while (index < lines.size() && trim(lines[index]).empty()) ++index;
  if (index == lines.size()) throw Error(ErrorCode::kParseError, "empty preference file");

  if (trim(lines[index]).rfind('#', 0) == 0) {
    for (; index < lines.size(); ++index) {
      const auto text = trim(lines[index]);
      const int line = static_cast<int>(index) + 1;
      if (text.empty()) continue;
      if (text[0] == '#') {
        const auto colon = text.find(':');
        if (colon == std::string::npos) continue;
        const auto key = trim(std::string_view(text).substr(1, colon - 1));
        const auto value = trim(std::string_view(text).substr(colon + 1));
        if (key == "NUMBER ALTERNATIVES") {
          data.candidate_count = static_cast<int>(parse_number(value, line));
          data.names.assign(static_cast<std::size_t>(data.candidate_count), {});
        } else if (key.rfind("ALTERNATIVE NAME ", 0) == 0) {
          const auto id = parse_number(trim(key.substr(17)), line);
          if (id < 1 || id > data.candidate_count) {
            throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": bad alternative id");
          }
          data.names[static_cast<std::size_t>(id - 1)] = value;
        }
        continue;
      }
      const auto colon = text.find(':');
      if (colon == std::string::npos) {
        throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": expected 'count: ranking'");
      }
      add_rows(data, parse_number(trim(std::string_view(text).substr(0, colon)), line),
               split(std::string_view(text).substr(colon + 1), ','), line);
    }
  } else {
    data.candidate_count = static_cast<int>(parse_number(trim(lines[index]), static_cast<int>(index) + 1));
    ++index;
    for (int c = 0; c < data.candidate_count; ++c, ++index) {
      if (index >= lines.size()) throw Error(ErrorCode::kParseError, "candidate list is truncated");
      const auto parts = split(lines[index], ',');
      if (parts.size() < 2) {
        throw Error(ErrorCode::kParseError, "line " + std::to_string(index + 1) + ": expected 'id,name'");
      }
      std::string name = parts[1];
      for (std::size_t p = 2; p < parts.size(); ++p) name += "," + parts[p];
      data.names.push_back(name);
    }
    if (index >= lines.size()) throw Error(ErrorCode::kParseError, "voter count line is missing");
    ++index;
    for (; index < lines.size(); ++index) {
      const auto text = trim(lines[index]);
      if (text.empty()) continue;
      auto parts = split(text, ',');
      const auto count = parse_number(parts.front(), static_cast<int>(index) + 1);
      parts.erase(parts.begin());
      add_rows(data, count, parts, static_cast<int>(index) + 1);
    }
  }
  std::vector<CandidateId> identity(static_cast<std::size_t>(std::max(data.candidate_count, 0)));
  for (std::size_t c = 0; c < identity.size(); ++c) identity[c] = static_cast<CandidateId>(c);
  const auto check = validate_profile(data.candidate_count, data.rankings, identity);
  if (!check) throw Error(check.code, "converted profile is invalid: " + check.message);
  return data;
}

SocData read_soc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return parse_soc(in);
}

DiReInstance instance_from_soc(const SocData& data, int k, Rule rule) {
  DiReInstance instance(PreferenceProfile(data.candidate_count, data.rankings), AttributeScheme{}, k,
                        std::move(rule), {}, {});
  bool named = false;
  for (const auto& name : data.names) named = named || !name.empty();
  if (named) instance.set_candidate_names(data.names);
  return instance;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

}  // namespace dire
