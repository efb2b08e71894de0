#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dire/constraints.hpp"
#include "dire/reductions.hpp"

namespace dire {

using Json = nlohmann::ordered_json;

struct ParseOptions {
  std::optional<Rule> rule_override;  // replaces the file's rule before W_P are computed
  bool allow_zero_bounds = false;
  std::uint64_t oracle_cap = kDefaultOracleCap;
};

/// Builds an instance from the JSON document. Structural problems throw
/// kParseError with the offending key path; invariant violations throw the
/// matching error code.
DiReInstance instance_from_json(const Json& doc, const ParseOptions& options = {});
DiReInstance parse_instance_text(std::string_view text, const ParseOptions& options = {});
DiReInstance parse_instance(const std::string& path, const ParseOptions& options = {});

Json instance_to_json(const DiReInstance& instance);
/// Two-space indented JSON plus a trailing newline.
std::string format_instance(const DiReInstance& instance);
void write_instance(const DiReInstance& instance, const std::string& path);

Json reduction_map_to_json(const ReductionMap& map);

/// Strict-order preference data in PrefLib .soc layout, old (header with
/// counts) or new ("# ALTERNATIVE NAME" metadata, "count: a,b,..." rows).
struct SocData {
  int candidate_count = 0;
  std::vector<std::string> names;
  std::vector<Ranking> rankings;  // expanded by multiplicity, 0-based ids
};

SocData parse_soc(std::istream& in);
SocData read_soc(const std::string& path);

/// Instance with no attributes over the converted profile.
DiReInstance instance_from_soc(const SocData& data, int k, Rule rule);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace dire
