#include "dire/constraints.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dire {

namespace {

std::string join_key(char prefix, const std::string& attribute, const std::string& group) {
  std::string key;
  key += prefix;
  key += ':';
  key += attribute;
  key += ':';
  key += group;
  return key;
}

void check_bound_shape(const BoundTable& bounds, std::span<const Attribute> attributes,
                       std::string_view what) {
  if (bounds.size() != attributes.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " bounds cover " + std::to_string(bounds.size()) +
                    " attributes, expected " + std::to_string(attributes.size()));
  }
  for (std::size_t a = 0; a < attributes.size(); ++a) {
    if (bounds[a].size() != attributes[a].groups.size()) {
      throw Error(ErrorCode::kInvalidArgument, std::string(what) + " bounds for attribute '" +
                                                   attributes[a].name + "' have wrong length");
    }
  }
}

}  // namespace

std::string_view to_string(ConstraintKind kind) {
  return kind == ConstraintKind::kDiversity ? "diversity" : "representation";
}

void validate_attributes(std::span<const Attribute> attributes, int entity_count,
                         std::string_view what) {
  std::set<std::string> names;
  for (const auto& attribute : attributes) {
    const std::string where = std::string(what) + " attribute '" + attribute.name + "'";
    if (!names.insert(attribute.name).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate " + where);
    }
    if (attribute.groups.empty()) throw Error(ErrorCode::kInvalidArgument, where + " has no groups");
    std::vector<int> owner(static_cast<std::size_t>(entity_count), -1);
    std::set<std::string> labels;
    for (std::size_t g = 0; g < attribute.groups.size(); ++g) {
      const auto& group = attribute.groups[g];
      if (!labels.insert(group.label).second) {
        throw Error(ErrorCode::kInvalidArgument, where + " repeats label '" + group.label + "'");
      }
      if (group.members.empty()) {
        throw Error(ErrorCode::kEmptySet, where + " group '" + group.label + "' is empty");
      }
      for (int id : group.members) {
        if (id < 0 || id >= entity_count) {
          throw Error(ErrorCode::kIndexOutOfRange, where + " group '" + group.label +
                                                       "' has id " + std::to_string(id));
        }
        auto& slot = owner[static_cast<std::size_t>(id)];
        if (slot >= 0) {
          throw Error(ErrorCode::kInvalidArgument, where + ": id " + std::to_string(id) +
                                                       " is in more than one group");
        }
        slot = static_cast<int>(g);
      }
    }
    if (!attribute.partial) {
      const auto missing = std::find(owner.begin(), owner.end(), -1);
      if (missing != owner.end()) {
        throw Error(ErrorCode::kInvalidArgument,
                    where + " does not cover id " + std::to_string(missing - owner.begin()));
      }
    }
  }
}

DiReInstance::DiReInstance(PreferenceProfile profile, AttributeScheme scheme, int k, Rule rule,
                           BoundTable diversity_bounds, BoundTable representation_bounds,
                           std::optional<CommitteeTable> winning_committees,
                           InstanceOptions options)
    : profile_(std::move(profile)),
      scheme_(std::move(scheme)),
      k_(k),
      rule_(std::move(rule)),
      diversity_bounds_(std::move(diversity_bounds)),
      representation_bounds_(std::move(representation_bounds)),
      options_(options) {
  const int m = profile_.candidate_count();
  if (k_ < 1 || k_ > m) {
    throw Error(ErrorCode::kInvalidArgument,
                "committee size " + std::to_string(k_) + " outside [1, " + std::to_string(m) + "]");
  }
  (void)rule_.scoring_for(m);

  for (auto* attrs : {&scheme_.candidate_attributes, &scheme_.voter_attributes}) {
    for (auto& attribute : *attrs) {
      for (auto& group : attribute.groups) std::sort(group.members.begin(), group.members.end());
    }
  }
  validate_attributes(scheme_.candidate_attributes, m, "candidate");
  validate_attributes(scheme_.voter_attributes, profile_.voter_count(), "voter");
  check_bound_shape(diversity_bounds_, scheme_.candidate_attributes, "diversity");
  check_bound_shape(representation_bounds_, scheme_.voter_attributes, "representation");

  const int lowest = options_.allow_zero_bounds ? 0 : 1;
  for (std::size_t a = 0; a < scheme_.candidate_attributes.size(); ++a) {
    const auto& attribute = scheme_.candidate_attributes[a];
    for (std::size_t g = 0; g < attribute.groups.size(); ++g) {
      const int bound = diversity_bounds_[a][g];
      const int high = std::min(k_, static_cast<int>(attribute.groups[g].members.size()));
      if (bound < lowest || bound > high) {
        throw Error(ErrorCode::kBoundOutOfRange,
                    "diversity bound " + std::to_string(bound) + " for " +
                        join_key('D', attribute.name, attribute.groups[g].label) + " outside [" +
                        std::to_string(lowest) + ", " + std::to_string(high) + "]");
      }
    }
  }
  for (std::size_t a = 0; a < scheme_.voter_attributes.size(); ++a) {
    const auto& attribute = scheme_.voter_attributes[a];
    for (std::size_t p = 0; p < attribute.groups.size(); ++p) {
      const int bound = representation_bounds_[a][p];
      if (bound < lowest || bound > k_) {
        throw Error(ErrorCode::kBoundOutOfRange,
                    "representation bound " + std::to_string(bound) + " for " +
                        join_key('R', attribute.name, attribute.groups[p].label) + " outside [" +
                        std::to_string(lowest) + ", " + std::to_string(k_) + "]");
      }
    }
  }

  if (winning_committees) {
    winning_committees_ = std::move(*winning_committees);
    if (winning_committees_.size() != scheme_.voter_attributes.size()) {
      throw Error(ErrorCode::kInvalidArgument, "winning committees cover wrong attribute count");
    }
    for (std::size_t a = 0; a < winning_committees_.size(); ++a) {
      if (winning_committees_[a].size() != scheme_.voter_attributes[a].groups.size()) {
        throw Error(ErrorCode::kInvalidArgument, "winning committees for attribute '" +
                                                     scheme_.voter_attributes[a].name +
                                                     "' have wrong length");
      }
      for (const auto& committee : winning_committees_[a]) check_committee(committee, m, k_);
    }
  } else {
    winning_committees_.resize(scheme_.voter_attributes.size());
    for (std::size_t a = 0; a < scheme_.voter_attributes.size(); ++a) {
      for (const auto& population : scheme_.voter_attributes[a].groups) {
        winning_committees_[a].push_back(population_winning_committee(
            profile_, population.members, rule_, k_, options_.oracle_cap));
      }
    }
  }

  for (std::size_t a = 0; a < scheme_.candidate_attributes.size(); ++a) {
    const auto& attribute = scheme_.candidate_attributes[a];
    for (std::size_t g = 0; g < attribute.groups.size(); ++g) {
      constraints_.push_back({ConstraintKind::kDiversity,
                              join_key('D', attribute.name, attribute.groups[g].label),
                              static_cast<int>(a), static_cast<int>(g),
                              attribute.groups[g].members, diversity_bounds_[a][g]});
    }
  }
  for (std::size_t a = 0; a < scheme_.voter_attributes.size(); ++a) {
    const auto& attribute = scheme_.voter_attributes[a];
    for (std::size_t p = 0; p < attribute.groups.size(); ++p) {
      const auto members = winning_committees_[a][p].members();
      constraints_.push_back({ConstraintKind::kRepresentation,
                              join_key('R', attribute.name, attribute.groups[p].label),
                              static_cast<int>(a), static_cast<int>(p),
                              std::vector<CandidateId>(members.begin(), members.end()),
                              representation_bounds_[a][p]});
    }
  }
}

void DiReInstance::set_candidate_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != static_cast<std::size_t>(candidate_count())) {
    throw Error(ErrorCode::kInvalidArgument, "candidate name count does not match m");
  }
  candidate_names_ = std::move(names);
}

DiReInstance DiReInstance::with_rule(Rule rule, bool keep_winning_committees) const {
  std::optional<CommitteeTable> committees;
  if (keep_winning_committees) committees = winning_committees_;
  DiReInstance copy(profile_, scheme_, k_, std::move(rule), diversity_bounds_,
                    representation_bounds_, std::move(committees), options_);
  copy.candidate_names_ = candidate_names_;
  return copy;
}

bool DiReInstance::operator==(const DiReInstance& other) const {
  return profile_ == other.profile_ && scheme_ == other.scheme_ && k_ == other.k_ &&
         rule_ == other.rule_ && diversity_bounds_ == other.diversity_bounds_ &&
         representation_bounds_ == other.representation_bounds_ &&
         winning_committees_ == other.winning_committees_ &&
         candidate_names_ == other.candidate_names_;
}

SatisfactionResult satisfies(const DiReInstance& instance, const Committee& committee) {
  check_committee(committee, instance.candidate_count(), instance.k());
  SatisfactionResult result;
  for (const auto& constraint : instance.constraints()) {
    int count = 0;
    for (CandidateId c : constraint.domain) count += committee.contains(c) ? 1 : 0;
    if (count < constraint.bound) {
      result.ok = false;
      result.violations.push_back({constraint.key, constraint.kind, constraint.bound, count});
    }
  }
  return result;
}

Fraction Fraction::make(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw Error(ErrorCode::kInvalidArgument, "fraction denominator must be positive");
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

std::string Fraction::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering Fraction::operator<=>(const Fraction& other) const {
  __extension__ using Wide = __int128;
  const Wide lhs = static_cast<Wide>(num) * other.den;
  const Wide rhs = static_cast<Wide>(other.num) * den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Fraction unsatisfied_fraction(const DiReInstance& instance, const Committee& committee) {
  const auto total = static_cast<std::int64_t>(instance.constraints().size());
  const auto result = satisfies(instance, committee);
  if (total == 0) return {0, 1};
  return Fraction::make(static_cast<std::int64_t>(result.violations.size()), total);
}

std::vector<int> apportionment_bounds(std::span<const int> population_sizes, int n, int k) {
  if (n < 1 || k < 1) throw Error(ErrorCode::kInvalidArgument, "n and k must be positive");
  const int total = std::accumulate(population_sizes.begin(), population_sizes.end(), 0);
  if (total != n) {
    throw Error(ErrorCode::kPreconditionViolated, "populations do not partition the voters");
  }
  std::vector<int> bounds;
  for (std::size_t p = 0; p < population_sizes.size(); ++p) {
    const auto quota = static_cast<int>(static_cast<std::int64_t>(population_sizes[p]) * k / n);
    if (quota == 0) {
      throw Error(ErrorCode::kQuotaZero, "population " + std::to_string(p) + " of size " +
                                             std::to_string(population_sizes[p]) +
                                             " has a zero lower quota");
    }
    bounds.push_back(quota);
  }
  return bounds;
}

std::vector<int> apportionment_bounds(const DiReInstance& instance, int voter_attribute) {
  const auto& attributes = instance.scheme().voter_attributes;
  if (voter_attribute < 0 || voter_attribute >= static_cast<int>(attributes.size())) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "voter attribute " + std::to_string(voter_attribute) + " does not exist");
  }
  std::vector<int> sizes;
  for (const auto& population : attributes[static_cast<std::size_t>(voter_attribute)].groups) {
    sizes.push_back(static_cast<int>(population.members.size()));
  }
  return apportionment_bounds(sizes, instance.voter_count(), instance.k());
}

NecessaryConditionReport necessary_condition_report(const DiReInstance& instance) {
  NecessaryConditionReport report;
  const auto& attributes = instance.scheme().candidate_attributes;
  for (std::size_t a = 0; a < attributes.size(); ++a) {
    const auto& bounds = instance.diversity_bounds()[a];
    const int sum = std::accumulate(bounds.begin(), bounds.end(), 0);
    const bool flagged = sum > instance.k();
    report.attributes.push_back({attributes[a].name, sum, flagged});
    report.any_flagged = report.any_flagged || flagged;
  }
  for (const auto& constraint : instance.constraints()) report.total_bounds += constraint.bound;
  report.mu_k = instance.mu() * instance.k();
  return report;
}

}  // namespace dire
