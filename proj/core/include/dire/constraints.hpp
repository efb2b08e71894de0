#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dire/election.hpp"
#include "dire/scoring.hpp"

namespace dire {

/// A labelled set of candidate ids (candidate attributes) or voter ids
/// (voter attributes), kept sorted.
struct Group {
  std::string label;
  std::vector<int> members;

  bool operator==(const Group&) const = default;
};

/// One attribute: pairwise disjoint groups. A complete attribute covers
/// every entity; a partial one may leave entities ungrouped.
struct Attribute {
  std::string name;
  std::vector<Group> groups;
  bool partial = false;

  bool operator==(const Attribute&) const = default;
};

struct AttributeScheme {
  std::vector<Attribute> candidate_attributes;
  std::vector<Attribute> voter_attributes;

  int mu() const { return static_cast<int>(candidate_attributes.size()); }
  int pi() const { return static_cast<int>(voter_attributes.size()); }

  bool operator==(const AttributeScheme&) const = default;
};

/// Throws kInvalidArgument when groups overlap within an attribute, are
/// empty, reference ids outside [0, entity_count), repeat a label, or (for
/// complete attributes) miss an entity.
void validate_attributes(std::span<const Attribute> attributes, int entity_count,
                         std::string_view what);

struct InstanceOptions {
  bool allow_zero_bounds = false;
  std::uint64_t oracle_cap = kDefaultOracleCap;

  bool operator==(const InstanceOptions&) const = default;
};

enum class ConstraintKind { kDiversity, kRepresentation };

/// A single lower bound |W ∩ domain| >= bound.
struct UnaryConstraint {
  ConstraintKind kind = ConstraintKind::kDiversity;
  std::string key;  // "D:<attr>:<group>" or "R:<attr>:<population>"
  int attribute = 0;
  int group = 0;
  std::vector<CandidateId> domain;  // sorted
  int bound = 1;
};

/// Bounds indexed [attribute][group], parallel to the scheme.
using BoundTable = std::vector<std::vector<int>>;
/// Winning committees indexed [voter attribute][population].
using CommitteeTable = std::vector<std::vector<Committee>>;

class DiReInstance {
 public:
  /// Validates everything and computes missing winning committees with the
  /// instance rule. Throws dire::Error.
  DiReInstance(PreferenceProfile profile, AttributeScheme scheme, int k, Rule rule,
               BoundTable diversity_bounds, BoundTable representation_bounds,
               std::optional<CommitteeTable> winning_committees = std::nullopt,
               InstanceOptions options = {});

  const PreferenceProfile& profile() const { return profile_; }
  const AttributeScheme& scheme() const { return scheme_; }
  int k() const { return k_; }
  const Rule& rule() const { return rule_; }
  const BoundTable& diversity_bounds() const { return diversity_bounds_; }
  const BoundTable& representation_bounds() const { return representation_bounds_; }
  const CommitteeTable& winning_committees() const { return winning_committees_; }
  const InstanceOptions& options() const { return options_; }

  int candidate_count() const { return profile_.candidate_count(); }
  int voter_count() const { return profile_.voter_count(); }
  int mu() const { return scheme_.mu(); }
  int pi() const { return scheme_.pi(); }

  /// Display names; empty when none were supplied.
  const std::vector<std::string>& candidate_names() const { return candidate_names_; }
  void set_candidate_names(std::vector<std::string> names);

  /// All unary constraints, diversity first, in attribute/group order.
  const std::vector<UnaryConstraint>& constraints() const { return constraints_; }

  /// Same instance under another rule. Winning committees are recomputed
  /// unless `keep_winning_committees`.
  DiReInstance with_rule(Rule rule, bool keep_winning_committees = false) const;

  bool operator==(const DiReInstance& other) const;

 private:
  PreferenceProfile profile_;
  AttributeScheme scheme_;
  int k_;
  Rule rule_;
  BoundTable diversity_bounds_;
  BoundTable representation_bounds_;
  CommitteeTable winning_committees_;
  InstanceOptions options_;
  std::vector<std::string> candidate_names_;
  std::vector<UnaryConstraint> constraints_;
};

struct Violation {
  std::string key;
  ConstraintKind kind = ConstraintKind::kDiversity;
  int required = 0;
  int actual = 0;
  int shortfall() const { return required - actual; }
};

struct SatisfactionResult {
  bool ok = true;
  std::vector<Violation> violations;

  explicit operator bool() const { return ok; }
};

/// Throws kCommitteeSizeMismatch unless |committee| = k.
SatisfactionResult satisfies(const DiReInstance& instance, const Committee& committee);

/// Exact non-negative rational, kept in lowest terms.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction make(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;  // "3/4"

  bool operator==(const Fraction&) const = default;
  std::strong_ordering operator<=>(const Fraction& other) const;
};

/// Violated constraints over all constraints; 0 when there are none.
Fraction unsatisfied_fraction(const DiReInstance& instance, const Committee& committee);

/// floor(|P| / n * k) for each population of one voter attribute. Throws
/// kQuotaZero when some population would get 0.
std::vector<int> apportionment_bounds(const DiReInstance& instance, int voter_attribute);
std::vector<int> apportionment_bounds(std::span<const int> population_sizes, int n, int k);

struct AttributePacking {
  std::string attribute;
  int bound_sum = 0;
  bool flagged = false;  // bound_sum > k
};

struct NecessaryConditionReport {
  std::vector<AttributePacking> attributes;
  int total_bounds = 0;  // over all diversity and representation constraints
  int mu_k = 0;
  bool any_flagged = false;
};

NecessaryConditionReport necessary_condition_report(const DiReInstance& instance);

std::string_view to_string(ConstraintKind kind);

}  // namespace dire
