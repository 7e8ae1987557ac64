#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace narrative {

// "Who, regarding what, should be in what state."
struct NormativeClaim {
    std::string who;
    std::string about_what;
    std::string should_state;
    bool operator==(const NormativeClaim&) const = default;
};

// "Who wants whom to do what."
struct ActionRequest {
    std::string who;
    std::string whom;
    std::string wants_action;
    bool operator==(const ActionRequest&) const = default;
};

// "What/who is causing what situation for whom."
struct CausalRelation {
    std::string cause;
    std::string target;
    std::string situation;
    bool operator==(const CausalRelation&) const = default;
};

// "Who perceives what in what way." The object slot may wrap a causal
// relation, e.g. (author, (X, Y, causing Z), perceives it as W).
struct Perception {
    std::string who;
    std::variant<std::string, CausalRelation> object;
    std::string perception;
    bool operator==(const Perception&) const = default;
};

// A causal relation or perception supporting a normative claim or request.
// The antecedent is the claim's primary perception.
struct InfluenceLink {
    std::string who;
    std::variant<CausalRelation, Perception> antecedent;
    std::variant<NormativeClaim, ActionRequest> consequent;
    bool operator==(const InfluenceLink&) const = default;
};

using PatternNode =
    std::variant<NormativeClaim, ActionRequest, CausalRelation, Perception, InfluenceLink>;

struct PatternEdge {
    PatternNode node;
    std::string source_opinion_id;
    int source_stage = 1; // 1 or 2
    bool operator==(const PatternEdge&) const = default;
};

// Pattern number 1..5 of the outermost node.
int pattern_kind(const PatternNode& node);
inline int pattern_kind(const PatternEdge& edge) { return pattern_kind(edge.node); }

// Visits every leaf phrase at every nesting level, in slot order.
void for_each_leaf(const PatternNode& node, const std::function<void(const std::string&)>& fn);
void for_each_leaf(PatternNode& node, const std::function<void(std::string&)>& fn);

// Canonical one-line text form, e.g. "Pattern4 (a, (b, c, d), e)".
std::string edge_to_text(const PatternNode& node);
inline std::string edge_to_text(const PatternEdge& edge) { return edge_to_text(edge.node); }

// JSONL persistence with an explicit tag field and nested objects.
std::string edge_to_json(const PatternEdge& edge);
PatternEdge edge_from_json(std::string_view json_line);
std::string edges_to_jsonl(const std::vector<PatternEdge>& edges);
std::vector<PatternEdge> edges_from_jsonl(std::string_view content);

// ---------------------------------------------------------------------------

enum class Field : std::uint8_t { A, B, C, D, E, F };
constexpr std::array<Field, 6> all_fields{Field::A, Field::B, Field::C,
                                          Field::D, Field::E, Field::F};
char field_letter(Field f);

enum class ClaimType { normative, request };
std::string to_string(ClaimType t);

// Stage-3 output: "Because A is B, C should be D" (normative) or
// "Because A is B, please do F to E" (request). Absent slots hold "NA".
struct SummaryRow {
    ClaimType type{};
    std::array<std::string, 6> fields; // indexed by Field
    std::string source_opinion_id;
    std::size_t source_p5_index = 0;

    const std::string& field(Field f) const { return fields[static_cast<std::size_t>(f)]; }
    std::string& field(Field f) { return fields[static_cast<std::size_t>(f)]; }
    bool is_na(Field f) const { return field(f) == "NA"; }

    bool operator==(const SummaryRow&) const = default;
};

// Returns a description of the violated NA rule, or nullopt when the row
// is well-formed: normative rows need C,D and NA in E,F; request rows the
// reverse; A and B are always required.
std::optional<std::string> na_rule_violation(const SummaryRow& row);

std::string rows_to_csv(const std::vector<SummaryRow>& rows);
std::vector<SummaryRow> rows_from_csv(std::string_view content);

// ---------------------------------------------------------------------------

enum class RejectReason { non_verbatim_phrase, bad_arity, bad_nesting, unparseable };
std::string to_string(RejectReason reason);

struct RejectedEdge {
    std::string raw; // the offending line or serialized edge
    RejectReason reason{};
    std::string detail;
};

struct ValidationReport {
    std::vector<PatternEdge> accepted;
    std::vector<RejectedEdge> rejected;

    std::size_t count(RejectReason reason) const;
    std::map<std::string, std::size_t> counts_by_reason() const;
    void merge(ValidationReport other);
};

} // namespace narrative
