#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fusionrank/errors.hpp"

namespace fusionrank {

/// Unordered label triple, stored sorted.
using Triple = std::array<std::string, 3>;

Triple make_triple(std::string a, std::string b, std::string c);

/**
 * Document form of a fusion ring: label ids, vacuum, duality and the
 * genus-0 three-point ranks. May be invalid; see validate().
 *
 * Triples missing from n3 have rank 0. A zero rank is never stored, so two
 * documents describing the same ring compare equal.
 */
struct FusionData {
    std::vector<std::string> labels;
    std::string vacuum;
    std::map<std::string, std::string> dual;
    std::map<Triple, std::int64_t> n3;

    std::int64_t rank3(const std::string& a, const std::string& b, const std::string& c) const;
    void set_rank3(const std::string& a, const std::string& b, const std::string& c, std::int64_t rank);

    friend bool operator==(const FusionData&, const FusionData&) = default;
};

/// Labels {0, mu}, mu self-dual, mu (x) mu = 0 + mu.
FusionData builtin_g2_level1();

enum class Rule {
    LabelIds,        // non-empty and unique
    VacuumMember,
    DualTotal,       // dual defined on every label and lands in the label set
    DualInvolution,
    DualVacuum,
    Nonnegative,
    TripleLabels,    // every n3 entry names known labels
    VacuumRule,      // n3(a, b, vacuum) == [b == dual(a)]
    Symmetry,
    Associativity,
};

std::string_view rule_name(Rule rule);

struct Violation {
    Rule rule;
    std::string message;
    std::vector<std::string> witnesses;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(Rule rule) const;
    std::string summary() const;
};

ValidationReport validate(const FusionData& data);

class ValidationError : public Error {
public:
    explicit ValidationError(ValidationReport report);
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// Parses the fusion-ring JSON schema and validates the result.
/// Throws ParseError or ValidationError.
FusionData load_fusion(std::string_view document);
nlohmann::ordered_json to_json(const FusionData& data);
std::string serialize(const FusionData& data);

/// Strongly typed index into a FusionRing's label list.
enum class Label : std::uint16_t {};

constexpr std::size_t index(Label l) { return static_cast<std::size_t>(l); }

using WeightList = std::vector<Label>;

/**
 * Validated, indexed form of FusionData used by the rank computations.
 * Immutable after construction.
 */
class FusionRing {
public:
    /// Throws ValidationError when validate(data) fails.
    explicit FusionRing(FusionData data);

    static FusionRing g2_level1() { return FusionRing(builtin_g2_level1()); }

    std::size_t size() const { return ids_.size(); }
    const std::string& id(Label l) const { return ids_[index(l)]; }
    std::optional<Label> find(std::string_view id) const;
    /// Throws UnknownLabel.
    Label at(std::string_view id) const;
    /// Throws UnknownLabel.
    WeightList weights(std::span<const std::string> ids) const;

    Label vacuum() const { return vacuum_; }
    Label dual(Label l) const { return dual_[index(l)]; }
    std::int64_t n3(Label a, Label b, Label c) const {
        return table_[(index(a) * size() + index(b)) * size() + index(c)];
    }

    /// c -> n3(a, b, dual(c)): multiplicity of c in a (x) b.
    std::vector<std::int64_t> product(Label a, Label b) const;

    const FusionData& data() const { return data_; }

private:
    FusionData data_;
    std::vector<std::string> ids_;
    Label vacuum_{};
    std::vector<Label> dual_;
    std::vector<std::int64_t> table_;
};

}  // namespace fusionrank
