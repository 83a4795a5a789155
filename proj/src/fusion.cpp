#include "fusionrank/fusion.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json_util.hpp"

namespace fusionrank {

namespace {

constexpr std::size_t kMaxReportedPerRule = 20;
constexpr std::size_t kMaxLabels = 1024;

}  // namespace

Triple make_triple(std::string a, std::string b, std::string c) {
    Triple t{std::move(a), std::move(b), std::move(c)};
    std::sort(t.begin(), t.end());
    return t;
}

std::int64_t FusionData::rank3(const std::string& a, const std::string& b, const std::string& c) const {
    auto it = n3.find(make_triple(a, b, c));
    return it == n3.end() ? 0 : it->second;
}

void FusionData::set_rank3(const std::string& a, const std::string& b, const std::string& c,
                           std::int64_t rank) {
    auto key = make_triple(a, b, c);
    if (rank == 0) {
        n3.erase(key);
    } else {
        n3[std::move(key)] = rank;
    }
}

FusionData builtin_g2_level1() {
    FusionData d;
    d.labels = {"0", "mu"};
    d.vacuum = "0";
    d.dual = {{"0", "0"}, {"mu", "mu"}};
    d.set_rank3("0", "0", "0", 1);
    d.set_rank3("0", "mu", "mu", 1);
    d.set_rank3("mu", "mu", "mu", 1);
    return d;
}

std::string_view rule_name(Rule rule) {
    switch (rule) {
        case Rule::LabelIds: return "label-ids";
        case Rule::VacuumMember: return "vacuum-member";
        case Rule::DualTotal: return "dual-total";
        case Rule::DualInvolution: return "dual-involution";
        case Rule::DualVacuum: return "dual-vacuum";
        case Rule::Nonnegative: return "nonnegative";
        case Rule::TripleLabels: return "triple-labels";
        case Rule::VacuumRule: return "vacuum-rule";
        case Rule::Symmetry: return "symmetry";
        case Rule::Associativity: return "associativity";
    }
    return "unknown";
}

bool ValidationReport::has(Rule rule) const {
    return std::any_of(violations.begin(), violations.end(),
                       [rule](const Violation& v) { return v.rule == rule; });
}

std::string ValidationReport::summary() const {
    if (ok()) return "pass";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        const auto& v = violations[i];
        if (i > 0) os << "; ";
        os << rule_name(v.rule) << ": " << v.message;
        if (!v.witnesses.empty()) {
            os << " [";
            for (std::size_t w = 0; w < v.witnesses.size(); ++w) os << (w ? ", " : "") << v.witnesses[w];
            os << "]";
        }
    }
    return os.str();
}

ValidationError::ValidationError(ValidationReport report)
    : Error("invalid fusion ring: " + report.summary()), report_(std::move(report)) {}

namespace {

class Reporter {
public:
    explicit Reporter(ValidationReport& report) : report_(report) {}

    void add(Rule rule, std::string message, std::vector<std::string> witnesses = {}) {
        auto& n = counts_[static_cast<int>(rule)];
        if (n++ >= kMaxReportedPerRule) return;
        report_.violations.push_back({rule, std::move(message), std::move(witnesses)});
    }

private:
    ValidationReport& report_;
    std::unordered_map<int, std::size_t> counts_;
};

}  // namespace

ValidationReport validate(const FusionData& data) {
    ValidationReport report;
    Reporter out(report);

    std::unordered_map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < data.labels.size(); ++i) {
        const auto& id = data.labels[i];
        if (id.empty()) out.add(Rule::LabelIds, "empty label id", {"#" + std::to_string(i)});
        if (!pos.emplace(id, i).second) out.add(Rule::LabelIds, "duplicate label id", {id});
    }
    if (data.labels.empty()) out.add(Rule::LabelIds, "ring has no labels");
    if (data.labels.size() > kMaxLabels) out.add(Rule::LabelIds, "too many labels");

    const bool vacuum_ok = pos.contains(data.vacuum);
    if (!vacuum_ok) out.add(Rule::VacuumMember, "vacuum is not a label", {data.vacuum});

    bool dual_total = true;
    for (const auto& id : data.labels) {
        auto it = data.dual.find(id);
        if (it == data.dual.end()) {
            out.add(Rule::DualTotal, "dual undefined", {id});
            dual_total = false;
        } else if (!pos.contains(it->second)) {
            out.add(Rule::DualTotal, "dual is not a label", {id, it->second});
            dual_total = false;
        }
    }
    for (const auto& [from, to] : data.dual) {
        if (!pos.contains(from)) out.add(Rule::DualTotal, "dual given for unknown label", {from});
    }

    if (dual_total) {
        for (const auto& id : data.labels) {
            const auto& d = data.dual.at(id);
            if (data.dual.at(d) != id) out.add(Rule::DualInvolution, "dual(dual(a)) != a", {id});
        }
        if (vacuum_ok && data.dual.at(data.vacuum) != data.vacuum) {
            out.add(Rule::DualVacuum, "dual(vacuum) != vacuum", {data.vacuum});
        }
    }

    bool triples_ok = true;
    for (const auto& [t, rank] : data.n3) {
        if (rank < 0) {
            out.add(Rule::Nonnegative, "negative rank " + std::to_string(rank), {t[0], t[1], t[2]});
        }
        for (const auto& id : t) {
            if (!pos.contains(id)) {
                out.add(Rule::TripleLabels, "triple names unknown label", {t[0], t[1], t[2]});
                triples_ok = false;
                break;
            }
        }
    }

    if (report.has(Rule::LabelIds) || !vacuum_ok || !dual_total || !triples_ok) return report;

    const std::size_t n = data.labels.size();
    std::vector<std::int64_t> table(n * n * n, 0);
    auto at = [&](std::size_t a, std::size_t b, std::size_t c) -> std::int64_t& {
        return table[(a * n + b) * n + c];
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                at(a, b, c) = data.rank3(data.labels[a], data.labels[b], data.labels[c]);
    std::vector<std::size_t> dual(n);
    for (std::size_t a = 0; a < n; ++a) dual[a] = pos.at(data.dual.at(data.labels[a]));
    const std::size_t vac = pos.at(data.vacuum);
    const auto& ids = data.labels;

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const std::int64_t expected = b == dual[a] ? 1 : 0;
            if (at(a, b, vac) != expected) {
                out.add(Rule::VacuumRule,
                        "n3(a, b, vacuum) = " + std::to_string(at(a, b, vac)) + ", expected " +
                            std::to_string(expected),
                        {ids[a], ids[b]});
            }
        }
    }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const auto v = at(a, b, c);
                if (at(a, c, b) != v || at(b, a, c) != v || at(b, c, a) != v || at(c, a, b) != v ||
                    at(c, b, a) != v) {
                    out.add(Rule::Symmetry, "n3 not permutation invariant", {ids[a], ids[b], ids[c]});
                }
            }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    std::int64_t left = 0;
                    std::int64_t right = 0;
                    for (std::size_t e = 0; e < n; ++e) {
                        left += at(a, b, dual[e]) * at(e, c, dual[d]);
                        right += at(b, c, dual[e]) * at(a, e, dual[d]);
                    }
                    if (left != right) {
                        out.add(Rule::Associativity,
                                "(a b) c -> d gives " + std::to_string(left) + ", a (b c) -> d gives " +
                                    std::to_string(right),
                                {ids[a], ids[b], ids[c], ids[d]});
                    }
                }

    return report;
}

FusionData load_fusion(std::string_view document) {
    using detail::require;
    const auto root = detail::parse_json(document);
    if (!root.is_object()) throw ParseError("fusion ring: expected a JSON object");

    FusionData data;
    const auto& labels = detail::require_array(require(root, "labels", "fusion ring"), "labels");
    for (std::size_t i = 0; i < labels.size(); ++i) {
        data.labels.push_back(detail::require_string(labels[i], "labels[" + std::to_string(i) + "]"));
    }
    data.vacuum = detail::require_string(require(root, "vacuum", "fusion ring"), "vacuum");

    const auto& dual = require(root, "dual", "fusion ring");
    if (!dual.is_object()) throw ParseError("dual: expected an object");
    for (const auto& [key, value] : dual.items()) {
        data.dual[key] = detail::require_string(value, "dual." + key);
    }

    const auto& n3 = detail::require_array(require(root, "n3", "fusion ring"), "n3");
    for (std::size_t i = 0; i < n3.size(); ++i) {
        const std::string where = "n3[" + std::to_string(i) + "]";
        const auto& triple = detail::require_array(require(n3[i], "triple", where), where + ".triple");
        if (triple.size() != 3) throw ParseError(where + ".triple: expected exactly 3 labels");
        std::array<std::string, 3> ids;
        for (std::size_t k = 0; k < 3; ++k) {
            ids[k] = detail::require_string(triple[k], where + ".triple[" + std::to_string(k) + "]");
        }
        const auto rank = detail::require_integer(require(n3[i], "rank", where), where + ".rank");
        const auto key = make_triple(ids[0], ids[1], ids[2]);
        if (auto it = data.n3.find(key); it != data.n3.end() && it->second != rank) {
            throw ParseError(where + ": conflicting duplicate entry for triple");
        }
        data.set_rank3(ids[0], ids[1], ids[2], rank);
    }

    auto report = validate(data);
    if (!report.ok()) throw ValidationError(std::move(report));
    return data;
}

nlohmann::ordered_json to_json(const FusionData& data) {
    nlohmann::ordered_json j;
    j["labels"] = data.labels;
    j["vacuum"] = data.vacuum;
    nlohmann::ordered_json dual = nlohmann::ordered_json::object();
    for (const auto& id : data.labels) {
        if (auto it = data.dual.find(id); it != data.dual.end()) dual[id] = it->second;
    }
    j["dual"] = std::move(dual);
    nlohmann::ordered_json n3 = nlohmann::ordered_json::array();
    for (const auto& [t, rank] : data.n3) {
        n3.push_back({{"triple", t}, {"rank", rank}});
    }
    j["n3"] = std::move(n3);
    return j;
}

std::string serialize(const FusionData& data) { return to_json(data).dump(); }

FusionRing::FusionRing(FusionData data) : data_(std::move(data)) {
    auto report = validate(data_);
    if (!report.ok()) throw ValidationError(std::move(report));

    ids_ = data_.labels;
    const std::size_t n = ids_.size();
    auto pos = [&](const std::string& id) {
        return static_cast<Label>(std::find(ids_.begin(), ids_.end(), id) - ids_.begin());
    };
    vacuum_ = pos(data_.vacuum);
    dual_.reserve(n);
    for (const auto& id : ids_) dual_.push_back(pos(data_.dual.at(id)));
    table_.assign(n * n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                table_[(a * n + b) * n + c] = data_.rank3(ids_[a], ids_[b], ids_[c]);
}

std::optional<Label> FusionRing::find(std::string_view id) const {
    auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end()) return std::nullopt;
    return static_cast<Label>(it - ids_.begin());
}

Label FusionRing::at(std::string_view id) const {
    if (auto l = find(id)) return *l;
    throw UnknownLabel(std::string(id));
}

WeightList FusionRing::weights(std::span<const std::string> ids) const {
    WeightList out;
    out.reserve(ids.size());
    for (const auto& id : ids) out.push_back(at(id));
    return out;
}

std::vector<std::int64_t> FusionRing::product(Label a, Label b) const {
    std::vector<std::int64_t> out(size());
    for (std::size_t c = 0; c < size(); ++c) out[c] = n3(a, b, dual(static_cast<Label>(c)));
    return out;
}

}  // namespace fusionrank
