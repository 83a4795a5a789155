#include "fusionrank/rank_engine.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include <omp.h>

#include "fusionrank/errors.hpp"

namespace fusionrank {

namespace {

constexpr std::uint64_t kMaxGraphLabelings = std::uint64_t{1} << 32;
constexpr std::uint64_t kParallelThreshold = 256;

// labels^edges, or nullopt past the limit.
std::optional<std::uint64_t> checked_power(std::size_t labels, std::size_t edges, std::uint64_t limit) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < edges; ++i) {
        if (total > limit / labels) return std::nullopt;
        total *= labels;
    }
    if (total > limit) return std::nullopt;
    return total;
}

}  // namespace

WeightList drop_vacua(const FusionRing& ring, std::span<const Label> weights) {
    WeightList out;
    std::copy_if(weights.begin(), weights.end(), std::back_inserter(out),
                 [&](Label l) { return l != ring.vacuum(); });
    return out;
}

struct RankEngine::Memo {
    struct Key {
        std::int64_t genus;
        Counts counts;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            std::size_t h = std::hash<std::int64_t>{}(k.genus);
            for (auto c : k.counts) h = h * 1099511628211ULL ^ c;
            return h;
        }
    };

    std::optional<BigInt> find(std::int64_t genus, const Counts& counts) const {
        std::shared_lock lock(mutex);
        auto it = table.find(Key{genus, counts});
        if (it == table.end()) return std::nullopt;
        return it->second;
    }

    void store(std::int64_t genus, const Counts& counts, const BigInt& value) {
        std::unique_lock lock(mutex);
        table.try_emplace(Key{genus, counts}, value);
    }

    mutable std::shared_mutex mutex;
    std::unordered_map<Key, BigInt, KeyHash> table;
};

struct RankEngine::Prepared {
    std::vector<std::int64_t> genus;
    std::vector<Counts> base;
    std::vector<std::size_t> base_total;
    std::vector<DualGraph::Edge> edges;
    std::uint64_t labelings = 1;
};

RankEngine::RankEngine(FusionRing ring) : ring_(std::move(ring)), memo_(std::make_unique<Memo>()) {}
RankEngine::~RankEngine() = default;
RankEngine::RankEngine(RankEngine&&) noexcept = default;
RankEngine& RankEngine::operator=(RankEngine&&) noexcept = default;

std::size_t RankEngine::memo_size() const {
    std::shared_lock lock(memo_->mutex);
    return memo_->table.size();
}

BigInt RankEngine::genus0(std::span<const Label> weights) const {
    Counts counts(ring_.size(), 0);
    for (auto w : weights) ++counts.at(index(w));
    return genus0_counts(counts, weights.size());
}

BigInt RankEngine::genus0_counts(Counts& counts, std::size_t total) const {
    const std::size_t n = ring_.size();
    if (total <= 3) {
        std::array<Label, 3> w{};
        std::size_t k = 0;
        for (std::size_t l = 0; l < n; ++l)
            for (std::uint32_t c = 0; c < counts[l]; ++c) w[k++] = static_cast<Label>(l);
        switch (total) {
            case 0: return 1;
            case 1: return w[0] == ring_.vacuum() ? 1 : 0;
            case 2: return w[1] == ring_.dual(w[0]) ? 1 : 0;
            default: return ring_.n3(w[0], w[1], w[2]);
        }
    }
    if (auto hit = memo_->find(0, counts)) return *hit;
    const Counts key = counts;

    auto take_first = [&] {
        auto l = static_cast<std::size_t>(std::find_if(counts.begin(), counts.end(),
                                                       [](std::uint32_t c) { return c > 0; }) -
                                          counts.begin());
        --counts[l];
        return static_cast<Label>(l);
    };
    const Label a = take_first();
    const Label b = take_first();

    BigInt sum = 0;
    for (std::size_t l = 0; l < n; ++l) {
        const auto mult = ring_.n3(a, b, static_cast<Label>(l));
        if (mult == 0) continue;
        const auto d = index(ring_.dual(static_cast<Label>(l)));
        ++counts[d];
        BigInt r = genus0_counts(counts, total - 1);
        --counts[d];
        if (r != 0) sum += r * mult;
    }
    ++counts[index(a)];
    ++counts[index(b)];

    memo_->store(0, key, sum);
    return sum;
}

BigInt RankEngine::smooth(std::int64_t genus, std::span<const Label> weights) const {
    if (!is_stable(genus, static_cast<std::int64_t>(weights.size()))) {
        throw PreconditionError("(g, n) = (" + std::to_string(genus) + ", " + std::to_string(weights.size()) +
                                ") is not a stable pair");
    }
    Counts counts(ring_.size(), 0);
    for (auto w : weights) ++counts.at(index(w));
    return smooth_counts(genus, counts, weights.size());
}

BigInt RankEngine::smooth_counts(std::int64_t genus, Counts& counts, std::size_t total) const {
    if (genus == 0) return genus0_counts(counts, total);
    if (auto hit = memo_->find(genus, counts)) return *hit;

    BigInt sum = 0;
    for (std::size_t l = 0; l < ring_.size(); ++l) {
        const auto d = index(ring_.dual(static_cast<Label>(l)));
        ++counts[l];
        ++counts[d];
        sum += smooth_counts(genus - 1, counts, total + 2);
        --counts[l];
        --counts[d];
    }
    memo_->store(genus, counts, sum);
    return sum;
}

RankEngine::Prepared RankEngine::prepare(const DualGraph& graph) const {
    graph.check();
    Prepared p;
    p.edges = graph.edges;
    for (const auto& v : graph.vertices) {
        Counts counts(ring_.size(), 0);
        for (const auto& id : v.legs) ++counts[index(ring_.at(id))];
        p.genus.push_back(v.genus);
        p.base.push_back(std::move(counts));
        p.base_total.push_back(v.legs.size());
    }
    for (const auto& [x, y] : graph.edges) {
        p.base_total[x] += 1;
        p.base_total[y] += 1;
    }
    auto total = checked_power(ring_.size(), graph.edges.size(), kMaxGraphLabelings);
    if (!total) throw SizeGuardExceeded("dual graph has too many edge labelings to enumerate");
    p.labelings = *total;
    return p;
}

BigInt RankEngine::labeling_term(const Prepared& p, std::uint64_t labeling,
                                 std::vector<Counts>& scratch) const {
    const std::size_t n = ring_.size();
    scratch = p.base;
    for (const auto& [x, y] : p.edges) {
        const auto l = static_cast<Label>(labeling % n);
        labeling /= n;
        ++scratch[std::min(x, y)][index(l)];
        ++scratch[std::max(x, y)][index(ring_.dual(l))];
    }
    BigInt product = 1;
    for (std::size_t v = 0; v < scratch.size(); ++v) {
        product *= smooth_counts(p.genus[v], scratch[v], p.base_total[v]);
        if (product == 0) break;
    }
    return product;
}

BigInt RankEngine::graph_serial(const DualGraph& graph) const {
    const Prepared p = prepare(graph);
    std::vector<Counts> scratch;
    BigInt sum = 0;
    for (std::uint64_t t = 0; t < p.labelings; ++t) sum += labeling_term(p, t, scratch);
    return sum;
}

BigInt RankEngine::graph(const DualGraph& graph) const {
    const Prepared p = prepare(graph);
    const auto count = static_cast<std::int64_t>(p.labelings);
    BigInt sum = 0;
#pragma omp parallel if (p.labelings >= kParallelThreshold)
    {
        std::vector<Counts> scratch;
        BigInt local = 0;
#pragma omp for schedule(static)
        for (std::int64_t t = 0; t < count; ++t) local += labeling_term(p, static_cast<std::uint64_t>(t), scratch);
#pragma omp critical
        sum += local;
    }
    return sum;
}

BigInt rank_genus0(const FusionRing& ring, std::span<const Label> weights) {
    return RankEngine(ring).genus0(weights);
}

BigInt rank_smooth(const FusionRing& ring, std::int64_t genus, std::span<const Label> weights) {
    return RankEngine(ring).smooth(genus, weights);
}

BigInt rank_graph(const FusionRing& ring, const DualGraph& graph) { return RankEngine(ring).graph(graph); }

namespace {

BigInt last_two_first(const FusionRing& ring, std::vector<Label>& w) {
    const std::size_t m = w.size();
    switch (m) {
        case 0: return 1;
        case 1: return w[0] == ring.vacuum() ? 1 : 0;
        case 2: return w[1] == ring.dual(w[0]) ? 1 : 0;
        case 3: return ring.n3(w[0], w[1], w[2]);
        default: break;
    }
    const Label y = w[m - 1];
    const Label x = w[m - 2];
    w.pop_back();
    w.pop_back();
    BigInt sum = 0;
    for (std::size_t l = 0; l < ring.size(); ++l) {
        const auto lab = static_cast<Label>(l);
        const auto mult = ring.n3(x, y, lab);
        if (mult == 0) continue;
        w.push_back(ring.dual(lab));
        sum += last_two_first(ring, w) * mult;
        w.pop_back();
    }
    w.push_back(x);
    w.push_back(y);
    return sum;
}

}  // namespace

BigInt rank_genus0_last_two_first(const FusionRing& ring, std::span<const Label> weights) {
    std::vector<Label> w(weights.begin(), weights.end());
    return last_two_first(ring, w);
}

BigInt rank_bruteforce(const FusionRing& ring, const DualGraph& graph, std::uint64_t max_labelings) {
    graph.check();

    // every genus-h vertex becomes genus 0 with h self-loops
    std::vector<DualGraph::Edge> edges = graph.edges;
    std::vector<std::vector<Label>> legs;
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        const auto& vert = graph.vertices[v];
        for (std::int64_t i = 0; i < vert.genus; ++i) edges.emplace_back(v, v);
        WeightList w;
        for (const auto& id : vert.legs) w.push_back(ring.at(id));
        legs.push_back(std::move(w));
    }

    const std::size_t n = ring.size();
    if (!checked_power(n, edges.size(), max_labelings)) {
        throw SizeGuardExceeded("brute-force oracle limited to " + std::to_string(max_labelings) +
                                " labelings");
    }

    std::vector<std::size_t> digits(edges.size(), 0);
    std::vector<std::vector<Label>> ends(graph.vertices.size());
    BigInt sum = 0;
    while (true) {
        for (std::size_t v = 0; v < ends.size(); ++v) ends[v] = legs[v];
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto l = static_cast<Label>(digits[e]);
            const auto [x, y] = edges[e];
            // label on the higher endpoint, dual on the lower
            ends[std::max(x, y)].push_back(l);
            ends[std::min(x, y)].push_back(ring.dual(l));
        }
        BigInt product = 1;
        for (auto& w : ends) {
            product *= last_two_first(ring, w);
            if (product == 0) break;
        }
        sum += product;

        std::size_t e = 0;
        while (e < digits.size() && ++digits[e] == n) digits[e++] = 0;
        if (e == digits.size()) break;
    }
    return sum;
}

}  // namespace fusionrank
