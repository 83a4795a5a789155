#pragma once

/**
 * Conformal-block ranks from fusion data.
 *
 * Everything is driven by the genus-0 three-point table:
 *
 *   rank_0(w1, ..., wm) = sum_l n3(w1, w2, l) * rank_0(dual(l), w3, ..., wm)
 *
 * with the low-valence base cases m = 0..3. Clutching a node raises genus,
 *
 *   rank_g(w) = sum_l rank_{g-1}(w, l, dual(l)),
 *
 * and a general dual graph sums over a label on every edge, taking the
 * product of smooth-curve ranks over its vertices.
 */

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>

#include "fusionrank/dual_graph.hpp"
#include "fusionrank/fusion.hpp"
#include "fusionrank/qfield.hpp"

namespace fusionrank {

/// Removes every vacuum label, keeping the order of the rest.
WeightList drop_vacua(const FusionRing& ring, std::span<const Label> weights);

/// True when (g, n) is a stable pair: 2g - 2 + n > 0.
constexpr bool is_stable(std::int64_t g, std::int64_t n) { return g >= 0 && n >= 0 && 2 * g - 2 + n > 0; }

/**
 * Rank computations over one fusion ring, memoized on (genus, weight
 * multiset). Results depend only on the multiset, so the sorted key is
 * sound. All members are safe to call concurrently; each memo entry is
 * written once.
 */
class RankEngine {
public:
    explicit RankEngine(FusionRing ring);
    ~RankEngine();
    RankEngine(RankEngine&&) noexcept;
    RankEngine& operator=(RankEngine&&) noexcept;

    const FusionRing& ring() const { return ring_; }

    /// Genus-0 rank for any number of points, including m < 3.
    BigInt genus0(std::span<const Label> weights) const;

    /// Rank on a smooth genus-g curve by iterated clutching. Throws
    /// PreconditionError for the unstable pairs (0,0), (0,1), (0,2), (1,0).
    BigInt smooth(std::int64_t genus, std::span<const Label> weights) const;

    /// Sum over edge labelings of the product of vertex ranks. The edge
    /// label sits on the lower-indexed endpoint, its dual on the other.
    /// Throws GraphError, UnknownLabel, SizeGuardExceeded.
    BigInt graph(const DualGraph& graph) const;

    /// Single-threaded reference for graph().
    BigInt graph_serial(const DualGraph& graph) const;

    std::size_t memo_size() const;

private:
    using Counts = std::vector<std::uint32_t>;
    struct Memo;
    struct Prepared;

    BigInt genus0_counts(Counts& counts, std::size_t total) const;
    BigInt smooth_counts(std::int64_t genus, Counts& counts, std::size_t total) const;
    Prepared prepare(const DualGraph& graph) const;
    BigInt labeling_term(const Prepared& p, std::uint64_t labeling, std::vector<Counts>& scratch) const;

    FusionRing ring_;
    std::unique_ptr<Memo> memo_;
};

BigInt rank_genus0(const FusionRing& ring, std::span<const Label> weights);
BigInt rank_smooth(const FusionRing& ring, std::int64_t genus, std::span<const Label> weights);
BigInt rank_graph(const FusionRing& ring, const DualGraph& graph);

/// Default work limit for rank_bruteforce, in edge labelings.
inline constexpr std::uint64_t kBruteforceLimit = std::uint64_t{1} << 20;

/**
 * Independent oracle for rank_graph. Every genus-h vertex becomes a genus-0
 * vertex with h extra loops, all labelings of the resulting graph are
 * enumerated, and each vertex rank comes from a genus-0 recursion that fuses
 * the last two weights first. Shares no code path with RankEngine.
 * Throws GraphError, UnknownLabel, SizeGuardExceeded.
 */
BigInt rank_bruteforce(const FusionRing& ring, const DualGraph& graph,
                       std::uint64_t max_labelings = kBruteforceLimit);

/// Genus-0 recursion splitting off the last two weights. Unmemoized.
BigInt rank_genus0_last_two_first(const FusionRing& ring, std::span<const Label> weights);

}  // namespace fusionrank
