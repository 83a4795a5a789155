#pragma once

/**
 * Golden-ratio closed form for the g2 level-1 ranks and the two Fibonacci
 * sums that factorization produces:
 *
 *   sum_i C(g,i) F_{2i+n-1}
 *     = phi^n (phi+2)^{g-1} + phibar^n (phibar+2)^{g-1}
 *     = sum_i C(g,i) 2^{g-i} F_{i+n-1}
 *
 * The three sides are computed independently so that agreement is a check.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fusionrank/qfield.hpp"

namespace fusionrank {

/// phi^n (phi+2)^{g-1} + phibar^n (phibar+2)^{g-1} as an element of Q(sqrt5).
/// g = 0 uses the inverse of phi+2. Requires g, n >= 0.
Q5 closed_value(std::int64_t g, std::int64_t n);

/// Integer value of closed_value. Throws NonIntegral if the sqrt5 part
/// survives.
BigInt closed_rank(std::int64_t g, std::int64_t n);

/// ((5+sqrt5)/2)^{g-1} + ((5-sqrt5)/2)^{g-1}, g >= 1.
BigInt gregoire_rank(std::int64_t g);

/// sum_{i=0}^{g} C(g,i) F_{2i+n-1}
BigInt sum_clutch(std::int64_t g, std::int64_t n);

/// sum_{i=0}^{g} C(g,i) 2^{g-i} F_{i+n-1}
BigInt sum_tails(std::int64_t g, std::int64_t n);

struct RankReport {
    std::int64_t g = 0;
    std::int64_t n = 0;
    BigInt sum_clutch;
    BigInt closed;
    BigInt sum_tails;
    bool agree = false;
    /// g < 2: outside the range where the identity is a theorem.
    bool extension = false;
};

/// All three expressions at (g, n). Requires g >= 2 unless allow_extension,
/// in which case g >= 0.
RankReport verify_theorem(std::int64_t g, std::int64_t n, bool allow_extension = false);

/// Reports for every cell of [g_lo, g_hi] x [n_lo, n_hi] in g-major order.
/// The parallel version splits cells across OpenMP threads; output order
/// and content are identical to the serial one.
std::vector<RankReport> verify_grid(std::int64_t g_lo, std::int64_t g_hi, std::int64_t n_lo, std::int64_t n_hi,
                                    bool allow_extension = false, int threads = 0);
std::vector<RankReport> verify_grid_serial(std::int64_t g_lo, std::int64_t g_hi, std::int64_t n_lo,
                                           std::int64_t n_hi, bool allow_extension = false);

nlohmann::ordered_json to_json(const RankReport& report);
inline constexpr std::string_view kRankReportCsvHeader = "g,n,sum_clutch,closed,sum_tails,agree";
std::string to_csv(const RankReport& report);

}  // namespace fusionrank
