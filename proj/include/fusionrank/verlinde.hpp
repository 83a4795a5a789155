#pragma once

// Trigonometric Verlinde formula for g2, evaluated in extended precision.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fusionrank/errors.hpp"
#include "fusionrank/qfield.hpp"

namespace fusionrank {

/// Vector in the basis of simple roots (alpha_1 short, alpha_2 long).
using RootVector = std::array<Rat, 2>;

/**
 * g2 structure constants, stored exactly. The inner product is normalized
 * so that long roots have squared length 2.
 */
struct G2RootData {
    int rank = 2;
    std::vector<RootVector> positive_roots;
    std::array<RootVector, 2> fundamental_weights;
    RootVector rho;
    /// gram[i][j] = <alpha_i, alpha_j>
    std::array<std::array<Rat, 2>, 2> gram;
    int dual_coxeter = 4;
    int index_P_mod_Q = 1;
    int index_Q_mod_Qlg = 3;
    std::array<int, 2> comarks{1, 2};

    Rat inner(const RootVector& x, const RootVector& y) const;
    /// Positive root of greatest height.
    RootVector highest_root() const;
};

G2RootData g2_root_data();

/// Failed invariants (rho as half the positive-root sum, <theta,theta> = 2,
/// 1 + sum comarks = dual Coxeter number, fundamental weights dual to
/// simple coroots). Empty when the data is consistent.
std::vector<std::string> check_root_data(const G2RootData& data);

/// a * omega_1 + b * omega_2
struct LevelWeight {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend bool operator==(const LevelWeight&, const LevelWeight&) = default;
};

std::int64_t level_of(const LevelWeight& w, const G2RootData& data);

/// Dominant weights of level <= level, ordered by (b, a).
std::vector<LevelWeight> g2_weights_at_level(std::int64_t level, const G2RootData& data = g2_root_data());

/// printed: sine product to the first power. standard: to the power 2 - 2g.
enum class ExponentVariant { printed, standard };

std::string_view variant_name(ExponentVariant v);

struct VerlindeValue {
    ExponentVariant variant;
    long double value = 0;
    BigInt nearest;
    /// |value - nearest|
    long double residual = 0;
};

/// ((l+h)^rank |P/Q| |Q/Q_lg|)^{g-1} sum_mu prod_alpha (2 sin(pi <alpha, mu+rho> / (l+h)))^E
VerlindeValue verlinde_trig_rank(std::int64_t g, std::int64_t level, ExponentVariant variant,
                                 const G2RootData& data = g2_root_data());

class CalibrationError : public Error {
public:
    using Error::Error;
};

/// Picks the unique variant matching gregoire_rank at level 1 for every g
/// in [g_lo, g_hi] (relative tolerance 1e-6). Throws CalibrationError when
/// neither or both match.
ExponentVariant calibrate_exponent(const G2RootData& data = g2_root_data(), std::int64_t g_lo = 2,
                                   std::int64_t g_hi = 6);

}  // namespace fusionrank
