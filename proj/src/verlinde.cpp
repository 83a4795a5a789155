#include "fusionrank/verlinde.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "fusionrank/closed_form.hpp"

namespace fusionrank {

namespace {

RootVector vec(long x, long y) { return {Rat(x), Rat(y)}; }

RootVector add(const RootVector& x, const RootVector& y) { return {x[0] + y[0], x[1] + y[1]}; }

RootVector scale(const Rat& s, const RootVector& x) { return {s * x[0], s * x[1]}; }

long double to_long_double(const Rat& r) {
    return static_cast<long double>(r.numerator().get_si()) / static_cast<long double>(r.denominator().get_si());
}

BigInt round_to_integer(long double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.0Lf", std::nearbyint(x));
    return BigInt(buf);
}

}  // namespace

Rat G2RootData::inner(const RootVector& x, const RootVector& y) const {
    Rat s;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) s += x[i] * gram[i][j] * y[j];
    return s;
}

RootVector G2RootData::highest_root() const {
    RootVector best = positive_roots.at(0);
    for (const auto& r : positive_roots) {
        if (r[0] + r[1] > best[0] + best[1]) best = r;
    }
    return best;
}

G2RootData g2_root_data() {
    G2RootData d;
    d.positive_roots = {vec(1, 0), vec(0, 1), vec(1, 1), vec(2, 1), vec(3, 1), vec(3, 2)};
    d.fundamental_weights = {vec(2, 1), vec(3, 2)};
    d.rho = vec(5, 3);
    d.gram = {{{Rat(2, 3), Rat(-1)}, {Rat(-1), Rat(2)}}};
    return d;
}

std::vector<std::string> check_root_data(const G2RootData& data) {
    std::vector<std::string> failures;

    RootVector sum = vec(0, 0);
    for (const auto& r : data.positive_roots) sum = add(sum, r);
    if (scale(Rat(1, 2), sum) != data.rho) failures.push_back("rho is not half the sum of the positive roots");

    const auto theta = data.highest_root();
    if (data.inner(theta, theta) != Rat(2)) failures.push_back("<theta, theta> != 2");

    if (1 + data.comarks[0] + data.comarks[1] != data.dual_coxeter) {
        failures.push_back("1 + sum of comarks != dual Coxeter number");
    }

    // theta = sum_i comark_i * coroot_i, coroot_i = 2 alpha_i / <alpha_i, alpha_i>
    RootVector from_comarks = vec(0, 0);
    for (std::size_t i = 0; i < 2; ++i) {
        RootVector simple = i == 0 ? vec(1, 0) : vec(0, 1);
        const Rat len = data.inner(simple, simple);
        from_comarks = add(from_comarks, scale(Rat(2 * data.comarks[i]) / len, simple));
    }
    if (from_comarks != theta) failures.push_back("comarks do not expand theta in simple coroots");

    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            RootVector simple = j == 0 ? vec(1, 0) : vec(0, 1);
            const Rat pairing = Rat(2) * data.inner(data.fundamental_weights[i], simple) / data.inner(simple, simple);
            if (pairing != Rat(i == j ? 1 : 0)) {
                failures.push_back("fundamental weight " + std::to_string(i + 1) + " is not dual to coroot " +
                                   std::to_string(j + 1));
            }
        }
    }
    return failures;
}

std::int64_t level_of(const LevelWeight& w, const G2RootData& data) {
    return data.comarks[0] * w.a + data.comarks[1] * w.b;
}

std::vector<LevelWeight> g2_weights_at_level(std::int64_t level, const G2RootData& data) {
    if (level < 1) throw PreconditionError("level must be positive");
    std::vector<LevelWeight> out;
    for (std::int64_t b = 0; data.comarks[1] * b <= level; ++b)
        for (std::int64_t a = 0; level_of({a, b}, data) <= level; ++a) out.push_back({a, b});
    return out;
}

std::string_view variant_name(ExponentVariant v) {
    return v == ExponentVariant::printed ? "printed" : "standard";
}

VerlindeValue verlinde_trig_rank(std::int64_t g, std::int64_t level, ExponentVariant variant,
                                 const G2RootData& data) {
    if (g < 1) throw PreconditionError("verlinde_trig_rank requires g >= 1");
    const std::int64_t shifted = level + data.dual_coxeter;
    const long double pi = std::numbers::pi_v<long double>;
    const long double exponent = variant == ExponentVariant::printed ? 1.0L : static_cast<long double>(2 - 2 * g);

    long double sum = 0;
    for (const auto& w : g2_weights_at_level(level, data)) {
        const RootVector shifted_weight =
            add(add(scale(Rat(w.a), data.fundamental_weights[0]), scale(Rat(w.b), data.fundamental_weights[1])),
                data.rho);
        long double product = 1;
        for (const auto& alpha : data.positive_roots) {
            const long double angle = pi * to_long_double(data.inner(alpha, shifted_weight)) / shifted;
            product *= 2 * std::sin(angle);
        }
        sum += std::pow(product, exponent);
    }
    const long double base = std::pow(static_cast<long double>(shifted), data.rank) * data.index_P_mod_Q *
                             data.index_Q_mod_Qlg;
    const long double value = std::pow(base, static_cast<long double>(g - 1)) * sum;

    if (!std::isfinite(value)) {
        // a sine factor vanished: only happens on inconsistent root data
        return {variant, value, BigInt(0), std::numeric_limits<long double>::infinity()};
    }
    return {variant, value, round_to_integer(value), std::fabs(value - std::nearbyint(value))};
}

ExponentVariant calibrate_exponent(const G2RootData& data, std::int64_t g_lo, std::int64_t g_hi) {
    std::vector<ExponentVariant> matching;
    for (auto variant : {ExponentVariant::printed, ExponentVariant::standard}) {
        bool all = true;
        for (std::int64_t g = g_lo; g <= g_hi && all; ++g) {
            const auto v = verlinde_trig_rank(g, 1, variant, data);
            const long double exact = gregoire_rank(g).get_d();
            all = std::isfinite(v.value) && std::fabs(v.value - exact) < 1e-6L * exact;
        }
        if (all) matching.push_back(variant);
    }
    if (matching.empty()) throw CalibrationError("no exponent variant reproduces the exact level-1 ranks");
    if (matching.size() > 1) throw CalibrationError("both exponent variants reproduce the exact ranks");
    return matching.front();
}

}  // namespace fusionrank
