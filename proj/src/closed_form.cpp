#include "fusionrank/closed_form.hpp"

#include <omp.h>

#include "fusionrank/errors.hpp"

namespace fusionrank {

namespace {

void require_nonnegative(std::int64_t g, std::int64_t n) {
    if (g < 0 || n < 0) {
        throw PreconditionError("(g, n) = (" + std::to_string(g) + ", " + std::to_string(n) +
                                ") must be nonnegative");
    }
}

}  // namespace

Q5 closed_value(std::int64_t g, std::int64_t n) {
    require_nonnegative(g, n);
    const Q5 phi = Q5::phi();
    const Q5 phi_bar = Q5::phi_bar();
    return pow(phi, n) * pow(phi + Q5(2), g - 1) + pow(phi_bar, n) * pow(phi_bar + Q5(2), g - 1);
}

BigInt closed_rank(std::int64_t g, std::int64_t n) { return to_integer(closed_value(g, n)); }

BigInt gregoire_rank(std::int64_t g) {
    if (g < 1) throw PreconditionError("gregoire_rank requires g >= 1");
    const Q5 plus(Rat(5, 2), Rat(1, 2));
    const Q5 minus(Rat(5, 2), Rat(-1, 2));
    return to_integer(pow(plus, g - 1) + pow(minus, g - 1));
}

BigInt sum_clutch(std::int64_t g, std::int64_t n) {
    require_nonnegative(g, n);
    BigInt sum = 0;
    for (std::int64_t i = 0; i <= g; ++i) {
        sum += binom(static_cast<std::uint64_t>(g), static_cast<std::uint64_t>(i)) * fib(2 * i + n - 1);
    }
    return sum;
}

BigInt sum_tails(std::int64_t g, std::int64_t n) {
    require_nonnegative(g, n);
    BigInt sum = 0;
    for (std::int64_t i = 0; i <= g; ++i) {
        BigInt two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(g - i));
        sum += binom(static_cast<std::uint64_t>(g), static_cast<std::uint64_t>(i)) * two_pow * fib(i + n - 1);
    }
    return sum;
}

RankReport verify_theorem(std::int64_t g, std::int64_t n, bool allow_extension) {
    require_nonnegative(g, n);
    if (g < 2 && !allow_extension) {
        throw PreconditionError("the identity is stated for g >= 2; got g = " + std::to_string(g));
    }
    RankReport r;
    r.g = g;
    r.n = n;
    r.sum_clutch = sum_clutch(g, n);
    r.closed = closed_rank(g, n);
    r.sum_tails = sum_tails(g, n);
    r.agree = r.sum_clutch == r.closed && r.closed == r.sum_tails;
    r.extension = g < 2;
    return r;
}

namespace {

void check_range(std::int64_t g_lo, std::int64_t g_hi, std::int64_t n_lo, std::int64_t n_hi,
                 bool allow_extension) {
    if (g_lo > g_hi || n_lo > n_hi) throw PreconditionError("empty (g, n) range");
    require_nonnegative(g_lo, n_lo);
    if (g_lo < 2 && !allow_extension) throw PreconditionError("g range must start at 2 or above");
}

}  // namespace

std::vector<RankReport> verify_grid_serial(std::int64_t g_lo, std::int64_t g_hi, std::int64_t n_lo,
                                           std::int64_t n_hi, bool allow_extension) {
    check_range(g_lo, g_hi, n_lo, n_hi, allow_extension);
    std::vector<RankReport> out;
    for (std::int64_t g = g_lo; g <= g_hi; ++g)
        for (std::int64_t n = n_lo; n <= n_hi; ++n) out.push_back(verify_theorem(g, n, allow_extension));
    return out;
}

std::vector<RankReport> verify_grid(std::int64_t g_lo, std::int64_t g_hi, std::int64_t n_lo, std::int64_t n_hi,
                                    bool allow_extension, int threads) {
    check_range(g_lo, g_hi, n_lo, n_hi, allow_extension);
    const std::int64_t width = n_hi - n_lo + 1;
    const std::int64_t cells = (g_hi - g_lo + 1) * width;
    std::vector<RankReport> out(static_cast<std::size_t>(cells));
    const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(team)
    for (std::int64_t c = 0; c < cells; ++c) {
        out[static_cast<std::size_t>(c)] = verify_theorem(g_lo + c / width, n_lo + c % width, allow_extension);
    }
    return out;
}

nlohmann::ordered_json to_json(const RankReport& r) {
    nlohmann::ordered_json j;
    j["g"] = r.g;
    j["n"] = r.n;
    j["sum_clutch"] = to_string(r.sum_clutch);
    j["closed"] = to_string(r.closed);
    j["sum_tails"] = to_string(r.sum_tails);
    j["agree"] = r.agree;
    if (r.extension) j["extension"] = true;
    return j;
}

std::string to_csv(const RankReport& r) {
    return std::to_string(r.g) + "," + std::to_string(r.n) + "," + to_string(r.sum_clutch) + "," +
           to_string(r.closed) + "," + to_string(r.sum_tails) + "," + (r.agree ? "true" : "false");
}

}  // namespace fusionrank
