#include "fusionrank/qfield.hpp"

#include <ostream>
#include <utility>

#include "fusionrank/errors.hpp"

namespace fusionrank {

std::string to_string(const BigInt& value) { return value.get_str(10); }

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

Rat& Rat::operator+=(const Rat& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
    if (rhs.is_zero()) throw DivisionByZero("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rat::str() const {
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Rat& value) { return os << value.str(); }

Rat Q5::norm() const { return a_ * a_ - Rat(5) * b_ * b_; }

Q5& Q5::operator+=(const Q5& rhs) {
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

Q5& Q5::operator-=(const Q5& rhs) {
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

Q5& Q5::operator*=(const Q5& rhs) {
    // (a + b r)(c + d r) = (ac + 5bd) + (ad + bc) r,  r^2 = 5
    Rat a = a_ * rhs.a_ + Rat(5) * b_ * rhs.b_;
    Rat b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

Q5& Q5::operator/=(const Q5& rhs) { return *this *= inverse(rhs); }

std::ostream& operator<<(std::ostream& os, const Q5& value) {
    return os << "(" << value.a() << ") + (" << value.b() << ")*sqrt5";
}

Q5 conj(const Q5& x) { return {x.a(), -x.b()}; }

Q5 inverse(const Q5& x) {
    // norm is zero only at x == 0 since sqrt 5 is irrational
    if (x.is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt5)");
    const Rat n = x.norm();
    return {x.a() / n, -x.b() / n};
}

Q5 pow(Q5 x, std::int64_t k) {
    if (k < 0) {
        x = inverse(x);
        k = -k;
    }
    Q5 result(1);
    while (k > 0) {
        if (k & 1) result *= x;
        k >>= 1;
        if (k > 0) x *= x;
    }
    return result;
}

BigInt to_integer(const Q5& x) {
    if (!x.is_rational() || !x.a().is_integer()) {
        throw NonIntegral("value is not an integer: a = " + x.a().str() + ", b = " + x.b().str());
    }
    return x.a().numerator();
}

nlohmann::ordered_json to_json(const Q5& x) {
    nlohmann::ordered_json j;
    j["a"] = x.a().str();
    j["b"] = x.b().str();
    return j;
}

namespace {

// (F_m, F_{m+1}) for m >= 0.
std::pair<BigInt, BigInt> fib_pair(std::uint64_t m) {
    if (m == 0) return {0, 1};
    auto [f, g] = fib_pair(m / 2);
    // F_{2j} = F_j (2 F_{j+1} - F_j),  F_{2j+1} = F_j^2 + F_{j+1}^2
    BigInt even = f * (2 * g - f);
    BigInt odd = f * f + g * g;
    if (m % 2 == 0) return {std::move(even), std::move(odd)};
    BigInt next = even + odd;
    return {std::move(odd), std::move(next)};
}

}  // namespace

BigInt fib(std::int64_t k) {
    if (k >= 0) return fib_pair(static_cast<std::uint64_t>(k)).first;
    const auto m = static_cast<std::uint64_t>(-(k + 1)) + 1;
    BigInt value = fib_pair(m).first;
    if (m % 2 == 0) value = -value;
    return value;
}

BigInt binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // after this step result == C(n-k+i, i), so the division is exact
        mpz_mul_ui(result.get_mpz_t(), result.get_mpz_t(), n - k + i);
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
    }
    return result;
}

}  // namespace fusionrank
