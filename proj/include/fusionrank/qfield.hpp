#pragma once

/**
 * Exact arithmetic in the real quadratic field Q(sqrt 5), plus the integer
 * sequences (Fibonacci numbers, binomial coefficients) the rank formulas use.
 *
 * Elements are stored as a + b*sqrt(5) with canonical reduced rational
 * coefficients, so two elements are equal iff their coefficients are.
 * Nothing in this header touches floating point.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

namespace fusionrank {

using BigInt = mpz_class;

std::string to_string(const BigInt& value);

/// Rational number in lowest terms with positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Rat(const BigInt& value) : value_(value) {}
    /// Throws DivisionByZero when den == 0.
    Rat(const BigInt& num, const BigInt& den);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rat operator-() const;
    Rat& operator+=(const Rat& rhs);
    Rat& operator-=(const Rat& rhs);
    Rat& operator*=(const Rat& rhs);
    /// Throws DivisionByZero.
    Rat& operator/=(const Rat& rhs);

    friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
    friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
    friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
    friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rat& lhs, const Rat& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs);

    /// "p/q" with q >= 1 always written, e.g. "5/1", "-3/2".
    std::string str() const;

private:
    explicit Rat(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& value);

/// a + b*sqrt(5).
class Q5 {
public:
    Q5() = default;
    Q5(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
    Q5(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

    static Q5 sqrt5() { return {Rat(0), Rat(1)}; }
    /// (1 + sqrt 5) / 2
    static Q5 phi() { return {Rat(1, 2), Rat(1, 2)}; }
    /// (1 - sqrt 5) / 2
    static Q5 phi_bar() { return {Rat(1, 2), Rat(-1, 2)}; }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// a^2 - 5 b^2, the field norm.
    Rat norm() const;

    Q5 operator-() const { return {-a_, -b_}; }
    Q5& operator+=(const Q5& rhs);
    Q5& operator-=(const Q5& rhs);
    Q5& operator*=(const Q5& rhs);
    Q5& operator/=(const Q5& rhs);

    friend Q5 operator+(Q5 lhs, const Q5& rhs) { return lhs += rhs; }
    friend Q5 operator-(Q5 lhs, const Q5& rhs) { return lhs -= rhs; }
    friend Q5 operator*(Q5 lhs, const Q5& rhs) { return lhs *= rhs; }
    friend Q5 operator/(Q5 lhs, const Q5& rhs) { return lhs /= rhs; }

    friend bool operator==(const Q5&, const Q5&) = default;

private:
    Rat a_;
    Rat b_;
};

std::ostream& operator<<(std::ostream& os, const Q5& value);

/// a - b*sqrt(5); the nontrivial automorphism of the field.
Q5 conj(const Q5& x);

/// conj(x) / norm(x). Throws DivisionByZero on zero.
Q5 inverse(const Q5& x);

/// Binary exponentiation. Negative k inverts first; pow(x, 0) == 1.
Q5 pow(Q5 x, std::int64_t k);

/// Returns the integer x represents. Throws NonIntegral when b != 0 or a is
/// not an integer; the message carries both components.
BigInt to_integer(const Q5& x);

/// {"a": "p/q", "b": "r/s"}
nlohmann::ordered_json to_json(const Q5& x);

/// F_k for any integer k, with F_{-k} = (-1)^{k+1} F_k. Fast doubling.
BigInt fib(std::int64_t k);

/// Binomial coefficient; 0 when k > n.
BigInt binom(std::uint64_t n, std::uint64_t k);

}  // namespace fusionrank
