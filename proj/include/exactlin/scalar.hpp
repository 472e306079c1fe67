#ifndef EXACTLIN_SCALAR_HPP
#define EXACTLIN_SCALAR_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "exactlin/bigint.hpp"

namespace exactlin {

class Scalar;

/// Coefficient field tag: the rationals (p == 0) or a prime field F_p.
struct Field {
    std::uint64_t p = 0;

    static Field Q() { return Field{}; }
    static Field Fp(std::uint64_t prime);

    bool is_rational() const { return p == 0; }
    std::uint64_t characteristic() const { return p; }

    Scalar operator()(long long v) const;
    Scalar parse(std::string_view s) const;
    std::string str() const;

    bool operator==(const Field& o) const { return p == o.p; }
    bool operator!=(const Field& o) const { return p != o.p; }
};

/// Exact field element: a reduced rational with positive denominator, or a
/// residue in [0, p) of a prime field F_p. Integer literals construct
/// rationals and are lifted into F_p on contact with a prime-field operand,
/// so code like `x / Scalar(2)` works in either mode.
class Scalar {
public:
    Scalar() : num_(0), den_(1) {}
    Scalar(long long v) : num_(v), den_(1) {}
    Scalar(long long num, long long den);

    static Scalar rational(BigInt num, BigInt den);
    static Scalar mod_p(BigInt value, std::uint64_t p);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_rational() const { return p_ == 0; }
    std::uint64_t prime() const { return p_; }
    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws std::domain_error on zero divisor
    Scalar inv() const;

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Total order used for canonical term layout; value order over Q,
    /// representative order over F_p.
    bool operator<(const Scalar& o) const;

    /// Canonical literal: "p/q" or "p" over Q, the representative over F_p.
    std::string str() const;

private:
    BigInt num_;
    BigInt den_;
    std::uint64_t p_ = 0;

    void canonicalize();
    /// Lift mixed-mode operands into a shared field; throws std::logic_error
    /// when two distinct primes meet, std::domain_error when a rational has
    /// no image in F_p.
    static void align(Scalar& a, Scalar& b);
    Scalar to_prime(std::uint64_t p) const;
};

}  // namespace exactlin

#endif
