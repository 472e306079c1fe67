#ifndef EXACTLIN_BIGINT_HPP
#define EXACTLIN_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace exactlin {

/// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
/// Small values (one limb) take the fast paths throughout; magnitudes are
/// kept canonical (no trailing zero limbs, zero has empty magnitude).
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s);

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    /// Truncated quotient (rounds toward zero).
    BigInt operator/(const BigInt& o) const;
    /// Remainder with the sign of the dividend.
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    /// q, r with a = q*b + r, |r| < |b|, r has the sign of a. Throws on b = 0.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    static BigInt gcd(BigInt a, BigInt b);

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    std::string str() const;

    /// Value as unsigned 64-bit; caller guarantees 0 <= *this < 2^64.
    std::uint64_t to_u64() const;

    std::size_t limbs() const { return mag_.size(); }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

}  // namespace exactlin

#endif
