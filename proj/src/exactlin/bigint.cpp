#include "exactlin/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace exactlin {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long m = v > 0 ? static_cast<unsigned long long>(v)
                                 : ~static_cast<unsigned long long>(v) + 1ULL;
    while (m != 0) {
        mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
        m >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0);
        r[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    r[big.size()] = static_cast<std::uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// requires |a| >= |b|
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += 1LL << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<std::uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry != 0) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Shift-subtract long division on magnitudes; adequate for the limb counts
// seen here (coefficients rarely exceed a few limbs).
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {  // single-limb fast path
        std::uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem != 0) {
            r.push_back(static_cast<std::uint32_t>(rem));
            if (rem >> 32) r.push_back(static_cast<std::uint32_t>(rem >> 32));
        }
        return;
    }
    std::size_t nbits = a.size() * 32;
    q.assign(a.size(), 0);
    for (std::size_t bit = nbits; bit-- > 0;) {
        // r = (r << 1) | bit_of_a
        std::uint32_t carry = (a[bit / 32] >> (bit % 32)) & 1u;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint32_t next = r[i] >> 31;
            r[i] = (r[i] << 1) | carry;
            carry = next;
        }
        if (carry) r.push_back(carry);
        if (cmp_mag(r, b) >= 0) {
            r = sub_mag(r, b);
            q[bit / 32] |= 1u << (bit % 32);
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.mag_ = add_mag(mag_, o.mag_);
        r.sign_ = sign_;
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.mag_ = sub_mag(mag_, o.mag_);
            r.sign_ = sign_;
        } else {
            r.mag_ = sub_mag(o.mag_, mag_);
            r.sign_ = o.sign_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (sign_ == 0 || o.sign_ == 0) return r;
    r.mag_ = mul_mag(mag_, o.mag_);
    r.sign_ = sign_ * o.sign_;
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool BigInt::operator<(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::from_string(std::string_view s) {
    std::size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty literal");
    BigInt r;
    const BigInt chunk_base(1000000000LL);
    std::size_t pos = i;
    while (pos < s.size()) {
        std::size_t take = std::min<std::size_t>(9, s.size() - pos);
        long long piece = 0;
        BigInt base = take == 9 ? chunk_base : BigInt(1);
        for (std::size_t k = 0; k < take; ++k) {
            char c = s[pos + k];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            piece = piece * 10 + (c - '0');
            if (take != 9) base = base * BigInt(10);
        }
        r = r * base + BigInt(piece);
        pos += take;
    }
    if (sign < 0) r = -r;
    return r;
}

std::string BigInt::str() const {
    if (is_zero()) return "0";
    std::string out;
    BigInt v = abs();
    const BigInt chunk(1000000000LL);
    std::vector<std::uint32_t> pieces;
    while (!v.is_zero()) {
        BigInt q, r;
        divmod(v, chunk, q, r);
        pieces.push_back(r.mag_.empty() ? 0u : r.mag_[0]);
        v = std::move(q);
    }
    out = std::to_string(pieces.back());
    for (std::size_t i = pieces.size() - 1; i-- > 0;) {
        std::string p = std::to_string(pieces[i]);
        out += std::string(9 - p.size(), '0') + p;
    }
    if (sign_ < 0) out.insert(out.begin(), '-');
    return out;
}

std::uint64_t BigInt::to_u64() const {
    std::uint64_t v = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    return v;
}

}  // namespace exactlin
