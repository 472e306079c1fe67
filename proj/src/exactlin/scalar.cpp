#include "exactlin/scalar.hpp"

#include <stdexcept>

namespace exactlin {

Field Field::Fp(std::uint64_t prime) {
    if (prime < 2) throw std::invalid_argument("Field: modulus must be a prime >= 2");
    if (prime > (1ULL << 31)) throw std::invalid_argument("Field: prime too large");
    for (std::uint64_t d = 2; d * d <= prime; ++d)
        if (prime % d == 0) throw std::invalid_argument("Field: modulus is not prime");
    Field f;
    f.p = prime;
    return f;
}

Scalar Field::operator()(long long v) const {
    return p == 0 ? Scalar(v) : Scalar::mod_p(BigInt(v), p);
}

Scalar Field::parse(std::string_view s) const {
    auto slash = s.find('/');
    BigInt num, den(1);
    if (slash == std::string_view::npos) {
        num = BigInt::from_string(s);
    } else {
        num = BigInt::from_string(s.substr(0, slash));
        den = BigInt::from_string(s.substr(slash + 1));
    }
    Scalar r = Scalar::rational(std::move(num), std::move(den));
    if (p == 0) return r;
    Scalar lift = Scalar::mod_p(BigInt(0), p);
    return lift + r;  // alignment converts the rational into F_p
}

std::string Field::str() const {
    return p == 0 ? std::string("Q") : "Fp:" + std::to_string(p);
}

Scalar::Scalar(long long num, long long den) : num_(num), den_(den) { canonicalize(); }

Scalar Scalar::rational(BigInt num, BigInt den) {
    Scalar s;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.canonicalize();
    return s;
}

Scalar Scalar::mod_p(BigInt value, std::uint64_t p) {
    Scalar s;
    s.p_ = p;
    s.num_ = std::move(value);
    s.den_ = BigInt(1);
    s.canonicalize();
    return s;
}

void Scalar::canonicalize() {
    if (p_ != 0) {
        BigInt m(static_cast<long long>(p_));
        num_ = num_ % m;
        if (num_.sign() < 0) num_ += m;
        den_ = BigInt(1);
        return;
    }
    if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

bool Scalar::is_one() const { return num_.is_one() && den_.is_one(); }

Scalar Scalar::to_prime(std::uint64_t p) const {
    if (p_ == p) return *this;
    // reduce num/den mod p; needs den invertible
    BigInt m(static_cast<long long>(p));
    BigInt d = den_ % m;
    if (d.sign() < 0) d += m;
    if (d.is_zero()) throw std::domain_error("Scalar: rational has no image in F_" + std::to_string(p));
    // Fermat inverse d^(p-2) mod p
    std::uint64_t base = d.to_u64() % p, e = p - 2, inv = 1;
    while (e) {
        if (e & 1) inv = (unsigned __int128)inv * base % p;
        base = (unsigned __int128)base * base % p;
        e >>= 1;
    }
    BigInt n = num_ % m;
    if (n.sign() < 0) n += m;
    BigInt v = n * BigInt(static_cast<long long>(inv));
    return mod_p(std::move(v), p);
}

void Scalar::align(Scalar& a, Scalar& b) {
    if (a.p_ == b.p_) return;
    if (a.p_ != 0 && b.p_ != 0)
        throw std::logic_error("Scalar: mixing elements of F_" + std::to_string(a.p_) +
                               " and F_" + std::to_string(b.p_));
    if (a.p_ == 0)
        a = a.to_prime(b.p_);
    else
        b = b.to_prime(a.p_);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    r.canonicalize();
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar a = *this, b = o;
    align(a, b);
    Scalar r;
    r.p_ = a.p_;
    if (a.p_ != 0) {
        r.num_ = a.num_ + b.num_;
        r.den_ = BigInt(1);
    } else {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    }
    r.canonicalize();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar a = *this, b = o;
    align(a, b);
    Scalar r;
    r.p_ = a.p_;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.p_ != 0 ? BigInt(1) : a.den_ * b.den_;
    r.canonicalize();
    return r;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    if (p_ != 0) return Scalar::rational(BigInt(1), num_).to_prime(p_);
    return rational(den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    Scalar a = *this, b = o;
    align(a, b);
    if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
    return a * b.inv();
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ == o.p_) return num_ == o.num_ && den_ == o.den_;
    Scalar a = *this, b = o;
    align(a, b);
    return a.num_ == b.num_;
}

bool Scalar::operator<(const Scalar& o) const {
    Scalar a = *this, b = o;
    align(a, b);
    if (a.p_ != 0) return a.num_ < b.num_;
    return a.num_ * b.den_ < b.num_ * a.den_;
}

std::string Scalar::str() const {
    if (p_ != 0 || den_.is_one()) return num_.str();
    return num_.str() + "/" + den_.str();
}

}  // namespace exactlin
