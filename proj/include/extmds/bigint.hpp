#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace extmds {

// Unsigned arbitrary-precision integer, little-endian base-2^32 limbs,
// canonical form (no high zero limbs, zero == empty limb vector).
class BigUint {
  public:
    BigUint() = default;
    BigUint(std::uint64_t v) {
        if (v != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(v));
            if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
        }
    }
    static BigUint from_decimal(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    std::size_t bit_length() const;
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const;
    std::string to_decimal() const;

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
    friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) { return cmp(a, b); }

    BigUint& operator+=(const BigUint& o);
    BigUint& operator-=(const BigUint& o);  // requires *this >= o
    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
    friend BigUint operator*(const BigUint& a, const BigUint& b);
    BigUint& operator*=(const BigUint& o) { return *this = *this * o; }

    // quotient and remainder; throws on division by zero
    static void divmod(const BigUint& a, const BigUint& b, BigUint& q, BigUint& r);
    friend BigUint operator/(const BigUint& a, const BigUint& b) {
        BigUint q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigUint operator%(const BigUint& a, const BigUint& b) {
        BigUint q, r;
        divmod(a, b, q, r);
        return r;
    }

    std::uint32_t divmod_small(std::uint32_t d);  // in-place /= d, returns remainder

    static BigUint pow(std::uint64_t base, unsigned exp);
    static BigUint gcd(BigUint a, BigUint b);

  private:
    static std::strong_ordering cmp(const BigUint& a, const BigUint& b);
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    void shift_left_bits(unsigned bits);
    std::vector<std::uint32_t> limbs_;
};

BigUint binomial(unsigned n, unsigned k);

// Signed wrapper over BigUint.
class BigInt {
  public:
    BigInt() = default;
    BigInt(std::int64_t v) : neg_(v < 0), mag_(v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v)) {}
    BigInt(BigUint m, bool neg = false) : neg_(neg && !m.is_zero()), mag_(std::move(m)) {}

    bool is_zero() const { return mag_.is_zero(); }
    bool negative() const { return neg_; }
    const BigUint& magnitude() const { return mag_; }
    std::string to_decimal() const { return (neg_ ? "-" : "") + mag_.to_decimal(); }

    friend bool operator==(const BigInt& a, const BigInt& b) { return a.neg_ == b.neg_ && a.mag_ == b.mag_; }
    BigInt operator-() const { return BigInt(mag_, !neg_); }
    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }
    friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(a.mag_ * b.mag_, a.neg_ != b.neg_); }
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this + (-o); }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  private:
    bool neg_ = false;
    BigUint mag_;
};

// Exact rational; denominator kept positive, gcd-normalized.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(BigInt n, BigUint d);

    const BigInt& num() const { return num_; }
    const BigUint& den() const { return den_; }
    bool is_integer() const { return den_ == BigUint(1); }
    // exact integer value; throws if not integral
    BigInt to_integer() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num_, b.den_); }
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

  private:
    BigInt num_;
    BigUint den_;
};

}  // namespace extmds
