#include "extmds/bigint.hpp"

#include <algorithm>

namespace extmds {

std::strong_ordering BigUint::cmp(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    return std::strong_ordering::equal;
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

std::uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint::to_u64: value exceeds 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

BigUint& BigUint::operator+=(const BigUint& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
    if (cmp(*this, o) == std::strong_ordering::less)
        throw std::underflow_error("BigUint subtraction underflow");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(limbs_[i]) - borrow - (i < o.limbs_.size() ? o.limbs_[i] : 0);
        borrow = s < 0;
        if (s < 0) s += (std::int64_t(1) << 32);
        limbs_[i] = static_cast<std::uint32_t>(s);
    }
    trim();
    return *this;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    BigUint out;
    if (a.is_zero() || b.is_zero()) return out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t s = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        out.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
    }
    out.trim();
    return out;
}

void BigUint::shift_left_bits(unsigned bits) {
    if (is_zero() || bits == 0) return;
    unsigned words = bits / 32, rem = bits % 32;
    std::size_t old = limbs_.size();
    limbs_.resize(old + words + 1, 0);
    for (std::size_t i = old; i-- > 0;) {
        std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << rem;
        limbs_[i + words + 1] |= static_cast<std::uint32_t>(v >> 32);
        limbs_[i + words] = static_cast<std::uint32_t>(v);
    }
    for (unsigned i = 0; i < words; ++i) limbs_[i] = 0;
    trim();
}

// shift-subtract long division; sizes in this project stay small enough
// that the quadratic behaviour is irrelevant
void BigUint::divmod(const BigUint& a, const BigUint& b, BigUint& q, BigUint& r) {
    if (b.is_zero()) throw std::domain_error("BigUint division by zero");
    q = BigUint();
    r = a;
    if (cmp(a, b) == std::strong_ordering::less) return;
    std::size_t shift = a.bit_length() - b.bit_length();
    BigUint d = b;
    d.shift_left_bits(static_cast<unsigned>(shift));
    std::vector<bool> bits(shift + 1, false);
    for (std::size_t i = shift + 1; i-- > 0;) {
        if (cmp(r, d) != std::strong_ordering::less) {
            r -= d;
            bits[i] = true;
        }
        // shift d right by one bit
        std::uint32_t carry = 0;
        for (std::size_t j = d.limbs_.size(); j-- > 0;) {
            std::uint32_t nc = d.limbs_[j] & 1;
            d.limbs_[j] = (d.limbs_[j] >> 1) | (carry << 31);
            carry = nc;
        }
        d.trim();
    }
    q.limbs_.assign((bits.size() + 31) / 32, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) q.limbs_[i / 32] |= (1u << (i % 32));
    q.trim();
}

std::uint32_t BigUint::divmod_small(std::uint32_t d) {
    if (d == 0) throw std::domain_error("BigUint division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

std::string BigUint::to_decimal() const {
    if (is_zero()) return "0";
    BigUint t = *this;
    std::string out;
    while (!t.is_zero()) {
        std::uint32_t chunk = t.divmod_small(1000000000u);
        std::string part = std::to_string(chunk);
        if (!t.is_zero()) part.insert(0, 9 - part.size(), '0');
        out.insert(0, part);
    }
    return out;
}

BigUint BigUint::from_decimal(std::string_view s) {
    BigUint out;
    if (s.empty()) throw std::invalid_argument("empty decimal string");
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad decimal digit");
        out = out * BigUint(10) + BigUint(static_cast<std::uint64_t>(c - '0'));
    }
    return out;
}

BigUint BigUint::pow(std::uint64_t base, unsigned exp) {
    BigUint out(1), b(base);
    while (exp) {
        if (exp & 1) out *= b;
        b *= b;
        exp >>= 1;
    }
    return out;
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
    while (!b.is_zero()) {
        BigUint q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigUint binomial(unsigned n, unsigned k) {
    if (k > n) return BigUint();
    if (k > n - k) k = n - k;
    BigUint out(1);
    for (unsigned i = 1; i <= k; ++i) {
        out *= BigUint(n - k + i);
        std::uint32_t rem = out.divmod_small(i);
        if (rem != 0) throw std::logic_error("binomial: non-exact intermediate division");
    }
    return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.neg_ == b.neg_) return BigInt(a.mag_ + b.mag_, a.neg_);
    if (a.mag_ >= b.mag_) return BigInt(a.mag_ - b.mag_, a.neg_);
    return BigInt(b.mag_ - a.mag_, b.neg_);
}

Rational::Rational(BigInt n, BigUint d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("Rational with zero denominator");
    if (num_.is_zero()) {
        den_ = BigUint(1);
        return;
    }
    BigUint g = BigUint::gcd(num_.magnitude(), den_);
    if (!(g == BigUint(1))) {
        num_ = BigInt(num_.magnitude() / g, num_.negative());
        den_ = den_ / g;
    }
}

BigInt Rational::to_integer() const {
    if (!is_integer()) throw std::logic_error("Rational::to_integer: value " + num_.to_decimal() + "/" + den_.to_decimal() + " is not integral");
    return num_;
}

Rational operator+(const Rational& a, const Rational& b) {
    BigInt n = a.num_ * BigInt(b.den_) + b.num_ * BigInt(a.den_);
    return Rational(std::move(n), a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_.is_zero()) throw std::domain_error("Rational division by zero");
    BigInt n = a.num_ * BigInt(b.den_);
    BigUint d = a.den_ * b.num_.magnitude();
    if (b.num_.negative()) n = -n;
    return Rational(std::move(n), std::move(d));
}

}  // namespace extmds
