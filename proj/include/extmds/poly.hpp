#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "extmds/field.hpp"

namespace extmds {

// Dense univariate polynomial over one field context, constant term first.
// Canonical form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector.
class Poly {
  public:
    Poly() = default;
    Poly(std::shared_ptr<const Field> ctx, std::vector<felem> coeffs)
        : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        trim();
    }
    static Poly zero(std::shared_ptr<const Field> ctx) { return Poly(std::move(ctx), {}); }
    static Poly one(std::shared_ptr<const Field> ctx) { return Poly(std::move(ctx), {1}); }
    static Poly x(std::shared_ptr<const Field> ctx) { return Poly(std::move(ctx), {0, 1}); }
    static Poly x_pow_n_minus_1(std::shared_ptr<const Field> ctx, std::uint32_t n);

    const std::shared_ptr<const Field>& context() const { return ctx_; }
    const std::vector<felem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    felem lead() const { return c_.back(); }
    felem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly monic() const;
    felem eval(felem x) const;
    // evaluate at a point of the quadratic extension of this context
    felem eval_in_extension(const Field& ext, felem x) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.ctx_.get() == b.ctx_.get() && a.c_ == b.c_;
    }
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(felem s) const;

    std::string to_string() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check(const Poly& o) const {
        if (ctx_.get() != o.ctx_.get()) throw ContextMismatch("polynomials from different contexts");
    }
    std::shared_ptr<const Field> ctx_;
    std::vector<felem> c_;
};

struct DivModResult {
    Poly quotient, remainder;
};
DivModResult poly_divmod(const Poly& f, const Poly& g);
bool divides(const Poly& g, const Poly& f);  // g | f
Poly poly_gcd(const Poly& f, const Poly& g);
Poly poly_lcm(const Poly& f, const Poly& g);

struct CyclotomicCoset {
    std::uint32_t leader;
    std::vector<std::uint32_t> members;  // sorted
    std::uint32_t n, q;
};

CyclotomicCoset cyclotomic_coset(std::uint32_t s, std::uint32_t n, std::uint32_t q);
std::vector<std::uint32_t> coset_leaders(std::uint32_t n, std::uint32_t q);

// Minimal polynomial of beta^s over GF(q); monic, irreducible, degree equal
// to the size of the q-cyclotomic coset of s modulo q+1.
Poly minimal_polynomial(const Tower& tower, std::uint32_t s);

}  // namespace extmds
