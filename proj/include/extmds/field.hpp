#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace extmds {

using felem = std::uint32_t;

struct ContextMismatch : std::logic_error {
    using std::logic_error::logic_error;
};
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// GF(p^m). Elements are integers in [0, p^m) whose base-p digits are the
// coordinates w.r.t. the polynomial basis of the defining modulus. A Field
// may alternatively be built as a quadratic extension of a base Field, in
// which case elements are lo + hi*q over the base encoding and the trace,
// Frobenius and subfield tests are structural.
class Field : public std::enable_shared_from_this<Field> {
  public:
    // Deterministic construction: modulus is the first monic irreducible of
    // degree m over GF(p) in ascending order of its base-p integer encoding.
    static std::shared_ptr<const Field> build(std::uint32_t p, std::uint32_t m);
    // GF(q^2) as GF(q)[y]/(f), f the first irreducible y^2 + f1*y + f0 by the
    // same encoding order. Requires q > 2.
    static std::shared_ptr<const Field> extend_quadratic(std::shared_ptr<const Field> base);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }  // over GF(p)
    std::uint32_t order() const { return q_; }   // p^m
    const std::vector<felem>& modulus() const { return modulus_; }
    const std::shared_ptr<const Field>& base() const { return base_; }
    bool is_quadratic_extension() const { return base_ != nullptr; }
    std::string name() const;

    felem add(felem a, felem b) const;
    felem sub(felem a, felem b) const;
    felem neg(felem a) const { return sub(0, a); }
    felem mul(felem a, felem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    felem inv(felem a) const {
        if (a == 0) throw std::domain_error("field inverse of zero");
        return exp_[q_ - 1 - log_[a]];
    }
    felem div(felem a, felem b) const { return mul(a, inv(b)); }
    felem pow(felem a, std::int64_t e) const;
    felem from_int(std::uint64_t v) const { return static_cast<felem>(v % p_); }  // prime-subfield image
    std::uint32_t log(felem a) const {
        if (a == 0) throw std::domain_error("log of zero");
        return log_[a];
    }
    felem exp(std::uint64_t e) const { return q_ == 2 ? 1 : exp_[e % (q_ - 1)]; }
    felem generator() const { return generator_; }
    std::uint32_t element_order(felem a) const;

    // absolute trace GF(p^m) -> GF(p)
    felem trace_to_prime(felem a) const;

    // quadratic-extension structure (throws unless is_quadratic_extension())
    felem embed(felem base_elem) const;
    bool in_base_subfield(felem a) const;
    felem project_to_base(felem a) const;  // inverse of embed
    felem frobenius(felem a) const { return pow(a, base_order()); }
    felem trace_to_base(felem a) const;  // a + a^q, as a base element

    bool same(const Field& o) const { return this == &o; }

  private:
    Field() = default;
    void init_tables();
    felem mul_slow(felem a, felem b) const;  // polynomial multiplication mod modulus
    std::uint32_t base_order() const {
        if (!base_) throw std::logic_error("not a quadratic extension");
        return base_->order();
    }

    std::uint32_t p_ = 0, m_ = 0, q_ = 0;
    std::shared_ptr<const Field> base_;   // null for ground fields
    std::vector<felem> modulus_;          // degree m_local+1 coefficients, constant first;
                                          // over GF(p) for ground fields, over base_ otherwise
    felem generator_ = 0;
    std::vector<felem> exp_;  // exp_[i] = g^i for i in [0, 2(q-1))
    std::vector<std::uint32_t> log_;
};

// GF(q) together with its quadratic extension, the distinguished primitive
// element alpha of GF(q^2) and beta = alpha^(q-1) of order q+1.
class Tower {
  public:
    explicit Tower(std::shared_ptr<const Field> base);

    const std::shared_ptr<const Field>& base() const { return base_; }
    const std::shared_ptr<const Field>& top() const { return top_; }
    std::uint32_t q() const { return base_->order(); }
    felem alpha() const { return alpha_; }
    felem beta() const { return beta_; }
    felem beta_pow(std::int64_t e) const { return top_->pow(beta_, e); }
    felem trace(felem top_elem) const { return top_->trace_to_base(top_elem); }
    std::vector<felem> unit_circle() const;  // [beta^0, ..., beta^q]

  private:
    std::shared_ptr<const Field> base_, top_;
    felem alpha_ = 0, beta_ = 0;
};

// process-wide memoized towers, keyed by q; contexts are immutable
std::shared_ptr<const Tower> get_tower(std::uint32_t q);
std::shared_ptr<const Field> get_field(std::uint32_t q);

// Value with a context tag; mixed-context arithmetic throws ContextMismatch.
class FieldElement {
  public:
    FieldElement(std::shared_ptr<const Field> ctx, felem v) : ctx_(std::move(ctx)), v_(v) {}
    felem value() const { return v_; }
    const std::shared_ptr<const Field>& context() const { return ctx_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return {a.ctx_, a.ctx_->add(a.v_, b.v_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return {a.ctx_, a.ctx_->sub(a.v_, b.v_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return {a.ctx_, a.ctx_->mul(a.v_, b.v_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return {a.ctx_, a.ctx_->div(a.v_, b.v_)};
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return a.v_ == b.v_;
    }

  private:
    void check(const FieldElement& o) const {
        if (ctx_.get() != o.ctx_.get())
            throw ContextMismatch("field elements from different contexts");
    }
    std::shared_ptr<const Field> ctx_;
    felem v_;
};

// largest supported cardinality for table-based contexts
inline constexpr std::uint64_t kMaxFieldOrder = 1u << 13;

}  // namespace extmds
