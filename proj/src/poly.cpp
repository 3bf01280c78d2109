#include "extmds/poly.hpp"

#include <algorithm>
#include <numeric>

namespace extmds {

Poly Poly::x_pow_n_minus_1(std::shared_ptr<const Field> ctx, std::uint32_t n) {
    std::vector<felem> c(n + 1, 0);
    c[0] = ctx->neg(1);
    c[n] = 1;
    return Poly(std::move(ctx), std::move(c));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    if (is_monic()) return *this;
    return scaled(ctx_->inv(lead()));
}

Poly Poly::scaled(felem s) const {
    std::vector<felem> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = ctx_->mul(c_[i], s);
    return Poly(ctx_, std::move(c));
}

felem Poly::eval(felem x) const {
    felem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = ctx_->add(ctx_->mul(acc, x), c_[i]);
    return acc;
}

felem Poly::eval_in_extension(const Field& ext, felem x) const {
    if (&ext == ctx_.get()) return eval(x);
    if (ext.base().get() != ctx_.get())
        throw ContextMismatch("evaluation point lives in an unrelated context");
    felem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = ext.add(ext.mul(acc, x), ext.embed(c_[i]));
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    a.check(b);
    std::vector<felem> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.ctx_->add(a.coeff(i), b.coeff(i));
    return Poly(a.ctx_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    a.check(b);
    std::vector<felem> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.ctx_->sub(a.coeff(i), b.coeff(i));
    return Poly(a.ctx_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.ctx_);
    std::vector<felem> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = a.ctx_->add(c[i + j], a.ctx_->mul(a.c_[i], b.c_[j]));
    return Poly(a.ctx_, std::move(c));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || c_[i] != 1) out += std::to_string(c_[i]);
        if (i >= 1) {
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

DivModResult poly_divmod(const Poly& f, const Poly& g) {
    if (f.context().get() != g.context().get())
        throw ContextMismatch("divmod across contexts");
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    const auto& F = *f.context();
    std::vector<felem> rem(f.coeffs());
    std::vector<felem> quot;
    int dg = g.degree();
    if (f.degree() >= dg) quot.assign(f.degree() - dg + 1, 0);
    felem lead_inv = F.inv(g.lead());
    for (int d = f.degree(); d >= dg; --d) {
        felem c = rem[d];
        if (c == 0) continue;
        felem q = F.mul(c, lead_inv);
        quot[d - dg] = q;
        for (int i = 0; i <= dg; ++i)
            rem[d - dg + i] = F.sub(rem[d - dg + i], F.mul(q, g.coeffs()[i]));
    }
    return {Poly(f.context(), std::move(quot)), Poly(f.context(), std::move(rem))};
}

bool divides(const Poly& g, const Poly& f) {
    return poly_divmod(f, g).remainder.is_zero();
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    if (f.context().get() != g.context().get() && !f.is_zero() && !g.is_zero())
        throw ContextMismatch("gcd across contexts");
    Poly a = f, b = g;
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0)");
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly poly_lcm(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly::zero(f.context());
    Poly d = poly_gcd(f, g);
    return poly_divmod(f * g, d).quotient.monic();
}

CyclotomicCoset cyclotomic_coset(std::uint32_t s, std::uint32_t n, std::uint32_t q) {
    if (std::gcd(n, q) != 1) throw PreconditionError("cyclotomic coset needs gcd(n, q) = 1");
    if (s >= n) throw PreconditionError("coset representative out of range");
    std::vector<std::uint32_t> members;
    std::uint64_t cur = s;
    do {
        members.push_back(static_cast<std::uint32_t>(cur));
        cur = cur * q % n;
    } while (cur != s);
    std::sort(members.begin(), members.end());
    return {members.front(), std::move(members), n, q};
}

std::vector<std::uint32_t> coset_leaders(std::uint32_t n, std::uint32_t q) {
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> leaders;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        leaders.push_back(s);
        std::uint64_t cur = s;
        do {
            seen[static_cast<std::size_t>(cur)] = true;
            cur = cur * q % n;
        } while (cur != s);
    }
    return leaders;
}

Poly minimal_polynomial(const Tower& tower, std::uint32_t s) {
    std::uint32_t q = tower.q(), n = q + 1;
    if (s > q) throw PreconditionError("exponent out of [0, q]");
    CyclotomicCoset coset = cyclotomic_coset(s % n, n, q);
    const Field& top = *tower.top();
    // product of (x - beta^i) over the coset, computed upstairs
    std::vector<felem> c{1};  // over the top field
    for (std::uint32_t i : coset.members) {
        felem root = tower.beta_pow(i);
        std::vector<felem> next(c.size() + 1, 0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] = top.add(next[j + 1], c[j]);
            next[j] = top.sub(next[j], top.mul(c[j], root));
        }
        c = std::move(next);
    }
    std::vector<felem> down(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) down[j] = top.project_to_base(c[j]);
    return Poly(tower.base(), std::move(down));
}

}  // namespace extmds
