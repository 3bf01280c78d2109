#include "extmds/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace extmds {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// dense polynomials over GF(p), constant term first
using PPoly = std::vector<std::uint32_t>;

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& mod, std::uint32_t p) {
    PPoly prod(a.size() + b.size() > 0 ? a.size() + b.size() - 1 : 0, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    // reduce by monic mod
    std::size_t dm = mod.size() - 1;
    while (prod.size() > dm) {
        std::uint32_t lead = prod.back();
        std::size_t shift = prod.size() - 1 - dm;
        if (lead) {
            for (std::size_t i = 0; i <= dm; ++i) {
                std::uint64_t t = static_cast<std::uint64_t>(lead) * mod[i] % p;
                prod[shift + i] = (prod[shift + i] + p - t) % p;
            }
        }
        prod.pop_back();
    }
    ptrim(prod);
    return prod;
}

PPoly ppowmod(PPoly base, std::uint64_t e, const PPoly& mod, std::uint32_t p) {
    PPoly out{1};
    while (e) {
        if (e & 1) out = pmulmod(out, base, mod, p);
        base = pmulmod(base, base, mod, p);
        e >>= 1;
    }
    return out;
}

PPoly pgcd(PPoly a, PPoly b, std::uint32_t p) {
    auto inv_mod_p = [p](std::uint32_t x) {
        std::uint32_t r = 1;
        for (std::uint32_t e = p - 2; e; e >>= 1) {
            if (e & 1) r = static_cast<std::uint64_t>(r) * x % p;
            x = static_cast<std::uint64_t>(x) * x % p;
        }
        return r;
    };
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size()) {
            std::uint32_t f = static_cast<std::uint64_t>(a.back()) * inv_mod_p(b.back()) % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t t = static_cast<std::uint64_t>(f) * b[i] % p;
                a[shift + i] = (a[shift + i] + p - t) % p;
            }
            ptrim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

// Rabin irreducibility test for monic f of degree m over GF(p)
bool irreducible_over_prime(const PPoly& f, std::uint32_t p) {
    std::size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    PPoly x{0, 1};
    for (std::uint32_t r : prime_factors(static_cast<std::uint32_t>(m))) {
        std::uint64_t e = 1;
        for (std::size_t i = 0; i < m / r; ++i) e *= p;
        PPoly h = ppowmod(x, e, f, p);  // x^(p^(m/r)) mod f
        // gcd(h - x, f) must be 1
        PPoly d = h;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        ptrim(d);
        PPoly g = pgcd(d, f, p);
        if (g.size() != 1) return false;
    }
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < m; ++i) e *= p;
    PPoly h = ppowmod(x, e, f, p);  // must equal x
    return h == x;
}

std::mutex g_registry_mutex;
std::map<std::uint32_t, std::shared_ptr<const Tower>> g_towers;
std::map<std::uint32_t, std::shared_ptr<const Field>> g_fields;

}  // namespace

felem Field::add(felem a, felem b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
        felem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (base_) {
        std::uint32_t bq = base_->order();
        return base_->add(a % bq, b % bq) + bq * base_->add(a / bq, b / bq);
    }
    felem out = 0, mult = 1;
    while (a || b) {
        felem s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

felem Field::sub(felem a, felem b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
        return a >= b ? a - b : a + p_ - b;
    }
    if (base_) {
        std::uint32_t bq = base_->order();
        return base_->sub(a % bq, b % bq) + bq * base_->sub(a / bq, b / bq);
    }
    felem out = 0, mult = 1;
    while (a || b) {
        felem x = a % p_, y = b % p_;
        out += (x >= y ? x - y : x + p_ - y) * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

felem Field::mul_slow(felem a, felem b) const {
    if (base_) {
        std::uint32_t bq = base_->order();
        felem a0 = a % bq, a1 = a / bq, b0 = b % bq, b1 = b / bq;
        // (a0 + a1 y)(b0 + b1 y) mod y^2 + f1 y + f0
        felem c0 = base_->mul(a0, b0);
        felem c1 = base_->add(base_->mul(a0, b1), base_->mul(a1, b0));
        felem c2 = base_->mul(a1, b1);
        // y^2 = -f1 y - f0
        felem f0 = modulus_[0], f1 = modulus_[1];
        c1 = base_->sub(c1, base_->mul(c2, f1));
        c0 = base_->sub(c0, base_->mul(c2, f0));
        return c0 + bq * c1;
    }
    // digits over GF(p), schoolbook then reduce by modulus_
    std::vector<std::uint32_t> da(m_, 0), db(m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i, a /= p_) da[i] = a % p_;
    for (std::uint32_t i = 0; i < m_; ++i, b /= p_) db[i] = b % p_;
    PPoly prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i)
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
    for (std::size_t d = prod.size(); d-- > m_;) {
        std::uint32_t lead = prod[d];
        if (lead) {
            for (std::uint32_t i = 0; i <= m_; ++i) {
                std::uint64_t t = static_cast<std::uint64_t>(lead) * modulus_[i] % p_;
                std::size_t pos = d - m_ + i;
                prod[pos] = (prod[pos] + p_ - t) % p_;
            }
        }
    }
    felem out = 0;
    for (std::uint32_t i = m_; i-- > 0;) out = out * p_ + prod[i];
    return out;
}

void Field::init_tables() {
    // find a generator of the multiplicative group, smallest encoding first
    std::vector<std::uint32_t> factors = prime_factors(q_ - 1);
    auto pow_slow = [this](felem a, std::uint32_t e) {
        felem r = 1;
        while (e) {
            if (e & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    };
    for (felem g = 2; g < q_; ++g) {
        bool ok = true;
        for (std::uint32_t f : factors)
            if (pow_slow(g, (q_ - 1) / f) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            generator_ = g;
            break;
        }
    }
    if (q_ == 2) generator_ = 1;
    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    felem cur = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        exp_[i + (q_ - 1)] = cur;
        log_[cur] = i;
        cur = mul_slow(cur, generator_);
    }
}

std::shared_ptr<const Field> Field::build(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw PreconditionError("extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) throw PreconditionError("field order exceeds supported limit");
    }
    auto F = std::shared_ptr<Field>(new Field());
    F->p_ = p;
    F->m_ = m;
    F->q_ = static_cast<std::uint32_t>(q);
    // scan monic degree-m polynomials by ascending encoding of the lower coefficients
    std::uint64_t span = q;  // p^m choices of lower coefficients
    for (std::uint64_t code = 0;; ++code) {
        if (code >= span) throw std::logic_error("no irreducible modulus found");
        PPoly f(m + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < m; ++i, c /= p) f[i] = static_cast<std::uint32_t>(c % p);
        f[m] = 1;
        if (irreducible_over_prime(f, p)) {
            F->modulus_.assign(f.begin(), f.end());
            break;
        }
    }
    F->init_tables();
    return F;
}

std::shared_ptr<const Field> Field::extend_quadratic(std::shared_ptr<const Field> base) {
    if (!base) throw PreconditionError("null base field");
    if (base->order() <= 2) throw PreconditionError("quadratic tower requires q > 2");
    std::uint64_t q2 = static_cast<std::uint64_t>(base->order()) * base->order();
    if (q2 > (1u << 26)) throw PreconditionError("tower order exceeds supported limit");
    auto F = std::shared_ptr<Field>(new Field());
    F->p_ = base->characteristic();
    F->m_ = 2 * base->degree();
    F->q_ = static_cast<std::uint32_t>(q2);
    F->base_ = base;
    std::uint32_t q = base->order();
    // scan y^2 + f1*y + f0 by encoding f0 + q*f1; degree 2 is irreducible iff rootless
    bool found = false;
    for (std::uint32_t code = 0; code < q * q && !found; ++code) {
        felem f0 = code % q, f1 = code / q;
        bool has_root = false;
        for (felem x = 0; x < q; ++x) {
            felem v = base->add(base->add(base->mul(x, x), base->mul(f1, x)), f0);
            if (v == 0) {
                has_root = true;
                break;
            }
        }
        if (!has_root) {
            F->modulus_ = {f0, f1, 1};
            found = true;
        }
    }
    if (!found) throw std::logic_error("no irreducible quadratic found");
    F->init_tables();
    return F;
}

felem Field::pow(felem a, std::int64_t e) const {
    if (a == 0) {
        if (e <= 0) throw std::domain_error("0 raised to non-positive power");
        return 0;
    }
    std::int64_t n = q_ - 1;
    std::int64_t r = ((e % n) + n) % n;
    return exp_[static_cast<std::uint64_t>(log_[a]) * r % n];
}

std::uint32_t Field::element_order(felem a) const {
    if (a == 0) throw std::domain_error("order of zero");
    if (a == 1) return 1;
    std::uint32_t n = q_ - 1;
    return n / std::gcd(log_[a], n);
}

felem Field::trace_to_prime(felem a) const {
    felem acc = 0, cur = a;
    for (std::uint32_t i = 0; i < m_; ++i) {
        acc = add(acc, cur);
        cur = pow(cur, p_);
    }
    if (acc >= p_) throw std::logic_error("trace landed outside the prime subfield");
    return acc;
}

felem Field::embed(felem base_elem) const {
    if (!base_) throw std::logic_error("embed: not a quadratic extension");
    if (base_elem >= base_->order()) throw PreconditionError("embed: value outside base field");
    return base_elem;
}

bool Field::in_base_subfield(felem a) const {
    if (!base_) throw std::logic_error("in_base_subfield: not a quadratic extension");
    return a < base_->order();
}

felem Field::project_to_base(felem a) const {
    if (!in_base_subfield(a)) throw std::domain_error("element is not in the base subfield");
    return a;
}

felem Field::trace_to_base(felem a) const {
    if (!base_) throw std::logic_error("trace_to_base: not a quadratic extension");
    felem t = add(a, frobenius(a));
    return project_to_base(t);
}

std::string Field::name() const {
    return "GF(" + std::to_string(q_) + ")";
}

Tower::Tower(std::shared_ptr<const Field> base) : base_(std::move(base)) {
    if (!base_ || base_->order() <= 2) throw PreconditionError("tower requires q > 2");
    top_ = Field::extend_quadratic(base_);
    std::uint32_t q = base_->order();
    std::uint32_t n = q * q - 1;
    for (felem a = 2;; ++a) {
        if (a >= top_->order()) throw std::logic_error("no primitive element found");
        if (top_->element_order(a) == n) {
            alpha_ = a;
            break;
        }
    }
    beta_ = top_->pow(alpha_, q - 1);
    if (top_->element_order(beta_) != q + 1) throw std::logic_error("beta order is not q+1");
}

std::vector<felem> Tower::unit_circle() const {
    std::uint32_t q = base_->order();
    std::vector<felem> out(q + 1);
    felem cur = 1;
    for (std::uint32_t i = 0; i <= q; ++i) {
        out[i] = cur;
        cur = top_->mul(cur, beta_);
    }
    return out;
}

std::shared_ptr<const Field> get_field(std::uint32_t q) {
    std::lock_guard<std::mutex> lk(g_registry_mutex);
    auto it = g_fields.find(q);
    if (it != g_fields.end()) return it->second;
    std::uint32_t p = 0, m = 0;
    for (std::uint32_t d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            std::uint32_t t = q;
            while (t % d == 0) {
                t /= d;
                ++m;
            }
            if (t != 1) throw PreconditionError(std::to_string(q) + " is not a prime power");
            break;
        }
    }
    auto F = Field::build(p, m);
    g_fields.emplace(q, F);
    return F;
}

std::shared_ptr<const Tower> get_tower(std::uint32_t q) {
    auto F = get_field(q);
    std::lock_guard<std::mutex> lk(g_registry_mutex);
    auto it = g_towers.find(q);
    if (it != g_towers.end()) return it->second;
    auto T = std::make_shared<const Tower>(F);
    g_towers.emplace(q, T);
    return T;
}

}  // namespace extmds
