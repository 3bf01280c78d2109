#include "extmds/linear_code.hpp"

#include <algorithm>
#include <thread>

#include "extmds/enum_kernels.hpp"

namespace extmds {

WeightDistribution WeightDistribution::from_hist(const std::vector<std::uint64_t>& hist) {
    std::vector<BigUint> c(hist.size());
    for (std::size_t i = 0; i < hist.size(); ++i) c[i] = BigUint(hist[i]);
    return WeightDistribution(std::move(c));
}

BigUint WeightDistribution::total() const {
    BigUint s;
    for (const auto& c : counts_) s += c;
    return s;
}

int WeightDistribution::min_positive_weight() const {
    for (std::size_t w = 1; w < counts_.size(); ++w)
        if (!counts_[w].is_zero()) return static_cast<int>(w);
    return -1;
}

std::string WeightDistribution::enumerator_string() const {
    std::string out;
    for (std::size_t w = 0; w < counts_.size(); ++w) {
        if (counts_[w].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (w == 0) {
            out += counts_[0].to_decimal();
        } else {
            if (!(counts_[w] == BigUint(1))) out += counts_[w].to_decimal();
            out += "z^" + std::to_string(w);
        }
    }
    return out.empty() ? "0" : out;
}

WeightDistribution macwilliams_transform(const WeightDistribution& w, std::uint32_t n,
                                         std::uint32_t k, std::uint32_t q) {
    if (w.length() != n) throw std::invalid_argument("distribution length mismatch");
    // binomial table and powers of q-1
    std::vector<std::vector<BigUint>> bin(n + 1, std::vector<BigUint>(n + 1));
    for (std::uint32_t i = 0; i <= n; ++i)
        for (std::uint32_t j = 0; j <= i; ++j) bin[i][j] = binomial(i, j);
    std::vector<BigUint> qm1(n + 1);
    qm1[0] = BigUint(1);
    for (std::uint32_t t = 1; t <= n; ++t) qm1[t] = qm1[t - 1] * BigUint(q - 1);

    BigUint qk = BigUint::pow(q, k);
    std::vector<BigUint> out(n + 1);
    for (std::uint32_t j = 0; j <= n; ++j) {
        BigInt acc(0);
        for (std::uint32_t i = 0; i <= n; ++i) {
            if (w.count(i).is_zero()) continue;
            // Krawtchouk K_j(i) = sum_h (-1)^h C(i,h) C(n-i, j-h) (q-1)^(j-h)
            BigInt kj(0);
            for (std::uint32_t h = 0; h <= j && h <= i; ++h) {
                if (j - h > n - i) continue;
                BigUint term = bin[i][h] * bin[n - i][j - h] * qm1[j - h];
                kj += BigInt(std::move(term), h % 2 == 1);
            }
            acc += BigInt(w.count(i)) * kj;
        }
        if (acc.negative())
            throw std::logic_error("MacWilliams transform produced a negative count");
        BigUint quot, rem;
        BigUint::divmod(acc.magnitude(), qk, quot, rem);
        if (!rem.is_zero())
            throw std::logic_error("MacWilliams transform produced a non-integral count");
        out[j] = std::move(quot);
    }
    return WeightDistribution(std::move(out));
}

std::uint64_t enumeration_cost(std::uint32_t q, std::uint32_t k) {
    std::uint64_t cost = 1;
    const std::uint64_t cap = std::uint64_t(1) << 63;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (cost > cap / q) return cap;
        cost *= q;
    }
    return cost;
}

LinearCode::LinearCode(const LinearCode& o) : ctx_(o.ctx_), n_(o.n_), k_(o.k_), gen_(o.gen_) {
    std::lock_guard<std::mutex> lk(o.cache_mutex_);
    wd_cache_ = o.wd_cache_;
}

LinearCode& LinearCode::operator=(const LinearCode& o) {
    if (this == &o) return *this;
    ctx_ = o.ctx_;
    n_ = o.n_;
    k_ = o.k_;
    gen_ = o.gen_;
    std::lock_guard<std::mutex> lk(o.cache_mutex_);
    wd_cache_ = o.wd_cache_;
    return *this;
}

LinearCode::LinearCode(LinearCode&& o) noexcept
    : ctx_(std::move(o.ctx_)), n_(o.n_), k_(o.k_), gen_(std::move(o.gen_)), wd_cache_(std::move(o.wd_cache_)) {}

LinearCode& LinearCode::operator=(LinearCode&& o) noexcept {
    ctx_ = std::move(o.ctx_);
    n_ = o.n_;
    k_ = o.k_;
    gen_ = std::move(o.gen_);
    wd_cache_ = std::move(o.wd_cache_);
    return *this;
}

LinearCode LinearCode::from_matrix(GFMatrix m) {
    if (m.cols() == 0) throw PreconditionError("code length must be positive");
    std::size_t rank = m.rref();
    LinearCode c;
    c.ctx_ = m.context();
    c.n_ = static_cast<std::uint32_t>(m.cols());
    c.k_ = static_cast<std::uint32_t>(rank);
    c.gen_ = GFMatrix(m.context(), rank, m.cols());
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c.gen_.at(i, j) = m.at(i, j);
    return c;
}

LinearCode LinearCode::from_generator(std::shared_ptr<const Field> ctx,
                                      const std::vector<std::vector<felem>>& rows) {
    if (rows.empty()) throw PreconditionError("no generator rows");
    std::size_t n = rows.front().size();
    if (n == 0) throw PreconditionError("code length must be positive");
    GFMatrix m(std::move(ctx), rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != n) throw PreconditionError("ragged generator rows");
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return from_matrix(std::move(m));
}

LinearCode LinearCode::zero_code(std::shared_ptr<const Field> ctx, std::uint32_t n) {
    if (n == 0) throw PreconditionError("code length must be positive");
    LinearCode c;
    c.ctx_ = ctx;
    c.n_ = n;
    c.k_ = 0;
    c.gen_ = GFMatrix(std::move(ctx), 0, n);
    return c;
}

LinearCode LinearCode::full_space(std::shared_ptr<const Field> ctx, std::uint32_t n) {
    GFMatrix m(ctx, n, n);
    for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return from_matrix(std::move(m));
}

LinearCode LinearCode::dual() const {
    return from_matrix(gen_.null_space());
}

LinearCode LinearCode::extended() const {
    const Field& F = *ctx_;
    GFMatrix m(ctx_, k_, n_ + 1);
    for (std::uint32_t i = 0; i < k_; ++i) {
        felem s = 0;
        for (std::uint32_t j = 0; j < n_; ++j) {
            m.at(i, j) = gen_.at(i, j);
            s = F.add(s, gen_.at(i, j));
        }
        m.at(i, n_) = F.neg(s);
    }
    if (k_ == 0) return zero_code(ctx_, n_ + 1);
    return from_matrix(std::move(m));
}

LinearCode LinearCode::augmented() const {
    GFMatrix ones(ctx_, 1, n_);
    for (std::uint32_t j = 0; j < n_; ++j) ones.at(0, j) = 1;
    return from_matrix(gen_.vstack(ones));
}

LinearCode sum(const LinearCode& a, const LinearCode& b) {
    if (a.ctx_.get() != b.ctx_.get() || a.n_ != b.n_)
        throw ContextMismatch("code sum across different spaces");
    if (a.k_ == 0) return b;
    if (b.k_ == 0) return a;
    return LinearCode::from_matrix(a.gen_.vstack(b.gen_));
}

LinearCode intersect(const LinearCode& a, const LinearCode& b) {
    if (a.ctx_.get() != b.ctx_.get() || a.n_ != b.n_)
        throw ContextMismatch("intersection across different spaces");
    return sum(a.dual(), b.dual()).dual();
}

bool LinearCode::contains(const std::vector<felem>& word) const {
    if (word.size() != n_) throw std::invalid_argument("word length mismatch");
    const Field& F = *ctx_;
    std::vector<felem> w = word;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint32_t piv = 0;
        while (piv < n_ && gen_.at(i, piv) == 0) ++piv;
        felem f = w[piv];
        if (f == 0) continue;
        for (std::uint32_t j = piv; j < n_; ++j) w[j] = F.sub(w[j], F.mul(f, gen_.at(i, j)));
    }
    return std::all_of(w.begin(), w.end(), [](felem x) { return x == 0; });
}

bool LinearCode::is_subcode_of(const LinearCode& other) const {
    if (other.n_ != n_ || other.ctx_.get() != ctx_.get()) return false;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::vector<felem> row(gen_.row(i), gen_.row(i) + n_);
        if (!other.contains(row)) return false;
    }
    return true;
}

bool LinearCode::contains_all_one() const {
    return contains(std::vector<felem>(n_, 1));
}

std::string LinearCode::params_string() const {
    return "[" + std::to_string(n_) + "," + std::to_string(k_) + "]";
}

GFMatrix parity_check_of_extended(const GFMatrix& h) {
    GFMatrix out(h.context(), h.rows() + 1, h.cols() + 1);
    for (std::size_t j = 0; j <= h.cols(); ++j) out.at(0, j) = 1;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t j = 0; j < h.cols(); ++j) out.at(i + 1, j) = h.at(i, j);
        out.at(i + 1, h.cols()) = 0;
    }
    return out;
}

namespace {

// kernel-layout encoding of one field element into plane bytes
void encode_element(const Field& F, felem v, std::uint8_t* planes, std::uint32_t nplanes,
                    std::uint32_t stride, std::uint32_t pos) {
    if (F.characteristic() == 2 || F.degree() == 1) {
        planes[pos] = static_cast<std::uint8_t>(v);
        return;
    }
    std::uint32_t p = F.characteristic();
    for (std::uint32_t d = 0; d < nplanes; ++d) {
        planes[d * stride + pos] = static_cast<std::uint8_t>(v % p);
        v /= p;
    }
}

struct EnumJob {
    kern::Layout layout;
    const kern::Ops* ops;
    std::uint32_t q, k;
    std::size_t block;                  // planes * stride
    const std::uint8_t* scaled;         // k rows of q blocks
    std::vector<std::uint64_t> hist;
    std::vector<std::vector<std::uint8_t>> partial;

    const std::uint8_t* row_block(std::uint32_t level, std::uint32_t s) const {
        return scaled + (static_cast<std::size_t>(level) * q + s) * block;
    }
    void dfs(std::uint32_t level) {
        const std::uint8_t* base = partial[level].data();
        if (level == k - 1) {
            ops->leaf_sweep(layout, base, row_block(level, 0), q, hist.data());
            return;
        }
        for (std::uint32_t s = 0; s < q; ++s) {
            ops->vec_add(layout, partial[level + 1].data(), base, row_block(level, s));
            dfs(level + 1);
        }
    }
};

}  // namespace

WeightDistribution LinearCode::weight_distribution_exhaustive(std::uint64_t budget,
                                                              unsigned workers) const {
    const Field& F = *ctx_;
    const std::uint32_t q = F.order();
    if (k_ == 0) {
        std::vector<std::uint64_t> hist(n_ + 1, 0);
        hist[0] = 1;
        return WeightDistribution::from_hist(hist);
    }
    if (q > 64) throw PreconditionError("exhaustive enumeration supports q <= 64");
    if (enumeration_cost(q, k_) > budget)
        throw BudgetExceeded("enumeration of " + params_string() + " over GF(" + std::to_string(q) +
                             ") exceeds budget " + std::to_string(budget));

    kern::Layout L;
    L.n = n_;
    L.planes = (F.characteristic() == 2 || F.degree() == 1) ? 1 : F.degree();
    L.stride = kern::padded_stride(n_);
    L.p = static_cast<std::uint8_t>(F.characteristic());
    L.mode = F.characteristic() == 2 ? kern::Mode::Xor : kern::Mode::ModP;
    const std::size_t block = static_cast<std::size_t>(L.planes) * L.stride;
    const kern::Ops& ops = kern::active_ops();

    // scaled[r][s] = s * row_r in kernel layout
    std::vector<std::uint8_t> scaled(static_cast<std::size_t>(k_) * q * block, 0);
    for (std::uint32_t r = 0; r < k_; ++r)
        for (std::uint32_t s = 0; s < q; ++s) {
            std::uint8_t* dst = scaled.data() + (static_cast<std::size_t>(r) * q + s) * block;
            for (std::uint32_t j = 0; j < n_; ++j)
                encode_element(F, F.mul(s, gen_.at(r, j)), dst, L.planes, L.stride, j);
        }

    auto make_job = [&]() {
        EnumJob job;
        job.layout = L;
        job.ops = &ops;
        job.q = q;
        job.k = k_;
        job.block = block;
        job.scaled = scaled.data();
        job.hist.assign(n_ + 1, 0);
        job.partial.assign(k_, std::vector<std::uint8_t>(block, 0));
        return job;
    };

    std::vector<std::uint64_t> hist(n_ + 1, 0);
    if (workers <= 1 || k_ == 1) {
        EnumJob job = make_job();
        job.dfs(0);
        hist = std::move(job.hist);
    } else {
        // partition the message space by leading symbol; merge by summation
        unsigned nw = std::min<unsigned>(workers, q);
        std::vector<EnumJob> jobs;
        jobs.reserve(nw);
        for (unsigned w = 0; w < nw; ++w) jobs.push_back(make_job());
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < nw; ++w) {
            threads.emplace_back([&, w]() {
                EnumJob& job = jobs[w];
                for (std::uint32_t s = w; s < q; s += nw) {
                    ops.vec_add(L, job.partial[1].data(), job.partial[0].data(), job.row_block(0, s));
                    // descend from level 1 with the fixed leading symbol
                    struct Sub {
                        EnumJob& j;
                        void run(std::uint32_t level) {
                            const std::uint8_t* base = j.partial[level].data();
                            if (level == j.k - 1) {
                                j.ops->leaf_sweep(j.layout, base, j.row_block(level, 0), j.q, j.hist.data());
                                return;
                            }
                            for (std::uint32_t t = 0; t < j.q; ++t) {
                                j.ops->vec_add(j.layout, j.partial[level + 1].data(), base, j.row_block(level, t));
                                run(level + 1);
                            }
                        }
                    };
                    Sub{job}.run(1);
                }
            });
        }
        for (auto& t : threads) t.join();
        for (auto& job : jobs)
            for (std::size_t i = 0; i <= n_; ++i) hist[i] += job.hist[i];
    }
    return WeightDistribution::from_hist(hist);
}

bool LinearCode::distribution_within_budget(std::uint64_t budget) const {
    return std::min(enumeration_cost(ctx_->order(), k_), enumeration_cost(ctx_->order(), n_ - k_)) <= budget;
}

WeightDistribution LinearCode::weight_distribution(std::uint64_t budget, unsigned workers) const {
    {
        std::lock_guard<std::mutex> lk(cache_mutex_);
        if (wd_cache_) return *wd_cache_;
    }
    const std::uint32_t q = ctx_->order();
    WeightDistribution out;
    std::uint64_t direct = enumeration_cost(q, k_);
    std::uint64_t via_dual = enumeration_cost(q, n_ - k_);
    if (direct > budget && via_dual > budget)
        throw BudgetExceeded("both " + params_string() + " and its dual exceed budget " +
                             std::to_string(budget));
    if (direct <= via_dual) {
        out = weight_distribution_exhaustive(budget, workers);
    } else {
        WeightDistribution wd = dual().weight_distribution_exhaustive(budget, workers);
        out = macwilliams_transform(wd, n_, n_ - k_, q);
    }
    std::lock_guard<std::mutex> lk(cache_mutex_);
    if (!wd_cache_) wd_cache_ = out;
    return out;
}

namespace {
std::uint64_t scan_cap(std::uint64_t budget) {
    return budget > (std::uint64_t(1) << 60) ? ~std::uint64_t(0) : budget * 8;
}
}  // namespace

MinDistance LinearCode::min_distance(std::uint64_t budget, unsigned workers) const {
    MinDistance md;
    if (k_ == 0) {
        md.zero_code = true;
        return md;
    }
    {
        std::lock_guard<std::mutex> lk(cache_mutex_);
        if (wd_cache_) {
            int d = wd_cache_->min_positive_weight();
            md.d = static_cast<std::uint32_t>(d);
            md.count = wd_cache_->count(md.d);
            return md;
        }
    }
    if (distribution_within_budget(budget)) {
        WeightDistribution wd = weight_distribution(budget, workers);
        int d = wd.min_positive_weight();
        md.d = static_cast<std::uint32_t>(d);
        md.count = wd.count(md.d);
        return md;
    }
    return min_weight_by_support_scan(*this, scan_cap(budget));
}

MinDistance min_weight_with_lower_bound(const LinearCode& code, std::uint32_t proven_lower,
                                        std::uint64_t budget, unsigned workers) {
    if (code.dimension() == 0 || code.distribution_within_budget(budget))
        return code.min_distance(budget, workers);
    return min_weight_by_support_scan(code, scan_cap(budget), proven_lower);
}

MinDistance min_weight_by_support_scan(const LinearCode& code, std::uint64_t max_rank_ops,
                                       std::uint32_t start_w) {
    MinDistance md;
    const std::uint32_t n = code.length(), k = code.dimension();
    if (k == 0) {
        md.zero_code = true;
        return md;
    }
    const std::uint32_t q = code.context()->order();
    const GFMatrix& g = code.generator();
    GFMatrix h = code.parity_check();
    std::uint64_t ops = 0;
    std::vector<felem> scratch;
    std::vector<std::uint32_t> idx, comp;
    for (std::uint32_t w = std::max(start_w, 1u); w <= n; ++w) {
        // at the first w with any codeword supported on a w-set, every such
        // codeword has full support, so dim of the shortened code is <= 1 and
        // each support contributes at most q - 1 codewords
        std::uint64_t count = 0;
        // dim{c : supp(c) in S} = w - rank(H_S) = k - rank(G_{S complement});
        // use whichever submatrix is cheaper to reduce
        const std::uint64_t cost_h = static_cast<std::uint64_t>(n - k) * w * std::min<std::uint32_t>(n - k, w);
        const std::uint64_t cost_g = static_cast<std::uint64_t>(k) * (n - w) * std::min<std::uint32_t>(k, n - w);
        const bool use_h = cost_h <= cost_g;
        idx.resize(w);
        for (std::uint32_t i = 0; i < w; ++i) idx[i] = i;
        while (true) {
            ops += use_h ? cost_h : cost_g;
            if (ops > max_rank_ops) throw BudgetExceeded("support scan exceeded its work cap");
            std::uint32_t dim;
            if (use_h) {
                dim = w - static_cast<std::uint32_t>(rank_of_columns(h, idx.data(), w, scratch));
            } else {
                comp.clear();
                std::uint32_t t = 0;
                for (std::uint32_t j = 0; j < n; ++j) {
                    if (t < w && idx[t] == j)
                        ++t;
                    else
                        comp.push_back(j);
                }
                dim = k - static_cast<std::uint32_t>(rank_of_columns(g, comp.data(), comp.size(), scratch));
            }
            if (dim > 0) {
                std::uint64_t cw = 1;
                for (std::uint32_t d = 0; d < dim; ++d) cw *= q;
                count += cw - 1;
            }
            // next combination
            std::uint32_t i = w;
            while (i > 0 && idx[i - 1] == n - w + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::uint32_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (count > 0) {
            md.d = w;
            md.count = BigUint(count);
            return md;
        }
    }
    throw std::logic_error("support scan found no nonzero codeword in a nonzero code");
}

LinearCode LinearCode::trace_code() const {
    const Field& F = *ctx_;
    const std::uint32_t p = F.characteristic(), m = F.degree();
    if (m == 1) return *this;
    auto prime = get_field(p);
    std::vector<std::vector<felem>> rows;
    rows.reserve(static_cast<std::size_t>(k_) * m);
    felem basis = 1;
    for (std::uint32_t j = 0; j < m; ++j) {
        for (std::uint32_t i = 0; i < k_; ++i) {
            std::vector<felem> row(n_);
            for (std::uint32_t t = 0; t < n_; ++t)
                row[t] = F.trace_to_prime(F.mul(basis, gen_.at(i, t)));
            rows.push_back(std::move(row));
        }
        basis *= p;  // polynomial-basis element x^j has encoding p^j
    }
    if (rows.empty()) return zero_code(prime, n_);
    return from_generator(prime, rows);
}

}  // namespace extmds
