#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "extmds/bigint.hpp"
#include "extmds/gfmatrix.hpp"

namespace extmds {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact codeword weight counts A_0..A_n.
class WeightDistribution {
  public:
    WeightDistribution() = default;
    explicit WeightDistribution(std::vector<BigUint> counts) : counts_(std::move(counts)) {}
    static WeightDistribution from_hist(const std::vector<std::uint64_t>& hist);

    std::uint32_t length() const { return static_cast<std::uint32_t>(counts_.size()) - 1; }
    const BigUint& count(std::uint32_t w) const { return counts_.at(w); }
    const std::vector<BigUint>& counts() const { return counts_; }
    BigUint total() const;
    // smallest positive weight with a nonzero count; -1 for the zero code
    int min_positive_weight() const;
    std::string enumerator_string() const;  // "1 + 315z^8 + 196z^10"

    friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) {
        return a.counts_ == b.counts_;
    }

  private:
    std::vector<BigUint> counts_;
};

// Exact transform between the distributions of an [n, k] code and its dual.
WeightDistribution macwilliams_transform(const WeightDistribution& w, std::uint32_t n,
                                         std::uint32_t k, std::uint32_t q);

struct MinDistance {
    std::uint32_t d = 0;       // 0 for the zero code
    bool zero_code = false;
    BigUint count;             // number of minimum-weight codewords
};

// Linear [n, k] code held in canonical reduced-row-echelon generator form.
// Codes are immutable after construction; the weight-distribution cache is
// initialized at most once under a lock.
class LinearCode {
  public:
    LinearCode() = default;
    LinearCode(const LinearCode& o);
    LinearCode& operator=(const LinearCode& o);
    LinearCode(LinearCode&&) noexcept;
    LinearCode& operator=(LinearCode&&) noexcept;

    static LinearCode from_generator(std::shared_ptr<const Field> ctx,
                                     const std::vector<std::vector<felem>>& rows);
    static LinearCode from_matrix(GFMatrix m);
    static LinearCode zero_code(std::shared_ptr<const Field> ctx, std::uint32_t n);
    static LinearCode full_space(std::shared_ptr<const Field> ctx, std::uint32_t n);

    const std::shared_ptr<const Field>& context() const { return ctx_; }
    std::uint32_t length() const { return n_; }
    std::uint32_t dimension() const { return k_; }
    const GFMatrix& generator() const { return gen_; }
    GFMatrix parity_check() const { return dual().generator(); }

    LinearCode dual() const;
    LinearCode extended() const;   // parity coordinate appended last
    LinearCode augmented() const;  // span with the all-one vector
    friend LinearCode sum(const LinearCode& a, const LinearCode& b);
    friend LinearCode intersect(const LinearCode& a, const LinearCode& b);

    bool contains(const std::vector<felem>& word) const;
    bool is_subcode_of(const LinearCode& other) const;
    bool contains_all_one() const;
    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.gen_ == b.gen_;
    }

    // exact counts by iterating all q^k messages; throws BudgetExceeded
    WeightDistribution weight_distribution_exhaustive(std::uint64_t budget,
                                                      unsigned workers = 1) const;
    // enumerates whichever of C, C^perp is cheaper, transforming if needed
    WeightDistribution weight_distribution(std::uint64_t budget, unsigned workers = 1) const;
    bool distribution_within_budget(std::uint64_t budget) const;

    MinDistance min_distance(std::uint64_t budget, unsigned workers = 1) const;

    // image under the coordinatewise absolute trace GF(p^m) -> GF(p)
    LinearCode trace_code() const;

    std::string params_string() const;  // "[n,k]"

  private:
    std::shared_ptr<const Field> ctx_;
    std::uint32_t n_ = 0, k_ = 0;
    GFMatrix gen_;
    mutable std::mutex cache_mutex_;
    mutable std::optional<WeightDistribution> wd_cache_;
};

// parity-check matrix of extend(C) assembled from a parity-check matrix of C:
// top row all ones, then [H | 0^T]
GFMatrix parity_check_of_extended(const GFMatrix& h);

// Exact minimum distance and minimum-weight count by scanning candidate
// supports in increasing size. Codewords supported inside S are counted
// through the rank of the parity-check columns on S or of the generator
// columns off S, whichever is cheaper. start_w must be a proven lower bound
// on the minimum weight (1 is always valid; subcode and extension relations
// give better ones). Work is capped by max_rank_ops.
MinDistance min_weight_by_support_scan(const LinearCode& code, std::uint64_t max_rank_ops,
                                       std::uint32_t start_w = 1);

// Exact minimum weight and count routed like min_distance but additionally
// seeded with a proven lower bound when the scan is needed. The scan work cap
// is budget*8 field operations, commensurate with a budget of messages.
MinDistance min_weight_with_lower_bound(const LinearCode& code, std::uint32_t proven_lower,
                                        std::uint64_t budget, unsigned workers = 1);

// number of messages that a full enumeration of this [n, k] code costs,
// clamped to 2^63 on overflow
std::uint64_t enumeration_cost(std::uint32_t q, std::uint32_t k);

}  // namespace extmds
