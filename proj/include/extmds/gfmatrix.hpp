#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "extmds/field.hpp"

namespace extmds {

// Row-major dense matrix over one field context.
class GFMatrix {
  public:
    GFMatrix() = default;
    GFMatrix(std::shared_ptr<const Field> ctx, std::size_t rows, std::size_t cols)
        : ctx_(std::move(ctx)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    const std::shared_ptr<const Field>& context() const { return ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    felem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    felem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    const felem* row(std::size_t r) const { return a_.data() + r * cols_; }

    friend bool operator==(const GFMatrix& x, const GFMatrix& y) {
        return x.ctx_.get() == y.ctx_.get() && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    // in-place reduced row echelon form; returns rank, records pivot columns
    std::size_t rref(std::vector<std::size_t>* pivot_cols = nullptr);
    std::size_t rank() const;
    GFMatrix null_space() const;  // rows form a basis of {x : M x^T = 0}
    GFMatrix vstack(const GFMatrix& below) const;
    std::vector<felem> mul_vector(const std::vector<felem>& x) const;  // M x^T

  private:
    std::shared_ptr<const Field> ctx_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<felem> a_;
};

// rank of the submatrix formed by the given columns; scratch reused by callers
std::size_t rank_of_columns(const GFMatrix& m, const std::uint32_t* cols, std::size_t ncols,
                            std::vector<felem>& scratch);

}  // namespace extmds
