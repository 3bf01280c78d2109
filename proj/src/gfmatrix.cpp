#include "extmds/gfmatrix.hpp"

#include <stdexcept>

namespace extmds {

std::size_t GFMatrix::rref(std::vector<std::size_t>* pivot_cols) {
    const Field& F = *ctx_;
    std::size_t r = 0;
    if (pivot_cols) pivot_cols->clear();
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && at(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols_; ++j) std::swap(at(r, j), at(piv, j));
        felem inv = F.inv(at(r, c));
        for (std::size_t j = c; j < cols_; ++j) at(r, j) = F.mul(at(r, j), inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            felem f = at(i, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols_; ++j) at(i, j) = F.sub(at(i, j), F.mul(f, at(r, j)));
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

std::size_t GFMatrix::rank() const {
    GFMatrix t = *this;
    return t.rref();
}

GFMatrix GFMatrix::null_space() const {
    GFMatrix t = *this;
    std::vector<std::size_t> piv;
    std::size_t r = t.rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    GFMatrix out(ctx_, cols_ - r, cols_);
    std::size_t row = 0;
    const Field& F = *ctx_;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        out.at(row, f) = 1;
        for (std::size_t i = 0; i < r; ++i) out.at(row, piv[i]) = F.neg(t.at(i, f));
        ++row;
    }
    return out;
}

GFMatrix GFMatrix::vstack(const GFMatrix& below) const {
    if (ctx_.get() != below.ctx_.get() || cols_ != below.cols_)
        throw ContextMismatch("vstack shape/context mismatch");
    GFMatrix out(ctx_, rows_ + below.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < below.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(rows_ + i, j) = below.at(i, j);
    return out;
}

std::vector<felem> GFMatrix::mul_vector(const std::vector<felem>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("vector length mismatch");
    const Field& F = *ctx_;
    std::vector<felem> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        felem acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc = F.add(acc, F.mul(at(i, j), x[j]));
        out[i] = acc;
    }
    return out;
}

std::size_t rank_of_columns(const GFMatrix& m, const std::uint32_t* cols, std::size_t ncols,
                            std::vector<felem>& scratch) {
    const Field& F = *m.context();
    const std::size_t rows = m.rows();
    scratch.resize(rows * ncols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) scratch[i * ncols + j] = m.at(i, cols[j]);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && scratch[piv * ncols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t j = c; j < ncols; ++j)
                std::swap(scratch[rank * ncols + j], scratch[piv * ncols + j]);
        felem inv = F.inv(scratch[rank * ncols + c]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            felem f = scratch[i * ncols + c];
            if (f == 0) continue;
            felem fac = F.mul(f, inv);
            for (std::size_t j = c; j < ncols; ++j)
                scratch[i * ncols + j] = F.sub(scratch[i * ncols + j], F.mul(fac, scratch[rank * ncols + j]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace extmds
