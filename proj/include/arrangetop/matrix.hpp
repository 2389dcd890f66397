#pragma once

#include <vector>

#include "arrangetop/cyclotomic.hpp"

namespace arrangetop {

/// Dense matrix over a cyclotomic field with exact rank and kernel
/// computation by fraction-free (Bareiss) elimination.
class CycMatrix {
public:
    CycMatrix() : rows_(0), cols_(0) {}
    CycMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, CycNumber(0)) {}

    static CycMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    CycNumber& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const CycNumber& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    void append_row(const std::vector<CycNumber>& row);

    struct RankKernel {
        size_t rank = 0;
        std::vector<std::vector<CycNumber>> kernel; // basis of the right kernel
    };
    RankKernel rank_kernel() const;
    size_t rank() const { return rank_kernel().rank; }

    std::vector<CycNumber> apply(const std::vector<CycNumber>& v) const;

private:
    size_t rows_, cols_;
    std::vector<CycNumber> e_;
};

} // namespace arrangetop
