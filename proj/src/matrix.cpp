#include "arrangetop/matrix.hpp"

namespace arrangetop {

CycMatrix CycMatrix::identity(size_t n) {
    CycMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = CycNumber(1);
    return m;
}

void CycMatrix::append_row(const std::vector<CycNumber>& row) {
    if (cols_ == 0 && rows_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw InternalError("appended row has wrong length");
    e_.insert(e_.end(), row.begin(), row.end());
    ++rows_;
}

CycMatrix::RankKernel CycMatrix::rank_kernel() const {
    CycMatrix m = *this;
    std::vector<size_t> pivot_cols;
    std::vector<size_t> pivot_rows;
    CycNumber prev(1);
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t pr = r;
        while (pr < rows_ && m.at(pr, c).is_zero()) ++pr;
        if (pr == rows_) continue;
        if (pr != r) {
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(pr, j), m.at(r, j));
        }
        const CycNumber pivot = m.at(r, c);
        for (size_t i = r + 1; i < rows_; ++i) {
            const CycNumber factor = m.at(i, c);
            for (size_t j = c + 1; j < cols_; ++j) {
                m.at(i, j) = (pivot * m.at(i, j) - factor * m.at(r, j)) / prev;
            }
            m.at(i, c) = CycNumber(0);
        }
        prev = pivot;
        pivot_cols.push_back(c);
        pivot_rows.push_back(r);
        ++r;
    }

    RankKernel result;
    result.rank = pivot_cols.size();

    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivot_cols) is_pivot[c] = true;
    for (size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<CycNumber> v(cols_, CycNumber(0));
        v[f] = CycNumber(1);
        for (size_t k = pivot_cols.size(); k-- > 0;) {
            size_t row = pivot_rows[k], col = pivot_cols[k];
            CycNumber s(0);
            for (size_t j = col + 1; j < cols_; ++j) {
                if (!v[j].is_zero() && !m.at(row, j).is_zero()) s += m.at(row, j) * v[j];
            }
            v[col] = -s / m.at(row, col);
        }
        result.kernel.push_back(std::move(v));
    }
    return result;
}

std::vector<CycNumber> CycMatrix::apply(const std::vector<CycNumber>& v) const {
    if (v.size() != cols_) throw InternalError("vector length mismatch in matrix apply");
    std::vector<CycNumber> out(rows_, CycNumber(0));
    for (size_t i = 0; i < rows_; ++i) {
        CycNumber s(0);
        for (size_t j = 0; j < cols_; ++j) {
            if (!at(i, j).is_zero() && !v[j].is_zero()) s += at(i, j) * v[j];
        }
        out[i] = s;
    }
    return out;
}

} // namespace arrangetop
