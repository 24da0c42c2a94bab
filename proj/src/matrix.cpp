#include "detloc/matrix.hpp"

#include <stdexcept>

namespace detloc {

ExactMatrix::ExactMatrix(size_t rows, size_t cols, FieldId f)
    : rows_(rows), cols_(cols), field_(f), a_(rows * cols, FieldElement::zero(f)) {}

void ExactMatrix::append_row(const std::vector<FieldElement>& row) {
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

void ExactMatrix::append_col(const std::vector<FieldElement>& col) {
    if (col.size() != rows_) throw std::invalid_argument("column length mismatch");
    std::vector<FieldElement> b;
    b.reserve((cols_ + 1) * rows_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) b.push_back(a_[r * cols_ + c]);
        b.push_back(col[r]);
    }
    a_ = std::move(b);
    ++cols_;
}

std::vector<size_t> ExactMatrix::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t pr = row;
        while (pr < rows_ && at(pr, col).is_zero()) ++pr;
        if (pr == rows_) continue;
        if (pr != row)
            for (size_t c = 0; c < cols_; ++c) std::swap(at(row, c), at(pr, c));
        FieldElement inv = at(row, col).inverse();
        for (size_t c = col; c < cols_; ++c) at(row, c) = at(row, c) * inv;
        for (size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col).is_zero()) continue;
            FieldElement f = at(r, col);
            for (size_t c = col; c < cols_; ++c)
                at(r, c) = at(r, c) - f * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t ExactMatrix::rank() const {
    ExactMatrix copy = *this;
    return copy.rref().size();
}

std::vector<std::vector<FieldElement>> ExactMatrix::kernel_basis() const {
    ExactMatrix m = *this;
    std::vector<size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(cols_, FieldElement::zero(field_));
        v[free] = FieldElement::one(field_);
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_column_space(const ExactMatrix& a, const std::vector<FieldElement>& v) {
    ExactMatrix b = a;
    b.append_col(v);
    return a.rank() == b.rank();
}

std::optional<std::vector<FieldElement>> solve(const ExactMatrix& a,
                                               const std::vector<FieldElement>& b) {
    ExactMatrix m = a;
    m.append_col(b);
    std::vector<size_t> pivots = m.rref();
    std::vector<FieldElement> x(a.cols(), FieldElement::zero(a.field()));
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == a.cols()) return std::nullopt;  // pivot in the b column
        x[pivots[r]] = m.at(r, a.cols());
    }
    return x;
}

}  // namespace detloc
