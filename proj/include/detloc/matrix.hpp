#pragma once

#include <optional>
#include <vector>

#include "detloc/field.hpp"

namespace detloc {

/// Dense matrix of exact field elements.  Reduction uses deterministic
/// pivoting (first usable row, columns left to right), so echelon forms and
/// kernel bases are canonical.
class ExactMatrix {
public:
    ExactMatrix(size_t rows, size_t cols, FieldId f);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    FieldId field() const { return field_; }

    FieldElement& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const FieldElement& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    void append_row(const std::vector<FieldElement>& row);
    void append_col(const std::vector<FieldElement>& col);

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<size_t> rref();
    size_t rank() const;

    /// Basis of the right kernel (column vectors), canonical under the
    /// free-column parameterization.
    std::vector<std::vector<FieldElement>> kernel_basis() const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    size_t rows_, cols_;
    FieldId field_;
    std::vector<FieldElement> a_;
};

/// rank([A]) versus rank([A | v]): true iff v lies in the column space of A.
bool in_column_space(const ExactMatrix& a, const std::vector<FieldElement>& v);

/// Exact solution of A x = b with free variables pinned to zero; nullopt
/// when the system is inconsistent.
std::optional<std::vector<FieldElement>> solve(const ExactMatrix& a,
                                               const std::vector<FieldElement>& b);

}  // namespace detloc
