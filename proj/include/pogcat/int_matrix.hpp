#pragma once

// Dense integer matrices and the Smith normal form.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pogcat/rational.hpp"

namespace pogcat {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<int64_t>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static IntMatrix identity(size_t n) {
        IntMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    int64_t& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    int64_t operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](int64_t v) { return v == 0; });
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
        IntMatrix out(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                int64_t v = a(i, k);
                if (v == 0) continue;
                for (size_t j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0)
                        out(i, j) = detail::checked_add(out(i, j), detail::checked_mul(v, b(k, j)));
            }
        return out;
    }

    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("IntMatrix: shape mismatch");
        IntMatrix out(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = detail::checked_sub(a.data_[i], b.data_[i]);
        return out;
    }

    std::vector<int64_t> apply(const std::vector<int64_t>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("IntMatrix: vector length mismatch");
        std::vector<int64_t> out(rows_, 0);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0)
                    out[i] = detail::checked_add(out[i], detail::checked_mul((*this)(i, j), v[j]));
        return out;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<int64_t> column(size_t c) const {
        std::vector<int64_t> out(rows_);
        for (size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
        return out;
    }

    /// Horizontal concatenation [a | b].
    static IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_) throw std::invalid_argument("IntMatrix::hconcat: row mismatch");
        IntMatrix out(a.rows_, a.cols_ + b.cols_);
        for (size_t i = 0; i < a.rows_; ++i) {
            for (size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
            for (size_t j = 0; j < b.cols_; ++j) out(i, a.cols_ + j) = b(i, j);
        }
        return out;
    }

    static IntMatrix from_columns(size_t rows, const std::vector<std::vector<int64_t>>& cols) {
        IntMatrix out(rows, cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("IntMatrix::from_columns: length mismatch");
            for (size_t i = 0; i < rows; ++i) out(i, j) = cols[j][i];
        }
        return out;
    }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (size_t i = 0; i < rows_; ++i) {
            os << (i ? ",[" : "[");
            for (size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
            os << ']';
        }
        os << ']';
        return os.str();
    }

    // Elementary operations used by the normal form; all are unimodular.
    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row[dst] += k * row[src]
    void add_row(size_t dst, size_t src, int64_t k) {
        if (k == 0) return;
        for (size_t j = 0; j < cols_; ++j)
            if ((*this)(src, j) != 0)
                (*this)(dst, j) = detail::checked_add((*this)(dst, j), detail::checked_mul(k, (*this)(src, j)));
    }
    void add_col(size_t dst, size_t src, int64_t k) {
        if (k == 0) return;
        for (size_t i = 0; i < rows_; ++i)
            if ((*this)(i, src) != 0)
                (*this)(i, dst) = detail::checked_add((*this)(i, dst), detail::checked_mul(k, (*this)(i, src)));
    }
    void negate_row(size_t r) {
        for (size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<int64_t> data_;
};

/// U * A * V == S with S diagonal, nonnegative, d1 | d2 | ...; U and V unimodular.
struct SmithForm {
    IntMatrix S, U, V;
    std::vector<int64_t> diagonal;  // nonzero invariant factors, in order
    size_t rank() const { return diagonal.size(); }
};

/// Smith normal form by minimal-absolute-value pivoting. Deterministic: ties
/// are broken by the lowest (row, column) index.
inline SmithForm smith_normal_form(const IntMatrix& A, bool want_transforms = true) {
    const size_t m = A.rows(), n = A.cols();
    IntMatrix S = A;
    IntMatrix U = want_transforms ? IntMatrix::identity(m) : IntMatrix();
    IntMatrix V = want_transforms ? IntMatrix::identity(n) : IntMatrix();
    auto row_op_add = [&](size_t dst, size_t src, int64_t k) {
        S.add_row(dst, src, k);
        if (want_transforms) U.add_row(dst, src, k);
    };
    auto col_op_add = [&](size_t dst, size_t src, int64_t k) {
        S.add_col(dst, src, k);
        if (want_transforms) V.add_col(dst, src, k);
    };
    auto row_swap = [&](size_t a, size_t b) {
        S.swap_rows(a, b);
        if (want_transforms) U.swap_rows(a, b);
    };
    auto col_swap = [&](size_t a, size_t b) {
        S.swap_cols(a, b);
        if (want_transforms) V.swap_cols(a, b);
    };

    size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        for (;;) {
            // pivot: smallest nonzero |entry| in the trailing block
            size_t pr = m, pc = n;
            int64_t best = 0;
            for (size_t i = t; i < m; ++i)
                for (size_t j = t; j < n; ++j) {
                    int64_t v = std::llabs(S(i, j));
                    if (v != 0 && (best == 0 || v < best)) {
                        best = v;
                        pr = i;
                        pc = j;
                    }
                }
            if (best == 0) goto done;
            row_swap(t, pr);
            col_swap(t, pc);
            bool clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (S(i, t) == 0) continue;
                int64_t q = detail::floor_div(S(i, t), S(t, t) < 0 ? -S(t, t) : S(t, t));
                if (S(t, t) < 0) q = -q;
                row_op_add(i, t, -q);
                if (S(i, t) != 0) clean = false;
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (S(t, j) == 0) continue;
                int64_t q = detail::floor_div(S(t, j), S(t, t) < 0 ? -S(t, t) : S(t, t));
                if (S(t, t) < 0) q = -q;
                col_op_add(j, t, -q);
                if (S(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility against the remaining block
            bool divides = true;
            for (size_t i = t + 1; i < m && divides; ++i)
                for (size_t j = t + 1; j < n; ++j)
                    if (S(i, j) % S(t, t) != 0) {
                        row_op_add(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (S(t, t) < 0) {
            S.negate_row(t);
            if (want_transforms) U.negate_row(t);
        }
    }
done:
    SmithForm out;
    for (size_t i = 0; i < std::min(m, n); ++i)
        if (S(i, i) != 0) out.diagonal.push_back(S(i, i));
    out.S = std::move(S);
    out.U = std::move(U);
    out.V = std::move(V);
    return out;
}

inline size_t rank(const IntMatrix& A) {
    if (A.empty()) return 0;
    return smith_normal_form(A, false).rank();
}

/// Rank over F2.
inline size_t rank_f2(const IntMatrix& A) {
    const size_t m = A.rows(), n = A.cols();
    std::vector<std::vector<uint8_t>> M(m, std::vector<uint8_t>(n));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) M[i][j] = static_cast<uint8_t>(A(i, j) & 1);
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        size_t p = r;
        while (p < m && !M[p][c]) ++p;
        if (p == m) continue;
        std::swap(M[p], M[r]);
        for (size_t i = 0; i < m; ++i)
            if (i != r && M[i][c])
                for (size_t j = c; j < n; ++j) M[i][j] ^= M[r][j];
        ++r;
    }
    return r;
}

/// Z-basis of {x : A x = 0}, as columns.
inline IntMatrix kernel_basis(const IntMatrix& A) {
    const size_t n = A.cols();
    if (A.rows() == 0) return IntMatrix::identity(n);
    SmithForm f = smith_normal_form(A);
    const size_t r = f.rank();
    IntMatrix K(n, n - r);
    for (size_t j = r; j < n; ++j)
        for (size_t i = 0; i < n; ++i) K(i, j - r) = f.V(i, j);
    return K;
}

/// Integer solution y of B y = x, if any.
inline std::optional<std::vector<int64_t>> solve_integer(const IntMatrix& B, const std::vector<int64_t>& x) {
    if (x.size() != B.rows()) throw std::invalid_argument("solve_integer: length mismatch");
    if (B.cols() == 0) {
        for (int64_t v : x)
            if (v != 0) return std::nullopt;
        return std::vector<int64_t>{};
    }
    SmithForm f = smith_normal_form(B);
    std::vector<int64_t> ux = f.U.apply(x);
    std::vector<int64_t> z(B.cols(), 0);
    for (size_t i = 0; i < ux.size(); ++i) {
        if (i < f.rank()) {
            if (ux[i] % f.diagonal[i] != 0) return std::nullopt;
            z[i] = ux[i] / f.diagonal[i];
        } else if (ux[i] != 0) {
            return std::nullopt;
        }
    }
    return f.V.apply(z);
}

/// Whether x lies in the Z-span of the columns of B.
inline bool in_lattice(const IntMatrix& B, const std::vector<int64_t>& x) { return solve_integer(B, x).has_value(); }

}  // namespace pogcat
