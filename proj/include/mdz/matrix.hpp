#pragma once

#include <mdz/rational.hpp>

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdz {

struct SingularMatrixError : std::domain_error {
    explicit SingularMatrixError(const std::string& what) : std::domain_error(what) {}
};

// Dense exact-rational matrix. Immutable in spirit: operations return new
// values and never mutate their inputs.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RatMatrix operator*(const RatMatrix& b) const {
        if (cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        RatMatrix c(rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
            }
        return c;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    std::string to_csv() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << ',';
                os << rat_str((*this)(i, j));
            }
            os << '\n';
        }
        return os.str();
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

namespace detail {

// Clears denominators row by row; row scaling does not change the rank.
inline std::vector<std::vector<Integer>> integerize_rows(const RatMatrix& m) {
    std::vector<std::vector<Integer>> z(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer lcm(1);
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational v = m(i, j) * lcm;
            z[i][j] = v.get_num();  // denominator is 1 after scaling
        }
    }
    return z;
}

}  // namespace detail

// Rank over the rationals by fraction-free (Bareiss) elimination on a
// denominator-cleared copy.
inline std::size_t rank(const RatMatrix& m) {
    auto z = detail::integerize_rows(m);
    const std::size_t nr = m.rows(), nc = m.cols();
    std::size_t r = 0;
    Integer prev(1);
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = r;
        while (piv < nr && z[piv][c] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(z[piv], z[r]);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j)
                z[i][j] = (z[i][j] * z[r][c] - z[i][c] * z[r][j]) / prev;
            z[i][c] = 0;
        }
        prev = z[r][c];
        ++r;
    }
    return r;
}

namespace detail {

// Reduced row echelon form, in place; returns pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

// Basis of the right null space {x : m x = 0}. Empty iff rank = cols.
// The basis is the canonical one read off the reduced echelon form.
inline std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
    RatMatrix e = m;
    auto pivots = detail::rref(e);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_c = 0; free_c < m.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free_c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e(r, free_c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Exact inverse. Throws SingularMatrixError when rank < dimension.
inline RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = detail::rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw SingularMatrixError("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// Whether two families of vectors (same ambient dimension) span the same
// subspace, decided exactly by rank comparisons.
inline bool same_span(const std::vector<std::vector<Rational>>& a,
                      const std::vector<std::vector<Rational>>& b) {
    const std::size_t n = a.empty() ? (b.empty() ? 0 : b[0].size()) : a[0].size();
    if (n == 0) return a.empty() == b.empty();
    RatMatrix left(n, a.size()), right(n, b.size()), joint(n, a.size() + b.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) {
            left(i, j) = a[j][i];
            joint(i, j) = a[j][i];
        }
    for (std::size_t j = 0; j < b.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) {
            right(i, j) = b[j][i];
            joint(i, a.size() + j) = b[j][i];
        }
    const std::size_t rl = rank(left), rr = rank(right);
    return rl == rr && rank(joint) == rl;
}

// Strict row dominance: |a_ii| > sum_{j != i} |a_ij| for every row.
inline bool is_diag_dominant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("dominance check needs square matrix");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational off(0);
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (j != i) off += rat_abs(m(i, j));
        if (!(rat_abs(m(i, i)) > off)) return false;
    }
    return true;
}

// Strict column dominance. The nonsingularity argument that consumes this
// bounds column sums, so this is the variant the matrix checks use.
inline bool is_col_diag_dominant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("dominance check needs square matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Rational off(0);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != j) off += rat_abs(m(i, j));
        if (!(rat_abs(m(j, j)) > off)) return false;
    }
    return true;
}

}  // namespace mdz
