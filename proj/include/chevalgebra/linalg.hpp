#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chevalgebra/rational.hpp"

namespace chevalgebra {

using RatVec = std::vector<Rat>;

inline void add_scaled(RatVec& dst, const Rat& c, const RatVec& src) {
    assert(dst.size() == src.size());
    for (size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
}

// Dense matrix of exact rationals, row major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    RatMatrix transposed() const {
        RatMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RatMatrix operator*(const RatMatrix& b) const {
        if (cols_ != b.rows_) throw std::invalid_argument("RatMatrix::mul: shape mismatch");
        RatMatrix c(rows_, b.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& v = (*this)(i, k);
                if (is_zero(v)) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += v * b(k, j);
            }
        return c;
    }

    RatMatrix operator+(const RatMatrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw std::invalid_argument("RatMatrix::add: shape mismatch");
        RatMatrix c(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) c.a_[i] = a_[i] + b.a_[i];
        return c;
    }

    RatMatrix operator-(const RatMatrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw std::invalid_argument("RatMatrix::sub: shape mismatch");
        RatMatrix c(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) c.a_[i] = a_[i] - b.a_[i];
        return c;
    }

    RatMatrix operator*(const Rat& c) const {
        RatMatrix m = *this;
        for (auto& v : m.a_) v *= c;
        return m;
    }

    RatVec apply(const RatVec& x) const {
        if (int(x.size()) != cols_) throw std::invalid_argument("RatMatrix::apply: shape mismatch");
        RatVec y(rows_);
        for (int i = 0; i < rows_; ++i) {
            Rat s;
            for (int j = 0; j < cols_; ++j)
                if (!is_zero((*this)(i, j))) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    Rat trace() const {
        Rat s;
        for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
        return s;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_zero_matrix() const {
        for (const auto& v : a_)
            if (!is_zero(v)) return false;
        return true;
    }

    // In-place reduced row echelon form. Returns pivot column per pivot row.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = -1;
            for (int i = r; i < rows_; ++i)
                if (!is_zero((*this)(i, c))) { p = i; break; }
            if (p < 0) continue;
            if (p != r)
                for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
            Rat inv = 1 / (*this)(r, c);
            for (int j = c; j < cols_; ++j) (*this)(r, j) *= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r || is_zero((*this)(i, c))) continue;
                Rat f = (*this)(i, c);
                for (int j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        RatMatrix m = *this;
        return int(m.rref().size());
    }

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

// Outcome of an exact linear solve A x = b. When the system is consistent and
// underdetermined, `kernel` holds a basis of the null space of A.
struct SolveResult {
    bool consistent = false;
    RatVec particular;             // one solution when consistent
    std::vector<RatVec> kernel;    // basis of ker(A)
    int inconsistent_row = -1;     // certificate: echelon row with 0 = nonzero
};

inline SolveResult solve(const RatMatrix& A, const RatVec& b) {
    if (int(b.size()) != A.rows()) throw std::invalid_argument("solve: shape mismatch");
    const int n = A.rows(), m = A.cols();
    RatMatrix aug(n, m + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) aug(i, j) = A(i, j);
        aug(i, m) = b[i];
    }
    std::vector<int> piv = aug.rref();
    SolveResult res;
    // A pivot in the augmented column certifies inconsistency.
    for (size_t k = 0; k < piv.size(); ++k)
        if (piv[k] == m) {
            res.inconsistent_row = int(k);
            return res;
        }
    res.consistent = true;
    res.particular.assign(m, Rat());
    std::vector<int> pivot_of_col(m, -1);
    for (size_t k = 0; k < piv.size(); ++k) {
        pivot_of_col[piv[k]] = int(k);
        res.particular[piv[k]] = aug(int(k), m);
    }
    for (int c = 0; c < m; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        RatVec v(m);
        v[c] = 1;
        for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -aug(int(k), c);
        res.kernel.push_back(std::move(v));
    }
    return res;
}

// Exact inverse via Gauss-Jordan on [A | I]; throws when singular.
inline RatMatrix inverse(const RatMatrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("inverse: not square");
    const int n = A.rows();
    RatMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<int> piv = aug.rref();
    if (int(piv.size()) != n || piv.back() >= n)
        throw std::invalid_argument("inverse: singular matrix");
    RatMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// Symmetric bilinear form given by its Gram matrix on the ambient basis.
struct BilinearForm {
    RatMatrix gram;

    explicit BilinearForm(RatMatrix g) : gram(std::move(g)) {
        if (!gram.is_symmetric()) throw std::invalid_argument("BilinearForm: gram not symmetric");
    }

    Rat eval(const RatVec& u, const RatVec& v) const {
        RatVec gv = gram.apply(v);
        Rat s;
        for (size_t i = 0; i < u.size(); ++i)
            if (!is_zero(u[i])) s += u[i] * gv[i];
        return s;
    }
};

struct DegenerateRestriction : std::runtime_error {
    int radical_dim;
    explicit DegenerateRestriction(int rad)
        : std::runtime_error("project_orthogonal: form degenerate on subspace, radical dimension " +
                             std::to_string(rad)),
          radical_dim(rad) {}
};

// Component of v orthogonal (for `form`) to the row span of `subspace_basis`:
// returns v minus its form-orthogonal projection onto the subspace. The
// restriction of the form to the subspace must be non-degenerate.
inline RatVec project_orthogonal(const BilinearForm& form, const RatMatrix& subspace_basis,
                                 const RatVec& v) {
    const int k = subspace_basis.rows();
    RatMatrix gram_sub(k, k);
    std::vector<RatVec> rows(k);
    for (int i = 0; i < k; ++i) {
        rows[i].resize(subspace_basis.cols());
        for (int j = 0; j < subspace_basis.cols(); ++j) rows[i][j] = subspace_basis(i, j);
    }
    std::vector<RatVec> grows(k);
    for (int i = 0; i < k; ++i) grows[i] = form.gram.apply(rows[i]);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Rat s;
            for (size_t t = 0; t < rows[i].size(); ++t)
                if (!is_zero(rows[i][t])) s += rows[i][t] * grows[j][t];
            gram_sub(i, j) = s;
        }
    int rank = gram_sub.rank();
    if (rank != k) throw DegenerateRestriction(k - rank);
    RatVec rhs(k);
    for (int i = 0; i < k; ++i) {
        Rat s;
        for (size_t t = 0; t < v.size(); ++t)
            if (!is_zero(v[t])) s += v[t] * grows[i][t];
        rhs[i] = s;
    }
    SolveResult sol = solve(gram_sub, rhs);
    assert(sol.consistent);
    RatVec out = v;
    for (int i = 0; i < k; ++i)
        if (!is_zero(sol.particular[i])) add_scaled(out, -sol.particular[i], rows[i]);
    return out;
}

// Incremental exact row echelon, used for rank/membership bookkeeping when
// building module closures. Rows are kept reduced with a unit leading entry.
class Echelon {
public:
    explicit Echelon(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    int rank() const { return int(rows_.size()); }
    const std::vector<RatVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Reduces v against the current rows (in place).
    void reduce(RatVec& v) const {
        for (size_t k = 0; k < rows_.size(); ++k) {
            const Rat& c = v[pivots_[k]];
            if (!is_zero(c)) {
                Rat f = c;
                add_scaled(v, -f, rows_[k]);
            }
        }
    }

    bool contains(RatVec v) const {
        reduce(v);
        for (const auto& c : v)
            if (!is_zero(c)) return false;
        return true;
    }

    // Returns true when v enlarged the span.
    bool insert(RatVec v) {
        reduce(v);
        int p = -1;
        for (int j = 0; j < dim_; ++j)
            if (!is_zero(v[j])) { p = j; break; }
        if (p < 0) return false;
        Rat inv = 1 / v[p];
        for (auto& c : v) c *= inv;
        for (size_t k = 0; k < rows_.size(); ++k) {
            Rat f = rows_[k][p];
            if (!is_zero(f)) add_scaled(rows_[k], -f, v);
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

private:
    int dim_;
    std::vector<RatVec> rows_;
    std::vector<int> pivots_;
};

}  // namespace chevalgebra
