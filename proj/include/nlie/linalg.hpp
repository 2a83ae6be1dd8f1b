#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nlie/error.hpp"
#include "nlie/scalar.hpp"

namespace nlie {

// Dense coordinate vector over a fixed field.
class Vector {
public:
    Vector() = default;
    Vector(int dim, Field f) : field_(f), c_(static_cast<std::size_t>(dim), Scalar(f)) {}

    static Vector basis(int dim, int i, Field f) {
        Vector v(dim, f);
        if (i < 0 || i >= dim) throw IndexOutOfRange("basis index " + std::to_string(i));
        v[i] = Scalar::one(f);
        return v;
    }

    int dim() const { return static_cast<int>(c_.size()); }
    Field field() const { return field_; }

    Scalar& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    const Scalar& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        for (const Scalar& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    Vector& operator+=(const Vector& o) {
        match(o);
        for (int i = 0; i < dim(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Vector& operator-=(const Vector& o) {
        match(o);
        for (int i = 0; i < dim(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Vector operator+(const Vector& o) const { Vector r = *this; return r += o; }
    Vector operator-(const Vector& o) const { Vector r = *this; return r -= o; }
    Vector operator-() const {
        Vector r = *this;
        for (int i = 0; i < dim(); ++i) r.c_[i] = -r.c_[i];
        return r;
    }
    Vector operator*(const Scalar& a) const {
        Vector r = *this;
        for (int i = 0; i < dim(); ++i) r.c_[i] *= a;
        return r;
    }
    void add_scaled(const Scalar& a, const Vector& o) {
        match(o);
        if (a.is_zero()) return;
        for (int i = 0; i < dim(); ++i) c_[i] += a * o.c_[i];
    }

    bool operator==(const Vector& o) const {
        match(o);
        for (int i = 0; i < dim(); ++i)
            if (c_[i] != o.c_[i]) return false;
        return true;
    }
    bool operator!=(const Vector& o) const { return !(*this == o); }

private:
    void match(const Vector& o) const {
        if (field_ != o.field_) throw FieldMismatch();
        if (c_.size() != o.c_.size())
            throw DimensionMismatch("vector dims " + std::to_string(c_.size()) + " vs " +
                                    std::to_string(o.c_.size()));
    }

    Field field_ = Field::Q;
    std::vector<Scalar> c_;
};

// Pretty form "2*e1 - 1/3*e3" for witnesses; "0" when zero.
inline std::string format_vector(const Vector& v) {
    std::string s;
    for (int i = 0; i < v.dim(); ++i) {
        if (v[i].is_zero()) continue;
        std::string coeff = format_scalar(v[i]);
        if (!s.empty() && coeff[0] != '-') s += "+";
        s += coeff + "*e" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

// Row-major dense matrix.  Acts on vectors from the left in the column
// convention: column i is the image of e_i, (A x)_j = sum_i A[j][i] x_i.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, Field f)
        : rows_(rows), cols_(cols), field_(f),
          a_(static_cast<std::size_t>(rows) * cols, Scalar(f)) {}

    static Matrix identity(int n, Field f) {
        Matrix m(n, n, f);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Field field() const { return field_; }
    bool square() const { return rows_ == cols_; }

    Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    Vector apply(const Vector& x) const {
        if (x.dim() != cols_) throw DimensionMismatch("matrix-vector shape");
        if (x.field() != field_) throw FieldMismatch();
        Vector y(rows_, field_);
        for (int j = 0; j < rows_; ++j)
            for (int i = 0; i < cols_; ++i)
                if (!at(j, i).is_zero() && !x[i].is_zero()) y[j] += at(j, i) * x[i];
        return y;
    }

    Vector column(int i) const {
        Vector v(rows_, field_);
        for (int j = 0; j < rows_; ++j) v[j] = at(j, i);
        return v;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
        if (field_ != o.field_) throw FieldMismatch();
        Matrix r(rows_, o.cols_, field_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j)
                    if (!o.at(k, j).is_zero()) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }
    Matrix operator+(const Matrix& o) const {
        match(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        match(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }
    Matrix operator*(const Scalar& s) const {
        Matrix r = *this;
        for (Scalar& x : r.a_) x *= s;
        return r;
    }
    bool operator==(const Matrix& o) const {
        match(o);
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (a_[i] != o.a_[i]) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const Scalar& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, field_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

private:
    void match(const Matrix& o) const {
        if (field_ != o.field_) throw FieldMismatch();
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape");
    }

    int rows_ = 0, cols_ = 0;
    Field field_ = Field::Q;
    std::vector<Scalar> a_;
};

// Square maps get their own name where the intent matters.
using LinearMap = Matrix;

// --- exact Gaussian elimination -------------------------------------------

// Reduced row echelon form in place; returns pivot column list.
inline std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Scalar inv = m.at(r, c).inv();
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

// Basis of the kernel {x : A x = 0}, one vector per free column.
inline std::vector<Vector> nullspace_basis(Matrix m) {
    std::vector<int> pivots = rref(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<Vector> basis;
    for (int fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        Vector v(m.cols(), m.field());
        v[fc] = Scalar::one(m.field());
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -m.at(static_cast<int>(pr), fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Scalar det(Matrix m) {
    if (!m.square()) throw ShapeMismatch("determinant of non-square matrix");
    Scalar d = Scalar::one(m.field());
    for (int c = 0; c < m.cols(); ++c) {
        int p = -1;
        for (int i = c; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) return Scalar::zero(m.field());
        if (p != c) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Scalar inv = m.at(c, c).inv();
        for (int i = c + 1; i < m.rows(); ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c) * inv;
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

inline Matrix inverse(const Matrix& m) {
    if (!m.square()) throw ShapeMismatch("inverse of non-square matrix");
    int n = m.rows();
    Matrix aug(n, 2 * n, m.field());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one(m.field());
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n || pivots.back() >= n)
        throw SingularMatrix();
    Matrix inv(n, n, m.field());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

// A^k for any integer k; negative k inverts first (SingularMatrix if it can't).
inline Matrix matrix_power(const Matrix& m, long k) {
    if (!m.square()) throw ShapeMismatch("power of non-square matrix");
    Matrix base = k < 0 ? inverse(m) : m;
    long e = k < 0 ? -k : k;
    Matrix r = Matrix::identity(m.rows(), m.field());
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// Exact rank test: does v lie in the row space spanned by `span`?
inline bool in_span(const std::vector<Vector>& span, const Vector& v) {
    if (span.empty()) return v.is_zero();
    int d = span[0].dim();
    Matrix m(static_cast<int>(span.size()) + 1, d, v.field());
    for (std::size_t i = 0; i < span.size(); ++i)
        for (int j = 0; j < d; ++j) m.at(static_cast<int>(i), j) = span[i][j];
    for (int j = 0; j < d; ++j) m.at(static_cast<int>(span.size()), j) = v[j];
    Matrix base(static_cast<int>(span.size()), d, v.field());
    for (std::size_t i = 0; i < span.size(); ++i)
        for (int j = 0; j < d; ++j) base.at(static_cast<int>(i), j) = span[i][j];
    return rank(base) == rank(m);
}

} // namespace nlie
