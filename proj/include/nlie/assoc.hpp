#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nlie/error.hpp"
#include "nlie/linalg.hpp"
#include "nlie/report.hpp"

namespace nlie {

// Commutative algebra given by products of basis pairs; associativity is a
// checked property, not an invariant (mirrors NLieAlgebra).
class CommAssocAlgebra {
public:
    CommAssocAlgebra() = default;
    CommAssocAlgebra(int dim, Field field) : dim_(dim), field_(field) {}

    int dim() const { return dim_; }
    Field field() const { return field_; }
    const std::map<std::pair<int, int>, Vector>& products() const { return products_; }

    void set_product(int i, int j, const Vector& value) {
        if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
            throw IndexOutOfRange("product index");
        if (value.dim() != dim_ || value.field() != field_)
            throw DimensionMismatch("product value shape");
        if (i > j) std::swap(i, j);
        if (value.is_zero()) products_.erase({i, j});
        else products_[{i, j}] = value;
    }

    Vector product_basis(int i, int j) const {
        if (i > j) std::swap(i, j);
        auto it = products_.find({i, j});
        return it == products_.end() ? Vector(dim_, field_) : it->second;
    }

    Vector product(const Vector& u, const Vector& v) const {
        if (u.dim() != dim_ || v.dim() != dim_) throw DimensionMismatch("product argument");
        Vector out(dim_, field_);
        for (int i = 0; i < dim_; ++i) {
            if (u[i].is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                if (v[j].is_zero()) continue;
                out.add_scaled(u[i] * v[j], product_basis(i, j));
            }
        }
        return out;
    }

    // Multiplication operator L_a, x -> a*x.
    LinearMap multiplication(const Vector& a) const {
        LinearMap m(dim_, dim_, field_);
        for (int i = 0; i < dim_; ++i) {
            Vector col = product(a, Vector::basis(dim_, i, field_));
            for (int r = 0; r < dim_; ++r) m.at(r, i) = col[r];
        }
        return m;
    }

private:
    int dim_ = 0;
    Field field_ = Field::Q;
    std::map<std::pair<int, int>, Vector> products_;
};

inline std::string pair_to_string(int i, int j) {
    return "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")";
}

// (e_i e_j) e_k = e_i (e_j e_k) on all basis triples; commutativity is
// structural (storage is unordered), so associativity is the whole check.
inline Report check_comm_assoc(const CommAssocAlgebra& a) {
    Report rep("comm-assoc");
    const int d = a.dim();
    for (int i = 0; i < d && !rep.full(); ++i)
        for (int j = 0; j < d && !rep.full(); ++j)
            for (int k = 0; k < d; ++k) {
                Vector lhs = a.product(a.product_basis(i, j), Vector::basis(d, k, a.field()));
                Vector rhs = a.product(Vector::basis(d, i, a.field()), a.product_basis(j, k));
                if (lhs != rhs) {
                    rep.fail("(e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) +
                                 ")*e" + std::to_string(k + 1),
                             "lhs = " + format_vector(lhs) + ", rhs = " + format_vector(rhs));
                    if (rep.full()) break;
                }
            }
    return rep;
}

// D(xy) = D(x)y + xD(y) on basis pairs.
inline Report is_derivation_assoc(const CommAssocAlgebra& a, const LinearMap& D) {
    if (D.rows() != a.dim() || D.cols() != a.dim())
        throw DimensionMismatch("derivation candidate must be dim x dim");
    Report rep("assoc-derivation");
    const int d = a.dim();
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            Vector lhs = D.apply(a.product_basis(i, j));
            Vector rhs = a.product(D.column(i), Vector::basis(d, j, a.field())) +
                         a.product(Vector::basis(d, i, a.field()), D.column(j));
            if (lhs != rhs) {
                rep.fail("x=" + pair_to_string(i, j),
                         "lhs = " + format_vector(lhs) + ", rhs = " + format_vector(rhs));
                if (rep.full()) return rep;
            }
        }
    return rep;
}

// Exact solve of the (linear) Leibniz identity over basis pairs.
inline std::vector<LinearMap> derivation_space_assoc(const CommAssocAlgebra& a) {
    const int d = a.dim();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) pairs.push_back({i, j});
    Matrix sys(static_cast<int>(pairs.size()) * d, d * d, a.field());
    int row = 0;
    for (auto [i, j] : pairs) {
        Vector c = a.product_basis(i, j);
        for (int r = 0; r < d; ++r, ++row) {
            for (int k = 0; k < d; ++k)
                if (!c[k].is_zero()) sys.at(row, r * d + k) += c[k];
            for (int k = 0; k < d; ++k) {
                Vector bi = a.product_basis(k, j); // D e_i -> e_k slot
                if (!bi[r].is_zero()) sys.at(row, k * d + i) -= bi[r];
                Vector bj = a.product_basis(i, k);
                if (!bj[r].is_zero()) sys.at(row, k * d + j) -= bj[r];
            }
        }
    }
    std::vector<LinearMap> basis;
    for (const Vector& v : nullspace_basis(sys)) {
        LinearMap m(d, d, a.field());
        for (int r = 0; r < d; ++r)
            for (int c2 = 0; c2 < d; ++c2) m.at(r, c2) = v[r * d + c2];
        basis.push_back(std::move(m));
    }
    return basis;
}

// Nijenhuis identity for commutative associative products:
// N(x)N(y) = N( N(x)y + xN(y) - N(xy) ) on basis pairs.
inline Report is_nijenhuis_assoc(const CommAssocAlgebra& a, const LinearMap& n) {
    if (n.rows() != a.dim() || n.cols() != a.dim())
        throw DimensionMismatch("Nijenhuis candidate must be dim x dim");
    Report rep("nijenhuis-assoc");
    const int d = a.dim();
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            Vector ei = Vector::basis(d, i, a.field());
            Vector ej = Vector::basis(d, j, a.field());
            Vector lhs = a.product(n.column(i), n.column(j));
            Vector inner = a.product(n.column(i), ej) + a.product(ei, n.column(j)) -
                           n.apply(a.product_basis(i, j));
            Vector rhs = n.apply(inner);
            if (lhs != rhs) {
                rep.fail("x=" + pair_to_string(i, j),
                         "lhs = " + format_vector(lhs) + ", rhs = " + format_vector(rhs));
                if (rep.full()) return rep;
            }
        }
    return rep;
}

} // namespace nlie
