#pragma once

#include <map>
#include <string>
#include <vector>

#include "nlie/algebra.hpp"

namespace nlie {

// rho assigns a vdim x vdim matrix to each wedge of n-1 basis vectors,
// extended multilinearly/antisymmetrically the same way brackets are.
class Representation {
public:
    Representation() = default;
    Representation(NLieAlgebra algebra, int vdim)
        : algebra_(std::move(algebra)), vdim_(vdim) {}

    const NLieAlgebra& algebra() const { return algebra_; }
    int vdim() const { return vdim_; }
    Field field() const { return algebra_.field(); }
    const std::map<Tuple, Matrix>& entries() const { return rho_; }

    void set_rho(Tuple key, const Matrix& m) {
        if (static_cast<int>(key.size()) != algebra_.arity() - 1)
            throw ShapeMismatch("rho key must have n-1 indices");
        for (int i : key)
            if (i < 0 || i >= algebra_.dim()) throw IndexOutOfRange("rho index");
        if (m.rows() != vdim_ || m.cols() != vdim_ || m.field() != field())
            throw DimensionMismatch("rho matrix shape");
        int sign = sort_with_sign(key);
        if (sign == 0) {
            if (!m.is_zero()) throw ShapeMismatch("repeated index in rho key");
            return;
        }
        Matrix v = sign < 0 ? m * Scalar(-1, field()) : m;
        if (v.is_zero()) rho_.erase(key);
        else rho_[key] = std::move(v);
    }

    Matrix rho_basis(Tuple key) const {
        int sign = sort_with_sign(key);
        if (sign == 0) return Matrix(vdim_, vdim_, field());
        auto it = rho_.find(key);
        if (it == rho_.end()) return Matrix(vdim_, vdim_, field());
        return sign < 0 ? it->second * Scalar(-1, field()) : it->second;
    }

    // rho(x_1, ..., x_{n-1}) for arbitrary vectors, via minor determinants.
    Matrix rho_eval(const std::vector<Vector>& xs) const {
        const int k = algebra_.arity() - 1;
        if (static_cast<int>(xs.size()) != k)
            throw ArityMismatch("rho expects " + std::to_string(k) + " arguments");
        for (const Vector& x : xs)
            if (x.dim() != algebra_.dim() || x.field() != field())
                throw DimensionMismatch("rho argument shape");
        Matrix out(vdim_, vdim_, field());
        std::vector<Scalar> minor(static_cast<std::size_t>(k) * k, Scalar(field()));
        for (const auto& [key, mat] : rho_) {
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c)
                    minor[static_cast<std::size_t>(r) * k + c] = xs[c][key[r]];
            Scalar coeff = detail::det_small(minor, k, 0, 0u, field());
            if (!coeff.is_zero()) out = out + mat * coeff;
        }
        return out;
    }

    // rho extended linearly to fundamental objects.
    Matrix rho_fo(const FundamentalObject& x) const {
        Matrix out(vdim_, vdim_, field());
        for (const auto& [key, coeff] : x.terms()) out = out + rho_basis(key) * coeff;
        return out;
    }

private:
    NLieAlgebra algebra_;
    int vdim_ = 0;
    std::map<Tuple, Matrix> rho_;
};

inline Representation adjoint_rep(const NLieAlgebra& g) {
    Representation rep(g, g.dim());
    for (const Tuple& key : increasing_tuples(g.dim(), g.arity() - 1)) {
        Matrix m(g.dim(), g.dim(), g.field());
        for (int j = 0; j < g.dim(); ++j) {
            Vector col = g.ad_basis(key, j);
            for (int r = 0; r < g.dim(); ++r) m.at(r, j) = col[r];
        }
        rep.set_rho(key, m);
    }
    return rep;
}

// Both representation axioms over basis tuples:
//  (a) [rho(X), rho(Y)] = rho(X o Y)
//  (b) rho(x_1,...,x_{n-2}, [y_1,...,y_n])
//        = sum_i (-1)^{n-i} rho(y_1,...,^y_i,...,y_n) rho(x_1,...,x_{n-2}, y_i)
inline Report check_representation(const Representation& rep) {
    Report report("representation");
    const NLieAlgebra& g = rep.algebra();
    const int d = g.dim(), n = g.arity();
    auto keys = increasing_tuples(d, n - 1);
    for (const Tuple& xk : keys) {
        Matrix rx = rep.rho_basis(xk);
        for (const Tuple& yk : keys) {
            Matrix ry = rep.rho_basis(yk);
            Matrix lhs = rx * ry - ry * rx;
            FundamentalObject xy =
                circle_product(g, FundamentalObject::basis(d, g.field(), xk),
                               FundamentalObject::basis(d, g.field(), yk));
            Matrix rhs = rep.rho_fo(xy);
            if (lhs != rhs) {
                report.fail("axiom1 X=" + tuple_to_string(xk) + " Y=" + tuple_to_string(yk),
                            "commutator differs from rho(X o Y)");
                if (report.full()) return report;
            }
        }
    }
    for (const Tuple& x : increasing_tuples(d, n - 2)) {
        for (const Tuple& y : increasing_tuples(d, n)) {
            Vector br = g.bracket_basis(y);
            Matrix lhs(rep.vdim(), rep.vdim(), g.field());
            for (int k = 0; k < d; ++k) {
                if (br[k].is_zero()) continue;
                Tuple xt = x;
                xt.push_back(k);
                lhs = lhs + rep.rho_basis(xt) * br[k];
            }
            Matrix rhs(rep.vdim(), rep.vdim(), g.field());
            for (int i = 0; i < n; ++i) {
                Tuple xi = x;
                xi.push_back(y[i]);
                Matrix prod = rep.rho_basis(erase_at(y, i)) * rep.rho_basis(xi);
                if ((n - 1 - i) % 2) // (-1)^{n-i} with i zero-based: n-(i+1)
                    rhs = rhs - prod;
                else
                    rhs = rhs + prod;
            }
            if (lhs != rhs) {
                report.fail("axiom2 x=" + tuple_to_string(x) + " y=" + tuple_to_string(y),
                            "bracket action differs from the alternating sum");
                if (report.full()) return report;
            }
        }
    }
    return report;
}

// g (+) V with [x_1+v_1,...,x_n+v_n] =
//   [x_1,...,x_n] + sum_i (-1)^{n-i} rho(x_1,...,^x_i,...,x_n)(v_i).
// Basis order: the g basis first, then the V basis.
inline NLieAlgebra semidirect_product(const Representation& rep) {
    Report ok = check_representation(rep);
    if (!ok.ok())
        throw InvalidRepresentation("semidirect product needs a representation; " +
                                    ok.witness());
    const NLieAlgebra& g = rep.algebra();
    const int d = g.dim(), k = rep.vdim(), n = g.arity();
    NLieAlgebra out(n, d + k, g.field());
    for (const Tuple& t : increasing_tuples(d, n)) {
        Vector br = g.bracket_basis(t);
        Vector v(d + k, g.field());
        for (int r = 0; r < d; ++r) v[r] = br[r];
        out.set_bracket(t, v);
    }
    // exactly one V slot: it is the last entry of any increasing tuple
    for (const Tuple& x : increasing_tuples(d, n - 1)) {
        Matrix rx = rep.rho_basis(x);
        for (int j = 0; j < k; ++j) {
            Tuple t = x;
            t.push_back(d + j);
            Vector v(d + k, g.field());
            for (int r = 0; r < k; ++r) v[d + r] = rx.at(r, j);
            out.set_bracket(t, v);
        }
    }
    return out;
}

} // namespace nlie
