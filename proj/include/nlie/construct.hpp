#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "nlie/assoc.hpp"
#include "nlie/deform.hpp"

namespace nlie {

// Linear functionals are covectors in the dual basis.
inline Scalar functional_eval(const Vector& f, const Vector& x) {
    if (f.dim() != x.dim()) throw DimensionMismatch("functional argument");
    Scalar out = Scalar::zero(f.field());
    for (int i = 0; i < f.dim(); ++i) out += f[i] * x[i];
    return out;
}

// {x_1,...,x_{n+1}} = sum_i (-1)^{i-1} f(x_i) [x_1,...,^x_i,...,x_{n+1}],
// an (n+1)-ary bracket on the same space; requires f to kill every bracket.
inline NLieAlgebra extend_by_functional(const NLieAlgebra& g, const Vector& f) {
    if (f.dim() != g.dim()) throw DimensionMismatch("functional must live on the algebra");
    if (f.field() != g.field()) throw FieldMismatch();
    const int n = g.arity(), d = g.dim();
    for (const Tuple& t : increasing_tuples(d, n)) {
        Scalar v = functional_eval(f, g.bracket_basis(t));
        if (!v.is_zero())
            throw FunctionalNotVanishingOnDerived("f([" + tuple_to_string(t) +
                                                  "]) = " + format_scalar(v));
    }
    NLieAlgebra out(n + 1, d, g.field());
    for (const Tuple& t : increasing_tuples(d, n + 1)) {
        Vector value(d, g.field());
        for (int i = 0; i <= n; ++i) {
            const Scalar& fi = f[t[i]];
            if (fi.is_zero()) continue;
            Vector part = g.bracket_basis(erase_at(t, i));
            value.add_scaled(i % 2 ? -fi : fi, part);
        }
        out.set_bracket(t, value);
    }
    return out;
}

// A Nijenhuis operator stays Nijenhuis on the functional extension.
inline Report check_nijenhuis_persistence(const NLieAlgebra& g, const Vector& f,
                                          const LinearMap& n) {
    Report base = is_nijenhuis(g, n);
    if (!base.ok()) throw NotNijenhuis(base.witness());
    Report inner = is_nijenhuis(extend_by_functional(g, f), n);
    Report out("nijenhuis-persistence");
    for (const Failure& fl : inner.failures()) out.fail(fl.where, fl.detail);
    return out;
}

// |x y z| over a commutative product: columns are triples of algebra
// elements, expanded as sum_{s in S3} sgn(s) x_{s(1)} y_{s(2)} z_{s(3)}.
inline Vector det3(const CommAssocAlgebra& a, const std::array<Vector, 3>& x,
                   const std::array<Vector, 3>& y, const std::array<Vector, 3>& z) {
    static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                    {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    Vector out(a.dim(), a.field());
    for (int s = 0; s < 6; ++s) {
        Vector term = a.product(a.product(x[perms[s][0]], y[perms[s][1]]), z[perms[s][2]]);
        if (s < 3) out += term; else out -= term;
    }
    return out;
}

namespace detail {

inline void require_assoc_derivation(const CommAssocAlgebra& a, const LinearMap& d,
                                     const std::string& label) {
    Report rep = is_derivation_assoc(a, d);
    if (!rep.ok()) throw NotADerivation(label + ": " + rep.witness());
}

inline void require_commute(const LinearMap& p, const LinearMap& q,
                            const std::string& label) {
    if (!(p * q == q * p)) throw DerivationsDoNotCommute(label);
}

inline NLieAlgebra from_columns(
    const CommAssocAlgebra& a,
    const std::function<std::array<Vector, 3>(const Vector&)>& column) {
    NLieAlgebra out(3, a.dim(), a.field());
    for (const Tuple& t : increasing_tuples(a.dim(), 3)) {
        std::array<std::array<Vector, 3>, 3> cols = {
            column(Vector::basis(a.dim(), t[0], a.field())),
            column(Vector::basis(a.dim(), t[1], a.field())),
            column(Vector::basis(a.dim(), t[2], a.field()))};
        out.set_bracket(t, det3(a, cols[0], cols[1], cols[2]));
    }
    return out;
}

} // namespace detail

// [[x,y,z]] = f(x)(D(y)z - D(z)y) + c.p., the determinant with rows f, D, id.
inline NLieAlgebra bracket_f_D(const CommAssocAlgebra& a, const Vector& f,
                               const LinearMap& d) {
    if (f.dim() != a.dim() || f.field() != a.field())
        throw DimensionMismatch("functional must live on the algebra");
    if (d.rows() != a.dim() || d.cols() != a.dim())
        throw DimensionMismatch("derivation must be dim x dim");
    detail::require_assoc_derivation(a, d, "D");
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j) {
            Vector ei = Vector::basis(a.dim(), i, a.field());
            Vector ej = Vector::basis(a.dim(), j, a.field());
            Scalar lhs = functional_eval(f, a.product(d.column(i), ej));
            Scalar rhs = functional_eval(f, a.product(ei, d.column(j)));
            if (lhs != rhs)
                throw FunctionalSymmetryViolated("x=" + pair_to_string(i, j) +
                                                 ": f(D(x)*y) = " + format_scalar(lhs) +
                                                 ", f(x*D(y)) = " + format_scalar(rhs));
        }
    NLieAlgebra out(3, a.dim(), a.field());
    for (const Tuple& t : increasing_tuples(a.dim(), 3)) {
        std::array<Vector, 3> e = {Vector::basis(a.dim(), t[0], a.field()),
                                   Vector::basis(a.dim(), t[1], a.field()),
                                   Vector::basis(a.dim(), t[2], a.field())};
        std::array<Vector, 3> de = {d.column(t[0]), d.column(t[1]), d.column(t[2])};
        std::array<Scalar, 3> fe = {f[t[0]], f[t[1]], f[t[2]]};
        Vector value(a.dim(), a.field());
        for (int i = 0; i < 3; ++i) {
            // cyclic: f(x_i) (D(x_{i+1}) x_{i+2} - D(x_{i+2}) x_{i+1})
            int j = (i + 1) % 3, k = (i + 2) % 3;
            if (fe[i].is_zero()) continue;
            value.add_scaled(fe[i], a.product(de[j], e[k]) - a.product(de[k], e[j]));
        }
        out.set_bracket(t, value);
    }
    return out;
}

// [[x,y,z]] = det with rows (x,y,z), (D1 row), (D2 row).
inline NLieAlgebra bracket_D1_D2(const CommAssocAlgebra& a, const LinearMap& d1,
                                 const LinearMap& d2) {
    if (d1.rows() != a.dim() || d1.cols() != a.dim() || d2.rows() != a.dim() ||
        d2.cols() != a.dim())
        throw DimensionMismatch("derivations must be dim x dim");
    detail::require_assoc_derivation(a, d1, "D1");
    detail::require_assoc_derivation(a, d2, "D2");
    detail::require_commute(d1, d2, "D1 D2 != D2 D1");
    return detail::from_columns(a, [&](const Vector& x) {
        return std::array<Vector, 3>{x, d1.apply(x), d2.apply(x)};
    });
}

// [[x,y,z]] = det with rows (D1 row), (D2 row), (D3 row).
inline NLieAlgebra bracket_D1_D2_D3(const CommAssocAlgebra& a, const LinearMap& d1,
                                    const LinearMap& d2, const LinearMap& d3) {
    for (const LinearMap* d : {&d1, &d2, &d3})
        if (d->rows() != a.dim() || d->cols() != a.dim())
            throw DimensionMismatch("derivations must be dim x dim");
    detail::require_assoc_derivation(a, d1, "D1");
    detail::require_assoc_derivation(a, d2, "D2");
    detail::require_assoc_derivation(a, d3, "D3");
    detail::require_commute(d1, d2, "D1 D2 != D2 D1");
    detail::require_commute(d1, d3, "D1 D3 != D3 D1");
    detail::require_commute(d2, d3, "D2 D3 != D3 D2");
    return detail::from_columns(a, [&](const Vector& x) {
        return std::array<Vector, 3>{d1.apply(x), d2.apply(x), d3.apply(x)};
    });
}

// |N(x) N(y) N(z)| = N(|N(x) N(y) z| + c.p.) - N^2(|N(x) y z| + c.p.)
//                    + N^3(|x y z|), N applied to columns entrywise.
inline Report det3_expansion_check(const CommAssocAlgebra& a, const LinearMap& n,
                                   const std::array<Vector, 3>& x,
                                   const std::array<Vector, 3>& y,
                                   const std::array<Vector, 3>& z) {
    Report pre = is_nijenhuis_assoc(a, n);
    if (!pre.ok()) throw NotNijenhuisAssoc(pre.witness());
    auto lift = [&](const std::array<Vector, 3>& c) {
        return std::array<Vector, 3>{n.apply(c[0]), n.apply(c[1]), n.apply(c[2])};
    };
    std::array<Vector, 3> nx = lift(x), ny = lift(y), nz = lift(z);

    Vector lhs = det3(a, nx, ny, nz);
    Vector one = det3(a, nx, ny, z) + det3(a, ny, nz, x) + det3(a, nz, nx, y);
    Vector two = det3(a, nx, y, z) + det3(a, ny, z, x) + det3(a, nz, x, y);
    Vector three = det3(a, x, y, z);
    Vector rhs = n.apply(one - n.apply(two - n.apply(three)));

    Report rep("det3-expansion");
    if (lhs != rhs)
        rep.fail("column triples", "lhs = " + format_vector(lhs) +
                                       ", rhs = " + format_vector(rhs));
    return rep;
}

namespace detail {

inline Report persistence_report(const NLieAlgebra& three, const LinearMap& n) {
    Report inner = is_nijenhuis(three, n);
    Report out("nijenhuis-persistence");
    for (const Failure& f : inner.failures()) out.fail(f.where, f.detail);
    return out;
}

inline void require_nijenhuis_assoc(const CommAssocAlgebra& a, const LinearMap& n) {
    Report rep = is_nijenhuis_assoc(a, n);
    if (!rep.ok()) throw NotNijenhuisAssoc(rep.witness());
}

inline void require_n_commutes(const LinearMap& n, const LinearMap& d,
                               const std::string& label) {
    if (!(n * d == d * n)) throw CommutationViolated(label);
}

} // namespace detail

inline Report check_nijenhuis_persistence_f_D(const CommAssocAlgebra& a,
                                              const LinearMap& n, const Vector& f,
                                              const LinearMap& d) {
    detail::require_nijenhuis_assoc(a, n);
    detail::require_n_commutes(n, d, "N D != D N");
    return detail::persistence_report(bracket_f_D(a, f, d), n);
}

inline Report check_nijenhuis_persistence_D1_D2(const CommAssocAlgebra& a,
                                                const LinearMap& n, const LinearMap& d1,
                                                const LinearMap& d2) {
    detail::require_nijenhuis_assoc(a, n);
    detail::require_n_commutes(n, d1, "N D1 != D1 N");
    detail::require_n_commutes(n, d2, "N D2 != D2 N");
    return detail::persistence_report(bracket_D1_D2(a, d1, d2), n);
}

inline Report check_nijenhuis_persistence_D1_D2_D3(const CommAssocAlgebra& a,
                                                   const LinearMap& n,
                                                   const LinearMap& d1,
                                                   const LinearMap& d2,
                                                   const LinearMap& d3) {
    detail::require_nijenhuis_assoc(a, n);
    detail::require_n_commutes(n, d1, "N D1 != D1 N");
    detail::require_n_commutes(n, d2, "N D2 != D2 N");
    detail::require_n_commutes(n, d3, "N D3 != D3 N");
    return detail::persistence_report(bracket_D1_D2_D3(a, d1, d2, d3), n);
}

} // namespace nlie
