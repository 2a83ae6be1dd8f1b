#pragma once

#include <string>
#include <vector>

#include "nlie/deform.hpp"

namespace nlie {

// T : V -> g satisfies, for all v_1,...,v_n in V,
//   [Tv_1,...,Tv_n] = sum_i (-1)^{n-i} T( rho(Tv_1,...,^Tv_i,...,Tv_n)(v_i) ).
// Both sides are alternating multilinear, so basis tuples decide.
inline Report is_o_operator(const Representation& rep, const Matrix& t) {
    const NLieAlgebra& g = rep.algebra();
    if (t.rows() != g.dim() || t.cols() != rep.vdim())
        throw DimensionMismatch("operator must map the module into the algebra");
    if (t.field() != g.field()) throw FieldMismatch();
    Report report("o-operator");
    const int n = g.arity();
    for (const Tuple& w : increasing_tuples(rep.vdim(), n)) {
        std::vector<Vector> imgs;
        imgs.reserve(n);
        for (int i : w) imgs.push_back(t.column(i));
        Vector lhs = g.bracket(imgs);
        Vector rhs(g.dim(), g.field());
        for (int i = 0; i < n; ++i) {
            std::vector<Vector> rest;
            rest.reserve(n - 1);
            for (int k = 0; k < n; ++k)
                if (k != i) rest.push_back(imgs[k]);
            Vector inner = rep.rho_eval(rest).column(w[i]);
            Vector term = t.apply(inner);
            // (-1)^{n-i} with i one-based
            if ((n - 1 - i) % 2) rhs -= term; else rhs += term;
        }
        if (lhs != rhs) {
            report.fail("v=" + tuple_to_string(w),
                        "lhs = " + format_vector(lhs) + ", rhs = " + format_vector(rhs));
            if (report.full()) return report;
        }
    }
    return report;
}

// The block map (x + v) -> Tv on g (+) V.
inline LinearMap lift_o_operator(const Representation& rep, const Matrix& t) {
    const NLieAlgebra& g = rep.algebra();
    if (t.rows() != g.dim() || t.cols() != rep.vdim())
        throw DimensionMismatch("operator must map the module into the algebra");
    if (t.field() != g.field()) throw FieldMismatch();
    const int d = g.dim(), k = rep.vdim();
    LinearMap lift(d + k, d + k, g.field());
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < k; ++c) lift.at(r, d + c) = t.at(r, c);
    return lift;
}

// Weight-zero Rota-Baxter operators are the O-operators of the adjoint
// representation; for n = 3 this is the classical
//   [Px,Py,Pz] = P([Px,Py,z] + [Px,y,Pz] + [x,Py,Pz]).
inline Report is_rota_baxter(const NLieAlgebra& g, const LinearMap& p) {
    detail::check_square_map(g, p);
    Report inner = is_o_operator(adjoint_rep(g), p);
    Report report("rota-baxter");
    for (const Failure& f : inner.failures()) report.fail(f.where, f.detail);
    return report;
}

struct Classification {
    Report derivation;
    Report rota_baxter;
    Report nijenhuis;
};

inline Classification classify_map(const NLieAlgebra& g, const LinearMap& n) {
    return Classification{is_derivation(g, n), is_rota_baxter(g, n),
                          is_nijenhuis(g, n)};
}

} // namespace nlie
