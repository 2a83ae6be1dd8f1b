#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nlie/cochain.hpp"

namespace nlie {

namespace detail {

inline void check_square_map(const NLieAlgebra& g, const LinearMap& N) {
    if (N.rows() != g.dim() || N.cols() != g.dim())
        throw DimensionMismatch("operator must be square of the algebra dimension");
    if (N.field() != g.field()) throw FieldMismatch();
}

// memoized integer powers; negative exponents invert once
class PowerCache {
public:
    explicit PowerCache(const LinearMap& n) : base_(n) {}
    const Matrix& get(long k) {
        auto it = cache_.find(k);
        if (it != cache_.end()) return it->second;
        Matrix m = matrix_power(base_, k);
        return cache_.emplace(k, std::move(m)).first->second;
    }

private:
    LinearMap base_;
    std::map<long, Matrix> cache_;
};

} // namespace detail

// The tower of deformed brackets:
//   [x_1,...,x_n]_N^0 = [x_1,...,x_n]
//   [x_1,...,x_n]_N^j = sum_{i_1<...<i_j} [...,Nx_{i_1},...,Nx_{i_j},...]
//                       - N [x_1,...,x_n]_N^{j-1}
// Level n is the Nijenhuis defect: it vanishes iff
// [Nx_1,...,Nx_n] = N([x_1,...,x_n]_N^{n-1}).
inline BracketCandidate deformed_bracket(const NLieAlgebra& g, const LinearMap& N,
                                         int level) {
    detail::check_square_map(g, N);
    const int n = g.arity(), d = g.dim();
    if (level < 0 || level > n)
        throw IndexOutOfRange("deformed bracket level must be in [0, arity]");
    BracketCandidate prev = g;
    for (int j = 1; j <= level; ++j) {
        BracketCandidate cur(n, d, g.field());
        for (const Tuple& t : increasing_tuples(d, n)) {
            Vector val(d, g.field());
            for (const Tuple& sel : increasing_tuples(n, j)) {
                std::vector<Vector> args;
                args.reserve(n);
                std::size_t s = 0;
                for (int pos = 0; pos < n; ++pos) {
                    if (s < sel.size() && sel[s] == pos) {
                        args.push_back(N.column(t[pos]));
                        ++s;
                    } else {
                        args.push_back(Vector::basis(d, t[pos], g.field()));
                    }
                }
                val += g.bracket(args);
            }
            val -= N.apply(prev.bracket_basis(t));
            cur.set_bracket(t, val);
        }
        prev = std::move(cur);
    }
    return prev;
}

// Definition form: [Nx_1,...,Nx_n] = N([x_1,...,x_n]_N^{n-1}) on basis tuples.
inline Report is_nijenhuis(const NLieAlgebra& g, const LinearMap& N) {
    detail::check_square_map(g, N);
    Report report("nijenhuis");
    const int n = g.arity(), d = g.dim();
    BracketCandidate top = deformed_bracket(g, N, n - 1);
    for (const Tuple& t : increasing_tuples(d, n)) {
        std::vector<Vector> args;
        args.reserve(n);
        for (int i : t) args.push_back(N.column(i));
        Vector lhs = g.bracket(args);
        Vector rhs = N.apply(top.bracket_basis(t));
        if (lhs != rhs) {
            report.fail("x=" + tuple_to_string(t),
                        "lhs = " + format_vector(lhs) + ", rhs = " + format_vector(rhs));
            if (report.full()) return report;
        }
    }
    return report;
}

// Unshuffle form: sum over p and (p, n-p)-unshuffles sigma of
//   (-1)^{p(p-1)/2 + sum_{j<=p} sigma(j)} N^p [x_{sigma(1)},...,x_{sigma(p)},
//                                              Nx_{sigma(p+1)},...,Nx_{sigma(n)}]
// must vanish; equivalent to the definition form.
inline Report is_nijenhuis_unshuffle(const NLieAlgebra& g, const LinearMap& N) {
    detail::check_square_map(g, N);
    Report report("nijenhuis-unshuffle");
    const int n = g.arity(), d = g.dim();
    std::vector<Matrix> npow{Matrix::identity(d, g.field())};
    for (int p = 1; p <= n; ++p) npow.push_back(npow.back() * N);
    for (const Tuple& t : increasing_tuples(d, n)) {
        Vector total(d, g.field());
        for (int p = 0; p <= n; ++p) {
            for (const Unshuffle& u : unshuffles(n, p)) {
                // arguments in sigma order: plain block, then the N block
                std::vector<Vector> args;
                args.reserve(n);
                for (int pos : u.sel) args.push_back(Vector::basis(d, t[pos], g.field()));
                for (int pos : u.rest) args.push_back(N.column(t[pos]));
                Vector term = npow[p].apply(g.bracket(args));
                long exp = static_cast<long>(p) * (p - 1) / 2 + u.sel_index_sum_1based;
                if (exp % 2) total -= term; else total += term;
            }
        }
        if (!total.is_zero()) {
            report.fail("x=" + tuple_to_string(t), "sum = " + format_vector(total));
            if (report.full()) return report;
        }
    }
    return report;
}

struct DeformationFamily {
    NLieAlgebra base;
    std::vector<BracketCandidate> omegas; // omega_i at index i-1, 1 <= i <= n-1
};

inline DeformationFamily omega_family(const NLieAlgebra& g, const LinearMap& N) {
    Report nij = is_nijenhuis(g, N);
    if (!nij.ok()) throw NotNijenhuis("omega_family needs a Nijenhuis operator; " +
                                      nij.witness());
    DeformationFamily fam{g, {}};
    for (int i = 1; i <= g.arity() - 1; ++i)
        fam.omegas.push_back(deformed_bracket(g, N, i));
    return fam;
}

inline NLieAlgebra evaluate_at(const DeformationFamily& fam, const Scalar& lambda) {
    const NLieAlgebra& g = fam.base;
    if (lambda.field() != g.field()) throw FieldMismatch();
    NLieAlgebra out(g.arity(), g.dim(), g.field());
    for (const Tuple& t : increasing_tuples(g.dim(), g.arity())) {
        Vector v = g.bracket_basis(t);
        Scalar lp = Scalar::one(g.field());
        for (const BracketCandidate& w : fam.omegas) {
            lp = lp * lambda;
            v.add_scaled(lp, w.bracket_basis(t));
        }
        out.set_bracket(t, v);
    }
    return out;
}

// The generating conditions, checked with adjoint coefficients:
//   delta omega_1 = 0
//   delta omega_l + 1/2 sum_{i=1}^{l-1} [omega_i, omega_{l-i}] = 0   (2<=l<=n-1)
//   1/2 sum_{i=l-n+1}^{n-1} [omega_i, omega_{l-i}] = 0               (n<=l<=2n-2)
inline Report check_deformation_conditions(const DeformationFamily& fam) {
    Report report("deformation-conditions");
    const NLieAlgebra& g = fam.base;
    const int n = g.arity();
    if (static_cast<int>(fam.omegas.size()) != n - 1)
        throw ShapeMismatch("family must carry arity-1 omegas");
    Representation rep = adjoint_rep(g);
    std::vector<Cochain> w;
    w.reserve(fam.omegas.size());
    for (const BracketCandidate& o : fam.omegas) w.push_back(nary_to_cochain(o));
    const Scalar half(Rat(1, 2), g.field());

    auto record = [&](int l, const Cochain& c) {
        if (c.is_zero()) return true;
        const auto& [key, value] = *c.values().begin();
        report.fail("l=" + std::to_string(l),
                    "value at " + cochain_key_to_string(key) + " is " +
                        format_vector(value));
        return !report.full();
    };

    CoboundaryOp delta(rep, 2);
    if (!record(1, delta.apply(w[0]))) return report;
    for (int l = 2; l <= n - 1; ++l) {
        Cochain sum = delta.apply(w[l - 1]);
        for (int i = 1; i <= l - 1; ++i)
            sum = sum + nr_bracket(g, w[i - 1], w[l - i - 1]) * half;
        if (!record(l, sum)) return report;
    }
    for (int l = n; l <= 2 * n - 2; ++l) {
        Cochain sum(3, g, g.dim());
        for (int i = l - n + 1; i <= n - 1; ++i)
            sum = sum + nr_bracket(g, w[i - 1], w[l - i - 1]) * half;
        if (!record(l, sum)) return report;
    }
    return report;
}

// T_lambda = Id + lambda N intertwines the deformed bracket with the original:
// T_lambda [x_1,...,x_n]_lambda = [T_lambda x_1,...,T_lambda x_n].
inline Report check_trivial(const NLieAlgebra& g, const LinearMap& N,
                            const Scalar& lambda) {
    DeformationFamily fam = omega_family(g, N);
    NLieAlgebra deformed = evaluate_at(fam, lambda);
    LinearMap t = Matrix::identity(g.dim(), g.field()) + N * lambda;
    return is_homomorphism(deformed, g, t);
}

// sum_k coeffs[k] N^{min_exponent + k}; negative exponents require N invertible.
inline LinearMap polynomial_map(const LinearMap& N, const std::vector<Scalar>& coeffs,
                                long min_exponent = 0) {
    if (N.rows() != N.cols()) throw DimensionMismatch("polynomial of a square map");
    detail::PowerCache pow(N);
    Matrix out(N.rows(), N.cols(), N.field());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        out = out + pow.get(min_exponent + static_cast<long>(k)) * coeffs[k];
    }
    return out;
}

// The appendix identity: for a Nijenhuis N and integer weights alpha_i,
//   sum_{p=0}^n sum_sigma (-1)^{p(p-1)/2 + sum_{j<=p} sigma(j)}
//     N^{alpha_{sigma(1)}+...+alpha_{sigma(p)}}
//     [x_{sigma(1)},...,x_{sigma(p)},
//      N^{alpha_{sigma(p+1)}} x_{sigma(p+1)},...,N^{alpha_{sigma(n)}} x_{sigma(n)}]
// vanishes. Positive weights always make sense; negative ones need N invertible
// (matrix_power raises SingularMatrix otherwise).
inline Report power_identity(const NLieAlgebra& g, const LinearMap& N,
                             const std::vector<long>& exponents) {
    detail::check_square_map(g, N);
    const int n = g.arity(), d = g.dim();
    if (static_cast<int>(exponents.size()) != n)
        throw ShapeMismatch("one exponent per bracket slot");
    Report report("power-identity");
    detail::PowerCache pow(N);
    for (const Tuple& t : increasing_tuples(d, n)) {
        Vector total(d, g.field());
        for (int p = 0; p <= n; ++p) {
            for (const Unshuffle& u : unshuffles(n, p)) {
                // arguments in sigma order: plain block, then the weighted block
                std::vector<Vector> args;
                args.reserve(n);
                long outer = 0;
                for (int pos : u.sel) {
                    args.push_back(Vector::basis(d, t[pos], g.field()));
                    outer += exponents[pos];
                }
                for (int pos : u.rest)
                    args.push_back(pow.get(exponents[pos]).column(t[pos]));
                Vector term = pow.get(outer).apply(g.bracket(args));
                long exp = static_cast<long>(p) * (p - 1) / 2 + u.sel_index_sum_1based;
                if (exp % 2) total -= term; else total += term;
            }
        }
        if (!total.is_zero()) {
            report.fail("x=" + tuple_to_string(t), "sum = " + format_vector(total));
            if (report.full()) return report;
        }
    }
    return report;
}

} // namespace nlie
