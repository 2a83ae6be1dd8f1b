#pragma once

#include <map>
#include <string>
#include <vector>

#include "nlie/error.hpp"
#include "nlie/linalg.hpp"
#include "nlie/report.hpp"
#include "nlie/tuples.hpp"

namespace nlie {

namespace detail {

// Determinant by Laplace expansion with a column mask; rows of the minor are
// visited top-down, zero entries short-circuit.  Sizes here are tiny (the
// bracket arity), so this beats setting up elimination.
inline Scalar det_small(const std::vector<Scalar>& m, int n, int row, unsigned used,
                        Field f) {
    if (row == n) return Scalar::one(f);
    Scalar acc(f);
    int colpos = 0;
    for (int c = 0; c < n; ++c) {
        if (used & (1u << c)) continue;
        const Scalar& a = m[static_cast<std::size_t>(row) * n + c];
        if (!a.is_zero()) {
            Scalar sub = det_small(m, n, row + 1, used | (1u << c), f);
            if (!sub.is_zero()) {
                Scalar term = a * sub;
                if (colpos % 2) acc -= term; else acc += term;
            }
        }
        ++colpos;
    }
    return acc;
}

} // namespace detail

// An n-ary bracket on a d-dimensional space, stored as structure constants on
// strictly increasing basis tuples (everything else follows by antisymmetry).
// Whether the bracket satisfies the Filippov identity is NOT an invariant of
// the type: construction sites run check_filippov and decide.  Deformation
// routines return unvalidated tables of exactly this shape ("candidates").
class NLieAlgebra {
public:
    NLieAlgebra() = default;
    NLieAlgebra(int arity, int dim, Field field)
        : arity_(arity), dim_(dim), field_(field) {
        if (arity < 2) throw ArityMismatch("bracket arity must be at least 2");
        if (dim < 0) throw DimensionMismatch("negative dimension");
    }

    int arity() const { return arity_; }
    int dim() const { return dim_; }
    Field field() const { return field_; }
    const std::map<Tuple, Vector>& constants() const { return constants_; }

    // Key may arrive in any order; it is sign-normalized.  Zero rows are pruned.
    void set_bracket(Tuple key, const Vector& value) {
        if (static_cast<int>(key.size()) != arity_)
            throw ArityMismatch("bracket key size " + std::to_string(key.size()));
        for (int i : key)
            if (i < 0 || i >= dim_)
                throw IndexOutOfRange("bracket index " + std::to_string(i + 1));
        if (value.dim() != dim_ || value.field() != field_)
            throw DimensionMismatch("bracket value shape");
        int sign = sort_with_sign(key);
        if (sign == 0) {
            if (!value.is_zero())
                throw ShapeMismatch("repeated index in bracket key");
            return;
        }
        Vector v = sign < 0 ? -value : value;
        if (v.is_zero()) constants_.erase(key);
        else constants_[key] = std::move(v);
    }

    // [e_{t1},...,e_{tn}] for an arbitrary (possibly unsorted) index tuple.
    Vector bracket_basis(Tuple key) const {
        int sign = sort_with_sign(key);
        if (sign == 0) return Vector(dim_, field_);
        auto it = constants_.find(key);
        if (it == constants_.end()) return Vector(dim_, field_);
        return sign < 0 ? -it->second : it->second;
    }

    // Full multilinear evaluation.  For each stored key the coefficient of
    // that basis bracket in x_1 ^ ... ^ x_n is the minor determinant.
    Vector bracket(const std::vector<Vector>& args) const {
        if (static_cast<int>(args.size()) != arity_)
            throw ArityMismatch("bracket expects " + std::to_string(arity_) + " arguments");
        for (const Vector& a : args)
            if (a.dim() != dim_ || a.field() != field_)
                throw DimensionMismatch("bracket argument shape");
        Vector out(dim_, field_);
        std::vector<Scalar> minor(static_cast<std::size_t>(arity_) * arity_, Scalar(field_));
        for (const auto& [key, value] : constants_) {
            for (int r = 0; r < arity_; ++r)
                for (int c = 0; c < arity_; ++c)
                    minor[static_cast<std::size_t>(r) * arity_ + c] = args[c][key[r]];
            Scalar coeff = detail::det_small(minor, arity_, 0, 0u, field_);
            out.add_scaled(coeff, value);
        }
        return out;
    }

    // ad_{e_X} e_j with X an (n-1)-index tuple.
    Vector ad_basis(const Tuple& x, int j) const {
        Tuple t = x;
        t.push_back(j);
        return bracket_basis(std::move(t));
    }

    // ad_{e_X} v, extended linearly in the last slot.
    Vector ad_basis_vec(const Tuple& x, const Vector& v) const {
        Vector out(dim_, field_);
        for (int k = 0; k < dim_; ++k)
            if (!v[k].is_zero()) out.add_scaled(v[k], ad_basis(x, k));
        return out;
    }

    bool operator==(const NLieAlgebra& o) const {
        return arity_ == o.arity_ && dim_ == o.dim_ && field_ == o.field_ &&
               constants_ == o.constants_;
    }

private:
    int arity_ = 2;
    int dim_ = 0;
    Field field_ = Field::Q;
    std::map<Tuple, Vector> constants_;
};

// Deformation routines hand back bracket tables of the same shape that have
// not been (and often will not be) validated; the alias keeps call sites honest.
using BracketCandidate = NLieAlgebra;

// A sum of wedge monomials e_{k1} ^ ... ^ e_{k_{n-1}}, the left slots of the
// bracket.  Keys are strictly increasing; add_term folds signs in.
class FundamentalObject {
public:
    FundamentalObject() = default;
    FundamentalObject(int dim, int slots, Field field)
        : dim_(dim), slots_(slots), field_(field) {}

    static FundamentalObject basis(int dim, Field field, const Tuple& key) {
        FundamentalObject x(dim, static_cast<int>(key.size()), field);
        x.add_term(key, Scalar::one(field));
        return x;
    }

    int dim() const { return dim_; }
    int slots() const { return slots_; }
    Field field() const { return field_; }
    const std::map<Tuple, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Tuple key, const Scalar& coeff) {
        if (static_cast<int>(key.size()) != slots_)
            throw ShapeMismatch("wedge monomial length");
        if (coeff.is_zero()) return;
        int sign = sort_with_sign(key);
        if (sign == 0) return;
        Scalar add = sign < 0 ? -coeff : coeff;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), std::move(add));
        } else {
            it->second += add;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    FundamentalObject& operator+=(const FundamentalObject& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    FundamentalObject operator-() const {
        FundamentalObject r(dim_, slots_, field_);
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }
    bool operator==(const FundamentalObject& o) const { return terms_ == o.terms_; }

private:
    int dim_ = 0;
    int slots_ = 0;
    Field field_ = Field::Q;
    std::map<Tuple, Scalar> terms_;
};

inline std::string format_fundamental(const FundamentalObject& x) {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [k, c] : x.terms()) {
        if (!s.empty()) s += " + ";
        s += format_scalar(c) + "*";
        for (std::size_t i = 0; i < k.size(); ++i)
            s += (i ? "^e" : "e") + std::to_string(k[i] + 1);
    }
    return s;
}

// ad_X v for a general fundamental object X.
inline Vector ad_apply(const NLieAlgebra& g, const FundamentalObject& x, const Vector& v) {
    Vector out(g.dim(), g.field());
    for (const auto& [key, coeff] : x.terms())
        out.add_scaled(coeff, g.ad_basis_vec(key, v));
    return out;
}

// X o Y = sum_i (y_1, ..., ad_X y_i, ..., y_{n-1}), extended bilinearly.
inline FundamentalObject circle_product(const NLieAlgebra& g, const FundamentalObject& x,
                                        const FundamentalObject& y) {
    FundamentalObject out(g.dim(), g.arity() - 1, g.field());
    for (const auto& [xk, xc] : x.terms()) {
        for (const auto& [yk, yc] : y.terms()) {
            Scalar ab = xc * yc;
            for (std::size_t i = 0; i < yk.size(); ++i) {
                Vector w = g.ad_basis(xk, yk[i]);
                for (int k = 0; k < g.dim(); ++k)
                    if (!w[k].is_zero()) out.add_term(replace_at(yk, i, k), ab * w[k]);
            }
        }
    }
    return out;
}

// --- identity checks --------------------------------------------------------

// Filippov identity over all strictly increasing basis tuples:
// [X, [Y]] = sum_i [y_1, ..., [X, y_i], ..., y_n].
inline Report check_filippov(const NLieAlgebra& g) {
    Report rep("filippov");
    const int n = g.arity(), d = g.dim();
    auto xs = increasing_tuples(d, n - 1);
    auto ys = increasing_tuples(d, n);
    for (const Tuple& x : xs) {
        for (const Tuple& y : ys) {
            Vector lhs = g.ad_basis_vec(x, g.bracket_basis(y));
            Vector rhs(d, g.field());
            for (int i = 0; i < n; ++i) {
                Vector w = g.ad_basis(x, y[i]);
                for (int k = 0; k < d; ++k)
                    if (!w[k].is_zero()) rhs.add_scaled(w[k], g.bracket_basis(replace_at(y, i, k)));
            }
            if (lhs != rhs) {
                rep.fail("x=" + tuple_to_string(x) + " y=" + tuple_to_string(y),
                         "lhs = " + format_vector(lhs) + ", rhs = " + format_vector(rhs));
                if (rep.full()) return rep;
            }
        }
    }
    return rep;
}

inline void require_nlie(const NLieAlgebra& g, const char* who) {
    Report r = check_filippov(g);
    if (!r.ok())
        throw NotAnNLieAlgebra(std::string(who) + " needs a Filippov-valid algebra; " +
                               r.witness());
}

// Leibniz rule of the circle product on basis fundamental objects:
// X o (Y o Z) = (X o Y) o Z + Y o (X o Z).
inline Report check_leibniz_fundamental(const NLieAlgebra& g) {
    require_nlie(g, "check_leibniz_fundamental");
    Report rep("leibniz-fundamental");
    const int d = g.dim(), n = g.arity();
    auto keys = increasing_tuples(d, n - 1);
    for (const Tuple& xk : keys) {
        auto x = FundamentalObject::basis(d, g.field(), xk);
        for (const Tuple& yk : keys) {
            auto y = FundamentalObject::basis(d, g.field(), yk);
            FundamentalObject xy = circle_product(g, x, y);
            for (const Tuple& zk : keys) {
                auto z = FundamentalObject::basis(d, g.field(), zk);
                FundamentalObject lhs = circle_product(g, x, circle_product(g, y, z));
                FundamentalObject rhs = circle_product(g, xy, z);
                rhs += circle_product(g, y, circle_product(g, x, z));
                if (!(lhs == rhs)) {
                    rep.fail("X=" + tuple_to_string(xk) + " Y=" + tuple_to_string(yk) +
                                 " Z=" + tuple_to_string(zk),
                             "lhs = " + format_fundamental(lhs) +
                                 ", rhs = " + format_fundamental(rhs));
                    if (rep.full()) return rep;
                }
            }
        }
    }
    return rep;
}

// ad-form of the Filippov identity:
// X o (Y o z) - Y o (X o z) = (X o Y) o z  in g.
inline Report check_fi3(const NLieAlgebra& g) {
    Report rep("fi3");
    const int d = g.dim(), n = g.arity();
    auto keys = increasing_tuples(d, n - 1);
    for (const Tuple& xk : keys) {
        auto x = FundamentalObject::basis(d, g.field(), xk);
        for (const Tuple& yk : keys) {
            auto y = FundamentalObject::basis(d, g.field(), yk);
            FundamentalObject xy = circle_product(g, x, y);
            for (int z = 0; z < d; ++z) {
                Vector ez = Vector::basis(d, z, g.field());
                Vector lhs = g.ad_basis_vec(xk, g.ad_basis(yk, z)) -
                             g.ad_basis_vec(yk, g.ad_basis(xk, z));
                Vector rhs = ad_apply(g, xy, ez);
                if (lhs != rhs) {
                    rep.fail("X=" + tuple_to_string(xk) + " Y=" + tuple_to_string(yk) +
                                 " z=e" + std::to_string(z + 1),
                             "lhs = " + format_vector(lhs) + ", rhs = " + format_vector(rhs));
                    if (rep.full()) return rep;
                }
            }
        }
    }
    return rep;
}

// D[x_1,...,x_n] = sum_i [x_1,...,Dx_i,...,x_n] on basis tuples.
inline Report is_derivation(const NLieAlgebra& g, const LinearMap& D) {
    if (D.rows() != g.dim() || D.cols() != g.dim())
        throw DimensionMismatch("derivation candidate must be dim x dim");
    if (D.field() != g.field()) throw FieldMismatch();
    Report rep("derivation");
    for (const Tuple& t : increasing_tuples(g.dim(), g.arity())) {
        Vector lhs = D.apply(g.bracket_basis(t));
        Vector rhs(g.dim(), g.field());
        for (std::size_t i = 0; i < t.size(); ++i) {
            Vector di = D.column(t[i]);
            for (int k = 0; k < g.dim(); ++k)
                if (!di[k].is_zero()) rhs.add_scaled(di[k], g.bracket_basis(replace_at(t, i, k)));
        }
        if (lhs != rhs) {
            rep.fail("x=" + tuple_to_string(t),
                     "lhs = " + format_vector(lhs) + ", rhs = " + format_vector(rhs));
            if (rep.full()) return rep;
        }
    }
    return rep;
}

// Solves the (linear) derivation identity exactly; returns a kernel basis,
// each unknown matrix flattened row-major.
inline std::vector<LinearMap> derivation_space(const NLieAlgebra& g) {
    const int d = g.dim(), n = g.arity();
    auto tuples = increasing_tuples(d, n);
    Matrix sys(static_cast<int>(tuples.size()) * d, d * d, g.field());
    int row = 0;
    for (const Tuple& t : tuples) {
        Vector c = g.bracket_basis(t);
        for (int r = 0; r < d; ++r, ++row) {
            // + coefficient of M[r][k] from D applied to the bracket value
            for (int k = 0; k < d; ++k)
                if (!c[k].is_zero()) sys.at(row, r * d + k) += c[k];
            // - coefficient of M[k][t_i] from the bracket with D inside slot i
            for (std::size_t i = 0; i < t.size(); ++i)
                for (int k = 0; k < d; ++k) {
                    Vector b = g.bracket_basis(replace_at(t, i, k));
                    if (!b[r].is_zero()) sys.at(row, k * d + t[i]) -= b[r];
                }
        }
    }
    std::vector<LinearMap> basis;
    for (const Vector& v : nullspace_basis(sys)) {
        LinearMap m(d, d, g.field());
        for (int r = 0; r < d; ++r)
            for (int c2 = 0; c2 < d; ++c2) m.at(r, c2) = v[r * d + c2];
        basis.push_back(std::move(m));
    }
    return basis;
}

// F[x_1,...,x_n]_src = [F x_1, ..., F x_n]_dst on basis tuples of src.
inline Report is_homomorphism(const NLieAlgebra& src, const NLieAlgebra& dst,
                              const LinearMap& F) {
    if (src.arity() != dst.arity()) throw ArityMismatch("homomorphism between arities");
    if (F.cols() != src.dim() || F.rows() != dst.dim())
        throw DimensionMismatch("homomorphism shape");
    if (src.field() != dst.field() || F.field() != src.field()) throw FieldMismatch();
    Report rep("homomorphism");
    for (const Tuple& t : increasing_tuples(src.dim(), src.arity())) {
        Vector lhs = F.apply(src.bracket_basis(t));
        std::vector<Vector> imgs;
        imgs.reserve(t.size());
        for (int i : t) imgs.push_back(F.column(i));
        Vector rhs = dst.bracket(imgs);
        if (lhs != rhs) {
            rep.fail("x=" + tuple_to_string(t),
                     "lhs = " + format_vector(lhs) + ", rhs = " + format_vector(rhs));
            if (rep.full()) return rep;
        }
    }
    return rep;
}

} // namespace nlie
