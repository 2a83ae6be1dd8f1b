#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "nlie/algebra.hpp"
#include "nlie/assoc.hpp"
#include "nlie/error.hpp"
#include "nlie/linalg.hpp"
#include "nlie/scalar.hpp"

namespace nlie::catalog {

// --- n-Lie algebras ---------------------------------------------------------

inline NLieAlgebra abelian(int arity, int dim, Field f = Field::Q) {
    return NLieAlgebra(arity, dim, f);
}

// [e1,e2,e3] = e1; every linear map on it is Nijenhuis.
inline NLieAlgebra dim3_nonabelian(Field f = Field::Q) {
    NLieAlgebra g(3, 3, f);
    g.set_bracket({0, 1, 2}, Vector::basis(3, 0, f));
    return g;
}

// The simple one: [e2,e3,e4]=e1, [e1,e2,e4]=e3, [e1,e3,e4]=e2, [e1,e2,e3]=e4.
inline NLieAlgebra dim4_simple(Field f = Field::Q) {
    NLieAlgebra g(3, 4, f);
    g.set_bracket({1, 2, 3}, Vector::basis(4, 0, f));
    g.set_bracket({0, 1, 3}, Vector::basis(4, 2, f));
    g.set_bracket({0, 2, 3}, Vector::basis(4, 1, f));
    g.set_bracket({0, 1, 2}, Vector::basis(4, 3, f));
    return g;
}

// Same minus the [e1,e2,e3] bracket.
inline NLieAlgebra dim4_nonsimple(Field f = Field::Q) {
    NLieAlgebra g(3, 4, f);
    g.set_bracket({1, 2, 3}, Vector::basis(4, 0, f));
    g.set_bracket({0, 1, 3}, Vector::basis(4, 2, f));
    g.set_bracket({0, 2, 3}, Vector::basis(4, 1, f));
    return g;
}

// 4-dimensional Lie algebra [e1,e2] = e1 with e3, e4 central.
inline NLieAlgebra lie_ex1(Field f = Field::Q) {
    NLieAlgebra g(2, 4, f);
    g.set_bracket({0, 1}, Vector::basis(4, 0, f));
    return g;
}

// --- operator families ------------------------------------------------------

// Matrices below act in the column convention (column i = image of e_i); the
// derivation families are usually written with row i = image of e_i, so these
// are the transposes of that habitual layout.

// Der(dim4_simple): N e1 = a e2 + b e3 + c e4, N e2 = a e1 + d e3 + e e4,
// N e3 = -b e1 + d e2 + f e4, N e4 = c e1 - e e2 + f e3.
inline LinearMap dim4_simple_der(const Scalar& a, const Scalar& b, const Scalar& c,
                                 const Scalar& d, const Scalar& e, const Scalar& f) {
    Field fl = a.field();
    LinearMap m(4, 4, fl);
    m.at(0, 1) = a;  m.at(0, 2) = -b; m.at(0, 3) = c;
    m.at(1, 0) = a;  m.at(1, 2) = d;  m.at(1, 3) = -e;
    m.at(2, 0) = b;  m.at(2, 1) = d;  m.at(2, 3) = f;
    m.at(3, 0) = c;  m.at(3, 1) = e;  m.at(3, 2) = f;
    return m;
}

// Der(dim4_nonsimple): the h-diagonal family.
inline LinearMap dim4_nonsimple_der(const Scalar& h, const Scalar& a, const Scalar& b,
                                    const Scalar& c, const Scalar& d, const Scalar& e,
                                    const Scalar& f) {
    Field fl = h.field();
    LinearMap m(4, 4, fl);
    m.at(0, 0) = h;  m.at(0, 1) = a;  m.at(0, 2) = -b; m.at(0, 3) = d;
    m.at(1, 0) = a;  m.at(1, 1) = h;  m.at(1, 2) = c;  m.at(1, 3) = e;
    m.at(2, 0) = b;  m.at(2, 1) = c;  m.at(2, 2) = h;  m.at(2, 3) = f;
    m.at(3, 3) = -h;
    return m;
}

// The two Rota-Baxter subspaces of Der(dim4_nonsimple).
inline LinearMap t1_member(const Scalar& a, const Scalar& b, const Scalar& c,
                           const Scalar& d, const Scalar& e, const Scalar& f) {
    return dim4_nonsimple_der(Scalar::zero(a.field()), a, b, c, d, e, f);
}

inline LinearMap t2_member(const Scalar& a, const Scalar& b, const Scalar& c,
                           const Scalar& d) {
    Field fl = a.field();
    return dim4_nonsimple_der(a, Scalar::zero(fl), Scalar::zero(fl), Scalar::zero(fl),
                              b, c, d);
}

// --- truncated polynomial algebras ------------------------------------------

// Q[t]/(t^k), basis 1, t, ..., t^{k-1}.
inline CommAssocAlgebra trunc_poly_t(int k, Field f = Field::Q) {
    CommAssocAlgebra a(k, f);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            if (i + j < k) a.set_product(i, j, Vector::basis(k, i + j, f));
    return a;
}

// Q[x1..xv]/(x1^2,...,xv^2), basis = square-free monomials ordered by bitmask.
inline CommAssocAlgebra trunc_poly_squarefree(int vars, Field f = Field::Q) {
    int d = 1 << vars;
    CommAssocAlgebra a(d, f);
    for (int s = 0; s < d; ++s)
        for (int t = s; t < d; ++t)
            if ((s & t) == 0) a.set_product(s, t, Vector::basis(d, s | t, f));
    return a;
}

// d/dt on Q[t]/(t^k).
inline LinearMap ddt(int k, Field f = Field::Q) {
    LinearMap m(k, k, f);
    for (int i = 1; i < k; ++i) m.at(i - 1, i) = Scalar(i, f);
    return m;
}

// t d/dt on Q[t]/(t^k): diagonal degree operator.
inline LinearMap t_ddt(int k, Field f = Field::Q) {
    LinearMap m(k, k, f);
    for (int i = 0; i < k; ++i) m.at(i, i) = Scalar(i, f);
    return m;
}

// d/dx_var on the square-free algebra with `vars` variables.
inline LinearMap partial(int var, int vars, Field f = Field::Q) {
    int d = 1 << vars, bit = 1 << var;
    LinearMap m(d, d, f);
    for (int s = 0; s < d; ++s)
        if (s & bit) m.at(s & ~bit, s) = Scalar::one(f);
    return m;
}

// x_var d/dx_var: diagonal, picks out monomials containing the variable.
inline LinearMap euler(int var, int vars, Field f = Field::Q) {
    int d = 1 << vars, bit = 1 << var;
    LinearMap m(d, d, f);
    for (int s = 0; s < d; ++s)
        if (s & bit) m.at(s, s) = Scalar::one(f);
    return m;
}

// --- seeded random maps ------------------------------------------------------

// mt19937_64 has a standard-pinned stream; the modulo mapping keeps the
// generated matrices bit-identical across platforms.  Entries are p/q with
// |p| <= bound, 1 <= q <= bound (both parts for Q(i)).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    long uniform(long lo, long hi) {
        return static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)) + lo;
    }
    Scalar scalar(Field f, long bound) {
        Rat re(uniform(-bound, bound), uniform(1, bound));
        if (f == Field::Q) return Scalar(re, f);
        return Scalar(re, Rat(uniform(-bound, bound), uniform(1, bound)), f);
    }

private:
    std::mt19937_64 gen_;
};

inline LinearMap random_map(int dim, Field f, long bound, std::uint64_t seed) {
    if (dim <= 0) throw DimensionMismatch("random_map dimension");
    if (bound < 1) throw ShapeMismatch("random_map bound must be >= 1");
    Rng rng(seed);
    LinearMap m(dim, dim, f);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m.at(r, c) = rng.scalar(f, bound);
    return m;
}

inline Matrix random_rect_map(int rows, int cols, Field f, long bound, std::uint64_t seed) {
    Rng rng(seed);
    Matrix m(rows, cols, f);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = rng.scalar(f, bound);
    return m;
}

// --- name dispatch -----------------------------------------------------------

using BuiltinValue = std::variant<NLieAlgebra, LinearMap, CommAssocAlgebra>;

inline std::vector<std::string> builtin_names() {
    return {"abelian(n,d)",
            "dim3_nonabelian",
            "dim4_simple",
            "dim4_nonsimple",
            "dim4_simple_der(a,b,c,d,e,f)",
            "dim4_nonsimple_der(h,a,b,c,d,e,f)",
            "T1(a,b,c,d,e,f)",
            "T2(a,b,c,d)",
            "trunc_poly(t3|t4|x2y2|x2y2z2)",
            "lie_ex1"};
}

namespace detail {

struct ParsedName {
    std::string base;
    std::vector<std::string> args;
};

inline ParsedName split_name(const std::string& name) {
    ParsedName p;
    auto open = name.find('(');
    if (open == std::string::npos) {
        p.base = name;
        return p;
    }
    if (name.back() != ')')
        throw ParseError("unbalanced parentheses in catalog name", name.size() - 1);
    p.base = name.substr(0, open);
    std::string inner = name.substr(open + 1, name.size() - open - 2);
    std::size_t start = 0;
    while (start <= inner.size() && !inner.empty()) {
        auto comma = inner.find(',', start);
        if (comma == std::string::npos) {
            p.args.push_back(inner.substr(start));
            break;
        }
        p.args.push_back(inner.substr(start, comma - start));
        start = comma + 1;
    }
    return p;
}

inline void want_args(const ParsedName& p, std::size_t count) {
    if (p.args.size() != count)
        throw MissingParam(p.base + " takes " + std::to_string(count) + " parameter(s), got " +
                           std::to_string(p.args.size()));
}

inline long int_arg(const ParsedName& p, std::size_t i) {
    Scalar s = parse_scalar(p.args[i], Field::Q);
    if (denominator(s.re()) != 1)
        throw MissingParam(p.base + " parameter " + std::to_string(i + 1) +
                           " must be an integer");
    return static_cast<long>(numerator(s.re()));
}

} // namespace detail

// Resolves a catalog name like "dim4_simple_der(1,0,0,2,0,0)".  Scalars are
// parsed with the usual grammar over the requested field.
inline BuiltinValue builtin(const std::string& name, Field f = Field::Q) {
    auto p = detail::split_name(name);
    auto scalar_arg = [&](std::size_t i) { return parse_scalar(p.args[i], f); };
    if (p.base == "abelian") {
        detail::want_args(p, 2);
        long n = detail::int_arg(p, 0), d = detail::int_arg(p, 1);
        if (n < 2 || d < 0) throw MissingParam("abelian(n,d) needs n >= 2, d >= 0");
        return abelian(static_cast<int>(n), static_cast<int>(d), f);
    }
    if (p.base == "dim3_nonabelian") { detail::want_args(p, 0); return dim3_nonabelian(f); }
    if (p.base == "dim4_simple") { detail::want_args(p, 0); return dim4_simple(f); }
    if (p.base == "dim4_nonsimple") { detail::want_args(p, 0); return dim4_nonsimple(f); }
    if (p.base == "lie_ex1") { detail::want_args(p, 0); return lie_ex1(f); }
    if (p.base == "dim4_simple_der") {
        detail::want_args(p, 6);
        return dim4_simple_der(scalar_arg(0), scalar_arg(1), scalar_arg(2), scalar_arg(3),
                               scalar_arg(4), scalar_arg(5));
    }
    if (p.base == "dim4_nonsimple_der") {
        detail::want_args(p, 7);
        return dim4_nonsimple_der(scalar_arg(0), scalar_arg(1), scalar_arg(2), scalar_arg(3),
                                  scalar_arg(4), scalar_arg(5), scalar_arg(6));
    }
    if (p.base == "T1") {
        detail::want_args(p, 6);
        return t1_member(scalar_arg(0), scalar_arg(1), scalar_arg(2), scalar_arg(3),
                         scalar_arg(4), scalar_arg(5));
    }
    if (p.base == "T2") {
        detail::want_args(p, 4);
        return t2_member(scalar_arg(0), scalar_arg(1), scalar_arg(2), scalar_arg(3));
    }
    if (p.base == "trunc_poly") {
        detail::want_args(p, 1);
        const std::string& spec = p.args[0];
        if (spec == "t3") return trunc_poly_t(3, f);
        if (spec == "t4") return trunc_poly_t(4, f);
        if (spec == "x2y2") return trunc_poly_squarefree(2, f);
        if (spec == "x2y2z2") return trunc_poly_squarefree(3, f);
        throw UnknownName("trunc_poly spec \"" + spec + "\" (want t3, t4, x2y2, x2y2z2)");
    }
    throw UnknownName("no catalog entry named \"" + p.base + "\"");
}

} // namespace nlie::catalog
