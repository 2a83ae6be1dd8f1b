#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nlie/catalog.hpp"
#include "nlie/cochain.hpp"

using namespace nlie;

namespace {

NLieAlgebra corrupted_dim4_simple() {
    NLieAlgebra g = catalog::dim4_simple();
    g.set_bracket({0, 1, 2}, Vector::basis(4, 0, Field::Q));
    return g;
}

} // namespace

TEST_CASE("adjoint representation satisfies both axioms") {
    for (const NLieAlgebra& g :
         {catalog::dim3_nonabelian(), catalog::dim4_simple(), catalog::dim4_nonsimple(),
          catalog::lie_ex1(), catalog::abelian(3, 4),
          catalog::dim4_simple(Field::QI)}) {
        Representation rep = adjoint_rep(g);
        Report r = check_representation(rep);
        INFO(r.to_string());
        CHECK(r.ok());
    }
}

TEST_CASE("adjoint table of a corrupted algebra fails the axioms") {
    Representation rep = adjoint_rep(corrupted_dim4_simple());
    Report r = check_representation(rep);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.witness().empty());
}

TEST_CASE("hand-built non-representation is rejected") {
    Representation rep(catalog::dim4_simple(), 2);
    Matrix e12(2, 2, Field::Q), e21(2, 2, Field::Q);
    e12.at(0, 1) = Scalar(1);
    e21.at(1, 0) = Scalar(1);
    rep.set_rho({0, 1}, e12);
    rep.set_rho({2, 3}, e21);
    // [rho(e1^e2), rho(e3^e4)] = E11 - E22 but (e1^e2) o (e3^e4) = 0
    Report r = check_representation(rep);
    CHECK_FALSE(r.ok());
    CHECK_THROWS_AS(semidirect_product(rep), InvalidRepresentation);
}

TEST_CASE("semidirect product with the adjoint action is an n-Lie algebra") {
    NLieAlgebra g = catalog::dim3_nonabelian();
    NLieAlgebra big = semidirect_product(adjoint_rep(g));
    REQUIRE(big.dim() == 6);
    REQUIRE(big.arity() == 3);
    CHECK(check_filippov(big).ok());

    // g-part embeds: [e1,e2,e3] = e1
    CHECK(big.bracket_basis({0, 1, 2}) == Vector::basis(6, 0, Field::Q));
    // one module slot, placed last: [e1,e2,v3] = rho(e1^e2)(e3) = e1 -> v1
    CHECK(big.bracket_basis({0, 1, 5}) == Vector::basis(6, 3, Field::Q));
    // two module slots vanish
    CHECK(big.bracket_basis({0, 4, 5}).is_zero());

    NLieAlgebra big4 = semidirect_product(adjoint_rep(catalog::dim4_simple()));
    REQUIRE(big4.dim() == 8);
    CHECK(check_filippov(big4).ok());
}

TEST_CASE("coboundary of the identity map on the 3-dimensional algebra") {
    NLieAlgebra g = catalog::dim3_nonabelian();
    Representation rep = adjoint_rep(g);
    Cochain c = cochain_from_map(g, Matrix::identity(3, Field::Q));
    Cochain dc = coboundary(rep, c);
    REQUIRE(dc.degree() == 2);

    // literal expansion at (e1^e2, e3):
    //   -c([e1,e2,e3]) + ad(e1,e2)c(e3) + ad(e2,e3)c(e1) - ad(e1,e3)c(e2)
    Vector expected = -g.ad_basis({0, 1}, 2);
    expected += g.ad_basis({0, 1}, 2);
    expected += g.ad_basis({1, 2}, 0);
    expected -= g.ad_basis({0, 2}, 1);
    Vector two_e1(3, Field::Q);
    two_e1[0] = Scalar(2);
    REQUIRE(expected == two_e1);
    CHECK(dc.eval_basis({{0, 1}}, 2) == two_e1);
    // slot entries arrive unsorted -> sign flips
    CHECK(dc.eval_basis({{1, 0}}, 2) == -two_e1);
}

TEST_CASE("coboundary of random 1-cochains matches the literal expansion") {
    std::mt19937_64 rng(20260814);
    for (const NLieAlgebra& g : {catalog::dim3_nonabelian(), catalog::dim4_simple()}) {
        Representation rep = adjoint_rep(g);
        const int d = g.dim();
        for (int trial = 0; trial < 10; ++trial) {
            Matrix m(d, d, Field::Q);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    m.at(r, c) = Scalar(static_cast<long>(rng() % 11) - 5);
            Cochain dc = coboundary(rep, cochain_from_map(g, m));
            for (const Tuple& x : increasing_tuples(d, 2)) {
                for (int z = 0; z < d; ++z) {
                    Vector lit = -m.apply(g.ad_basis(x, z));
                    lit += [&] {
                        Vector s(d, Field::Q);
                        Vector cz = m.column(z);
                        for (int k = 0; k < d; ++k)
                            if (!cz[k].is_zero()) s.add_scaled(cz[k], g.ad_basis(x, k));
                        return s;
                    }();
                    // + ad(x2,z)c(x1) - ad(x1,z)c(x2)
                    Vector cx1 = m.column(x[0]), cx2 = m.column(x[1]);
                    for (int k = 0; k < d; ++k) {
                        if (!cx1[k].is_zero())
                            lit.add_scaled(cx1[k], g.ad_basis_vec(
                                                       {x[1], z}, Vector::basis(d, k, Field::Q)));
                        if (!cx2[k].is_zero())
                            lit.add_scaled(-cx2[k], g.ad_basis_vec(
                                                        {x[0], z}, Vector::basis(d, k, Field::Q)));
                    }
                    INFO("x=" << tuple_to_string(x) << " z=e" << z + 1);
                    CHECK(dc.eval_basis({x}, z) == lit);
                }
            }
        }
    }
}

TEST_CASE("d squared vanishes for degrees 1 and 2") {
    for (const NLieAlgebra& g :
         {catalog::dim3_nonabelian(), catalog::lie_ex1(), catalog::dim4_simple(),
          catalog::dim4_nonsimple(), catalog::abelian(3, 3)}) {
        Representation rep = adjoint_rep(g);
        for (int p : {1, 2}) {
            Report r = check_d_squared(rep, p);
            INFO("dim=" << g.dim() << " arity=" << g.arity() << " p=" << p << "\n"
                        << r.to_string());
            CHECK(r.ok());
        }
    }
}

TEST_CASE("nary table round-trips through its cochain view") {
    NLieAlgebra g = catalog::dim4_simple();
    Cochain c = nary_to_cochain(g);
    REQUIRE(c.degree() == 2);
    CHECK(c.eval_basis({{1, 2}}, 3) == g.bracket_basis({1, 2, 3}));
    CHECK(c.eval_basis({{2, 1}}, 3) == -g.bracket_basis({1, 2, 3}));
    CHECK(c.eval_basis({{1, 2}}, 1).is_zero()); // repeated argument
}

TEST_CASE("nr bracket is symmetric and additive") {
    std::mt19937_64 rng(7);
    NLieAlgebra g = catalog::dim4_simple();
    auto random_table = [&] {
        BracketCandidate t(3, 4, Field::Q);
        for (const Tuple& key : increasing_tuples(4, 3)) {
            Vector v(4, Field::Q);
            for (int k = 0; k < 4; ++k) v[k] = Scalar(static_cast<long>(rng() % 7) - 3);
            t.set_bracket(key, v);
        }
        return t;
    };
    for (int trial = 0; trial < 5; ++trial) {
        Cochain a = nary_to_cochain(random_table());
        Cochain b = nary_to_cochain(random_table());
        Cochain c = nary_to_cochain(random_table());
        CHECK(nr_bracket(g, a, b) == nr_bracket(g, b, a));
        CHECK(nr_bracket(g, a, b + c) == nr_bracket(g, a, b) + nr_bracket(g, a, c));
        CHECK(nr_bracket(g, a, b * Scalar(3)) == nr_bracket(g, a, b) * Scalar(3));
    }
}

TEST_CASE("nr bracket of a bracket with itself measures the defect") {
    // FI3 defect: X o (Y o z) - Y o (X o z) - (X o Y) o z; the self-bracket of
    // the structure tensor equals twice that, so it vanishes exactly on
    // genuine n-Lie structures.
    auto defect = [](const NLieAlgebra& g, const Tuple& x, const Tuple& y, int z) {
        const int d = g.dim();
        Vector out(d, Field::Q);
        Vector yz = g.ad_basis(y, z), xz = g.ad_basis(x, z);
        for (int k = 0; k < d; ++k) {
            if (!yz[k].is_zero()) out.add_scaled(yz[k], g.ad_basis(x, k));
            if (!xz[k].is_zero()) out.add_scaled(-xz[k], g.ad_basis(y, k));
        }
        FundamentalObject xy =
            circle_product(g, FundamentalObject::basis(d, g.field(), x),
                           FundamentalObject::basis(d, g.field(), y));
        for (const auto& [key, coeff] : xy.terms())
            out.add_scaled(-coeff, g.bracket_basis([&] {
                Tuple t = key;
                t.push_back(z);
                return t;
            }()));
        return out;
    };

    for (const NLieAlgebra& g :
         {catalog::dim3_nonabelian(), catalog::dim4_simple(), catalog::dim4_nonsimple(),
          catalog::lie_ex1()}) {
        Cochain c = nary_to_cochain(g);
        CHECK(nr_bracket(g, c, c).is_zero());
    }

    NLieAlgebra bad = corrupted_dim4_simple();
    Cochain c = nary_to_cochain(bad);
    Cochain self = nr_bracket(bad, c, c);
    CHECK_FALSE(self.is_zero());
    for (const Tuple& x : increasing_tuples(4, 2))
        for (const Tuple& y : increasing_tuples(4, 2))
            for (int z = 0; z < 4; ++z) {
                Vector expect = defect(bad, x, y, z) * Scalar(2);
                INFO("x=" << tuple_to_string(x) << " y=" << tuple_to_string(y) << " z=e"
                          << z + 1);
                CHECK(self.eval_basis({x, y}, z) == expect);
            }
}

TEST_CASE("cochain shape errors") {
    NLieAlgebra g = catalog::dim3_nonabelian();
    Representation rep = adjoint_rep(g);
    CHECK_THROWS_AS(Cochain(0, g, 3), DegreeMismatch);
    Cochain c(2, g, 3);
    CHECK_THROWS_AS(c.add(CochainKey{{{0, 1, 2}}, 0}, Vector(3, Field::Q)),
                    ShapeMismatch);
    CHECK_THROWS_AS(c.add(CochainKey{{{1, 0}}, 0}, Vector(3, Field::Q)), ShapeMismatch);
    CHECK_THROWS_AS(c.add(CochainKey{{{0, 1}}, 5}, Vector(3, Field::Q)), IndexOutOfRange);
    CHECK_THROWS_AS(c.add(CochainKey{{{0, 1}}, 0}, Vector(2, Field::Q)),
                    DimensionMismatch);
    CHECK_THROWS_AS(c.eval_basis({}, 0), DegreeMismatch);
    Cochain wrong(2, catalog::dim4_simple(), 4);
    CHECK_THROWS_AS(coboundary(rep, wrong), DimensionMismatch);
    CHECK_THROWS_AS(nr_bracket(g, cochain_from_map(g, Matrix::identity(3, Field::Q)),
                               nary_to_cochain(g)),
                    DegreeMismatch);
}
