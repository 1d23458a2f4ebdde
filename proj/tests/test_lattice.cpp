#include <doctest.h>

#include <random>

#include "k3seq/lattice.hpp"

using namespace k3seq;
using namespace k3seq::lattices;

TEST_CASE("named lattices have the standard determinants") {
    CHECK(make_named("U", Int(1)).gram == IMat{{Int(0), Int(1)}, {Int(1), Int(0)}});
    CHECK(make_named("A2", Int(-1)).gram == IMat{{Int(-2), Int(1)}, {Int(1), Int(-2)}});
    CHECK(make_named("A1", Int(-2)).gram == IMat{{Int(-4)}});
    for (int n = 1; n <= 5; ++n)
        CHECK(make_named("A" + std::to_string(n), Int(1)).det() == n + 1);
    CHECK(make_named("E6", Int(1)).det() == 3);
    CHECK(make_named("E7", Int(1)).det() == 2);
    CHECK(make_named("E8", Int(1)).det() == 1);
    CHECK_THROWS_AS(make_named("F4", Int(1)), std::invalid_argument);
    CHECK_THROWS_AS(make_named("U", Int(0)), std::invalid_argument);
}

TEST_CASE("direct sums and determinants") {
    Lattice u = make_named("U", Int(1));
    Lattice a0 = direct_sum({u, u, make_named("A2", Int(-1)), make_named("A1", Int(-1))});
    CHECK(a0.rank() == 7);
    CHECK(a0.det() == -6);
    Lattice lk3 = direct_sum({u, u, u, make_named("E8", Int(-1)), make_named("E8", Int(-1))});
    CHECK(lk3.rank() == 22);
    CHECK(lk3.det() == -1);
}

TEST_CASE("exact signatures") {
    CHECK(signature_of(make_named("U", Int(1))) == Signature{1, 1, 0});
    Lattice u = make_named("U", Int(1));
    Lattice a0 = direct_sum({u, u, make_named("A2", Int(-1)), make_named("A1", Int(-1))});
    CHECK(signature_of(a0) == Signature{2, 5, 0});
    CHECK(signature_of(make_named("E8", Int(-1))) == Signature{0, 8, 0});
    // degenerate block contributes a zero
    Lattice z(IMat{{Int(0), Int(0)}, {Int(0), Int(2)}});
    CHECK(signature_of(z) == Signature{1, 0, 1});
}

TEST_CASE("parity") {
    CHECK(is_even(make_named("A2", Int(-1))));
    CHECK(!is_even(Lattice(IMat{{Int(1)}})));
}

TEST_CASE("discriminant groups") {
    Lattice a2m = make_named("A2", Int(-1));
    DiscGroup dg = disc_group(a2m);
    REQUIRE(dg.invariant_factors == std::vector<Int>{Int(3)});
    // q(generator) = -2/3 modulo 2Z, canonically 4/3
    CHECK(dg.qvalues[0] == Rat(4, 3));

    CHECK(disc_group(make_named("U", Int(1))).order() == 1);
    CHECK(disc_group(make_named("U", Int(2))).order() == 4);
    CHECK_THROWS_AS(disc_group(Lattice(IMat{{Int(0)}})), std::domain_error);
    CHECK(elementary_divisors({Int(6)}) == std::vector<Int>{Int(2), Int(3)});
    CHECK(elementary_divisors({Int(2), Int(12)}) ==
          std::vector<Int>{Int(2), Int(3), Int(4)});
    CHECK(elementary_divisors({}).empty());

    // generators returned do generate
    Lattice b0block(IMat{{Int(-2), Int(0), Int(1)},
                         {Int(0), Int(-2), Int(1)},
                         {Int(1), Int(1), Int(-4)}});
    DiscGroup db = disc_group(b0block);
    std::vector<Int> orders;
    for (int i = 0; i < db.generators.rows(); ++i) {
        QMat row(1, 3);
        for (int j = 0; j < 3; ++j) row(0, j) = db.generators(i, j);
        orders.push_back(disc_element_order(row));
    }
    CHECK(verify_disc_generators(b0block, db.generators, orders));
}

TEST_CASE("orthogonal complements") {
    Lattice uu = direct_sum({make_named("U", Int(1)), make_named("U", Int(1))});
    IMat first_u(2, 4);
    first_u(0, 0) = 1;
    first_u(1, 1) = 1;
    SpanInAmbient span{uu, first_u};
    SpanInAmbient comp = orth_complement(span);
    CHECK(comp.rank() == 2);
    CHECK(to_imat(gram_of_span(comp)) == make_named("U", Int(1)).gram);

    // complement of the E7 subdiagram inside E8(-1) is a (-2) vector
    Lattice e8m = make_named("E8", Int(-1));
    IMat sub(7, 8);
    int row = 0;
    for (int node : {1, 2, 3, 4, 5, 6, 8}) sub(row++, node - 1) = 1;
    SpanInAmbient e7span{e8m, sub};
    SpanInAmbient c = orth_complement(e7span);
    CHECK(c.rank() == 1);
    CHECK(to_imat(gram_of_span(c)) == IMat{{Int(-2)}});
}

TEST_CASE("primitivity") {
    Lattice u = make_named("U", Int(1));
    IMat doubled(1, 2);
    doubled(0, 0) = 2;
    CHECK(!is_primitive({u, doubled}));
    IMat unit(1, 2);
    unit(0, 0) = 1;
    CHECK(is_primitive({u, unit}));
}

TEST_CASE("span grams") {
    Lattice u = make_named("U", Int(1));
    QMat e1(1, 2);
    e1(0, 0) = Rat(1);
    CHECK(gram_of_span(u.gram, e1) == QMat{{Rat(0)}});
}

TEST_CASE("subspace intersection") {
    // gens = Z^2, subspace = the line y = x
    QMat gens = QMat::identity(2);
    QMat line(1, 2);
    line(0, 0) = Rat(1);
    line(0, 1) = Rat(1);
    QMat basis = intersect_with_subspace(gens, line);
    REQUIRE(basis.rows() == 1);
    CHECK(basis(0, 0) == Rat(1));
    CHECK(basis(0, 1) == Rat(1));

    // gens = {e1/2, e2}, subspace = the x-axis: e1/2 is retained
    QMat gens2(2, 2);
    gens2(0, 0) = Rat(1, 2);
    gens2(1, 1) = Rat(1);
    QMat axis(1, 2);
    axis(0, 0) = Rat(1);
    QMat basis2 = intersect_with_subspace(gens2, axis);
    REQUIRE(basis2.rows() == 1);
    CHECK(basis2(0, 0) == Rat(1, 2));
    CHECK(basis2(0, 1) == Rat(0));
}

TEST_CASE("genus fingerprints") {
    Lattice u = make_named("U", Int(1));
    CHECK(genus_invariants(u) == genus_invariants(u));
    Lattice a1 = make_named("A1", Int(1));
    CHECK(!(genus_invariants(u) == genus_invariants(direct_sum({a1, a1.twist(Int(-1))}))));

    // invariance under a specific unimodular change of basis
    Lattice a2m = make_named("A2", Int(-1));
    IMat p{{Int(1), Int(1)}, {Int(0), Int(1)}};
    QMat conj = to_qmat(p).transpose() * to_qmat(a2m.gram) * to_qmat(p);
    CHECK(genus_invariants(Lattice(to_imat(conj))) == genus_invariants(a2m));
}
