#include <doctest.h>

#include "k3seq/k3cat.hpp"

using namespace k3seq;
using namespace k3seq::k3;

TEST_CASE("labeling reconstruction") {
    auto survivors = e8_labeling_survivors();
    REQUIRE(survivors.size() == 4);
    std::vector<std::pair<int, int>> expected = {
        {1, 2}, {2, 3}, {3, 4}, {3, 8}, {4, 5}, {5, 6}, {6, 7}};
    CHECK(derive_e8_labeling().edges() == expected);
    for (const auto& lab : survivors) {
        // each survivor is a valid E8 diagram: 7 edges, one degree-3 node
        auto nl = lab.neighbor_lists();
        int deg3 = 0, edges = 0;
        for (int i = 1; i <= 8; ++i) {
            edges += int(nl[i].size());
            if (nl[i].size() == 3) ++deg3;
            CHECK(nl[i].size() <= 3);
        }
        CHECK(edges == 14);
        CHECK(deg3 == 1);
    }
}

TEST_CASE("ambient lattice invariants") {
    const Catalog& cat = Catalog::standard();
    CHECK(cat.lk3().rank() == 22);
    CHECK(cat.lk3().det() == -1);
    CHECK(lattices::is_even(cat.lk3()));
    CHECK(lattices::signature_of(cat.lk3()) == lattices::Signature{3, 19, 0});
}

TEST_CASE("catalog entries") {
    const Catalog& cat = Catalog::standard();
    CHECK(cat.entry("A3").gram.select({2, 3}, {2, 3}) ==
          IMat{{Int(2), Int(1)}, {Int(1), Int(-2)}});
    CHECK(cat.entry("B0").gram.select({4, 5, 6}, {4, 5, 6}) ==
          IMat{{Int(-2), Int(0), Int(1)}, {Int(0), Int(-2), Int(1)}, {Int(1), Int(1), Int(-4)}});
    CHECK(cat.entry("M").rank() == 15);
    CHECK(cat.entry("M").det() == 6);
    CHECK(cat.entry("LK3").rank() == 22);
    CHECK_THROWS_AS(cat.entry("Z9"), std::invalid_argument);
    for (const auto& name : Catalog::entry_names())
        CHECK(lattices::is_even(cat.entry(name)));
}

TEST_CASE("determinant equals the discriminant-group order") {
    const Catalog& cat = Catalog::standard();
    for (const auto& name : Catalog::entry_names()) {
        lattices::Lattice l = cat.entry(name);
        INFO(name);
        CHECK(abs(l.det()) == lattices::disc_group(l).order());
    }
}

TEST_CASE("primitive spans pair determinants with their complements") {
    const Catalog& cat = Catalog::standard();
    std::vector<std::pair<std::string, IMat>> spans = {
        {"u2", cat.u2_span()},        {"b1", cat.b1_span()},
        {"b2", cat.b2_span()},        {"b1p", cat.b1p_span()},
        {"transcendental", cat.transcendental_span()}, {"ns", cat.ns_embedding().basis}};
    for (const auto& [name, basis] : spans) {
        INFO(name);
        lattices::SpanInAmbient span{cat.lk3(), basis};
        REQUIRE(lattices::is_primitive(span));
        auto comp = lattices::orth_complement(span);
        CHECK(span.rank() + comp.rank() == 22);
        Int ds = det_bareiss(to_imat(lattices::gram_of_span(span)));
        Int dc = det_bareiss(to_imat(lattices::gram_of_span(comp)));
        CHECK(abs(ds) == abs(dc));
    }
}

TEST_CASE("double-cover vectors expand to the frozen Gram") {
    const Catalog& cat = Catalog::standard();
    QMat g = lattices::gram_of_span(cat.lk3().gram, to_qmat(cat.transcendental_span()));
    CHECK(g == to_qmat(expected_transcendental_gram()));
}

TEST_CASE("verification bundles all pass on the derived labeling") {
    const Catalog& cat = Catalog::standard();
    for (const auto& group :
         {cat.disc_generator_check(), cat.ns_lattice_check(), cat.ns_primitivity_check(),
          cat.ns_complement_check(), cat.u2_embedding_check(), cat.subfamily_span_check(),
          cat.transcendental_lattice_check(), cat.nikulin_chain_check(),
          cat.twist_comparison_check(), cat.catalog_a_check(), cat.catalog_b_check()}) {
        INFO(group.first_failure());
        CHECK(group.ok());
    }
}

TEST_CASE("double-cover conclusions hold for every surviving labeling") {
    for (const auto& lab : e8_labeling_survivors()) {
        Catalog cat(lab);
        auto thm = cat.transcendental_lattice_check();
        INFO(thm.first_failure());
        CHECK(thm.ok());
        auto nik = cat.nikulin_chain_check();
        INFO(nik.first_failure());
        CHECK(nik.ok());
    }
}

TEST_CASE("tampered catalog goes red") {
    Catalog bad = Catalog::standard().with_tampered_a0();
    CHECK(!bad.catalog_a_check().ok());
}
