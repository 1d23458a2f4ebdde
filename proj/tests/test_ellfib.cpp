#include <doctest.h>

#include "k3seq/ellfib.hpp"
#include "k3seq/graded.hpp"

using namespace k3seq;
using namespace k3seq::fibers;

namespace {
FamilyParams params(std::initializer_list<long> v) {
    FamilyParams p;
    int i = 0;
    for (long c : v) p.a[i++] = Rat(c);
    return p;
}
const FamilyParams kOnes = params({1, 1, 1, 1, 1, 1, 1});
}  // namespace

TEST_CASE("model construction") {
    auto m = build_model(params({1, 0, 0, 0, 0, 0, 1}));
    CHECK(m.g2 == UPoly::monomial(Rat(1), 5));
    CHECK(m.g3 == UPoly::monomial(Rat(1), 4));
    CHECK(m.delta() == UPoly::monomial(Rat(4), 15) + UPoly::monomial(Rat(27), 8));
    CHECK(m.depressed_g2() == UPoly::monomial(Rat(1), 2));
    CHECK_THROWS_AS(build_model(params({0, 0, 0, 0, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("kodaira table") {
    using K = KodairaType;
    CHECK(kodaira_type(0, 0, 1) == K{K::In, 1});
    CHECK(kodaira_type(0, 0, 3).euler() == 3);
    CHECK(kodaira_type(1, 1, 2) == K{K::II, 0});
    CHECK(kodaira_type(1, 2, 3) == K{K::III, 0});
    CHECK(kodaira_type(2, 2, 4) == K{K::IV, 0});
    CHECK(kodaira_type(2, 3, 6) == K{K::InStar, 0});
    CHECK(kodaira_type(2, 3, 6).euler() == 6);
    CHECK(kodaira_type(3, 3, 6) == K{K::InStar, 0});
    CHECK(kodaira_type(2, 3, 9) == K{K::InStar, 3});
    CHECK(kodaira_type(3, 4, 8) == K{K::IVStar, 0});
    CHECK(kodaira_type(4, 4, 8) == K{K::IVStar, 0});
    CHECK(kodaira_type(3, 5, 9) == K{K::IIIStar, 0});
    CHECK(kodaira_type(3, 6, 9) == K{K::IIIStar, 0});
    CHECK(kodaira_type(4, 5, 10) == K{K::IIStar, 0});
    CHECK(kodaira_type(-1, 1, 2) == K{K::II, 0});  // g2 identically zero
    CHECK_THROWS_AS(kodaira_type(4, 6, 12), NotK3Error);
    CHECK_THROWS_AS(kodaira_type(-1, -1, 24), NotK3Error);
    CHECK(kodaira_type(2, 3, 7).label() == "I1*");
    CHECK(kodaira_type(3, 5, 9).label() == "III*");
}

TEST_CASE("single-place classification") {
    auto m = build_model(kOnes);
    auto at0 = classify_place(m, "0");
    CHECK(at0.ord_g2 == 3);
    CHECK(at0.ord_g3 == 4);
    CHECK(at0.ord_delta == 8);
    CHECK(at0.type == KodairaType{KodairaType::IVStar, 0});
    auto atinf = classify_place(m, "inf");
    CHECK(atinf.ord_g2 == 3);
    CHECK(atinf.ord_g3 == 5);
    CHECK(atinf.ord_delta == 9);
    CHECK(atinf.type == KodairaType{KodairaType::IIIStar, 0});
    // a0 = 0 turns the fiber at infinity into II*
    auto m0 = build_model(degenerate_sample(SampleKind::a0_zero));
    auto inf0 = classify_place(m0, "inf");
    CHECK(inf0.ord_g2 == 4);
    CHECK(inf0.ord_g3 == 5);
    CHECK(inf0.ord_delta == 10);
    CHECK(inf0.type == KodairaType{KodairaType::IIStar, 0});
    // finite place through a known I2 point
    auto mI2 = build_model(degenerate_sample(SampleKind::type_I2));
    UPoly xm1({Rat(-1), Rat(1)});
    auto fin = classify_place(mI2, xm1);
    CHECK(fin.type == KodairaType{KodairaType::In, 2});
    CHECK(fin.count == 1);
    CHECK_THROWS_AS(classify_place(m, "elsewhere"), std::invalid_argument);
    CHECK_THROWS_AS(classify_place(m, UPoly::monomial(Rat(1), 1)), std::invalid_argument);
}

TEST_CASE("generic configuration") {
    auto cfg = classify_all(kOnes);
    CHECK(cfg.total_euler() == 24);
    auto counts = cfg.type_counts();
    CHECK(counts[{KodairaType::IIIStar, 0}] == 1);
    CHECK(counts[{KodairaType::IVStar, 0}] == 1);
    CHECK(counts[{KodairaType::In, 1}] == 7);
    CHECK(cfg.summary() == "7 I1 + III* + IV*");
}

TEST_CASE("degeneration samples match their loci") {
    auto tII = degenerate_sample(SampleKind::type_II);
    CHECK(resultant_r(tII).is_zero());
    auto cfg = classify_all(tII);
    CHECK(cfg.total_euler() == 24);
    CHECK(cfg.type_counts()[{KodairaType::II, 0}] == 1);
    CHECK(cfg.type_counts()[{KodairaType::In, 1}] == 5);

    auto tI2 = degenerate_sample(SampleKind::type_I2);
    CHECK(!resultant_r(tI2).is_zero());
    CHECK(disc84(tI2).is_zero());
    auto cfg2 = classify_all(tI2);
    CHECK(cfg2.type_counts()[{KodairaType::In, 2}] == 1);
    CHECK(cfg2.total_euler() == 24);

    auto a0z = degenerate_sample(SampleKind::a0_zero);
    auto cfg3 = classify_all(a0z);
    CHECK(cfg3.type_counts()[{KodairaType::IIStar, 0}] == 1);
    CHECK(cfg3.type_counts()[{KodairaType::IVStar, 0}] == 1);
    CHECK(cfg3.type_counts()[{KodairaType::In, 1}] == 6);

    auto a14z = degenerate_sample(SampleKind::a14_zero);
    auto cfg4 = classify_all(a14z);
    CHECK(cfg4.type_counts()[{KodairaType::IIIStar, 0}] == 2);
    CHECK(cfg4.type_counts()[{KodairaType::In, 1}] == 6);
}

TEST_CASE("membership of the K3 locus") {
    CHECK(is_k3(kOnes));
    CHECK(!is_k3(params({0, 0, 1, 0, 0, 0, 0})));
    for (auto kind : {SampleKind::type_II, SampleKind::type_I2, SampleKind::a0_zero,
                      SampleKind::a14_zero})
        CHECK(is_k3(degenerate_sample(kind)));
    // a8 = a10 = a14 = 0 is non-minimal at the origin fiber
    CHECK(!is_k3(params({1, 1, 1, 1, 0, 0, 0})));
}

TEST_CASE("resultant of the depressed pair") {
    CHECK(resultant_r(params({1, 0, 0, 0, 0, 0, 1})) == Rat(1));
    CHECK_THROWS_AS(resultant_r(params({0, 1, 0, 0, 0, 0, 0})), std::domain_error);
    // weight 28 under the scaling action
    Rat l(3, 2);
    CHECK(resultant_r(graded::scale_action(kOnes, l)) ==
          l.pow(28) * resultant_r(kOnes));
}

TEST_CASE("disc84 fixture and contract") {
    CHECK(disc84(kOnes) == disc84_reference());
    Rat l(2);
    CHECK(disc84(graded::scale_action(kOnes, l)) == l.pow(84) * disc84(kOnes));
    CHECK_THROWS_AS(disc84(degenerate_sample(SampleKind::type_II)), std::domain_error);
}

TEST_CASE("quotient surface read-off") {
    auto [g2p, g3p] = quotient_surface_model(params({1, 0, 0, 0, 0, 0, 0}));
    CHECK(g2p == UPoly::monomial(Rat(1), 3));
    CHECK(g3p.is_zero());
    auto [g2q, g3q] = quotient_surface_model(params({0, 1, 0, 0, 0, 0, 0}));
    CHECK(g2q.is_zero());
    CHECK(g3q == UPoly::monomial(Rat(1), 4));
}

TEST_CASE("sample kinds parse") {
    CHECK(sample_kind_from_string("type-I2") == SampleKind::type_I2);
    CHECK_THROWS_AS(sample_kind_from_string("bogus"), std::invalid_argument);
}
