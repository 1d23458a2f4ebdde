#include <doctest.h>

#include "k3seq/graded.hpp"

using namespace k3seq;
using namespace k3seq::graded;
using k3seq::fibers::FamilyParams;

namespace {
FamilyParams params(std::initializer_list<long> v) {
    FamilyParams p;
    int i = 0;
    for (long c : v) p.a[i++] = Rat(c);
    return p;
}
}  // namespace

TEST_CASE("scaling action") {
    FamilyParams ones = params({1, 1, 1, 1, 1, 1, 1});
    FamilyParams doubled = scale_action(ones, Rat(2));
    CHECK(doubled.a[0] == Rat(1));
    CHECK(doubled.a[1] == Rat(4));
    CHECK(doubled.a[2] == Rat(16));
    CHECK(doubled.a[3] == Rat(64));
    CHECK(doubled.a[4] == Rat(256));
    CHECK(doubled.a[5] == Rat(1024));
    CHECK(doubled.a[6] == Rat(16384));
    CHECK(scale_action(ones, Rat(1)) == ones);
    CHECK(scale_action(scale_action(ones, Rat(2)), Rat(3)) == scale_action(ones, Rat(6)));
    CHECK_THROWS_AS(scale_action(ones, Rat(0)), std::invalid_argument);
}

TEST_CASE("chart normalizations") {
    auto u = canonical_u(params({2, 4, 6, 8, 10, 12, 14}));
    std::array<Rat, 6> uwant = {Rat(2), Rat(6), Rat(8), Rat(20), Rat(24), Rat(56)};
    CHECK(u == uwant);
    auto t = canonical_t(params({0, 2, 3, 5, 7, 11, 13}));
    std::array<Rat, 5> twant = {Rat(3), Rat(5), Rat(14), Rat(22), Rat(52)};
    CHECK(t == twant);
    CHECK_THROWS_AS(canonical_u(params({0, 1, 1, 1, 1, 1, 1})), std::domain_error);
    CHECK_THROWS_AS(canonical_t(params({1, 1, 1, 1, 1, 1, 1})), std::domain_error);
    CHECK(params_from_u(u).a0() == Rat(1));
}

TEST_CASE("humbert polynomial") {
    FamilyParams ex;
    ex.a[1] = Rat(1);
    ex.a[5] = Rat(2);
    CHECK(humbert(ex) == Rat(4));
    CHECK(humbert(FamilyParams{}).is_zero());
    auto w = weighted_homogeneous_weight(humbert_mpoly(),
                                         WeightSystem::a_system().weights);
    REQUIRE(w.has_value());
    CHECK(*w == 24);
    FamilyParams p = params({3, -1, 2, 5, -4, 7, 9});
    std::vector<Rat> pt(p.a.begin(), p.a.end());
    CHECK(humbert_mpoly().eval(pt) == humbert(p));
    CHECK(humbert(scale_action(p, Rat(5, 7))) == Rat(5, 7).pow(24) * humbert(p));
}

TEST_CASE("hilbert counts with an enumeration oracle") {
    const auto& u = WeightSystem::u_system();
    CHECK(hilbert_count(u, 0) == 1);
    CHECK(hilbert_count(u, 1) == 0);
    CHECK(hilbert_count(u, 2) == 1);
    CHECK(hilbert_count(u, 8) == 5);  // u2^4, u2^2 u4, u4^2, u2 u6, u8
    // brute-force enumeration over exponent boxes
    for (int k = 0; k <= 22; ++k) {
        long count = 0;
        const auto& w = u.weights;
        for (int e0 = 0; e0 * w[0] <= k; ++e0)
            for (int e1 = 0; e0 * w[0] + e1 * w[1] <= k; ++e1)
                for (int e2 = 0; e0 * w[0] + e1 * w[1] + e2 * w[2] <= k; ++e2)
                    for (int e3 = 0; e0 * w[0] + e1 * w[1] + e2 * w[2] + e3 * w[3] <= k; ++e3)
                        for (int e4 = 0;
                             e0 * w[0] + e1 * w[1] + e2 * w[2] + e3 * w[3] + e4 * w[4] <= k;
                             ++e4)
                            for (int e5 = 0; e0 * w[0] + e1 * w[1] + e2 * w[2] +
                                                 e3 * w[3] + e4 * w[4] + e5 * w[5] <=
                                             k;
                                 ++e5)
                                if (e0 * w[0] + e1 * w[1] + e2 * w[2] + e3 * w[3] +
                                        e4 * w[4] + e5 * w[5] ==
                                    k)
                                    ++count;
        CHECK(hilbert_count(u, k) == count);
    }
    CHECK_THROWS_AS(hilbert_count(u, -1), std::invalid_argument);
}

TEST_CASE("reflection table consistency") {
    CHECK(modular_weight_table_check().ok());
    CHECK(weight98_check().ok());
    CHECK(weight49_check().ok());
    CHECK(reflection_count_check().ok());
    CHECK(ring_generator_check().ok());
    const auto& t = reflection_table();
    REQUIRE(t.size() == 4);
    CHECK(t[0].degrees == std::vector<int>{6, 12, 18, 24, 30, 42});
    CHECK(t[0].order2_reflections == 126);
}
