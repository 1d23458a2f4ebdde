#include <doctest.h>

#include <random>

#include "k3seq/matrix.hpp"
#include "k3seq/upoly.hpp"

using namespace k3seq;

namespace {

UPoly from_ints(std::initializer_list<long> lowest_first) {
    std::vector<Rat> c;
    for (long v : lowest_first) c.emplace_back(v);
    return UPoly(std::move(c));
}

// independent resultant oracle: Sylvester matrix (q rows first) expanded by
// cofactors, sharing nothing with the production Bareiss path
Rat resultant_oracle(const UPoly& p, const UPoly& q) {
    int m = p.degree(), n = q.degree();
    QMat s(m + n, m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s(i, i + j) = q.coeff(n - j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s(m + i, i + j) = p.coeff(m - j);
    std::function<Rat(const QMat&)> det_cof = [&](const QMat& a) -> Rat {
        int k = a.rows();
        if (k == 0) return Rat(1);
        if (k == 1) return a(0, 0);
        Rat total(0);
        for (int j = 0; j < k; ++j) {
            if (a(0, j).is_zero()) continue;
            std::vector<int> rows, cols;
            for (int i = 1; i < k; ++i) rows.push_back(i);
            for (int c = 0; c < k; ++c)
                if (c != j) cols.push_back(c);
            total += (j % 2 ? Rat(-1) : Rat(1)) * a(0, j) * det_cof(a.select(rows, cols));
        }
        return total;
    };
    return det_cof(s);
}

UPoly random_poly(std::mt19937_64& gen, int max_deg, int bound) {
    std::uniform_int_distribution<int> cdist(-bound, bound);
    std::uniform_int_distribution<int> ddist(0, max_deg);
    int d = ddist(gen);
    std::vector<Rat> c(d + 1);
    for (auto& v : c) v = Rat(cdist(gen));
    return UPoly(std::move(c));
}

}  // namespace

TEST_CASE("basic polynomial arithmetic") {
    UPoly p = from_ints({-1, 0, 1});  // x^2 - 1
    UPoly q = from_ints({-1, 1});     // x - 1
    CHECK(p.degree() == 2);
    CHECK((p * q).degree() == 3);
    CHECK(p.eval(Rat(3)) == Rat(8));
    CHECK(p.derivative() == from_ints({0, 2}));
    auto [quot, rem] = UPoly::divrem(p, q);
    CHECK(quot == from_ints({1, 1}));
    CHECK(rem.is_zero());
    CHECK(UPoly().degree() == -1);
    CHECK(from_ints({0, 0, 0}).is_zero());
}

TEST_CASE("gcd on the pinned examples") {
    UPoly x2m1 = from_ints({-1, 0, 1});
    UPoly xm1 = from_ints({-1, 1});
    CHECK(upoly_gcd(x2m1, xm1) == xm1);

    UPoly p = from_ints({3, 0, 6});  // gcd(p, 0) = monic p
    CHECK(upoly_gcd(p, UPoly()) == from_ints({1, 0, 2}) * Rat(1, 2));

    // 4x^7 + 27x^6 + 54x^3 + 27 is squarefree
    UPoly big({Rat(27), Rat(0), Rat(0), Rat(54), Rat(0), Rat(0), Rat(27), Rat(4)});
    CHECK(upoly_gcd(big, big.derivative()) == UPoly::constant(Rat(1)));
    CHECK(upoly_gcd(UPoly(), UPoly()).is_zero());
}

TEST_CASE("resultant convention and examples") {
    // res(x - a, x - b) = b - a
    CHECK(resultant(from_ints({-1, 1}), from_ints({-2, 1})) == Rat(1));
    CHECK(resultant(from_ints({1, 0, 1}), from_ints({1, 0, 1})) == Rat(0));
    CHECK(resultant(from_ints({-2, 0, 1}), from_ints({0, -1, 0, 1})) == Rat(-2));
    CHECK_THROWS_AS(resultant(UPoly(), from_ints({1})), std::invalid_argument);
}

TEST_CASE("resultant agrees with the Sylvester cofactor oracle") {
    std::mt19937_64 gen(17);
    int done = 0;
    while (done < 25) {
        UPoly p = random_poly(gen, 4, 5), q = random_poly(gen, 4, 5);
        if (p.degree() < 1 || q.degree() < 1) continue;
        CHECK(resultant(p, q) == resultant_oracle(p, q));
        ++done;
    }
}

TEST_CASE("discriminant on the pinned examples") {
    // x^2 + bx + c has discriminant b^2 - 4c; here b = 0, c = -1
    CHECK(discriminant(from_ints({-1, 0, 1})) == Rat(4));
    // x^3 + Ax + B has discriminant -4A^3 - 27B^2; zero at A = -3, B = 2
    CHECK(discriminant(from_ints({2, -3, 0, 1})) == Rat(0));
    UPoly repeated = from_ints({-1, 1}) * from_ints({-1, 1}) * from_ints({-2, 1});
    CHECK(discriminant(repeated) == Rat(0));
    CHECK_THROWS_AS(discriminant(UPoly::constant(Rat(3))), std::invalid_argument);
}

TEST_CASE("discriminant of a product of coprime polynomials") {
    std::mt19937_64 gen(19);
    int done = 0;
    while (done < 15) {
        UPoly p = random_poly(gen, 3, 4), q = random_poly(gen, 3, 4);
        if (p.degree() < 1 || q.degree() < 1) continue;
        if (upoly_gcd(p, q).degree() != 0) continue;
        Rat lhs = discriminant(p * q);
        Rat r = resultant(p, q);
        CHECK(lhs == discriminant(p) * discriminant(q) * r * r);
        ++done;
    }
}

TEST_CASE("squarefree decomposition") {
    UPoly xm1 = from_ints({-1, 1}), xp3 = from_ints({3, 1});
    auto dec = squarefree_decomposition(xm1 * xm1 * xp3);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0] == std::pair{xp3, 1});
    CHECK(dec[1] == std::pair{xm1, 2});

    UPoly sf = from_ints({2, 3, 1});  // (x+1)(x+2), lc 1
    auto d2 = squarefree_decomposition(sf * Rat(5));
    REQUIRE(d2.size() == 1);
    CHECK(d2[0] == std::pair{sf, 1});

    auto d3 = squarefree_decomposition(UPoly::monomial(Rat(1), 5));
    REQUIRE(d3.size() == 1);
    CHECK(d3[0] == std::pair{from_ints({0, 1}), 5});
}

TEST_CASE("squarefree decomposition reconstructs the input") {
    std::mt19937_64 gen(23);
    int done = 0;
    while (done < 20) {
        UPoly p = random_poly(gen, 3, 3) * random_poly(gen, 2, 3);
        if (p.degree() < 1) continue;
        UPoly prod = UPoly::constant(p.leading());
        for (const auto& [f, m] : squarefree_decomposition(p)) prod = prod * f.pow(m);
        CHECK(prod == p);
        ++done;
    }
}

TEST_CASE("resultant vanishes exactly on common factors") {
    std::mt19937_64 gen(29);
    int done = 0;
    while (done < 40) {
        UPoly p = random_poly(gen, 6, 9), q = random_poly(gen, 6, 9);
        if (p.is_zero() || q.is_zero()) continue;
        if (p.degree() == 0 && q.degree() == 0) continue;
        bool zero_res = resultant(p, q).is_zero();
        bool common = upoly_gcd(p, q).degree() >= 1;
        CHECK(zero_res == common);
        ++done;
    }
}

TEST_CASE("multiplicity splitting") {
    UPoly xm1 = from_ints({-1, 1}), xm2 = from_ints({-2, 1}), xm3 = from_ints({-3, 1});
    UPoly f = xm1 * xm2 * xm3;               // squarefree
    UPoly g = xm1 * xm2 * xm2 * from_ints({7, 1});
    auto parts = split_by_multiplicity(f, g);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == std::pair{xm3, 0});
    CHECK(parts[1] == std::pair{xm1, 1});
    CHECK(parts[2] == std::pair{xm2, 2});
    auto inf = split_by_multiplicity(f, UPoly());
    REQUIRE(inf.size() == 1);
    CHECK(inf[0].second == -1);
}
