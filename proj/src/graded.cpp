#include "k3seq/graded.hpp"

#include <numeric>
#include <stdexcept>

namespace k3seq::graded {

using fibers::FamilyParams;

const WeightSystem& WeightSystem::a_system() {
    static const WeightSystem ws{{"a0", "a2", "a4", "a6", "a8", "a10", "a14"},
                                 {0, 2, 4, 6, 8, 10, 14}};
    return ws;
}

const WeightSystem& WeightSystem::u_system() {
    static const WeightSystem ws{{"u2", "u4", "u6", "u8", "u10", "u14"},
                                 {2, 4, 6, 8, 10, 14}};
    return ws;
}

const WeightSystem& WeightSystem::t_system() {
    static const WeightSystem ws{{"t4", "t6", "t10", "t12", "t18"},
                                 {4, 6, 10, 12, 18}};
    return ws;
}

const WeightSystem& WeightSystem::by_name(const std::string& s) {
    if (s == "a") return a_system();
    if (s == "u") return u_system();
    if (s == "t") return t_system();
    throw std::invalid_argument("unknown weight system: " + s);
}

int WeightSystem::total_weight() const {
    return std::accumulate(weights.begin(), weights.end(), 0);
}

FamilyParams scale_action(const FamilyParams& a, const Rat& l) {
    if (l.is_zero()) throw std::invalid_argument("scale_action: zero scale");
    FamilyParams out;
    for (size_t i = 0; i < a.a.size(); ++i)
        out.a[i] = a.a[i] * l.pow(FamilyParams::weights[i]);
    return out;
}

std::array<Rat, 6> canonical_u(const FamilyParams& a) {
    if (a.a0().is_zero())
        throw std::domain_error("canonical_u requires a0 != 0 (use canonical_t)");
    return {a.a2() / a.a0(), a.a4(),          a.a6(),
            a.a0() * a.a8(), a.a0() * a.a10(), a.a0() * a.a0() * a.a14()};
}

std::array<Rat, 5> canonical_t(const FamilyParams& a) {
    if (!a.a0().is_zero() || a.a2().is_zero())
        throw std::domain_error("canonical_t requires a0 = 0 and a2 != 0");
    return {a.a4(), a.a6(), a.a2() * a.a8(), a.a2() * a.a10(),
            a.a2() * a.a2() * a.a14()};
}

FamilyParams params_from_u(const std::array<Rat, 6>& u) {
    FamilyParams p;
    p.a = {Rat(1), u[0], u[1], u[2], u[3], u[4], u[5]};
    return p;
}

Rat humbert(const FamilyParams& a) {
    Rat first = a.a10() * a.a2() + a.a4().pow(3) / Rat(27) - a.a6() * a.a6() / Rat(4);
    Rat second = a.a4() * a.a6() + Rat(6) * a.a2() * a.a8();
    return first * first + Rat(1, 27) * a.a4() * second * second;
}

const MPoly& humbert_mpoly() {
    static const MPoly poly = [] {
        auto vars = WeightSystem::a_system().names;
        auto v = [&](int i) { return MPoly::variable(vars, i); };
        // indices: a0=0 a2=1 a4=2 a6=3 a8=4 a10=5 a14=6
        MPoly first = v(5) * v(1) + v(2) * v(2) * v(2) * Rat(1, 27) -
                      v(3) * v(3) * Rat(1, 4);
        MPoly second = v(2) * v(3) + v(1) * v(4) * Rat(6);
        return first * first + v(2) * second * second * Rat(1, 27);
    }();
    return poly;
}

std::optional<long> weighted_homogeneous_weight(const MPoly& p,
                                                const std::vector<int>& weights) {
    if (int(weights.size()) != p.nvars())
        throw std::invalid_argument("weighted_homogeneous_weight: arity mismatch");
    std::optional<long> w;
    for (const auto& [e, c] : p.terms()) {
        long s = 0;
        for (size_t i = 0; i < e.size(); ++i) s += long(e[i]) * weights[i];
        if (!w) w = s;
        else if (*w != s) return std::nullopt;
    }
    if (!w) return 0;  // zero polynomial
    return w;
}

long hilbert_count(const WeightSystem& ws, int k) {
    if (k < 0) throw std::invalid_argument("hilbert_count: negative weight");
    for (int w : ws.weights)
        if (w <= 0) throw std::invalid_argument("hilbert_count: nonpositive weight");
    // coefficient of t^k in prod 1/(1 - t^w)
    std::vector<long> coeff(k + 1, 0);
    coeff[0] = 1;
    for (int w : ws.weights)
        for (int i = w; i <= k; ++i) coeff[i] += coeff[i - w];
    return coeff[k];
}

const std::vector<ReflectionGroupRecord>& reflection_table() {
    static const std::vector<ReflectionGroupRecord> table = {
        {34, 6, {6, 12, 18, 24, 30, 42}, 3, {2, 4, 6, 8, 10, 14}, 126, 42},
        {33, 5, {4, 6, 10, 12, 18}, 1, {4, 6, 10, 12, 18}, 45, 45},
        {31, 4, {8, 12, 20, 24}, 2, {4, 6, 10, 12}, 60, 30},
        {23, 3, {2, 6, 10}, 1, {2, 6, 10}, 15, 15},
    };
    return table;
}

CheckGroup modular_weight_table_check() {
    CheckGroup g;
    for (const auto& row : reflection_table()) {
        std::string id = "ST" + std::to_string(row.shephard_todd_number);
        g.require(id + "-rank-matches", int(row.degrees.size()) == row.rank &&
                                            row.modular_weights.size() == row.degrees.size());
        bool scaled = true;
        for (size_t i = 0; i < row.degrees.size(); ++i)
            scaled = scaled && row.degrees[i] == row.kappa * row.modular_weights[i];
        g.require(id + "-degrees-are-kappa-weights", scaled);
    }
    // three times the family weights give the ST34 degrees
    const auto& u = WeightSystem::u_system().weights;
    const auto& d34 = reflection_table()[0].degrees;
    bool triple = u.size() == d34.size();
    for (size_t i = 0; triple && i < u.size(); ++i) triple = 3 * u[i] == d34[i];
    g.require("three-times-weights-are-ST34-degrees", triple);
    return g;
}

CheckGroup weight98_check() {
    CheckGroup g;
    g.require("98-is-14-plus-84", 98 == 14 + 84);
    g.require("sum-of-u-weights-is-44", WeightSystem::u_system().total_weight() == 44);
    // adjunction count for the 7-variable quadric: 7 - 2 = 5
    g.require("quadric-adjunction-weight-5", 7 - 2 == 5);
    return g;
}

CheckGroup weight49_check() {
    CheckGroup g;
    g.require("49-is-7-plus-42", 49 == 7 + 42);
    g.require("twice-49-is-98", 2 * 49 == 98);
    // square roots pair with the even-weight data: 2*7 = 14 and 2*42 = 84
    g.require("square-of-weight-7-has-weight-14", 2 * 7 == 14);
    g.require("square-of-weight-42-has-weight-84", 2 * 42 == 84);
    return g;
}

CheckGroup reflection_count_check() {
    CheckGroup g;
    for (const auto& row : reflection_table()) {
        std::string id = "ST" + std::to_string(row.shephard_todd_number);
        g.require(id + "-reflections-are-kappa-times-disc-weight",
                  row.order2_reflections == row.kappa * row.discriminant_weight,
                  std::to_string(row.order2_reflections) + " = " +
                      std::to_string(row.kappa) + " * " +
                      std::to_string(row.discriminant_weight));
    }
    return g;
}

CheckGroup ring_generator_check() {
    CheckGroup g;
    const auto& u = WeightSystem::u_system();
    g.require("one-generator-of-weight-2", hilbert_count(u, 2) == 1);
    g.require("odd-weights-empty", hilbert_count(u, 1) == 0 && hilbert_count(u, 7) == 0);
    g.require("weight-8-monomials", hilbert_count(u, 8) == 5);
    g.require("weight-0-constants", hilbert_count(u, 0) == 1);
    // counts are nondecreasing along even-weight progressions (multiply by u2)
    bool monotone = true;
    for (int k = 0; k + 2 <= 60; k += 2)
        monotone = monotone && hilbert_count(u, k + 2) >= hilbert_count(u, k);
    g.require("counts-nondecreasing-in-even-weight", monotone);
    return g;
}

}  // namespace k3seq::graded
