#include "k3seq/checks.hpp"

#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

#include "k3seq/ellfib.hpp"
#include "k3seq/graded.hpp"
#include "k3seq/isometry.hpp"
#include "k3seq/k3cat.hpp"
#include "k3seq/lattice.hpp"

namespace k3seq::checks {

namespace {

using fibers::FamilyParams;
using k3::Catalog;
using lattices::Lattice;

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    long pick(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }
    Rat nonzero_int(long bound) {
        long v = 0;
        while (v == 0) v = pick(-bound, bound);
        return Rat(v);
    }
    Rat nonzero_rat(long bound) {
        return nonzero_int(bound) / Rat(pick(1, bound));
    }
    FamilyParams params(long bound) {
        FamilyParams p;
        for (auto& c : p.a) c = Rat(pick(-bound, bound));
        return p;
    }
};

// generic member: a0, a14 nonzero and off the two degeneration divisors
FamilyParams generic_params(Rng& rng) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        FamilyParams p = rng.params(9);
        if (p.a0().is_zero() || p.a14().is_zero()) continue;
        Rat r;
        try {
            r = fibers::resultant_r(p);
        } catch (const std::domain_error&) {
            continue;
        }
        if (r.is_zero()) continue;
        if (fibers::disc84(p).is_zero()) continue;
        return p;
    }
    throw std::runtime_error("generic_params: rejection sampling failed");
}

std::map<fibers::KodairaType, int> counts_of(const FamilyParams& p) {
    return fibers::classify_all(p).type_counts();
}

std::map<fibers::KodairaType, int> expected_counts(
    std::initializer_list<std::pair<fibers::KodairaType, int>> init) {
    return {init.begin(), init.end()};
}

const fibers::KodairaType kI1{fibers::KodairaType::In, 1};
const fibers::KodairaType kI2{fibers::KodairaType::In, 2};
const fibers::KodairaType kII{fibers::KodairaType::II, 0};
const fibers::KodairaType kIIStar{fibers::KodairaType::IIStar, 0};
const fibers::KodairaType kIIIStar{fibers::KodairaType::IIIStar, 0};
const fibers::KodairaType kIVStar{fibers::KodairaType::IVStar, 0};

// ---------------------------------------------------------------------
// individual checks

CheckGroup check_e8_labeling(const Options&) {
    CheckGroup g;
    auto survivors = k3::e8_labeling_survivors();
    g.require("survivor-count-4", survivors.size() == 4,
              std::to_string(survivors.size()) + " survivors");
    std::vector<std::pair<int, int>> expected = {
        {1, 2}, {2, 3}, {3, 4}, {3, 8}, {4, 5}, {5, 6}, {6, 7}};
    g.require("least-labeling-edges", !survivors.empty() &&
                                          k3::derive_e8_labeling().edges() == expected);
    // every survivor produces the same rank-7 Gram and the same genus data
    bool same_gram = true, same_genus = true;
    std::optional<lattices::GenusFingerprint> fp;
    for (const auto& lab : survivors) {
        Catalog cat(lab);
        QMat gq = lattices::gram_of_span(cat.lk3().gram, to_qmat(cat.transcendental_span()));
        if (gq != to_qmat(k3::expected_transcendental_gram())) same_gram = false;
        auto f = lattices::genus_invariants(Lattice(to_imat(gq)));
        if (!fp) fp = f;
        else if (!(f == *fp)) same_genus = false;
    }
    g.require("all-survivors-same-span-gram", same_gram);
    g.require("all-survivors-same-genus", same_genus);
    return g;
}

CheckGroup check_weierstrass_model(const Options&) {
    CheckGroup g;
    auto p = [](std::initializer_list<long> v) {
        FamilyParams out;
        int i = 0;
        for (long c : v) out.a[i++] = Rat(c);
        return out;
    };
    auto m1 = fibers::build_model(p({1, 0, 0, 0, 0, 0, 1}));
    g.require("g2-read-off", m1.g2 == UPoly::monomial(Rat(1), 5));
    g.require("g3-read-off", m1.g3 == UPoly::monomial(Rat(1), 4));
    g.require("delta-expansion",
              m1.delta() == UPoly::monomial(Rat(4), 15) + UPoly::monomial(Rat(27), 8));
    auto m2 = fibers::build_model(p({1, 1, 0, 0, 0, 0, 1}));
    g.require("g3-two-terms",
              m2.g3 == UPoly::monomial(Rat(1), 7) + UPoly::monomial(Rat(1), 4));
    g.require("reference-point-is-k3", fibers::is_k3(p({1, 1, 1, 1, 1, 1, 1})));
    g.require("rational-surface-rejected", !fibers::is_k3(p({0, 0, 1, 0, 0, 0, 0})));
    return g;
}

CheckGroup check_fibers_generic(const Options& opt) {
    CheckGroup g;
    Rng rng(opt.seed);
    auto expected = expected_counts({{kIIIStar, 1}, {kIVStar, 1}, {kI1, 7}});
    bool all_match = true, euler_ok = true;
    for (int t = 0; t < opt.trials; ++t) {
        FamilyParams p = generic_params(rng);
        auto cfg = fibers::classify_all(p);
        if (cfg.type_counts() != expected) {
            all_match = false;
            g.require("sample-" + std::to_string(t), false,
                      p.str() + " -> " + cfg.summary());
        }
        if (cfg.total_euler() != 24) euler_ok = false;
    }
    g.require("generic-configuration-all-samples", all_match);
    g.require("euler-sum-24", euler_ok);
    return g;
}

CheckGroup check_degeneration_loci(const Options&) {
    CheckGroup g;
    using fibers::SampleKind;
    struct Case {
        SampleKind kind;
        const char* name;
        std::map<fibers::KodairaType, int> expected;
    };
    std::vector<Case> cases = {
        {SampleKind::type_II, "type-II",
         expected_counts({{kII, 1}, {kIIIStar, 1}, {kIVStar, 1}, {kI1, 5}})},
        {SampleKind::type_I2, "type-I2",
         expected_counts({{kI2, 1}, {kIIIStar, 1}, {kIVStar, 1}, {kI1, 5}})},
        {SampleKind::a0_zero, "a0-zero",
         expected_counts({{kIIStar, 1}, {kIVStar, 1}, {kI1, 6}})},
        {SampleKind::a14_zero, "a14-zero",
         expected_counts({{kIIIStar, 2}, {kI1, 6}})},
    };
    for (const auto& c : cases) {
        FamilyParams p = fibers::degenerate_sample(c.kind);
        auto cfg = fibers::classify_all(p);
        g.require(std::string(c.name) + "-configuration",
                  cfg.type_counts() == c.expected, cfg.summary());
        g.require(std::string(c.name) + "-euler-24", cfg.total_euler() == 24);
        g.require(std::string(c.name) + "-still-k3", fibers::is_k3(p));
    }
    return g;
}

CheckGroup check_resultant_locus(const Options& opt) {
    CheckGroup g;
    Rng rng(opt.seed + 1);
    FamilyParams tII = fibers::degenerate_sample(fibers::SampleKind::type_II);
    g.require("sample-on-resultant-locus", fibers::resultant_r(tII).is_zero());
    auto cfg = fibers::classify_all(tII);
    g.require("type-II-fiber-appears", cfg.type_counts().count(kII) == 1);
    // frozen value: depressed polynomials x^2 and x^3 + 1
    FamilyParams simple;
    simple.a = {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)};
    g.require("resultant-frozen-example", fibers::resultant_r(simple) == Rat(1));
    // r never vanishes off the locus (spot check) and no II fiber appears
    bool clean = true;
    for (int t = 0; t < 5; ++t) {
        FamilyParams p = generic_params(rng);
        if (fibers::resultant_r(p).is_zero() ||
            fibers::classify_all(p).type_counts().count(kII))
            clean = false;
    }
    g.require("generic-points-off-locus", clean);
    // measured weight of r under the scaling action is 28
    bool weight28 = true;
    for (int t = 0; t < 5; ++t) {
        FamilyParams p = generic_params(rng);
        Rat l = rng.nonzero_rat(7);
        Rat lhs = fibers::resultant_r(graded::scale_action(p, l));
        weight28 = weight28 && lhs == l.pow(28) * fibers::resultant_r(p);
    }
    g.require("weighted-homogeneous-28", weight28);
    return g;
}

CheckGroup check_disc84(const Options& opt) {
    CheckGroup g;
    Rng rng(opt.seed + 2);
    FamilyParams ones;
    for (auto& c : ones.a) c = Rat(1);
    g.require("reference-fixture", fibers::disc84(ones) == fibers::disc84_reference(),
              fibers::disc84(ones).str());
    bool weight84 = true;
    for (int t = 0; t < opt.trials; ++t) {
        FamilyParams p = generic_params(rng);
        Rat l = rng.nonzero_rat(7);
        weight84 = weight84 &&
                   fibers::disc84(graded::scale_action(p, l)) ==
                       l.pow(84) * fibers::disc84(p);
    }
    g.require("weighted-homogeneous-84", weight84);
    // disc(Delta/x^8) / (r^3 d84) is one constant across samples
    std::optional<Rat> constant;
    bool consistent = true;
    for (int t = 0; t < opt.trials; ++t) {
        FamilyParams p = generic_params(rng);
        auto model = fibers::build_model(p);
        Rat disc = discriminant(model.delta().shift_down(8));
        Rat r = fibers::resultant_r(p);
        Rat k = disc / (r.pow(3) * fibers::disc84(p));
        if (!constant) constant = k;
        else consistent = consistent && k == *constant;
    }
    g.require("factorization-constant-stable", consistent,
              constant ? constant->str() : "-");
    FamilyParams i2 = fibers::degenerate_sample(fibers::SampleKind::type_I2);
    g.require("vanishes-at-I2-sample", fibers::disc84(i2).is_zero());
    bool threw = false;
    try {
        fibers::disc84(fibers::degenerate_sample(fibers::SampleKind::type_II));
    } catch (const std::domain_error&) {
        threw = true;
    }
    g.require("undefined-on-resultant-locus", threw);
    return g;
}

CheckGroup check_scaling_invariance(const Options& opt) {
    CheckGroup g;
    Rng rng(opt.seed + 3);
    bool same_types = true, group_law = true;
    for (int t = 0; t < opt.trials; ++t) {
        FamilyParams p = generic_params(rng);
        Rat l = rng.nonzero_rat(5), m = rng.nonzero_rat(5);
        if (counts_of(p) != counts_of(graded::scale_action(p, l))) same_types = false;
        FamilyParams lhs = graded::scale_action(graded::scale_action(p, l), m);
        FamilyParams rhs = graded::scale_action(p, l * m);
        if (!(lhs == rhs)) group_law = false;
    }
    g.require("fiber-types-scale-invariant", same_types);
    g.require("action-composes", group_law);
    FamilyParams p = generic_params(rng);
    g.require("identity-acts-trivially", graded::scale_action(p, Rat(1)) == p);
    return g;
}

CheckGroup check_canonical_u(const Options& opt) {
    CheckGroup g;
    FamilyParams ex;
    ex.a = {Rat(2), Rat(4), Rat(6), Rat(8), Rat(10), Rat(12), Rat(14)};
    std::array<Rat, 6> want = {Rat(2), Rat(6), Rat(8), Rat(20), Rat(24), Rat(56)};
    g.require("worked-example", graded::canonical_u(ex) == want);
    FamilyParams normalized;
    normalized.a = {Rat(1), Rat(5), Rat(-3), Rat(7), Rat(2), Rat(9), Rat(11)};
    std::array<Rat, 6> id = {Rat(5), Rat(-3), Rat(7), Rat(2), Rat(9), Rat(11)};
    g.require("normalized-input-fixed", graded::canonical_u(normalized) == id);
    Rng rng(opt.seed + 4);
    const int uw[6] = {2, 4, 6, 8, 10, 14};
    bool equivariant = true, consistent = true;
    for (int t = 0; t < opt.trials; ++t) {
        FamilyParams p = generic_params(rng);
        Rat l = rng.nonzero_rat(5);
        auto u = graded::canonical_u(p);
        auto v = graded::canonical_u(graded::scale_action(p, l));
        for (int k = 0; k < 6; ++k)
            equivariant = equivariant && v[k] == l.pow(uw[k]) * u[k];
        // the normalization is a change of Weierstrass coordinates
        if (counts_of(p) != counts_of(graded::params_from_u(u))) consistent = false;
    }
    g.require("equivariance", equivariant);
    g.require("classification-agrees-with-chart", consistent);
    bool threw = false;
    try {
        FamilyParams bad;
        bad.a[1] = Rat(1);
        graded::canonical_u(bad);
    } catch (const std::domain_error&) {
        threw = true;
    }
    g.require("rejects-a0-zero", threw);
    return g;
}

CheckGroup check_canonical_t(const Options& opt) {
    CheckGroup g;
    FamilyParams ex;
    ex.a = {Rat(0), Rat(2), Rat(3), Rat(5), Rat(7), Rat(11), Rat(13)};
    std::array<Rat, 5> want = {Rat(3), Rat(5), Rat(14), Rat(22), Rat(52)};
    g.require("worked-example", graded::canonical_t(ex) == want);
    FamilyParams unit;
    unit.a = {Rat(0), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)};
    std::array<Rat, 5> ones = {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)};
    g.require("unit-example", graded::canonical_t(unit) == ones);
    Rng rng(opt.seed + 5);
    const int tw[5] = {4, 6, 10, 12, 18};
    bool equivariant = true;
    for (int t = 0; t < opt.trials; ++t) {
        FamilyParams p = rng.params(9);
        p.a[0] = Rat(0);
        if (p.a2().is_zero()) p.a[1] = Rat(1);
        Rat l = rng.nonzero_rat(5);
        auto u = graded::canonical_t(p);
        auto v = graded::canonical_t(graded::scale_action(p, l));
        for (int k = 0; k < 5; ++k)
            equivariant = equivariant && v[k] == l.pow(tw[k]) * u[k];
    }
    g.require("equivariance", equivariant);
    bool threw = false;
    try {
        FamilyParams bad;
        bad.a[0] = Rat(1);
        graded::canonical_t(bad);
    } catch (const std::domain_error&) {
        threw = true;
    }
    g.require("rejects-a0-nonzero", threw);
    return g;
}

CheckGroup check_quotient_surface(const Options&) {
    CheckGroup g;
    FamilyParams e1;
    e1.a[0] = Rat(1);
    auto [g2a, g3a] = fibers::quotient_surface_model(e1);
    g.require("pure-a0-gives-x3", g2a == UPoly::monomial(Rat(1), 3) && g3a.is_zero());
    FamilyParams e2;
    e2.a[1] = Rat(1);
    auto [g2b, g3b] = fibers::quotient_surface_model(e2);
    g.require("pure-a2-gives-x4", g2b.is_zero() && g3b == UPoly::monomial(Rat(1), 4));
    FamilyParams p;
    p.a = {Rat(3), Rat(-1), Rat(4), Rat(1), Rat(-5), Rat(9), Rat(2)};
    auto [g2c, g3c] = fibers::quotient_surface_model(p);
    bool coeffs = g2c.coeff(3) == Rat(3) && g2c.coeff(2) == Rat(4) &&
                  g2c.coeff(1) == Rat(-5) && g2c.coeff(0).is_zero() &&
                  g3c.coeff(4) == Rat(-1) && g3c.coeff(3) == Rat(1) &&
                  g3c.coeff(2) == Rat(9) && g3c.coeff(1) == Rat(2) &&
                  g3c.coeff(0).is_zero();
    g.require("coefficient-transcription", coeffs);
    return g;
}

CheckGroup check_humbert(const Options& opt) {
    CheckGroup g;
    FamilyParams ex;
    ex.a[1] = Rat(1);   // a2
    ex.a[5] = Rat(2);   // a10
    g.require("first-square-example", graded::humbert(ex) == Rat(4));
    FamilyParams zero;
    g.require("vanishes-at-origin", graded::humbert(zero).is_zero());
    auto w = graded::weighted_homogeneous_weight(
        graded::humbert_mpoly(), graded::WeightSystem::a_system().weights);
    g.require("symbolic-weight-24", w.has_value() && *w == 24,
              w ? std::to_string(*w) : "not homogeneous");
    Rng rng(opt.seed + 6);
    bool equivariant = true, agrees = true;
    for (int t = 0; t < opt.trials; ++t) {
        FamilyParams p = rng.params(9);
        Rat l = rng.nonzero_rat(5);
        equivariant = equivariant &&
                      graded::humbert(graded::scale_action(p, l)) ==
                          l.pow(24) * graded::humbert(p);
        std::vector<Rat> pt(p.a.begin(), p.a.end());
        agrees = agrees && graded::humbert_mpoly().eval(pt) == graded::humbert(p);
    }
    g.require("weight-24-equivariance", equivariant);
    g.require("symbolic-matches-pointwise", agrees);
    return g;
}

CheckGroup check_subfamily_tables(const Options&) {
    CheckGroup g;
    const Catalog& cat = Catalog::standard();
    struct Row {
        const char* name;
        int rank;
        Int det;
        lattices::Signature sig;
    };
    std::vector<Row> rows = {
        {"A1", 6, Int(3), {2, 4, 0}},   {"A1p", 6, Int(4), {2, 4, 0}},
        {"A2", 5, Int(-2), {2, 3, 0}},  {"A3", 4, Int(5), {2, 2, 0}},
        {"B1", 6, Int(192), {2, 4, 0}}, {"B1p", 6, Int(64), {2, 4, 0}},
        {"B2", 5, Int(-64), {2, 3, 0}}, {"B3", 4, Int(80), {2, 2, 0}},
    };
    for (const auto& r : rows) {
        Lattice l = cat.entry(r.name);
        g.require(std::string(r.name) + "-rank-det",
                  l.rank() == r.rank && l.det() == r.det,
                  "det " + l.det().get_str());
        g.require(std::string(r.name) + "-signature",
                  lattices::signature_of(l) == r.sig);
    }
    IMat a3_block{{Int(2), Int(1)}, {Int(1), Int(-2)}};
    IMat b3_block{{Int(4), Int(2)}, {Int(2), Int(-4)}};
    Lattice a3 = cat.entry("A3"), b3 = cat.entry("B3");
    bool blocks = a3.gram.select({2, 3}, {2, 3}) == a3_block &&
                  b3.gram.select({2, 3}, {2, 3}) == b3_block;
    g.require("explicit-2x2-blocks", blocks);
    return g;
}

CheckGroup check_genus_invariance(const Options& opt) {
    CheckGroup g;
    Rng rng(opt.seed + 7);
    const Catalog& cat = Catalog::standard();
    bool invariant = true;
    for (const char* name : {"A0", "B0", "A3"}) {
        Lattice l = cat.entry(name);
        auto fp = lattices::genus_invariants(l);
        for (int t = 0; t < 5; ++t) {
            int n = l.rank();
            IMat pmat = IMat::identity(n);
            for (int s = 0; s < 12; ++s) {
                int i = int(rng.pick(0, n - 1)), j = int(rng.pick(0, n - 1));
                if (i == j) continue;
                pmat.add_row(i, j, Int(rng.pick(-2, 2)));
            }
            QMat pq = to_qmat(pmat);
            Lattice conj(to_imat(pq.transpose() * to_qmat(l.gram) * pq));
            if (!(lattices::genus_invariants(conj) == fp)) invariant = false;
        }
    }
    g.require("fingerprint-invariant-under-unimodular-congruence", invariant);
    // twist bookkeeping: disc-group order of L(2) is 2^rank * |det L|
    for (const char* name : {"A1", "A2"}) {
        Lattice root = lattices::make_named(name, Int(1));
        Lattice doubled = root.twist(Int(2));
        Int expect = abs(root.det());
        for (int i = 0; i < root.rank(); ++i) expect *= 2;
        g.require(std::string("twist-order-") + name,
                  lattices::disc_group(doubled).order() == expect);
    }
    return g;
}

const Catalog& catalog_for(const Options& opt) {
    if (!opt.tamper) return Catalog::standard();
    static const Catalog tampered = Catalog::standard().with_tampered_a0();
    return tampered;
}

}  // namespace

const std::vector<Check>& all_checks() {
    static const std::vector<Check> checks = {
        {"e8-labeling", "doublecover.basis-reconstruction",
         [](const Options& o) { return check_e8_labeling(o); }},
        {"catalog-a-lattices", "catalog.a-series",
         [](const Options& o) { return catalog_for(o).catalog_a_check(); }},
        {"catalog-b-lattices", "catalog.b-series",
         [](const Options& o) { return catalog_for(o).catalog_b_check(); }},
        {"disc-generators", "discgroup.a-generators",
         [](const Options& o) { return catalog_for(o).disc_generator_check(); }},
        {"ns-lattice", "ns.lattice-m",
         [](const Options& o) { return catalog_for(o).ns_lattice_check(); }},
        {"ns-primitivity", "ns.primitivity",
         [](const Options& o) { return catalog_for(o).ns_primitivity_check(); }},
        {"ns-complement", "ns.complement-a",
         [](const Options& o) { return catalog_for(o).ns_complement_check(); }},
        {"u2-embedding", "doublecover.u2-embedding",
         [](const Options& o) { return catalog_for(o).u2_embedding_check(); }},
        {"subfamily-spans", "doublecover.subfamily-spans",
         [](const Options& o) { return catalog_for(o).subfamily_span_check(); }},
        {"transcendental-lattice", "doublecover.transcendental-lattice",
         [](const Options& o) { return catalog_for(o).transcendental_lattice_check(); }},
        {"nikulin-chain", "doublecover.nikulin-chain",
         [](const Options& o) { return catalog_for(o).nikulin_chain_check(); }},
        {"twist-comparison", "catalog.b-series",
         [](const Options& o) { return catalog_for(o).twist_comparison_check(); }},
        {"weierstrass-model", "family.weierstrass-model", check_weierstrass_model},
        {"fibers-generic", "fibers.generic-configuration", check_fibers_generic},
        {"degeneration-loci", "fibers.degenerations", check_degeneration_loci},
        {"resultant-locus", "fibers.resultant-locus", check_resultant_locus},
        {"disc84-contract", "fibers.disc84", check_disc84},
        {"scaling-invariance", "family.weierstrass-model", check_scaling_invariance},
        {"canonical-u", "canonical.u-chart", check_canonical_u},
        {"canonical-t", "canonical.t-chart", check_canonical_t},
        {"quotient-surface", "doublecover.quotient-surface", check_quotient_surface},
        {"humbert", "humbert.modular-polynomial", check_humbert},
        {"subfamily-tables", "tables.subfamily-lattices", check_subfamily_tables},
        {"genus-invariance", "catalog.a-series", check_genus_invariance},
        {"modular-weight-table", "tables.modular-weights",
         [](const Options&) { return graded::modular_weight_table_check(); }},
        {"ring-generators", "ring.polynomial-generators",
         [](const Options&) { return graded::ring_generator_check(); }},
        {"weight-98", "ring.weight-98",
         [](const Options&) { return graded::weight98_check(); }},
        {"weight-49", "ring.weight-49-factorization",
         [](const Options&) { return graded::weight49_check(); }},
        {"reflection-counts", "ring.reflection-counts",
         [](const Options&) { return graded::reflection_count_check(); }},
    };
    return checks;
}

const std::vector<std::string>& required_anchors() {
    static const std::vector<std::string> anchors = {
        "catalog.a-series",
        "catalog.b-series",
        "discgroup.a-generators",
        "family.weierstrass-model",
        "fibers.generic-configuration",
        "fibers.resultant-locus",
        "fibers.disc84",
        "fibers.degenerations",
        "ns.lattice-m",
        "ns.complement-a",
        "ns.primitivity",
        "canonical.u-chart",
        "canonical.t-chart",
        "doublecover.quotient-surface",
        "humbert.modular-polynomial",
        "tables.modular-weights",
        "tables.subfamily-lattices",
        "ring.polynomial-generators",
        "ring.weight-98",
        "ring.weight-49-factorization",
        "ring.reflection-counts",
        "doublecover.basis-reconstruction",
        "doublecover.u2-embedding",
        "doublecover.subfamily-spans",
        "doublecover.transcendental-lattice",
        "doublecover.nikulin-chain",
    };
    return anchors;
}

Report run_suite(const Options& opt, const std::string& only) {
    const auto& checks = all_checks();
    if (!only.empty()) {
        bool known = false;
        for (const auto& c : checks) known = known || c.id == only;
        if (!known) throw std::invalid_argument("unknown check id: " + only);
    }
    Report rep;
    rep.seed = opt.seed;
    for (const auto& c : checks) {
        ReportEntry entry;
        entry.id = c.id;
        entry.anchor = c.anchor;
        if (!only.empty() && c.id != only) {
            entry.status = "skipped";
            ++rep.skipped;
            rep.entries.push_back(std::move(entry));
            continue;
        }
        auto start = std::chrono::steady_clock::now();
        CheckGroup group;
        try {
            group = c.run(opt);
        } catch (const std::exception& e) {
            group.require("unexpected-exception", false, e.what());
        }
        auto stop = std::chrono::steady_clock::now();
        entry.elapsed_ms = long(
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count());
        entry.status = group.ok() ? "pass" : "fail";
        entry.detail = group.ok()
                           ? std::to_string(group.items.size()) + " assertions"
                           : group.first_failure();
        if (group.ok()) ++rep.passed; else ++rep.failed;
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

}  // namespace k3seq::checks
