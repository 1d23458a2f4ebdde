// Acceptance suite: one criterion per entry, each printed as a PASS/FAIL
// line with its runtime.  Exit status 0 only if every criterion holds.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "k3seq/checks.hpp"
#include "k3seq/ellfib.hpp"
#include "k3seq/graded.hpp"
#include "k3seq/isometry.hpp"
#include "k3seq/k3cat.hpp"
#include "k3seq/lattice.hpp"

namespace {

using namespace k3seq;
using k3::Catalog;
using lattices::IsometryStatus;
using lattices::Lattice;

struct Criterion {
    std::string name;
    long time_limit_ms;  // 0 = no limit
    std::function<bool(std::string&)> run;
};

fibers::FamilyParams seeded_generic(std::mt19937_64& gen) {
    std::uniform_int_distribution<long> dist(-9, 9);
    for (;;) {
        fibers::FamilyParams p;
        for (auto& c : p.a) c = Rat(dist(gen));
        if (p.a0().is_zero() || p.a14().is_zero()) continue;
        try {
            if (fibers::resultant_r(p).is_zero()) continue;
            if (fibers::disc84(p).is_zero()) continue;
        } catch (const std::domain_error&) {
            continue;
        }
        return p;
    }
}

bool criterion1(std::string& note) {
    const Catalog& cat = Catalog::standard();
    for (int j = 0; j <= 3; ++j) {
        auto sig = lattices::signature_of(cat.entry("A" + std::to_string(j)));
        if (!(sig == lattices::Signature{2, 5 - j, 0})) {
            note = "signature of A" + std::to_string(j);
            return false;
        }
    }
    Lattice a0 = cat.entry("A0");
    if (abs(a0.det()) != 6) {
        note = "det A0";
        return false;
    }
    // the order-6 discriminant group decomposes into prime powers {2, 3}
    auto dg = lattices::disc_group(a0);
    if (dg.order() != 6 ||
        lattices::elementary_divisors(dg.invariant_factors) !=
            std::vector<Int>{Int(2), Int(3)}) {
        note = "disc group of A0";
        return false;
    }
    QMat gens(3, 7);
    gens(0, 4) = Rat(1, 3);
    gens(0, 5) = Rat(2, 3);
    gens(1, 4) = Rat(2, 3);
    gens(1, 5) = Rat(1, 3);
    gens(2, 6) = Rat(1, 2);
    if (!lattices::verify_disc_generators(a0, gens, {Int(3), Int(3), Int(2)})) {
        note = "explicit generators of orders (3,3,2)";
        return false;
    }
    return true;
}

bool criterion2(std::string& note) {
    const Catalog& cat = Catalog::standard();
    auto ns = cat.ns_embedding();
    auto comp = lattices::orth_complement(ns);
    Lattice comp_lat(to_imat(lattices::gram_of_span(comp)));
    Lattice ns_lat(to_imat(lattices::gram_of_span(ns)));
    if (abs(ns_lat.det()) != 6 || abs(comp_lat.det()) != 6) {
        note = "determinants across the pairing";
        return false;
    }
    auto iso = lattices::find_isometry(comp_lat.gram, cat.entry("A0").gram);
    if (iso.status != IsometryStatus::found) {
        note = "witness search: " + iso.note;
        return false;
    }
    if (!lattices::verify_isometry(to_qmat(comp_lat.gram),
                                   to_qmat(cat.entry("A0").gram), iso.witness)) {
        note = "witness failed validation";
        return false;
    }
    return true;
}

bool criterion3(std::string& note) {
    std::mt19937_64 gen(0);
    for (int t = 0; t < 20; ++t) {
        auto p = seeded_generic(gen);
        auto cfg = fibers::classify_all(p);
        auto counts = cfg.type_counts();
        bool good = counts.size() == 3 &&
                    counts[{fibers::KodairaType::IIIStar, 0}] == 1 &&
                    counts[{fibers::KodairaType::IVStar, 0}] == 1 &&
                    counts[{fibers::KodairaType::In, 1}] == 7 &&
                    cfg.total_euler() == 24;
        if (!good) {
            note = "sample " + std::to_string(t) + ": " + p.str() + " -> " +
                   cfg.summary();
            return false;
        }
    }
    return true;
}

bool criterion4(std::string& note) {
    using fibers::KodairaType;
    using fibers::SampleKind;
    struct Expect {
        SampleKind kind;
        std::map<KodairaType, int> counts;
        const char* name;
    };
    std::vector<Expect> expects = {
        {SampleKind::type_II,
         {{{KodairaType::IIIStar, 0}, 1},
          {{KodairaType::IVStar, 0}, 1},
          {{KodairaType::II, 0}, 1},
          {{KodairaType::In, 1}, 5}},
         "type-II"},
        {SampleKind::type_I2,
         {{{KodairaType::IIIStar, 0}, 1},
          {{KodairaType::IVStar, 0}, 1},
          {{KodairaType::In, 2}, 1},
          {{KodairaType::In, 1}, 5}},
         "type-I2"},
        {SampleKind::a0_zero,
         {{{KodairaType::IIStar, 0}, 1},
          {{KodairaType::IVStar, 0}, 1},
          {{KodairaType::In, 1}, 6}},
         "a0-zero"},
        {SampleKind::a14_zero,
         {{{KodairaType::IIIStar, 0}, 2}, {{KodairaType::In, 1}, 6}},
         "a14-zero"},
    };
    for (const auto& e : expects) {
        auto cfg = fibers::classify_all(fibers::degenerate_sample(e.kind));
        if (cfg.type_counts() != e.counts || cfg.total_euler() != 24) {
            note = std::string(e.name) + " -> " + cfg.summary();
            return false;
        }
    }
    return true;
}

bool criterion5(std::string& note) {
    std::mt19937_64 gen(5);
    std::uniform_int_distribution<long> ldist(1, 7);
    std::optional<Rat> constant;
    for (int t = 0; t < 20; ++t) {
        auto p = seeded_generic(gen);
        Rat l(ldist(gen), ldist(gen));
        if (fibers::disc84(graded::scale_action(p, l)) !=
            l.pow(84) * fibers::disc84(p)) {
            note = "homogeneity failed at sample " + std::to_string(t);
            return false;
        }
        auto model = fibers::build_model(p);
        Rat disc = discriminant(model.delta().shift_down(8));
        Rat k = disc / (fibers::resultant_r(p).pow(3) * fibers::disc84(p));
        if (!constant) constant = k;
        if (k != *constant) {
            note = "normalization constant drifted";
            return false;
        }
    }
    if (!fibers::disc84(fibers::degenerate_sample(fibers::SampleKind::type_I2))
             .is_zero()) {
        note = "d84 nonzero at the I2 sample";
        return false;
    }
    return true;
}

bool criterion6(std::string& note) {
    auto group = Catalog::standard().transcendental_lattice_check();
    auto spans = Catalog::standard().subfamily_span_check();
    if (!group.ok()) note = group.first_failure();
    if (!spans.ok()) note = spans.first_failure();
    return group.ok() && spans.ok();
}

bool criterion7(std::string& note) {
    auto group = Catalog::standard().nikulin_chain_check();
    if (!group.ok()) note = group.first_failure();
    return group.ok();
}

bool criterion8(std::string& note) {
    auto group = Catalog::standard().twist_comparison_check();
    if (!group.ok()) note = group.first_failure();
    return group.ok();
}

bool criterion9(std::string& note) {
    for (const auto& g :
         {graded::modular_weight_table_check(), graded::weight98_check(),
          graded::weight49_check(), graded::reflection_count_check()}) {
        if (!g.ok()) {
            note = g.first_failure();
            return false;
        }
    }
    return true;
}

bool criterion10(std::string& note) {
    checks::Options opt;
    opt.seed = 0;
    opt.trials = 20;
    for (const char* id :
         {"canonical-u", "canonical-t", "humbert", "scaling-invariance"}) {
        auto rep = checks::run_suite(opt, id);
        if (!rep.ok()) {
            note = std::string("suite ") + id;
            return false;
        }
    }
    return true;
}

bool criterion11(std::string& note) {
    checks::Options opt;
    opt.seed = 0;
    auto rep = checks::run_suite(opt);
    if (!rep.ok()) {
        for (const auto& e : rep.entries)
            if (e.status == "fail") note += e.id + " ";
        return false;
    }
    checks::Options tampered = opt;
    tampered.tamper = true;
    auto bad = checks::run_suite(tampered, "catalog-a-lattices");
    if (bad.ok()) {
        note = "negative control did not fail";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"criterion-01 lattice catalog and discriminant generators", 1000, criterion1},
        {"criterion-02 NS complement isometric to A0 with witness", 30000, criterion2},
        {"criterion-03 generic fiber configuration on 20 seeds", 5000, criterion3},
        {"criterion-04 four degeneration-locus configurations", 0, criterion4},
        {"criterion-05 d84 homogeneity, normalization, vanishing", 30000, criterion5},
        {"criterion-06 rank-7 span isometric to B0, subfamily spans", 0, criterion6},
        {"criterion-07 half-lattice chain down to the A-block", 0, criterion7},
        {"criterion-08 twist identities and the B0 obstruction", 0, criterion8},
        {"criterion-09 weight and degree numerology", 0, criterion9},
        {"criterion-10 equivariance suites on 20 seeds", 0, criterion10},
        {"criterion-11 full suite green, negative control red", 120000, criterion11},
    };
    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string note;
        bool ok = false;
        try {
            ok = c.run(note);
        } catch (const std::exception& e) {
            note = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (ok && c.time_limit_ms > 0 && ms > c.time_limit_ms) {
            ok = false;
            note = "time limit " + std::to_string(c.time_limit_ms) + " ms exceeded";
        }
        std::cout << (ok ? "PASS " : "FAIL ") << c.name << " (" << ms << " ms)";
        if (!ok && !note.empty()) std::cout << " - " << note;
        std::cout << std::endl;
        if (!ok) ++failures;
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
