#include <doctest.h>

#include <set>

#include "k3seq/checks.hpp"
#include "k3seq/json_io.hpp"

using namespace k3seq;

TEST_CASE("check ids are unique and anchors cover the claim list") {
    std::set<std::string> ids, anchors;
    for (const auto& c : checks::all_checks()) {
        CHECK(ids.insert(c.id).second);
        anchors.insert(c.anchor);
    }
    for (const auto& a : checks::required_anchors()) {
        INFO("missing anchor " << a);
        CHECK(anchors.count(a) == 1);
    }
}

TEST_CASE("single-check filtering and unknown ids") {
    checks::Options opt;
    auto rep = checks::run_suite(opt, "weight-98");
    int ran = 0;
    for (const auto& e : rep.entries)
        if (e.status != "skipped") ++ran;
    CHECK(ran == 1);
    CHECK(rep.ok());
    CHECK_THROWS_AS(checks::run_suite(opt, "no-such-check"), std::invalid_argument);
}

TEST_CASE("negative control fails the catalog check") {
    checks::Options opt;
    opt.tamper = true;
    auto rep = checks::run_suite(opt, "catalog-a-lattices");
    CHECK(!rep.ok());
}

TEST_CASE("json payloads round-trip") {
    fibers::FamilyParams p;
    p.a = {Rat(1), Rat(-2, 3), Rat(0), Rat(7), Rat(5, 2), Rat(-9), Rat(11)};
    CHECK(io::params_from_json(io::params_to_json(p)) == p);
    lattices::Lattice l(IMat{{Int(0), Int(2)}, {Int(2), Int(-4)}}, "W");
    auto back = io::lattice_from_json(io::lattice_to_json(l));
    CHECK(back.gram == l.gram);
    CHECK(back.label == l.label);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    checks::Options opt;
    opt.seed = 42;
    opt.trials = 3;
    auto strip = [](checks::Report r) {
        for (auto& e : r.entries) e.elapsed_ms = 0;
        return io::report_to_json(r).dump();
    };
    CHECK(strip(checks::run_suite(opt, "fibers-generic")) ==
          strip(checks::run_suite(opt, "fibers-generic")));
}
