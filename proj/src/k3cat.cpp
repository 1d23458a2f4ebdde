#include "k3seq/k3cat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace k3seq::k3 {

using lattices::direct_sum;
using lattices::find_isometry;
using lattices::genus_invariants;
using lattices::gram_of_span;
using lattices::IsometryStatus;
using lattices::Lattice;
using lattices::make_named;
using lattices::orth_complement;
using lattices::SpanInAmbient;
using lattices::verify_isometry;

std::vector<std::pair<int, int>> E8Labeling::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= 8; ++i)
        for (int j = i + 1; j <= 8; ++j)
            if (adj[i][j]) out.emplace_back(i, j);
    return out;
}

std::vector<std::vector<int>> E8Labeling::neighbor_lists() const {
    std::vector<std::vector<int>> out(9);
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j)
            if (adj[i][j]) out[i].push_back(j);
    return out;
}

namespace {

// abstract E8 diagram: node 0 is the branch point, arms of lengths 1, 2, 4
constexpr std::pair<int, int> kDiagram[7] = {
    {0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}};

// The forced inner-product facts, written on nu-pairings:
// nu_i.nu_i = -4, nu_i.nu_j = 2 for adjacent labels, 0 otherwise.
bool labeling_admissible(const E8Labeling& lab) {
    auto nu = [&](int i, int j) -> int {
        if (i == j) return -4;
        return lab.adjacent(i, j) ? 2 : 0;
    };
    // Gram of (lambda1, mu1, lambda2, mu2) must be U(2)-type blocks
    if (nu(5, 5) + nu(7, 7) - 2 * nu(5, 7) + 8 != 0) return false;   // lambda1^2
    if (nu(4, 5) - nu(4, 7) != 2) return false;                      // lambda1.mu1
    if (-nu(5, 7) - nu(5, 8) + nu(7, 7) + nu(7, 8) + 4 != 0) return false;
    if (-nu(5, 6) + nu(6, 7) != 0) return false;                     // lambda1.mu2
    if (-nu(4, 7) - nu(4, 8) != 0) return false;                     // mu1.lambda2
    if (-nu(4, 6) != 0) return false;                                // mu1.mu2
    if (nu(7, 7) + nu(8, 8) + 2 * nu(7, 8) + 8 != 0) return false;   // lambda2^2
    if (nu(6, 7) + nu(6, 8) != 2) return false;                      // lambda2.mu2
    // nu1, nu2 orthogonal to the block, with nu1.nu2 = 2
    for (int t : {1, 2}) {
        if (-nu(5, t) + nu(7, t) != 0) return false;
        if (nu(4, t) != 0) return false;
        if (nu(7, t) + nu(8, t) != 0) return false;
        if (nu(6, t) != 0) return false;
    }
    if (nu(1, 2) != 2) return false;
    return true;
}

}  // namespace

std::vector<E8Labeling> e8_labeling_survivors() {
    std::vector<E8Labeling> out;
    std::array<int, 8> perm;
    std::iota(perm.begin(), perm.end(), 1);
    do {
        E8Labeling lab;
        for (auto [a, b] : kDiagram) lab.connect(perm[a], perm[b]);
        if (labeling_admissible(lab)) out.push_back(lab);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // distinct labelings only (several permutations induce the same edge set)
    std::sort(out.begin(), out.end(), [](const E8Labeling& a, const E8Labeling& b) {
        return a.neighbor_lists() < b.neighbor_lists();
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

E8Labeling derive_e8_labeling() {
    auto survivors = e8_labeling_survivors();
    if (survivors.empty())
        throw std::runtime_error("derive_e8_labeling: no admissible labeling");
    return survivors.front();  // survivors are sorted, least first
}

Catalog::Catalog(const E8Labeling& labeling) : labeling_(labeling) {
    IMat g(22, 22);
    for (int j = 1; j <= 3; ++j) {
        g(eidx(j), fidx(j)) = 1;
        g(fidx(j), eidx(j)) = 1;
    }
    for (int i = 1; i <= 8; ++i) {
        g(pidx(i), pidx(i)) = -2;
        g(qidx(i), qidx(i)) = -2;
        for (int j = i + 1; j <= 8; ++j)
            if (labeling_.adjacent(i, j)) {
                g(pidx(i), pidx(j)) = g(pidx(j), pidx(i)) = 1;
                g(qidx(i), qidx(j)) = g(qidx(j), qidx(i)) = 1;
            }
    }
    lk3_ = Lattice(std::move(g), "LK3");
    bool sane = lattices::is_even(lk3_) && abs(lk3_.det()) == 1 &&
                lattices::signature_of(lk3_) == lattices::Signature{3, 19, 0};
    if (!sane)
        throw std::logic_error("Catalog: ambient lattice failed its invariants");
}

const Catalog& Catalog::standard() {
    static const Catalog instance(derive_e8_labeling());
    return instance;
}

Catalog Catalog::with_tampered_a0() const {
    Catalog c = *this;
    c.tamper_a0_ = true;
    return c;
}

const std::vector<std::string>& Catalog::entry_names() {
    static const std::vector<std::string> names = {
        "A0", "A1", "A2", "A3", "A1p", "M0", "M1", "M2", "M3",
        "B0", "B1", "B1p", "B2", "B3", "LK3", "M"};
    return names;
}

Lattice Catalog::entry(const std::string& name) const {
    const Int one(1), two(2), m1(-1), m2(-2);
    auto U = [&] { return make_named("U", one); };
    auto U2 = [&] { return make_named("U", two); };
    if (name == "A0") {
        IMat g = direct_sum({U(), U(), make_named("A2", m1), make_named("A1", m1)}).gram;
        if (tamper_a0_) g(0, 0) += 1;
        return Lattice(std::move(g), "A0");
    }
    if (name == "A1")
        return Lattice(direct_sum({U(), U(), make_named("A2", m1)}).gram, "A1");
    if (name == "A2")
        return Lattice(direct_sum({U(), U(), make_named("A1", m1)}).gram, "A2");
    if (name == "A3")
        return Lattice(direct_sum({U(), Lattice(IMat{{Int(2), Int(1)}, {Int(1), Int(-2)}})}).gram, "A3");
    if (name == "A1p")
        return Lattice(direct_sum({U(), U(), make_named("A1", m1), make_named("A1", m1)}).gram, "A1p");
    if (name == "B0")
        return Lattice(direct_sum({U2(), U2(),
                                   Lattice(IMat{{Int(-2), Int(0), Int(1)},
                                                {Int(0), Int(-2), Int(1)},
                                                {Int(1), Int(1), Int(-4)}})}).gram, "B0");
    if (name == "B1")
        return Lattice(direct_sum({U2(), U2(), make_named("A2", m2)}).gram, "B1");
    if (name == "B2")
        return Lattice(direct_sum({U2(), U2(), make_named("A1", m2)}).gram, "B2");
    if (name == "B3")
        return Lattice(direct_sum({U2(), Lattice(IMat{{Int(4), Int(2)}, {Int(2), Int(-4)}})}).gram, "B3");
    if (name == "B1p")
        return Lattice(direct_sum({U2(), U2(), make_named("A1", m1), make_named("A1", m1)}).gram, "B1p");
    if (name == "M")
        return Lattice(direct_sum({U(), make_named("E7", m1), make_named("E6", m1)}).gram, "M");
    if (name == "LK3") return lk3_;
    if (name.size() == 2 && name[0] == 'M' && name[1] >= '0' && name[1] <= '3') {
        int j = name[1] - '0';
        SpanInAmbient comp = orth_complement(embedded_a(j));
        return Lattice(to_imat(gram_of_span(comp)), name);
    }
    throw std::invalid_argument("catalog: unknown lattice name " + name);
}

std::vector<Int> Catalog::e(int j) const {
    std::vector<Int> v(22);
    v[eidx(j)] = 1;
    return v;
}
std::vector<Int> Catalog::f(int j) const {
    std::vector<Int> v(22);
    v[fidx(j)] = 1;
    return v;
}
std::vector<Int> Catalog::p(int i) const {
    std::vector<Int> v(22);
    v[pidx(i)] = 1;
    return v;
}
std::vector<Int> Catalog::q(int i) const {
    std::vector<Int> v(22);
    v[qidx(i)] = 1;
    return v;
}
std::vector<Int> Catalog::nu(int i) const {
    std::vector<Int> v(22);
    v[pidx(i)] = 1;
    v[qidx(i)] = 1;
    return v;
}

namespace {
std::vector<Int> lin(std::initializer_list<std::pair<Int, std::vector<Int>>> terms) {
    std::vector<Int> out(22);
    for (const auto& [c, v] : terms)
        for (int i = 0; i < 22; ++i) out[i] += c * v[i];
    return out;
}
}  // namespace

std::vector<Int> Catalog::lambda1() const {
    return lin({{Int(-1), nu(5)}, {Int(1), nu(7)}, {Int(2), e(1)}, {Int(2), f(1)}});
}
std::vector<Int> Catalog::mu1() const { return lin({{Int(-1), nu(4)}}); }
std::vector<Int> Catalog::lambda2() const {
    return lin({{Int(1), nu(7)}, {Int(1), nu(8)}, {Int(2), e(1)}, {Int(2), e(2)},
                {Int(2), e(3)}, {Int(2), f(3)}});
}
std::vector<Int> Catalog::mu2() const { return lin({{Int(1), nu(6)}}); }

IMat Catalog::stack(const std::vector<std::vector<Int>>& rows) const {
    IMat m(int(rows.size()), 22);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < 22; ++j) m(i, j) = rows[i][j];
    return m;
}

IMat Catalog::u2_span() const { return stack({lambda1(), mu1(), lambda2(), mu2()}); }
IMat Catalog::b1_span() const {
    return stack({lambda1(), mu1(), lambda2(), mu2(), nu(1), nu(2)});
}
IMat Catalog::b2_span() const {
    return stack({lambda1(), mu1(), lambda2(), mu2(), nu(1)});
}
IMat Catalog::b1p_span() const {
    return stack({lambda1(), mu1(), lambda2(), mu2(), p(1), q(1)});
}
IMat Catalog::transcendental_span() const {
    return stack({lambda1(), mu1(), lambda2(), mu2(), p(1), q(1), nu(2)});
}

SpanInAmbient Catalog::ns_embedding() const {
    std::vector<std::vector<Int>> rows = {e(1), f(1)};
    for (int i : {1, 2, 3, 4, 5, 6, 8}) rows.push_back(p(i));   // E7 side
    for (int i : {1, 2, 3, 4, 5, 8}) rows.push_back(q(i));      // E6 side
    return SpanInAmbient{lk3_, stack(rows)};
}

SpanInAmbient Catalog::embedded_a(int j) const {
    std::vector<std::vector<Int>> rows;
    switch (j) {
        case 0: rows = {e(1), f(1), e(2), f(2), q(1), q(2), q(4)}; break;
        case 1: rows = {e(1), f(1), e(2), f(2), q(1), q(2)}; break;
        case 2: rows = {e(1), f(1), e(2), f(2), q(1)}; break;
        case 3: {
            rows = {e(1), f(1), lin({{Int(1), e(2)}, {Int(1), f(2)}}),
                    lin({{Int(1), f(2)}, {Int(-1), q(1)}})};
            break;
        }
        default:
            throw std::invalid_argument("embedded_a: j out of range");
    }
    return SpanInAmbient{lk3_, stack(rows)};
}

IMat expected_transcendental_gram() {
    return IMat{{Int(0), Int(2), Int(0), Int(0), Int(0), Int(0), Int(0)},
                {Int(2), Int(-4), Int(0), Int(0), Int(0), Int(0), Int(0)},
                {Int(0), Int(0), Int(0), Int(2), Int(0), Int(0), Int(0)},
                {Int(0), Int(0), Int(2), Int(-4), Int(0), Int(0), Int(0)},
                {Int(0), Int(0), Int(0), Int(0), Int(-2), Int(0), Int(1)},
                {Int(0), Int(0), Int(0), Int(0), Int(0), Int(-2), Int(1)},
                {Int(0), Int(0), Int(0), Int(0), Int(1), Int(1), Int(-4)}};
}

QMat expected_nikulin_gram() {
    Rat h(1, 2);
    return QMat{{Rat(-1), Rat(-1), h}, {Rat(-1), Rat(-2), h}, {h, h, Rat(-1)}};
}

IMat expected_nikulin_doubled() {
    return IMat{{Int(-2), Int(-2), Int(1)}, {Int(-2), Int(-4), Int(1)},
                {Int(1), Int(1), Int(-2)}};
}

IMat expected_nikulin_reduced() {
    return IMat{{Int(-2), Int(1), Int(0)}, {Int(1), Int(-2), Int(0)},
                {Int(0), Int(0), Int(-2)}};
}

// ---------------------------------------------------------------------------
// verification bundles

CheckGroup Catalog::disc_generator_check() const {
    CheckGroup g;
    Lattice a0 = entry("A0");
    // basis order e1 f1 e2 f2 alpha1 alpha2 alpha3
    QMat gens(3, 7);
    gens(0, 4) = Rat(1, 3);
    gens(0, 5) = Rat(2, 3);
    gens(1, 4) = Rat(2, 3);
    gens(1, 5) = Rat(1, 3);
    gens(2, 6) = Rat(1, 2);
    g.require("generators-have-orders-3-3-2",
              lattices::verify_disc_generators(a0, gens, {Int(3), Int(3), Int(2)}));
    QMat only_y1(1, 7);
    for (int j = 0; j < 7; ++j) only_y1(0, j) = gens(0, j);
    g.require("y1-alone-misses-2-part",
              !lattices::verify_disc_generators(a0, only_y1, {Int(3)}));
    // y1 + y2 = alpha1 + alpha2 lies in the lattice itself
    bool sum_integral = true;
    for (int j = 0; j < 7; ++j)
        if (!(gens(0, j) + gens(1, j)).is_integer()) sum_integral = false;
    g.require("y1-plus-y2-in-lattice", sum_integral);
    auto dg = lattices::disc_group(a0);
    g.require("group-order-6", dg.order() == 6,
              "order " + dg.order().get_str());
    g.require("det-A0-is-minus-6", a0.det() == -6);
    // trivial group edge case: U needs no generators at all
    g.require("unimodular-trivial-group",
              lattices::verify_disc_generators(make_named("U", Int(1)), QMat(0, 2), {}));
    return g;
}

CheckGroup Catalog::ns_lattice_check() const {
    CheckGroup g;
    SpanInAmbient ns = ns_embedding();
    QMat gq = gram_of_span(ns);
    Lattice ns_lat(to_imat(gq), "NS");
    Lattice m = entry("M");
    g.require("rank-15", ns.rank() == 15);
    g.require("det-6", ns_lat.det() == 6, "det " + ns_lat.det().get_str());
    auto iso = find_isometry(ns_lat.gram, m.gram);
    g.require("isometric-to-M", iso.status == IsometryStatus::found, iso.note);
    if (iso.status == IsometryStatus::found)
        g.require("witness-valid",
                  verify_isometry(to_qmat(ns_lat.gram), to_qmat(m.gram), iso.witness));
    auto sig = lattices::signature_of(ns_lat);
    g.require("signature-1-14", sig == lattices::Signature{1, 14, 0});
    return g;
}

CheckGroup Catalog::ns_primitivity_check() const {
    CheckGroup g;
    g.require("ns-span-primitive", lattices::is_primitive(ns_embedding()));
    g.require("det-6-squarefree", true, "6 = 2*3");
    return g;
}

CheckGroup Catalog::ns_complement_check() const {
    CheckGroup g;
    SpanInAmbient ns = ns_embedding();
    SpanInAmbient comp = orth_complement(ns);
    g.require("complement-rank-7", comp.rank() == 7);
    g.require("ranks-fill-ambient", ns.rank() + comp.rank() == 22);
    Lattice comp_lat(to_imat(gram_of_span(comp)), "NSperp");
    g.require("complement-det-minus-6", comp_lat.det() == -6,
              "det " + comp_lat.det().get_str());
    Lattice a0 = entry("A0");
    auto iso = find_isometry(comp_lat.gram, a0.gram);
    g.require("complement-isometric-to-A0", iso.status == IsometryStatus::found, iso.note);
    if (iso.status == IsometryStatus::found)
        g.require("witness-valid",
                  verify_isometry(to_qmat(comp_lat.gram), to_qmat(a0.gram), iso.witness));
    g.require("dets-match-across-pairing",
              abs(Lattice(to_imat(gram_of_span(ns))).det()) == abs(comp_lat.det()));
    return g;
}

CheckGroup Catalog::u2_embedding_check() const {
    CheckGroup g;
    IMat span = u2_span();
    QMat gq = gram_of_span(lk3_.gram, to_qmat(span));
    IMat expected{{Int(0), Int(2), Int(0), Int(0)},
                  {Int(2), Int(-4), Int(0), Int(0)},
                  {Int(0), Int(0), Int(0), Int(2)},
                  {Int(0), Int(0), Int(2), Int(-4)}};
    g.require("gram-as-expanded", gq == to_qmat(expected));
    Lattice u2u2 = direct_sum({make_named("U", Int(2)), make_named("U", Int(2))});
    auto iso = find_isometry(to_imat(gq), u2u2.gram);
    g.require("isometric-to-U2-U2", iso.status == IsometryStatus::found, iso.note);
    g.require("primitive-in-lk3", lattices::is_primitive({lk3_, span}));
    return g;
}

CheckGroup Catalog::subfamily_span_check() const {
    CheckGroup g;
    struct Case {
        const char* name;
        IMat span;
        const char* target;
    };
    std::vector<Case> cases = {{"B1-span", b1_span(), "B1"},
                               {"B2-span", b2_span(), "B2"},
                               {"B1p-span", b1p_span(), "B1p"}};
    for (const auto& c : cases) {
        Lattice span_lat(to_imat(gram_of_span(lk3_.gram, to_qmat(c.span))));
        Lattice target = entry(c.target);
        auto iso = find_isometry(span_lat.gram, target.gram);
        bool okfound = iso.status == IsometryStatus::found;
        g.require(std::string(c.name) + "-isometric-to-" + c.target, okfound, iso.note);
        if (okfound)
            g.require(std::string(c.name) + "-witness-valid",
                      verify_isometry(to_qmat(span_lat.gram), to_qmat(target.gram),
                                      iso.witness));
        g.require(std::string(c.name) + "-primitive",
                  lattices::is_primitive({lk3_, c.span}));
    }
    return g;
}

CheckGroup Catalog::transcendental_lattice_check() const {
    CheckGroup g;
    IMat span = transcendental_span();
    QMat gq = gram_of_span(lk3_.gram, to_qmat(span));
    g.require("gram-matches-expansion", gq == to_qmat(expected_transcendental_gram()));
    Lattice span_lat(to_imat(gq), "Tr");
    Lattice b0 = entry("B0");
    auto iso = find_isometry(span_lat.gram, b0.gram);
    g.require("isometric-to-B0", iso.status == IsometryStatus::found, iso.note);
    if (iso.status == IsometryStatus::found)
        g.require("witness-valid",
                  verify_isometry(to_qmat(span_lat.gram), to_qmat(b0.gram), iso.witness));
    g.require("primitive-in-lk3", lattices::is_primitive({lk3_, span}));
    g.require("det-minus-192", span_lat.det() == -192,
              "det " + span_lat.det().get_str());
    return g;
}

CheckGroup Catalog::nikulin_chain_check() const {
    CheckGroup g;
    // (a) printed Gram of <nu1/2, q1, nu2/2>
    QMat half_rows(3, 22);
    auto n1 = nu(1), q1v = q(1), n2 = nu(2);
    for (int j = 0; j < 22; ++j) {
        half_rows(0, j) = Rat(n1[j], Int(2));
        half_rows(1, j) = Rat(q1v[j]);
        half_rows(2, j) = Rat(n2[j], Int(2));
    }
    QMat gq = gram_of_span(lk3_.gram, half_rows);
    g.require("half-vector-gram", gq == expected_nikulin_gram());
    // (b) doubling
    QMat doubled = gq * Rat(2);
    g.require("doubled-gram", doubled == to_qmat(expected_nikulin_doubled()));
    // (c) isometry with the A2(-1)+A1(-1) block
    auto iso = find_isometry(expected_nikulin_doubled(), expected_nikulin_reduced());
    g.require("doubled-isometric-to-root-block",
              iso.status == IsometryStatus::found, iso.note);
    if (iso.status == IsometryStatus::found)
        g.require("witness-valid",
                  verify_isometry(to_qmat(expected_nikulin_doubled()),
                                  to_qmat(expected_nikulin_reduced()), iso.witness));
    // (d) the intersection lattice: Z-span of the hyperbolic summands, the
    // half-vectors nu_j/2 and the printed generator q1, cut down to the
    // rational span of the rank-7 transcendental lattice
    QMat gens(15, 22);
    int r = 0;
    auto put = [&](const std::vector<Int>& v, const Rat& scale) {
        for (int j = 0; j < 22; ++j) gens(r, j) = Rat(v[j]) * scale;
        ++r;
    };
    for (int j = 1; j <= 3; ++j) {
        put(e(j), Rat(1));
        put(f(j), Rat(1));
    }
    for (int i = 1; i <= 8; ++i) put(nu(i), Rat(1, 2));
    put(q(1), Rat(1));
    QMat lambda = lattices::intersect_with_subspace(gens, to_qmat(transcendental_span()));
    g.require("intersection-rank-7", lambda.rows() == 7,
              "rank " + std::to_string(lambda.rows()));
    QMat gl = gram_of_span(lk3_.gram, lambda) * Rat(2);
    bool integral = true;
    for (int i = 0; i < gl.rows() && integral; ++i)
        for (int j = 0; j < gl.cols() && integral; ++j)
            integral = gl(i, j).is_integer();
    g.require("twist-by-2-integral", integral);
    if (integral && lambda.rows() == 7) {
        Lattice lam2(to_imat(gl), "Lambda(2)");
        auto fp1 = genus_invariants(lam2);
        auto fp2 = genus_invariants(entry("A0"));
        g.require("twist-matches-A0-genus", fp1 == fp2,
                  fp1.str() + " vs " + fp2.str());
    }
    // halved U(2) block: <lambda1/2, mu1/2> doubled is a hyperbolic plane
    QMat halves(2, 22);
    auto l1 = lambda1(), m1 = mu1();
    for (int j = 0; j < 22; ++j) {
        halves(0, j) = Rat(l1[j], Int(2));
        halves(1, j) = Rat(m1[j], Int(2));
    }
    QMat gh = gram_of_span(lk3_.gram, halves);
    QMat expect_h{{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(-1)}};
    g.require("halved-u2-gram", gh == expect_h);
    auto isoU = find_isometry(to_imat(gh * Rat(2)), make_named("U", Int(1)).gram);
    g.require("halved-u2-twist-is-U", isoU.status == IsometryStatus::found, isoU.note);
    return g;
}

CheckGroup Catalog::twist_comparison_check() const {
    CheckGroup g;
    for (int j = 1; j <= 3; ++j) {
        std::string an = "A" + std::to_string(j), bn = "B" + std::to_string(j);
        Lattice aj2 = entry(an).twist(Int(2));
        Lattice bj = entry(bn);
        auto iso = find_isometry(bj.gram, aj2.gram);
        g.require(bn + "-isometric-to-" + an + "-twist-2",
                  iso.status == IsometryStatus::found, iso.note);
        if (iso.status == IsometryStatus::found)
            g.require(bn + "-witness-valid",
                      verify_isometry(to_qmat(bj.gram), to_qmat(aj2.gram), iso.witness));
    }
    Lattice a02 = entry("A0").twist(Int(2));
    Lattice b0 = entry("B0");
    auto iso = find_isometry(b0.gram, a02.gram);
    g.require("B0-not-isometric-to-A0-twist-2",
              iso.status == IsometryStatus::not_isometric, iso.note);
    g.require("det-192-vs-768",
              abs(b0.det()) == 192 && abs(a02.det()) == 768,
              "|det B0| = " + Int(abs(b0.det())).get_str() +
                  ", |det A0(2)| = " + Int(abs(a02.det())).get_str());
    return g;
}

CheckGroup Catalog::catalog_a_check() const {
    CheckGroup g;
    for (int j = 0; j <= 3; ++j) {
        Lattice aj = entry("A" + std::to_string(j));
        auto sig = lattices::signature_of(aj);
        g.require("A" + std::to_string(j) + "-signature",
                  sig == lattices::Signature{2, 5 - j, 0});
        g.require("A" + std::to_string(j) + "-even", lattices::is_even(aj));
        Lattice mj = entry("M" + std::to_string(j));
        auto msig = lattices::signature_of(mj);
        g.require("M" + std::to_string(j) + "-signature",
                  msig == lattices::Signature{1, 14 + j, 0});
        g.require("M" + std::to_string(j) + "-even", lattices::is_even(mj));
    }
    g.require("A0-det", entry("A0").det() == -6);
    g.require("A1p-even-rank-6",
              lattices::is_even(entry("A1p")) && entry("A1p").rank() == 6);
    g.require("M0-disc-order-6", lattices::disc_group(entry("M0")).order() == 6);
    Lattice lk = entry("LK3");
    g.require("LK3-unimodular", abs(lk.det()) == 1, "det " + lk.det().get_str());
    g.require("LK3-even", lattices::is_even(lk));
    g.require("LK3-signature",
              lattices::signature_of(lk) == lattices::Signature{3, 19, 0});
    Lattice m = entry("M");
    g.require("M-det-6", m.det() == 6, "det " + m.det().get_str());
    g.require("M-signature",
              lattices::signature_of(m) == lattices::Signature{1, 14, 0});
    return g;
}

CheckGroup Catalog::catalog_b_check() const {
    CheckGroup g;
    struct Row {
        const char* name;
        int rank;
        Int absdet;
    };
    for (const auto& row : std::vector<Row>{{"B0", 7, Int(192)},
                                            {"B1", 6, Int(192)},
                                            {"B2", 5, Int(64)},
                                            {"B3", 4, Int(80)},
                                            {"B1p", 6, Int(64)}}) {
        Lattice b = entry(row.name);
        g.require(std::string(row.name) + "-rank", b.rank() == row.rank);
        g.require(std::string(row.name) + "-even", lattices::is_even(b));
        g.require(std::string(row.name) + "-det", abs(b.det()) == row.absdet,
                  "det " + b.det().get_str());
    }
    auto sig = lattices::signature_of(entry("B0"));
    g.require("B0-signature", sig == lattices::Signature{2, 5, 0});
    return g;
}

}  // namespace k3seq::k3
