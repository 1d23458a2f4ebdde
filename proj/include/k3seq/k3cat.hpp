#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "k3seq/isometry.hpp"
#include "k3seq/lattice.hpp"
#include "k3seq/report.hpp"

namespace k3seq::k3 {

/// A labeling of the E8 diagram nodes by 1..8, stored as an adjacency
/// relation on labels.
struct E8Labeling {
    std::array<std::array<bool, 9>, 9> adj{};  // 1-based

    bool adjacent(int i, int j) const { return adj[i][j]; }
    void connect(int i, int j) { adj[i][j] = adj[j][i] = true; }
    std::vector<std::pair<int, int>> edges() const;
    /// Sorted neighbor lists, the canonical comparison key.
    std::vector<std::vector<int>> neighbor_lists() const;
    friend bool operator==(const E8Labeling&, const E8Labeling&) = default;
};

/// All labelings of the E8 diagram under which the explicit double-cover
/// basis vectors attain their required inner products: the U(2)+U(2) Gram
/// shape on (lambda1, mu1, lambda2, mu2) and orthogonality of nu1, nu2,
/// p1, q1 against that block, with (nu1.nu2) = 2.  Deterministic order.
std::vector<E8Labeling> e8_labeling_survivors();

/// The canonically least survivor (neighbor lists compared lexicographically).
/// Throws if no labeling survives.
E8Labeling derive_e8_labeling();

/// Fixed coordinates for the K3 lattice U+U+U+E8(-1)+E8(-1) and the whole
/// catalog of lattices attached to the family.  Coordinate order:
/// e1 f1 e2 f2 e3 f3 p1..p8 q1..q8.
class Catalog {
public:
    explicit Catalog(const E8Labeling& labeling);

    /// Catalog over the derived labeling; built once, immutable afterwards.
    static const Catalog& standard();

    /// Negative-control copy: identical except one diagonal Gram entry of A0
    /// is bumped, so the verification suite must go red on it.
    Catalog with_tampered_a0() const;

    const E8Labeling& labeling() const { return labeling_; }
    const lattices::Lattice& lk3() const { return lk3_; }

    /// Named lattices: A0..A3, A1p, B0..B3, B1p, M, M0..M3, LK3.
    lattices::Lattice entry(const std::string& name) const;
    static const std::vector<std::string>& entry_names();

    // ambient basis vectors (length-22 rows)
    std::vector<Int> e(int j) const;
    std::vector<Int> f(int j) const;
    std::vector<Int> p(int i) const;
    std::vector<Int> q(int i) const;
    std::vector<Int> nu(int i) const;  // p_i + q_i

    std::vector<Int> lambda1() const;  // -nu5 + nu7 + 2(e1 + f1)
    std::vector<Int> mu1() const;      // -nu4
    std::vector<Int> lambda2() const;  // nu7 + nu8 + 2(e1 + e2 + e3 + f3)
    std::vector<Int> mu2() const;      // nu6

    /// Rows lambda1, mu1, lambda2, mu2 (+ optional tail vectors).
    IMat u2_span() const;
    IMat b1_span() const;       // + nu1, nu2
    IMat b2_span() const;       // + nu1
    IMat b1p_span() const;      // + p1, q1
    IMat transcendental_span() const;  // + p1, q1, nu2 (the rank-7 span)

    /// The Neron-Severi classes of the generic member: fibre class and zero
    /// section as the first hyperbolic summand, E7(-1) as the p-side diagram
    /// with node 7 deleted, E6(-1) as the q-side diagram with nodes 6 and 7
    /// deleted.  Only meaningful for the derived labeling.
    lattices::SpanInAmbient ns_embedding() const;

    // verification bundles
    CheckGroup disc_generator_check() const;
    CheckGroup ns_lattice_check() const;
    CheckGroup ns_complement_check() const;
    CheckGroup ns_primitivity_check() const;
    CheckGroup u2_embedding_check() const;
    CheckGroup subfamily_span_check() const;
    CheckGroup transcendental_lattice_check() const;
    CheckGroup nikulin_chain_check() const;
    CheckGroup twist_comparison_check() const;
    CheckGroup catalog_a_check() const;
    CheckGroup catalog_b_check() const;

private:
    static int eidx(int j) { return 2 * (j - 1); }
    static int fidx(int j) { return 2 * (j - 1) + 1; }
    static int pidx(int i) { return 6 + (i - 1); }
    static int qidx(int i) { return 14 + (i - 1); }

    IMat stack(const std::vector<std::vector<Int>>& rows) const;
    lattices::SpanInAmbient embedded_a(int j) const;  // fixed A_j embedding

    E8Labeling labeling_;
    lattices::Lattice lk3_;
    bool tamper_a0_ = false;
};

/// 7x7 Gram of the rank-7 span, frozen from the expanded inner products.
IMat expected_transcendental_gram();
/// The doubled half-lattice block and its reduced form.
QMat expected_nikulin_gram();
IMat expected_nikulin_doubled();
IMat expected_nikulin_reduced();

}  // namespace k3seq::k3
