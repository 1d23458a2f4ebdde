#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3seq/matrix.hpp"
#include "k3seq/normal_form.hpp"

namespace k3seq::lattices {

/// Integral lattice given by its Gram matrix.
struct Lattice {
    IMat gram;
    std::string label;

    Lattice() = default;
    Lattice(IMat g, std::string l = {});

    int rank() const { return gram.rows(); }
    Int det() const { return det_bareiss(gram); }
    /// Entrywise rescaling of the form: the twist L(n).
    Lattice twist(const Int& n) const;
};

struct Signature {
    int positive = 0, negative = 0, zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Exact signature by recursive congruence diagonalization over Q; zero
/// diagonals with a nonzero row use the rank-2 hyperbolic step.
Signature signature_of(const QMat& gram);
Signature signature_of(const Lattice& l);

/// Every diagonal Gram entry even.
bool is_even(const Lattice& l);

/// Hyperbolic plane U, root lattices A_n / E_6 / E_7 / E_8 with root norm
/// +2, all scaled entrywise by `twist`.  E_n uses the chain 1-2-...-(n-1)
/// with node n attached to node 3.
Lattice make_named(const std::string& name, const Int& twist);

Lattice direct_sum(const std::vector<Lattice>& parts);

/// Discriminant group L^dual / L of a nondegenerate lattice.
struct DiscGroup {
    std::vector<Int> invariant_factors;  // > 1, divisibility chain
    QMat generators;                     // one row per invariant factor
    std::vector<Rat> qvalues;            // q(g_i), canonical in [0,2) (even L)
    QMat pairings;                       // b(g_i,g_j) mod 1, canonical in [0,1)

    Int order() const;
};

DiscGroup disc_group(const Lattice& l);

/// Prime-power decomposition of a finite abelian group given by its SNF
/// chain, sorted ascending (e.g. chain (6) becomes {2, 3}).
std::vector<Int> elementary_divisors(const std::vector<Int>& invariant_factors);

/// Check that the given dual vectors (rows, coordinates in the basis of l)
/// have the claimed orders in L^dual/L and generate the whole group.
bool verify_disc_generators(const Lattice& l, const QMat& gens,
                            const std::vector<Int>& claimed_orders);

/// Order of a single dual vector in L^dual/L (lcm of coordinate denominators).
Int disc_element_order(const QMat& row);

/// A sublattice of an ambient lattice, spanned by integer basis rows.
struct SpanInAmbient {
    Lattice ambient;
    IMat basis;  // rows are vectors in ambient coordinates

    int rank() const { return basis.rows(); }
};

/// Saturated orthogonal complement { v : (v,s) = 0 for all s in the span }.
SpanInAmbient orth_complement(const SpanInAmbient& span);

/// True iff ambient / span is torsion-free (all SNF invariants of the basis
/// matrix equal 1).
bool is_primitive(const SpanInAmbient& span);

/// Pairwise ambient inner products of the given rational row vectors.
QMat gram_of_span(const IMat& ambient_gram, const QMat& rows);
QMat gram_of_span(const SpanInAmbient& span);

/// HNF basis of { v in Z-span(gens) : v in Q-span(subspace) }, both given as
/// rational row vectors in common ambient coordinates.
QMat intersect_with_subspace(const QMat& gens, const QMat& subspace);

/// Deterministic isometry-class fingerprint: unequal fingerprints certify
/// non-isometry.  qvals is the sorted multiset of discriminant-form values
/// over the whole group (mod 2Z when even, mod 1Z otherwise).
struct GenusFingerprint {
    Signature sig;
    bool even = false;
    std::vector<Int> invariant_factors;
    std::vector<Rat> qvals;
    friend bool operator==(const GenusFingerprint&, const GenusFingerprint&) = default;

    std::string str() const;
};

GenusFingerprint genus_invariants(const Lattice& l);

}  // namespace k3seq::lattices
