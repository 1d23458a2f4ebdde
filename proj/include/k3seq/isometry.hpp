#pragma once

#include <optional>
#include <string>

#include "k3seq/lattice.hpp"
#include "k3seq/matrix.hpp"

namespace k3seq::lattices {

enum class IsometryStatus { found, unknown, not_isometric };

struct IsometryResult {
    IsometryStatus status = IsometryStatus::unknown;
    IMat witness;  // columns are images of the right-hand basis; valid iff found
    std::string note;
};

struct IsometryOptions {
    long budget = 1000000;  // search nodes across all strategies
    int max_height = 3;     // coordinate box bound for isotropic/fallback search
};

/// True iff p^T g1 p = g2 and |det p| = 1.  Throws on dimension mismatch.
bool verify_isometry(const QMat& g1, const QMat& g2, const IMat& p);

/// Semi-decision procedure.  `not_isometric` is returned only on an invariant
/// mismatch (signature, determinant, parity, discriminant form); a failed
/// search yields `unknown`.  Any returned witness satisfies verify_isometry.
IsometryResult find_isometry(const IMat& g1, const IMat& g2,
                             const IsometryOptions& opt = {});

}  // namespace k3seq::lattices
