#pragma once

#include <vector>

#include "k3seq/matrix.hpp"

namespace k3seq {

/// Smith normal form: d = u * m * v with u, v unimodular, d diagonal,
/// d(0,0) | d(1,1) | ... and all diagonal entries >= 0.
struct SmithResult {
    IMat u, d, v;
    /// Nonzero diagonal entries in divisibility order.
    std::vector<Int> invariant_factors() const;
};

SmithResult smith_normal_form(const IMat& m);

/// Row-style Hermite normal form: h = t * m with t unimodular.  Nonzero rows
/// come first with strictly increasing pivot columns, positive pivots, and
/// entries above each pivot reduced into [0, pivot).
struct HermiteResult {
    IMat h, t;
    int rank = 0;
};

HermiteResult hermite_normal_form(const IMat& m);

/// Basis (rows) of the integer left kernel { x in Z^rows : x * m = 0 }.
/// The result is saturated (a basis of the full kernel lattice).
IMat integer_left_kernel(const IMat& m);

/// True iff v lies in the integer row span of the HNF matrix h.
bool in_hnf_row_span(const HermiteResult& h, const std::vector<Int>& v);

}  // namespace k3seq
