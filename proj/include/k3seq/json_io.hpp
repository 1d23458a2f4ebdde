#pragma once

#include <json.hpp>

#include "k3seq/checks.hpp"
#include "k3seq/ellfib.hpp"
#include "k3seq/lattice.hpp"

namespace k3seq::io {

using nlohmann::json;

// Rationals cross the interface as strings ("p/q" or "p"); integral matrix
// entries as plain JSON integers.

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

/// Integers become JSON numbers when they fit, strings otherwise.
json int_to_json(const Int& v);

json imat_to_json(const IMat& m);
IMat imat_from_json(const json& j);

json qmat_to_json(const QMat& m);

json lattice_to_json(const lattices::Lattice& l);
lattices::Lattice lattice_from_json(const json& j);

json params_to_json(const fibers::FamilyParams& p);
fibers::FamilyParams params_from_json(const json& j);

json fiber_configuration_to_json(const fibers::FiberConfiguration& cfg);

json report_to_json(const checks::Report& rep);

/// Wraps a payload with the versioned envelope {"schema": 1, ...}.
json with_schema(json payload);

}  // namespace k3seq::io
