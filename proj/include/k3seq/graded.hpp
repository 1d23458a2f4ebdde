#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "k3seq/ellfib.hpp"
#include "k3seq/mpoly.hpp"
#include "k3seq/rational.hpp"
#include "k3seq/report.hpp"

namespace k3seq::graded {

struct WeightSystem {
    std::vector<std::string> names;
    std::vector<int> weights;

    static const WeightSystem& a_system();  // (0,2,4,6,8,10,14)
    static const WeightSystem& u_system();  // (2,4,6,8,10,14)
    static const WeightSystem& t_system();  // (4,6,10,12,18)
    static const WeightSystem& by_name(const std::string& s);  // "a"/"u"/"t"

    int total_weight() const;
};

/// The scaling action a -> (a0, l^2 a2, l^4 a4, l^6 a6, l^8 a8, l^10 a10,
/// l^14 a14).  Throws on l = 0.
fibers::FamilyParams scale_action(const fibers::FamilyParams& a, const Rat& l);

/// Chart normalization for a0 != 0:
/// (a2/a0, a4, a6, a0 a8, a0 a10, a0^2 a14), weights (2,4,6,8,10,14).
std::array<Rat, 6> canonical_u(const fibers::FamilyParams& a);

/// Chart normalization for a0 = 0, a2 != 0:
/// (a4, a6, a2 a8, a2 a10, a2^2 a14), weights (4,6,10,12,18).
std::array<Rat, 5> canonical_t(const fibers::FamilyParams& a);

/// The parameter vector (1, u2, u4, u6, u8, u10, u14) built from canonical_u.
fibers::FamilyParams params_from_u(const std::array<Rat, 6>& u);

/// The Humbert modular polynomial of the family:
/// (a10 a2 + a4^3/27 - a6^2/4)^2 + (1/27) a4 (a4 a6 + 6 a2 a8)^2.
Rat humbert(const fibers::FamilyParams& a);
/// Same polynomial, expanded symbolically over the a-variables.
const MPoly& humbert_mpoly();

/// Common monomial weight, or nullopt if the polynomial is not weighted
/// homogeneous.  Zero polynomial counts as homogeneous of weight 0.
std::optional<long> weighted_homogeneous_weight(const MPoly& p,
                                                const std::vector<int>& weights);

/// Number of monomials of weight exactly k in the weight system.
long hilbert_count(const WeightSystem& ws, int k);

/// Reflection group bookkeeping rows: the rank, polynomial degrees, the
/// weight multiplier kappa, the modular-form weights, the count of order-2
/// reflections, and the weight of the discriminant-type form of the family.
struct ReflectionGroupRecord {
    int shephard_todd_number;
    int rank;
    std::vector<int> degrees;
    int kappa;
    std::vector<int> modular_weights;
    int order2_reflections;
    int discriminant_weight;
};

const std::vector<ReflectionGroupRecord>& reflection_table();

CheckGroup modular_weight_table_check();
CheckGroup weight98_check();
CheckGroup weight49_check();
CheckGroup reflection_count_check();
CheckGroup ring_generator_check();

}  // namespace k3seq::graded
