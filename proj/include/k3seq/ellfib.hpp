#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3seq/rational.hpp"
#include "k3seq/upoly.hpp"

namespace k3seq::fibers {

/// Parameter vector (a0, a2, a4, a6, a8, a10, a14) of the family, with the
/// scaling weights (0, 2, 4, 6, 8, 10, 14) attached in order.
struct FamilyParams {
    std::array<Rat, 7> a{};

    static constexpr std::array<int, 7> weights = {0, 2, 4, 6, 8, 10, 14};

    const Rat& a0() const { return a[0]; }
    const Rat& a2() const { return a[1]; }
    const Rat& a4() const { return a[2]; }
    const Rat& a6() const { return a[3]; }
    const Rat& a8() const { return a[4]; }
    const Rat& a10() const { return a[5]; }
    const Rat& a14() const { return a[6]; }

    bool all_zero() const;
    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
    std::string str() const;
};

/// y^2 = x^3 + g2(x) y ... the Weierstrass data of the family member:
/// g2 = a0 x^5 + a4 x^4 + a8 x^3 and g3 = a2 x^7 + a6 x^6 + a10 x^5 + a14 x^4,
/// with discriminant Delta = 4 g2^3 + 27 g3^2 of degree <= 15.
struct WeierstrassModel {
    UPoly g2, g3;

    UPoly delta() const;
    /// g2 / x^3 and g3 / x^4.
    UPoly depressed_g2() const;
    UPoly depressed_g3() const;
};

WeierstrassModel build_model(const FamilyParams& a);

struct KodairaType {
    enum Kind { In, II, III, IV, InStar, IIStar, IIIStar, IVStar } kind = In;
    int n = 0;  // used by In and InStar

    int euler() const;
    std::string label() const;
    friend bool operator==(const KodairaType&, const KodairaType&) = default;
    friend bool operator<(const KodairaType& a, const KodairaType& b) {
        return a.kind != b.kind ? a.kind < b.kind : a.n < b.n;
    }
};

/// Vanishing orders -1 encode "identically zero" (infinite order).
struct FiberReport {
    std::string place;        // "0", "inf", or the defining polynomial
    int ord_g2 = 0, ord_g3 = 0, ord_delta = 0;
    KodairaType type;
    int count = 1;            // geometric points in the orbit
    int euler() const { return type.euler(); }
};

struct FiberConfiguration {
    std::vector<FiberReport> fibers;
    int total_euler() const;
    /// Multiset {type -> number of geometric fibers of that type}.
    std::map<KodairaType, int> type_counts() const;
    std::string summary() const;  // e.g. "III* + IV* + 7 I1"
};

/// Raised when a place of the model is not minimal (the surface is not K3)
/// or the discriminant vanishes identically.
struct NotK3Error : std::runtime_error {
    explicit NotK3Error(const std::string& what) : std::runtime_error(what) {}
};

/// Kodaira type from exact vanishing orders, characteristic zero.
/// Throws NotK3Error on the non-minimal pattern (>=4, >=6, >=12).
KodairaType kodaira_type(int ord_g2, int ord_g3, int ord_delta);

/// Classify one place: "0", "inf", or a finite place given by a squarefree
/// polynomial with nonzero constant term (one orbit of roots away from 0).
FiberReport classify_place(const WeierstrassModel& m, const std::string& place);
FiberReport classify_place(const WeierstrassModel& m, const UPoly& place_poly);

/// Full singular-fiber classification; throws NotK3Error off the K3 locus.
FiberConfiguration classify_all(const FamilyParams& a);

/// True iff (a0 != 0 or a2 != 0), the model is minimal at every place, and
/// the Euler numbers sum to 24.
bool is_k3(const FamilyParams& a);

/// Resultant of the depressed polynomials g2/x^3 and g3/x^4; vanishes exactly
/// when they share a root.  Weighted-homogeneous of weight 28.
Rat resultant_r(const FamilyParams& a);

/// disc_x(Delta / x^8) / r(a)^3, the weight-84 companion of the family;
/// vanishes exactly when Delta/x^8 has a repeated root (given r(a) != 0).
/// Throws std::domain_error when r(a) = 0.
Rat disc84(const FamilyParams& a);

/// Reference value of disc84 at a = (1,1,1,1,1,1,1), pinned as a regression
/// fixture for the normalization.
const Rat& disc84_reference();

enum class SampleKind { type_II, type_I2, a0_zero, a14_zero };
SampleKind sample_kind_from_string(const std::string& s);

/// Parameter vectors lying exactly on the four degeneration loci.
FamilyParams degenerate_sample(SampleKind kind);

/// Coefficients of the rational quotient surface attached to the second
/// involution of the double cover: g2-part a0 x^3 + a4 x^2 + a8 x and
/// g3-part a2 x^4 + a6 x^3 + a10 x^2 + a14 x.
std::pair<UPoly, UPoly> quotient_surface_model(const FamilyParams& a);

}  // namespace k3seq::fibers
