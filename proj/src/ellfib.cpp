#include "k3seq/ellfib.hpp"

#include <sstream>

namespace k3seq::fibers {

bool FamilyParams::all_zero() const {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

std::string FamilyParams::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i].str();
    os << ")";
    return os.str();
}

UPoly WeierstrassModel::delta() const {
    return g2 * g2 * g2 * Rat(4) + g3 * g3 * Rat(27);
}

UPoly WeierstrassModel::depressed_g2() const {
    return g2.is_zero() ? UPoly() : g2.shift_down(3);
}

UPoly WeierstrassModel::depressed_g3() const {
    return g3.is_zero() ? UPoly() : g3.shift_down(4);
}

WeierstrassModel build_model(const FamilyParams& a) {
    if (a.all_zero()) throw std::invalid_argument("build_model: zero parameter");
    WeierstrassModel m;
    m.g2 = UPoly({Rat(0), Rat(0), Rat(0), a.a8(), a.a4(), a.a0()});
    m.g3 = UPoly({Rat(0), Rat(0), Rat(0), Rat(0), a.a14(), a.a10(), a.a6(), a.a2()});
    return m;
}

int KodairaType::euler() const {
    switch (kind) {
        case In: return n;
        case II: return 2;
        case III: return 3;
        case IV: return 4;
        case InStar: return n + 6;
        case IVStar: return 8;
        case IIIStar: return 9;
        case IIStar: return 10;
    }
    return 0;
}

std::string KodairaType::label() const {
    switch (kind) {
        case In: return "I" + std::to_string(n);
        case II: return "II";
        case III: return "III";
        case IV: return "IV";
        case InStar: return "I" + std::to_string(n) + "*";
        case IVStar: return "IV*";
        case IIIStar: return "III*";
        case IIStar: return "II*";
    }
    return "?";
}

int FiberConfiguration::total_euler() const {
    int t = 0;
    for (const auto& f : fibers) t += f.euler() * f.count;
    return t;
}

std::map<KodairaType, int> FiberConfiguration::type_counts() const {
    std::map<KodairaType, int> m;
    for (const auto& f : fibers) m[f.type] += f.count;
    return m;
}

std::string FiberConfiguration::summary() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : type_counts()) {
        if (!first) os << " + ";
        first = false;
        if (c > 1) os << c << " ";
        os << t.label();
    }
    return os.str();
}

namespace {
// order of an identically-zero polynomial at any place
constexpr int kInfiniteOrder = -1;

bool ord_ge(int ord, int bound) { return ord == kInfiniteOrder || ord >= bound; }
}  // namespace

KodairaType kodaira_type(int o2, int o3, int od) {
    if (ord_ge(o2, 4) && ord_ge(o3, 6) && ord_ge(od, 12))
        throw NotK3Error("non-minimal Weierstrass point (orders " +
                         std::to_string(o2) + "," + std::to_string(o3) + "," +
                         std::to_string(od) + ")");
    if (o2 == 0 && o3 == 0) return {KodairaType::In, od};
    if (ord_ge(o2, 1) && o3 == 1 && od == 2) return {KodairaType::II, 0};
    if (o2 == 1 && ord_ge(o3, 2) && od == 3) return {KodairaType::III, 0};
    if (ord_ge(o2, 2) && o3 == 2 && od == 4) return {KodairaType::IV, 0};
    if (ord_ge(o2, 2) && ord_ge(o3, 3) && od == 6) return {KodairaType::InStar, 0};
    if (o2 == 2 && o3 == 3 && od >= 7) return {KodairaType::InStar, od - 6};
    if (ord_ge(o2, 3) && o3 == 4 && od == 8) return {KodairaType::IVStar, 0};
    if (o2 == 3 && ord_ge(o3, 5) && od == 9) return {KodairaType::IIIStar, 0};
    if (ord_ge(o2, 4) && o3 == 5 && od == 10) return {KodairaType::IIStar, 0};
    throw NotK3Error("order pattern outside the Kodaira table (" +
                     std::to_string(o2) + "," + std::to_string(o3) + "," +
                     std::to_string(od) + ")");
}

FiberReport classify_place(const WeierstrassModel& m, const std::string& place) {
    UPoly delta = m.delta();
    if (delta.is_zero()) throw NotK3Error("discriminant vanishes identically");
    if (place == "0") {
        int o2 = m.g2.is_zero() ? kInfiniteOrder : m.g2.order_at_zero();
        int o3 = m.g3.is_zero() ? kInfiniteOrder : m.g3.order_at_zero();
        int od = delta.order_at_zero();
        return {"0", o2, o3, od, kodaira_type(o2, o3, od), 1};
    }
    if (place == "inf") {
        // degree-deficiency orders under the K3 bounds deg <= (8, 12, 24)
        int o2 = m.g2.is_zero() ? kInfiniteOrder : 8 - m.g2.degree();
        int o3 = m.g3.is_zero() ? kInfiniteOrder : 12 - m.g3.degree();
        int od = 24 - delta.degree();
        return {"inf", o2, o3, od, kodaira_type(o2, o3, od), 1};
    }
    throw std::invalid_argument("classify_place: place must be '0', 'inf', or a polynomial");
}

FiberReport classify_place(const WeierstrassModel& m, const UPoly& place_poly) {
    if (place_poly.degree() < 1 || place_poly.coeff(0).is_zero())
        throw std::invalid_argument(
            "classify_place: finite places away from 0 need a nonconstant "
            "polynomial with nonzero constant term");
    UPoly delta = m.delta();
    if (delta.is_zero()) throw NotK3Error("discriminant vanishes identically");
    int o2 = m.g2.multiplicity_of(place_poly);
    int o3 = m.g3.multiplicity_of(place_poly);
    int od = delta.multiplicity_of(place_poly);
    return {place_poly.str(), o2, o3, od, kodaira_type(o2, o3, od),
            place_poly.degree()};
}

FiberConfiguration classify_all(const FamilyParams& a) {
    WeierstrassModel m = build_model(a);
    UPoly delta = m.delta();
    if (delta.is_zero()) throw NotK3Error("discriminant vanishes identically");

    FiberConfiguration cfg;
    int v0 = delta.order_at_zero();
    if (v0 > 0) cfg.fibers.push_back(classify_place(m, "0"));
    if (24 - delta.degree() > 0) cfg.fibers.push_back(classify_place(m, "inf"));
    // finite places away from 0: squarefree levels of delta / x^v0, then
    // refined so each piece has constant vanishing orders in g2 and g3
    UPoly reduced = delta.shift_down(v0);
    for (const auto& [sqf, mult] : squarefree_decomposition(reduced)) {
        for (const auto& [piece2, o2] : split_by_multiplicity(sqf, m.g2)) {
            for (const auto& [piece, o3] : split_by_multiplicity(piece2, m.g3)) {
                FiberReport r{piece.str(), o2, o3, mult,
                              kodaira_type(o2, o3, mult), piece.degree()};
                cfg.fibers.push_back(std::move(r));
            }
        }
    }
    return cfg;
}

bool is_k3(const FamilyParams& a) {
    if (a.all_zero()) return false;
    if (a.a0().is_zero() && a.a2().is_zero()) return false;
    try {
        return classify_all(a).total_euler() == 24;
    } catch (const NotK3Error&) {
        return false;
    }
}

Rat resultant_r(const FamilyParams& a) {
    WeierstrassModel m = build_model(a);
    UPoly d2 = m.depressed_g2(), d3 = m.depressed_g3();
    if (d2.is_zero() || d3.is_zero())
        throw std::domain_error("resultant_r: depressed polynomial vanishes");
    return resultant(d2, d3);
}

Rat disc84(const FamilyParams& a) {
    Rat r = resultant_r(a);
    if (r.is_zero())
        throw std::domain_error(
            "d_84 undefined on the resultant locus (compute the discriminant directly)");
    WeierstrassModel m = build_model(a);
    UPoly delta = m.delta();
    if (delta.is_zero() || delta.order_at_zero() < 8)
        throw std::domain_error("disc84: x^8 does not divide the discriminant");
    UPoly reduced = delta.shift_down(8);
    return discriminant(reduced) / (r * r * r);
}

const Rat& disc84_reference() {
    // value at a = (1,1,1,1,1,1,1), frozen from an exact evaluation
    static const Rat ref = Rat(Int("9917532888584159232"));
    return ref;
}

SampleKind sample_kind_from_string(const std::string& s) {
    if (s == "type-II") return SampleKind::type_II;
    if (s == "type-I2") return SampleKind::type_I2;
    if (s == "a0-zero") return SampleKind::a0_zero;
    if (s == "a14-zero") return SampleKind::a14_zero;
    throw std::invalid_argument("unknown sample kind: " + s);
}

FamilyParams degenerate_sample(SampleKind kind) {
    auto mk = [](long a0, long a2, long a4, long a6, long a8, long a10, long a14) {
        FamilyParams p;
        p.a = {Rat(a0), Rat(a2), Rat(a4), Rat(a6), Rat(a8), Rat(a10), Rat(a14)};
        return p;
    };
    switch (kind) {
        case SampleKind::type_II:
            // depressed g2 and g3 share the simple root x = 1
            return mk(1, 1, 1, -2, -2, 2, -1);
        case SampleKind::type_I2:
            // g2(1) = -3, g3(1) = 2, g2'(1) = -g3'(1) = 0: forced double
            // root of Delta at x = 1 with g2 nonzero there
            return mk(1, 1, 7, 0, -11, -11, 12);
        case SampleKind::a0_zero:
            return mk(0, 1, 1, 1, 1, 2, 3);
        case SampleKind::a14_zero:
            return mk(1, 1, 1, 2, 3, 5, 0);
    }
    throw std::invalid_argument("degenerate_sample: bad kind");
}

std::pair<UPoly, UPoly> quotient_surface_model(const FamilyParams& a) {
    UPoly g2part({Rat(0), a.a8(), a.a4(), a.a0()});
    UPoly g3part({Rat(0), a.a14(), a.a10(), a.a6(), a.a2()});
    return {g2part, g3part};
}

}  // namespace k3seq::fibers
