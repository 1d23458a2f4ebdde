#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "k3seq/rational.hpp"

namespace k3seq {

/// Dense univariate polynomial over Q, coefficients stored lowest degree
/// first.  The zero polynomial has an empty coefficient vector; otherwise
/// the leading coefficient is nonzero.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly constant(const Rat& r);
    /// c * x^k
    static UPoly monomial(const Rat& c, int k);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return int(c_.size()) - 1; }
    Rat coeff(int k) const { return k >= 0 && k < int(c_.size()) ? c_[k] : Rat(0); }
    Rat leading() const { return is_zero() ? Rat(0) : c_.back(); }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator*(const Rat& s) const;

    UPoly derivative() const;
    Rat eval(const Rat& x) const;
    UPoly monic() const;  // zero stays zero
    UPoly pow(int e) const;

    /// Quotient and remainder with deg(rem) < deg(divisor).
    static std::pair<UPoly, UPoly> divrem(const UPoly& num, const UPoly& den);
    /// Exact division; throws if the remainder is nonzero.
    UPoly exact_div(const UPoly& den) const;

    /// Number of times `factor` divides this polynomial (0 if coprime).
    int multiplicity_of(const UPoly& factor) const;
    /// Multiplicity of x = 0 as a root (index of lowest nonzero coefficient).
    int order_at_zero() const;
    /// this / x^k, requires x^k | this.
    UPoly shift_down(int k) const;

    std::string str(const std::string& var = "x") const;
    friend std::ostream& operator<<(std::ostream& os, const UPoly& p);

private:
    void trim();
    std::vector<Rat> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly upoly_gcd(const UPoly& p, const UPoly& q);

/// Resultant as a Sylvester determinant, with the convention
/// res(x - a, x - b) = b - a.  Throws on a zero input polynomial.
Rat resultant(const UPoly& p, const UPoly& q);

/// (-1)^(d(d-1)/2) res(p, p') / lc(p) for d = deg p >= 1; throws on
/// constant input.  Vanishes exactly when p has a repeated root.
Rat discriminant(const UPoly& p);

/// Yun decomposition: p = lc * prod f_i^(m_i) with the f_i monic, squarefree
/// and pairwise coprime, listed with strictly increasing multiplicities.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

/// Partition of a squarefree monic f by the exact multiplicity each of its
/// irreducible factors has in g: returns pieces (h, k) with h | f and every
/// root of h of multiplicity exactly k in g.  A zero g yields ({f}, -1)
/// meaning infinite multiplicity.
std::vector<std::pair<UPoly, int>> split_by_multiplicity(const UPoly& f, const UPoly& g);

}  // namespace k3seq
