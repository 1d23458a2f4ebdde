#include "k3seq/upoly.hpp"

#include <sstream>
#include <stdexcept>

#include "k3seq/matrix.hpp"

namespace k3seq {

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const Rat& r) {
    if (r.is_zero()) return UPoly();
    return UPoly({r});
}

UPoly UPoly::monomial(const Rat& c, int k) {
    if (c.is_zero()) return UPoly();
    std::vector<Rat> v(size_t(k) + 1);
    v[k] = c;
    return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
}

UPoly UPoly::operator*(const Rat& s) const {
    if (s.is_zero()) return UPoly();
    UPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

UPoly UPoly::derivative() const {
    if (degree() < 1) return UPoly();
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(long(i));
    return UPoly(std::move(c));
}

Rat UPoly::eval(const Rat& x) const {
    Rat v(0);
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

UPoly UPoly::monic() const {
    if (is_zero()) return UPoly();
    return *this * leading().inv();
}

UPoly UPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("UPoly::pow: negative exponent");
    UPoly r = UPoly::constant(Rat(1));
    UPoly b = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * b;
        b = b * b;
    }
    return r;
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& num, const UPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("UPoly: division by zero");
    UPoly r = num;
    std::vector<Rat> q(num.degree() >= den.degree() ? num.degree() - den.degree() + 1 : 0);
    Rat lcinv = den.leading().inv();
    while (!r.is_zero() && r.degree() >= den.degree()) {
        int k = r.degree() - den.degree();
        Rat c = r.leading() * lcinv;
        q[k] = c;
        r = r - UPoly::monomial(c, k) * den;
    }
    return {UPoly(std::move(q)), r};
}

UPoly UPoly::exact_div(const UPoly& den) const {
    auto [q, r] = divrem(*this, den);
    if (!r.is_zero()) throw std::invalid_argument("UPoly: division not exact");
    return q;
}

int UPoly::multiplicity_of(const UPoly& factor) const {
    if (factor.degree() < 1)
        throw std::invalid_argument("multiplicity_of: constant factor");
    if (is_zero()) return -1;  // divides any number of times
    int k = 0;
    UPoly p = *this;
    while (true) {
        auto [q, r] = divrem(p, factor);
        if (!r.is_zero()) return k;
        p = q;
        ++k;
    }
}

int UPoly::order_at_zero() const {
    if (is_zero()) return -1;
    int k = 0;
    while (c_[k].is_zero()) ++k;
    return k;
}

UPoly UPoly::shift_down(int k) const {
    if (k == 0) return *this;
    if (is_zero() || order_at_zero() < k)
        throw std::invalid_argument("shift_down: x^k does not divide");
    return UPoly(std::vector<Rat>(c_.begin() + k, c_.end()));
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rat c = coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rat a = c.abs();
        if (k == 0 || a != Rat(1)) os << a.str();
        if (k > 0) {
            if (a != Rat(1)) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.str(); }

UPoly upoly_gcd(const UPoly& p, const UPoly& q) {
    UPoly a = p, b = q;
    while (!b.is_zero()) {
        auto [quot, rem] = UPoly::divrem(a, b);
        (void)quot;
        a = b;
        b = rem;
    }
    return a.monic();
}

Rat resultant(const UPoly& p, const UPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw std::invalid_argument("undefined resultant of zero polynomial");
    int m = p.degree(), n = q.degree();
    if (m == 0) return p.coeff(0).pow(n);
    if (n == 0) return q.coeff(0).pow(m);
    // Sylvester matrix with q's coefficient rows first; this is the ordering
    // that yields res(x - a, x - b) = b - a.
    QMat s(m + n, m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s(i, i + j) = q.coeff(n - j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s(m + i, i + j) = p.coeff(m - j);
    return det(s);
}

Rat discriminant(const UPoly& p) {
    int d = p.degree();
    if (d < 1) throw std::invalid_argument("discriminant of constant polynomial");
    if (d == 1) return Rat(1);
    Rat r = resultant(p, p.derivative());
    int e = (d * (d - 1)) / 2;
    Rat sign = (e % 2 == 0) ? Rat(1) : Rat(-1);
    return sign * r / p.leading();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<std::pair<UPoly, int>> out;
    UPoly f = p.monic();
    if (f.degree() == 0) return out;
    // Yun's algorithm
    UPoly fp = f.derivative();
    UPoly a = upoly_gcd(f, fp);
    UPoly b = f.exact_div(a);
    UPoly c = fp.exact_div(a);
    UPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        UPoly g = upoly_gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = b.exact_div(g);
        c = d.exact_div(g);
        d = c - b.derivative();
    }
    return out;
}

std::vector<std::pair<UPoly, int>> split_by_multiplicity(const UPoly& f, const UPoly& g) {
    std::vector<std::pair<UPoly, int>> out;
    if (f.degree() < 1) return out;
    if (g.is_zero()) {
        out.emplace_back(f.monic(), -1);
        return out;
    }
    UPoly rest = f.monic();
    UPoly gg = g;
    int k = 0;
    while (rest.degree() >= 1) {
        UPoly shared = upoly_gcd(rest, gg);
        UPoly exact_k = rest.exact_div(shared);
        if (exact_k.degree() >= 1) out.emplace_back(exact_k, k);
        if (shared.degree() < 1) break;
        gg = gg.exact_div(shared);
        rest = shared;
        ++k;
    }
    return out;
}

}  // namespace k3seq
