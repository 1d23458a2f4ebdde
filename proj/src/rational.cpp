#include "k3seq/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace k3seq {

Rat::Rat(const Int& num, const Int& den) : q_(num, den) {
    if (sgn(den) == 0) throw std::invalid_argument("Rat: zero denominator");
    q_.canonicalize();
}

Rat::Rat(long num, long den) : Rat(Int(num), Int(den)) {}

Rat Rat::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    }
}

Rat Rat::operator-() const {
    Rat r;
    r.q_ = -q_;
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::abs() const {
    Rat r;
    r.q_ = ::abs(q_);
    return r;
}

Rat Rat::inv() const {
    if (is_zero()) throw std::invalid_argument("Rat: inverse of zero");
    return Rat(den(), num());
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? *this : inv();
    unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-e);
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
    return Rat(n, d);
}

Int Rat::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

std::string Rat::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow2k(long k) { return Rat(2).pow(k); }

Int isqrt(const Int& n) {
    if (sgn(n) < 0) throw std::invalid_argument("isqrt: negative input");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace k3seq
