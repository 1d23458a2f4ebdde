#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace k3seq {

using Int = mpz_class;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.  Thin value wrapper around GMP's mpq_class that
/// enforces canonical form on every construction path.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}           // NOLINT: implicit by design
    Rat(const Int& n) : q_(n) {}     // NOLINT
    Rat(const Int& num, const Int& den);
    Rat(long num, long den);

    static Rat from_string(const std::string& s);  // "p/q" or "p"

    const Int num() const { return q_.get_num(); }
    const Int den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat operator-() const;
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    Rat abs() const;
    Rat inv() const;
    Rat pow(long e) const;  // negative e inverts; 0^0 = 1

    /// Largest integer <= value.
    Int floor() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class q_;
};

Rat pow2k(long k);  // 2^k as a Rat, k may be negative

/// Truncated integer square root of n >= 0.
Int isqrt(const Int& n);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

}  // namespace k3seq
