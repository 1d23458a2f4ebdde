#include "k3seq/matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace k3seq {

QMat to_qmat(const IMat& m) {
    QMat q(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
    return q;
}

IMat to_imat(const QMat& m) {
    IMat z(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_integer())
                throw std::invalid_argument("to_imat: non-integral entry");
            z(i, j) = m(i, j).num();
        }
    return z;
}

Int det_bareiss(const IMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square");
    int n = m.rows();
    if (n == 0) return 1;
    IMat a = m;
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Rat det(const QMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square");
    int n = m.rows();
    if (n == 0) return Rat(1);
    IMat z(n, n);
    Rat scale(1);
    for (int i = 0; i < n; ++i) {
        Int d(1);
        for (int j = 0; j < n; ++j) d = lcm(d, m(i, j).den());
        scale *= Rat(Int(1), d);
        for (int j = 0; j < n; ++j) z(i, j) = (m(i, j) * Rat(d)).num();
    }
    return Rat(det_bareiss(z)) * scale;
}

namespace {

// Gauss-Jordan on [m | rhs]; returns reduced m, transforms rhs in place.
// Used for both inversion and kernel extraction.
struct Echelon {
    QMat m;
    std::vector<int> pivot_col;  // per pivot row
};

Echelon reduce(QMat a) {
    Echelon e;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!a(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        a.swap_rows(r, piv);
        Rat inv = a(r, c).inv();
        for (int j = 0; j < a.cols(); ++j) a(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Rat f = a(i, c);
            for (int j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        e.pivot_col.push_back(c);
        ++r;
    }
    e.m = a;
    return e;
}

}  // namespace

QMat inverse(const QMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square");
    int n = m.rows();
    QMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rat(1);
    }
    Echelon e = reduce(aug);
    if (int(e.pivot_col.size()) < n || e.pivot_col[n - 1] != n - 1)
        throw std::invalid_argument("inverse: singular matrix");
    QMat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = e.m(i, n + j);
    return out;
}

QMat left_kernel(const QMat& m) {
    // x * m = 0  <=>  m^T x^T = 0: compute the right kernel of m^T.
    QMat a = m.transpose();
    Echelon e = reduce(a);
    int n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : e.pivot_col) is_pivot[c] = true;
    QMat ker(n - int(e.pivot_col.size()), n);
    int r = 0;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        ker(r, c) = Rat(1);
        for (int pr = 0; pr < int(e.pivot_col.size()); ++pr)
            ker(r, e.pivot_col[pr]) = -e.m(pr, c);
        ++r;
    }
    return ker;
}

int rank(const QMat& m) { return int(reduce(m).pivot_col.size()); }

Int denominator_lcm(const QMat& m) {
    Int d(1);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d = lcm(d, m(i, j).den());
    return d;
}

namespace {
template <typename T>
std::ostream& print(std::ostream& os, const Mat<T>& m) {
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << "]";
    }
    return os << "]";
}
}  // namespace

std::ostream& operator<<(std::ostream& os, const IMat& m) { return print(os, m); }
std::ostream& operator<<(std::ostream& os, const QMat& m) { return print(os, m); }

}  // namespace k3seq
