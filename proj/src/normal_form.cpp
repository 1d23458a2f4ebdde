#include "k3seq/normal_form.hpp"

#include <stdexcept>

namespace k3seq {

std::vector<Int> SmithResult::invariant_factors() const {
    std::vector<Int> out;
    int n = std::min(d.rows(), d.cols());
    for (int i = 0; i < n; ++i)
        if (d(i, i) != 0) out.push_back(d(i, i));
    return out;
}

namespace {

// Smallest nonzero |entry| in the trailing submatrix; false if all zero.
bool find_pivot(const IMat& a, int s, int& pi, int& pj) {
    bool found = false;
    Int best;
    for (int i = s; i < a.rows(); ++i)
        for (int j = s; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int v = abs(a(i, j));
            if (!found || v < best) {
                best = v;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SmithResult smith_normal_form(const IMat& m) {
    SmithResult r;
    r.d = m;
    r.u = IMat::identity(m.rows());
    r.v = IMat::identity(m.cols());
    IMat& d = r.d;
    int n = std::min(m.rows(), m.cols());

    for (int s = 0; s < n; ++s) {
        int pi, pj;
        if (!find_pivot(d, s, pi, pj)) break;
        d.swap_rows(s, pi);
        r.u.swap_rows(s, pi);
        d.swap_cols(s, pj);
        r.v.swap_cols(s, pj);

        for (bool dirty = true; dirty;) {
            dirty = false;
            for (int i = s + 1; i < d.rows(); ++i) {
                if (d(i, s) == 0) continue;
                Int q = d(i, s) / d(s, s);
                d.add_row(i, s, -q);
                r.u.add_row(i, s, -q);
                if (d(i, s) != 0) {  // remainder smaller than pivot: swap up
                    d.swap_rows(s, i);
                    r.u.swap_rows(s, i);
                    dirty = true;
                }
            }
            for (int j = s + 1; j < d.cols(); ++j) {
                if (d(s, j) == 0) continue;
                Int q = d(s, j) / d(s, s);
                d.add_col(j, s, -q);
                r.v.add_col(j, s, -q);
                if (d(s, j) != 0) {
                    d.swap_cols(s, j);
                    r.v.swap_cols(s, j);
                    dirty = true;
                }
            }
            if (!dirty) {
                // pivot must divide the rest of the block
                for (int i = s + 1; i < d.rows() && !dirty; ++i)
                    for (int j = s + 1; j < d.cols() && !dirty; ++j)
                        if (d(i, j) % d(s, s) != 0) {
                            d.add_row(s, i, 1);
                            r.u.add_row(s, i, 1);
                            dirty = true;
                        }
            }
        }
        if (d(s, s) < 0) {
            d.negate_row(s);
            r.u.negate_row(s);
        }
    }
    return r;
}

HermiteResult hermite_normal_form(const IMat& m) {
    HermiteResult r;
    r.h = m;
    r.t = IMat::identity(m.rows());
    IMat& h = r.h;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        // reduce column below `row` to a single nonzero entry by gcd steps
        for (bool more = true; more;) {
            more = false;
            int piv = -1;
            for (int i = row; i < h.rows(); ++i) {
                if (h(i, col) == 0) continue;
                if (piv < 0 || abs(h(i, col)) < abs(h(piv, col))) piv = i;
            }
            if (piv < 0) goto next_col;
            h.swap_rows(row, piv);
            r.t.swap_rows(row, piv);
            for (int i = row + 1; i < h.rows(); ++i) {
                if (h(i, col) == 0) continue;
                Int q = h(i, col) / h(row, col);
                h.add_row(i, row, -q);
                r.t.add_row(i, row, -q);
                if (h(i, col) != 0) more = true;
            }
        }
        if (h(row, col) < 0) {
            h.negate_row(row);
            r.t.negate_row(row);
        }
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(row, col).get_mpz_t());
            if (q != 0) {
                h.add_row(i, row, -q);
                r.t.add_row(i, row, -q);
            }
        }
        ++row;
    next_col:;
    }
    r.rank = row;
    return r;
}

IMat integer_left_kernel(const IMat& m) {
    HermiteResult hr = hermite_normal_form(m);
    int k = m.rows() - hr.rank;
    IMat ker(k, m.rows());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m.rows(); ++j) ker(i, j) = hr.t(hr.rank + i, j);
    return ker;
}

bool in_hnf_row_span(const HermiteResult& hr, const std::vector<Int>& v) {
    if (int(v.size()) != hr.h.cols())
        throw std::invalid_argument("in_hnf_row_span: dimension mismatch");
    std::vector<Int> w = v;
    for (int r = 0; r < hr.rank; ++r) {
        int col = -1;
        for (int j = 0; j < hr.h.cols(); ++j)
            if (hr.h(r, j) != 0) { col = j; break; }
        if (col < 0) break;
        if (w[col] % hr.h(r, col) != 0) return false;
        Int q = w[col] / hr.h(r, col);
        if (q != 0)
            for (int j = 0; j < hr.h.cols(); ++j) w[j] -= q * hr.h(r, j);
    }
    for (const auto& c : w)
        if (c != 0) return false;
    return true;
}

}  // namespace k3seq
