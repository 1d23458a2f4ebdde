#include "k3seq/isometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace k3seq::lattices {

bool verify_isometry(const QMat& g1, const QMat& g2, const IMat& p) {
    if (g1.rows() != g1.cols() || g2.rows() != g2.cols() || g1.rows() != g2.rows())
        throw std::invalid_argument("verify_isometry: dimension mismatch");
    if (p.rows() != g1.rows() || p.cols() != g2.rows()) return false;
    QMat pq = to_qmat(p);
    if (pq.transpose() * g1 * pq != g2) return false;
    Int d = det_bareiss(p);
    return d == 1 || d == -1;
}

namespace {

using VecI = std::vector<Int>;

Int inner(const IMat& g, const VecI& a, const VecI& b) {
    Int s(0);
    int n = g.rows();
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        Int t(0);
        for (int j = 0; j < n; ++j)
            if (b[j] != 0) t += g(i, j) * b[j];
        s += a[i] * t;
    }
    return s;
}

// connected components of the basis graph (edge iff nonzero off-diagonal)
std::vector<std::vector<int>> components(const IMat& g) {
    int n = g.rows();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = int(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w = 0; w < n; ++w)
                if (w != v && comp[w] < 0 && g(v, w) != 0) {
                    comp[w] = comp[v];
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

struct BlockKey {
    int rank;
    Int absdet;
    Signature sig;
    bool even;
    std::vector<Int> factors;
    friend bool operator==(const BlockKey&, const BlockKey&) = default;
    friend bool operator<(const BlockKey& a, const BlockKey& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        if (a.absdet != b.absdet) return a.absdet < b.absdet;
        if (a.even != b.even) return a.even < b.even;
        if (a.sig.positive != b.sig.positive) return a.sig.positive < b.sig.positive;
        if (a.sig.negative != b.sig.negative) return a.sig.negative < b.sig.negative;
        return a.factors < b.factors;
    }
};

BlockKey key_of(const IMat& g) {
    BlockKey k;
    k.rank = g.rows();
    k.absdet = abs(det_bareiss(g));
    k.sig = signature_of(to_qmat(g));
    k.even = true;
    for (int i = 0; i < g.rows(); ++i)
        if (g(i, i) % 2 != 0) k.even = false;
    k.factors = smith_normal_form(g).invariant_factors();
    return k;
}

class Searcher {
public:
    Searcher(long budget, int max_height) : budget_(budget), max_height_(max_height) {}

    std::optional<IMat> search(const IMat& g1, const IMat& g2);
    long budget() const { return budget_; }

private:
    bool spend(long n = 1) {
        budget_ -= n;
        return budget_ >= 0;
    }

    std::optional<IMat> by_blocks(const IMat& g1, const IMat& g2);
    std::optional<IMat> by_definite_assignment(const IMat& g1, const IMat& g2);
    std::optional<IMat> by_hyperbolic_split(const IMat& g1, const IMat& g2);
    std::optional<IMat> by_box_assignment(const IMat& g1, const IMat& g2);

    // all v with v^T a v = t, a positive definite (exact Fincke-Pohst)
    std::vector<VecI> vectors_of_norm(const IMat& a, const Int& t);
    // isotropic pairs (x, y), x primitive, x.y = c > 0, y isotropic
    struct Split {
        VecI x, y;
        Int c;
        IMat s;  // unimodular: rows x, y, kernel complement
        IMat rest;
    };
    std::vector<Split> find_splits(const IMat& g, int want);

    long budget_;
    int max_height_;
};

std::optional<IMat> Searcher::search(const IMat& g1, const IMat& g2) {
    int n = g1.rows();
    if (n == 0) return IMat(0, 0);
    if (budget_ < 0) return std::nullopt;
    if (g1 == g2) return IMat::identity(n);

    Signature sig = signature_of(to_qmat(g1));
    if (auto p = by_blocks(g1, g2)) return p;
    if (sig.zero == 0 && (sig.positive == n || sig.negative == n))
        return by_definite_assignment(g1, g2);
    if (auto p = by_hyperbolic_split(g1, g2)) return p;
    if (n <= 4) return by_box_assignment(g1, g2);
    return std::nullopt;
}

std::optional<IMat> Searcher::by_blocks(const IMat& g1, const IMat& g2) {
    auto c1 = components(g1), c2 = components(g2);
    if (c1.size() < 2 && c2.size() < 2) return std::nullopt;
    if (c1.size() != c2.size()) return std::nullopt;
    int m = int(c1.size());
    std::vector<BlockKey> k1(m), k2(m);
    std::vector<IMat> b1(m), b2(m);
    for (int i = 0; i < m; ++i) {
        b1[i] = g1.select(c1[i], c1[i]);
        b2[i] = g2.select(c2[i], c2[i]);
        k1[i] = key_of(b1[i]);
        k2[i] = key_of(b2[i]);
    }
    {
        auto s1 = k1, s2 = k2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (!(s1 == s2)) return std::nullopt;
    }
    // match components of g2 to components of g1 by key, backtracking on ties
    std::vector<int> assign(m, -1);
    std::vector<bool> used(m, false);
    std::vector<IMat> wit(m);
    auto dfs = [&](auto&& self, int j) -> bool {
        if (j == m) return true;
        for (int i = 0; i < m; ++i) {
            if (used[i] || !(k1[i] == k2[j])) continue;
            Searcher sub(budget_, max_height_);
            if (auto p = sub.search(b1[i], b2[j])) {
                budget_ = sub.budget();
                used[i] = true;
                assign[j] = i;
                wit[j] = *p;
                if (self(self, j + 1)) return true;
                used[i] = false;
            } else {
                budget_ = sub.budget();
            }
            if (budget_ < 0) return false;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    IMat p(g1.rows(), g2.rows());
    for (int j = 0; j < m; ++j) {
        const auto& rows = c1[assign[j]];
        const auto& cols = c2[j];
        for (size_t a = 0; a < rows.size(); ++a)
            for (size_t b = 0; b < cols.size(); ++b)
                p(rows[a], int(cols[b])) = wit[j](int(a), int(b));
    }
    return p;
}

std::vector<VecI> Searcher::vectors_of_norm(const IMat& a, const Int& t) {
    int n = a.rows();
    std::vector<VecI> out;
    if (t < 0) return out;
    // a = r^T diag(d) r with r unit upper triangular (exact LDL^T)
    QMat r = QMat::identity(n);
    std::vector<Rat> d(n);
    QMat w = to_qmat(a);
    for (int i = 0; i < n; ++i) {
        Rat di = w(i, i);
        for (int k = 0; k < i; ++k) di -= d[k] * r(k, i) * r(k, i);
        d[i] = di;
        if (!(di > Rat(0))) throw std::logic_error("vectors_of_norm: not positive definite");
        for (int j = i + 1; j < n; ++j) {
            Rat v = w(i, j);
            for (int k = 0; k < i; ++k) v -= d[k] * r(k, i) * r(k, j);
            r(i, j) = v / di;
        }
    }
    VecI v(n, Int(0));
    // descend from the last coordinate; rem = remaining norm budget
    auto rec = [&](auto&& self, int i, const Rat& rem) -> void {
        if (budget_ < 0) return;
        if (i < 0) {
            if (rem.is_zero()) out.push_back(v);
            return;
        }
        Rat center(0);
        for (int j = i + 1; j < n; ++j)
            if (v[j] != 0) center += r(i, j) * Rat(v[j]);
        Rat beta = rem / d[i];  // (v_i + center)^2 <= beta
        Int step = isqrt(beta.floor()) + 1;
        Int lo = (-center).floor() - step;
        Int hi = (-center).floor() + step + 1;
        for (Int c = lo; c <= hi; ++c) {
            if (!spend()) return;
            Rat off = Rat(c) + center;
            Rat contrib = d[i] * off * off;
            if (contrib > rem) continue;
            v[i] = c;
            self(self, i - 1, rem - contrib);
        }
        v[i] = 0;
    };
    rec(rec, n - 1, Rat(t));
    return out;
}

std::optional<IMat> Searcher::by_definite_assignment(const IMat& g1, const IMat& g2) {
    int n = g1.rows();
    bool flip = g1(0, 0) < 0;
    IMat a1 = flip ? g1 * Int(-1) : g1;
    IMat a2 = flip ? g2 * Int(-1) : g2;
    std::map<Int, std::vector<VecI>> by_norm;
    for (int i = 0; i < n; ++i) {
        Int t = a2(i, i);
        if (!by_norm.count(t)) by_norm[t] = vectors_of_norm(a1, t);
    }
    std::vector<VecI> chosen;
    auto dfs = [&](auto&& self, int i) -> bool {
        if (budget_ < 0) return false;
        if (i == n) return true;
        for (const auto& cand : by_norm[a2(i, i)]) {
            if (!spend()) return false;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = inner(a1, cand, chosen[j]) == a2(i, j);
            if (!ok) continue;
            chosen.push_back(cand);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    IMat p(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) p(i, j) = chosen[j][i];
    Int d = det_bareiss(p);
    if (d != 1 && d != -1) return std::nullopt;
    return p;
}

std::vector<Searcher::Split> Searcher::find_splits(const IMat& g, int want) {
    int n = g.rows();
    std::vector<Split> out;
    std::vector<VecI> isotropic;
    for (int h = 1; h <= max_height_ && int(out.size()) < want; ++h) {
        isotropic.clear();
        VecI v(n, Int(0));
        // odometer over the box [-h, h]^n
        std::vector<long> idx(n, -h);
        while (true) {
            if (!spend()) return out;
            for (int i = 0; i < n; ++i) v[i] = idx[i];
            bool nonzero = false;
            int first = 0;
            for (int i = n - 1; i >= 0; --i)
                if (v[i] != 0) { nonzero = true; first = i; }
            if (nonzero && v[first] > 0) {  // sign dedup
                Int gg(0);
                for (const auto& c : v) gg = gcd(gg, c);
                if (gg == 1 && inner(g, v, v) == 0) isotropic.push_back(v);
            }
            int pos = 0;
            while (pos < n && ++idx[pos] > h) idx[pos++] = -h;
            if (pos == n) break;
        }
        for (const auto& x : isotropic) {
            for (const auto& yraw : isotropic) {
                for (int sgn = 1; sgn >= -1; sgn -= 2) {
                    if (!spend()) return out;
                    VecI y(n);
                    for (int i = 0; i < n; ++i) y[i] = sgn * yraw[i];
                    Int c = inner(g, x, y);
                    if (c <= 0) continue;
                    IMat pair(n, 2);
                    for (int i = 0; i < n; ++i) {
                        pair(i, 0) = x[i];
                        pair(i, 1) = y[i];
                    }
                    IMat ker = integer_left_kernel(g * pair);
                    if (ker.rows() != n - 2) continue;
                    IMat s(n, n);
                    for (int j = 0; j < n; ++j) {
                        s(0, j) = x[j];
                        s(1, j) = y[j];
                    }
                    for (int i = 0; i < n - 2; ++i)
                        for (int j = 0; j < n; ++j) s(2 + i, j) = ker(i, j);
                    Int d = det_bareiss(s);
                    if (d != 1 && d != -1) continue;
                    Split sp;
                    sp.x = x;
                    sp.y = y;
                    sp.c = c;
                    sp.s = s;
                    sp.rest = ker * g * ker.transpose();
                    out.push_back(std::move(sp));
                    if (int(out.size()) >= want) return out;
                }
            }
        }
    }
    return out;
}

std::optional<IMat> Searcher::by_hyperbolic_split(const IMat& g1, const IMat& g2) {
    auto splits2 = find_splits(g2, 4);
    if (splits2.empty()) return std::nullopt;
    std::stable_sort(splits2.begin(), splits2.end(),
                     [](const Split& a, const Split& b) { return a.c < b.c; });
    auto splits1 = find_splits(g1, 16);
    for (const auto& s2 : splits2) {
        if (budget_ < 0) return std::nullopt;
        for (const auto& s1 : splits1) {
            if (s1.c != s2.c) continue;
            Searcher sub(budget_, max_height_);
            auto q = sub.search(s1.rest, s2.rest);
            budget_ = sub.budget();
            if (!q) continue;
            int n = g1.rows();
            // columns of xmat: images of the split basis of g2
            IMat xmat(n, n);
            for (int i = 0; i < n; ++i) {
                xmat(i, 0) = s1.x[i];
                xmat(i, 1) = s1.y[i];
            }
            for (int j = 0; j + 2 < n; ++j)
                for (int i = 0; i < n; ++i) {
                    Int acc(0);
                    for (int r = 0; r + 2 < n; ++r)
                        acc += s1.s(2 + r, i) * (*q)(r, j);
                    xmat(i, 2 + j) = acc;
                }
            IMat s2inv = to_imat(inverse(to_qmat(s2.s)));
            IMat p = xmat * s2inv.transpose();
            QMat pq = to_qmat(p);
            if (pq.transpose() * to_qmat(g1) * pq == to_qmat(g2)) return p;
        }
    }
    return std::nullopt;
}

std::optional<IMat> Searcher::by_box_assignment(const IMat& g1, const IMat& g2) {
    int n = g1.rows();
    for (int h = 1; h <= max_height_; ++h) {
        // candidate image vectors per target norm
        std::map<Int, std::vector<VecI>> by_norm;
        for (int i = 0; i < n; ++i) by_norm[g2(i, i)];
        VecI v(n, Int(0));
        std::vector<long> idx(n, -h);
        while (true) {
            if (!spend()) return std::nullopt;
            for (int i = 0; i < n; ++i) v[i] = idx[i];
            bool nonzero = false;
            for (int i = 0; i < n; ++i)
                if (v[i] != 0) nonzero = true;
            if (nonzero) {
                Int t = inner(g1, v, v);
                auto it = by_norm.find(t);
                if (it != by_norm.end()) it->second.push_back(v);
            }
            int pos = 0;
            while (pos < n && ++idx[pos] > h) idx[pos++] = -h;
            if (pos == n) break;
        }
        std::vector<VecI> chosen;
        auto dfs = [&](auto&& self, int i) -> bool {
            if (budget_ < 0) return false;
            if (i == n) return true;
            for (const auto& cand : by_norm[g2(i, i)]) {
                if (!spend()) return false;
                bool ok = true;
                for (int j = 0; j < i && ok; ++j)
                    ok = inner(g1, cand, chosen[j]) == g2(i, j);
                if (!ok) continue;
                chosen.push_back(cand);
                if (self(self, i + 1)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (dfs(dfs, 0)) {
            IMat p(n, n);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) p(i, j) = chosen[j][i];
            Int d = det_bareiss(p);
            if (d == 1 || d == -1) return p;
        }
        if (budget_ < 0) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

IsometryResult find_isometry(const IMat& g1, const IMat& g2,
                             const IsometryOptions& opt) {
    IsometryResult res;
    if (!g1.is_symmetric() || !g2.is_symmetric())
        throw std::invalid_argument("find_isometry: matrices must be symmetric");
    if (g1.rows() != g2.rows()) {
        res.status = IsometryStatus::not_isometric;
        res.note = "rank mismatch";
        return res;
    }
    Lattice l1(g1), l2(g2);
    if (abs(l1.det()) != abs(l2.det())) {
        res.status = IsometryStatus::not_isometric;
        res.note = "determinant mismatch: |" + l1.det().get_str() + "| vs |" +
                   l2.det().get_str() + "|";
        return res;
    }
    if (!(signature_of(l1) == signature_of(l2))) {
        res.status = IsometryStatus::not_isometric;
        res.note = "signature mismatch";
        return res;
    }
    if (is_even(l1) != is_even(l2)) {
        res.status = IsometryStatus::not_isometric;
        res.note = "parity mismatch";
        return res;
    }
    if (l1.det() != 0 && abs(l1.det()) <= 100000) {
        GenusFingerprint f1 = genus_invariants(l1), f2 = genus_invariants(l2);
        if (!(f1 == f2)) {
            res.status = IsometryStatus::not_isometric;
            res.note = "discriminant form mismatch";
            return res;
        }
    }
    Searcher searcher(opt.budget, opt.max_height);
    if (auto p = searcher.search(g1, g2)) {
        if (!verify_isometry(to_qmat(g1), to_qmat(g2), *p))
            throw std::logic_error("find_isometry: witness failed validation");
        res.status = IsometryStatus::found;
        res.witness = *p;
        return res;
    }
    res.status = IsometryStatus::unknown;
    res.note = "search budget exhausted";
    return res;
}

}  // namespace k3seq::lattices
