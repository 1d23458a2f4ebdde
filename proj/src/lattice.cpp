#include "k3seq/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3seq::lattices {

Lattice::Lattice(IMat g, std::string l) : gram(std::move(g)), label(std::move(l)) {
    if (!gram.is_symmetric())
        throw std::invalid_argument("Lattice: Gram matrix must be symmetric");
}

Lattice Lattice::twist(const Int& n) const {
    if (n == 0) throw std::invalid_argument("Lattice::twist: zero scale");
    Lattice t(gram * n, label.empty() ? "" : label + "(" + n.get_str() + ")");
    return t;
}

Signature signature_of(const QMat& gram) {
    if (!gram.is_symmetric())
        throw std::invalid_argument("signature: matrix must be symmetric");
    QMat s = gram;
    int n = s.rows();
    Signature sig;
    for (int k = 0; k < n;) {
        // find a usable pivot on the diagonal
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!s(i, i).is_zero()) { piv = i; break; }
        if (piv < 0) {
            // all trailing diagonal zero; look for an off-diagonal entry
            int a = -1, b = -1;
            for (int i = k; i < n && a < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (!s(i, j).is_zero()) { a = i; b = j; break; }
            if (a < 0) {
                sig.zero += n - k;
                break;
            }
            // e_a += e_b turns the diagonal entry into 2*s(a,b)
            s.add_row(a, b, Rat(1));
            s.add_col(a, b, Rat(1));
            piv = a;
        }
        if (piv != k) {
            s.swap_rows(k, piv);
            s.swap_cols(k, piv);
        }
        if (s(k, k).sign() > 0) ++sig.positive; else ++sig.negative;
        Rat inv = s(k, k).inv();
        for (int i = k + 1; i < n; ++i) {
            if (s(i, k).is_zero()) continue;
            Rat f = s(i, k) * inv;
            s.add_row(i, k, -f);
            s.add_col(i, k, -f);
        }
        ++k;
    }
    return sig;
}

Signature signature_of(const Lattice& l) { return signature_of(to_qmat(l.gram)); }

bool is_even(const Lattice& l) {
    for (int i = 0; i < l.rank(); ++i)
        if (l.gram(i, i) % 2 != 0) return false;
    return true;
}

namespace {

IMat root_gram(int n, const std::vector<std::pair<int, int>>& edges) {
    IMat g(n, n);
    for (int i = 0; i < n; ++i) g(i, i) = 2;
    for (auto [a, b] : edges) {
        g(a - 1, b - 1) = -1;
        g(b - 1, a - 1) = -1;
    }
    return g;
}

std::vector<std::pair<int, int>> chain_edges(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return e;
}

}  // namespace

Lattice make_named(const std::string& name, const Int& twist) {
    if (twist == 0) throw std::invalid_argument("make_named: zero twist");
    IMat g;
    if (name == "U") {
        g = IMat{{Int(0), Int(1)}, {Int(1), Int(0)}};
    } else if (name.size() >= 2 && name[0] == 'A') {
        int n = std::stoi(name.substr(1));
        if (n < 1) throw std::invalid_argument("make_named: bad rank in " + name);
        g = root_gram(n, chain_edges(n));
    } else if (name == "E6" || name == "E7" || name == "E8") {
        int n = name[1] - '0';
        auto edges = chain_edges(n - 1);
        edges.emplace_back(3, n);
        g = root_gram(n, edges);
    } else {
        throw std::invalid_argument("make_named: unknown lattice name " + name);
    }
    std::string label = name;
    if (twist != 1) label += "(" + twist.get_str() + ")";
    return Lattice(g * twist, label);
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
    int n = 0;
    for (const auto& p : parts) n += p.rank();
    IMat g(n, n);
    std::string label;
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.rank(); ++i)
            for (int j = 0; j < p.rank(); ++j) g(off + i, off + j) = p.gram(i, j);
        off += p.rank();
        if (!p.label.empty()) label += (label.empty() ? "" : "+") + p.label;
    }
    return Lattice(std::move(g), label);
}

namespace {

// canonical representative of r modulo m > 0, in [0, m)
Rat mod_reduce(const Rat& r, const Rat& m) {
    Rat q = r / m;
    return r - m * Rat(q.floor());
}

}  // namespace

Int DiscGroup::order() const {
    Int o(1);
    for (const auto& d : invariant_factors) o *= d;
    return o;
}

DiscGroup disc_group(const Lattice& l) {
    if (l.det() == 0) throw std::domain_error("disc_group: degenerate lattice");
    SmithResult snf = smith_normal_form(l.gram);
    DiscGroup dg;
    int n = l.rank();
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (snf.d(i, i) > 1) {
            dg.invariant_factors.push_back(snf.d(i, i));
            keep.push_back(i);
        }
    int k = int(keep.size());
    dg.generators = QMat(k, n);
    for (int r = 0; r < k; ++r)
        for (int j = 0; j < n; ++j)
            dg.generators(r, j) = Rat(snf.v(j, keep[r]), snf.d(keep[r], keep[r]));
    const Rat qmod = is_even(l) ? Rat(2) : Rat(1);
    QMat gq = to_qmat(l.gram);
    QMat vals = dg.generators * gq * dg.generators.transpose();
    dg.qvalues.resize(k);
    dg.pairings = QMat(k, k);
    for (int i = 0; i < k; ++i) {
        dg.qvalues[i] = mod_reduce(vals(i, i), qmod);
        for (int j = 0; j < k; ++j)
            dg.pairings(i, j) = mod_reduce(vals(i, j), Rat(1));
    }
    return dg;
}

std::vector<Int> elementary_divisors(const std::vector<Int>& invariant_factors) {
    std::vector<Int> out;
    for (const auto& f : invariant_factors) {
        Int rest = f;
        for (Int p(2); rest > 1; ++p) {
            if (p * p > rest) {  // remaining part is prime
                out.push_back(rest);
                break;
            }
            Int power(1);
            while (rest % p == 0) {
                rest /= p;
                power *= p;
            }
            if (power > 1) out.push_back(power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int disc_element_order(const QMat& row) {
    Int d(1);
    for (int j = 0; j < row.cols(); ++j) d = lcm(d, row(0, j).den());
    return d;
}

bool verify_disc_generators(const Lattice& l, const QMat& gens,
                            const std::vector<Int>& claimed_orders) {
    if (gens.rows() != int(claimed_orders.size()))
        throw std::invalid_argument("verify_disc_generators: order count mismatch");
    int n = l.rank();
    if (gens.rows() > 0 && gens.cols() != n)
        throw std::invalid_argument("verify_disc_generators: dimension mismatch");
    QMat gq = to_qmat(l.gram);
    // membership in the dual lattice: pairings with the basis are integral
    for (int i = 0; i < gens.rows(); ++i) {
        QMat row(1, n);
        for (int j = 0; j < n; ++j) row(0, j) = gens(i, j);
        QMat paired = row * gq;
        for (int j = 0; j < n; ++j)
            if (!paired(0, j).is_integer()) return false;
        if (disc_element_order(row) != claimed_orders[i]) return false;
    }
    // generation: map each generator to coordinates in the SNF presentation
    // Z^n / D Z^n of the discriminant group, then check the subgroup fills it.
    SmithResult snf = smith_normal_form(l.gram);
    QMat vinv = inverse(to_qmat(snf.v));
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (snf.d(i, i) > 1) keep.push_back(i);
    int k = int(keep.size());
    if (k == 0) return true;  // trivial group: anything generates
    IMat stacked(gens.rows() + k, k);
    for (int i = 0; i < gens.rows(); ++i) {
        // z = D V^-1 x  for the column vector x = gens row i
        for (int r = 0; r < k; ++r) {
            Rat z(0);
            for (int j = 0; j < n; ++j) z += vinv(keep[r], j) * gens(i, j);
            z *= Rat(snf.d(keep[r], keep[r]));
            if (!z.is_integer())
                throw std::invalid_argument("verify_disc_generators: vector not in dual");
            stacked(i, r) = z.num();
        }
    }
    for (int r = 0; r < k; ++r) stacked(gens.rows() + r, r) = snf.d(keep[r], keep[r]);
    auto inv = smith_normal_form(stacked).invariant_factors();
    if (int(inv.size()) < k) return false;
    for (const auto& f : inv)
        if (f != 1) return false;
    return true;
}

SpanInAmbient orth_complement(const SpanInAmbient& span) {
    if (span.ambient.det() == 0)
        throw std::domain_error("orth_complement: degenerate ambient");
    IMat m = span.ambient.gram * span.basis.transpose();
    IMat ker = integer_left_kernel(m);
    return SpanInAmbient{span.ambient, ker};
}

bool is_primitive(const SpanInAmbient& span) {
    auto inv = smith_normal_form(span.basis).invariant_factors();
    if (int(inv.size()) != span.basis.rows()) return false;  // dependent rows
    for (const auto& f : inv)
        if (f != 1) return false;
    return true;
}

QMat gram_of_span(const IMat& ambient_gram, const QMat& rows) {
    return rows * to_qmat(ambient_gram) * rows.transpose();
}

QMat gram_of_span(const SpanInAmbient& span) {
    return gram_of_span(span.ambient.gram, to_qmat(span.basis));
}

QMat intersect_with_subspace(const QMat& gens, const QMat& subspace) {
    if (gens.cols() != subspace.cols())
        throw std::invalid_argument("intersect_with_subspace: ambient mismatch");
    int n = gens.cols();
    // v in Q-span(subspace)  <=>  v . N = 0 for N spanning the Euclidean
    // kernel of the subspace matrix.
    QMat nker = left_kernel(subspace.transpose());  // rows w with subspace w^T = 0
    QMat m = gens * nker.transpose();               // g x (n - s)
    Int dm = denominator_lcm(m);
    IMat mz = to_imat(m * Rat(dm));
    IMat xs = integer_left_kernel(mz);  // rows x with x m = 0
    QMat rows = to_qmat(xs) * gens;
    // canonical basis: clear denominators, HNF, restore scale, drop zero rows
    Int d = denominator_lcm(rows);
    HermiteResult hr = hermite_normal_form(to_imat(rows * Rat(d)));
    QMat out(hr.rank, n);
    for (int i = 0; i < hr.rank; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = Rat(hr.h(i, j), d);
    return out;
}

GenusFingerprint genus_invariants(const Lattice& l) {
    if (l.det() == 0) throw std::domain_error("genus_invariants: degenerate lattice");
    GenusFingerprint fp;
    fp.sig = signature_of(l);
    fp.even = is_even(l);
    DiscGroup dg = disc_group(l);
    fp.invariant_factors = dg.invariant_factors;
    Int order = dg.order();
    if (order > 1000000)
        throw std::domain_error("genus_invariants: discriminant group too large");
    const Rat qmod = fp.even ? Rat(2) : Rat(1);
    QMat gq = to_qmat(l.gram);
    int k = dg.generators.rows();
    int n = l.rank();
    // enumerate the whole group as integer combinations of the generators
    std::vector<Int> counter(k, 0);
    while (true) {
        QMat x(1, n);
        for (int r = 0; r < k; ++r)
            for (int j = 0; j < n; ++j)
                x(0, j) += Rat(counter[r]) * dg.generators(r, j);
        QMat v = x * gq * x.transpose();
        fp.qvals.push_back(mod_reduce(v(0, 0), qmod));
        int pos = 0;
        while (pos < k) {
            counter[pos] += 1;
            if (counter[pos] < dg.invariant_factors[pos]) break;
            counter[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
        if (k == 0) break;
    }
    std::sort(fp.qvals.begin(), fp.qvals.end());
    return fp;
}

std::string GenusFingerprint::str() const {
    std::ostringstream os;
    os << "sig(" << sig.positive << "," << sig.negative << "," << sig.zero << ") "
       << (even ? "even" : "odd") << " factors[";
    for (size_t i = 0; i < invariant_factors.size(); ++i)
        os << (i ? "," : "") << invariant_factors[i].get_str();
    os << "] q[";
    for (size_t i = 0; i < qvals.size(); ++i) os << (i ? "," : "") << qvals[i].str();
    os << "]";
    return os.str();
}

}  // namespace k3seq::lattices
