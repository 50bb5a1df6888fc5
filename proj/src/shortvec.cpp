#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "pairlat/lattice.hpp"

namespace pairlat {

namespace {

// LDL data of a positive definite rational form:
//   Q(x) = sum_k d_k (x_k + sum_{j>k} u_kj x_j)^2
struct Ldl {
    int n = 0;
    QVec d;
    QMat u;
};

Ldl ldl_decompose(QMat A) {
    Ldl out;
    out.n = (int)A.size();
    out.d.assign(out.n, Rat(0));
    out.u.assign(out.n, QVec(out.n, Rat(0)));
    for (int k = 0; k < out.n; ++k) {
        out.d[k] = A[k][k];
        if (out.d[k].sign() <= 0) throw std::invalid_argument("ldl: form not positive definite");
        for (int j = k + 1; j < out.n; ++j) out.u[k][j] = A[k][j] / out.d[k];
        for (int i = k + 1; i < out.n; ++i)
            for (int j = k + 1; j < out.n; ++j) A[i][j] -= A[k][i] * A[k][j] / out.d[k];
    }
    return out;
}

Int isqrt_floor(const Int& v) {
    if (v < 0) return -1;
    return boost::multiprecision::sqrt(v);
}

// largest integer <= sqrt(r), r >= 0
Int sqrt_floor(const Rat& r) {
    // floor(sqrt(p/q)) = floor(sqrt(p*q)/q)
    Int pq = r.num() * r.den();
    return isqrt_floor(pq) / r.den();
}

// enumerate x in Z^n with Q(x + shift) <= bound
void enumerate(const Ldl& L, const QVec& shift, const Rat& bound,
               const std::function<void(const std::vector<long long>&)>& fn) {
    int n = L.n;
    std::vector<long long> x(n, 0);
    QVec remaining(n + 1, Rat(0));
    remaining[n] = bound;

    // descend from coordinate n-1 to 0
    std::function<void(int)> go = [&](int k) {
        if (k < 0) {
            fn(x);
            return;
        }
        // c_k = shift_k + sum_{j>k} u_kj (x_j + shift_j)
        Rat c = shift[k];
        for (int j = k + 1; j < n; ++j) c += L.u[k][j] * (Rat(x[j]) + shift[j]);
        const Rat& rem = remaining[k + 1];
        if (rem.sign() < 0) return;
        // d_k (x_k + c)^2 <= rem
        Rat radius2 = rem / L.d[k];
        Int lo, hi;
        {
            Int s = sqrt_floor(radius2);
            // bounds: -c - sqrt <= x_k <= -c + sqrt; refine endpoints exactly
            Rat a = -c - Rat(s) - Rat(1), b = -c + Rat(s) + Rat(1);
            lo = a.ceil();
            hi = b.floor();
        }
        for (Int v = lo; v <= hi; ++v) {
            Rat t = Rat(v) + c;
            Rat used = L.d[k] * t * t;
            if (used > rem) continue;
            x[k] = (long long)v;
            remaining[k] = rem - used;
            go(k - 1);
        }
        x[k] = 0;
    };
    go(n - 1);
}

}  // namespace

std::vector<QVec> coset_vectors_of_norm(const GramLattice& L, const QVec& shift, const Rat& value) {
    // L negative definite; value <= 0; work with Q = -G
    int n = L.rank();
    QMat Q(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Q[i][j] = Rat(-L.gram[i][j]);
    Ldl ldl = ldl_decompose(Q);
    Rat target = -value;
    std::vector<QVec> out;
    enumerate(ldl, shift, target, [&](const std::vector<long long>& x) {
        QVec v(n);
        for (int i = 0; i < n; ++i) v[i] = Rat(x[i]) + shift[i];
        // exact norm check
        Rat s(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (v[i].is_zero() || L.gram[i][j] == 0) continue;
                s += v[i] * Rat(L.gram[i][j]) * v[j];
            }
        if (s == value) out.push_back(std::move(v));
    });
    std::sort(out.begin(), out.end(), [](const QVec& a, const QVec& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (b[i] < a[i]) return false;
        }
        return false;
    });
    return out;
}

std::vector<IVec> vectors_of_norm(const GramLattice& L, const Int& value) {
    QVec shift(L.rank(), Rat(0));
    std::vector<IVec> out;
    for (auto& v : coset_vectors_of_norm(L, shift, Rat(value))) {
        IVec w(L.rank());
        bool nonzero = false;
        for (int i = 0; i < L.rank(); ++i) {
            w[i] = v[i].num();
            nonzero |= w[i] != 0;
        }
        if (nonzero) out.push_back(std::move(w));
    }
    return out;
}

namespace {

// classify one connected component of a root graph by rank and root count
AdeComponent classify_component(int rank, long long nroots) {
    if (nroots == (long long)rank * (rank + 1)) return {'A', rank};
    if (rank >= 4 && nroots == 2LL * rank * (rank - 1)) return {'D', rank};
    if (rank == 6 && nroots == 72) return {'E', 6};
    if (rank == 7 && nroots == 126) return {'E', 7};
    if (rank == 8 && nroots == 240) return {'E', 8};
    throw std::runtime_error("root component is not ADE (rank " + std::to_string(rank) +
                             ", " + std::to_string(nroots) + " roots)");
}

int rank_of_span(const std::vector<IVec>& vecs) {
    if (vecs.empty()) return 0;
    auto inv = smith(vecs).d;
    int r = 0;
    for (auto& d : inv)
        if (d != 0) ++r;
    return r;
}

}  // namespace

RootSystemReport root_system(const GramLattice& L) {
    Signature sig = L.sig();
    if (sig.pos != 0 || sig.zero != 0)
        throw std::invalid_argument("root_system: lattice must be negative definite");
    RootSystemReport rep;
    rep.roots = vectors_of_norm(L, Int(-2));
    rep.count = (long long)rep.roots.size();

    // connected components of the pairing graph
    int m = (int)rep.roots.size();
    std::vector<int> comp(m, -1);
    int ncomp = 0;
    for (int i = 0; i < m; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> stack = {i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b = 0; b < m; ++b) {
                if (comp[b] >= 0) continue;
                if (L.pair(rep.roots[a], rep.roots[b]) != 0) {
                    comp[b] = ncomp;
                    stack.push_back(b);
                }
            }
        }
        ++ncomp;
    }
    for (int c = 0; c < ncomp; ++c) {
        std::vector<IVec> vecs;
        for (int i = 0; i < m; ++i)
            if (comp[i] == c) vecs.push_back(rep.roots[i]);
        rep.components.push_back(classify_component(rank_of_span(vecs), (long long)vecs.size()));
    }
    std::sort(rep.components.begin(), rep.components.end());

    // simple system: positives under a generic functional, minus sums
    if (m > 0) {
        int n = L.rank();
        std::vector<Rat> w(n);
        for (int i = 0; i < n; ++i) w[i] = Rat(boost::multiprecision::pow(Int(1000), i));
        auto functional = [&](const IVec& v) {
            Rat s(0);
            for (int i = 0; i < n; ++i) s += w[i] * Rat(v[i]);
            return s;
        };
        // if some root is orthogonal to w, perturb deterministically
        for (int attempt = 0; attempt < 64; ++attempt) {
            bool ok = true;
            for (const auto& r : rep.roots)
                if (functional(r).is_zero()) { ok = false; break; }
            if (ok) break;
            for (int i = 0; i < n; ++i) w[i] += Rat(Int(attempt + 1), Int(257 + i));
        }
        std::vector<IVec> pos;
        for (const auto& r : rep.roots)
            if (functional(r).sign() > 0) pos.push_back(r);
        auto key = [](const IVec& v) {
            std::string s;
            for (auto& x : v) s += x.str() + ",";
            return s;
        };
        std::unordered_set<std::string> pos_keys;
        for (auto& p : pos) pos_keys.insert(key(p));
        for (const auto& r : pos) {
            bool is_sum = false;
            for (const auto& a : pos) {
                IVec diff(r.size());
                for (size_t i = 0; i < r.size(); ++i) diff[i] = r[i] - a[i];
                bool zero = std::all_of(diff.begin(), diff.end(), [](const Int& x) { return x == 0; });
                if (zero) continue;
                if (pos_keys.count(key(diff))) { is_sum = true; break; }
            }
            if (!is_sum) rep.simple.push_back(r);
        }
    }
    return rep;
}

}  // namespace pairlat
