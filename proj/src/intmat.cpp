#include "pairlat/intmat.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace pairlat {

IMat imat_identity(int n) {
    IMat I(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

IMat imat_mul(const IMat& A, const IMat& B) {
    int n = (int)A.size(), m = (int)B[0].size(), k = (int)B.size();
    IMat C(n, IVec(m, 0));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l) {
            if (A[i][l] == 0) continue;
            for (int j = 0; j < m; ++j) C[i][j] += A[i][l] * B[l][j];
        }
    return C;
}

IVec imat_mul_vec(const IMat& A, const IVec& x) {
    IVec y(A.size(), 0);
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] += A[i][j] * x[j];
    return y;
}

IMat imat_transpose(const IMat& A) {
    if (A.empty()) return A;
    IMat T(A[0].size(), IVec(A.size()));
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A[0].size(); ++j) T[j][i] = A[i][j];
    return T;
}

bool imat_is_symmetric(const IMat& A) {
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (A[i][j] != A[j][i]) return false;
    return true;
}

Int imat_det(const IMat& A0) {
    int n = (int)A0.size();
    if (n == 0) return 1;
    IMat A = A0;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (A[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (A[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(A[k], A[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
        prev = A[k][k];
    }
    return sign > 0 ? A[n - 1][n - 1] : -A[n - 1][n - 1];
}

namespace {

struct SmithWork {
    IMat A;
    IMat Uinv, V;

    void row_swap(int i, int j) {
        std::swap(A[i], A[j]);
        for (auto& r : Uinv) std::swap(r[i], r[j]);  // column swap on Uinv
    }
    void row_add(int i, int j, const Int& k) {  // row_i += k*row_j
        for (size_t c = 0; c < A[i].size(); ++c) A[i][c] += k * A[j][c];
        for (auto& r : Uinv) r[j] -= k * r[i];  // col_j -= k*col_i
    }
    void row_neg(int i) {
        for (auto& x : A[i]) x = -x;
        for (auto& r : Uinv) r[i] = -r[i];
    }
    void col_swap(int i, int j) {
        for (auto& r : A) std::swap(r[i], r[j]);
        for (auto& r : V) std::swap(r[i], r[j]);
    }
    void col_add(int i, int j, const Int& k) {  // col_i += k*col_j
        for (auto& r : A) r[i] += k * r[j];
        for (auto& r : V) r[i] += k * r[j];
    }
    void col_neg(int i) {
        for (auto& r : A) r[i] = -r[i];
        for (auto& r : V) r[i] = -r[i];
    }
};

}  // namespace

SmithResult smith(IMat A0) {
    int n = (int)A0.size();
    int m = n ? (int)A0[0].size() : 0;
    SmithWork w{std::move(A0), imat_identity(n), imat_identity(m)};
    int rank = std::min(n, m);

    for (int s = 0; s < rank; ++s) {
        // pivot: bring a minimal nonzero entry of the trailing block to (s,s)
        for (;;) {
            int bi = -1, bj = -1;
            for (int i = s; i < n; ++i)
                for (int j = s; j < m; ++j)
                    if (w.A[i][j] != 0) {
                        if (bi < 0 || abs(w.A[i][j]) < abs(w.A[bi][bj])) { bi = i; bj = j; }
                    }
            if (bi < 0) { rank = s; break; }
            if (bi != s) w.row_swap(s, bi);
            if (bj != s) w.col_swap(s, bj);
            if (w.A[s][s] < 0) w.row_neg(s);

            bool clean = true;
            for (int i = s + 1; i < n; ++i) {
                Int q = w.A[i][s] / w.A[s][s];
                if (q != 0) w.row_add(i, s, -q);
                if (w.A[i][s] != 0) clean = false;
            }
            for (int j = s + 1; j < m; ++j) {
                Int q = w.A[s][j] / w.A[s][s];
                if (q != 0) w.col_add(j, s, -q);
                if (w.A[s][j] != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility pass: pivot must divide the rest of the block
            bool fixed = false;
            for (int i = s + 1; i < n && !fixed; ++i)
                for (int j = s + 1; j < m && !fixed; ++j)
                    if (w.A[i][j] % w.A[s][s] != 0) {
                        w.row_add(s, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (rank == s) break;
    }

    SmithResult r;
    r.d.assign(std::min(n, m), 0);
    for (int i = 0; i < (int)r.d.size(); ++i) r.d[i] = i < rank ? w.A[i][i] : 0;
    r.Uinv = std::move(w.Uinv);
    r.V = std::move(w.V);
    return r;
}

std::vector<Int> invariant_factors(const IMat& A) {
    auto s = smith(A);
    std::vector<Int> out;
    for (auto& d : s.d)
        if (d != 0) out.push_back(d);
    return out;
}

std::vector<IVec> int_kernel(const IMat& A) {
    int m = (int)A[0].size();
    auto s = smith(A);
    std::vector<IVec> ker;
    for (int j = 0; j < m; ++j) {
        bool zero = j >= (int)s.d.size() || s.d[j] == 0;
        if (!zero) continue;
        IVec col(m);
        for (int i = 0; i < m; ++i) col[i] = s.V[i][j];
        ker.push_back(std::move(col));
    }
    return ker;
}

std::optional<QVec> solve_rational(const IMat& A, const QVec& b) {
    int n = (int)A.size(), m = (int)A[0].size();
    QMat M(n, QVec(m + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) M[i][j] = Rat(A[i][j]);
        M[i][m] = b[i];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < m && row < n; ++col) {
        int p = -1;
        for (int i = row; i < n; ++i)
            if (!M[i][col].is_zero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(M[p], M[row]);
        Rat inv = Rat(1) / M[row][col];
        for (int j = col; j <= m; ++j) M[row][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == row || M[i][col].is_zero()) continue;
            Rat f = M[i][col];
            for (int j = col; j <= m; ++j) M[i][j] -= f * M[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < n; ++i)
        if (!M[i][m].is_zero()) return std::nullopt;
    QVec x(m, Rat(0));
    for (int i = 0; i < row; ++i) x[pivot_col[i]] = M[i][m];
    return x;
}

Signature signature_of(const QMat& G0) {
    QMat G = G0;
    int n = (int)G.size();
    Signature sig;
    std::vector<bool> used(n, false);
    for (int step = 0; step < n; ++step) {
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (!used[i] && !G[i][i].is_zero()) { p = i; break; }
        if (p < 0) {
            // all remaining diagonal entries vanish; couple an off-diagonal pair
            int a = -1, b = -1;
            for (int i = 0; i < n && a < 0; ++i) {
                if (used[i]) continue;
                for (int j = 0; j < n; ++j)
                    if (!used[j] && j != i && !G[i][j].is_zero()) { a = i; b = j; break; }
            }
            if (a < 0) {
                for (int i = 0; i < n; ++i)
                    if (!used[i]) ++sig.zero;
                return sig;
            }
            for (int j = 0; j < n; ++j) G[a][j] += G[b][j];
            for (int i = 0; i < n; ++i) G[i][a] += G[i][b];
            p = a;
        }
        used[p] = true;
        Rat d = G[p][p];
        if (d.sign() > 0) ++sig.pos; else ++sig.neg;
        for (int i = 0; i < n; ++i) {
            if (used[i] || G[i][p].is_zero()) continue;
            Rat f = G[i][p] / d;
            for (int j = 0; j < n; ++j) G[i][j] -= f * G[p][j];
            for (int j = 0; j < n; ++j) G[j][i] = G[i][j];  // keep symmetric
        }
    }
    return sig;
}

Signature signature_of(const IMat& G) { return signature_of(qmat_from(G)); }

QMat qmat_from(const IMat& A) {
    QMat Q(A.size());
    for (size_t i = 0; i < A.size(); ++i) {
        Q[i].reserve(A[i].size());
        for (auto& x : A[i]) Q[i].push_back(Rat(x));
    }
    return Q;
}

IMat extend_to_unimodular(const IVec& c) {
    // reduce c to e1 by elementary ops E, maintaining Binv * E^{-1};
    // at the end Binv has first column c and det +-1
    int n = (int)c.size();
    IVec v = c;
    IMat Binv = imat_identity(n);
    auto add = [&](int i, int j, const Int& k) {  // v_i += k*v_j
        v[i] += k * v[j];
        for (int r = 0; r < n; ++r) Binv[r][j] -= k * Binv[r][i];
    };
    auto swp = [&](int i, int j) {
        std::swap(v[i], v[j]);
        for (int r = 0; r < n; ++r) std::swap(Binv[r][i], Binv[r][j]);
    };
    auto neg = [&](int i) {
        v[i] = -v[i];
        for (int r = 0; r < n; ++r) Binv[r][i] = -Binv[r][i];
    };
    for (;;) {
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (v[i] != 0 && (p < 0 || abs(v[i]) < abs(v[p]))) p = i;
        if (p < 0) throw std::domain_error("extend_to_unimodular: zero vector");
        if (v[p] < 0) neg(p);
        bool done = true;
        for (int i = 0; i < n; ++i) {
            if (i == p || v[i] == 0) continue;
            add(i, p, -(v[i] / v[p]));
            if (v[i] != 0) done = false;
        }
        if (done) {
            if (v[p] != 1) throw std::domain_error("extend_to_unimodular: vector not primitive");
            if (p != 0) swp(0, p);
            return Binv;
        }
    }
}

}  // namespace pairlat
