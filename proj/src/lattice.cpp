#include "pairlat/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace pairlat {

bool GramLattice::is_even() const {
    for (int i = 0; i < rank(); ++i)
        if (gram[i][i] % 2 != 0) return false;
    return true;
}

Int GramLattice::pair(const IVec& x, const IVec& y) const {
    Int s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < rank(); ++j) s += x[i] * gram[i][j] * y[j];
    }
    return s;
}

GramLattice lat_A(int n) {
    if (n < 1) throw std::invalid_argument("A_n: n >= 1");
    IMat g(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) {
        g[i][i] = -2;
        if (i + 1 < n) g[i][i + 1] = g[i + 1][i] = 1;
    }
    return {g, "A" + std::to_string(n)};
}

GramLattice lat_D(int n) {
    if (n < 4) throw std::invalid_argument("D_n: n >= 4");
    // node 0 is the branch node: joined to 1, 2 and 3; 3-4-...-(n-1) a chain
    IMat g(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) g[i][i] = -2;
    g[0][1] = g[1][0] = 1;
    g[0][2] = g[2][0] = 1;
    g[0][3] = g[3][0] = 1;
    for (int i = 3; i + 1 < n; ++i) g[i][i + 1] = g[i + 1][i] = 1;
    return {g, "D" + std::to_string(n)};
}

GramLattice lat_E(int n) {
    if (n < 6 || n > 8) throw std::invalid_argument("E_n: n in {6,7,8}");
    // chain 0-1-...-(n-2) with node n-1 attached to node 2
    IMat g(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) g[i][i] = -2;
    for (int i = 0; i + 1 < n - 1; ++i) g[i][i + 1] = g[i + 1][i] = 1;
    g[2][n - 1] = g[n - 1][2] = 1;
    return {g, "E" + std::to_string(n)};
}

GramLattice lat_U() { return {{{0, 1}, {1, 0}}, "U"}; }

GramLattice lat_U_scaled(long long n) {
    return {{{0, Int(n)}, {Int(n), 0}}, "U(" + std::to_string(n) + ")"};
}

GramLattice lat_rank1(long long k) {
    if (k % 2 != 0) throw std::invalid_argument("<k>: k must be even");
    return {{{Int(k)}}, "<" + std::to_string(k) + ">"};
}

GramLattice lat_T(int p, int q, int r) {
    if (p < 2 || q < 2 || r < 2) throw std::invalid_argument("T_{p,q,r}: arms >= 2");
    // central node 0 with three chains of lengths p-1, q-1, r-1
    int n = p + q + r - 2;
    IMat g(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) g[i][i] = -2;
    int idx = 1;
    for (int arm : {p - 1, q - 1, r - 1}) {
        int prev = 0;
        for (int s = 0; s < arm; ++s) {
            g[prev][idx] = g[idx][prev] = 1;
            prev = idx++;
        }
    }
    return {g, "T(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")"};
}

GramLattice lat_M() {
    // basis (l', e1, ..., e5): l'^2 = e_i^2 = -2, l'.e_i = 1, e_i.e_j = 0
    IMat g(6, IVec(6, 0));
    for (int i = 0; i < 6; ++i) g[i][i] = -2;
    for (int i = 1; i < 6; ++i) g[0][i] = g[i][0] = 1;
    return {g, "M"};
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
    int n = a.rank(), m = b.rank();
    IMat g(n + m, IVec(n + m, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = a.gram[i][j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g[n + i][n + j] = b.gram[i][j];
    std::string name = a.name.empty() || b.name.empty() ? "" : a.name + "+" + b.name;
    return {g, name};
}

GramLattice rescale(const GramLattice& L, long long n) {
    GramLattice out = L;
    for (auto& row : out.gram)
        for (auto& x : row) x *= n;
    out.name = L.name + "(" + std::to_string(n) + ")";
    return out;
}

IVec m_polarization_h() { return {2, 1, 1, 1, 1, 1}; }

IVec m_f_vector(int i) {
    IVec f = m_polarization_h();
    f[i] -= 1;
    return f;
}

// ---- discriminant form ----

Int FiniteQuadraticForm::group_order() const {
    Int n = 1;
    for (auto& d : orders) n *= d;
    return n;
}

Rat FiniteQuadraticForm::q_of(const Elem& x) const {
    Rat s(0);
    for (size_t i = 0; i < orders.size(); ++i) {
        if (x[i] == 0) continue;
        s += Rat(Int(x[i]) * x[i]) * q[i];
        for (size_t j = i + 1; j < orders.size(); ++j)
            s += Rat(2 * Int(x[i]) * x[j]) * b[i][j];
    }
    return s.mod(2);
}

Rat FiniteQuadraticForm::b_of(const Elem& x, const Elem& y) const {
    Rat s(0);
    for (size_t i = 0; i < orders.size(); ++i)
        for (size_t j = 0; j < orders.size(); ++j) {
            if (x[i] == 0 || y[j] == 0) continue;
            s += Rat(Int(x[i]) * y[j]) * b[i][j];
        }
    return s.mod(1);
}

std::vector<FiniteQuadraticForm::Elem> FiniteQuadraticForm::all_elements(long long budget) const {
    Int n = group_order();
    if (n > budget) throw std::runtime_error("finite form: group beyond brute-force budget");
    std::vector<Elem> out;
    Elem cur(orders.size(), 0);
    out.push_back(cur);
    for (;;) {
        size_t i = 0;
        while (i < orders.size()) {
            if (++cur[i] < orders[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == orders.size()) break;
        out.push_back(cur);
    }
    return out;
}

std::vector<FiniteQuadraticForm::Elem> FiniteQuadraticForm::isotropic_elements(long long budget) const {
    std::vector<Elem> out;
    for (auto& e : all_elements(budget))
        if (q_of(e).is_zero()) out.push_back(e);
    return out;
}

FiniteQuadraticForm FiniteQuadraticForm::negated() const {
    FiniteQuadraticForm f = *this;
    for (auto& v : f.q) v = (-v).mod(2);
    for (auto& row : f.b)
        for (auto& v : row) v = (-v).mod(1);
    return f;
}

DiscriminantForm discriminant_form(const GramLattice& L) {
    if (L.is_degenerate()) throw std::invalid_argument("discriminant_form: degenerate lattice");
    int n = L.rank();
    auto sm = smith(L.gram);
    DiscriminantForm D;
    for (int i = 0; i < n; ++i) {
        Int d = sm.d[i];
        if (d == 1) continue;
        // generator lift G^{-1} * Uinv * e_i
        QVec rhs(n);
        for (int r = 0; r < n; ++r) rhs[r] = Rat(sm.Uinv[r][i]);
        auto x = solve_rational(L.gram, rhs);
        if (!x) throw std::runtime_error("discriminant_form: singular Gram");
        D.form.orders.push_back(d);
        D.generator_lifts.push_back(std::move(*x));
    }
    size_t k = D.form.orders.size();
    D.form.q.resize(k);
    D.form.b.assign(k, QVec(k, Rat(0)));
    auto pairing = [&](const QVec& x, const QVec& y) {
        Rat s(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (x[i].is_zero() || L.gram[i][j] == 0) continue;
                s += x[i] * Rat(L.gram[i][j]) * y[j];
            }
        return s;
    };
    for (size_t i = 0; i < k; ++i) {
        D.form.q[i] = pairing(D.generator_lifts[i], D.generator_lifts[i]).mod(2);
        for (size_t j = 0; j < k; ++j)
            D.form.b[i][j] = pairing(D.generator_lifts[i], D.generator_lifts[j]).mod(1);
    }
    return D;
}

Int divisibility(const GramLattice& L, const IVec& x) {
    bool nonzero = false;
    for (auto& c : x) nonzero |= c != 0;
    if (!nonzero) throw std::invalid_argument("divisibility: zero vector");
    Int g = 0;
    for (int i = 0; i < L.rank(); ++i) {
        Int p = 0;
        for (int j = 0; j < L.rank(); ++j) p += L.gram[i][j] * x[j];
        g = boost::multiprecision::gcd(g, p < 0 ? Int(-p) : p);
    }
    return g;
}

FiniteQuadraticForm::Elem disc_class_of(const GramLattice& L, const DiscriminantForm& D,
                                        const IVec& x, const Int& div) {
    // write x/div = sum c_i g_i  (mod L), by solving over Q then rounding the
    // class: we solve  [lifts^T | I] ... simpler: brute force small combos is
    // wasteful; instead solve the linear system over Q in terms of lifts and
    // a lattice part.
    int n = L.rank();
    size_t k = D.form.orders.size();
    // unknowns: c_1..c_k (rational, later reduced mod orders) and m in Z^n.
    // x/div = sum c_i lift_i + m.  Work modulo 1: the class of x/div in L*/L
    // is determined by pairings with L: solve via the bilinear form:
    // pairing(x/div, basis_j) = sum c_i pairing(lift_i, basis_j) mod 1.
    // The Smith generators are a basis of A_L, so the c_i are recovered by
    // inverting the (k x k) pairing matrix mod orders.  We do it by testing
    // candidate coefficients; group orders here are small.
    QVec xq(n);
    for (int i = 0; i < n; ++i) xq[i] = Rat(x[i]) / Rat(div);
    // the class is pinned down by its pairings with the generators (b is
    // non-degenerate on A_L), so match them against all candidate tuples
    auto pairing = [&](const QVec& u, const QVec& v) {
        Rat s(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (u[i].is_zero() || L.gram[i][j] == 0) continue;
                s += u[i] * Rat(L.gram[i][j]) * v[j];
            }
        return s;
    };
    QVec target(k);
    for (size_t i = 0; i < k; ++i) target[i] = pairing(xq, D.generator_lifts[i]).mod(1);
    for (auto& c : D.form.all_elements()) {
        bool match = true;
        for (size_t j = 0; j < k && match; ++j) {
            Rat s(0);
            for (size_t i = 0; i < k; ++i)
                if (c[i]) s += Rat(c[i]) * D.form.b[i][j];
            match = s.mod(1) == target[j];
        }
        if (match) return c;
    }
    throw std::runtime_error("disc_class_of: class not found");
}

// ---- overlattices ----

namespace {

// column-style HNF basis of the integer column span
IMat column_basis(IMat cols_as_rows /* each row a vector */) {
    // treat vectors as rows, row-reduce (HNF over Z), return basis rows
    auto& M = cols_as_rows;
    int rows = (int)M.size(), n = rows ? (int)M[0].size() : 0;
    int r = 0;
    for (int c = 0; c < n && r < rows; ++c) {
        for (;;) {
            int p = -1;
            for (int i = r; i < rows; ++i)
                if (M[i][c] != 0 && (p < 0 || abs(M[i][c]) < abs(M[p][c]))) p = i;
            if (p < 0) break;
            std::swap(M[r], M[p]);
            if (M[r][c] < 0)
                for (auto& x : M[r]) x = -x;
            bool clean = true;
            for (int i = r + 1; i < rows; ++i) {
                Int q = M[i][c] / M[r][c];
                if (q != 0)
                    for (int j = 0; j < n; ++j) M[i][j] -= q * M[r][j];
                if (M[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (M[r][c] != 0) ++r;
    }
    M.resize(r);
    return M;
}

}  // namespace

std::vector<Overlattice> overlattices(const GramLattice& L, long long budget) {
    DiscriminantForm D = discriminant_form(L);
    auto elems = D.form.all_elements(budget);
    std::vector<FiniteQuadraticForm::Elem> iso;
    for (auto& e : elems)
        if (D.form.q_of(e).is_zero()) iso.push_back(e);

    // index isotropic elements; a subgroup is stored as a sorted id list
    auto id_of = [&](const FiniteQuadraticForm::Elem& e) -> long long {
        long long id = 0;
        for (size_t i = D.form.orders.size(); i-- > 0;)
            id = id * (long long)D.form.orders[i] + e[i];
        return id;
    };
    std::map<long long, int> iso_index;
    for (int i = 0; i < (int)iso.size(); ++i) iso_index[id_of(iso[i])] = i;

    auto add_elems = [&](const FiniteQuadraticForm::Elem& a,
                         const FiniteQuadraticForm::Elem& b) {
        FiniteQuadraticForm::Elem s(a.size());
        for (size_t i = 0; i < a.size(); ++i)
            s[i] = (a[i] + b[i]) % (long long)D.form.orders[i];
        return s;
    };

    std::sort(iso.begin(), iso.end(), [&](auto& a, auto& b) { return id_of(a) < id_of(b); });
    iso_index.clear();
    for (int i = 0; i < (int)iso.size(); ++i) iso_index[id_of(iso[i])] = i;

    std::vector<std::vector<int>> subgroups;  // sorted indices into iso
    std::vector<std::vector<int>> gen_sets;

    // closure of members + {g} under addition; fails when a sum leaves the
    // isotropic set (then no overlattice arises from this subgroup)
    auto close_with = [&](const std::vector<int>& members, int g) -> std::optional<std::vector<int>> {
        std::vector<int> S = members;
        std::vector<int> queue = {g};
        auto has = [&](int x) { return std::binary_search(S.begin(), S.end(), x); };
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            if (has(x)) continue;
            std::vector<int> snapshot = S;
            S.insert(std::lower_bound(S.begin(), S.end(), x), x);
            for (int m : snapshot) {
                auto sum = add_elems(iso[m], iso[x]);
                auto it = iso_index.find(id_of(sum));
                if (it == iso_index.end()) return std::nullopt;  // non-isotropic sum
                if (!has(it->second)) queue.push_back(it->second);
            }
            auto dbl = add_elems(iso[x], iso[x]);
            auto it = iso_index.find(id_of(dbl));
            if (it == iso_index.end()) return std::nullopt;
            if (!has(it->second)) queue.push_back(it->second);
        }
        return S;
    };

    // canonical generating chains: each new generator is the least element it
    // brings in, so every totally isotropic subgroup is produced exactly once
    std::function<void(const std::vector<int>&, const std::vector<int>&, int)> dfs =
        [&](const std::vector<int>& members, const std::vector<int>& gens, int min_next) {
            subgroups.push_back(members);
            gen_sets.push_back(gens);
            for (int g = min_next; g < (int)iso.size(); ++g) {
                if (std::binary_search(members.begin(), members.end(), g)) continue;
                auto closed = close_with(members, g);
                if (!closed) continue;
                int least_new = -1;
                for (int x : *closed)
                    if (!std::binary_search(members.begin(), members.end(), x)) { least_new = x; break; }
                if (least_new != g) continue;
                std::vector<int> ngens = gens;
                ngens.push_back(g);
                dfs(*closed, ngens, g + 1);
            }
        };
    dfs({0}, {}, 1);

    std::vector<Overlattice> out;
    int n = L.rank();
    for (size_t s = 0; s < subgroups.size(); ++s) {
        Overlattice ov;
        ov.index = (Int)subgroups[s].size();
        for (int g : gen_sets[s]) ov.subgroup_gens.push_back(iso[g]);
        std::vector<QVec> lifts;
        for (int g : gen_sets[s]) {
            QVec lift(n, Rat(0));
            for (size_t i = 0; i < D.form.orders.size(); ++i)
                for (int c = 0; c < n; ++c)
                    lift[c] += Rat(iso[g][i]) * D.generator_lifts[i][c];
            lifts.push_back(std::move(lift));
        }
        ov.lattice = overlattice_from_glue(L, lifts, &ov.basis_in_L);
        if (!ov.lattice.is_even()) throw std::runtime_error("overlattice: odd lattice from isotropic glue");
        out.push_back(std::move(ov));
    }
    return out;
}

GramLattice overlattice_from_glue(const GramLattice& L, const std::vector<QVec>& lifts,
                                  QMat* basis_out) {
    int n = L.rank();
    Int den = 1;
    for (const auto& lift : lifts)
        for (const auto& v : lift) den = boost::multiprecision::lcm(den, v.den());
    IMat rows;
    for (int i = 0; i < n; ++i) {
        IVec r(n, 0);
        r[i] = den;
        rows.push_back(std::move(r));
    }
    for (const auto& lift : lifts) {
        IVec r(n);
        for (int c = 0; c < n; ++c) r[c] = (lift[c] * Rat(den)).num();
        rows.push_back(std::move(r));
    }
    IMat basis_scaled = column_basis(std::move(rows));
    if ((int)basis_scaled.size() != n)
        throw std::runtime_error("overlattice: basis extraction failed");
    QMat basis(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) basis[i][j] = Rat(basis_scaled[i][j], den);
    IMat gram(n, IVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v(0);
            for (int a = 0; a < n; ++a) {
                if (basis[i][a].is_zero()) continue;
                for (int bcol = 0; bcol < n; ++bcol)
                    v += basis[i][a] * Rat(L.gram[a][bcol]) * basis[j][bcol];
            }
            if (!v.is_integer()) throw std::runtime_error("overlattice: non-integral Gram");
            gram[i][j] = v.num();
        }
    if (basis_out) *basis_out = std::move(basis);
    return {gram, ""};
}

bool is_primitive_sublattice(const std::vector<IVec>& basis_in_L) {
    if (basis_in_L.empty()) return true;
    IMat M = basis_in_L;  // rows are the vectors
    auto inv = invariant_factors(M);
    if (inv.size() != basis_in_L.size())
        throw std::invalid_argument("is_primitive_sublattice: dependent vectors");
    for (auto& d : inv)
        if (d != 1) return false;
    return true;
}

bool in_genus(const GramLattice& a, const GramLattice& b) {
    Signature sa = a.sig(), sb = b.sig();
    if (sa.pos != sb.pos || sa.neg != sb.neg || sa.zero != sb.zero) return false;
    if (a.det() != b.det()) return false;
    return forms_isometric(discriminant_form(a).form, discriminant_form(b).form);
}

std::string RootSystemReport::components_str() const {
    std::string s;
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) s += "+";
        s += components[i].str();
    }
    return s.empty() ? "-" : s;
}

GramLattice k3_lattice() {
    GramLattice L = direct_sum(lat_E(8), lat_E(8));
    L = direct_sum(L, lat_U());
    L = direct_sum(L, lat_U());
    L = direct_sum(L, lat_U());
    L.name = "E8+E8+U+U+U";
    return L;
}

}  // namespace pairlat
