#include "pairlat/moduli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace pairlat {

RootLocus classify_root(const Int& norm, const Int& pair_h, const std::vector<Int>& pair_e) {
    if (norm != -2) throw std::invalid_argument("classify_root: not a root");
    if (pair_h != 0) throw std::invalid_argument("classify_root: root must be orthogonal to h");
    for (const auto& p : pair_e)
        if (p != 0) return RootLocus::kInfinity;
    return RootLocus::kFinite;
}

std::pair<Int, Int> discriminant_bidegree(int d) {
    if (d < 2) throw std::invalid_argument("discriminant_bidegree: d >= 2");
    return {Int(2) * (d - 1), Int(d) * (d - 1)};
}

namespace {

using Elem = std::vector<long long>;

// A_M + A_R with R kept component-wise, so that coset norms factor per block
struct GlueSpace {
    GramLattice M, MR;
    std::vector<GramLattice> comps;
    std::vector<int> comp_offset;         // coordinate offset inside MR
    DiscriminantForm DM;
    std::vector<DiscriminantForm> DR;
    std::vector<long long> orders;        // concatenated generator orders
    std::vector<int> gen_block;           // -1 = M, else component index
    std::vector<int> gen_local;           // index within the block's generators
    IVec h;

    size_t ngens() const { return orders.size(); }

    Elem zero() const { return Elem(ngens(), 0); }
    Elem add(const Elem& a, const Elem& b) const {
        Elem c(ngens());
        for (size_t i = 0; i < ngens(); ++i) c[i] = (a[i] + b[i]) % orders[i];
        return c;
    }
    long long id_of(const Elem& e) const {
        long long id = 0;
        for (size_t i = ngens(); i-- > 0;) id = id * orders[i] + e[i];
        return id;
    }
    Rat q_of(const Elem& e) const {
        Rat s(0);
        // blocks are mutually orthogonal
        std::vector<long long> mpart(DM.form.ngens());
        size_t idx = 0;
        for (size_t i = 0; i < DM.form.ngens(); ++i) mpart[i] = e[idx++];
        s += DM.form.q_of(mpart);
        for (size_t c = 0; c < comps.size(); ++c) {
            std::vector<long long> part(DR[c].form.ngens());
            for (size_t i = 0; i < part.size(); ++i) part[i] = e[idx++];
            s += DR[c].form.q_of(part);
        }
        return s.mod(2);
    }
    Rat b_of(const Elem& a, const Elem& b) const {
        Rat s(0);
        size_t idx = 0;
        {
            std::vector<long long> xa(DM.form.ngens()), xb(DM.form.ngens());
            for (size_t i = 0; i < xa.size(); ++i) { xa[i] = a[idx]; xb[i] = b[idx]; ++idx; }
            s += DM.form.b_of(xa, xb);
        }
        for (size_t c = 0; c < comps.size(); ++c) {
            std::vector<long long> xa(DR[c].form.ngens()), xb(DR[c].form.ngens());
            for (size_t i = 0; i < xa.size(); ++i) { xa[i] = a[idx]; xb[i] = b[idx]; ++idx; }
            s += DR[c].form.b_of(xa, xb);
        }
        return s.mod(1);
    }
    bool pure_m(const Elem& e) const {
        bool m_nonzero = false;
        size_t idx = 0;
        for (size_t i = 0; i < DM.form.ngens(); ++i) m_nonzero |= e[idx++] != 0;
        for (; idx < ngens(); ++idx)
            if (e[idx] != 0) return false;
        return m_nonzero;
    }
    bool is_zero(const Elem& e) const {
        return std::all_of(e.begin(), e.end(), [](long long x) { return x == 0; });
    }
    QVec lift_of(const Elem& e) const {
        QVec v(MR.rank(), Rat(0));
        size_t idx = 0;
        for (size_t i = 0; i < DM.form.ngens(); ++i, ++idx)
            if (e[idx])
                for (int j = 0; j < 6; ++j) v[j] += Rat(e[idx]) * DM.generator_lifts[i][j];
        for (size_t c = 0; c < comps.size(); ++c)
            for (size_t i = 0; i < DR[c].form.ngens(); ++i, ++idx)
                if (e[idx])
                    for (int j = 0; j < comps[c].rank(); ++j)
                        v[comp_offset[c] + j] += Rat(e[idx]) * DR[c].generator_lifts[i][j];
        return v;
    }
};

GlueSpace build_glue(const std::vector<AdeComponent>& config) {
    GlueSpace G;
    G.M = lat_M();
    G.MR = G.M;
    for (const auto& c : config) {
        GramLattice comp = c.family == 'A' ? lat_A(c.rank) : c.family == 'D' ? lat_D(c.rank) : lat_E(c.rank);
        G.comp_offset.push_back(G.MR.rank());
        G.MR = direct_sum(G.MR, comp);
        G.comps.push_back(std::move(comp));
    }
    G.DM = discriminant_form(G.M);
    for (auto& comp : G.comps) G.DR.push_back(discriminant_form(comp));
    for (size_t i = 0; i < G.DM.form.ngens(); ++i) {
        G.orders.push_back((long long)G.DM.form.orders[i]);
        G.gen_block.push_back(-1);
        G.gen_local.push_back((int)i);
    }
    for (size_t c = 0; c < G.comps.size(); ++c)
        for (size_t i = 0; i < G.DR[c].form.ngens(); ++i) {
            G.orders.push_back((long long)G.DR[c].form.orders[i]);
            G.gen_block.push_back((int)c);
            G.gen_local.push_back((int)i);
        }
    G.h.assign(G.MR.rank(), 0);
    IVec hM = m_polarization_h();
    for (int i = 0; i < 6; ++i) G.h[i] = hM[i];
    return G;
}

// achievable coset norms in [-2, 0], the inputs to the exact per-class root
// test (a new root splits as x_M + x_R with both squares in [-2, 0])
struct AchTables {
    // per A_M element id: achievable norms of coset(a) intersect h-perp
    std::map<long long, std::vector<Rat>> ach_m;
    // per component, per class id: achievable norms of the coset
    std::vector<std::map<long long, std::vector<Rat>>> ach_r;
};

AchTables build_ach_tables(const GlueSpace& G) {
    AchTables T;
    // M side: enumerate cosets of A_M inside h-perp
    const GramLattice& M = G.M;
    IMat hrow(1, IVec(6));
    for (int j = 0; j < 6; ++j) {
        Int s = 0;
        for (int i = 0; i < 6; ++i) s += G.h[i] * M.gram[i][j];
        hrow[0][j] = s;
    }
    auto ker = int_kernel(hrow);  // rank 5
    GramLattice perpM;
    {
        IMat g(ker.size(), IVec(ker.size()));
        for (size_t i = 0; i < ker.size(); ++i)
            for (size_t j = 0; j < ker.size(); ++j) g[i][j] = M.pair(ker[i], ker[j]);
        perpM = {g, ""};
    }
    IMat kerT(6, IVec(ker.size()));
    for (int i = 0; i < 6; ++i)
        for (size_t j = 0; j < ker.size(); ++j) kerT[i][j] = ker[j][i];

    auto elems_m = G.DM.form.all_elements();
    for (const auto& a : elems_m) {
        long long id = 0;
        for (size_t i = a.size(); i-- > 0;) id = id * (long long)G.DM.form.orders[i] + a[i];
        std::vector<Rat> ach;
        bool zero_class = std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
        if (zero_class) ach.push_back(Rat(0));
        // coset representative, shifted into h-perp
        QVec rho(6, Rat(0));
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i])
                for (int j = 0; j < 6; ++j) rho[j] += Rat(a[i]) * G.DM.generator_lifts[i][j];
        Rat rho_h(0);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) rho_h += rho[i] * Rat(M.gram[i][j]) * Rat(G.h[j]);
        if (!rho_h.is_integer()) throw std::runtime_error("ach tables: non-integral pairing with h");
        // x0 = rho - (rho.h) l', since l'.h = 1
        QVec x0 = rho;
        x0[0] -= rho_h;
        auto s = solve_rational(kerT, x0);
        if (!s) throw std::runtime_error("ach tables: perp solve failed");
        Rat qa = G.DM.form.q_of(a);
        for (const Rat& t : {Rat(-1), Rat(-2)}) {
            if ((t - qa).mod(2) != Rat(0)) continue;  // norm parity must match q
            if (!coset_vectors_of_norm(perpM, *s, t).empty()) ach.push_back(t);
        }
        T.ach_m[id] = ach;
    }

    T.ach_r.resize(G.comps.size());
    for (size_t c = 0; c < G.comps.size(); ++c) {
        auto elems = G.DR[c].form.all_elements();
        for (const auto& cls : elems) {
            long long id = 0;
            for (size_t i = cls.size(); i-- > 0;) id = id * (long long)G.DR[c].form.orders[i] + cls[i];
            std::vector<Rat> ach;
            bool zero_class = std::all_of(cls.begin(), cls.end(), [](long long x) { return x == 0; });
            if (zero_class) {
                ach.push_back(Rat(0));
                ach.push_back(Rat(-2));  // roots of the component itself
            } else {
                Rat qc = G.DR[c].form.q_of(cls);
                Rat t = qc - Rat(2);  // unique candidate in (-2, 0]
                if (t > Rat(-2) || t == Rat(-2)) {
                    QVec shift(G.comps[c].rank(), Rat(0));
                    for (size_t i = 0; i < cls.size(); ++i)
                        if (cls[i])
                            for (int j = 0; j < G.comps[c].rank(); ++j)
                                shift[j] += Rat(cls[i]) * G.DR[c].generator_lifts[i][j];
                    if (!coset_vectors_of_norm(G.comps[c], shift, t).empty()) ach.push_back(t);
                }
            }
            T.ach_r[c][id] = ach;
        }
    }
    return T;
}

// does some decomposition x_M + x_R of a -2 vector exist in the given class?
bool class_creates_root(const GlueSpace& G, const AchTables& T, const Elem& e) {
    long long mid = 0;
    size_t idx = G.DM.form.ngens();
    for (size_t i = idx; i-- > 0;) mid = mid * G.orders[i] + e[i];
    auto it = T.ach_m.find(mid);
    if (it == T.ach_m.end()) throw std::runtime_error("class_creates_root: unknown M class");
    for (const Rat& m_norm : it->second) {
        Rat target = Rat(-2) - m_norm;
        // DP over components
        std::set<std::string> reachable;
        std::vector<Rat> cur = {Rat(0)};
        size_t gidx = G.DM.form.ngens();
        for (size_t c = 0; c < G.comps.size(); ++c) {
            long long cid = 0;
            size_t base = gidx;
            for (size_t i = G.DR[c].form.ngens(); i-- > 0;)
                cid = cid * G.orders[base + i] + e[base + i];
            gidx += G.DR[c].form.ngens();
            const auto& ach = T.ach_r[c].at(cid);
            std::vector<Rat> next;
            std::set<std::string> seen;
            for (const Rat& acc : cur)
                for (const Rat& t : ach) {
                    Rat v = acc + t;
                    if (v < target) continue;  // sums only decrease
                    if (seen.insert(v.str()).second) next.push_back(v);
                }
            cur = std::move(next);
            if (cur.empty()) break;
        }
        for (const Rat& v : cur)
            if (v == target) {
                // the all-zero split only realizes a root when the class is zero
                if (m_norm == Rat(-2) && G.is_zero(e)) continue;
                return true;
            }
    }
    return false;
}

// a candidate subgroup, as its full element list
struct Candidate {
    std::vector<Elem> elements;    // excluding zero
    std::vector<Elem> generators;
};

std::string elem_str(const GlueSpace&, const Elem& e) {
    std::string s = "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + ")";
}

std::string invariant_of(const GlueSpace& G, const Candidate& cand) {
    // symmetry-class invariant: multiset over elements of
    // (order of M part, sorted multiset of component class orders)
    std::multiset<std::string> inv;
    for (const auto& e : cand.elements) {
        long long mord = 1;
        size_t idx = 0;
        for (size_t i = 0; i < G.DM.form.ngens(); ++i, ++idx)
            if (e[idx]) mord = std::lcm(mord, G.orders[idx] / std::gcd(G.orders[idx], e[idx]));
        std::multiset<long long> comp_orders;
        for (size_t c = 0; c < G.comps.size(); ++c) {
            long long o = 1;
            for (size_t i = 0; i < G.DR[c].form.ngens(); ++i, ++idx)
                if (e[idx]) o = std::lcm(o, G.orders[idx] / std::gcd(G.orders[idx], e[idx]));
            if (o > 1) comp_orders.insert(o);
        }
        std::string s = std::to_string(mord) + ":[";
        for (long long o : comp_orders) s += std::to_string(o) + ",";
        s += "]";
        inv.insert(s);
    }
    std::string out;
    for (const auto& s : inv) out += s + ";";
    return out;
}

// generic enumerator: all totally isotropic subgroups whose classes pass the
// validity filters, |A| within budget
std::vector<Candidate> enumerate_generic(const GlueSpace& G, const AchTables& T, long long budget) {
    Int total = 1;
    for (auto o : G.orders) total *= o;
    if (total > budget) throw std::runtime_error("glue group beyond generic enumeration budget");

    // all valid isotropic elements
    std::vector<Elem> valid;
    Elem cur = G.zero();
    for (;;) {
        if (!G.is_zero(cur) && G.q_of(cur).is_zero() && !G.pure_m(cur) &&
            !class_creates_root(G, T, cur))
            valid.push_back(cur);
        size_t i = 0;
        while (i < G.ngens()) {
            if (++cur[i] < G.orders[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == G.ngens()) break;
    }
    std::sort(valid.begin(), valid.end(),
              [&](const Elem& a, const Elem& b) { return G.id_of(a) < G.id_of(b); });
    std::map<long long, int> index;
    for (int i = 0; i < (int)valid.size(); ++i) index[G.id_of(valid[i])] = i;

    std::vector<Candidate> out;
    out.push_back({});  // trivial subgroup

    // closure of members + {g}; nullopt when a sum is invalid
    auto close_with = [&](const std::vector<int>& members, int g) -> std::optional<std::vector<int>> {
        std::vector<int> S = members;
        std::vector<int> queue = {g};
        auto has = [&](int x) { return std::binary_search(S.begin(), S.end(), x); };
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            if (has(x)) continue;
            std::vector<int> snap = S;
            S.insert(std::lower_bound(S.begin(), S.end(), x), x);
            auto push_sum = [&](const Elem& sum) -> bool {
                if (G.is_zero(sum)) return true;
                auto it = index.find(G.id_of(sum));
                if (it == index.end()) return false;
                if (!has(it->second)) queue.push_back(it->second);
                return true;
            };
            for (int msn : snap)
                if (!push_sum(G.add(valid[msn], valid[x]))) return std::nullopt;
            if (!push_sum(G.add(valid[x], valid[x]))) return std::nullopt;
        }
        return S;
    };

    std::function<void(const std::vector<int>&, const std::vector<int>&, int)> dfs =
        [&](const std::vector<int>& members, const std::vector<int>& gens, int from) {
            if (!gens.empty()) {
                Candidate c;
                for (int m : members) c.elements.push_back(valid[m]);
                for (int g : gens) c.generators.push_back(valid[g]);
                out.push_back(std::move(c));
            }
            for (int g = from; g < (int)valid.size(); ++g) {
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
    dfs({}, {}, 0);
    return out;
}

// symmetric enumerator for R = k A1: subgroups up to the S_k permutation
// action, via cell refinement
std::vector<Candidate> enumerate_k_a1(const GlueSpace& G, const AchTables& T, int k) {
    // A_M bookkeeping: elements as 4-bit masks, addition = xor
    auto q_m = [&](int mask) {
        Elem a(4);
        for (int i = 0; i < 4; ++i) a[i] = (mask >> i) & 1;
        return G.DM.form.q_of(a);
    };
    // size rules derived from the achievable-norm tables: a set size s is
    // isotropy-compatible iff q_M(a) + 3s/2 = 0 mod 2, and it must not make
    // the class create a root
    auto size_isotropic = [&](int mask, int s) {
        return (q_m(mask) + Rat(3 * s, 2)).mod(2) == Rat(0);
    };
    auto class_banned = [&](int mask, int s) {
        // materialize a representative class: mask on the M part, first s A1's
        Elem e = G.zero();
        for (int i = 0; i < 4; ++i) e[i] = (mask >> i) & 1;
        for (int i = 0; i < s; ++i) e[4 + i] = 1;
        if (G.is_zero(e)) return false;
        if (G.pure_m(e)) return true;
        return class_creates_root(G, T, e);
    };

    // subgroups D of A_M via canonical chains over masks 1..15
    struct DSub {
        std::vector<int> members;  // masks, sorted, including 0
        std::vector<int> basis;
    };
    std::vector<DSub> dsubs;
    {
        std::function<void(std::vector<int>, std::vector<int>, int)> dfs =
            [&](std::vector<int> members, std::vector<int> basis, int from) {
                dsubs.push_back({members, basis});
                for (int g = from; g < 16; ++g) {
                    if (std::binary_search(members.begin(), members.end(), g)) continue;
                    std::vector<int> nm = members;
                    for (int m : members) {
                        int s = m ^ g;
                        if (!std::binary_search(nm.begin(), nm.end(), s)) {
                            nm.insert(std::lower_bound(nm.begin(), nm.end(), s), s);
                        }
                    }
                    int least_new = -1;
                    for (int x : nm)
                        if (!std::binary_search(members.begin(), members.end(), x)) { least_new = x; break; }
                    if (least_new != g) continue;
                    std::vector<int> nb = basis;
                    nb.push_back(g);
                    dfs(nm, nb, g + 1);
                }
            };
        dfs({0}, {}, 1);
    }

    struct Cell {
        int size;
        uint32_t membership;  // bit j: cell lies inside chosen set j
    };

    std::vector<Candidate> out;
    out.push_back({});

    for (const auto& D : dsubs) {
        int m = (int)D.basis.size();
        for (int kappa = 0; kappa <= 1; ++kappa) {
            if (m == 0 && kappa == 0) continue;  // trivial subgroup already recorded
            int nsets = m + kappa;  // set 0 is S0 when kappa = 1
            // masks per generator: kernel generator has mask 0
            std::vector<int> gen_mask;
            if (kappa) gen_mask.push_back(0);
            for (int b : D.basis) gen_mask.push_back(b);

            std::vector<Cell> cells = {{k, 0}};
            std::vector<std::vector<Cell>> stack;

            // all-subset validity over the current (complete) generator sets
            auto sets_ok = [&](const std::vector<Cell>& cs) {
                for (uint32_t sub = 1; sub < (1u << nsets); ++sub) {
                    int mask = 0;
                    for (int j = 0; j < nsets; ++j)
                        if (sub & (1u << j)) mask ^= gen_mask[j];
                    int size = 0;
                    for (const auto& c : cs)
                        if (__builtin_popcount(c.membership & sub) % 2) size += c.size;
                    if (mask == 0 && size == 0) return false;   // pure zero sum: dependent gens
                    if (!size_isotropic(mask, size)) return false;
                    if (class_banned(mask, size)) return false;
                }
                return true;
            };
            // partial checks: subsets within the first `done` sets
            auto sets_ok_partial = [&](const std::vector<Cell>& cs, int done) {
                for (uint32_t sub = 1; sub < (1u << done); ++sub) {
                    int mask = 0;
                    for (int j = 0; j < done; ++j)
                        if (sub & (1u << j)) mask ^= gen_mask[j];
                    int size = 0;
                    for (const auto& c : cs)
                        if (__builtin_popcount(c.membership & sub) % 2) size += c.size;
                    if (mask == 0 && size == 0) return false;
                    if (!size_isotropic(mask, size)) return false;
                    if (class_banned(mask, size)) return false;
                }
                return true;
            };

            std::function<void(int, const std::vector<Cell>&)> choose = [&](int j,
                                                                            const std::vector<Cell>& cs) {
                if (j == nsets) {
                    if (!sets_ok(cs)) return;
                    // materialize: assign point indices cell by cell
                    Candidate cand;
                    std::vector<std::vector<int>> sets(nsets);
                    int pt = 0;
                    for (const auto& c : cs) {
                        for (int t = 0; t < c.size; ++t) {
                            for (int jj = 0; jj < nsets; ++jj)
                                if (c.membership & (1u << jj)) sets[jj].push_back(pt);
                            ++pt;
                        }
                    }
                    for (int jj = 0; jj < nsets; ++jj) {
                        Elem g = G.zero();
                        for (int i = 0; i < 4; ++i) g[i] = (gen_mask[jj] >> i) & 1;
                        for (int p : sets[jj]) g[4 + p] = 1;
                        cand.generators.push_back(g);
                    }
                    // element list from all subset sums
                    std::set<long long> seen;
                    for (uint32_t sub = 1; sub < (1u << nsets); ++sub) {
                        Elem e = G.zero();
                        for (int jj = 0; jj < nsets; ++jj)
                            if (sub & (1u << jj)) e = G.add(e, cand.generators[jj]);
                        if (!G.is_zero(e) && seen.insert(G.id_of(e)).second)
                            cand.elements.push_back(e);
                    }
                    out.push_back(std::move(cand));
                    return;
                }
                // choose how many points of each cell the new set takes
                std::vector<int> take(cs.size(), 0);
                std::function<void(size_t)> pick = [&](size_t ci) {
                    if (ci == cs.size()) {
                        std::vector<Cell> next;
                        for (size_t i = 0; i < cs.size(); ++i) {
                            if (take[i] > 0) next.push_back({take[i], cs[i].membership | (1u << j)});
                            if (cs[i].size - take[i] > 0) next.push_back({cs[i].size - take[i], cs[i].membership});
                        }
                        if (!sets_ok_partial(next, j + 1)) return;
                        choose(j + 1, next);
                        return;
                    }
                    for (int t = 0; t <= cs[ci].size; ++t) {
                        take[ci] = t;
                        pick(ci + 1);
                    }
                    take[ci] = 0;
                };
                pick(0);
            };
            choose(0, cells);
        }
    }
    return out;
}

}  // namespace

OccursResult config_occurs(const std::vector<AdeComponent>& config) {
    OccursResult res;
    res.verdict = OccursResult::kNo;
    int total_rank = 0;
    for (auto& c : config) total_rank += c.rank;
    if (config.empty()) throw std::invalid_argument("config_occurs: empty configuration");
    if (total_rank > 16) {
        res.verdict = OccursResult::kUndetermined;
        res.trace.push_back("configuration rank " + std::to_string(total_rank) +
                            " exceeds the Milnor bound 16");
        return res;
    }

    GlueSpace G = build_glue(config);
    AchTables T = build_ach_tables(G);

    bool pure_a1 = std::all_of(config.begin(), config.end(),
                               [](const AdeComponent& c) { return c.family == 'A' && c.rank == 1; });
    std::vector<Candidate> candidates;
    if (pure_a1 && config.size() >= 5) {
        if (config.size() > 11) {
            res.verdict = OccursResult::kUndetermined;
            res.trace.push_back("kA1 with k > 11 is beyond the symmetric search implemented here");
            return res;
        }
        candidates = enumerate_k_a1(G, T, (int)config.size());
    } else {
        try {
            candidates = enumerate_generic(G, T, 4096);
        } catch (const std::exception& ex) {
            res.verdict = OccursResult::kUndetermined;
            res.trace.push_back(ex.what());
            return res;
        }
    }
    res.candidates = (long long)candidates.size();

    bool any_undetermined = false;
    for (const auto& cand : candidates) {
        // construct N
        std::vector<QVec> lifts;
        for (const auto& g : cand.generators) lifts.push_back(G.lift_of(g));
        QMat basis;
        GramLattice N = overlattice_from_glue(G.MR, lifts, &basis);
        long long hsub = (long long)cand.elements.size() + 1;

        std::string label = "H of order " + std::to_string(hsub);
        if (!cand.generators.empty()) {
            label += " gens";
            for (const auto& g : cand.generators) label += " " + elem_str(G, g);
        }

        // N-coordinates of a vector given in MR-coordinates
        auto coords_in_N = [&](const QVec& target) {
            Int den = 1;
            for (const auto& row : basis)
                for (const auto& v : row) den = boost::multiprecision::lcm(den, v.den());
            IMat A(G.MR.rank(), IVec(N.rank()));
            for (int r2 = 0; r2 < G.MR.rank(); ++r2)
                for (int c2 = 0; c2 < N.rank(); ++c2) A[r2][c2] = (basis[c2][r2] * Rat(den)).num();
            QVec rhs(G.MR.rank());
            for (int r2 = 0; r2 < G.MR.rank(); ++r2) rhs[r2] = target[r2] * Rat(den);
            auto x = solve_rational(A, rhs);
            if (!x) throw std::runtime_error("config_occurs: vector not in N");
            IVec xi(N.rank());
            for (int c2 = 0; c2 < N.rank(); ++c2) {
                if (!(*x)[c2].is_integer())
                    throw std::runtime_error("config_occurs: fractional N coordinates");
                xi[c2] = (*x)[c2].num();
            }
            return xi;
        };

        // Step I: M must stay primitive (class-level filter already ensures
        // this; re-verify on the constructed lattice)
        {
            std::vector<IVec> mbasis;
            for (int i = 0; i < 6; ++i) {
                QVec e(G.MR.rank(), Rat(0));
                e[i] = Rat(1);
                mbasis.push_back(coords_in_N(e));
            }
            if (!is_primitive_sublattice(mbasis)) {
                res.trace.push_back(label + ": rejected, M not primitive in N");
                continue;
            }
        }

        // Step II: independent root check of <h>-perp in N
        {
            QVec hq(G.MR.rank());
            for (int i = 0; i < G.MR.rank(); ++i) hq[i] = Rat(G.h[i]);
            IVec hN = coords_in_N(hq);
            IMat hrow(1, IVec(N.rank()));
            for (int j = 0; j < N.rank(); ++j) {
                Int s = 0;
                for (int i = 0; i < N.rank(); ++i) s += hN[i] * N.gram[i][j];
                hrow[0][j] = s;
            }
            auto ker = int_kernel(hrow);
            IMat pg((int)ker.size(), IVec((int)ker.size()));
            for (size_t i = 0; i < ker.size(); ++i)
                for (size_t j = 0; j < ker.size(); ++j) pg[i][j] = N.pair(ker[i], ker[j]);
            GramLattice perp{pg, ""};
            auto rs = root_system(perp);
            std::vector<AdeComponent> want = config;
            for (int i = 0; i < 5; ++i) want.push_back({'A', 1});
            std::sort(want.begin(), want.end());
            if (rs.components != want) {
                res.trace.push_back(label + ": rejected, root sublattice of <h>-perp is " +
                                    rs.components_str() + " rather than " + config_str(want));
                continue;
            }
        }

        // Step III: primitive embedding into the K3 lattice
        EmbedResult er = embeds_primitively_K3(N);
        if (er.verdict == EmbedResult::kNo) {
            res.trace.push_back(label + ": rejected at step III, " + er.reason);
            continue;
        }
        if (er.verdict == EmbedResult::kUndetermined) {
            any_undetermined = true;
            res.trace.push_back(label + ": step III undetermined, " + er.reason);
            continue;
        }
        ++res.passing;
        res.passing_invariants.push_back(invariant_of(G, cand));
        if (!res.certificate) {
            OccursCertificate cert;
            cert.N = N;
            cert.subgroup_order = hsub;
            for (const auto& g : cand.generators) cert.subgroup.push_back(elem_str(G, g));
            cert.embed_note = er.reason;
            cert.invariant = invariant_of(G, cand);
            res.certificate = std::move(cert);
        }
    }
    if (res.passing > 0)
        res.verdict = OccursResult::kYes;
    else
        res.verdict = any_undetermined ? OccursResult::kUndetermined : OccursResult::kNo;
    std::sort(res.passing_invariants.begin(), res.passing_invariants.end());
    res.passing_invariants.erase(
        std::unique(res.passing_invariants.begin(), res.passing_invariants.end()),
        res.passing_invariants.end());
    return res;
}

// ---- deformation relation ----

namespace {

struct Graph {
    int n = 0;
    std::vector<std::vector<bool>> adj;
};

Graph graph_of(const AdeComponent& c) {
    GramLattice L = c.family == 'A' ? lat_A(c.rank) : c.family == 'D' ? lat_D(c.rank) : lat_E(c.rank);
    Graph g;
    g.n = L.rank();
    g.adj.assign(g.n, std::vector<bool>(g.n, false));
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (i != j && L.gram[i][j] != 0) g.adj[i][j] = true;
    return g;
}

// classify a connected induced tree by its ADE shape; nullopt when not ADE
std::optional<AdeComponent> classify_tree(const Graph& g, const std::vector<int>& nodes) {
    int n = (int)nodes.size();
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && g.adj[nodes[i]][nodes[j]]) ++deg[i];
    int edges = 0;
    for (int d : deg) edges += d;
    edges /= 2;
    if (edges != n - 1) return std::nullopt;  // not a tree
    int branch = -1;
    for (int i = 0; i < n; ++i) {
        if (deg[i] > 3) return std::nullopt;
        if (deg[i] == 3) {
            if (branch >= 0) return std::nullopt;
            branch = i;
        }
    }
    if (branch < 0) return AdeComponent{'A', n};
    // arm lengths from the branch node
    std::vector<int> arms;
    for (int j = 0; j < n; ++j) {
        if (j == branch || !g.adj[nodes[branch]][nodes[j]]) continue;
        int len = 1, prev = branch, cur = j;
        for (;;) {
            int next = -1;
            for (int t = 0; t < n; ++t)
                if (t != prev && t != cur && g.adj[nodes[cur]][nodes[t]]) next = t;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) return std::nullopt;
    if (arms[0] == 1 && arms[1] == 1) return AdeComponent{'D', n};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && n >= 6 && n <= 8) return AdeComponent{'E', n};
    return std::nullopt;
}

}  // namespace

bool is_subdiagram_deformation(const std::vector<AdeComponent>& R,
                               const std::vector<AdeComponent>& Rp) {
    int rank_r = 0, rank_rp = 0;
    for (auto& c : R) rank_r += c.rank;
    for (auto& c : Rp) rank_rp += c.rank;
    if (rank_rp > rank_r) return false;
    if (Rp == R) return true;

    std::vector<Graph> graphs;
    for (auto& c : R) graphs.push_back(graph_of(c));
    std::vector<std::vector<bool>> used;
    for (auto& g : graphs) used.push_back(std::vector<bool>(g.n, false));

    std::vector<AdeComponent> targets = Rp;
    std::sort(targets.begin(), targets.end(), [](auto& a, auto& b) { return a.rank > b.rank; });

    std::function<bool(size_t)> place = [&](size_t ti) -> bool {
        if (ti == targets.size()) return true;
        const AdeComponent& want = targets[ti];
        for (size_t gi = 0; gi < graphs.size(); ++gi) {
            const Graph& g = graphs[gi];
            // all unused connected node subsets of the right size
            std::function<bool(std::vector<int>&, int)> grow = [&](std::vector<int>& sub, int from) -> bool {
                if ((int)sub.size() == want.rank) {
                    auto cls = classify_tree(g, sub);
                    if (!cls || !(*cls == want)) return false;
                    for (int v : sub) used[gi][v] = true;
                    if (place(ti + 1)) return true;
                    for (int v : sub) used[gi][v] = false;
                    return false;
                }
                for (int v = from; v < g.n; ++v) {
                    if (used[gi][v]) continue;
                    if (std::find(sub.begin(), sub.end(), v) != sub.end()) continue;
                    // nodes adjacent to an already-placed component would merge
                    // with it in the induced diagram
                    bool touches_used = false;
                    for (int u = 0; u < g.n; ++u) touches_used |= used[gi][u] && g.adj[u][v];
                    if (touches_used) continue;
                    bool connected = sub.empty();
                    for (int u : sub) connected |= g.adj[u][v];
                    if (!connected) continue;
                    sub.push_back(v);
                    if (grow(sub, 0)) return true;
                    sub.pop_back();
                }
                return false;
            };
            std::vector<int> sub;
            if (grow(sub, 0)) return true;
        }
        return false;
    };
    return place(0);
}

MonotonicityReport deformation_monotonicity(const std::vector<AdeComponent>& R,
                                            const std::vector<AdeComponent>& Rp) {
    MonotonicityReport rep;
    rep.relation_valid = is_subdiagram_deformation(R, Rp);
    if (!rep.relation_valid)
        throw std::invalid_argument("deformation_monotonicity: R' is not a subdiagram deformation of R");
    rep.r_verdict = config_occurs(R).verdict;
    rep.rp_verdict = config_occurs(Rp).verdict;
    rep.implication_holds =
        rep.r_verdict != OccursResult::kYes || rep.rp_verdict == OccursResult::kYes;
    return rep;
}

}  // namespace pairlat
