#include "pairlat/hyperbolic.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <set>
#include <stdexcept>

namespace pairlat {

namespace {

Int dot(const GramLattice& L, const IVec& x, const IVec& y) { return L.pair(x, y); }

EdgeKind classify_edge(const Int& g, const Int& ki, const Int& kj) {
    Int g4 = 4 * g * g, kk = ki * kj;
    if (g4 == 0) return EdgeKind::kNone;
    if (g4 == kk) return EdgeKind::kSimple;
    if (g4 == 2 * kk) return EdgeKind::kDouble;
    if (g4 == 3 * kk) return EdgeKind::kTriple;
    if (g4 == 4 * kk) return EdgeKind::kParabolic;
    return EdgeKind::kDotted;
}

bool menu_accepts(const GramLattice& L, const RootNorm& rn, const IVec& v, const Int& norm) {
    if (norm != -Int(rn.norm)) return false;
    if (rn.div_exactly) return divisibility(L, v) == Int(*rn.div_exactly);
    return true;
}

bool lex_less(const IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

IVec make_primitive(IVec v) {
    Int g = 0;
    for (auto& x : v) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
    if (g > 1)
        for (auto& x : v) x /= g;
    // canonical sign: first nonzero positive
    for (auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

// basis of the sublattice h-perp, rows in L coordinates
IMat perp_basis(const GramLattice& L, const IVec& h) {
    IMat row(1, IVec(L.rank()));
    for (int j = 0; j < L.rank(); ++j) {
        Int s = 0;
        for (int i = 0; i < L.rank(); ++i) s += h[i] * L.gram[i][j];
        row[0][j] = s;
    }
    auto ker = int_kernel(row);
    return ker;  // each entry a vector in L coordinates
}

GramLattice gram_of_span(const GramLattice& L, const IMat& basis) {
    int k = (int)basis.size();
    IMat g(k, IVec(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) g[i][j] = L.pair(basis[i], basis[j]);
    return {g, ""};
}

}  // namespace

std::string CoxeterDiagram::dot() const {
    std::string s = "graph vinberg {\n";
    for (size_t i = 0; i < roots.size(); ++i) {
        s += "  n" + std::to_string(i) + " [label=\"" + norms[i].str() + "\"];\n";
    }
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j) {
            const char* style = nullptr;
            switch (edge[i][j]) {
                case EdgeKind::kNone: break;
                case EdgeKind::kSimple: style = ""; break;
                case EdgeKind::kDouble: style = " [label=\"4\"]"; break;
                case EdgeKind::kTriple: style = " [label=\"6\"]"; break;
                case EdgeKind::kParabolic: style = " [label=\"inf\"]"; break;
                case EdgeKind::kDotted: style = " [style=dotted]"; break;
            }
            if (style)
                s += "  n" + std::to_string(i) + " -- n" + std::to_string(j) + style + ";\n";
        }
    s += "}\n";
    return s;
}

VinbergResult vinberg(const GramLattice& L, const IVec& h, const VinbergOptions& opts) {
    Signature sig = L.sig();
    if (sig.pos != 1 || sig.zero != 0)
        throw std::invalid_argument("vinberg: lattice must be hyperbolic of signature (1,n)");
    Int h2 = L.norm(h);
    if (h2 <= 0) throw std::invalid_argument("vinberg: base vector must have positive square");

    VinbergResult res;
    auto& diag = res.diagram;
    auto accept = [&](const IVec& v, const Int& norm) {
        for (size_t i = 0; i < diag.roots.size(); ++i)
            if (dot(L, diag.roots[i], v) < 0) return false;
        diag.roots.push_back(v);
        diag.norms.push_back(norm);
        return true;
    };

    // distance-zero roots: a simple system of the root system of h-perp
    IMat perp = perp_basis(L, h);
    GramLattice perpL = gram_of_span(L, perp);
    std::vector<IVec> phi;          // roots of h-perp, in L coordinates
    std::vector<Int> phi_norm;
    for (const auto& rn : opts.menu) {
        for (const auto& w : vectors_of_norm(perpL, -Int(rn.norm))) {
            IVec v(L.rank(), 0);
            for (size_t i = 0; i < perp.size(); ++i)
                for (int j = 0; j < L.rank(); ++j) v[j] += w[i] * perp[i][j];
            Int nv = L.norm(v);
            if (!menu_accepts(L, rn, v, nv)) continue;
            phi.push_back(v);
            phi_norm.push_back(nv);
        }
    }
    // generic functional, deterministic
    {
        int n = L.rank();
        QVec w(n);
        for (int i = 0; i < n; ++i) w[i] = Rat(boost::multiprecision::pow(Int(9973), i));
        auto f = [&](const IVec& v) {
            Rat s(0);
            for (int i = 0; i < n; ++i) s += w[i] * Rat(v[i]);
            return s;
        };
        for (int attempt = 0; attempt < 64; ++attempt) {
            bool ok = true;
            for (auto& r : phi)
                if (f(r).is_zero()) { ok = false; break; }
            if (ok) break;
            for (int i = 0; i < n; ++i) w[i] += Rat(Int(attempt + 1), Int(101 + i));
        }
        std::vector<std::pair<IVec, Int>> pos;
        for (size_t i = 0; i < phi.size(); ++i)
            if (f(phi[i]).sign() > 0) pos.emplace_back(phi[i], phi_norm[i]);
        std::set<IVec> pos_set;
        for (auto& [v, nv] : pos) pos_set.insert(v);
        std::vector<std::pair<IVec, Int>> simple;
        for (auto& [v, nv] : pos) {
            bool is_sum = false;
            for (auto& [a, na] : pos) {
                if (a == v) continue;
                IVec diff(v.size());
                for (size_t i = 0; i < v.size(); ++i) diff[i] = v[i] - a[i];
                if (pos_set.count(diff)) { is_sum = true; break; }
            }
            if (!is_sum) simple.emplace_back(v, nv);
        }
        std::sort(simple.begin(), simple.end(),
                  [](auto& a, auto& b) { return lex_less(a.first, b.first); });
        for (auto& [v, nv] : simple) {
            // orient so that the chamber contains h (v.h = 0 here, keep sign canonical)
            if (!accept(v, nv)) {
                // with a genuine simple system this cannot happen
                throw std::runtime_error("vinberg: distance-zero simple system is not compatible");
            }
        }
    }

    // a vector with u.h = g, g = divisibility of h
    Int g_h = divisibility(L, h);
    IVec u(L.rank(), 0);
    {
        IVec pair_vec(L.rank());
        for (int j = 0; j < L.rank(); ++j) {
            Int s = 0;
            for (int i = 0; i < L.rank(); ++i) s += h[i] * L.gram[i][j];
            pair_vec[j] = s;
        }
        // extended gcd over the pairing vector
        Int cur = 0;
        for (int j = 0; j < L.rank(); ++j) {
            if (pair_vec[j] == 0) continue;
            if (cur == 0) {
                u.assign(L.rank(), 0);
                u[j] = pair_vec[j] > 0 ? 1 : -1;
                cur = boost::multiprecision::abs(pair_vec[j]);
                continue;
            }
            // fold pair_vec[j] into the running gcd, tracking the combination
            Int a = cur, b = pair_vec[j], x0 = 1, x1 = 0, y0 = 0, y1 = 1;
            while (b != 0) {
                Int q = a / b;
                a -= q * b;
                std::swap(a, b);
                x0 -= q * x1;
                std::swap(x0, x1);
                y0 -= q * y1;
                std::swap(y0, y1);
            }
            // a = gcd, with a = x0*cur + y0*pair_vec_j_original ... rebuild u
            IVec nu(L.rank(), 0);
            for (int t2 = 0; t2 < L.rank(); ++t2) nu[t2] = x0 * u[t2];
            nu[j] += y0;
            if (a < 0) {
                a = -a;
                for (auto& t2 : nu) t2 = -t2;
            }
            u = nu;
            cur = a;
        }
        if (cur != g_h) throw std::runtime_error("vinberg: gcd bookkeeping failed");
    }

    QMat perpQ;  // rows of perp as rational vectors, for coset solves
    // shells ordered by (m^2 / |k|)
    std::vector<std::pair<Rat, std::pair<long long, RootNorm>>> shells;
    for (long long m = 1; m * (long long)g_h <= opts.max_m; ++m) {
        long long mm = m * (long long)g_h;
        for (const auto& rn : opts.menu)
            shells.push_back({Rat(Int(mm) * mm, Int(rn.norm)), {mm, rn}});
    }
    std::sort(shells.begin(), shells.end(), [](auto& a, auto& b) {
        if (a.first != b.first) return a.first < b.first;
        if (a.second.first != b.second.first) return a.second.first < b.second.first;
        return a.second.second.norm < b.second.second.norm;
    });

    auto stop_condition = [&]() {
        auto comps = connected_parabolics(L, diag);
        if (comps.empty()) return false;
        int want = L.rank() - 2;
        auto classes = parabolic_subdiagrams(L, diag, want);
        if (classes.empty()) return false;
        for (size_t ci = 0; ci < comps.size(); ++ci) {
            bool covered = false;
            for (const auto& cl : classes) {
                for (const auto& c : cl.components)
                    if (c.nodes == comps[ci].nodes) { covered = true; break; }
                if (covered) break;
            }
            if (!covered) return false;
        }
        return true;
    };

    if (stop_condition()) {
        res.stopped = true;
        return res;
    }

    for (const auto& shell : shells) {
        long long m = shell.second.first;
        const RootNorm& rn = shell.second.second;
        // delta = -(m/g) u + z, z in h-perp; perp-part norm is -k - m^2/h^2
        Rat target = -Rat(rn.norm) - Rat(Int(m) * m) / Rat(h2);
        if (target.sign() >= 0) continue;
        // shift: perp-coordinates of the h-orthogonal part of delta0 = -(m/g) u
        IVec delta0(L.rank());
        for (int i = 0; i < L.rank(); ++i) delta0[i] = -Int(m) / g_h * u[i];
        Rat lam = Rat(L.pair(delta0, h)) / Rat(h2);  // = -m/h^2
        QVec d0_perp(L.rank());
        for (int i = 0; i < L.rank(); ++i) d0_perp[i] = Rat(delta0[i]) - lam * Rat(h[i]);
        // solve perp^T s = d0_perp
        IMat perpT(L.rank(), IVec(perp.size()));
        for (int i = 0; i < L.rank(); ++i)
            for (size_t j = 0; j < perp.size(); ++j) perpT[i][j] = perp[j][i];
        auto sopt = solve_rational(perpT, d0_perp);
        if (!sopt) throw std::runtime_error("vinberg: perp solve failed");
        std::vector<IVec> candidates;
        for (const auto& vq : coset_vectors_of_norm(perpL, *sopt, target)) {
            // z = sum (vq_i - s_i) perp_i; delta = delta0 + z
            IVec delta = delta0;
            for (size_t i = 0; i < perp.size(); ++i) {
                Rat coeff = vq[i] - (*sopt)[i];
                if (!coeff.is_integer()) { delta.clear(); break; }
                for (int j = 0; j < L.rank(); ++j) delta[j] += coeff.num() * perp[i][j];
            }
            if (delta.empty()) continue;
            Int nv = L.norm(delta);
            if (nv != -Int(rn.norm) || L.pair(delta, h) != -Int(m)) continue;
            if (!menu_accepts(L, rn, delta, nv)) continue;
            candidates.push_back(std::move(delta));
        }
        std::sort(candidates.begin(), candidates.end(), lex_less);
        bool added = false;
        for (auto& c : candidates)
            if ((long long)diag.roots.size() < opts.max_roots && accept(c, -Int(rn.norm)))
                added = true;
        ++res.shells_done;
        if (added && stop_condition()) {
            res.stopped = true;
            break;
        }
        if ((long long)diag.roots.size() >= opts.max_roots) break;
    }

    // edge matrix
    size_t nn = diag.roots.size();
    diag.edge.assign(nn, std::vector<EdgeKind>(nn, EdgeKind::kNone));
    for (size_t i = 0; i < nn; ++i)
        for (size_t j = i + 1; j < nn; ++j) {
            Int g = dot(L, diag.roots[i], diag.roots[j]);
            diag.edge[i][j] = diag.edge[j][i] =
                classify_edge(g, -diag.norms[i], -diag.norms[j]);
        }
    return res;
}

std::vector<ParabolicComponent> connected_parabolics(const GramLattice& L, const CoxeterDiagram& d) {
    int n = (int)d.roots.size();
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && dot(L, d.roots[i], d.roots[j]) != 0) adj[i].push_back(j);

    std::set<std::vector<int>> seen_elliptic, seen_parabolic;
    std::vector<ParabolicComponent> out;

    // grow connected subsets; elliptic subsets extend, parabolic ones get
    // recorded, indefinite ones die
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        frontier.push_back({i});
        seen_elliptic.insert({i});
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& sub : frontier) {
            std::set<int> cand;
            for (int v : sub)
                for (int w : adj[v])
                    if (!std::binary_search(sub.begin(), sub.end(), w)) cand.insert(w);
            for (int w : cand) {
                std::vector<int> ns = sub;
                ns.insert(std::lower_bound(ns.begin(), ns.end(), w), w);
                if (seen_elliptic.count(ns) || seen_parabolic.count(ns)) continue;
                IMat basis;
                for (int v : ns) basis.push_back(d.roots[v]);
                Signature s = gram_of_span(L, basis).sig();
                if (s.pos > 0) continue;  // indefinite
                if (s.zero == 0) {
                    seen_elliptic.insert(ns);
                    next.push_back(ns);
                    continue;
                }
                seen_parabolic.insert(ns);
                ParabolicComponent pc;
                pc.nodes = ns;
                pc.rank = (int)ns.size() - 1;
                // null vector of the induced Gram, mapped to L coordinates
                GramLattice sp = gram_of_span(L, basis);
                auto ker = int_kernel(sp.gram);
                if (ker.size() != 1)
                    throw std::runtime_error("parabolic component with kernel rank != 1");
                IVec nv(L.rank(), 0);
                for (size_t i2 = 0; i2 < ns.size(); ++i2)
                    for (int j = 0; j < L.rank(); ++j) nv[j] += ker[0][i2] * d.roots[ns[i2]][j];
                pc.null_vector = make_primitive(nv);
                out.push_back(std::move(pc));
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(),
              [](const ParabolicComponent& a, const ParabolicComponent& b) { return a.nodes < b.nodes; });
    return out;
}

namespace {

// affine type of a connected parabolic component, via the quotient by its
// radical (drop one node; the rest is a definite root lattice)
std::string component_type(const GramLattice& L, const CoxeterDiagram& d,
                           const ParabolicComponent& pc) {
    if (pc.nodes.size() == 1) throw std::runtime_error("component_type: single node");
    IMat basis;
    for (size_t i = 0; i + 1 < pc.nodes.size(); ++i) basis.push_back(d.roots[pc.nodes[i]]);
    GramLattice q = gram_of_span(L, basis);
    Signature s = q.sig();
    if (s.pos != 0 || s.zero != 0) throw std::runtime_error("component_type: bad quotient");
    bool all_two = true;
    for (int nidx : pc.nodes) all_two &= d.norms[nidx] == -2;
    if (all_two) {
        auto rs = root_system(q);
        if (rs.components.size() == 1) return rs.components[0].str() + "~";
    }
    return "P(rank " + std::to_string(pc.rank) + ")~";
}

}  // namespace

std::vector<ParabolicClass> parabolic_subdiagrams(const GramLattice& L, const CoxeterDiagram& d,
                                                  int rank) {
    auto comps = connected_parabolics(L, d);
    int m = (int)comps.size();
    // compatibility: node-disjoint and mutually orthogonal
    std::vector<std::vector<bool>> ok(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool disjoint = true;
            for (int a : comps[i].nodes)
                if (std::binary_search(comps[j].nodes.begin(), comps[j].nodes.end(), a))
                    disjoint = false;
            if (!disjoint) continue;
            bool orth = true;
            for (int a : comps[i].nodes)
                for (int b : comps[j].nodes)
                    if (dot(L, d.roots[a], d.roots[b]) != 0) orth = false;
            ok[i][j] = ok[j][i] = orth;
        }

    std::vector<ParabolicClass> out;
    std::vector<int> picked;
    std::function<void(int, int)> dfs = [&](int from, int total) {
        if (total == rank) {
            ParabolicClass cl;
            cl.rank = rank;
            for (int i : picked) cl.components.push_back(comps[i]);
            // common isotropic line
            cl.null_vector = comps[picked[0]].null_vector;
            for (int i : picked)
                if (comps[i].null_vector != cl.null_vector)
                    throw std::runtime_error("parabolic packing with skew null lines");
            std::vector<std::string> types;
            for (int i : picked) types.push_back(component_type(L, d, comps[i]));
            std::sort(types.begin(), types.end());
            std::map<std::string, int> mult;
            for (auto& t : types) ++mult[t];
            std::string label;
            for (auto& [t, c] : mult) {
                if (!label.empty()) label += " + ";
                label += c > 1 ? t + " x" + std::to_string(c) : t;
            }
            cl.type_multiset = label;
            out.push_back(std::move(cl));
            return;
        }
        for (int i = from; i < m; ++i) {
            if (total + comps[i].rank > rank) continue;
            bool compat = true;
            for (int p : picked) compat &= ok[p][i];
            if (!compat) continue;
            // null lines must agree
            if (!picked.empty() && comps[i].null_vector != comps[picked[0]].null_vector) continue;
            picked.push_back(i);
            dfs(i + 1, total + comps[i].rank);
            picked.pop_back();
        }
    };
    dfs(0, 0);
    return out;
}

GramLattice isotropic_quotient(const GramLattice& L, const IVec& e) {
    if (L.norm(e) != 0) throw std::invalid_argument("isotropic_quotient: e is not isotropic");
    IMat perp = perp_basis(L, e);
    // coordinates of e in the perp basis
    IMat perpT(L.rank(), IVec(perp.size()));
    for (int i = 0; i < L.rank(); ++i)
        for (size_t j = 0; j < perp.size(); ++j) perpT[i][j] = perp[j][i];
    QVec eq(L.rank());
    for (int i = 0; i < L.rank(); ++i) eq[i] = Rat(e[i]);
    auto c = solve_rational(perpT, eq);
    if (!c) throw std::runtime_error("isotropic_quotient: e not in its own perp");
    IVec ci(perp.size());
    for (size_t i = 0; i < perp.size(); ++i) {
        if (!(*c)[i].is_integer()) throw std::runtime_error("isotropic_quotient: non-integral coordinates");
        ci[i] = (*c)[i].num();
    }
    ci = make_primitive(ci);
    IMat B = extend_to_unimodular(ci);
    // new perp basis: columns of B in perp coordinates; drop the first (= e)
    IMat quot_basis;
    for (size_t col = 1; col < perp.size(); ++col) {
        IVec v(L.rank(), 0);
        for (size_t i = 0; i < perp.size(); ++i)
            for (int j = 0; j < L.rank(); ++j) v[j] += B[i][col] * perp[i][j];
        quot_basis.push_back(std::move(v));
    }
    return gram_of_span(L, quot_basis);
}

namespace {

std::string quotient_label(const GramLattice& Q) {
    Signature s = Q.sig();
    if (s.pos == 0 && s.zero == 0) {
        // definite: label by the root component multiset
        auto rs = root_system(Q);
        std::map<std::string, int> mult;
        for (auto& c : rs.components) ++mult[c.str()];
        std::string label;
        for (auto& [t, c] : mult) {
            if (!label.empty()) label += "+";
            label += c > 1 ? std::to_string(c) + t : t;
        }
        return label.empty() ? "(rootless)" : label;
    }
    // indefinite 2-elementary quotients in this project: match against the
    // two hyperbolic labels from the boundary figure
    for (const char* name : {"D8+D4+U", "E8+D4+U"}) {
        GramLattice cand = parse_lattice_spec(name);
        if (in_genus(Q, cand)) return name;
    }
    return "rank " + std::to_string(Q.rank()) + ", sig (" + std::to_string(s.pos) + "," +
           std::to_string(s.neg) + "), det " + Q.det().str();
}

}  // namespace

std::vector<IsotropicClass> isotropic_rank1_classes(const GramLattice& T) {
    DiscriminantForm D = discriminant_form(T);
    auto autos = form_automorphism_images(D.form);
    auto iso = D.form.isotropic_elements();

    // orbits of isotropic elements under +-O(q_T)
    std::vector<int> orbit(iso.size(), -1);
    auto index_of = [&](const FiniteQuadraticForm::Elem& e) {
        for (size_t i = 0; i < iso.size(); ++i)
            if (iso[i] == e) return (int)i;
        return -1;
    };
    int norb = 0;
    for (size_t i = 0; i < iso.size(); ++i) {
        if (orbit[i] >= 0) continue;
        std::vector<int> stack = {(int)i};
        orbit[i] = norb;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (const auto& img : autos) {
                FiniteQuadraticForm::Elem e(D.form.ngens(), 0);
                for (size_t g = 0; g < D.form.ngens(); ++g)
                    for (size_t c = 0; c < D.form.ngens(); ++c)
                        e[c] = (e[c] + iso[a][g] * img[g][c]) % (long long)D.form.orders[c];
                int j = index_of(e);
                if (j >= 0 && orbit[j] < 0) {
                    orbit[j] = norb;
                    stack.push_back(j);
                }
                // negation
                FiniteQuadraticForm::Elem ne(D.form.ngens());
                for (size_t c = 0; c < D.form.ngens(); ++c)
                    ne[c] = (-(long long)e[c] % (long long)D.form.orders[c] +
                             (long long)D.form.orders[c]) %
                            (long long)D.form.orders[c];
                j = index_of(ne);
                if (j >= 0 && orbit[j] < 0) {
                    orbit[j] = norb;
                    stack.push_back(j);
                }
            }
        }
        ++norb;
    }

    // explicit isotropic representative in T for each orbit.  With a U block
    // in the Gram the class c lifts to the isotropic vector
    //   v = d rho' + d e + beta f,   beta = -d rho'^2 / 2,
    // where rho' is a lift of c with cleared U coordinates and d its order;
    // otherwise fall back to a sparse search.
    std::vector<IsotropicClass> out(norb);
    std::vector<bool> have(norb, false);
    int n = T.rank();
    int missing = norb;
    std::optional<std::pair<int, int>> ublock;
    for (int i = 0; i + 1 < n && !ublock; ++i) {
        if (T.gram[i][i] != 0 || T.gram[i + 1][i + 1] != 0 || T.gram[i][i + 1] != 1) continue;
        bool clean = true;
        for (int j = 0; j < n; ++j) {
            if (j == i || j == i + 1) continue;
            clean &= T.gram[i][j] == 0 && T.gram[i + 1][j] == 0;
        }
        if (clean) ublock = {i, i + 1};
    }
    auto try_vector = [&](IVec v) {
        if (missing == 0) return;
        bool nonzero = false;
        for (auto& x : v) nonzero |= x != 0;
        if (!nonzero || T.norm(v) != 0) return;
        v = make_primitive(v);
        Int div = divisibility(T, v);
        auto cls = disc_class_of(T, D, v, div);
        int idx = index_of(cls);
        if (idx < 0) return;
        int ob = orbit[idx];
        if (have[ob]) return;
        have[ob] = true;
        --missing;
        IsotropicClass& c = out[ob];
        c.rank = 1;
        c.representative = v;
        bool trivial = std::all_of(cls.begin(), cls.end(), [](long long x) { return x == 0; });
        c.h_label = trivial ? "trivial" : "Z/" + div.str();
        c.quotient_label = quotient_label(isotropic_quotient(T, v));
    };
    if (ublock) {
        auto [u1, u2] = *ublock;
        for (size_t i = 0; i < iso.size() && missing > 0; ++i) {
            const auto& c = iso[i];
            if (std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; })) {
                IVec v(n, 0);
                v[u1] = 1;
                try_vector(v);
                continue;
            }
            long long d = 1;
            for (size_t g = 0; g < c.size(); ++g) {
                if (c[g] == 0) continue;
                long long o = (long long)D.form.orders[g];
                d = std::lcm(d, o / std::gcd(c[g], o));
            }
            QVec rho(n, Rat(0));
            for (size_t g = 0; g < c.size(); ++g)
                if (c[g])
                    for (int j = 0; j < n; ++j) rho[j] += Rat(c[g]) * D.generator_lifts[g][j];
            // U coordinates of a dual vector are integers; clear them
            rho[u1] = Rat(0);
            rho[u2] = Rat(0);
            Rat rho2(0);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (rho[a].is_zero() || T.gram[a][b] == 0) continue;
                    rho2 += rho[a] * Rat(T.gram[a][b]) * rho[b];
                }
            IVec v(n, 0);
            for (int j = 0; j < n; ++j) {
                Rat x = Rat(d) * rho[j];
                if (!x.is_integer()) throw std::runtime_error("isotropic_rank1_classes: bad lift order");
                v[j] = x.num();
            }
            v[u1] += d;
            Rat beta = Rat(-d) * rho2 / Rat(2);
            if (!beta.is_integer()) throw std::runtime_error("isotropic_rank1_classes: odd lift square");
            v[u2] += beta.num();
            try_vector(v);
        }
    }
    for (int support = 1; support <= 3 && missing > 0; ++support) {
        std::vector<int> idxs(support);
        std::function<void(int, int)> pick = [&](int pos, int from) {
            if (missing == 0) return;
            if (pos == support) {
                std::vector<long long> coeff(support, -2);
                for (;;) {
                    IVec v(n, 0);
                    for (int i = 0; i < support; ++i) v[idxs[i]] = coeff[i];
                    try_vector(v);
                    int i = 0;
                    while (i < support && ++coeff[i] > 2) coeff[i++] = -2;
                    if (i == support) break;
                }
                return;
            }
            for (int i = from; i < n; ++i) {
                idxs[pos] = i;
                pick(pos + 1, i + 1);
            }
        };
        pick(0, 0);
    }
    if (missing > 0)
        throw std::runtime_error("isotropic_rank1_classes: no representative found in the search box");
    return out;
}

std::vector<IsotropicClass> isotropic_rank2_classes(const GramLattice& N_part, const IVec& h,
                                                    const VinbergOptions& opts) {
    auto vr = vinberg(N_part, h, opts);
    if (!vr.stopped) throw std::runtime_error("isotropic_rank2_classes: Vinberg budget exhausted");
    auto classes = parabolic_subdiagrams(N_part, vr.diagram, N_part.rank() - 2);

    GramLattice T = direct_sum(N_part, lat_U());
    auto rank1 = isotropic_rank1_classes(T);
    std::string label_trivial, label_div2;
    for (auto& c : rank1)
        (c.h_label == "trivial" ? label_trivial : label_div2) = c.quotient_label;

    // dedup parabolic packings by (H_E, quotient label)
    std::map<std::pair<std::string, std::string>, IsotropicClass> dedup;
    for (const auto& cl : classes) {
        IsotropicClass c;
        c.rank = 2;
        c.representative = cl.null_vector;
        Int div = divisibility(N_part, cl.null_vector);
        c.h_label = div == 1 ? "trivial" : "Z/" + div.str();
        c.quotient_label = quotient_label(isotropic_quotient(N_part, cl.null_vector));
        c.contains.push_back(label_trivial);
        if (div == 2) c.contains.push_back(label_div2);
        dedup.insert({{c.h_label, c.quotient_label}, c});
    }
    std::vector<IsotropicClass> out;
    for (auto& [k, v] : dedup) out.push_back(v);
    return out;
}

IVec reduce_to_chamber(const GramLattice& L, const CoxeterDiagram& d, IVec v) {
    for (int guard = 0; guard < 100000; ++guard) {
        bool moved = false;
        for (size_t i = 0; i < d.roots.size(); ++i) {
            Int p = dot(L, d.roots[i], v);
            if (p <= 0) continue;
            // reflect: v -> v - 2 (v.delta)/delta^2 delta
            Int k = -d.norms[i];  // |delta^2|
            // 2p/(-k) delta; p and k integers, delta^2 | 2p for lattice roots
            Int coeff_num = 2 * p;
            if (coeff_num % k != 0) throw std::runtime_error("reduce_to_chamber: non-integral reflection");
            Int c = coeff_num / k;
            for (size_t j = 0; j < v.size(); ++j) v[j] += c * d.roots[i][j];
            moved = true;
        }
        if (!moved) return v;
    }
    throw std::runtime_error("reduce_to_chamber: did not terminate");
}

}  // namespace pairlat
