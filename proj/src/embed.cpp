#include <algorithm>
#include <map>

#include "pairlat/lattice.hpp"

namespace pairlat {

namespace {

long long length_of(const std::vector<Int>& invariants) { return (long long)invariants.size(); }

// named catalog atoms used for block-sum complement candidates
std::vector<GramLattice> catalog_atoms() {
    std::vector<GramLattice> atoms;
    atoms.push_back(lat_U());
    for (long long n : {2, 3, 4}) atoms.push_back(lat_U_scaled(n));
    for (int n = 1; n <= 16; ++n) atoms.push_back(lat_A(n));
    for (int n = 4; n <= 16; ++n) atoms.push_back(lat_D(n));
    for (int n : {6, 7, 8}) atoms.push_back(lat_E(n));
    atoms.push_back(lat_M());
    for (int k : {7, 8, 9, 10}) atoms.push_back(lat_T(2, 3, k));
    for (int k : {5, 6}) atoms.push_back(lat_T(2, 4, k));
    return atoms;
}

struct Target {
    int pos, neg;
    Int absdet;
};

// all even binary lattices [[2a,b],[b,2c]] with the exact determinant and
// signature, one Gauss-reduced representative per (a,b,c) in a safe box
std::vector<GramLattice> binary_blocks(const Target& t) {
    std::vector<GramLattice> out;
    if (t.pos + t.neg != 2) return out;
    Int D = t.absdet;
    if (t.pos == 1) D = -D;  // det = 4ac - b^2
    long long B = 64;
    for (long long a = -B; a <= B; ++a) {
        if (a == 0) {
            // [[0,b],[b,2c]] has det -b^2, signature (1,1); c reduced mod b
            if (t.pos != 1) continue;
            Int b2 = -D;
            Int b = boost::multiprecision::sqrt(b2);
            if (b * b != b2 || b == 0) continue;
            for (Int c = 0; c < b; ++c) {
                Int cc = 2 * c;
                out.push_back({{{0, b}, {b, cc}},
                               "[[0," + b.str() + "],[" + b.str() + "," + cc.str() + "]]"});
            }
            continue;
        }
        for (long long b = 0; b <= std::abs(a); ++b) {
            Int num = D + Int(b) * b;
            if (num % (4 * a) != 0) continue;
            Int c = num / (4 * a);
            IMat g = {{2 * a, b}, {b, 2 * c}};
            Signature s = signature_of(g);
            if (s.pos != t.pos || s.neg != t.neg || s.zero != 0) continue;
            out.push_back({g, "[[" + Int(2 * a).str() + "," + std::to_string(b) + "],[" +
                                  std::to_string(b) + "," + Int(2 * c).str() + "]]"});
        }
    }
    return out;
}

std::vector<GramLattice> rank1_blocks(const Target& t) {
    std::vector<GramLattice> out;
    if (t.pos + t.neg != 1) return out;
    if (t.absdet % 2 != 0) return out;
    long long k = (long long)t.absdet;
    out.push_back(lat_rank1(t.pos == 1 ? k : -k));
    return out;
}

}  // namespace

EmbedResult embeds_primitively_K3(const GramLattice& N) {
    if (!N.is_even()) return {EmbedResult::kNo, "lattice is not even", std::nullopt};
    if (N.is_degenerate()) return {EmbedResult::kNo, "degenerate lattice", std::nullopt};
    Signature s = N.sig();
    if (s.pos > 3 || s.neg > 19)
        return {EmbedResult::kNo,
                "signature (" + std::to_string(s.pos) + "," + std::to_string(s.neg) +
                    ") does not fit into (3,19)",
                std::nullopt};
    int rank = N.rank();
    DiscriminantForm D = discriminant_form(N);
    long long l = length_of(D.form.orders);
    if (l > 22 - rank)
        return {EmbedResult::kNo,
                "length obstruction: l(A_N) = " + std::to_string(l) + " > " +
                    std::to_string(22 - rank) + " = rk(Lambda) - rk(N)",
                std::nullopt};
    if (rank + l + 2 <= 22)
        return {EmbedResult::kYes, "rank + length criterion: rk + l + 2 <= 22", std::nullopt};

    // boundary case: look for an abstract complement K with q_K = -q_N
    Target t{3 - s.pos, 19 - s.neg, boost::multiprecision::abs(N.det())};
    FiniteQuadraticForm want = D.form.negated();

    if (t.pos + t.neg == 0) {
        if (t.absdet == 1) return {EmbedResult::kYes, "unimodular, full rank", std::nullopt};
        return {EmbedResult::kNo, "full rank but |det| > 1", std::nullopt};
    }

    auto atoms = catalog_atoms();
    std::optional<GramLattice> cert;
    std::map<std::string, std::vector<GramLattice>> binary_memo;
    auto binaries_for = [&](const Target& tail) -> const std::vector<GramLattice>& {
        std::string key = std::to_string(tail.pos) + "," + tail.absdet.str();
        auto it = binary_memo.find(key);
        if (it == binary_memo.end()) it = binary_memo.emplace(key, binary_blocks(tail)).first;
        return it->second;
    };
    // block sums: atoms chosen with non-decreasing index; the last one or two
    // ranks are solved exactly for the determinant
    std::function<void(size_t, const GramLattice*, int, int, Int)> dfs =
        [&](size_t from, const GramLattice* acc, int pos_left, int neg_left, Int det_left) {
            if (cert) return;
            int rank_left = pos_left + neg_left;
            auto finish = [&](const GramLattice& tail) {
                if (cert) return;
                GramLattice K = acc ? direct_sum(*acc, tail) : tail;
                if (boost::multiprecision::abs(K.det()) != t.absdet) return;
                Signature ks = K.sig();
                if (ks.pos != t.pos || ks.neg != t.neg || ks.zero != 0) return;
                if (!K.is_even()) return;
                try {
                    if (forms_isometric(discriminant_form(K).form, want)) cert = K;
                } catch (...) {
                }
            };
            if (rank_left == 0) {
                if (acc && det_left == 1) {
                    GramLattice K = *acc;
                    if (boost::multiprecision::abs(K.det()) == t.absdet) {
                        Signature ks = K.sig();
                        if (ks.pos == t.pos && ks.neg == t.neg && ks.zero == 0 &&
                            forms_isometric(discriminant_form(K).form, want))
                            cert = K;
                    }
                }
                return;
            }
            Target tail{pos_left, neg_left, boost::multiprecision::abs(det_left)};
            if (rank_left <= 2) {
                for (auto& block : rank_left == 1 ? rank1_blocks(tail) : binaries_for(tail))
                    finish(block);
                if (rank_left == 2) {
                    // also a pair of rank-1 blocks with split determinants
                    for (Int d1 = 2; d1 * d1 <= tail.absdet * 2; d1 += 2) {
                        if (tail.absdet % d1 != 0) continue;
                        Int d2 = tail.absdet / d1;
                        if (d2 % 2 != 0) continue;
                        std::vector<std::pair<long long, long long>> signs;
                        if (pos_left == 2) signs = {{1, 1}};
                        else if (neg_left == 2) signs = {{-1, -1}};
                        else signs = {{1, -1}, {-1, 1}};
                        for (auto [s1, s2] : signs)
                            finish(direct_sum(lat_rank1(s1 * (long long)d1), lat_rank1(s2 * (long long)d2)));
                    }
                }
            }
            for (size_t i = from; i < atoms.size(); ++i) {
                Signature as = atoms[i].sig();
                if (as.pos > pos_left || as.neg > neg_left) continue;
                Int adet = boost::multiprecision::abs(atoms[i].det());
                if (det_left % adet != 0) continue;
                GramLattice next = acc ? direct_sum(*acc, atoms[i]) : atoms[i];
                dfs(i, &next, pos_left - as.pos, neg_left - as.neg, det_left / adet);
                if (cert) return;
            }
        };
    dfs(0, nullptr, t.pos, t.neg, Int(t.absdet));

    if (cert)
        return {EmbedResult::kYes, "complement certificate " + cert->name + " with q = -q_N", cert};
    return {EmbedResult::kUndetermined,
            "necessary conditions hold but no complement found in the catalog", std::nullopt};
}

}  // namespace pairlat
