#include <doctest.h>

#include <set>

#include "pairlat/hyperbolic.hpp"

using namespace pairlat;

namespace {

IVec base_in_m_e8() {
    IVec h(14, 0);
    IVec hm = m_polarization_h();
    for (int i = 0; i < 6; ++i) h[i] = hm[i];
    return h;
}

}  // namespace

TEST_CASE("vinberg rejects bad input") {
    CHECK_THROWS(vinberg(lat_E(8), IVec(8, 1)));  // not hyperbolic
    GramLattice L = parse_lattice_spec("U+<-2>");
    CHECK_THROWS(vinberg(L, {1, 0, 0}));  // h^2 = 0
}

TEST_CASE("empty norm menu gives an immediate budget stop") {
    GramLattice L = parse_lattice_spec("U+<-2>");
    VinbergOptions opts;
    opts.menu = {};
    auto vr = vinberg(L, {1, 1, 0}, opts);
    CHECK_FALSE(vr.stopped);
    CHECK(vr.diagram.roots.empty());
}

TEST_CASE("vinberg on U + <-2> classifies its isotropic lines") {
    GramLattice L = parse_lattice_spec("U+<-2>");
    IVec h = {1, 1, 0};
    auto vr = vinberg(L, h);
    REQUIRE(vr.stopped);

    // pairwise nonnegativity and menu conformance
    for (size_t i = 0; i < vr.diagram.roots.size(); ++i) {
        CHECK((vr.diagram.norms[i] == -2 || vr.diagram.norms[i] == -4));
        if (vr.diagram.norms[i] == -4) CHECK(divisibility(L, vr.diagram.roots[i]) == 2);
        for (size_t j = i + 1; j < vr.diagram.roots.size(); ++j)
            CHECK(L.pair(vr.diagram.roots[i], vr.diagram.roots[j]) >= 0);
    }

    auto classes = parabolic_subdiagrams(L, vr.diagram, L.rank() - 2);
    REQUIRE(!classes.empty());
    std::set<std::string> null_lines;
    for (const auto& c : classes) {
        // the null space really is isotropic
        CHECK(L.norm(c.null_vector) == 0);
        std::string key;
        for (const auto& x : c.null_vector) key += x.str() + ",";
        null_lines.insert(key);
    }

    // brute-force validation: every primitive isotropic vector in a box
    // reduces into the chamber onto one of the class representatives
    for (long long a = -6; a <= 6; ++a)
        for (long long b = -6; b <= 6; ++b)
            for (long long c = -6; c <= 6; ++c) {
                IVec v = {Int(a), Int(b), Int(c)};
                if (L.norm(v) != 0) continue;
                if (a == 0 && b == 0 && c == 0) continue;
                Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(
                                                       boost::multiprecision::abs(Int(a)),
                                                       boost::multiprecision::abs(Int(b))),
                                                   boost::multiprecision::abs(Int(c)));
                if (g != 1) continue;
                // move into the cone of h, then into the chamber
                Int vh = L.pair(v, h);
                if (vh < 0)
                    for (auto& x : v) x = -x;
                IVec red = reduce_to_chamber(L, vr.diagram, v);
                // proportional to some class null vector
                bool matched = false;
                for (const auto& cl : classes) {
                    const IVec& e = cl.null_vector;
                    Int cross0 = red[0] * e[1] - red[1] * e[0];
                    Int cross1 = red[0] * e[2] - red[2] * e[0];
                    Int cross2 = red[1] * e[2] - red[2] * e[1];
                    if (cross0 == 0 && cross1 == 0 && cross2 == 0) matched = true;
                }
                CHECK(matched);
            }
}

TEST_CASE("a synthetic affine E8 diagram yields one parabolic class of rank 8") {
    // simple roots of E8 inside E8 + U, plus the affine node -theta + e
    GramLattice L = parse_lattice_spec("E8+U");
    auto rs = root_system(lat_E(8));
    REQUIRE(rs.simple.size() == 8);
    CoxeterDiagram diag;
    for (const auto& s : rs.simple) {
        IVec v(10, 0);
        for (int i = 0; i < 8; ++i) v[i] = s[i];
        diag.roots.push_back(v);
        diag.norms.push_back(-2);
    }
    // highest root = the positive root with maximal pairing against all simples
    IVec theta;
    {
        auto all = root_system(lat_E(8)).roots;
        for (const auto& r : all) {
            bool dominant = true;
            for (const auto& s : rs.simple)
                if (lat_E(8).pair(r, s) > 0) dominant = false;  // negative definite flips signs
            if (dominant) {
                // want the one whose reflection hyperplanes ... take max height
                if (theta.empty()) theta = r;
            }
        }
        // fall back: pick the root maximizing -<r, rho> against the simple sum
        IVec rho(8, 0);
        for (const auto& s : rs.simple)
            for (int i = 0; i < 8; ++i) rho[i] += s[i];
        Int best = 0;
        for (const auto& r : all) {
            Int v = lat_E(8).pair(r, rho);
            if (v < best) {
                best = v;
                theta = r;
            }
        }
    }
    REQUIRE(!theta.empty());
    IVec affine(10, 0);
    for (int i = 0; i < 8; ++i) affine[i] = -theta[i];
    affine[8] = 1;  // isotropic U vector
    CHECK(L.norm(affine) == -2);
    diag.roots.push_back(affine);
    diag.norms.push_back(-2);

    auto comps = connected_parabolics(L, diag);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].rank == 8);
    auto classes = parabolic_subdiagrams(L, diag, 8);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].type_multiset == "E8~");
}

TEST_CASE("vinberg is monotone in the budget") {
    GramLattice N = direct_sum(lat_M(), lat_E(8));
    IVec h = base_in_m_e8();
    VinbergOptions small;
    small.max_roots = 14;
    small.max_m = 4;
    VinbergOptions big;
    auto a = vinberg(N, h, small);
    auto b = vinberg(N, h, big);
    REQUIRE(a.diagram.roots.size() <= b.diagram.roots.size());
    for (size_t i = 0; i < a.diagram.roots.size(); ++i)
        CHECK(a.diagram.roots[i] == b.diagram.roots[i]);
}

TEST_CASE("accepted roots are primitive and satisfy the divisibility menu") {
    GramLattice N = direct_sum(lat_M(), lat_E(8));
    auto vr = vinberg(N, base_in_m_e8());
    REQUIRE(vr.stopped);
    for (size_t i = 0; i < vr.diagram.roots.size(); ++i) {
        Int g = 0;
        for (const auto& x : vr.diagram.roots[i])
            g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
        CHECK(g == 1);
        if (vr.diagram.norms[i] == -4) CHECK(divisibility(N, vr.diagram.roots[i]) == 2);
    }
}

TEST_CASE("quotient determinant law for the boundary classes") {
    GramLattice N = direct_sum(lat_M(), lat_E(8));
    auto vr = vinberg(N, base_in_m_e8());
    REQUIRE(vr.stopped);
    Int det_n = boost::multiprecision::abs(N.det());
    for (const auto& cl : parabolic_subdiagrams(N, vr.diagram, 12)) {
        GramLattice q = isotropic_quotient(N, cl.null_vector);
        CHECK(q.is_even());
        Signature s = q.sig();
        CHECK(s.pos == 0);
        CHECK(s.zero == 0);
        CHECK(q.rank() == 12);
        Int div = divisibility(N, cl.null_vector);
        CHECK(boost::multiprecision::abs(q.det()) * div * div == det_n);
    }
}

TEST_CASE("rank-2 classification needs the budget") {
    GramLattice N = direct_sum(lat_M(), lat_E(8));
    VinbergOptions tiny;
    tiny.max_roots = 2;
    tiny.max_m = 1;
    CHECK_THROWS(isotropic_rank2_classes(N, base_in_m_e8(), tiny));
}

TEST_CASE("boundary classification of the transcendental lattice") {
    GramLattice T = parse_lattice_spec("D4+E8+U+U(2)");
    auto rank1 = isotropic_rank1_classes(T);
    REQUIRE(rank1.size() == 2);
    std::map<std::string, std::string> by_h;
    for (const auto& c : rank1) {
        by_h[c.h_label] = c.quotient_label;
        CHECK(T.norm(c.representative) == 0);
    }
    CHECK(by_h["trivial"] == "D8+D4+U");
    CHECK(by_h["Z/2"] == "E8+D4+U");

    GramLattice N = direct_sum(lat_M(), lat_E(8));
    auto rank2 = isotropic_rank2_classes(N, base_in_m_e8());
    REQUIRE(rank2.size() == 4);
    std::set<std::string> labels;
    for (const auto& c : rank2) {
        labels.insert(c.quotient_label);
        // every rank-2 class degenerates to the trivial rank-1 cusp
        CHECK(std::find(c.contains.begin(), c.contains.end(), "D8+D4+U") != c.contains.end());
        bool has_e8 =
            std::find(c.contains.begin(), c.contains.end(), "E8+D4+U") != c.contains.end();
        bool want = c.quotient_label == "D4+E8" || c.quotient_label == "D12";
        CHECK(has_e8 == want);
    }
    CHECK(labels == std::set<std::string>{"5A1+E7", "D12", "D4+D8", "D4+E8"});
}

TEST_CASE("a unimodular lattice has a single rank-1 cusp class") {
    auto classes = isotropic_rank1_classes(parse_lattice_spec("U+U"));
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].h_label == "trivial");
}

TEST_CASE("isotropic quotient") {
    // e in the U summand of E8 + U: the quotient is E8 again
    GramLattice L = parse_lattice_spec("E8+U");
    IVec e(10, 0);
    e[8] = 1;
    GramLattice q = isotropic_quotient(L, e);
    CHECK(q.rank() == 8);
    CHECK(root_system(q).count == 240);
    CHECK_THROWS(isotropic_quotient(L, IVec{1, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
}
