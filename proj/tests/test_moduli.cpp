#include <doctest.h>

#include "pairlat/moduli.hpp"
#include "pairlat/strata.hpp"

using namespace pairlat;

TEST_CASE("root classification against the polarization") {
    // delta = e1 - e2 pairs with e1
    CHECK(classify_root(Int(-2), Int(0), {Int(-2), Int(2), Int(0), Int(0), Int(0)}) ==
          RootLocus::kInfinity);
    CHECK(classify_root(Int(-2), Int(0), {Int(0), Int(0), Int(0), Int(0), Int(0)}) ==
          RootLocus::kFinite);
    CHECK(classify_root(Int(-2), Int(0), {Int(-2), Int(0), Int(0), Int(0), Int(0)}) ==
          RootLocus::kInfinity);
    CHECK_THROWS(classify_root(Int(-2), Int(1), {}));
    CHECK_THROWS(classify_root(Int(-4), Int(0), {}));
}

TEST_CASE("discriminant bidegree") {
    CHECK(discriminant_bidegree(5) == std::pair<Int, Int>{8, 20});
    CHECK(Rat(20, 8) == rat(5, 2));
    CHECK(discriminant_bidegree(2) == std::pair<Int, Int>{2, 2});
    CHECK(discriminant_bidegree(3) == std::pair<Int, Int>{4, 6});
    CHECK_THROWS(discriminant_bidegree(1));
}

TEST_CASE("config parsing") {
    auto c = parse_ade_config("E7+2A1+D4");
    CHECK(config_str(c) == "2A1+D4+E7");
    CHECK(lattice_of_config(c).rank() == 13);
    CHECK_THROWS(parse_ade_config("B2"));
    CHECK_THROWS(parse_ade_config("D3"));
}

TEST_CASE("occurrence: A12 yes, A13 no") {
    auto yes = config_occurs(parse_ade_config("A12"));
    CHECK(yes.verdict == OccursResult::kYes);
    REQUIRE(yes.certificate);
    CHECK(yes.certificate->subgroup_order == 1);  // N = M + A12 itself
    CHECK(yes.certificate->N.rank() == 18);
    Signature s = yes.certificate->N.sig();
    CHECK(s.pos == 1);
    CHECK(s.neg == 17);

    auto no = config_occurs(parse_ade_config("A13"));
    CHECK(no.verdict == OccursResult::kNo);
    REQUIRE(!no.trace.empty());
    CHECK(no.trace[0].find("length obstruction") != std::string::npos);
}

TEST_CASE("occurrence: small configurations") {
    CHECK(config_occurs(parse_ade_config("A1")).verdict == OccursResult::kYes);
    CHECK(config_occurs(parse_ade_config("E8")).verdict == OccursResult::kYes);
    auto r = config_occurs(parse_ade_config("A11"));
    CHECK(r.verdict == OccursResult::kYes);
}

TEST_CASE("the ten-node certificate has the five-line glue structure") {
    auto r = config_occurs(parse_ade_config("10A1"));
    REQUIRE(r.verdict == OccursResult::kYes);
    REQUIRE(r.certificate);
    CHECK(r.certificate->subgroup_order == 16);
    CHECK(r.certificate->N.rank() == 16);
    // N has |det| = |det(M + 10A1)| / |H|^2 = 16 * 2^10 / 256
    CHECK(boost::multiprecision::abs(r.certificate->N.det()) == 64);
    CHECK(r.passing == 1);
}

TEST_CASE("occurrence: budget limits are surfaced, not guessed") {
    auto over = config_occurs(parse_ade_config("17A1"));
    CHECK(over.verdict == OccursResult::kUndetermined);  // beyond the Milnor cap
    auto wide = config_occurs(parse_ade_config("12A1"));
    CHECK(wide.verdict == OccursResult::kUndetermined);  // beyond the symmetric search
    REQUIRE(!wide.trace.empty());
}

TEST_CASE("subdiagram deformation relation") {
    CHECK(is_subdiagram_deformation(parse_ade_config("A12"), parse_ade_config("A11")));
    CHECK(is_subdiagram_deformation(parse_ade_config("D5"), parse_ade_config("A4")));
    CHECK(is_subdiagram_deformation(parse_ade_config("D5"), parse_ade_config("2A1+A2")));
    CHECK(is_subdiagram_deformation(parse_ade_config("10A1"), parse_ade_config("9A1")));
    CHECK(is_subdiagram_deformation(parse_ade_config("E8"), parse_ade_config("E8")));
    CHECK_FALSE(is_subdiagram_deformation(parse_ade_config("A4"), parse_ade_config("D4")));
    CHECK_FALSE(is_subdiagram_deformation(parse_ade_config("A3"), parse_ade_config("3A1")));
    CHECK_FALSE(is_subdiagram_deformation(parse_ade_config("2A2"), parse_ade_config("A3")));
    // equal total rank forces equality
    CHECK_FALSE(is_subdiagram_deformation(parse_ade_config("E6"), parse_ade_config("A5+A1")));
}

TEST_CASE("deformation monotonicity harness") {
    auto rep = deformation_monotonicity(parse_ade_config("A12"), parse_ade_config("A11"));
    CHECK(rep.relation_valid);
    CHECK(rep.r_verdict == OccursResult::kYes);
    CHECK(rep.rp_verdict == OccursResult::kYes);
    CHECK(rep.implication_holds);

    auto self = deformation_monotonicity(parse_ade_config("A12"), parse_ade_config("A12"));
    CHECK(self.implication_holds);

    CHECK_THROWS(deformation_monotonicity(parse_ade_config("A4"), parse_ade_config("D4")));
}

TEST_CASE("certificate invariants are re-verified on the constructed lattice") {
    auto r = config_occurs(parse_ade_config("A2+A3"));
    REQUIRE(r.verdict == OccursResult::kYes);
    REQUIRE(r.certificate);
    const GramLattice& N = r.certificate->N;
    CHECK(N.is_even());
    Signature s = N.sig();
    CHECK(s.pos == 1);
    CHECK(s.zero == 0);
}

TEST_CASE("stratification table") {
    for (const auto& c : verify_strata()) {
        CAPTURE(c.label + " " + c.detail);
        CHECK(c.pass);
    }
    CHECK(stratum_rows().size() == 7);
}

TEST_CASE("the explicit embedding of M into T(2,3,8)") {
    IMat j = m_into_t238();
    GramLattice T = lat_T(2, 3, 8), M = lat_M();
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) CHECK(T.pair(j[a], j[b]) == M.gram[a][b]);
    CHECK(is_primitive_sublattice(j));
}
