#include "pairlat/tables.hpp"

namespace pairlat {

namespace {

using MV = std::vector<Monomial>;

WeightedOrderInput wo(long long w1, long long w2, std::vector<std::pair<int, int>> ms) {
    return {w1, w2, std::move(ms)};
}

}  // namespace

const std::vector<ThresholdCase>& threshold_cases() {
    // Normal forms adapted to p = (1:0:0); when a special tangent exists it is
    // x2 = 0.  The affine germ at p is read off with x = x1/x0, y = x2/x0.
    static const std::vector<ThresholdCase> cases = {
        {"A1 (node)", 5, MV{{3, 1, 1}}, Rat(-2), std::nullopt},
        {"D>=7 (not D8')", 5, MV{{2, 1, 2}, {1, 3, 1}, {0, 5, 0}}, Rat(0), std::nullopt},
        {"E6", 5, MV{{2, 0, 3}, {1, 4, 0}}, rat(1, 7), wo(3, 4, {{4, 0}, {0, 3}})},
        {"D8'", 5, MV{{2, 1, 2}, {0, 4, 1}}, rat(1, 4), wo(1, 3, {{1, 2}, {4, 1}})},
        {"E7", 5, MV{{1, 3, 1}, {2, 0, 3}}, rat(2, 5), wo(2, 3, {{3, 1}, {0, 3}})},
        {"E8", 5, MV{{2, 0, 3}, {0, 5, 0}}, rat(5, 8), wo(3, 5, {{5, 0}, {0, 3}})},
        {"E~7 (simple elliptic)", 5, MV{{1, 4, 0}, {1, 2, 2}, {1, 0, 4}}, Rat(1), std::nullopt},
        {"T_{2,3,k} (cusp)", 5, MV{{2, 0, 3}, {1, 2, 2}, {0, 4, 1}}, Rat(1), std::nullopt},
        {"Z11", 5, MV{{1, 1, 3}, {0, 5, 0}}, rat(10, 7), wo(3, 4, {{1, 3}, {5, 0}})},
        {"Z12", 5, MV{{1, 1, 3}, {0, 4, 1}}, rat(8, 5), wo(2, 3, {{1, 3}, {4, 1}})},
        {"W12", 5, MV{{1, 0, 4}, {0, 5, 0}}, rat(5, 3), wo(4, 5, {{5, 0}, {0, 4}})},
        {"W13", 5, MV{{1, 0, 4}, {0, 4, 1}}, rat(13, 7), wo(3, 4, {{0, 4}, {4, 1}})},
        {"N16 (cone)", 5, MV{{0, 5, 0}}, rat(5, 2), std::nullopt},
        // the quartic pair of the "not a local analytic invariant" example
        {"quartic C1 (x^2 + x y^3)", 4, MV{{2, 0, 2}, {0, 3, 1}}, rat(1, 2), std::nullopt},
        {"quartic C2 ((x - y^2)^2 - x^2 y^2)", 4,
         MV{{2, 0, 2}, {1, 2, 1}, {0, 4, 0}, {0, 2, 2}}, Rat(0), std::nullopt},
    };
    return cases;
}

const std::vector<OrbitRow>& orbit_rows() {
    // Curve equations from the minimal-orbit table.  The line is not printed
    // there; it is the coordinate eigenline x_i of the C*-stabilizer with
    // mu(c, lambda) + t * r_i = 0, which works out to x0 in every row.
    //
    // The reference list carries the same equation x0*x1*x2^3 + x1^4*x2 under
    // both 8/5 and 13/7.  That curve is x1*x2*(x0*x2^2 + x1^3): its germ at
    // (1:0:0) is xy(y^2+x^3), a Z12, and its intersection with x0 = 0 has an
    // A1 at the 4-fold point, matching the 8/5 row's data (Z12, A1, 4) and
    // balancing at t = 8/5.  The duplication therefore damages the 13/7 row;
    // the 8/5 row stays flagged for audit, and the 13/7 row uses the W13
    // normal form x^4 + x y^4 in adapted coordinates, x2*(x0*x2^3 + x1^4),
    // cross-checked by lct(W13) = 7/16 and t_p = 3/lct - 5 = 13/7.
    static const std::vector<OrbitRow> rows = {
        {rat(1, 7), MV{{2, 0, 3}, {1, 4, 0}}, 0, "E6", "A7", false, ""},
        {rat(1, 4), MV{{2, 1, 2}, {0, 4, 1}}, 0, "D8'", "D5", false, ""},
        {rat(2, 5), MV{{1, 3, 1}, {2, 0, 3}}, 0, "E7", "A5", false, ""},
        {rat(5, 8), MV{{2, 0, 3}, {0, 5, 0}}, 0, "E8", "A4", false, ""},
        {rat(10, 7), MV{{1, 1, 3}, {0, 5, 0}}, 0, "Z11", "A1", false, ""},
        {rat(8, 5), MV{{1, 1, 3}, {0, 4, 1}}, 0, "Z12", "A1", true,
         "reference equation also listed under 13/7; the curve verifies here"},
        {rat(5, 3), MV{{1, 0, 4}, {0, 5, 0}}, 0, "W12", "smooth", false, ""},
        {rat(7, 4), MV{{2, 0, 3}, {0, 3, 2}}, 0, "double line", "A2", false, ""},
        {rat(13, 7), MV{{1, 0, 4}, {0, 4, 1}}, 0, "W13", "smooth", false,
         "equation rederived from the W13 normal form x^4 + x*y^4 (see 8/5 note)"},
        {Rat(2), MV{{1, 1, 3}, {0, 3, 2}}, 0, "double line", "A1", false, ""},
        {rat(11, 5), MV{{1, 0, 4}, {0, 3, 2}}, 0, "double line", "smooth", false, ""},
    };
    return rows;
}

std::vector<RowResult> verify_minimal_orbits() {
    std::vector<RowResult> out;
    for (const auto& row : orbit_rows()) {
        RowResult r;
        r.table = "orbits";
        Configuration pretty = make_configuration(5, row.curve, {row.line});
        r.label = "t = " + row.t.str() + "  C: " + pretty.str();
        StabilityInterval want = StabilityInterval::closed(row.t, row.t);
        StabilityInterval got = diagonal_interval(5, row.curve, row.line);
        r.expected = want.str();
        r.computed = got.str();
        r.pass = got == want;
        r.flagged = row.flagged;
        r.note = row.note;
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

RowResult alpha_row(const std::string& label, const MV& curve, const Rat& alpha) {
    // Table of non-reduced quintics C = 2D + R: alpha = max(t_p, 0) at the
    // worst singular point, computed from the adapted configuration.
    RowResult r;
    r.table = "table1";
    r.label = label;
    Rat tp = stability_threshold(curve);
    Rat got = std::max(tp, Rat(0));
    r.expected = alpha.str();
    r.computed = got.str();
    r.pass = got == alpha;
    return r;
}

RowResult beta_row(const std::string& table, const std::string& label, const MV& curve,
                   const Rat& beta) {
    // Degenerate-intersection rows: adapted coordinates put the intersection
    // point at (1:0:0) with L = (x2 = 0), and beta is the upper endpoint.
    RowResult r;
    r.table = table;
    r.label = label;
    Configuration cfg = make_configuration(5, curve, {2});
    StabilityInterval iv = interval_for_configuration(cfg);
    r.expected = beta.str();
    r.computed = iv.is_empty ? "empty" : (iv.hi ? iv.hi->str() : "inf");
    r.pass = !iv.is_empty && iv.hi && *iv.hi == beta;
    return r;
}

}  // namespace

std::vector<RowResult> verify_degree5_tables() {
    std::vector<RowResult> out;

    // --- non-reduced quintics C = 2D + R ---
    out.push_back(alpha_row("2D+R: D conic, R secant", MV{{2, 1, 2}, {1, 3, 1}, {0, 5, 0}}, Rat(0)));
    out.push_back(alpha_row("2D+R: D conic, R tangent", MV{{2, 0, 3}, {1, 2, 2}, {0, 4, 1}}, Rat(1)));
    out.push_back(alpha_row("2D+R: D line, |D cap R| >= 2", MV{{2, 1, 2}}, Rat(1)));
    out.push_back(alpha_row("2D+R: D line, D cap R = {p}, p smooth", MV{{2, 0, 3}, {0, 3, 2}}, rat(7, 4)));
    out.push_back(alpha_row("2D+R: D line, D cap R = {p}, p of type A1", MV{{1, 1, 3}, {0, 3, 2}}, Rat(2)));
    out.push_back(alpha_row("2D+R: D line, D cap R = {p}, p of type A2", MV{{1, 0, 4}, {0, 3, 2}}, rat(11, 5)));
    out.push_back(alpha_row("2D+R: D line, p triple point of R", MV{{0, 3, 2}}, rat(5, 2)));

    // --- simple singularity at the worst intersection point ---
    out.push_back(beta_row("table2", "k=1 smooth (A1 at C+L)", MV{{4, 0, 1}, {4, 1, 0}}, rat(5, 2)));
    out.push_back(beta_row("table2", "k=2 smooth (A3)", MV{{4, 0, 1}, {3, 2, 0}}, rat(5, 2)));
    out.push_back(beta_row("table2", "k=3 smooth (A5)", MV{{4, 0, 1}, {2, 3, 0}}, rat(11, 5)));
    out.push_back(beta_row("table2", "k=4 smooth (A7)", MV{{4, 0, 1}, {1, 4, 0}}, rat(13, 7)));
    out.push_back(beta_row("table2", "k=5 smooth (A9)", MV{{4, 0, 1}, {0, 5, 0}}, rat(5, 3)));
    out.push_back(beta_row("table2", "k=2 at A1 (D4)", MV{{3, 1, 1}, {3, 2, 0}}, rat(5, 2)));
    out.push_back(beta_row("table2", "k=3 at A1 (D6)", MV{{3, 1, 1}, {2, 3, 0}}, Rat(2)));
    out.push_back(beta_row("table2", "k=4 at A1 (D8)", MV{{3, 1, 1}, {1, 4, 0}}, rat(8, 5)));
    out.push_back(beta_row("table2", "k=5 at A1 (D10)", MV{{3, 1, 1}, {0, 5, 0}}, rat(10, 7)));
    out.push_back(beta_row("table2", "k=3 at A2 (E7)", MV{{3, 0, 2}, {2, 3, 0}}, rat(7, 4)));
    out.push_back(beta_row("table2", "k=2 at An (D_{n+3}), n=3", MV{{3, 2, 0}, {1, 0, 4}}, rat(5, 2)));

    // --- intersections destabilizing before slope 1 ---
    out.push_back(beta_row("table3", "A7: L component, 4-fold tangent quartic", MV{{3, 0, 2}, {0, 4, 1}}, rat(1, 7)));
    out.push_back(beta_row("table3", "D5: L special tangent", MV{{2, 1, 2}, {1, 4, 0}}, rat(1, 4)));
    out.push_back(beta_row("table3", "A5: L component, 3-fold tangent quartic", MV{{3, 0, 2}, {1, 3, 1}}, rat(2, 5)));
    out.push_back(beta_row("table3", "A4: L 5-fold tangent", MV{{3, 0, 2}, {0, 5, 0}}, rat(5, 8)));

    // --- strictly semistable pair with a whole interval ---
    // C = x1 (x0 x2 - x1^2)^2, a double conic plus a secant line, L = x1.
    // The reference equation has an inhomogeneous factor (x0^2 x2 - x1^2);
    // the degree-5 reading matching "double conic plus secant" is used.
    {
        RowResult r;
        r.table = "example";
        r.label = "strictly semistable pair: C = x1*(x0*x2 - x1^2)^2, L = x1";
        StabilityInterval want = StabilityInterval::closed(Rat(0), Rat(1));
        StabilityInterval got = diagonal_interval(5, MV{{2, 1, 2}, {1, 3, 1}, {0, 5, 0}}, 1);
        r.expected = want.str();
        r.computed = got.str();
        r.pass = got == want;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace pairlat
