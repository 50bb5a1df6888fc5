#pragma once

#include <string>
#include <vector>

#include "pairlat/rational.hpp"

namespace pairlat {

// Monomial x0^a x1^b x2^c of a plane form.
struct Monomial {
    int a = 0, b = 0, c = 0;

    int degree() const { return a + b + c; }
    bool operator==(const Monomial&) const = default;
    // canonical order, x0-major
    bool operator<(const Monomial& o) const {
        if (a != o.a) return a > o.a;
        if (b != o.b) return b > o.b;
        return c > o.c;
    }
    std::string str() const;
};

// <m, r> = a + b r - c (1 + r), the normalized weight pairing
Rat pairing(const Monomial& m, const Rat& r);

// affine data of <m, .>: value = intercept + slope * r
struct AffinePiece {
    long long intercept = 0;  // a - c
    long long slope = 0;      // b - c
    Rat at(const Rat& r) const { return Rat(intercept) + Rat(slope) * r; }
    bool operator==(const AffinePiece&) const = default;
};
AffinePiece piece_of(const Monomial& m);

// strict dominance: m != m' and <m,r> >= <m',r> on all of [-1/2, 1]
// (affine in r, so the two endpoints decide)
bool dominates(const Monomial& m, const Monomial& mp);

// maximal elements; input must be non-empty, all of one degree
std::vector<Monomial> support(std::vector<Monomial> s);

inline const Monomial kCoord[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

// A configuration (Xi_d, Xi_1): the monomials present in the two equations.
struct Configuration {
    int d = 0;
    std::vector<Monomial> curve;  // degree d, non-empty
    std::vector<int> line;        // subset of {0,1,2}, non-empty, sorted

    // the line part is totally ordered by dominance, so its support is the
    // smallest coordinate index present
    int line_support() const { return line.front(); }
    std::vector<Monomial> curve_support() const { return support(curve); }
    void canonicalize();
    std::string str() const;
};

Configuration make_configuration(int d, std::vector<Monomial> curve, std::vector<int> line);

// all monomials of a given degree, canonically ordered
std::vector<Monomial> all_monomials(int d);

// coordinate permutation sigma acting on exponents: x_i -> x_{sigma[i]}
Monomial permute(const Monomial& m, const int sigma[3]);

}  // namespace pairlat
