#pragma once

#include <map>

#include "pairlat/lattice.hpp"
#include "pairlat/monoform.hpp"

namespace pairlat {

// "x0^2*x2^3 + x1^5" over x0, x1, x2; coefficients are summed per monomial
// and then discarded after zero-testing (configurations record presence only)
std::vector<Monomial> parse_projective_form(const std::string& text);

// affine form in x, y with a declared mapping into projective coordinates;
// homogenized by the remaining coordinate to the requested degree (or to the
// maximal term degree when degree = 0)
std::vector<Monomial> parse_affine_form(const std::string& text, int x_to, int y_to, int degree);

// affine exponents (i, j) of x^i y^j for the weighted-order computations
std::vector<std::pair<int, int>> parse_affine_monomials(const std::string& text);

// "A12", "10A1", "E7+2A1+D4"
std::vector<AdeComponent> parse_ade_config(const std::string& text);
GramLattice lattice_of_config(const std::vector<AdeComponent>& config);
std::string config_str(const std::vector<AdeComponent>& config);

}  // namespace pairlat
