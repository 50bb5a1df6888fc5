#include "pairlat/parse.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <stdexcept>

namespace pairlat {

namespace {

struct Term {
    long long coef = 1;
    std::map<std::string, int> vars;
};

// +/- separated terms; a term is coefficient and ^-powered factors joined by *
std::vector<Term> tokenize(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.empty()) throw std::invalid_argument("form: empty input");
    std::vector<Term> terms;
    size_t i = 0;
    while (i < s.size()) {
        Term t;
        if (s[i] == '+') ++i;
        else if (s[i] == '-') { t.coef = -1; ++i; }
        if (i >= s.size()) throw std::invalid_argument("form: dangling sign");
        bool saw_factor = false;
        bool expect_factor = true;
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            if (s[i] == '*') { ++i; expect_factor = true; continue; }
            if (std::isdigit((unsigned char)s[i])) {
                size_t j = i;
                while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
                t.coef *= std::stoll(s.substr(i, j - i));
                i = j;
                saw_factor = true;
                expect_factor = false;
                continue;
            }
            if (std::isalpha((unsigned char)s[i])) {
                size_t j = i + 1;
                while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
                std::string var = s.substr(i, j - i);
                i = j;
                int exp = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    size_t k = i;
                    while (k < s.size() && std::isdigit((unsigned char)s[k])) ++k;
                    if (k == i) throw std::invalid_argument("form: missing exponent");
                    exp = std::stoi(s.substr(i, k - i));
                    i = k;
                }
                t.vars[var] += exp;
                saw_factor = true;
                expect_factor = false;
                continue;
            }
            throw std::invalid_argument(std::string("form: unexpected character '") + s[i] +
                                        "' at position " + std::to_string(i));
        }
        if (!saw_factor || expect_factor) throw std::invalid_argument("form: empty term");
        terms.push_back(std::move(t));
    }
    return terms;
}

}  // namespace

std::vector<Monomial> parse_projective_form(const std::string& text) {
    std::map<std::array<int, 3>, long long> coef;
    for (const auto& t : tokenize(text)) {
        std::array<int, 3> e = {0, 0, 0};
        for (const auto& [v, exp] : t.vars) {
            if (v == "x0") e[0] += exp;
            else if (v == "x1") e[1] += exp;
            else if (v == "x2") e[2] += exp;
            else throw std::invalid_argument("form: unknown symbol '" + v + "'");
        }
        coef[e] += t.coef;
    }
    std::vector<Monomial> out;
    int degree = -1;
    for (const auto& [e, c] : coef) {
        if (c == 0) continue;
        Monomial m{e[0], e[1], e[2]};
        if (degree < 0) degree = m.degree();
        if (m.degree() != degree)
            throw std::invalid_argument("form: inhomogeneous without --affine");
        out.push_back(m);
    }
    if (out.empty()) throw std::invalid_argument("form: zero form has no configuration");
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> parse_affine_monomials(const std::string& text) {
    std::map<std::pair<int, int>, long long> coef;
    for (const auto& t : tokenize(text)) {
        int i = 0, j = 0;
        for (const auto& [v, exp] : t.vars) {
            if (v == "x") i += exp;
            else if (v == "y") j += exp;
            else throw std::invalid_argument("form: unknown symbol '" + v + "' (expected x, y)");
        }
        coef[{i, j}] += t.coef;
    }
    std::vector<std::pair<int, int>> out;
    for (const auto& [e, c] : coef)
        if (c != 0) out.push_back(e);
    if (out.empty()) throw std::invalid_argument("form: zero form");
    return out;
}

std::vector<Monomial> parse_affine_form(const std::string& text, int x_to, int y_to, int degree) {
    if (x_to < 0 || x_to > 2 || y_to < 0 || y_to > 2 || x_to == y_to)
        throw std::invalid_argument("affine form: bad coordinate mapping");
    int h = 3 - x_to - y_to;  // homogenizing coordinate
    auto affine = parse_affine_monomials(text);
    int maxdeg = 0;
    for (auto& [i, j] : affine) maxdeg = std::max(maxdeg, i + j);
    if (degree == 0) degree = maxdeg;
    if (maxdeg > degree) throw std::invalid_argument("affine form: terms exceed the target degree");
    std::vector<Monomial> out;
    for (auto& [i, j] : affine) {
        int e[3] = {0, 0, 0};
        e[x_to] = i;
        e[y_to] = j;
        e[h] = degree - i - j;
        out.push_back({e[0], e[1], e[2]});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<AdeComponent> parse_ade_config(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.empty()) throw std::invalid_argument("config: empty");
    std::vector<AdeComponent> out;
    size_t i = 0;
    while (i < s.size()) {
        long long mult = 1;
        if (std::isdigit((unsigned char)s[i])) {
            size_t j = i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
            mult = std::stoll(s.substr(i, j - i));
            i = j;
        }
        if (i >= s.size() || (s[i] != 'A' && s[i] != 'D' && s[i] != 'E'))
            throw std::invalid_argument("config: expected A/D/E in '" + text + "'");
        char fam = s[i++];
        size_t j = i;
        while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
        if (j == i) throw std::invalid_argument("config: missing rank in '" + text + "'");
        int rank = std::stoi(s.substr(i, j - i));
        i = j;
        if (fam == 'D' && rank < 4) throw std::invalid_argument("config: D needs rank >= 4");
        if (fam == 'E' && (rank < 6 || rank > 8)) throw std::invalid_argument("config: E rank in 6..8");
        if (fam == 'A' && rank < 1) throw std::invalid_argument("config: A needs rank >= 1");
        for (long long k = 0; k < mult; ++k) out.push_back({fam, rank});
        if (i < s.size()) {
            if (s[i] != '+') throw std::invalid_argument("config: expected '+' in '" + text + "'");
            ++i;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

GramLattice lattice_of_config(const std::vector<AdeComponent>& config) {
    std::optional<GramLattice> out;
    for (const auto& c : config) {
        GramLattice atom = c.family == 'A' ? lat_A(c.rank) : c.family == 'D' ? lat_D(c.rank) : lat_E(c.rank);
        out = out ? direct_sum(*out, atom) : atom;
    }
    if (!out) throw std::invalid_argument("config: empty");
    return *out;
}

std::string config_str(const std::vector<AdeComponent>& config) {
    std::map<std::string, int> mult;
    for (const auto& c : config) ++mult[c.str()];
    std::string s;
    for (const auto& [t, c] : mult) {
        if (!s.empty()) s += "+";
        s += c > 1 ? std::to_string(c) + t : t;
    }
    return s;
}

}  // namespace pairlat
