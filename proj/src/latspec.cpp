#include <cctype>
#include <stdexcept>

#include "pairlat/lattice.hpp"

namespace pairlat {

namespace {

// one summand: optional multiplicity, then A<n> | D<n> | E<n> | U | U(n) |
// T(p,q,r) | M | <k>
GramLattice parse_atom(const std::string& tok) {
    size_t i = 0;
    long long mult = 1;
    if (i < tok.size() && std::isdigit((unsigned char)tok[i])) {
        size_t j = i;
        while (j < tok.size() && std::isdigit((unsigned char)tok[j])) ++j;
        if (j == tok.size()) throw std::invalid_argument("lattice spec: bare number '" + tok + "'");
        mult = std::stoll(tok.substr(i, j - i));
        i = j;
    }
    if (mult < 1) throw std::invalid_argument("lattice spec: zero multiplicity in '" + tok + "'");

    auto args_of = [&](size_t open) {
        if (tok.back() != ')') throw std::invalid_argument("lattice spec: unbalanced '(' in '" + tok + "'");
        std::vector<long long> args;
        size_t pos = open + 1;
        while (pos < tok.size() - 1) {
            size_t comma = tok.find(',', pos);
            size_t end = comma == std::string::npos || comma > tok.size() - 1 ? tok.size() - 1 : comma;
            args.push_back(std::stoll(tok.substr(pos, end - pos)));
            pos = end + 1;
        }
        return args;
    };

    GramLattice atom;
    char c = tok[i];
    if (c == '<') {
        if (tok.back() != '>') throw std::invalid_argument("lattice spec: unbalanced '<' in '" + tok + "'");
        atom = lat_rank1(std::stoll(tok.substr(i + 1, tok.size() - i - 2)));
    } else if (c == 'M' && i + 1 == tok.size()) {
        atom = lat_M();
    } else if (c == 'U') {
        if (i + 1 == tok.size())
            atom = lat_U();
        else {
            auto args = args_of(i + 1);
            if (args.size() != 1) throw std::invalid_argument("lattice spec: U takes one argument");
            atom = lat_U_scaled(args[0]);
        }
    } else if (c == 'T') {
        auto args = args_of(i + 1);
        if (args.size() != 3) throw std::invalid_argument("lattice spec: T takes three arguments");
        atom = lat_T((int)args[0], (int)args[1], (int)args[2]);
    } else if (c == 'A' || c == 'D' || c == 'E') {
        int n = std::stoi(tok.substr(i + 1));
        atom = c == 'A' ? lat_A(n) : c == 'D' ? lat_D(n) : lat_E(n);
    } else {
        throw std::invalid_argument("lattice spec: cannot parse '" + tok + "'");
    }

    GramLattice out = atom;
    for (long long m = 1; m < mult; ++m) out = direct_sum(out, atom);
    if (mult > 1) out.name = std::to_string(mult) + atom.name;
    return out;
}

}  // namespace

GramLattice parse_lattice_spec(const std::string& spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.empty()) throw std::invalid_argument("lattice spec: empty");

    std::vector<std::string> tokens;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '<') ++depth;
        if (c == ')' || c == '>') --depth;
        if (c == '+' && depth == 0) {
            tokens.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    tokens.push_back(cur);

    std::optional<GramLattice> out;
    std::string name;
    for (const auto& tok : tokens) {
        if (tok.empty()) throw std::invalid_argument("lattice spec: empty summand in '" + spec + "'");
        GramLattice atom = parse_atom(tok);
        name = name.empty() ? atom.name : name + "+" + atom.name;
        out = out ? direct_sum(*out, atom) : atom;
    }
    out->name = name;
    return *out;
}

}  // namespace pairlat
