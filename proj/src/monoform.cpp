#include "pairlat/monoform.hpp"

#include <algorithm>
#include <stdexcept>

namespace pairlat {

std::string Monomial::str() const {
    if (a == 0 && b == 0 && c == 0) return "1";
    std::string s;
    auto put = [&](const char* v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    };
    put("x0", a);
    put("x1", b);
    put("x2", c);
    return s;
}

Rat pairing(const Monomial& m, const Rat& r) {
    return Rat(m.a) + Rat(m.b) * r - Rat(m.c) * (Rat(1) + r);
}

AffinePiece piece_of(const Monomial& m) { return {m.a - m.c, m.b - m.c}; }

bool dominates(const Monomial& m, const Monomial& mp) {
    if (m.degree() != mp.degree())
        throw std::invalid_argument("dominates: degree mismatch");
    if (m == mp) return false;
    // endpoints r = 1 and r = -1/2, cleared of denominators
    long long u = m.a + m.b - 2 * m.c, up = mp.a + mp.b - 2 * mp.c;
    long long v = 2 * m.a - m.b - m.c, vp = 2 * mp.a - mp.b - mp.c;
    return u >= up && v >= vp;
}

std::vector<Monomial> support(std::vector<Monomial> s) {
    if (s.empty()) throw std::invalid_argument("support: empty set");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<Monomial> out;
    for (const auto& m : s) {
        bool maximal = true;
        for (const auto& mp : s)
            if (dominates(mp, m)) { maximal = false; break; }
        if (maximal) out.push_back(m);
    }
    return out;
}

void Configuration::canonicalize() {
    std::sort(curve.begin(), curve.end());
    curve.erase(std::unique(curve.begin(), curve.end()), curve.end());
    std::sort(line.begin(), line.end());
    line.erase(std::unique(line.begin(), line.end()), line.end());
}

std::string Configuration::str() const {
    std::string s;
    for (const auto& m : curve) {
        if (!s.empty()) s += " + ";
        s += m.str();
    }
    s += " | ";
    for (size_t i = 0; i < line.size(); ++i) {
        if (i) s += "+";
        s += "x" + std::to_string(line[i]);
    }
    return s;
}

Configuration make_configuration(int d, std::vector<Monomial> curve, std::vector<int> line) {
    Configuration cfg{d, std::move(curve), std::move(line)};
    cfg.canonicalize();
    if (cfg.curve.empty()) throw std::invalid_argument("configuration: empty curve part");
    if (cfg.line.empty()) throw std::invalid_argument("configuration: empty line part");
    for (const auto& m : cfg.curve)
        if (m.degree() != d || m.a < 0 || m.b < 0 || m.c < 0)
            throw std::invalid_argument("configuration: bad curve monomial " + m.str());
    for (int i : cfg.line)
        if (i < 0 || i > 2) throw std::invalid_argument("configuration: bad line part");
    return cfg;
}

std::vector<Monomial> all_monomials(int d) {
    std::vector<Monomial> out;
    for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b) out.push_back({a, b, d - a - b});
    std::sort(out.begin(), out.end());
    return out;
}

Monomial permute(const Monomial& m, const int sigma[3]) {
    int e[3] = {0, 0, 0};
    e[sigma[0]] = m.a;
    e[sigma[1]] = m.b;
    e[sigma[2]] = m.c;
    return {e[0], e[1], e[2]};
}

}  // namespace pairlat
