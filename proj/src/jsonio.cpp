#include "pairlat/jsonio.hpp"

namespace pairlat {

json to_json(const Rat& r) { return r.str(); }

json to_json(const Monomial& m) { return json::array({m.a, m.b, m.c}); }

json to_json(const Configuration& cfg) {
    json j;
    j["d"] = cfg.d;
    j["curve"] = json::array();
    for (const auto& m : cfg.curve) j["curve"].push_back(to_json(m));
    j["line"] = json::array();
    for (int i : cfg.line) j["line"].push_back("x" + std::to_string(i));
    return j;
}

json to_json(const StabilityInterval& iv) {
    json j;
    j["empty"] = iv.is_empty;
    if (!iv.is_empty) {
        j["lo"] = iv.lo.str();
        j["hi"] = iv.hi ? json(iv.hi->str()) : json("inf");
    }
    return j;
}

json to_json(const WallReport& rep) {
    json j;
    j["d"] = rep.d;
    j["raw"] = json::array();
    for (const auto& t : rep.raw) j["raw"].push_back(t.str());
    j["realized"] = json::array();
    for (const auto& [t, w] : rep.realized) {
        json e;
        e["t"] = t.str();
        json witness;
        witness["curve"] = json::array();
        for (const auto& m : w.config.curve) witness["curve"].push_back(to_json(m));
        witness["line"] = "x" + std::to_string(w.config.line);
        witness["side"] = w.side;
        e["witness"] = witness;
        e["r"] = w.r.str();
        j["realized"].push_back(e);
    }
    j["supports"] = rep.support_count;
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j;
}

json to_json(const GramLattice& L) {
    json j;
    if (!L.name.empty()) j["name"] = L.name;
    j["rank"] = L.rank();
    Signature s = L.sig();
    j["signature"] = json::array({s.pos, s.neg});
    j["det"] = L.det().str();
    j["gram"] = json::array();
    for (const auto& row : L.gram) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.str());
        j["gram"].push_back(r);
    }
    return j;
}

json to_json(const FiniteQuadraticForm& f) {
    json j;
    j["invariant_factors"] = json::array();
    for (const auto& d : f.orders) j["invariant_factors"].push_back(d.str());
    j["q"] = json::array();
    for (const auto& v : f.q) j["q"].push_back(v.str());
    j["b"] = json::array();
    for (const auto& row : f.b) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str());
        j["b"].push_back(r);
    }
    return j;
}

json to_json(const RootSystemReport& r) {
    json j;
    j["count"] = r.count;
    j["components"] = r.components_str();
    j["simple_count"] = (long long)r.simple.size();
    return j;
}

json to_json(const CoxeterDiagram& d) {
    json j;
    j["nodes"] = json::array();
    for (size_t i = 0; i < d.roots.size(); ++i) {
        json n;
        n["norm"] = d.norms[i].str();
        json v = json::array();
        for (const auto& x : d.roots[i]) v.push_back(x.str());
        n["vector"] = v;
        j["nodes"].push_back(n);
    }
    j["edges"] = json::array();
    auto label = [](EdgeKind k) {
        switch (k) {
            case EdgeKind::kSimple: return "3";
            case EdgeKind::kDouble: return "4";
            case EdgeKind::kTriple: return "6";
            case EdgeKind::kParabolic: return "inf";
            case EdgeKind::kDotted: return "dotted";
            default: return "";
        }
    };
    for (size_t i = 0; i < d.roots.size(); ++i)
        for (size_t k = i + 1; k < d.roots.size(); ++k) {
            if (d.edge[i][k] == EdgeKind::kNone) continue;
            j["edges"].push_back(json::array({(long long)i, (long long)k, label(d.edge[i][k])}));
        }
    return j;
}

json to_json(const IsotropicClass& c) {
    json j;
    j["rank"] = c.rank;
    j["H"] = c.h_label;
    j["quotient"] = c.quotient_label;
    json rep = json::array();
    for (const auto& x : c.representative) rep.push_back(x.str());
    j["representative"] = rep;
    if (!c.contains.empty()) j["contains"] = c.contains;
    return j;
}

json to_json(const OccursResult& r) {
    json j;
    j["verdict"] = r.verdict == OccursResult::kYes ? "yes"
                  : r.verdict == OccursResult::kNo ? "no"
                                                   : "undetermined";
    j["candidates"] = r.candidates;
    j["passing"] = r.passing;
    if (r.certificate) {
        json c;
        c["subgroup_order"] = r.certificate->subgroup_order;
        c["subgroup"] = r.certificate->subgroup;
        c["embedding"] = r.certificate->embed_note;
        c["N"] = to_json(r.certificate->N);
        j["certificate"] = c;
    }
    if (!r.trace.empty()) j["trace"] = r.trace;
    return j;
}

json to_json(const RowResult& r) {
    json j;
    j["table"] = r.table;
    j["label"] = r.label;
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    j["pass"] = r.pass;
    if (r.flagged) j["flagged"] = true;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Configuration configuration_from_json(const json& j) {
    int d = j.at("d").get<int>();
    std::vector<Monomial> curve;
    for (const auto& m : j.at("curve"))
        curve.push_back({m.at(0).get<int>(), m.at(1).get<int>(), m.at(2).get<int>()});
    std::vector<int> line;
    for (const auto& x : j.at("line")) {
        std::string s = x.get<std::string>();
        if (s.size() != 2 || s[0] != 'x' || s[1] < '0' || s[1] > '2')
            throw std::invalid_argument("configuration: line entries must be x0/x1/x2");
        line.push_back(s[1] - '0');
    }
    return make_configuration(d, std::move(curve), std::move(line));
}

PairInput pair_from_json(const json& j) {
    PairInput p;
    p.d = j.at("d").get<int>();
    for (const auto& m : j.at("curve"))
        p.curve.push_back({m.at(0).get<int>(), m.at(1).get<int>(), m.at(2).get<int>()});
    std::string s = j.at("line").get<std::string>();
    if (s.size() != 2 || s[0] != 'x' || s[1] < '0' || s[1] > '2')
        throw std::invalid_argument("pair: line must be x0/x1/x2");
    p.line = s[1] - '0';
    return p;
}

GramLattice gram_from_json(const json& j) {
    IMat g;
    for (const auto& row : j) {
        IVec r;
        for (const auto& x : row) {
            if (x.is_number_integer())
                r.push_back(Int(x.get<long long>()));
            else
                r.push_back(Int(x.get<std::string>()));
        }
        g.push_back(std::move(r));
    }
    if (g.empty() || g.size() != g[0].size() || !imat_is_symmetric(g))
        throw std::invalid_argument("gram: need a square symmetric integer matrix");
    return {g, "custom"};
}

}  // namespace pairlat
