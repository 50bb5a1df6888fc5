// pairtool: exact GIT stability intervals for plane curve + line pairs, and
// the even-lattice computations for the associated K3 moduli.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <set>

#include "pairlat/cache.hpp"
#include "pairlat/hyperbolic.hpp"
#include "pairlat/jsonio.hpp"
#include "pairlat/moduli.hpp"
#include "pairlat/parse.hpp"
#include "pairlat/strata.hpp"
#include "pairlat/tables.hpp"
#include "pairlat/walls.hpp"

using namespace pairlat;

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

void emit(const json& j, bool as_json) {
    if (as_json) std::cout << j.dump(2) << "\n";
}

GramLattice lattice_from_arg(const std::string& spec) {
    std::string s = spec;
    if (!s.empty() && s[0] == '[') return gram_from_json(json::parse(s));
    if (!s.empty() && s[0] == '@') return gram_from_json(load_json_file(s.substr(1)));
    return parse_lattice_spec(s);
}

// base point for Vinberg runs: a U(n) block gives u1 + u2, else --base is needed
IVec derive_base_point(const GramLattice& L) {
    int n = L.rank();
    for (int i = 0; i + 1 < n; ++i) {
        if (L.gram[i][i] != 0 || L.gram[i + 1][i + 1] != 0 || L.gram[i][i + 1] <= 0) continue;
        bool clean = true;
        for (int j = 0; j < n && clean; ++j) {
            if (j == i || j == i + 1) continue;
            clean = L.gram[i][j] == 0 && L.gram[i + 1][j] == 0;
        }
        if (!clean) continue;
        IVec h(n, 0);
        h[i] = h[i + 1] = 1;
        return h;
    }
    throw std::runtime_error("no U(n) block found; pass the base point explicitly with --base");
}

IVec parse_vector(const std::string& text, int n) {
    IVec v;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) v.push_back(Int(cur));
            cur.clear();
        } else if (!std::isspace((unsigned char)c)) {
            cur += c;
        }
    }
    if ((int)v.size() != n) throw std::runtime_error("base point needs " + std::to_string(n) + " coordinates");
    return v;
}

int run_walls(int degree, bool as_json, bool no_cache) {
    Cache cache(!no_cache);
    std::string key = "walls:v1:d=" + std::to_string(degree);
    json j;
    if (auto hit = cache.get(key)) {
        try {
            j = json::parse(*hit);
            if (j.at("d").get<int>() != degree) j = json();
        } catch (...) {
            j = json();
        }
    }
    if (j.is_null()) {
        j = to_json(candidate_walls(degree));
        cache.put(key, j.dump(2));
    }
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "degree " << degree << " pairs: " << j["realized"].size()
                  << " realized walls out of " << j["raw"].size() << " candidates\n";
        std::string line = "realized:";
        for (const auto& e : j["realized"]) line += " " + e["t"].get<std::string>();
        std::cout << line << "\n";
    }
    return 0;
}

int run_verify(const std::string& what, bool as_json) {
    int failures = 0;
    json out = json::array();
    auto row_line = [&](const RowResult& r) {
        out.push_back(to_json(r));
        if (!as_json)
            std::cout << (r.flagged ? "FLAG" : r.pass ? "PASS" : "FAIL") << "  [" << r.table << "] "
                      << r.label << ": expected " << r.expected << ", computed " << r.computed
                      << (r.note.empty() ? "" : "  (" + r.note + ")") << "\n";
        if (!r.pass && !r.flagged) ++failures;
    };
    if (what == "tables") {
        for (const auto& r : verify_degree5_tables()) row_line(r);
        for (const auto& tc : threshold_cases()) {
            RowResult r;
            r.table = "thresholds";
            r.label = tc.label;
            r.expected = tc.expected.str();
            r.computed = stability_threshold(tc.curve).str();
            r.pass = r.expected == r.computed;
            row_line(r);
        }
    } else if (what == "orbits") {
        for (const auto& r : verify_minimal_orbits()) row_line(r);
    } else if (what == "strata") {
        for (const auto& c : verify_strata()) {
            RowResult r;
            r.table = "strata";
            r.label = c.label;
            r.expected = "pass";
            r.computed = c.pass ? "pass" : "fail";
            r.pass = c.pass;
            r.note = c.detail;
            row_line(r);
        }
    } else if (what == "boundary") {
        GramLattice T = parse_lattice_spec("D4+E8+U+U(2)");
        auto rank1 = isotropic_rank1_classes(T);
        {
            RowResult r;
            r.table = "boundary";
            r.label = "rank-1 cusp count";
            r.expected = "2";
            r.computed = std::to_string(rank1.size());
            r.pass = rank1.size() == 2;
            row_line(r);
        }
        for (const auto& c : rank1) {
            RowResult r;
            r.table = "boundary";
            r.label = "rank-1 class H=" + c.h_label;
            r.expected = c.h_label == "trivial" ? "D8+D4+U" : "E8+D4+U";
            r.computed = c.quotient_label;
            r.pass = r.expected == r.computed;
            row_line(r);
        }
        GramLattice N = parse_lattice_spec("E8+D4+U(2)");
        auto rank2 = isotropic_rank2_classes(N, derive_base_point(N));
        {
            RowResult r;
            r.table = "boundary";
            r.label = "rank-2 cusp count";
            r.expected = "4";
            r.computed = std::to_string(rank2.size());
            r.pass = rank2.size() == 4;
            row_line(r);
        }
        std::set<std::string> labels;
        for (const auto& c : rank2) {
            labels.insert(c.quotient_label);
            RowResult r;
            r.table = "boundary";
            r.label = "rank-2 class " + c.quotient_label + " incidence";
            bool all = std::find(c.contains.begin(), c.contains.end(), "D8+D4+U") != c.contains.end();
            bool e8 = std::find(c.contains.begin(), c.contains.end(), "E8+D4+U") != c.contains.end();
            bool want_e8 = c.quotient_label == "D4+E8" || c.quotient_label == "D12";
            r.expected = want_e8 ? "D8+D4+U and E8+D4+U" : "D8+D4+U only";
            r.computed = std::string(all ? "D8+D4+U" : "-") + (e8 ? " and E8+D4+U" : "");
            r.pass = all && e8 == want_e8;
            row_line(r);
        }
        RowResult r;
        r.table = "boundary";
        r.label = "rank-2 labels";
        r.expected = "5A1+E7, D12, D4+D8, D4+E8";
        std::string got;
        for (const auto& l : labels) got += (got.empty() ? "" : ", ") + l;
        r.computed = got;
        r.pass = labels == std::set<std::string>{"5A1+E7", "D12", "D4+D8", "D4+E8"};
        row_line(r);
    } else {
        std::cerr << "unknown verify target '" << what << "'\n";
        return 2;
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    if (!as_json) std::cout << (failures ? "FAILED" : "OK") << "\n";
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact GIT walls for plane curve + line pairs, and even-lattice tools"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    bool no_cache = false;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_flag("--no-cache", no_cache, "bypass the on-disk cache");

    auto* walls_cmd = app.add_subcommand("walls", "candidate and realized walls for degree d pairs");
    walls_cmd->fallthrough();
    int degree = 3;
    walls_cmd->add_option("--degree", degree, "curve degree")->required();

    auto* interval_cmd = app.add_subcommand("interval", "stability interval of a configuration or pair");
    interval_cmd->fallthrough();
    std::string config_file, pair_file;
    bool diagonal = false;
    interval_cmd->add_option("--config", config_file, "configuration JSON file");
    interval_cmd->add_option("--pair", pair_file, "pair JSON file");
    interval_cmd->add_flag("--diagonal", diagonal, "intersect over all coordinate permutations");

    auto* threshold_cmd = app.add_subcommand("threshold", "stability threshold of an adapted curve");
    threshold_cmd->fallthrough();
    std::string monomials, mapping = "x=x1,y=x2";
    bool affine = false;
    int tdeg = 0;
    threshold_cmd->add_option("--monomials", monomials, "monomial list or polynomial")->required();
    threshold_cmd->add_flag("--affine", affine, "input is an affine germ in x, y");
    threshold_cmd->add_option("--map", mapping, "affine coordinate mapping (default x=x1,y=x2)");
    threshold_cmd->add_option("--degree", tdeg, "homogenization degree for --affine");

    auto* lct_cmd = app.add_subcommand("lct", "log canonical threshold of a quasihomogeneous germ");
    lct_cmd->fallthrough();
    std::string weights, form;
    lct_cmd->add_option("--weights", weights, "w1,w2")->required();
    lct_cmd->add_option("--form", form, "affine form in x, y")->required();

    auto* lattice_cmd = app.add_subcommand("lattice", "even lattice computations");
    lattice_cmd->fallthrough();
    std::string op, spec, other;
    lattice_cmd->add_option("op", op, "disc | roots | overlattices | genus | embed")->required();
    lattice_cmd->add_option("--spec", spec, "lattice spec or JSON Gram")->required();
    lattice_cmd->add_option("--other", other, "second lattice (genus)");

    auto* vinberg_cmd = app.add_subcommand("vinberg", "Vinberg's algorithm on a hyperbolic lattice");
    vinberg_cmd->fallthrough();
    std::string vspec, base;
    long long budget = 64;
    bool dot = false;
    vinberg_cmd->add_option("--spec", vspec, "lattice spec")->required();
    vinberg_cmd->add_option("--base", base, "base point coordinates");
    vinberg_cmd->add_option("--budget", budget, "accepted-root budget");
    vinberg_cmd->add_flag("--dot", dot, "emit the diagram in DOT format");

    auto* boundary_cmd = app.add_subcommand("boundary", "Baily-Borel boundary classification");
    boundary_cmd->fallthrough();
    std::string bspec = "D4+E8+U+U(2)";
    boundary_cmd->add_option("--spec", bspec, "transcendental lattice with an explicit U summand");

    auto* occurs_cmd = app.add_subcommand("occurs", "simple-singularity occurrence test");
    occurs_cmd->fallthrough();
    std::string roots_cfg;
    occurs_cmd->add_option("--roots", roots_cfg, "ADE configuration, e.g. A12 or 10A1")->required();

    auto* verify_cmd = app.add_subcommand("verify", "verify the built-in tables");
    verify_cmd->fallthrough();
    std::string target;
    verify_cmd->add_option("target", target, "tables | orbits | strata | boundary")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*walls_cmd) return run_walls(degree, as_json, no_cache);

        if (*interval_cmd) {
            if (!config_file.empty()) {
                Configuration cfg = configuration_from_json(load_json_file(config_file));
                StabilityInterval iv = interval_for_configuration(cfg);
                json j;
                j["configuration"] = to_json(cfg);
                j["interval"] = to_json(iv);
                emit(j, as_json);
                if (!as_json) std::cout << cfg.str() << "  ->  " << iv.str() << "\n";
                return 0;
            }
            if (!pair_file.empty()) {
                PairInput p = pair_from_json(load_json_file(pair_file));
                StabilityInterval iv =
                    diagonal ? diagonal_interval(p.d, p.curve, p.line)
                             : interval_for_configuration(make_configuration(p.d, p.curve, {p.line}));
                json j;
                j[diagonal ? "diagonal_interval" : "interval"] = to_json(iv);
                emit(j, as_json);
                if (!as_json) std::cout << iv.str() << "\n";
                return 0;
            }
            std::cerr << "interval: need --config or --pair\n";
            return 2;
        }

        if (*threshold_cmd) {
            std::string text = monomials;
            for (auto& c : text)
                if (c == ',') c = '+';
            std::vector<Monomial> curve;
            if (affine) {
                int x_to = 1, y_to = 2;
                if (mapping == "x=x2,y=x1") { x_to = 2; y_to = 1; }
                else if (mapping != "x=x1,y=x2") {
                    std::cerr << "threshold: --map must be x=x1,y=x2 or x=x2,y=x1\n";
                    return 2;
                }
                curve = parse_affine_form(text, x_to, y_to, tdeg);
            } else {
                curve = parse_projective_form(text);
            }
            Rat tp = stability_threshold(curve);
            json j;
            j["t_p"] = tp.str();
            emit(j, as_json);
            if (!as_json) std::cout << "t_p = " << tp.str() << "\n";
            return 0;
        }

        if (*lct_cmd) {
            auto comma = weights.find(',');
            if (comma == std::string::npos) {
                std::cerr << "lct: --weights needs w1,w2\n";
                return 2;
            }
            WeightedOrderInput in;
            in.w1 = std::stoll(weights.substr(0, comma));
            in.w2 = std::stoll(weights.substr(comma + 1));
            in.monomials = parse_affine_monomials(form);
            Rat lct = lct_quasihomogeneous(in);
            json j;
            j["w_f"] = weighted_order(in).str();
            j["lct"] = lct.str();
            emit(j, as_json);
            if (!as_json) std::cout << "lct = " << lct.str() << "\n";
            return 0;
        }

        if (*lattice_cmd) {
            GramLattice L = lattice_from_arg(spec);
            if (op == "disc") {
                auto d = discriminant_form(L);
                json j;
                j["lattice"] = to_json(L);
                j["discriminant"] = to_json(d.form);
                j["isotropic_nonzero"] = (long long)d.form.isotropic_elements().size() - 1;
                emit(j, as_json);
                if (!as_json) {
                    std::string fs;
                    for (auto& x : d.form.orders) fs += (fs.empty() ? "" : ",") + x.str();
                    std::cout << "A_L = (" << fs << "), nonzero isotropic elements: "
                              << d.form.isotropic_elements().size() - 1 << "\n";
                }
                return 0;
            }
            if (op == "roots") {
                Cache cache(!no_cache);
                std::string key = "roots:v1:" + Cache::fingerprint(to_json(L).dump());
                json j;
                if (auto hit = cache.get(key)) {
                    try { j = json::parse(*hit); } catch (...) { j = json(); }
                }
                if (j.is_null()) {
                    auto rs = root_system(L);
                    j = to_json(rs);
                    cache.put(key, j.dump(2));
                }
                emit(j, as_json);
                if (!as_json)
                    std::cout << j["count"].get<long long>() << " roots, components "
                              << j["components"].get<std::string>() << "\n";
                return 0;
            }
            if (op == "overlattices") {
                auto ovs = overlattices(L);
                json arr = json::array();
                for (const auto& ov : ovs) {
                    json e;
                    e["index"] = ov.index.str();
                    e["det"] = ov.lattice.det().str();
                    e["gram"] = to_json(ov.lattice)["gram"];
                    arr.push_back(e);
                }
                emit(arr, as_json);
                if (!as_json) {
                    long long proper = 0;
                    for (const auto& ov : ovs) proper += ov.index > 1;
                    std::cout << ovs.size() << " isotropic subgroups, " << proper
                              << " proper overlattices\n";
                }
                return 0;
            }
            if (op == "genus") {
                if (other.empty()) {
                    std::cerr << "lattice genus: need --other\n";
                    return 2;
                }
                GramLattice L2 = lattice_from_arg(other);
                bool same = in_genus(L, L2);
                json j;
                j["same_genus"] = same;
                emit(j, as_json);
                if (!as_json)
                    std::cout << L.name << " and " << L2.name << ": "
                              << (same ? "same genus" : "different genus") << "\n";
                return same ? 0 : 1;
            }
            if (op == "embed") {
                auto r = embeds_primitively_K3(L);
                json j;
                j["verdict"] = r.verdict == EmbedResult::kYes ? "yes"
                              : r.verdict == EmbedResult::kNo ? "no"
                                                              : "undetermined";
                j["reason"] = r.reason;
                if (r.complement) j["complement"] = to_json(*r.complement);
                emit(j, as_json);
                if (!as_json) std::cout << j["verdict"].get<std::string>() << ": " << r.reason << "\n";
                return r.verdict == EmbedResult::kYes ? 0 : 1;
            }
            std::cerr << "lattice: unknown op '" << op << "'\n";
            return 2;
        }

        if (*vinberg_cmd) {
            GramLattice L = lattice_from_arg(vspec);
            IVec h = base.empty() ? derive_base_point(L) : parse_vector(base, L.rank());
            VinbergOptions opts;
            opts.max_roots = budget;
            auto vr = vinberg(L, h, opts);
            json j;
            j["stopped"] = vr.stopped;
            j["roots"] = (long long)vr.diagram.roots.size();
            j["diagram"] = to_json(vr.diagram);
            auto classes = parabolic_subdiagrams(L, vr.diagram, L.rank() - 2);
            json cl = json::array();
            for (const auto& c : classes) cl.push_back(c.type_multiset);
            j["maximal_parabolic_packings"] = cl;
            emit(j, as_json);
            if (dot) std::cout << vr.diagram.dot();
            if (!as_json && !dot)
                std::cout << (vr.stopped ? "stop condition reached" : "budget exhausted") << ", "
                          << vr.diagram.roots.size() << " roots accepted, " << classes.size()
                          << " maximal-rank parabolic packings\n";
            return vr.stopped ? 0 : 1;
        }

        if (*boundary_cmd) {
            GramLattice T = lattice_from_arg(bspec);
            auto rank1 = isotropic_rank1_classes(T);
            std::string nspec;
            {
                std::string s;
                for (char c : bspec)
                    if (!std::isspace((unsigned char)c)) s += c;
                std::vector<std::string> toks;
                std::string cur;
                int depth = 0;
                for (char c : s) {
                    if (c == '(' || c == '<') ++depth;
                    if (c == ')' || c == '>') --depth;
                    if (c == '+' && depth == 0) {
                        toks.push_back(cur);
                        cur.clear();
                    } else
                        cur += c;
                }
                toks.push_back(cur);
                bool dropped = false;
                for (const auto& t : toks) {
                    if (!dropped && t == "U") {
                        dropped = true;
                        continue;
                    }
                    nspec += (nspec.empty() ? "" : "+") + t;
                }
                if (!dropped) {
                    std::cerr << "boundary: the spec must contain an explicit U summand\n";
                    return 2;
                }
            }
            GramLattice N = parse_lattice_spec(nspec);
            auto rank2 = isotropic_rank2_classes(N, derive_base_point(N));
            json j;
            j["rank1"] = json::array();
            for (const auto& c : rank1) j["rank1"].push_back(to_json(c));
            j["rank2"] = json::array();
            for (const auto& c : rank2) j["rank2"].push_back(to_json(c));
            emit(j, as_json);
            if (!as_json) {
                std::cout << rank1.size() << " zero-dimensional and " << rank2.size()
                          << " one-dimensional boundary components\n";
                for (const auto& c : rank1)
                    std::cout << "  rank 1: H " << c.h_label << ", E-perp/E = " << c.quotient_label << "\n";
                for (const auto& c : rank2) {
                    std::cout << "  rank 2: E-perp/E = " << c.quotient_label << ", contains:";
                    for (const auto& s : c.contains) std::cout << " " << s;
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (*occurs_cmd) {
            auto cfg = parse_ade_config(roots_cfg);
            auto r = config_occurs(cfg);
            emit(to_json(r), as_json);
            if (!as_json) {
                std::cout << config_str(cfg) << ": "
                          << (r.verdict == OccursResult::kYes ? "occurs"
                              : r.verdict == OccursResult::kNo ? "does not occur"
                                                               : "undetermined")
                          << "\n";
                if (r.verdict != OccursResult::kYes)
                    for (const auto& t : r.trace) std::cout << "  " << t << "\n";
            }
            return r.verdict == OccursResult::kYes ? 0 : 1;
        }

        if (*verify_cmd) return run_verify(target, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
