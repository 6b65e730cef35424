// ryserlab command line front end. Every subcommand writes its whole output once at the end,
// so a run can be replayed byte for byte from the manifest (seed, parameters, budget).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ryserlab/constructions.hpp"
#include "ryserlab/constructive.hpp"
#include "ryserlab/exact.hpp"
#include "ryserlab/generators.hpp"
#include "ryserlab/goodpart.hpp"
#include "ryserlab/hypercover.hpp"
#include "ryserlab/io.hpp"
#include "ryserlab/signatures.hpp"

#ifndef RYSERLAB_VERSION
#define RYSERLAB_VERSION "unknown"
#endif

using namespace ryser;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kViolation = 1, kInconclusive = 2, kUsage = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t seed = 1;
    double budget_seconds = -1;
    int threads = 1;
    std::string format = "csv";
    std::string manifest;
};

struct Run {
    std::ostringstream out;
    json summary = json::object();
    int code = kOk;
};

std::string read_input(const std::string& path) {
    if (path.empty()) throw UsageError("missing --input");
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw UsageError("cannot open " + path);
        ss << f.rdbuf();
    }
    return ss.str();
}

std::string first_token(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::string tok;
        if (ls >> tok) return tok;
    }
    return {};
}

// "0 1 2", "0,1,2"
VertexSet parse_vertices(const std::string& s) {
    VertexSet vs;
    std::string t = s;
    for (char& ch : t)
        if (ch == ',') ch = ' ';
    std::istringstream in(t);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            vs.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("bad vertex '" + tok + "'");
        }
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

// Parts separated by '|' or ';'.
std::vector<VertexSet> parse_parts(const std::string& s) {
    std::vector<VertexSet> parts;
    std::string cur;
    for (char ch : s + "|") {
        if (ch == '|' || ch == ';') {
            parts.push_back(parse_vertices(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return parts;
}

// Parts of a complete multipartite graph are the components of its complement.
std::vector<VertexSet> infer_parts(const ColoredMultigraph& g) {
    std::vector<int> label(g.n(), -1);
    std::vector<VertexSet> parts;
    for (int s = 0; s < g.n(); ++s) {
        if (label[s] >= 0) continue;
        VertexSet part{s};
        label[s] = int(parts.size());
        for (std::size_t i = 0; i < part.size(); ++i)
            for (int w = 0; w < g.n(); ++w)
                if (w != part[i] && label[w] < 0 && !g.adjacent(part[i], w)) {
                    label[w] = label[s];
                    part.push_back(w);
                }
        std::sort(part.begin(), part.end());
        parts.push_back(part);
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if ((label[u] == label[v]) == g.adjacent(u, v))
                throw UsageError("graph is not complete multipartite; pass --parts");
    return parts;
}

VertexSet complement(const VertexSet& x, int n) {
    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (!std::binary_search(x.begin(), x.end(), v)) out.push_back(v);
    return out;
}

ColorMask parse_colors(const std::string& s) {
    ColorMask m = 0;
    for (int c : parse_vertices(s)) {
        if (c < 1 || c > kMaxColors) throw UsageError("color out of range");
        m |= color_bit(c);
    }
    return m;
}

SolveBudget budget_of(const Globals& gl) {
    SolveBudget b;
    b.max_seconds = gl.budget_seconds;
    b.threads = gl.threads;
    return b;
}

std::string parts_comment(const std::vector<VertexSet>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += "# part " + std::to_string(i) + ": " + to_string(parts[i]) + "\n";
    return s;
}

std::string fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void emit_cover(Run& run, const ColoredMultigraph& g, const CoverCertificate& cert) {
    run.out << write_cover(cert);
    auto rep = verify(g, cert);
    run.summary["pieces"] = cert.size();
    run.summary["verified"] = rep.ok;
    if (!rep.ok) {
        std::cerr << "certificate rejected: " << rep.message << "\n";
        run.code = kViolation;
    }
}

// ---- subcommands -------------------------------------------------------------------------

struct CoverOpts {
    std::string input, colors, parts, x, S;
    int max_diam = -1;
    int r = 0;
    std::string method = "exact";
};

// `cover --method exact` keeps the output a parseable certificate, so the size goes in a comment.
void cmd_tc(Run& run, const Globals& gl, const CoverOpts& o, bool partition, bool as_cover = false) {
    auto g = parse_graph(read_input(o.input));
    CoverResult res;
    if (partition) {
        res = tp_exact(g, budget_of(gl));
    } else {
        TcConstraints cons;
        cons.max_diam = o.max_diam;
        cons.allowed = o.colors.empty() ? 0 : parse_colors(o.colors);
        res = tc_exact(g, cons, budget_of(gl));
    }
    run.summary["status"] = to_string(res.status);
    run.summary["lower"] = res.lower;
    run.summary["size"] = res.size;
    switch (res.status) {
    case Status::Optimal:
        run.out << (as_cover ? "# size " : "") << res.size << "\n";
        emit_cover(run, g, res.cert);
        break;
    case Status::Infeasible:
        run.out << "infeasible: vertex " << res.witness_vertex << " lies in no admissible piece\n";
        run.code = kViolation;
        break;
    case Status::Inconclusive:
        run.out << "between " << res.lower << " and " << (res.size < 0 ? std::string("?") : std::to_string(res.size))
                << "\n";
        if (res.size >= 0) run.out << write_cover(res.cert);
        run.code = kInconclusive;
        break;
    }
}

void cmd_taunu(Run& run, const std::string& input) {
    auto h = parse_hypergraph(read_input(input));
    auto tn = tau_nu(h);
    run.out << "tau " << tn.tau << "\ncover";
    for (int v : tn.cover) run.out << ' ' << v;
    run.out << "\nnu " << tn.nu << "\nmatching";
    for (int e : tn.matching) run.out << ' ' << e;
    run.out << "\n";
    run.summary["tau"] = tn.tau;
    run.summary["nu"] = tn.nu;
}

void cmd_mc(Run& run, const std::string& input, int c, int ell) {
    std::string text = read_input(input);
    if (first_token(text) == "hg") {
        auto h = parse_hypergraph(text);
        auto m = mc_cl(h, c, ell);
        run.out << "mc " << m.size << " color " << m.color << "\n";
        for (auto& s : m.shadow) run.out << to_string(s) << "\n";
        run.summary["mc"] = m.size;
    } else {
        auto g = parse_graph(text);
        auto m = mc_graph(g);
        run.out << "mc " << m.size << " color " << m.color << "\n" << to_string(m.vertices) << "\n";
        run.summary["mc"] = m.size;
    }
}

void cmd_dualize(Run& run, const std::string& input) {
    std::string text = read_input(input);
    if (first_token(text) == "hg") {
        auto h = parse_hypergraph(text);
        auto g = hypergraph_to_graph(h);
        run.out << write_graph(g);
        auto rep = check_duality(h, g);
        run.out << "# nu " << rep.nu << " alpha " << rep.alpha << " tau " << rep.tau << " tc " << rep.tc << "\n";
        run.summary["duality_ok"] = rep.ok;
        if (!rep.ok) {
            std::cerr << rep.message << "\n";
            run.code = kViolation;
        }
    } else {
        auto g = parse_graph(text);
        auto d = graph_to_hypergraph(g);
        run.out << write_hypergraph(d.h);
        for (std::size_t i = 0; i < d.components.size(); ++i)
            run.out << "# vertex " << i << ": color " << d.components[i].first << " component "
                    << to_string(d.components[i].second) << "\n";
    }
}

void cmd_classify(Run& run, const CoverOpts& o) {
    auto g = parse_graph(read_input(o.input));
    if (!o.x.empty()) {
        VertexSet X = parse_vertices(o.x), Y = complement(X, g.n());
        int c1 = 1, c2 = 2;
        if (!o.colors.empty()) {
            auto cs = parse_vertices(o.colors);
            if (cs.size() != 2) throw UsageError("--colors needs two colors");
            c1 = cs[0], c2 = cs[1];
        }
        auto res = classify_bipartite2(g, X, Y, c1, c2);
        const auto& k = res.cls;
        run.out << "class " << to_string(k.tag) << "\n";
        if (k.tag == BipartiteTag::P1)
            run.out << "double_side " << (k.double_side == 0 ? "X" : "Y") << "\nspecial " << k.special[0] << ' '
                    << k.special[1] << "\n";
        if (k.tag == BipartiteTag::P2)
            run.out << "X1 " << to_string(k.x1) << "\nX2 " << to_string(k.x2) << "\nY1 " << to_string(k.y1) << "\nY2 "
                    << to_string(k.y2) << "\n";
        if (k.tag == BipartiteTag::P3) run.out << "color " << k.color << "\n";
        std::string bad = check_bipartite_class(g, X, Y, k);
        run.summary["class"] = to_string(k.tag);
        if (!bad.empty()) {
            std::cerr << bad << "\n";
            run.code = kViolation;
        }
        return;
    }
    auto k = classify3(g);
    run.out << "class " << to_string(k.tag) << "\nblue " << k.blue << "\nred " << k.red << "\ngreen " << k.green << "\n";
    if (k.tag == ThreeColorTag::TypeI) run.out << "spanning " << to_string(k.spanning) << "\n";
    else
        run.out << "W " << to_string(k.W) << "\nX " << to_string(k.X) << "\nY " << to_string(k.Y) << "\nZ "
                << to_string(k.Z) << "\n";
    std::string bad = check_three_color_class(g, k);
    run.summary["class"] = to_string(k.tag);
    if (!bad.empty()) {
        std::cerr << bad << "\n";
        run.code = kViolation;
    }
}

void cmd_cover(Run& run, const Globals& gl, const CoverOpts& o) {
    auto g = parse_graph(read_input(o.input));
    const std::string& m = o.method;
    if (m == "exact") return cmd_tc(run, gl, o, false, true);

    auto sides = [&](VertexSet& X, VertexSet& Y) {
        if (!o.x.empty()) {
            X = parse_vertices(o.x);
            Y = complement(X, g.n());
            return;
        }
        auto parts = o.parts.empty() ? infer_parts(g) : parse_parts(o.parts);
        if (parts.size() != 2) throw UsageError("bipartite methods need two sides (--x or --parts)");
        X = parts[0], Y = parts[1];
    };

    std::string route;
    CoverCertificate cert;
    if (m == "r2" || m == "r3" || m == "r4") {
        cert = cover_complete(g, m[1] - '0', &route);
    } else if (m == "bip2") {
        VertexSet X, Y;
        sides(X, Y);
        auto res = classify_bipartite2(g, X, Y);
        route = std::string("class ") + to_string(res.cls.tag);
        cert = res.cert;
    } else if (m == "bip3") {
        VertexSet X, Y;
        sides(X, Y);
        cert = cover_bipartite3(g, X, Y, &route);
    } else if (m == "alpha2") {
        cert = cover_alpha2(g, &route);
    } else if (m == "multipartite") {
        auto parts = o.parts.empty() ? infer_parts(g) : parse_parts(o.parts);
        cert = cover_multipartite(g, parts, o.r > 0 ? o.r : g.r(), &route);
    } else if (m == "restricted") {
        auto s = parse_vertices(o.S);
        if (s.size() != 2) throw UsageError("--S needs two colors");
        cert = restricted_cover(g, o.r > 0 ? o.r : g.r(), {s[0], s[1]}, &route);
    } else {
        throw UsageError("unknown method " + m);
    }
    run.out << "# route: " << route << "\n";
    run.summary["route"] = route;
    emit_cover(run, g, cert);
}

void cmd_signatures(Run& run, const Globals& gl, int n, int p, const std::string& stage) {
    std::vector<SignatureSet> list;
    if (stage == "candidates") {
        list = enumerate_signatures(n, p);
    } else {
        auto census = signature_census(n, p);
        run.summary["candidates"] = census.candidates;
        run.summary["valid"] = census.valid.size();
        run.summary["residual"] = census.residual.size();
        run.summary["realizations"] = census.realizations;
        if (stage == "valid") list = census.valid;
        else if (stage == "residual") list = census.residual;
        else throw UsageError("stage must be candidates, valid or residual");
    }
    if (gl.format == "md") run.out << "| # | signature |\n|---|---|\n";
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (gl.format == "md") run.out << "| " << i + 1 << " | " << list[i].str() << " |\n";
        else run.out << list[i].str() << "\n";
    }
    run.summary["count"] = list.size();
}

std::string words_of(const WordSet& w, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < w.words.size(); ++i) s += (i ? sep : "") + format_word(w.words[i]);
    return s;
}

void cmd_zrd(Run& run, const Globals& gl, const std::vector<int>& rs, const std::vector<int>& ds) {
    auto b = budget_of(gl);
    if (rs.size() == 1 && ds.size() == 1) {
        int r = rs[0], d = ds[0];
        auto z = z_exact(r, d, b);
        if (z.status == Status::Optimal) {
            run.out << "Z(" << r << "," << d << ") = " << z.upper << "\n";
        } else {
            run.out << "Z(" << r << "," << d << ") in [" << z.lower << "," << z.upper << "]\n";
            run.code = kInconclusive;
        }
        for (auto& w : z.witness.words) run.out << format_word(w) << "\n";
        run.summary["lower"] = z.lower;
        run.summary["upper"] = z.upper;
        return;
    }
    const bool md = gl.format == "md";
    run.out << (md ? "| r | d | lower | upper | exact | witness |\n|---|---|---|---|---|---|\n"
                   : "r,d,lower,upper,exact,witness\n");
    for (int r : rs)
        for (int d : ds) {
            auto z = z_exact(r, d, b);
            bool exact = z.status == Status::Optimal;
            if (!exact) run.code = kInconclusive;
            if (md)
                run.out << "| " << r << " | " << d << " | " << z.lower << " | " << z.upper << " | "
                        << (exact ? "yes" : "no") << " | " << words_of(z.witness, " ") << " |\n";
            else
                run.out << r << ',' << d << ',' << z.lower << ',' << z.upper << ',' << (exact ? 1 : 0) << ",\""
                        << words_of(z.witness, " ") << "\"\n";
        }
}

void cmd_goodpart(Run& run, const Globals& gl, const std::string& input, const std::string& y, const std::string& z,
                  int r, int bad_y, int bad_z) {
    ColoredMultigraph g;
    VertexSet Y, Z;
    if (bad_y > 0) {
        auto bb = bad_bipartite_coloring(bad_y, bad_z);
        g = bb.g, Y = bb.Y, Z = bb.Z;
    } else {
        g = parse_graph(read_input(input));
        Y = parse_vertices(y);
        Z = z.empty() ? complement(Y, g.n()) : parse_vertices(z);
    }
    auto res = good_partition(g, Y, Z, r > 0 ? r : g.r(), budget_of(gl));
    run.summary["status"] = to_string(res.status);
    if (res.status == Status::Optimal) {
        run.out << "good partition\n";
        for (std::size_t i = 0; i < res.parts.size(); ++i) run.out << "Y" << i + 1 << ' ' << to_string(res.parts[i]) << "\n";
    } else if (res.status == Status::Infeasible) {
        run.out << "no good partition\n";
        run.code = kViolation;
    } else {
        run.out << "inconclusive\n";
        run.code = kInconclusive;
    }
}

struct HyperOpts {
    std::string input, method = "exact";
    int c = 1, ell = 1, n = 0, k = 3, r = 2;
};

void cmd_hyper(Run& run, const Globals& gl, const HyperOpts& o) {
    ColoredHypergraph h;
    if (!o.input.empty()) {
        h = parse_hypergraph(read_input(o.input));
    } else {
        if (o.n <= 0) throw UsageError("pass --input or --n/--k/--r for a random complete coloring");
        Rng rng(gl.seed);
        h = random_complete_coloring(o.n, o.k, o.r, rng);
    }
    std::vector<CLComponent> pieces;
    if (o.method == "exact") {
        auto res = tc_cl_exact(h, o.c, o.ell, budget_of(gl));
        run.summary["status"] = to_string(res.status);
        if (res.status != Status::Optimal) {
            run.out << "inconclusive\n";
            run.code = kInconclusive;
            return;
        }
        auto comps = cl_components(h, o.c, o.ell);
        for (auto& [color, idx] : res.pieces) pieces.push_back(comps[idx]);
    } else if (o.method == "kiraly") {
        pieces = kiraly_cover(h);
    } else if (o.method == "product") {
        pieces = cover_product(h, o.c, o.ell);
    } else if (o.method == "midrange") {
        pieces = cover_midrange(h, o.c, o.ell);
    } else if (o.method == "tight") {
        auto t = tight_spanning(h);
        if (!t) {
            run.out << "no spanning tight component\n";
            run.code = kViolation;
            return;
        }
        pieces.push_back(*t);
    } else {
        throw UsageError("unknown method " + o.method);
    }
    // kiraly and tight pieces are (1,1)- and (1,2)-components
    int c = o.c, ell = o.ell;
    if (o.method == "kiraly") c = 1, ell = 1;
    if (o.method == "tight") c = 1, ell = 2;
    run.out << "pieces " << pieces.size() << "\n";
    for (auto& p : pieces) run.out << "piece " << p.color << " core " << p.core.size() << " order " << p.order() << "\n";
    auto v = verify_cl_cover(h, c, ell, pieces);
    if (o.method == "tight" && v.ok && pieces[0].order() != h.n) v = {false, "component does not span"};
    run.summary["pieces"] = pieces.size();
    run.summary["verified"] = v.ok;
    if (!v.ok) {
        std::cerr << "cover rejected: " << v.message << "\n";
        run.code = kViolation;
    }
}

struct ConstructOpts {
    std::string kind, plane = "projective", sizes;
    int q = 2, r = 3, alpha = 1, block_size = 1, k = 3, t = 1, ysize = -1, part_size = 2, n = 0;
};

void cmd_construct(Run& run, const Globals& gl, const ConstructOpts& o) {
    const std::string& kd = o.kind;
    if (kd == "plane") {
        PlaneKind pk = o.plane == "projective" ? PlaneKind::Projective
                       : o.plane == "truncated" ? PlaneKind::Truncated
                       : o.plane == "affine"    ? PlaneKind::Affine
                                                : throw UsageError("--plane must be projective, truncated or affine");
        auto d = galois_plane(o.q, pk);
        check_design(d);
        run.out << write_hypergraph(design_hypergraph(d));
    } else if (kd == "affine-coloring") {
        run.out << write_graph(affine_tc_coloring(o.r, o.alpha));
    } else if (kd == "half-r") {
        auto ex = half_r_example(o.r, o.block_size);
        run.out << write_graph(ex.g) << parts_comment(ex.blocks);
    } else if (kd == "badmulti") {
        auto b = badmulti_graph(o.k, o.t, o.ysize);
        run.out << write_graph(b.g) << parts_comment(b.parts) << "# tp lower bound " << b.tp_lower << "\n";
    } else if (kd == "star") {
        auto ex = multipartite_star_example(o.k, o.r, o.part_size);
        run.out << write_graph(ex.g) << parts_comment(ex.parts);
    } else if (kd == "alpha2-example") {
        auto ex = multipartite_alpha2_example(o.k);
        run.out << write_graph(ex.g) << parts_comment(ex.parts);
    } else if (kd == "random") {
        Rng rng(gl.seed);
        if (!o.sizes.empty()) {
            std::vector<int> raw;
            std::istringstream in(o.sizes);
            for (std::string tok; std::getline(in, tok, ',');) raw.push_back(std::stoi(tok));
            auto mp = random_multipartite(raw, o.r, rng);
            run.out << write_graph(mp.g) << parts_comment(mp.parts);
        } else {
            if (o.n <= 0) throw UsageError("random needs --n");
            run.out << write_graph(random_complete(o.n, o.r, rng));
        }
    } else if (kd == "random-hyper") {
        if (o.n <= 0) throw UsageError("random-hyper needs --n");
        Rng rng(gl.seed);
        run.out << write_hypergraph(random_complete_coloring(o.n, o.k, o.r, rng));
    } else {
        throw UsageError("unknown construction " + kd);
    }
}

struct HuntOpts {
    int n = 4, r = 2, bound = -1, alpha_factor = 0;
    bool no_filters = false, all_closed = false;
};

void cmd_hunt(Run& run, const Globals& gl, const HuntOpts& o) {
    HuntOptions opt;
    opt.n = o.n;
    opt.r = o.r;
    opt.bound = o.bound;
    opt.alpha_factor = o.alpha_factor;
    if (o.bound < 0 && o.alpha_factor <= 0) opt.alpha_factor = o.r - 1;
    opt.use_filters = !o.no_filters;
    opt.complete_only = !o.all_closed;
    opt.budget = budget_of(gl);
    auto res = hunt(opt);
    run.out << "status " << to_string(res.status) << "\ncolorings " << res.colorings << "\nfiltered " << res.filtered
            << "\nnodes " << res.nodes << "\n";
    run.summary["status"] = to_string(res.status);
    run.summary["colorings"] = res.colorings;
    if (res.counterexample) {
        run.out << "counterexample tc " << res.counterexample_tc << "\n" << write_graph(*res.counterexample);
        run.code = kViolation;
    } else if (res.status != Status::Optimal) {
        run.code = kInconclusive;
    }
}

void cmd_verify(Run& run, const std::string& graph, const std::string& cert_path) {
    auto g = parse_graph(read_input(graph));
    auto cert = parse_cover(read_input(cert_path));
    auto rep = verify(g, cert);
    run.summary["verified"] = rep.ok;
    if (rep.ok) {
        run.out << "ok\n";
    } else {
        run.out << "violation: " << rep.message << "\n";
        run.code = kViolation;
    }
}

json parameters_of(const CLI::App* app) {
    json p = json::object();
    for (const CLI::Option* opt : app->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") continue;
        std::string name = opt->get_name(false, true);
        while (!name.empty() && name[0] == '-') name.erase(0, 1);
        std::string v;
        for (auto& s : opt->results()) v += (v.empty() ? "" : " ") + s;
        p[name] = v;
    }
    return p;
}

int default_threads() {
    if (const char* env = std::getenv("RYSERLAB_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Experiments on monochromatic covers of edge-colored graphs and Ryser's conjecture"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", RYSERLAB_VERSION);

    Globals gl;
    gl.threads = default_threads();
    app.add_option("--seed", gl.seed, "Seed for random instances");
    app.add_option("--budget-seconds", gl.budget_seconds, "Wall clock budget for searches (-1: none)");
    app.add_option("--threads", gl.threads, "Solver threads (default RYSERLAB_THREADS or 1)")->check(CLI::PositiveNumber);
    app.add_option("--format", gl.format, "Table format")->check(CLI::IsMember({"csv", "md"}));
    app.add_option("--manifest", gl.manifest, "Write a JSON run manifest to this file");

    CoverOpts co;
    auto* tc = app.add_subcommand("tc", "Exact minimum monochromatic cover");
    tc->add_option("--input", co.input, "Graph file (cg)")->required();
    tc->add_flag("--exact", "Exact solver (the only method; accepted for clarity)");
    tc->add_option("--max-diam", co.max_diam, "Pieces must have diameter at most this");
    tc->add_option("--colors", co.colors, "Allowed colors, e.g. 1,2");
    auto* tp = app.add_subcommand("tp", "Exact minimum monochromatic partition");
    tp->add_option("--input", co.input, "Graph file (cg)")->required();
    tp->add_flag("--exact", "Exact solver");

    std::string input;
    auto* taunu = app.add_subcommand("taunu", "Vertex cover and matching numbers of a hypergraph");
    taunu->add_option("--input", input, "Hypergraph file (hg)")->required();

    HyperOpts ho;
    auto* mc = app.add_subcommand("mc", "Largest monochromatic component (graph or (c,l)-component)");
    mc->add_option("--input", input, "cg or hg file")->required();
    mc->add_option("--c", ho.c);
    mc->add_option("--ell", ho.ell);

    auto* dualize = app.add_subcommand("dualize", "Graph <-> r-partite hypergraph duality");
    dualize->add_option("--input", input, "cg or hg file")->required();

    auto* classify = app.add_subcommand("classify", "Structure of a 2-colored bipartite or 3-colored complete graph");
    classify->add_option("--input", co.input)->required();
    classify->add_option("--x", co.x, "Side X of a complete bipartite graph");
    classify->add_option("--colors", co.colors, "The two colors of a bipartite coloring");

    auto* cover = app.add_subcommand("cover", "Covers from the constructive arguments");
    cover->add_option("--input", co.input)->required();
    cover->add_option("--method", co.method)
        ->check(CLI::IsMember({"exact", "r2", "r3", "r4", "bip2", "bip3", "alpha2", "multipartite", "restricted"}));
    cover->add_option("--parts", co.parts, "Parts, e.g. \"0 1|2 3|4 5\" (inferred when omitted)");
    cover->add_option("--x", co.x, "Side X for bipartite methods");
    cover->add_option("--r", co.r, "Number of colors (multipartite, restricted)");
    cover->add_option("--S", co.S, "The color pair of restricted covers, e.g. 1,2");
    cover->add_option("--max-diam", co.max_diam);
    cover->add_option("--colors", co.colors);

    int sn = 5, sp = 3;
    std::string stage = "residual";
    auto* sigs = app.add_subcommand("signatures", "Signature census");
    sigs->add_option("--n", sn)->required();
    sigs->add_option("--p", sp)->required();
    sigs->add_option("--stage", stage)->check(CLI::IsMember({"candidates", "valid", "residual"}));

    std::vector<int> zr, zd;
    auto* zrd = app.add_subcommand("zrd", "Z(r,d) with witness; several values give a table");
    zrd->add_option("--r", zr)->required()->delimiter(',');
    zrd->add_option("--d", zd)->required()->delimiter(',');

    std::string gy, gz;
    int gr = 0, bad_y = 0, bad_z = 0;
    auto* goodpart = app.add_subcommand("goodpart", "Good partition of one side of a colored complete bipartite graph");
    goodpart->add_option("--input", input);
    goodpart->add_option("--y", gy, "The side Y");
    goodpart->add_option("--z", gz, "The side Z (default: the other vertices)");
    goodpart->add_option("--r", gr);
    goodpart->add_option("--bad-y", bad_y, "Use the binary-string coloring with this |Y|");
    goodpart->add_option("--bad-z", bad_z, "... and this |Z|");

    auto* hyper = app.add_subcommand("hyper", "(c,l)-component covers of complete colored hypergraphs");
    hyper->add_option("--input", ho.input, "hg file (complete, colex order)");
    hyper->add_option("--n", ho.n, "Random complete coloring on n vertices");
    hyper->add_option("--k", ho.k);
    hyper->add_option("--r", ho.r);
    hyper->add_option("--c", ho.c);
    hyper->add_option("--ell", ho.ell);
    hyper->add_option("--method", ho.method)->check(CLI::IsMember({"exact", "kiraly", "product", "midrange", "tight"}));

    ConstructOpts cno;
    auto* construct = app.add_subcommand("construct", "Extremal and random instances");
    construct->add_option("kind", cno.kind)
        ->required()
        ->check(CLI::IsMember(
            {"plane", "affine-coloring", "half-r", "badmulti", "star", "alpha2-example", "random", "random-hyper"}));
    construct->add_option("--q", cno.q);
    construct->add_option("--plane", cno.plane);
    construct->add_option("--r", cno.r);
    construct->add_option("--alpha", cno.alpha);
    construct->add_option("--block-size", cno.block_size);
    construct->add_option("--k", cno.k);
    construct->add_option("--t", cno.t);
    construct->add_option("--ysize", cno.ysize);
    construct->add_option("--part-size", cno.part_size);
    construct->add_option("--n", cno.n);
    construct->add_option("--sizes", cno.sizes, "Part sizes of a random multipartite graph, e.g. 3,3,2");

    HuntOpts hu;
    auto* hnt = app.add_subcommand("hunt", "Exhaustive search for colorings with large tc");
    hnt->add_option("--n", hu.n)->required();
    hnt->add_option("--r", hu.r)->required();
    hnt->add_option("--bound", hu.bound, "Fixed bound on tc");
    hnt->add_option("--alpha-factor", hu.alpha_factor, "Bound = factor * alpha (default r-1)");
    hnt->add_flag("--no-filters", hu.no_filters);
    hnt->add_flag("--all-closed", hu.all_closed, "All closed graphs on n vertices, not only complete ones");

    std::string vg, vc;
    auto* ver = app.add_subcommand("verify", "Check a cover certificate against a graph");
    ver->add_option("--graph", vg)->required();
    ver->add_option("--cert", vc)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    Run run;
    try {
        const std::string name = sub->get_name();
        if (name == "tc") cmd_tc(run, gl, co, false);
        else if (name == "tp") cmd_tc(run, gl, co, true);
        else if (name == "taunu") cmd_taunu(run, input);
        else if (name == "mc") cmd_mc(run, input, ho.c, ho.ell);
        else if (name == "dualize") cmd_dualize(run, input);
        else if (name == "classify") cmd_classify(run, co);
        else if (name == "cover") cmd_cover(run, gl, co);
        else if (name == "signatures") cmd_signatures(run, gl, sn, sp, stage);
        else if (name == "zrd") cmd_zrd(run, gl, zr, zd);
        else if (name == "goodpart") cmd_goodpart(run, gl, input, gy, gz, gr, bad_y, bad_z);
        else if (name == "hyper") cmd_hyper(run, gl, ho);
        else if (name == "construct") cmd_construct(run, gl, cno);
        else if (name == "hunt") cmd_hunt(run, gl, hu);
        else if (name == "verify") cmd_verify(run, vg, vc);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kViolation;
    }

    const std::string text = run.out.str();
    std::cout << text << std::flush;

    if (!gl.manifest.empty()) {
        json m;
        m["command"] = sub->get_name();
        m["parameters"] = parameters_of(sub);
        m["seed"] = gl.seed;
        m["budget_seconds"] = gl.budget_seconds;
        m["threads"] = gl.threads;
        m["version"] = RYSERLAB_VERSION;
        m["rng"] = kRngAlgorithm;
        m["exit_code"] = run.code;
        m["summary"] = run.summary;
        m["result_digest"] = "fnv1a64:" + fnv1a(text);
        std::ofstream f(gl.manifest);
        if (!f) {
            std::cerr << "cannot write manifest " << gl.manifest << "\n";
            return kUsage;
        }
        f << m.dump(2) << "\n";
    }
    return run.code;
}
