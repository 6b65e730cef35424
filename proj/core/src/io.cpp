#include "ryserlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace ryser {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line), column_(column) {}

namespace {

struct Token {
    std::string_view text;
    int column;
};

struct Line {
    int number;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            if (j > i) line.tokens.push_back({raw.substr(i, j - i), int(i) + 1});
            i = j;
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

[[noreturn]] void fail(const Line& l, std::size_t tok, const std::string& what) {
    int col = tok < l.tokens.size() ? l.tokens[tok].column
                                    : (l.tokens.empty() ? 1 : l.tokens.back().column + int(l.tokens.back().text.size()));
    throw ParseError(l.number, col, what);
}

int integer(const Line& l, std::size_t tok, int lo, int hi, const char* what) {
    if (tok >= l.tokens.size()) fail(l, tok, std::string("missing ") + what);
    auto t = l.tokens[tok].text;
    long long v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size()) fail(l, tok, std::string("expected integer ") + what);
    if (v < lo || v > hi)
        fail(l, tok, std::string(what) + " " + std::string(t) + " out of range [" + std::to_string(lo) + "," +
                         std::to_string(hi) + "]");
    return int(v);
}

void expect_end(const Line& l, std::size_t tok) {
    if (tok < l.tokens.size()) fail(l, tok, "unexpected token '" + std::string(l.tokens[tok].text) + "'");
}

void expect_keyword(const std::vector<Line>& lines, const char* kw) {
    if (lines.empty()) throw ParseError(1, 1, std::string("empty input, expected '") + kw + "' header");
    if (lines[0].tokens[0].text != kw) fail(lines[0], 0, std::string("expected '") + kw + "' header");
}

VertexSet vertex_list(const Line& l, std::size_t from, int n) {
    VertexSet vs;
    for (std::size_t t = from; t < l.tokens.size(); ++t) vs.push_back(integer(l, t, 0, n - 1, "vertex"));
    VertexSet sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) fail(l, from, "repeated vertex " + std::to_string(sorted[i]));
    return sorted;
}

constexpr int kMaxVertices = 1 << 20;

}  // namespace

ColoredMultigraph parse_graph(std::string_view text) {
    auto lines = tokenize(text);
    expect_keyword(lines, "cg");
    const Line& h = lines[0];
    int n = integer(h, 1, 0, kMaxVertices, "vertex count");
    int r = integer(h, 2, 1, kMaxColors, "color count");
    expect_end(h, 3);
    ColoredMultigraph g(n, r);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens[0].text != "e") fail(l, 0, "expected 'e'");
        int u = integer(l, 1, 0, n - 1, "vertex");
        int v = integer(l, 2, 0, n - 1, "vertex");
        int c = integer(l, 3, 1, r, "color");
        expect_end(l, 4);
        if (u == v) fail(l, 2, "loop at vertex " + std::to_string(u));
        g.add_edge(u, v, c);
    }
    return g;
}

std::string write_graph(const ColoredMultigraph& g) {
    std::ostringstream os;
    os << "cg " << g.n() << ' ' << g.r() << '\n';
    for (auto& [uv, mask] : g.edges())
        for (int c = 1; c <= g.r(); ++c)
            if (mask & color_bit(c)) os << "e " << uv.first << ' ' << uv.second << ' ' << c << '\n';
    return os.str();
}

ColoredHypergraph parse_hypergraph(std::string_view text) {
    auto lines = tokenize(text);
    expect_keyword(lines, "hg");
    const Line& hl = lines[0];
    ColoredHypergraph h;
    h.n = integer(hl, 1, 0, kMaxVertices, "vertex count");
    h.k = integer(hl, 2, 0, kMaxVertices, "uniformity");
    h.r = integer(hl, 3, 0, 1 << 20, "color count");
    expect_end(hl, 4);
    std::vector<VertexSet> classes;
    std::set<VertexSet> seen;
    std::size_t i = 1;
    for (; i < lines.size() && lines[i].tokens[0].text == "part"; ++i) {
        const Line& l = lines[i];
        integer(l, 1, int(classes.size()), int(classes.size()), "part index");
        classes.push_back(vertex_list(l, 2, h.n));
    }
    if (!classes.empty()) {
        try {
            h.set_parts(classes);
        } catch (const std::invalid_argument& e) {
            fail(lines[i - 1], 0, e.what());
        }
    }
    for (; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens[0].text == "part") fail(l, 0, "part lines must precede edges");
        if (l.tokens[0].text != "e") fail(l, 0, "expected 'e'");
        int c = 0;
        std::size_t from = 1;
        if (h.r > 0) c = integer(l, from++, 1, h.r, "color");
        VertexSet vs = vertex_list(l, from, h.n);
        if (vs.empty()) fail(l, from, "empty edge");
        if (h.k > 0 && int(vs.size()) != h.k)
            fail(l, from, "edge has " + std::to_string(vs.size()) + " vertices, expected " + std::to_string(h.k));
        if (h.has_parts()) {
            std::vector<char> hit(h.num_parts, 0);
            for (int v : vs)
                if (hit[h.part_of[v]]++) fail(l, from, "edge meets part " + std::to_string(h.part_of[v]) + " twice");
        }
        if (!seen.insert(vs).second) fail(l, 0, "duplicate edge");
        h.add_edge(std::move(vs), c);
    }
    return h;
}

std::string write_hypergraph(const ColoredHypergraph& h) {
    std::ostringstream os;
    os << "hg " << h.n << ' ' << h.k << ' ' << h.r << '\n';
    if (h.has_parts()) {
        auto ps = h.parts();
        for (std::size_t i = 0; i < ps.size(); ++i) {
            os << "part " << i;
            for (int v : ps[i]) os << ' ' << v;
            os << '\n';
        }
    }
    for (auto& e : h.edges) {
        os << 'e';
        if (h.r > 0) os << ' ' << e.color;
        for (int v : e.vertices) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

CoverCertificate parse_cover(std::string_view text) {
    auto lines = tokenize(text);
    expect_keyword(lines, "cover");
    const Line& hl = lines[0];
    CoverCertificate cert;
    if (hl.tokens.size() < 2) fail(hl, 1, "missing mode");
    if (hl.tokens[1].text == "cover")
        cert.mode = CoverCertificate::Mode::Cover;
    else if (hl.tokens[1].text == "partition")
        cert.mode = CoverCertificate::Mode::Partition;
    else
        fail(hl, 1, "mode must be 'cover' or 'partition'");
    int count = integer(hl, 2, 0, kMaxVertices, "piece count");
    expect_end(hl, 3);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        auto kw = l.tokens[0].text;
        if (kw == "maxsize") {
            cert.max_size = integer(l, 1, 0, kMaxVertices, "size");
            expect_end(l, 2);
        } else if (kw == "maxdiam") {
            cert.max_diam = integer(l, 1, 0, kMaxVertices, "diameter");
            expect_end(l, 2);
        } else if (kw == "colors") {
            if (l.tokens.size() < 2) fail(l, 1, "missing colors");
            for (std::size_t t = 1; t < l.tokens.size(); ++t) cert.allowed |= color_bit(integer(l, t, 1, kMaxColors, "color"));
        } else if (kw == "piece") {
            CoverCertificate::Piece p;
            p.color = integer(l, 1, 1, kMaxColors, "color");
            p.vertices = vertex_list(l, 2, kMaxVertices);
            if (p.vertices.empty()) fail(l, 2, "empty piece");
            cert.pieces.push_back(std::move(p));
        } else if (kw == "tree") {
            int idx = integer(l, 1, 0, int(cert.pieces.size()) - 1, "piece index");
            if ((l.tokens.size() - 2) % 2) fail(l, l.tokens.size(), "tree edges come in pairs");
            auto& t = cert.pieces[idx].tree;
            for (std::size_t k = 2; k < l.tokens.size(); k += 2)
                t.push_back({integer(l, k, 0, kMaxVertices, "vertex"), integer(l, k + 1, 0, kMaxVertices, "vertex")});
        } else {
            fail(l, 0, "unknown keyword '" + std::string(kw) + "'");
        }
    }
    if (int(cert.pieces.size()) != count)
        throw ParseError(lines.back().number, 1,
                         "header announces " + std::to_string(count) + " pieces, found " + std::to_string(cert.pieces.size()));
    return cert;
}

std::string write_cover(const CoverCertificate& cert) {
    std::ostringstream os;
    os << "cover " << (cert.mode == CoverCertificate::Mode::Cover ? "cover" : "partition") << ' ' << cert.pieces.size()
       << '\n';
    if (cert.max_size >= 0) os << "maxsize " << cert.max_size << '\n';
    if (cert.max_diam >= 0) os << "maxdiam " << cert.max_diam << '\n';
    if (cert.allowed) {
        os << "colors";
        for (int c = 1; c <= kMaxColors; ++c)
            if (cert.allowed & color_bit(c)) os << ' ' << c;
        os << '\n';
    }
    for (auto& p : cert.pieces) {
        os << "piece " << p.color;
        for (int v : p.vertices) os << ' ' << v;
        os << '\n';
    }
    for (std::size_t i = 0; i < cert.pieces.size(); ++i) {
        if (cert.pieces[i].tree.empty()) continue;
        os << "tree " << i;
        for (auto [u, v] : cert.pieces[i].tree) os << ' ' << u << ' ' << v;
        os << '\n';
    }
    return os.str();
}

}  // namespace ryser
