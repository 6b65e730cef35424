#include "ryserlab/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace ryser {

ColoredMultigraph random_complete(int n, int r, Rng& rng) {
    ColoredMultigraph g(n, r);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v, rng.uniform(1, r));
    return g;
}

Multipartite random_multipartite(const std::vector<int>& sizes, int r, Rng& rng) {
    Multipartite out;
    int n = 0;
    std::vector<int> part;
    for (int i = 0; i < int(sizes.size()); ++i) {
        if (sizes[i] < 1) throw std::invalid_argument("random_multipartite: empty part");
        VertexSet p;
        for (int k = 0; k < sizes[i]; ++k) p.push_back(n++), part.push_back(i);
        out.parts.push_back(p);
    }
    out.g = ColoredMultigraph(n, r);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[u] != part[v]) out.g.add_edge(u, v, rng.uniform(1, r));
    return out;
}

ColoredMultigraph random_alpha2(int n, int r, double p, Rng& rng) {
    if (n < 2) throw std::invalid_argument("random_alpha2: n must be at least 2");
    const std::uint64_t scale = 1u << 30;
    const std::uint64_t cut = std::uint64_t(std::clamp(p, 0.0, 1.0) * double(scale));
    while (true) {
        std::vector<int> side(n);
        for (auto& s : side) s = rng.coin();
        ColoredMultigraph g(n, r);
        bool missing = false;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const bool drop = side[u] != side[v] && rng.below(scale) < cut;
                if (drop)
                    missing = true;
                else
                    g.add_edge(u, v, rng.uniform(1, r));
            }
        if (missing) return g;
    }
}

ColoredMultigraph matching_complement(int n, int r, Rng& rng) {
    if (n < 2 || n % 2) throw std::invalid_argument("matching_complement: n must be even and positive");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    rng.shuffle(perm);
    std::vector<int> mate(n);
    for (int i = 0; i < n; i += 2) mate[perm[i]] = perm[i + 1], mate[perm[i + 1]] = perm[i];
    ColoredMultigraph g(n, r);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (mate[u] != v) g.add_edge(u, v, rng.uniform(1, r));
    return g;
}

ColoredHypergraph random_partite_hypergraph(int part_size, int r, int m, Rng& rng) {
    ColoredHypergraph h;
    h.n = part_size * r;
    std::vector<VertexSet> classes(r);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < part_size; ++k) classes[i].push_back(i * part_size + k);
    h.set_parts(classes);
    std::vector<VertexSet> seen;
    for (int e = 0; e < m; ++e) {
        VertexSet vs;
        while (vs.empty())
            for (int i = 0; i < r; ++i)
                if (rng.coin()) vs.push_back(i * part_size + rng.uniform(0, part_size - 1));
        if (std::find(seen.begin(), seen.end(), vs) != seen.end()) continue;
        seen.push_back(vs);
        h.add_edge(vs);
    }
    return h;
}

}  // namespace ryser
