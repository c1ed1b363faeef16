#include "gki/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace gki {

std::string ahu_code_rooted(const Graph& tree, int root) {
    std::function<std::string(int, int)> code = [&](int v, int parent) {
        std::vector<std::string> child_codes;
        for (int w : tree.neighbors(v))
            if (w != parent) child_codes.push_back(code(w, v));
        std::sort(child_codes.begin(), child_codes.end());
        std::string out = "(";
        for (const auto& c : child_codes) out += c;
        out += ")";
        return out;
    };
    return code(root, -1);
}

std::vector<int> tree_centroids(const Graph& tree) {
    int n = tree.vertex_count();
    if (n == 0) return {};
    std::vector<int> size(n, 1), max_part(n, 0), order, parent(n, -1);
    order.reserve(n);
    order.push_back(0);
    for (size_t i = 0; i < order.size(); ++i)
        for (int w : tree.neighbors(order[i]))
            if (w != parent[order[i]]) {
                parent[w] = order[i];
                order.push_back(w);
            }
    for (size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];
    for (int v = 0; v < n; ++v) {
        max_part[v] = n - size[v];
        for (int w : tree.neighbors(v))
            if (w != parent[v]) max_part[v] = std::max(max_part[v], size[w]);
    }
    int best = *std::min_element(max_part.begin(), max_part.end());
    std::vector<int> centroids;
    for (int v = 0; v < n; ++v)
        if (max_part[v] == best) centroids.push_back(v);
    return centroids;
}

std::string ahu_code(const Graph& tree) {
    if (tree.vertex_count() == 0 || !is_connected(tree) || !is_acyclic(tree))
        throw std::invalid_argument("ahu_code requires a nonempty tree");
    std::string best;
    for (int c : tree_centroids(tree)) {
        std::string code = ahu_code_rooted(tree, c);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

namespace {

struct CanonSearch {
    int n;
    int total_bits;
    const std::vector<uint16_t>& adj;
    uint64_t best = 0;
    bool have = false;
    std::vector<int> perm;
    std::vector<bool> used;

    CanonSearch(int n_, const std::vector<uint16_t>& adj_)
        : n(n_), total_bits(n_ * (n_ - 1) / 2), adj(adj_), used(n_, false) {
        perm.reserve(n_);
    }

    void rec(int j, uint64_t cur, int nbits) {
        if (j == n) {
            if (!have || cur < best) {
                best = cur;
                have = true;
            }
            return;
        }
        struct Cand {
            uint32_t bits;
            int v;
        };
        std::vector<Cand> cands;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            uint32_t bits = 0;
            for (int i = 0; i < j; ++i) bits = (bits << 1) | ((adj[v] >> perm[i]) & 1u);
            cands.push_back({bits, v});
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            return a.bits != b.bits ? a.bits < b.bits : a.v < b.v;
        });
        for (const auto& c : cands) {
            // best can shrink while iterating, so compare against it fresh.
            if (have && j > 0) {
                uint64_t best_prefix = best >> (total_bits - nbits);
                if (cur > best_prefix) return;
                if (cur == best_prefix) {
                    uint32_t seg = static_cast<uint32_t>((best >> (total_bits - nbits - j)) &
                                                         ((1u << j) - 1));
                    if (c.bits > seg) break;  // candidates are sorted, the rest only get worse
                }
            }
            used[c.v] = true;
            perm.push_back(c.v);
            rec(j + 1, (cur << j) | c.bits, nbits + j);
            perm.pop_back();
            used[c.v] = false;
        }
    }
};

}  // namespace

uint64_t canonical_bits(const Graph& g) {
    int n = g.vertex_count();
    if (n > 11) throw std::invalid_argument("canonical_bits limited to n <= 11");
    if (n <= 1) return 0;
    std::vector<uint16_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= static_cast<uint16_t>(1u << v);
        adj[v] |= static_cast<uint16_t>(1u << u);
    }
    CanonSearch search(n, adj);
    search.rec(0, 0, 0);
    return search.best;
}

Graph graph_from_bits(int n, uint64_t bits) {
    int total = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    int idx = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++idx)
            if ((bits >> (total - 1 - idx)) & 1) edges.emplace_back(row, col);
    return Graph::build(n, std::move(edges));
}

namespace {

// One round of color refinement; returns false if the color multisets of
// the two graphs separate.
bool refine_colors(const Graph& a, const Graph& b, std::vector<int>& ca, std::vector<int>& cb) {
    using Sig = std::pair<int, std::vector<int>>;
    std::map<Sig, int> ids;
    auto signature = [](const Graph& g, const std::vector<int>& col, int v) {
        std::vector<int> nbr;
        for (int w : g.neighbors(v)) nbr.push_back(col[w]);
        std::sort(nbr.begin(), nbr.end());
        return Sig{col[v], std::move(nbr)};
    };
    std::vector<int> na(a.vertex_count()), nb(b.vertex_count());
    for (int v = 0; v < a.vertex_count(); ++v) {
        auto s = signature(a, ca, v);
        auto [it, _] = ids.try_emplace(s, static_cast<int>(ids.size()));
        na[v] = it->second;
    }
    for (int v = 0; v < b.vertex_count(); ++v) {
        auto s = signature(b, cb, v);
        auto it = ids.find(s);
        if (it == ids.end()) return false;
        nb[v] = it->second;
    }
    auto hist = [](const std::vector<int>& c) {
        std::vector<int> h = c;
        std::sort(h.begin(), h.end());
        return h;
    };
    if (hist(na) != hist(nb)) return false;
    ca = std::move(na);
    cb = std::move(nb);
    return true;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (n == 0) return true;

    std::vector<int> ca(n), cb(n);
    for (int v = 0; v < n; ++v) ca[v] = a.degree(v);
    for (int v = 0; v < n; ++v) cb[v] = b.degree(v);
    for (int round = 0; round < 3; ++round)
        if (!refine_colors(a, b, ca, cb)) return false;

    // Map rare colors first.
    std::vector<int> color_count(n + 1, 0);
    std::vector<int> norm = ca;
    {
        std::map<int, int> remap;
        for (int& c : norm) {
            auto [it, _] = remap.try_emplace(c, static_cast<int>(remap.size()));
            c = it->second;
        }
        std::vector<int> normb = cb;
        for (int& c : normb) {
            auto it = remap.find(c);
            if (it == remap.end()) return false;
            c = it->second;
        }
        cb = std::move(normb);
        ca = norm;
        for (int c : ca) ++color_count[c];
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (color_count[ca[x]] != color_count[ca[y]])
            return color_count[ca[x]] < color_count[ca[y]];
        if (a.degree(x) != a.degree(y)) return a.degree(x) > a.degree(y);
        return x < y;
    });

    std::vector<int> map_ab(n, -1), map_ba(n, -1);
    std::function<bool(int)> place = [&](int idx) {
        if (idx == n) return true;
        int v = order[idx];
        for (int w = 0; w < n; ++w) {
            if (map_ba[w] != -1 || cb[w] != ca[v]) continue;
            bool ok = true;
            for (int u : a.neighbors(v)) {
                if (map_ab[u] != -1 && !b.has_edge(w, map_ab[u])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                for (int x : b.neighbors(w)) {
                    if (map_ba[x] != -1 && !a.has_edge(v, map_ba[x])) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            map_ab[v] = w;
            map_ba[w] = v;
            if (place(idx + 1)) return true;
            map_ab[v] = -1;
            map_ba[w] = -1;
        }
        return false;
    };
    return place(0);
}

}  // namespace gki
