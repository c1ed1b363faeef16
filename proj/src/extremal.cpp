#include "gki/extremal.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "gki/canonical.hpp"
#include "gki/characterization.hpp"
#include "gki/graph_io.hpp"

namespace gki {

std::vector<Graph> all_trees(int n) {
    if (n < 1) throw std::invalid_argument("trees need at least one vertex");
    std::vector<Graph> level{Graph::build(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Graph> next;
        for (const Graph& t : level) {
            for (int v = 0; v < t.vertex_count(); ++v) {
                auto edges = t.edges();
                edges.emplace_back(v, size - 1);
                Graph grown = Graph::build(size, std::move(edges));
                next.try_emplace(ahu_code(grown), grown);
            }
        }
        level.clear();
        for (auto& [code, t] : next) level.push_back(std::move(t));
    }
    return level;
}

std::vector<Graph> generate_R(int i, int k, int vertex_cap) {
    if (i < 1) throw std::invalid_argument("i must be positive");
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (k * i > vertex_cap)
        throw std::invalid_argument("R family order " + std::to_string(k * i) +
                                    " exceeds the cap of " + std::to_string(vertex_cap));
    std::vector<Graph> blocks = all_trees(k);
    std::vector<Graph> family = blocks;
    for (int step = 2; step <= i; ++step) {
        std::map<std::string, Graph> next;
        int base_n = k * (step - 1);
        for (const Graph& member : family) {
            for (const Graph& block : blocks) {
                for (int u = 0; u < base_n; ++u) {
                    for (int w = 0; w < k; ++w) {
                        auto edges = member.edges();
                        for (auto [a, b] : block.edges()) edges.emplace_back(a + base_n, b + base_n);
                        edges.emplace_back(u, w + base_n);
                        Graph grown = Graph::build(base_n + k, std::move(edges));
                        next.try_emplace(ahu_code(grown), grown);
                    }
                }
            }
        }
        family.clear();
        for (auto& [code, t] : next) family.push_back(std::move(t));
    }
    return family;
}

namespace {

struct PartitionDp {
    const Graph& tree;
    int k;
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    // prefix[v][i] = achievable sizes (bitmask over 1..k) of the block
    // through v restricted to its subtree, after merging the first i
    // children; everything else complete.
    std::vector<std::vector<uint64_t>> prefix;
    std::vector<uint64_t> child_mask;  // final mask per vertex

    PartitionDp(const Graph& t, int k_) : tree(t), k(k_) {}

    bool run(int root) {
        int n = tree.vertex_count();
        parent.assign(n, -1);
        children.assign(n, {});
        prefix.assign(n, {});
        child_mask.assign(n, 0);
        std::vector<int> order{root};
        order.reserve(n);
        for (size_t i = 0; i < order.size(); ++i)
            for (int w : tree.neighbors(order[i]))
                if (w != parent[order[i]]) {
                    parent[w] = order[i];
                    children[order[i]].push_back(w);
                    order.push_back(w);
                }
        uint64_t full = (1ull << (k + 1)) - 2;  // bits 1..k
        for (size_t idx = order.size(); idx-- > 0;) {
            int v = order[idx];
            uint64_t cur = 1ull << 1;
            prefix[v].push_back(cur);
            for (int c : children[v]) {
                uint64_t contribs = child_mask[c];
                uint64_t nxt = 0;
                if (contribs & (1ull << k)) nxt |= cur;  // child block closed in its subtree
                for (int s = 1; s < k; ++s)
                    if (contribs & (1ull << s)) nxt |= (cur << s) & full;
                cur = nxt;
                prefix[v].push_back(cur);
            }
            child_mask[v] = cur;
        }
        return (child_mask[root] >> k) & 1;
    }

    // Reconstructs block ids; returns blocks in creation order.
    std::vector<VertexSet> extract(int root) {
        std::vector<VertexSet> blocks;
        std::function<void(int, int, int)> walk = [&](int v, int target, int block) {
            blocks[block].push_back(v);
            int s = target;
            for (size_t i = children[v].size(); i-- > 0;) {
                int c = children[v][i];
                uint64_t before = prefix[v][i];
                int chosen = -1;
                bool closes = false;
                if ((child_mask[c] & (1ull << k)) && ((before >> s) & 1)) {
                    chosen = 0;
                    closes = true;
                } else {
                    for (int contrib = 1; contrib < k && contrib < s; ++contrib)
                        if (((child_mask[c] >> contrib) & 1) && ((before >> (s - contrib)) & 1)) {
                            chosen = contrib;
                            break;
                        }
                }
                if (chosen < 0) throw std::logic_error("partition backtrace failed");
                if (closes) {
                    blocks.emplace_back();
                    walk(c, k, static_cast<int>(blocks.size()) - 1);
                } else {
                    s -= chosen;
                    walk(c, chosen, block);
                }
            }
        };
        blocks.emplace_back();
        walk(root, k, 0);
        return blocks;
    }
};

}  // namespace

std::optional<RCertificate> is_in_R(const Graph& tree, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (k > 62) throw std::invalid_argument("block size too large");
    if (tree.vertex_count() == 0 || !is_connected(tree) || !is_acyclic(tree))
        throw std::invalid_argument("is_in_R requires a nonempty tree");
    int n = tree.vertex_count();
    if (n % k != 0) return std::nullopt;
    PartitionDp dp(tree, k);
    if (!dp.run(0)) return std::nullopt;
    std::vector<VertexSet> creation_order = dp.extract(0);
    for (auto& blk : creation_order) std::sort(blk.begin(), blk.end());

    RCertificate cert;
    std::vector<int> by_min(creation_order.size());
    for (size_t i = 0; i < creation_order.size(); ++i) by_min[i] = static_cast<int>(i);
    std::sort(by_min.begin(), by_min.end(),
              [&](int a, int b) { return creation_order[a][0] < creation_order[b][0]; });
    std::vector<int> rank(creation_order.size());
    for (size_t pos = 0; pos < by_min.size(); ++pos) rank[by_min[pos]] = static_cast<int>(pos);
    cert.blocks.resize(creation_order.size());
    for (size_t i = 0; i < creation_order.size(); ++i)
        cert.blocks[rank[i]] = std::move(creation_order[i]);
    for (size_t i = 0; i < rank.size(); ++i) cert.attach_order.push_back(rank[i]);
    return cert;
}

bool verify_r_certificate(const Graph& tree, int k, const RCertificate& cert) {
    int n = tree.vertex_count();
    if (n == 0 || n % k != 0) return false;
    if (static_cast<int>(cert.blocks.size()) != n / k) return false;
    std::vector<int> owner(n, -1);
    for (size_t b = 0; b < cert.blocks.size(); ++b) {
        if (static_cast<int>(cert.blocks[b].size()) != k) return false;
        for (int v : cert.blocks[b]) {
            if (v < 0 || v >= n || owner[v] != -1) return false;
            owner[v] = static_cast<int>(b);
        }
        if (!is_connected(induced_subgraph(tree, cert.blocks[b]).graph)) return false;
    }
    if (cert.attach_order.size() != cert.blocks.size()) return false;
    std::vector<bool> placed(cert.blocks.size(), false);
    std::vector<bool> vertex_placed(n, false);
    for (size_t step = 0; step < cert.attach_order.size(); ++step) {
        int b = cert.attach_order[step];
        if (b < 0 || b >= static_cast<int>(cert.blocks.size()) || placed[b]) return false;
        if (step > 0) {
            int joining_edges = 0;
            for (int v : cert.blocks[b])
                for (int w : tree.neighbors(v))
                    if (vertex_placed[w]) ++joining_edges;
            if (joining_edges != 1) return false;
        }
        placed[b] = true;
        for (int v : cert.blocks[b]) vertex_placed[v] = true;
    }
    return true;
}

Graph build_O_gadget(int p4_arms, const std::map<int, int>& star_arms) {
    if (p4_arms < 0) throw std::invalid_argument("negative arm count");
    int total_arms = p4_arms;
    for (auto [k, count] : star_arms) {
        if (k < 2) throw std::invalid_argument("star arms need k >= 2");
        if (count < 0) throw std::invalid_argument("negative arm count");
        total_arms += count;
    }
    if (total_arms == 0) throw std::invalid_argument("gadget needs at least one arm");

    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int arm = 0; arm < p4_arms; ++arm) {
        edges.emplace_back(0, next);
        edges.emplace_back(next, next + 1);
        edges.emplace_back(next + 1, next + 2);
        next += 3;
    }
    for (auto [k, count] : star_arms) {
        for (int arm = 0; arm < count; ++arm) {
            int hub = next++;
            edges.emplace_back(0, hub);
            for (int leaf = 0; leaf < k - 2; ++leaf) edges.emplace_back(hub, next++);
        }
    }
    return Graph::build(next, std::move(edges));
}

namespace {

// Labeled trees on t nodes via Prüfer sequences.
std::vector<std::vector<std::pair<int, int>>> labeled_trees(int t) {
    if (t == 1) return {{}};
    if (t == 2) return {{{0, 1}}};
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<int> seq(t - 2, 0);
    while (true) {
        std::vector<int> degree(t, 1);
        for (int x : seq) ++degree[x];
        std::vector<std::pair<int, int>> edges;
        std::set<int> leaves;
        for (int v = 0; v < t; ++v)
            if (degree[v] == 1) leaves.insert(v);
        std::vector<int> work = seq;
        for (int x : work) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
            if (--degree[x] == 1) leaves.insert(x);
        }
        int a = *leaves.begin(), b = *std::next(leaves.begin());
        edges.emplace_back(a, b);
        out.push_back(std::move(edges));
        int pos = t - 3;
        while (pos >= 0 && seq[pos] == t - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
    return out;
}

struct Piece {
    Graph graph;
    bool is_tree;
};

void assemble_and_collect(int n, const std::vector<Piece>& pieces, std::vector<Graph>& out) {
    int t = static_cast<int>(pieces.size());
    std::vector<int> offset(t, 0);
    for (int i = 1; i < t; ++i) offset[i] = offset[i - 1] + pieces[i - 1].graph.vertex_count();

    for (const auto& shape : labeled_trees(t)) {
        bool tree_tree = false;
        for (auto [a, b] : shape)
            if (pieces[a].is_tree && pieces[b].is_tree) tree_tree = true;
        if (tree_tree) continue;  // would merge two R pieces into one component

        // One attachment vertex per endpoint of every piece-tree edge.
        std::vector<std::pair<int, int>> sizes;
        for (auto [a, b] : shape)
            sizes.emplace_back(pieces[a].graph.vertex_count(), pieces[b].graph.vertex_count());
        std::vector<std::pair<int, int>> choice(shape.size(), {0, 0});
        while (true) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < t; ++i)
                for (auto [u, v] : pieces[i].graph.edges())
                    edges.emplace_back(u + offset[i], v + offset[i]);
            for (size_t e = 0; e < shape.size(); ++e) {
                auto [a, b] = shape[e];
                edges.emplace_back(offset[a] + choice[e].first, offset[b] + choice[e].second);
            }
            out.push_back(Graph::build(n, std::move(edges)));

            size_t pos = 0;
            while (pos < shape.size()) {
                if (++choice[pos].second < sizes[pos].second) break;
                choice[pos].second = 0;
                if (++choice[pos].first < sizes[pos].first) break;
                choice[pos].first = 0;
                ++pos;
            }
            if (pos == shape.size()) break;
        }
    }
}

void pick_tree_pieces(int n, const std::vector<int>& tree_sizes, size_t idx,
                      std::vector<Piece>& pieces,
                      std::map<int, std::vector<Graph>>& r_cache, std::vector<Graph>& out) {
    if (idx == tree_sizes.size()) {
        assemble_and_collect(n, pieces, out);
        return;
    }
    int size = tree_sizes[idx];
    auto it = r_cache.find(size);
    if (it == r_cache.end())
        it = r_cache.emplace(size, generate_R(size / 4, 4, size)).first;
    for (const Graph& t : it->second) {
        pieces.push_back({t, true});
        pick_tree_pieces(n, tree_sizes, idx + 1, pieces, r_cache, out);
        pieces.pop_back();
    }
}

// Nondecreasing cycle-length multisets (values 5, 9, 13, ...) followed by
// nondecreasing tree-size multisets (multiples of 4) summing to n.
void enumerate_compositions(int n, int min_cycle, std::vector<int>& cycles,
                            std::map<int, std::vector<Graph>>& r_cache,
                            std::vector<Graph>& out) {
    int used = 0;
    for (int q : cycles) used += q;
    int rest = n - used;
    if (rest >= 0 && rest % 4 == 0) {
        std::vector<std::vector<int>> tree_partitions;
        std::vector<int> part;
        std::function<void(int, int)> split = [&](int remaining, int min_part) {
            if (remaining == 0) {
                tree_partitions.push_back(part);
                return;
            }
            for (int p = min_part; p <= remaining; p += 4) {
                part.push_back(p);
                split(remaining - p, p);
                part.pop_back();
            }
        };
        split(rest, 4);
        for (const auto& sizes : tree_partitions) {
            if (cycles.empty() && sizes.empty()) continue;
            std::vector<Piece> pieces;
            for (int q : cycles) pieces.push_back({cycle_graph(q), false});
            pick_tree_pieces(n, sizes, 0, pieces, r_cache, out);
        }
    }
    for (int q = min_cycle; used + q <= n; q += 4) {
        cycles.push_back(q);
        enumerate_compositions(n, q, cycles, r_cache, out);
        cycles.pop_back();
    }
}

}  // namespace

std::vector<Graph> generate_good_graphs(int n, int cap) {
    if (n > cap)
        throw std::invalid_argument("order " + std::to_string(n) + " exceeds the cap of " +
                                    std::to_string(cap));
    if (n < 1) return {};

    std::vector<Graph> candidates;
    std::vector<int> cycles;
    std::map<int, std::vector<Graph>> r_cache;
    enumerate_compositions(n, 5, cycles, r_cache, candidates);

    std::vector<Graph> kept;
    for (const Graph& g : candidates) {
        if (!check_good_structural(g).structural_good) continue;
        bool dup = false;
        for (const Graph& seen : kept)
            if (are_isomorphic(g, seen)) {
                dup = true;
                break;
            }
        if (!dup) kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end(), [](const Graph& a, const Graph& b) {
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return graph6_encode(a) < graph6_encode(b);
    });
    return kept;
}

}  // namespace gki
