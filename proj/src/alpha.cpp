#include "gki/alpha.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <stdexcept>

namespace gki {

namespace {

constexpr int kNeg = std::numeric_limits<int>::min() / 4;

void validate_k(int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
}

void validate_subset(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

// Smaller in the order of sorted vertex lists; masks must have equal popcount.
bool lex_less_mask(uint32_t a, uint32_t b) {
    while (a && b) {
        int la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

// Enumerates each connected vertex set containing `root` with at most
// max_size vertices exactly once, in a deterministic order.
void enum_connected_sets(const Graph& g, int root, int max_size,
                         const std::function<void(const VertexSet&)>& emit) {
    int n = g.vertex_count();
    std::vector<char> in_set(n, 0), banned(n, 0);
    VertexSet cur{root};
    in_set[root] = 1;
    std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& ext) {
        emit(cur);
        if (static_cast<int>(cur.size()) >= max_size) return;
        std::vector<int> banned_here;
        for (size_t i = 0; i < ext.size(); ++i) {
            int u = ext[i];
            cur.push_back(u);
            in_set[u] = 1;
            std::vector<int> child_ext;
            std::vector<char> queued(n, 0);
            for (size_t j = i + 1; j < ext.size(); ++j)
                if (!banned[ext[j]]) {
                    child_ext.push_back(ext[j]);
                    queued[ext[j]] = 1;
                }
            for (int w : g.neighbors(u))
                if (!in_set[w] && !banned[w] && !queued[w]) child_ext.push_back(w);
            rec(child_ext);
            in_set[u] = 0;
            cur.pop_back();
            banned[u] = 1;
            banned_here.push_back(u);
        }
        for (int u : banned_here) banned[u] = 0;
    };
    rec(g.neighbors(root));
}

int solve_any(const Graph& g, int k, const VertexSet& req, int stop_at);

// Connected graph. Branches on one vertex: either it is excluded, or its
// whole component in the selected set is one of the connected fragments
// through it (at most k-1 vertices), whose neighborhood is then excluded.
int solve_connected(const Graph& h, int k, const VertexSet& req, int stop_at) {
    int n = h.vertex_count();
    if (n == 0) return 0;
    if (req.empty() && is_acyclic(h)) return alpha_tree_value(h, k);

    std::vector<char> required(n, 0);
    for (int v : req) required[v] = 1;

    int v;
    if (!req.empty()) {
        v = req.front();
    } else {
        v = 0;
        for (int u = 1; u < n; ++u)
            if (h.degree(u) > h.degree(v)) v = u;
    }

    int best = req.empty() ? 0 : -1;
    if (req.empty()) {
        auto del = delete_vertices(h, {v});
        best = std::max(best, solve_any(del.graph, k, {}, -1));
        if (stop_at >= 0 && best >= stop_at) return best;
    }

    std::vector<char> in_frag(n, 0);
    enum_connected_sets(h, v, k - 1, [&](const VertexSet& frag) {
        if (stop_at >= 0 && best >= stop_at) return;
        for (int u : frag) in_frag[u] = 1;
        VertexSet closed_nbrs = frag;
        bool ok = true;
        for (int u : frag)
            for (int w : h.neighbors(u))
                if (!in_frag[w]) {
                    if (required[w]) ok = false;
                    closed_nbrs.push_back(w);
                }
        if (ok) {
            std::sort(closed_nbrs.begin(), closed_nbrs.end());
            closed_nbrs.erase(std::unique(closed_nbrs.begin(), closed_nbrs.end()),
                              closed_nbrs.end());
            int frag_size = static_cast<int>(frag.size());
            int ub = frag_size + n - static_cast<int>(closed_nbrs.size());
            if (ub > best) {
                auto del = delete_vertices(h, closed_nbrs);
                VertexSet subreq;
                for (int r : req)
                    if (del.old_to_new[r] != -1) subreq.push_back(del.old_to_new[r]);
                std::sort(subreq.begin(), subreq.end());
                int sub = solve_any(del.graph, k, subreq, -1);
                if (sub >= 0) best = std::max(best, frag_size + sub);
            }
        }
        for (int u : frag) in_frag[u] = 0;
    });
    return best;
}

int solve_any(const Graph& g, int k, const VertexSet& req, int stop_at) {
    if (g.vertex_count() == 0) return 0;
    auto comps = components(g);
    if (comps.size() == 1) return solve_connected(g, k, req, stop_at);
    int total = 0;
    for (const auto& comp : comps) {
        auto sub = induced_subgraph(g, comp);
        VertexSet subreq;
        for (int r : req)
            if (sub.old_to_new[r] != -1) subreq.push_back(sub.old_to_new[r]);
        std::sort(subreq.begin(), subreq.end());
        int val = solve_connected(sub.graph, k, subreq, -1);
        if (val < 0) return -1;
        total += val;
    }
    return total;
}

}  // namespace

bool is_gen_k_independent(const Graph& g, const VertexSet& s, int k) {
    validate_k(k);
    validate_subset(g, s);
    int n = g.vertex_count();
    std::vector<char> in_s(n, 0), seen(n, 0);
    for (int v : s) in_s[v] = 1;
    for (int v : s) {
        if (seen[v]) continue;
        int size = 0;
        VertexSet stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++size;
            for (int w : g.neighbors(u))
                if (in_s[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (size >= k) return false;
    }
    return true;
}

AlphaResult alpha_bruteforce(const Graph& g, int k, int cap) {
    validate_k(k);
    int n = g.vertex_count();
    if (n > cap)
        throw std::invalid_argument("graph exceeds the brute-force cap of " +
                                    std::to_string(cap) + " vertices; use alpha_exact");
    std::vector<uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    auto feasible = [&](uint32_t mask) {
        uint32_t rem = mask;
        while (rem) {
            uint32_t comp = rem & (~rem + 1);
            uint32_t frontier = comp;
            while (frontier) {
                uint32_t grow = 0;
                for (uint32_t f = frontier; f; f &= f - 1)
                    grow |= adj[std::countr_zero(f)];
                frontier = grow & mask & ~comp;
                comp |= frontier;
            }
            if (std::popcount(comp) >= k) return false;
            rem &= ~comp;
        }
        return true;
    };

    uint32_t best_mask = 0;
    int best_size = 0;
    uint64_t limit = 1ull << n;
    for (uint64_t m = 0; m < limit; ++m) {
        auto mask = static_cast<uint32_t>(m);
        if (!feasible(mask)) continue;
        int size = std::popcount(mask);
        if (size > best_size || (size == best_size && lex_less_mask(mask, best_mask)))
            best_mask = mask, best_size = size;
    }
    AlphaResult res;
    res.value = best_size;
    res.k = k;
    for (uint32_t m = best_mask; m; m &= m - 1) res.witness.push_back(std::countr_zero(m));
    return res;
}

int alpha_tree_value(const Graph& g, int k) {
    validate_k(k);
    if (!is_acyclic(g)) throw std::invalid_argument("alpha_tree requires an acyclic graph");
    // dp[j]: best in the subtree when the selected fragment through the
    // current vertex has size j inside it (j=0 means the vertex is out).
    std::function<std::vector<int>(int, int)> dp = [&](int v, int parent) {
        std::vector<int> cur(k, kNeg);
        cur[0] = 0;
        cur[1] = 1;
        for (int w : g.neighbors(v)) {
            if (w == parent) continue;
            std::vector<int> child = dp(w, v);
            int child_best = *std::max_element(child.begin(), child.end());
            std::vector<int> nxt(k, kNeg);
            nxt[0] = cur[0] + child_best;
            for (int j = 1; j < k; ++j) {
                if (cur[j] > kNeg && child[0] > kNeg) nxt[j] = cur[j] + child[0];
                for (int jc = 1; jc < j; ++jc)
                    if (cur[j - jc] > kNeg && child[jc] > kNeg)
                        nxt[j] = std::max(nxt[j], cur[j - jc] + child[jc]);
            }
            cur = std::move(nxt);
        }
        return cur;
    };
    int total = 0;
    for (const auto& comp : components(g)) {
        std::vector<int> root_dp = dp(comp.front(), -1);
        total += *std::max_element(root_dp.begin(), root_dp.end());
    }
    return total;
}

int alpha_value(const Graph& g, int k) {
    validate_k(k);
    return solve_any(g, k, {}, -1);
}

int alpha_value_with_required(const Graph& g, int k, const VertexSet& required, int stop_at) {
    validate_k(k);
    validate_subset(g, required);
    VertexSet req = required;
    std::sort(req.begin(), req.end());
    req.erase(std::unique(req.begin(), req.end()), req.end());
    return solve_any(g, k, req, stop_at);
}

VertexSet lexmin_witness(const Graph& g, int k, int value) {
    validate_k(k);
    VertexSet witness;
    for (const auto& comp : components(g)) {
        auto sub = induced_subgraph(g, comp);
        int comp_value = alpha_value(sub.graph, k);
        Graph cur = sub.graph;
        std::vector<int> orig_of = sub.new_to_old;
        VertexSet committed;  // labels in cur
        for (int orig_v : comp) {
            int cv = -1;
            for (size_t i = 0; i < orig_of.size(); ++i)
                if (orig_of[i] == orig_v) {
                    cv = static_cast<int>(i);
                    break;
                }
            VertexSet req = committed;
            req.push_back(cv);
            std::sort(req.begin(), req.end());
            if (alpha_value_with_required(cur, k, req, comp_value) == comp_value) {
                committed.push_back(cv);
            } else {
                auto del = delete_vertices(cur, {cv});
                for (int& c : committed) c = del.old_to_new[c];
                std::vector<int> next_orig(del.new_to_old.size());
                for (size_t i = 0; i < del.new_to_old.size(); ++i)
                    next_orig[i] = orig_of[del.new_to_old[i]];
                orig_of = std::move(next_orig);
                cur = std::move(del.graph);
            }
        }
        for (int cv : committed) witness.push_back(orig_of[cv]);
    }
    std::sort(witness.begin(), witness.end());
    if (static_cast<int>(witness.size()) != value)
        throw std::logic_error("witness reconstruction did not reach the optimum");
    return witness;
}

AlphaResult alpha_exact(const Graph& g, int k) {
    int value = alpha_value(g, k);
    return AlphaResult{value, lexmin_witness(g, k, value), k};
}

AlphaResult alpha_tree(const Graph& g, int k) {
    int value = alpha_tree_value(g, k);
    return AlphaResult{value, lexmin_witness(g, k, value), k};
}

}  // namespace gki
