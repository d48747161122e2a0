#include "uniw/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "uniw/matching.hpp"

namespace uniw {

void validate_extremal_params(const ExtremalParams& p) {
    if (p.g < 3)
        throw input_error("extremal params: g >= 3 violated (g = " + std::to_string(p.g) + ")");
    if (p.n < p.g)
        throw input_error("extremal params: n >= g violated (n = " + std::to_string(p.n) +
                          ", g = " + std::to_string(p.g) + ")");
    if (2 * p.beta < 3 * p.g)
        throw input_error("extremal params: 2*beta >= 3*g violated (beta = " +
                          std::to_string(p.beta) + ", g = " + std::to_string(p.g) + ")");
    if (p.n < 2 * p.beta)
        throw input_error("extremal params: n >= 2*beta violated (n = " + std::to_string(p.n) +
                          ", beta = " + std::to_string(p.beta) + ")");
}

int CanonicalFamilyParams::t() const {
    return std::accumulate(pendant_flags.begin(), pendant_flags.end(), 0);
}

RootedTree build_star_like(const StarlikeParams& p) {
    if (p.a < 0 || p.b < 0) throw input_error("star-like params must be nonnegative");
    std::vector<Edge> edges;
    // root 0, children 1..a+b (arm children first), then the a arm leaves
    for (int c = 1; c <= p.a + p.b; ++c) edges.emplace_back(0, c);
    for (int k = 1; k <= p.a; ++k) edges.emplace_back(k, p.a + p.b + k);
    return RootedTree{Graph::from_edges(p.order(), edges), 0};
}

std::optional<StarlikeParams> star_params(const RootedTree& t) {
    if (!is_tree(t.graph)) return std::nullopt;
    int a = 0, b = 0;
    for (int c : t.graph.neighbors(t.root)) {
        int kid_count = t.graph.degree(c) - 1;
        if (kid_count == 0) {
            ++b;
        } else if (kid_count == 1) {
            int leaf = -1;
            for (int w : t.graph.neighbors(c))
                if (w != t.root) leaf = w;
            if (t.graph.degree(leaf) != 1) return std::nullopt;
            ++a;
        } else {
            return std::nullopt;
        }
    }
    StarlikeParams p{a, b};
    if (p.order() != t.order()) return std::nullopt;
    return p;
}

Graph build_cycle_assembly(int g, const std::vector<RootedTree>& branches) {
    if (g < 3) throw input_error("cycle length must be at least 3");
    if (static_cast<int>(branches.size()) != g)
        throw input_error("expected " + std::to_string(g) + " branches");

    std::vector<Edge> edges;
    for (int i = 0; i < g; ++i) edges.emplace_back(i, (i + 1) % g);

    int next = g;
    for (int i = 0; i < g; ++i) {
        const auto& t = branches[i];
        if (!is_tree(t.graph)) throw input_error("branch " + std::to_string(i) + " is not a tree");
        std::vector<int> id(t.order(), -1);
        id[t.root] = i;
        std::queue<int> q;
        q.push(t.root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : t.graph.neighbors(u))
                if (id[w] < 0) {
                    id[w] = next++;
                    edges.emplace_back(id[u], id[w]);
                    q.push(w);
                }
        }
    }
    return Graph::from_edges(next, edges);
}

Graph build_canonical_family(int g, const CanonicalFamilyParams& p) {
    if (static_cast<int>(p.pendant_flags.size()) != g - 1)
        throw input_error("expected g-1 pendant flags");
    std::vector<RootedTree> branches;
    branches.push_back(build_star_like(p.big));
    for (int f : p.pendant_flags) {
        if (f != 0 && f != 1) throw input_error("pendant flags must be 0 or 1");
        branches.push_back(build_star_like(StarlikeParams{0, f}));
    }
    return build_cycle_assembly(g, branches);
}

std::optional<CanonicalFamilyParams> canonical_family_params(const Graph& g) {
    CycleDecomposition d;
    try {
        d = decompose_unicyclic(g);
    } catch (const class_error&) {
        return std::nullopt;
    }
    const int glen = d.girth();
    std::vector<StarlikeParams> shapes(glen);
    int big = -1;
    for (int i = 0; i < glen; ++i) {
        auto p = star_params(branch_tree(g, d, i));
        if (!p) return std::nullopt;
        shapes[i] = *p;
        if (shapes[i].order() >= 3) {
            if (big >= 0) return std::nullopt;  // two big branches
            big = i;
        }
    }
    if (big < 0) big = 0;
    CanonicalFamilyParams out;
    out.big = shapes[big];
    for (int k = 1; k < glen; ++k) out.pendant_flags.push_back(shapes[(big + k) % glen].b);
    return out;
}

Graph construct_gstar(const ExtremalParams& p) {
    validate_extremal_params(p);
    std::vector<RootedTree> branches;
    if (p.g % 2 == 1) {
        branches.push_back(build_star_like({p.beta - (p.g + 1) / 2, p.n - 2 * p.beta + 1}));
        for (int i = 1; i < p.g; ++i) branches.push_back(build_star_like({0, 0}));
    } else {
        branches.push_back(build_star_like({p.beta - p.g / 2 - 1, p.n - 2 * p.beta + 1}));
        branches.push_back(build_star_like({0, 1}));
        for (int i = 2; i < p.g; ++i) branches.push_back(build_star_like({0, 0}));
    }
    Graph g = build_cycle_assembly(p.g, branches);

    if (g.vertex_count() != p.n)
        throw error("construct_gstar: order postcondition failed");
    auto gr = girth(g);
    if (!gr || *gr != p.g) throw error("construct_gstar: girth postcondition failed");
    if (matching_size(g) != p.beta)
        throw error("construct_gstar: matching number postcondition failed");
    return g;
}

long long eval_decomposition(const DecompositionStats& s) {
    const int g = s.girth;
    if (g < 3) throw input_error("decomposition statistics: girth < 3");
    const auto k = static_cast<size_t>(g);
    if (s.branch_orders.size() != k || s.branch_wiener.size() != k ||
        s.branch_root_transmission.size() != k)
        throw input_error("inconsistent branch statistics: expected " + std::to_string(g) +
                          " entries per field");
    long long total_order = std::accumulate(s.branch_orders.begin(), s.branch_orders.end(), 0LL);
    if (total_order != s.order)
        throw input_error("inconsistent branch statistics: branch orders sum to " +
                          std::to_string(total_order) + ", order is " + std::to_string(s.order));

    const long long f = static_cast<long long>(g) * g / 4;  // floor(g^2/4)
    long long twice_cycle_term = (2 * s.order - g) * f;     // even: f is even for odd g
    long long w = twice_cycle_term / 2;
    for (int i = 0; i < g; ++i) {
        w += (g - 1) * s.branch_root_transmission[i];
        w += s.branch_wiener[i];
    }
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j) {
            long long ni = s.branch_orders[i] - 1, nj = s.branch_orders[j] - 1;
            long long dc = std::min(j - i, g - (j - i));
            w += ni * s.branch_root_transmission[j] + nj * s.branch_root_transmission[i] +
                 ni * nj * dc;
        }
    return w;
}

long long eval_star_tree_formula(int n, int beta) {
    if (n < 1 || beta < 0 || 2 * beta > n - 1)
        throw input_error("star tree formula needs 0 <= beta <= (n-1)/2");
    long long N = n, B = beta;
    return N * N + (B - 2) * N - 3 * B + 1;
}

long long eval_gstar_formula_odd(const ExtremalParams& p) {
    if (p.g % 2 == 0) throw input_error("odd formula applied to even girth");
    validate_extremal_params(p);
    long long n = p.n, g = p.g, beta = p.beta;
    long long f = g * g / 4;
    // assemble doubled to keep the halves exact, then divide once
    long long twice = 2 * n * n + (2 * beta - (3 * g + 1) + 2 * f) * n + (2 - g) * f + 2 * g * g +
                      2 * (-2 * beta + 1) * g - 4 * beta + 2;
    if (twice % 2 != 0) throw error("odd closed form did not evaluate to an integer");
    return twice / 2;
}

long long eval_gstar_formula_even(const ExtremalParams& p) {
    if (p.g % 2 == 1) throw input_error("even formula applied to odd girth");
    validate_extremal_params(p);
    long long n = p.n, g = p.g, beta = p.beta;
    long long f = g * g / 4;
    return n * n + (beta - 3 * g / 2 - 1 + f) * n - g / 2 * f + 3 * g / 2 - 3 * beta + 2;
}

} // namespace uniw
