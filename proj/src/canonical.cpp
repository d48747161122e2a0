#include "uniw/canonical.hpp"

#include <algorithm>
#include <functional>

namespace uniw {

RootedTreeCode rooted_code(const RootedTree& t) {
    if (!is_tree(t.graph)) throw class_error("rooted_code: not a tree");
    if (t.root < 0 || t.root >= t.order()) throw input_error("rooted_code: root out of range");

    std::function<std::vector<int>(int, int)> canon = [&](int v, int parent) {
        std::vector<std::vector<int>> kids;
        for (int w : t.graph.neighbors(v))
            if (w != parent) kids.push_back(canon(w, v));
        std::sort(kids.begin(), kids.end(), std::greater<>());
        std::vector<int> out{0};
        for (const auto& k : kids)
            for (int d : k) out.push_back(d + 1);
        return out;
    };
    return RootedTreeCode{canon(t.root, -1)};
}

RootedTree decode_rooted(const RootedTreeCode& code) {
    const int n = code.order();
    if (n < 1 || code.levels[0] != 0) throw input_error("decode_rooted: malformed level sequence");
    std::vector<int> last_at_depth(n, -1);
    last_at_depth[0] = 0;
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        int d = code.levels[i];
        if (d < 1 || last_at_depth[d - 1] < 0)
            throw input_error("decode_rooted: malformed level sequence");
        edges.emplace_back(last_at_depth[d - 1], i);
        last_at_depth[d] = i;
    }
    return RootedTree{Graph::from_edges(n, edges), 0};
}

std::vector<RootedTreeCode> dihedral_minimum(const std::vector<RootedTreeCode>& seq) {
    const int g = static_cast<int>(seq.size());
    std::vector<RootedTreeCode> best = seq;
    std::vector<RootedTreeCode> image(g);
    auto consider = [&](const std::vector<RootedTreeCode>& base) {
        for (int r = 0; r < g; ++r) {
            for (int i = 0; i < g; ++i) image[i] = base[(i + r) % g];
            if (image < best) best = image;
        }
    };
    consider(seq);
    std::vector<RootedTreeCode> rev(seq.rbegin(), seq.rend());
    consider(rev);
    return best;
}

bool is_dihedral_minimal(const std::vector<RootedTreeCode>& seq) {
    return seq == dihedral_minimum(seq);
}

NecklaceCode necklace_code(const Graph& g) {
    auto d = decompose_unicyclic(g);
    std::vector<RootedTreeCode> codes;
    codes.reserve(d.girth());
    for (int i = 0; i < d.girth(); ++i) codes.push_back(rooted_code(branch_tree(g, d, i)));
    return NecklaceCode{d.girth(), dihedral_minimum(codes)};
}

std::string NecklaceCode::to_string() const {
    std::string s = std::to_string(girth) + ":";
    for (int i = 0; i < static_cast<int>(branches.size()); ++i) {
        if (i) s += '|';
        for (int k = 0; k < branches[i].order(); ++k) {
            if (k) s += '.';
            s += std::to_string(branches[i].levels[k]);
        }
    }
    return s;
}

bool unicyclic_isomorphic(const Graph& a, const Graph& b) {
    return necklace_code(a) == necklace_code(b);
}

} // namespace uniw
