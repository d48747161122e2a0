#pragma once

#include <functional>
#include <string>
#include <vector>

#include "uniw/canonical.hpp"
#include "uniw/constructions.hpp"
#include "uniw/graph.hpp"

namespace uniw {

// All rooted trees of the given order, one canonical level sequence per
// isomorphism class, by successor iteration from the path.
std::vector<RootedTreeCode> gen_rooted_trees(int order);

// One representative per isomorphism class of unicyclic graphs with order n
// and girth exactly g: dihedral-minimal necklaces of rooted branch trees.
void for_each_unicyclic(int n, int g,
                        const std::function<void(const Graph&, const NecklaceCode&)>& visit);

std::vector<Graph> gen_unicyclic(int n, int g);

// Members of the canonical family U(T*_{a1,b1}, T*_{0,b2}, ..., T*_{0,bg})
// with the given order, girth and matching number, one per isomorphism class.
void enumerate_canonical_family(int n, int g, int beta,
                                const std::function<void(const Graph&)>& visit);

// Brute-force record for one (n, g, beta) class.
struct VerificationReport {
    int n = 0;
    int g = 0;
    int beta = 0;
    long long class_size = 0;
    long long min_wiener = -1;              // -1 when the class is empty
    std::vector<std::string> argmin_codes;  // sorted necklace codes
    long long wiener_gstar_direct = -1;     // -1 when G* is infeasible here
    long long formula_value = -1;
    bool gstar_is_unique_min = false;
    bool formula_matches_direct = false;
};

// Exhaustive minimum over the class, compared against the construction and
// the printed closed form.
VerificationReport min_wiener(int n, int g, int beta);

struct SweepOptions {
    int max_n = 12;
    std::vector<int> girths = {3, 4, 5};
    bool strict_hypothesis = false;  // keep only classes with 2*beta >= 3*g and n >= 2*beta
    int jobs = 1;
};

struct SweepResult {
    std::vector<VerificationReport> rows;  // sorted by (n, g, beta)
    bool all_verified = true;              // minimality + uniqueness on hypothesis classes
    std::vector<std::string> violations;
    std::vector<std::string> diagnostics;  // observations, e.g. min not monotone in beta
};

// Every (n, g, beta) class with g in girths and n <= max_n. The work is
// sharded by (n, g, branch-order composition); any job count produces the
// same rows.
SweepResult verify_sweep(const SweepOptions& opt);

bool hypothesis_holds(int n, int g, int beta);  // 2*beta >= 3*g and n >= 2*beta

} // namespace uniw
