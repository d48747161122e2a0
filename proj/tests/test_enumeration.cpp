#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "uniw/canonical.hpp"
#include "uniw/enumeration.hpp"
#include "uniw/matching.hpp"
#include "uniw/report.hpp"

using namespace uniw;

TEST_CASE("rooted tree generation counts match the reference sequence") {
    const std::vector<long long> expected{1, 1, 2, 4, 9, 20, 48, 115, 286};
    for (int order = 1; order <= 9; ++order)
        CHECK(static_cast<long long>(gen_rooted_trees(order).size()) == expected[order - 1]);

    auto recurrence = oracle::rooted_tree_counts(12);
    for (int order = 1; order <= 12; ++order)
        CHECK(static_cast<long long>(gen_rooted_trees(order).size()) == recurrence[order]);

    CHECK_THROWS_AS(gen_rooted_trees(0), input_error);
}

TEST_CASE("rooted codes decode to trees that re-encode identically") {
    for (int order = 1; order <= 8; ++order) {
        std::set<RootedTreeCode> seen;
        for (const auto& code : gen_rooted_trees(order)) {
            auto t = decode_rooted(code);
            CHECK(is_tree(t.graph));
            CHECK(t.order() == order);
            CHECK(rooted_code(t) == code);
            CHECK(seen.insert(code).second);  // generator never repeats a class
        }
    }
}

TEST_CASE("unicyclic generation on known classes") {
    CHECK(gen_unicyclic(5, 5).size() == 1);
    CHECK(unicyclic_isomorphic(gen_unicyclic(5, 5)[0], oracle::cycle_graph(5)));

    int total5 = 0;
    for (int g = 3; g <= 5; ++g) total5 += static_cast<int>(gen_unicyclic(5, g).size());
    CHECK(total5 == 5);

    CHECK_THROWS_AS(gen_unicyclic(5, 2), input_error);
    CHECK_THROWS_AS(gen_unicyclic(4, 5), input_error);
}

TEST_CASE("per-order unicyclic class totals") {
    const std::vector<long long> expected{1, 2, 5, 13, 33, 89, 240, 657};
    for (int n = 3; n <= 10; ++n) {
        long long total = 0;
        for (int g = 3; g <= n; ++g)
            for_each_unicyclic(n, g, [&](const Graph&, const NecklaceCode&) { ++total; });
        CHECK(total == expected[n - 3]);
    }
}

TEST_CASE("emitted graphs match their codes, orders and girths") {
    for (int n = 3; n <= 9; ++n)
        for (int g = 3; g <= n; ++g) {
            std::set<std::string> codes;
            for_each_unicyclic(n, g, [&](const Graph& gr, const NecklaceCode& code) {
                CHECK(gr.vertex_count() == n);
                CHECK(girth(gr) == g);
                CHECK(necklace_code(gr) == code);
                CHECK(codes.insert(code.to_string()).second);
            });
        }
}

TEST_CASE("labeled tree plus edge oracle agrees with the generator") {
    for (int n = 3; n <= 7; ++n) {
        long long total = 0;
        for (int g = 3; g <= n; ++g) total += static_cast<long long>(gen_unicyclic(n, g).size());
        CHECK(oracle::labeled_unicyclic_count(n) == total);
    }
}

TEST_CASE("canonical family enumeration") {
    // within the restricted family the minimum is attained once, by G*
    auto family_min = [](int n, int g, int beta) {
        Graph gstar = construct_gstar({n, g, beta});
        long long best = -1, hits = 0;
        bool best_is_gstar = false;
        enumerate_canonical_family(n, g, beta, [&](const Graph& gr) {
            long long w = wiener_index(gr);
            if (best < 0 || w < best) {
                best = w;
                hits = 1;
                best_is_gstar = unicyclic_isomorphic(gr, gstar);
            } else if (w == best) {
                ++hits;
            }
        });
        CHECK(hits == 1);
        CHECK(best_is_gstar);
        return best;
    };
    CHECK(family_min(10, 3, 5) == 101);
    CHECK(family_min(12, 4, 6) == 162);
    CHECK(family_min(13, 3, 5) == wiener_index(construct_gstar({13, 3, 5})));
    CHECK(family_min(14, 4, 7) == 231);

    int members = 0;
    enumerate_canonical_family(7, 3, 10, [&](const Graph&) { ++members; });
    CHECK(members == 0);
}

TEST_CASE("class minimum reports") {
    auto r = min_wiener(10, 3, 5);
    CHECK(r.min_wiener == 101);
    CHECK(r.wiener_gstar_direct == 101);
    CHECK(r.formula_value == 92);
    CHECK_FALSE(r.formula_matches_direct);
    CHECK(r.gstar_is_unique_min);
    CHECK(r.argmin_codes.size() == 1);
    CHECK(r.class_size > 0);

    auto r2 = min_wiener(12, 4, 6);
    CHECK(r2.min_wiener == 162);
    CHECK(r2.formula_value == 162);
    CHECK(r2.formula_matches_direct);
    CHECK(r2.gstar_is_unique_min);

    auto r3 = min_wiener(4, 3, 1);
    CHECK(r3.class_size == 0);
    CHECK(r3.min_wiener == -1);
    CHECK(r3.wiener_gstar_direct == -1);  // hypothesis fails, no G* here
}

TEST_CASE("verification sweep over a small box") {
    SweepOptions opt;
    opt.max_n = 10;
    opt.girths = {3, 4};
    auto result = verify_sweep(opt);
    CHECK(result.all_verified);
    CHECK(result.violations.empty());

    // rows sorted by (n, g, beta), and the one hypothesis class is flagged
    bool found_hypothesis_row = false;
    for (size_t i = 1; i < result.rows.size(); ++i) {
        const auto &a = result.rows[i - 1], &b = result.rows[i];
        CHECK(std::tuple(a.n, a.g, a.beta) < std::tuple(b.n, b.g, b.beta));
    }
    for (const auto& r : result.rows) {
        if (r.n == 10 && r.g == 3 && r.beta == 5) {
            found_hypothesis_row = true;
            CHECK(r.min_wiener == 101);
            CHECK(r.gstar_is_unique_min);
        }
        if (hypothesis_holds(r.n, r.g, r.beta)) CHECK(r.class_size >= 1);
    }
    CHECK(found_hypothesis_row);

    SweepOptions strict = opt;
    strict.strict_hypothesis = true;
    auto only_hyp = verify_sweep(strict);
    CHECK(only_hyp.rows.size() == 1);
    CHECK(only_hyp.rows[0].n == 10);
}

TEST_CASE("sweep rows do not depend on the worker count") {
    SweepOptions serial;
    serial.max_n = 10;
    serial.girths = {3, 4, 5};
    SweepOptions parallel = serial;
    parallel.jobs = 4;
    auto a = verify_sweep(serial), b = verify_sweep(parallel);
    CHECK(emit_csv(make_report(serial, a)) == emit_csv(make_report(parallel, b)));
    CHECK(emit_json(make_report(serial, a)) == emit_json(make_report(parallel, b)));
}

TEST_CASE("hypothesis predicate") {
    CHECK(hypothesis_holds(10, 3, 5));
    CHECK_FALSE(hypothesis_holds(10, 3, 4));  // 2*4 < 9
    CHECK_FALSE(hypothesis_holds(9, 3, 5));   // n < 2*beta
    CHECK(hypothesis_holds(12, 4, 6));
}
