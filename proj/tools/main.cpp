// uniw: distance invariants of unicyclic graphs, extremal constructions,
// Wiener-reducing transformations, and exhaustive verification of the extremal bound.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "uniw/canonical.hpp"
#include "uniw/constructions.hpp"
#include "uniw/decompose.hpp"
#include "uniw/edgelist.hpp"
#include "uniw/enumeration.hpp"
#include "uniw/graph.hpp"
#include "uniw/graph6.hpp"
#include "uniw/matching.hpp"
#include "uniw/report.hpp"
#include "uniw/transforms.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;
constexpr int exit_bad_input = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw uniw::input_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

uniw::Graph read_graph(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    if (format == "edgelist") return uniw::parse_edgelist(text);
    return uniw::parse_graph6(strip(text));
}

std::string emit_graph(const uniw::Graph& g, const std::string& format) {
    if (format == "edgelist") return uniw::emit_edgelist(g);
    return uniw::emit_graph6(g) + "\n";
}

int cmd_compute(const std::string& path, const std::string& format) {
    uniw::Graph g = read_graph(path, format);
    nlohmann::json out;
    out["vertices"] = g.vertex_count();
    out["edges"] = g.edge_count();
    out["wiener_index"] = uniw::wiener_index(g);
    auto gr = uniw::girth(g);
    out["girth"] = gr ? nlohmann::json(*gr) : nlohmann::json(nullptr);
    try {
        out["matching_number"] = uniw::matching_size(g);
    } catch (const uniw::class_error&) {
        out["matching_number"] = nullptr;
    }
    out["unicyclic"] = uniw::is_unicyclic(g);
    if (uniw::is_unicyclic(g)) {
        auto d = uniw::decompose_unicyclic(g);
        auto stats = uniw::decomposition_stats(g, d);
        out["decomposition"] = {{"cycle", d.cycle},
                                {"branch_orders", stats.branch_orders},
                                {"branch_wiener", stats.branch_wiener},
                                {"branch_root_transmission", stats.branch_root_transmission},
                                {"decomposition_wiener", uniw::eval_decomposition(stats)}};
    }
    std::cout << out.dump(2) << "\n";
    return exit_ok;
}

int cmd_construct(const std::vector<int>& star, const std::vector<int>& gstar,
                  const std::string& format) {
    if (star.empty() == gstar.empty())
        throw CLI::ValidationError("construct", "need exactly one of --star or --gstar");
    uniw::Graph g;
    if (!star.empty()) {
        g = uniw::build_star_like({star[0], star[1]}).graph;
    } else {
        g = uniw::construct_gstar({gstar[0], gstar[1], gstar[2]});
    }
    std::cout << emit_graph(g, format);
    return exit_ok;
}

int cmd_formula(const std::vector<int>& star_tree, const std::vector<int>& odd,
                const std::vector<int>& even) {
    int given = (!star_tree.empty()) + (!odd.empty()) + (!even.empty());
    if (given != 1)
        throw CLI::ValidationError("formula",
                                   "need exactly one of --star-tree, --gstar-odd, --gstar-even");
    nlohmann::json out;
    if (!star_tree.empty()) {
        int n = star_tree[0], beta = star_tree[1];
        out["formula_value"] = uniw::eval_star_tree_formula(n, beta);
        auto t = uniw::build_star_like({beta, n - 2 * beta - 1});
        out["wiener_direct"] = uniw::wiener_index(t.graph);
    } else {
        uniw::ExtremalParams p = !odd.empty() ? uniw::ExtremalParams{odd[0], odd[1], odd[2]}
                                              : uniw::ExtremalParams{even[0], even[1], even[2]};
        out["formula_value"] =
            !odd.empty() ? uniw::eval_gstar_formula_odd(p) : uniw::eval_gstar_formula_even(p);
        out["wiener_direct"] = uniw::wiener_index(uniw::construct_gstar(p));
    }
    out["matches"] = out["formula_value"] == out["wiener_direct"];
    std::cout << out.dump(2) << "\n";
    return exit_ok;
}

int cmd_reduce(const std::string& path, const std::string& format) {
    uniw::Graph g = read_graph(path, format);
    auto trace = uniw::reduce_to_canonical(g);
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : trace.steps) {
        steps.push_back({{"rule", s.rule},
                         {"wiener_before", s.wiener_before},
                         {"wiener_after", s.wiener_after},
                         {"beta_before", s.beta_before},
                         {"beta_after", s.beta_after},
                         {"strict", s.strict},
                         {"graph6", uniw::emit_graph6(s.result)}});
    }
    nlohmann::json out{{"steps", steps},
                       {"final",
                        {{"graph6", uniw::emit_graph6(trace.final_graph)},
                         {"a1", trace.final_params.big.a},
                         {"b1", trace.final_params.big.b},
                         {"pendant_flags", trace.final_params.pendant_flags},
                         {"wiener_index", uniw::wiener_index(trace.final_graph)},
                         {"matching_number", uniw::matching_size(trace.final_graph)}}}};
    std::cout << out.dump(2) << "\n";
    return exit_ok;
}

int cmd_enumerate(int n, int g, int cap) {
    if (n > cap)
        throw CLI::ValidationError("enumerate", "--n exceeds the cap of " + std::to_string(cap) +
                                                    " (raise with --cap)");
    auto emit = [](const uniw::Graph& gr, const uniw::NecklaceCode&) {
        std::cout << uniw::emit_graph6(gr) << "\n";
    };
    if (g > 0) {
        uniw::for_each_unicyclic(n, g, emit);
    } else {
        for (int k = 3; k <= n; ++k) uniw::for_each_unicyclic(n, k, emit);
    }
    return exit_ok;
}

int cmd_verify(const uniw::SweepOptions& opt, const std::string& out_format, int cap) {
    if (opt.max_n > cap)
        throw CLI::ValidationError("verify", "--max-n exceeds the cap of " + std::to_string(cap) +
                                                 " (raise with --cap)");
    auto result = uniw::verify_sweep(opt);
    auto doc = uniw::make_report(opt, result);
    std::cout << (out_format == "json" ? uniw::emit_json(doc) : uniw::emit_csv(doc));
    for (const auto& d : result.diagnostics) std::cerr << "note: " << d << "\n";
    for (const auto& v : result.violations) std::cerr << "violation: " << v << "\n";
    std::cerr << (result.all_verified ? "verified" : "FAILED") << ": " << doc.rows.size()
              << " classes, max_n=" << opt.max_n << "\n";
    return result.all_verified ? exit_ok : exit_violation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wiener index toolkit for unicyclic graphs"};
    app.require_subcommand(1);

    std::string in_path = "-";
    std::string in_format = "graph6";
    std::string out_format_graph = "graph6";

    auto* compute = app.add_subcommand("compute", "invariants of one graph as JSON");
    compute->add_option("input", in_path, "input file, or - for stdin");
    compute->add_option("--format", in_format, "graph6|edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    std::vector<int> star, gstar;
    auto* construct = app.add_subcommand("construct", "build a named graph");
    construct->add_option("--star", star, "a,b for the star-like tree T*_{a,b}")
        ->delimiter(',')
        ->expected(2);
    construct->add_option("--gstar", gstar, "n,g,beta for the extremal graph")
        ->delimiter(',')
        ->expected(3);
    construct->add_option("--format", out_format_graph, "graph6|edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    std::vector<int> star_tree, odd, even;
    auto* formula = app.add_subcommand("formula", "evaluate a closed form and compare");
    formula->add_option("--star-tree", star_tree, "n,beta")->delimiter(',')->expected(2);
    formula->add_option("--gstar-odd", odd, "n,g,beta")->delimiter(',')->expected(3);
    formula->add_option("--gstar-even", even, "n,g,beta")->delimiter(',')->expected(3);

    auto* reduce = app.add_subcommand("reduce", "canonical-family reduction trace as JSON");
    reduce->add_option("input", in_path, "input file, or - for stdin");
    reduce->add_option("--format", in_format, "graph6|edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    int enum_n = 0, enum_g = 0, cap = 14;
    auto* enumerate = app.add_subcommand("enumerate", "stream unicyclic graphs as graph6");
    enumerate->add_option("--n", enum_n, "order")->required();
    enumerate->add_option("--g", enum_g, "girth (default: all)");
    enumerate->add_option("--cap", cap, "enumeration size cap");

    uniw::SweepOptions opt;
    std::string out_format = "csv";
    auto* verify = app.add_subcommand("verify", "brute-force check of the extremal lower bound");
    verify->add_option("--max-n", opt.max_n, "largest order to enumerate");
    verify->add_option("--girths", opt.girths, "comma-separated girths")->delimiter(',');
    verify->add_option("--jobs", opt.jobs, "worker threads");
    verify->add_option("--out", out_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    verify->add_flag("--strict-hypothesis", opt.strict_hypothesis,
                     "report only classes with 2*beta >= 3*g and n >= 2*beta");
    verify->add_option("--cap", cap, "enumeration size cap");

    try {
        app.parse(argc, argv);
        if (*compute) return cmd_compute(in_path, in_format);
        if (*construct) return cmd_construct(star, gstar, out_format_graph);
        if (*formula) return cmd_formula(star_tree, odd, even);
        if (*reduce) return cmd_reduce(in_path, in_format);
        if (*enumerate) return cmd_enumerate(enum_n, enum_g, cap);
        if (*verify) return cmd_verify(opt, out_format, cap);
        return exit_usage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const uniw::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const uniw::input_error& e) {
        // bad parameter values on the command line
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const uniw::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_bad_input;
    }
}
