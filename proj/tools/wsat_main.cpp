// wsat: weak saturation numbers for small patterns - exact solver,
// bootstrap percolation engine, closed-form bounds, constructions with
// machine-checkable certificates, and reproduction experiments.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wsat/wsat.hpp"

namespace {

struct Output {
    std::string path;  // empty: stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << "\n";
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + path);
        f << text;
    }
};

std::string graph_payload(const wsat::Graph& g, const std::string& format) {
    if (format == "g6") return wsat::to_graph6(g);
    if (format == "dot") return wsat::to_dot(g);
    wsat::ordered_json j;
    j["n"] = g.order();
    j["edges"] = g.edge_count();
    j["graph6"] = wsat::to_graph6(g);
    return j.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weak saturation toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    int threads = 0;
    std::string format = "json";
    std::string out_path;
    uint64_t seed = 0;
    app.add_option("--threads", threads, "worker budget (default: WSAT_THREADS or hardware)");
    app.add_option("--format", format, "output format: json|csv|g6|dot|text")
        ->check(CLI::IsMember({"json", "csv", "g6", "dot", "text"}));
    app.add_option("--out", out_path, "write output to this file instead of stdout");
    app.add_option("--seed", seed, "seed for randomized edge orders");

    std::string pattern_spec, graph_spec, order = "lex";
    int n_arg = -1, window = 2, max_n = -1, big_n = 1;
    long long max_edges = -1;
    std::string rule, claim, params_text, cert_path, h_list;
    int u_arg = -1, w_arg = -1;
    int trees_n = -1, cores_m = -1;
    bool expect_complete = false;

    auto* closure_cmd = app.add_subcommand("closure", "percolation closure with certificate");
    closure_cmd->add_option("--graph", graph_spec, "host graph spec")->required();
    closure_cmd->add_option("--pattern", pattern_spec, "pattern spec")->required();
    closure_cmd->add_option("--order", order, "edge priority: lex|shuffle")
        ->check(CLI::IsMember({"lex", "shuffle"}));

    auto* sat_cmd = app.add_subcommand("saturated", "is the graph weakly pattern-saturated");
    sat_cmd->add_option("--graph", graph_spec, "host graph spec")->required();
    sat_cmd->add_option("--pattern", pattern_spec, "pattern spec")->required();

    auto* exact_cmd = app.add_subcommand("exact", "exact w-sat(n, F) by exhaustive core search");
    exact_cmd->add_option("--pattern", pattern_spec, "pattern spec")->required();
    exact_cmd->add_option("--n", n_arg, "host size")->required();
    exact_cmd->add_option("--max-edges", max_edges, "edge budget override");

    auto* limit_cmd = app.add_subcommand("limit", "limit of w-sat(n, T) for a tree");
    limit_cmd->add_option("--pattern", pattern_spec, "tree pattern spec")->required();
    limit_cmd->add_option("--window", window, "stabilization window (default 2)");
    limit_cmd->add_option("--max-n", max_n, "n budget");
    limit_cmd->add_option("--max-edges", max_edges, "edge budget override");

    auto* formulas_cmd = app.add_subcommand("formulas", "closed-form bounds and exact values");
    formulas_cmd->add_option("--pattern", pattern_spec, "pattern spec")->required();
    formulas_cmd->add_option("--n", n_arg, "evaluate the complete-pattern formula at n");

    auto* construct_cmd = app.add_subcommand("construct", "emit a certificate construction");
    construct_cmd
        ->add_option("--rule", rule,
                     "caterpillar|adjacent-pair|local|min-degree|high-degree|counterexample")
        ->required();
    construct_cmd->add_option("--pattern", pattern_spec, "pattern/tree spec");
    construct_cmd->add_option("--graph", graph_spec, "host graph (min-degree rule)");
    construct_cmd->add_option("--n", n_arg, "host size");
    construct_cmd->add_option("--u", u_arg, "first designated vertex (adjacent-pair)");
    construct_cmd->add_option("--w", w_arg, "second designated vertex (adjacent-pair)");
    construct_cmd->add_option("--N", big_n, "branching parameter (high-degree)");
    construct_cmd->add_option("--h-vertices", h_list, "comma list of H vertices (min-degree)");

    auto* classify_cmd = app.add_subcommand("classify", "good / not-good / unknown for a tree");
    classify_cmd->add_option("--pattern", pattern_spec, "tree spec")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "trees or cores up to isomorphism");
    enum_cmd->add_option("--trees", trees_n, "trees on n vertices");
    enum_cmd->add_option("--cores", cores_m, "graphs with m edges, no isolated vertices");

    auto* repro_cmd = app.add_subcommand("reproduce", "run a reproduction experiment");
    repro_cmd->add_option("--claim", claim, "claim id")->required();
    repro_cmd->add_option("--params", params_text, "key=value,key=value");

    auto* verify_cmd = app.add_subcommand("verify", "replay a certificate");
    verify_cmd->add_option("--certificate", cert_path, "certificate JSON file")->required();
    verify_cmd->add_flag("--expect-complete", expect_complete, "require the final graph complete");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (threads > 0) wsat::set_worker_budget(threads);
    Output out{out_path};

    try {
        if (closure_cmd->parsed()) {
            wsat::Graph g = wsat::parse_graph_spec(graph_spec);
            wsat::Pattern F(wsat::parse_graph_spec(pattern_spec));
            wsat::ClosureResult res = order == "shuffle" ? wsat::closure_shuffled(g, F, seed)
                                                         : wsat::closure(g, F);
            if (format == "g6" || format == "dot") {
                out.write(graph_payload(res.graph, format));
            } else if (format == "text") {
                out.write("closure: " + std::to_string(res.graph.edge_count()) + " edges, " +
                          std::to_string(res.certificate.steps.size()) + " steps, complete=" +
                          (res.graph.is_complete() ? "yes" : "no") + "\n");
            } else {
                wsat::ordered_json j;
                j["final"] = wsat::to_graph6(res.graph);
                j["complete"] = res.graph.is_complete();
                j["certificate"] = wsat::cert_to_json(res.certificate);
                out.write(j.dump(2));
            }
            return 0;
        }
        if (sat_cmd->parsed()) {
            wsat::Graph g = wsat::parse_graph_spec(graph_spec);
            wsat::Pattern F(wsat::parse_graph_spec(pattern_spec));
            bool sat = wsat::is_weakly_saturated(g, F);
            if (format == "text") {
                out.write(sat ? "saturated\n" : "not saturated\n");
            } else {
                wsat::ordered_json j;
                j["saturated"] = sat;
                out.write(j.dump(2));
            }
            return 0;
        }
        if (exact_cmd->parsed()) {
            wsat::Pattern F(wsat::parse_graph_spec(pattern_spec));
            std::optional<long long> cap;
            if (max_edges >= 0) cap = max_edges;
            wsat::ExactOutcome o = wsat::wsat_exact(n_arg, F, cap);
            if (format == "text") {
                std::string line = o.found
                                       ? "w-sat(" + std::to_string(n_arg) + ") = " +
                                             std::to_string(o.value) + "  witness " +
                                             wsat::to_graph6(o.witness)
                                       : "w-sat(" + std::to_string(n_arg) + ") >= " +
                                             std::to_string(o.certified_lower);
                out.write(line + "\n");
            } else {
                out.write(wsat::exact_to_json(o, F).dump(2));
            }
            return 0;
        }
        if (limit_cmd->parsed()) {
            wsat::Pattern F(wsat::parse_graph_spec(pattern_spec));
            std::optional<long long> cap;
            if (max_edges >= 0) cap = max_edges;
            wsat::LimitEstimate est = wsat::wsat_limit_estimate(F, window, max_n, cap);
            if (format == "csv") {
                std::vector<std::vector<std::string>> rows;
                for (auto& [n, v] : est.history)
                    rows.push_back({std::to_string(n), v ? std::to_string(*v) : ""});
                out.write(wsat::values_to_csv({"n", "value"}, rows));
            } else {
                out.write(wsat::limit_to_json(est).dump(2));
            }
            return 0;
        }
        if (formulas_cmd->parsed()) {
            wsat::Pattern F(wsat::parse_graph_spec(pattern_spec));
            wsat::WsatRecord rec = wsat::wsat_formulas(F);
            wsat::ordered_json j = wsat::record_to_json(rec);
            if (rec.clique_k && n_arg >= *rec.clique_k)
                j["clique_value_at_n"] = wsat::wsat_clique(n_arg, *rec.clique_k);
            out.write(j.dump(2));
            return 0;
        }
        if (construct_cmd->parsed()) {
            if (rule == "counterexample") {
                out.write(graph_payload(wsat::counterexample_tree(),
                                        format == "json" ? "json" : format));
                return 0;
            }
            if (rule == "high-degree") {
                wsat::HighDegreeTree h = wsat::high_degree_good_tree(big_n);
                if (format == "g6" || format == "dot") {
                    out.write(graph_payload(h.tree, format));
                } else {
                    wsat::ordered_json j;
                    j["tree"] = wsat::to_graph6(h.tree);
                    j["n"] = h.tree.order();
                    j["u"] = h.u;
                    j["w"] = h.w;
                    out.write(j.dump(2));
                }
                return 0;
            }
            if (rule == "min-degree") {
                wsat::Graph g = wsat::parse_graph_spec(graph_spec);
                wsat::Pattern F(wsat::parse_graph_spec(pattern_spec));
                std::vector<int> H;
                for (const auto& tok : wsat::detail::split(h_list, ','))
                    H.push_back(wsat::detail::parse_int(tok, "H vertex"));
                wsat::Certificate cert = wsat::min_degree_completion(g, H, F);
                out.write(wsat::cert_to_json(cert).dump(2));
                return 0;
            }
            if (n_arg < 0) throw CLI::ValidationError("--n is required for rule " + rule);
            if (rule == "caterpillar") {
                auto spec = wsat::CaterpillarSpec::recognize(wsat::parse_graph_spec(pattern_spec));
                if (!spec) throw std::invalid_argument("pattern is not a caterpillar");
                out.write(wsat::construction_to_json(wsat::caterpillar_saturator(*spec, n_arg))
                              .dump(2));
                return 0;
            }
            if (rule == "adjacent-pair") {
                wsat::Pattern F(wsat::parse_graph_spec(pattern_spec));
                if (u_arg < 0 || w_arg < 0)
                    throw CLI::ValidationError("--u and --w are required for adjacent-pair");
                out.write(
                    wsat::construction_to_json(wsat::endd_mind_saturator(F, u_arg, w_arg, n_arg))
                        .dump(2));
                return 0;
            }
            if (rule == "local") {
                out.write(wsat::construction_to_json(
                              wsat::local_structure_saturator(
                                  wsat::parse_graph_spec(pattern_spec), n_arg))
                              .dump(2));
                return 0;
            }
            throw CLI::ValidationError("unknown construction rule " + rule);
        }
        if (classify_cmd->parsed()) {
            wsat::Verdict v = wsat::classify_good(wsat::parse_graph_spec(pattern_spec));
            out.write(wsat::verdict_to_json(v).dump(2));
            return 0;
        }
        if (enum_cmd->parsed()) {
            if ((trees_n < 0) == (cores_m < 0))
                throw CLI::ValidationError("enumerate needs exactly one of --trees/--cores");
            std::vector<wsat::Graph> items =
                trees_n >= 0 ? wsat::enumerate_trees(trees_n) : wsat::enumerate_cores(cores_m);
            if (format == "json") {
                wsat::ordered_json j = wsat::ordered_json::array();
                for (const auto& g : items) j.push_back(wsat::to_graph6(g));
                out.write(j.dump(2));
            } else {
                std::string text;
                for (const auto& g : items) text += wsat::to_graph6(g) + "\n";
                out.write(text);
            }
            return 0;
        }
        if (repro_cmd->parsed()) {
            wsat::Report rep =
                wsat::reproduce(claim, wsat::ReproduceParams::parse(params_text));
            if (format == "csv")
                out.write(wsat::report_to_csv(rep));
            else if (format == "text") {
                std::string text = "claim " + rep.claim + (rep.ok ? ": ok\n" : ": DISAGREEMENT\n");
                for (const auto& r : rep.rows)
                    text += "  " + r.instance + ": predicted " + r.predicted + ", computed " +
                            r.computed + (r.agree ? "" : "  <-- disagree") + "\n";
                out.write(text);
            } else {
                out.write(wsat::report_to_json(rep).dump(2));
            }
            return rep.ok ? 0 : 1;
        }
        if (verify_cmd->parsed()) {
            std::ifstream f(cert_path);
            if (!f) throw std::runtime_error("cannot open " + cert_path);
            wsat::ordered_json j = wsat::ordered_json::parse(f);
            wsat::Certificate cert = wsat::cert_from_json(
                j.contains("certificate") ? j["certificate"] : j);
            wsat::VerifyResult res = wsat::verify_certificate(cert, expect_complete);
            out.write(wsat::verify_to_json(res).dump(2));
            return res.ok ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
