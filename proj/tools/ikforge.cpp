// Command-line front end: verification pipeline, enumeration, family
// closures, single reductions, and the built-in graph catalog.
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "ik/canonical.hpp"
#include "ik/catalog.hpp"
#include "ik/enumerate.hpp"
#include "ik/io.hpp"
#include "ik/moves.hpp"
#include "ik/pipeline.hpp"
#include "ik/planarity.hpp"
#include "ik/reduction.hpp"

using nlohmann::json;

namespace {

int env_threads() {
    const char* s = std::getenv("IKFORGE_THREADS");
    if (!s) return 0;
    int v = std::atoi(s);
    return v > 0 ? v : 0;
}

// Accepts "[3,1,1],[2,3,0]" (also with 'x' between parts). A k-entry list
// gives the counts for degrees 2+k down to 3, matching the printed form.
ik::ProfilePair parse_profile(const std::string& text) {
    std::vector<std::vector<int>> groups;
    size_t pos = 0;
    while ((pos = text.find('[', pos)) != std::string::npos) {
        size_t end = text.find(']', pos);
        if (end == std::string::npos) throw CLI::ValidationError("--profile", "unbalanced '['");
        std::vector<int> nums;
        std::stringstream ss(text.substr(pos + 1, end - pos - 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) nums.push_back(std::stoi(tok));
        groups.push_back(nums);
        pos = end + 1;
    }
    if (groups.size() != 2)
        throw CLI::ValidationError("--profile", "expected two bracketed parts, e.g. [3,1,1],[3,1,1]");
    auto to_prof = [](const std::vector<int>& nums) {
        if (nums.empty() || nums.size() > 5)
            throw CLI::ValidationError("--profile", "each part needs 1..5 counts (degrees up to 7)");
        ik::DegreeProfile p;
        int top = 2 + static_cast<int>(nums.size());
        for (size_t i = 0; i < nums.size(); ++i) p.count[top - static_cast<int>(i)] = nums[i];
        return p;
    };
    return {to_prof(groups[0]), to_prof(groups[1])};
}

ik::MultiGraph seed_graph(const std::string& spec) {
    for (const auto& name : ik::catalog_names())
        if (name == spec) return ik::named(spec).graph;
    return ik::graph6_decode(spec);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bipartite intrinsic-knotting verification pipeline"};
    app.require_subcommand(1);
    app.fallthrough();  // let the global flags appear after the subcommand

    std::string out_dir, format = "json";
    int threads = env_threads();
    std::uint64_t budget = 50'000'000;
    app.add_option("--out", out_dir, "directory for reports and certificates");
    app.add_option("--threads", threads, "worker threads (0 = library default)");
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--budget", budget, "minor-search expansion cap");

    auto* verify = app.add_subcommand("verify", "run verification checks");
    std::string which = "all";
    verify->add_option("check", which, "which checks to run")
        ->check(CLI::IsMember({"all", "main3", "deg6", "families", "lemmas", "minimality"}));

    auto* enumerate = app.add_subcommand("enumerate", "list candidates for a profile pair");
    std::string profile_text;
    enumerate->add_option("--profile", profile_text, "e.g. [3,1,1],[3,1,1]")->required();

    auto* closure = app.add_subcommand("closure", "family closure of a seed graph");
    std::string seed_text;
    closure->add_option("--seed", seed_text, "catalog name or graph6")->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "reduce at a vertex pair");
    std::string graph_text, pair_text;
    reduce_cmd->add_option("--graph", graph_text, "host graph, graph6")->required();
    reduce_cmd->add_option("--pair", pair_text, "vertex pair i,j")->required();

    auto* catalog = app.add_subcommand("catalog", "show a catalog graph");
    std::string catalog_name;
    catalog->add_option("name", catalog_name, "catalog entry")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            ik::PipelineOptions opts;
            opts.threads = threads;
            opts.minor_budget = budget;
            opts.out_dir = out_dir;
            ik::VerificationReport report = ik::run_checks({which}, opts);
            if (format == "json")
                std::cout << report.to_json().dump(2) << "\n";
            else
                std::cout << report.to_text();
            return report.all_passed() ? 0 : 1;
        }
        if (*enumerate) {
            ik::ProfilePair pair = parse_profile(profile_text);
            std::vector<ik::BipartiteGraph> list = ik::generate_list(pair);
            if (format == "json") {
                json out{{"schema", 1}, {"profile", pair.to_string()}, {"count", list.size()}};
                out["graphs"] = json::array();
                for (const auto& g : list) out["graphs"].push_back(ik::graph6_encode(g.graph()));
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& g : list) std::cout << ik::graph6_encode(g.graph()) << "\n";
            }
            return 0;
        }
        if (*closure) {
            ik::FamilyClosure fc = ik::family_closure(seed_graph(seed_text));
            if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                ik::store_closure(std::filesystem::path(out_dir) / "closure.jsonl", fc);
            }
            if (format == "json") {
                json out{{"schema", 1}, {"seed", fc.seed.hex()}, {"members", fc.members.size()},
                         {"simplification_seen", fc.simplification_seen}};
                out["graphs"] = json::array();
                for (const auto& [canon, g] : fc.members)
                    out["graphs"].push_back(json::parse(ik::graph_to_json(g)));
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "members: " << fc.members.size() << "\n";
            }
            return 0;
        }
        if (*reduce_cmd) {
            auto comma = pair_text.find(',');
            if (comma == std::string::npos) {
                std::cerr << "--pair wants i,j\n";
                return 2;
            }
            int a = std::stoi(pair_text.substr(0, comma));
            int b = std::stoi(pair_text.substr(comma + 1));
            ik::MultiGraph g = ik::graph6_decode(graph_text);
            ik::ObstructionOutcome outcome = ik::obstruction_check(g, a, b);
            const ik::ReductionResult& red = outcome.reduction;
            json out{{"schema", 1},
                     {"pair", {a, b}},
                     {"edge_count", red.edge_count},
                     {"order", red.reduced.order()},
                     {"trace_digest", red.trace_digest()},
                     {"planar", ik::is_planar(red.reduced)},
                     {"eliminates", outcome.verdict == ik::Verdict::Eliminates},
                     {"reduced", json::parse(ik::graph_to_json(red.reduced))}};
            if (format == "json")
                std::cout << out.dump(2) << "\n";
            else
                std::cout << "edge_count " << red.edge_count << (out["eliminates"].get<bool>() ? " eliminates" : "") << "\n";
            return 0;
        }
        if (*catalog) {
            ik::CatalogEntry entry = ik::named(catalog_name);
            json out{{"schema", 1},
                     {"name", entry.name},
                     {"order", entry.graph.order()},
                     {"edges", entry.graph.edge_count()},
                     {"canonical", ik::canonical_form(entry.graph).hex()}};
            if (entry.graph.is_simple()) out["graph6"] = ik::graph6_encode(entry.graph);
            if (format == "json")
                std::cout << out.dump(2) << "\n";
            else
                std::cout << entry.name << " " << entry.graph.order() << "v "
                          << entry.graph.edge_count() << "e\n";
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ik::GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
