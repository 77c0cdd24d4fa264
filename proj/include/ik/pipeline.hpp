#ifndef IK_PIPELINE_HPP
#define IK_PIPELINE_HPP

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ik/enumerate.hpp"
#include "ik/graph.hpp"
#include "ik/reduction.hpp"

namespace ik {

struct PipelineOptions {
    int threads = 0;  // 0 = library default
    std::uint64_t minor_budget = 50'000'000;
    std::string out_dir;  // empty = no certificate/report files
    // Re-verify every recorded reduction's planarity against the minor oracle.
    bool crosscheck_planarity = false;
};

// Outcome of classifying one enumerated candidate. `pair`/`reduction` hold the
// lexicographically smallest eliminating pair. `planar_reduction` marks the
// rare eliminations where no pair drops to <=9 edges but some reduction is
// planar outright (equally sufficient for "not intrinsically knotted").
struct CandidateOutcome {
    BipartiteGraph graph;
    std::optional<std::pair<Vertex, Vertex>> pair;
    int reduced_edges = -1;
    std::string trace_digest;
    bool planar_reduction = false;
    bool survivor() const { return !pair.has_value(); }
};

CandidateOutcome classify_candidate(const BipartiteGraph& g);

// OpenMP kernel plus the serial reference it is tested against.
std::vector<CandidateOutcome> scan_candidates(const std::vector<BipartiteGraph>& gs);
std::vector<CandidateOutcome> scan_candidates_serial(const std::vector<BipartiteGraph>& gs);

struct CheckResult {
    std::string name;
    bool passed = false;
    nlohmann::json details;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    nlohmann::json config;
    double seconds = 0.0;

    bool all_passed() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

CheckResult verify_main3(const PipelineOptions& opts);
CheckResult verify_deg6(const PipelineOptions& opts);
CheckResult verify_families(const PipelineOptions& opts);
CheckResult verify_minimality_and_splits(const PipelineOptions& opts);
std::vector<CheckResult> verify_lemmas(const PipelineOptions& opts);

VerificationReport run_checks(const std::vector<std::string>& which,
                              const PipelineOptions& opts);

}  // namespace ik

#endif
