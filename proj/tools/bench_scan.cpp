// Compares the OpenMP candidate-scan kernel against the serial reference on
// a few of the larger profile pairs and checks the outcomes agree.
#include <chrono>
#include <cstdio>

#include "ik/enumerate.hpp"
#include "ik/pipeline.hpp"

using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main() {
    int mismatches = 0;
    for (const auto& pair : ik::admissible_profiles(5)) {
        std::vector<ik::BipartiteGraph> batch = ik::generate_list(pair);
        if (batch.size() < 20) continue;  // too small to time meaningfully

        auto t0 = Clock::now();
        auto serial = ik::scan_candidates_serial(batch);
        double ts = seconds_since(t0);

        t0 = Clock::now();
        auto parallel = ik::scan_candidates(batch);
        double tp = seconds_since(t0);

        for (size_t i = 0; i < batch.size(); ++i)
            if (serial[i].pair != parallel[i].pair ||
                serial[i].trace_digest != parallel[i].trace_digest)
                ++mismatches;

        std::printf("%-24s %6zu graphs  serial %8.3fs  parallel %8.3fs  speedup %5.2fx\n",
                    pair.to_string().c_str(), batch.size(), ts, tp,
                    tp > 0 ? ts / tp : 0.0);
    }
    if (mismatches) {
        std::printf("MISMATCHES: %d\n", mismatches);
        return 1;
    }
    std::printf("serial and parallel scans agree\n");
    return 0;
}
