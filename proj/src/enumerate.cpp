#include "ik/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "ik/canonical.hpp"

namespace ik {

namespace {

std::vector<DegreeProfile> part_profiles(int max_degree, int edge_total) {
    std::vector<DegreeProfile> out;
    for (int n7 = 0; 7 * n7 <= edge_total; ++n7) {
        if (n7 > 0 && max_degree < 7) break;
        for (int n6 = 0; 7 * n7 + 6 * n6 <= edge_total; ++n6) {
            if (n6 > 0 && max_degree < 6) break;
            for (int n5 = 0; 7 * n7 + 6 * n6 + 5 * n5 <= edge_total; ++n5) {
                for (int n4 = 0; 7 * n7 + 6 * n6 + 5 * n5 + 4 * n4 <= edge_total; ++n4) {
                    int rest = edge_total - (7 * n7 + 6 * n6 + 5 * n5 + 4 * n4);
                    if (rest % 3 != 0) continue;
                    DegreeProfile p;
                    p.count[7] = n7;
                    p.count[6] = n6;
                    p.count[5] = n5;
                    p.count[4] = n4;
                    p.count[3] = rest / 3;
                    out.push_back(p);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const DegreeProfile& x, const DegreeProfile& y) {
        return x != y && x.dominates(y);
    });
    return out;
}

std::vector<int> degree_list(const DegreeProfile& p) {
    std::vector<int> out;
    for (int d = 7; d >= 3; --d)
        for (int i = 0; i < p.count[d]; ++i) out.push_back(d);
    return out;
}

// Row-by-row backtracking over the biadjacency matrix. When `sorted_rows` is
// set, equal-degree rows must be non-increasing as bitmasks, which removes
// most relabelings of the A side before the canonical dedup.
class MatrixSearch {
public:
    MatrixSearch(std::vector<int> row_deg, std::vector<int> col_deg, bool sorted_rows)
        : row_deg_(std::move(row_deg)), col_deg_(std::move(col_deg)),
          sorted_rows_(sorted_rows), nb_(static_cast<int>(col_deg_.size())) {}

    void run(const std::function<void(const std::vector<std::uint32_t>&)>& emit) {
        rows_.assign(row_deg_.size(), 0);
        rem_ = col_deg_;
        emit_ = &emit;
        descend(0);
    }

private:
    void descend(size_t r) {
        if (r == row_deg_.size()) {
            (*emit_)(rows_);
            return;
        }
        int suffix_demand = 0;
        for (size_t i = r + 1; i < row_deg_.size(); ++i) suffix_demand += row_deg_[i];
        const std::uint32_t full = (1u << nb_) - 1;
        const std::uint32_t cap =
            (sorted_rows_ && r > 0 && row_deg_[r] == row_deg_[r - 1]) ? rows_[r - 1] : full;
        for (std::uint32_t m = cap;; --m) {
            if (std::popcount(m) == row_deg_[r] && feasible(m, r, suffix_demand)) {
                rows_[r] = m;
                apply(m);
                descend(r + 1);
                undo(m);
            }
            if (m == 0) break;
        }
    }

    bool feasible(std::uint32_t m, size_t r, int suffix_demand) {
        const int rows_left = static_cast<int>(row_deg_.size() - r - 1);
        int capacity = 0;
        for (int j = 0; j < nb_; ++j) {
            int rem = rem_[j] - (m >> j & 1);
            if (rem < 0 || rem > rows_left) return false;
            capacity += rem;
        }
        return capacity == suffix_demand;
    }

    void apply(std::uint32_t m) {
        for (int j = 0; j < nb_; ++j) rem_[j] -= (m >> j & 1);
    }
    void undo(std::uint32_t m) {
        for (int j = 0; j < nb_; ++j) rem_[j] += (m >> j & 1);
    }

    std::vector<int> row_deg_, col_deg_, rem_;
    bool sorted_rows_;
    int nb_;
    std::vector<std::uint32_t> rows_;
    const std::function<void(const std::vector<std::uint32_t>&)>* emit_ = nullptr;
};

BipartiteGraph graph_from_rows(const std::vector<std::uint32_t>& rows, int nb) {
    const int na = static_cast<int>(rows.size());
    std::vector<EdgeSpec> edges;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            if (rows[i] >> j & 1) edges.push_back({i, na + j, 1});
    MultiGraph g = MultiGraph::build(na + nb, edges);
    return BipartiteGraph::build(g, (1u << na) - 1);
}

}  // namespace

std::vector<ProfilePair> admissible_profiles(int max_degree, int edge_total) {
    auto parts = part_profiles(max_degree, edge_total);
    std::vector<ProfilePair> out;
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i; j < parts.size(); ++j) out.push_back({parts[i], parts[j]});
    return out;
}

void generate_with_degrees(const std::vector<int>& part_a_degrees,
                           const std::vector<int>& part_b_degrees, bool connected_only,
                           const std::function<void(const BipartiteGraph&)>& emit) {
    std::vector<int> row_deg = part_a_degrees;
    std::vector<int> col_deg = part_b_degrees;
    std::sort(row_deg.rbegin(), row_deg.rend());
    std::sort(col_deg.rbegin(), col_deg.rend());
    if (std::accumulate(row_deg.begin(), row_deg.end(), 0) !=
        std::accumulate(col_deg.begin(), col_deg.end(), 0))
        throw GraphError("degree lists with mismatched sums");
    if (col_deg.size() > 31 || row_deg.size() + col_deg.size() > kMaxOrder)
        throw GraphError("degree lists too large to enumerate");
    std::set<CanonicalForm> seen;
    MatrixSearch search(row_deg, col_deg, true);
    const int nb = static_cast<int>(col_deg.size());
    search.run([&](const std::vector<std::uint32_t>& rows) {
        BipartiteGraph bg = graph_from_rows(rows, nb);
        if (connected_only && !is_connected(bg.graph())) return;
        if (seen.insert(canonical_form(bg)).second) emit(bg);
    });
}

void generate(const ProfilePair& pair,
              const std::function<void(const BipartiteGraph&)>& emit) {
    generate_with_degrees(degree_list(pair.a), degree_list(pair.b), true, emit);
}

std::vector<BipartiteGraph> generate_list(const ProfilePair& pair) {
    std::vector<BipartiteGraph> out;
    generate(pair, [&](const BipartiteGraph& g) { out.push_back(g); });
    return out;
}

void generate_all(int max_degree,
                  const std::function<void(const ProfilePair&, const BipartiteGraph&)>& emit) {
    for (const auto& pair : admissible_profiles(max_degree))
        generate(pair, [&](const BipartiteGraph& g) { emit(pair, g); });
}

int count_labeled_classes_brute_force(const ProfilePair& pair) {
    return count_labeled_classes_brute_force(degree_list(pair.a), degree_list(pair.b), true);
}

int count_labeled_classes_brute_force(const std::vector<int>& part_a_degrees,
                                      const std::vector<int>& part_b_degrees,
                                      bool connected_only) {
    std::vector<int> row_deg = part_a_degrees;
    std::vector<int> col_deg = part_b_degrees;
    std::sort(row_deg.rbegin(), row_deg.rend());
    std::sort(col_deg.rbegin(), col_deg.rend());
    const int na = static_cast<int>(row_deg.size());
    const int nb = static_cast<int>(col_deg.size());

    // Degree-preserving permutations of each side.
    auto perms_of = [](const std::vector<int>& deg) {
        std::vector<std::vector<int>> out;
        std::vector<int> p(deg.size());
        std::iota(p.begin(), p.end(), 0);
        do {
            bool ok = true;
            for (size_t i = 0; i < deg.size(); ++i)
                if (deg[p[i]] != deg[i]) ok = false;
            if (ok) out.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    };
    auto row_perms = perms_of(row_deg);
    auto col_perms = perms_of(col_deg);
    const bool swappable = row_deg == col_deg;

    auto key_of = [&](const std::vector<std::uint32_t>& rows) {
        std::vector<std::uint32_t> best;
        auto consider = [&](const std::vector<std::uint32_t>& mat) {
            for (const auto& rp : row_perms)
                for (const auto& cp : col_perms) {
                    std::vector<std::uint32_t> cand(na);
                    for (int i = 0; i < na; ++i) {
                        std::uint32_t m = 0;
                        for (int j = 0; j < nb; ++j)
                            if (mat[rp[i]] >> cp[j] & 1) m |= 1u << j;
                        cand[i] = m;
                    }
                    if (best.empty() || cand < best) best = cand;
                }
        };
        consider(rows);
        if (swappable) {
            std::vector<std::uint32_t> t(nb, 0);
            for (int i = 0; i < na; ++i)
                for (int j = 0; j < nb; ++j)
                    if (rows[i] >> j & 1) t[j] |= 1u << i;
            consider(t);
        }
        return best;
    };

    std::set<std::vector<std::uint32_t>> classes;
    MatrixSearch search(row_deg, col_deg, false);
    search.run([&](const std::vector<std::uint32_t>& rows) {
        if (connected_only && !is_connected(graph_from_rows(rows, nb).graph())) return;
        classes.insert(key_of(rows));
    });
    return static_cast<int>(classes.size());
}

}  // namespace ik
