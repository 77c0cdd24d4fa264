#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "ik/canonical.hpp"
#include "ik/catalog.hpp"
#include "ik/enumerate.hpp"

using namespace ik;

TEST_CASE("admissible profile pairs at max degree 5") {
    auto pairs = admissible_profiles(5);
    CHECK(pairs.size() == 21);  // 6 one-part profiles, unordered pairs with repeats
    std::set<std::string> parts;
    for (const auto& p : pairs) {
        parts.insert(p.a.to_string());
        parts.insert(p.b.to_string());
        CHECK(p.a.degree_sum() == 22);
        CHECK(p.b.degree_sum() == 22);
        CHECK(p.a.dominates(p.b));
    }
    CHECK(parts == std::set<std::string>{"[3,1,1]", "[2,3,0]", "[2,0,4]",
                                         "[1,2,3]", "[0,4,2]", "[0,1,6]"});
}

TEST_CASE("forced constructions") {
    DegreeProfile p311, p230;
    p311.count[5] = 3, p311.count[4] = 1, p311.count[3] = 1;
    p230.count[5] = 2, p230.count[4] = 3;

    auto only_311 = generate_list({p311, p311});
    REQUIRE(only_311.size() == 1);
    CHECK(isomorphic(only_311[0].graph(), named("cousin110").graph));

    auto only_230 = generate_list({p230, p230});
    CHECK(only_230.size() == 1);
}

TEST_CASE("enumeration yields connected graphs matching the profile") {
    DegreeProfile p311, p204;
    p311.count[5] = 3, p311.count[4] = 1, p311.count[3] = 1;
    p204.count[5] = 2, p204.count[3] = 4;
    for (const auto& bg : generate_list({p311, p204})) {
        CHECK(is_connected(bg.graph()));
        CHECK(bg.graph().is_simple());
        auto [pa, pb] = degree_profile(bg);
        CHECK(pa == p311);
        CHECK(pb == p204);
    }
}

TEST_CASE("no two enumerated graphs are isomorphic") {
    DegreeProfile p123;
    p123.count[5] = 1, p123.count[4] = 2, p123.count[3] = 3;
    auto batch = generate_list({p123, p123});
    std::set<CanonicalForm> seen;
    for (const auto& bg : batch) seen.insert(canonical_form(bg.graph()));
    CHECK(seen.size() == batch.size());
}

TEST_CASE("counts agree with the labeled brute-force oracle on small universes") {
    struct Surrogate {
        std::vector<int> a, b;
        bool connected;
    };
    // Degree-list universes small enough for the exhaustive labeled oracle.
    std::vector<Surrogate> cases = {
        {{3, 3, 3, 3}, {3, 3, 2, 2, 2}, false},
        {{4, 4, 3, 3}, {3, 3, 2, 2, 2, 2}, false},
        {{3, 3, 2}, {2, 2, 2, 2}, false},
        {{3, 3, 3}, {3, 3, 3}, true},
        {{4, 3, 3, 2}, {3, 3, 3, 3}, true},
    };
    for (const auto& c : cases) {
        int streamed = 0;
        generate_with_degrees(c.a, c.b, c.connected,
                              [&](const BipartiteGraph&) { ++streamed; });
        CHECK(streamed == count_labeled_classes_brute_force(c.a, c.b, c.connected));
    }
}

TEST_CASE("generate_with_degrees matches generate on a full 22-edge profile") {
    DegreeProfile p311, p230;
    p311.count[5] = 3, p311.count[4] = 1, p311.count[3] = 1;
    p230.count[5] = 2, p230.count[4] = 3;
    int via_profile = 0;
    generate({p311, p230}, [&](const BipartiteGraph&) { ++via_profile; });
    int via_degrees = 0;
    generate_with_degrees({5, 5, 5, 4, 3}, {5, 5, 4, 4, 4}, true,
                          [&](const BipartiteGraph&) { ++via_degrees; });
    CHECK(via_profile == via_degrees);
}

TEST_CASE("generate_all covers every admissible profile exactly once") {
    int total = 0;
    std::set<std::string> seen_profiles;
    generate_all(5, [&](const ProfilePair& p, const BipartiteGraph&) {
        ++total;
        seen_profiles.insert(p.to_string());
    });
    CHECK(total == 1177);
    CHECK(seen_profiles.size() == 21);
}
