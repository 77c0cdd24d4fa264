#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "ik/canonical.hpp"
#include "ik/catalog.hpp"
#include "ik/io.hpp"
#include "ik/moves.hpp"

using namespace ik;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / fs::path("ik_io_test")) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("graph json round-trips simple graphs and multigraphs") {
    MultiGraph simple = named("k33").graph;
    CHECK(graph_from_json(graph_to_json(simple)) == simple);
    MultiGraph multi = MultiGraph::build(3, {{0, 1, 2}, {1, 2, 1}});
    CHECK(graph_from_json(graph_to_json(multi)) == multi);
    CHECK_THROWS(graph_from_json("not json"));
}

TEST_CASE("closure store and load round-trip") {
    TempDir tmp;
    FamilyClosure fc = family_closure(named("k7").graph);
    fs::path file = tmp.path / "k7.jsonl";
    store_closure(file, fc);
    FamilyClosure loaded = load_closure(file);
    CHECK(loaded.seed == fc.seed);
    CHECK(loaded.members.size() == fc.members.size());
    for (const auto& [canon, g] : fc.members) {
        auto it = loaded.members.find(canon);
        REQUIRE(it != loaded.members.end());
        CHECK(isomorphic(it->second, g));
    }
}

TEST_CASE("loading detects tampered lines") {
    TempDir tmp;
    FamilyClosure fc = family_closure(named("k33").graph);
    fs::path file = tmp.path / "c.jsonl";
    store_closure(file, fc);

    // Swap the stored graph for a different one, keeping the canonical hex.
    std::ifstream in(file);
    std::string head, line;
    std::getline(in, head);
    std::getline(in, line);
    in.close();
    auto pos = line.find("\"graph6\":\"");
    REQUIRE(pos != std::string::npos);
    std::string tampered = head + "\n" +
        line.substr(0, pos) + "\"graph6\":\"" + graph6_encode(named("k33e").graph) +
        line.substr(line.find('"', pos + 10 + 1) + 1) + "\n";
    std::ofstream out(file, std::ios::trunc);
    out << tampered;
    out.close();
    CHECK_THROWS_AS(load_closure(file), GraphError);
}

TEST_CASE("loading rejects bad headers and missing files") {
    TempDir tmp;
    fs::path file = tmp.path / "bad.jsonl";
    std::ofstream(file) << "{\"schema\":2,\"kind\":\"closure\"}\n";
    CHECK_THROWS_AS(load_closure(file), GraphError);
    std::ofstream(file, std::ios::trunc) << "garbage\n";
    CHECK_THROWS_AS(load_closure(file), GraphError);
    CHECK_THROWS_AS(load_closure(tmp.path / "absent.jsonl"), GraphError);
}

TEST_CASE("empty closure file loads as an empty closure") {
    TempDir tmp;
    fs::path file = tmp.path / "empty.jsonl";
    std::ofstream(file).close();
    FamilyClosure fc = load_closure(file);
    CHECK(fc.members.empty());
}

TEST_CASE("write_text_atomic leaves no temp file behind") {
    TempDir tmp;
    fs::path file = tmp.path / "out.txt";
    write_text_atomic(file, "hello\n");
    std::ifstream in(file);
    std::string s;
    std::getline(in, s);
    CHECK(s == "hello");
    CHECK_FALSE(fs::exists(file.string() + ".tmp"));
}
