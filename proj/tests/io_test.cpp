#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "acyclic/colouring.hpp"
#include "acyclic/dimacs.hpp"
#include "acyclic/gadgets.hpp"
#include "acyclic/meta.hpp"
#include "acyclic/reductions.hpp"
#include "test_helpers.hpp"

using namespace acyclic;
using namespace testutil;

TEST_CASE("dimacs round trip is bit-exact for generated graphs") {
    std::vector<Graph> graphs = {complete(4),        cycle(5),          petersen(),
                                 g_d(5).graph,       chain_gadget(3, 2).graph,
                                 filler_gadget(3).graph};
    for (const Graph& g : graphs) {
        std::ostringstream first;
        write_dimacs(g, first);
        std::istringstream in(first.str());
        Graph back = read_dimacs(in);
        CHECK(back == g);
        std::ostringstream second;
        write_dimacs(back, second);
        CHECK(first.str() == second.str());
    }
}

TEST_CASE("dimacs tolerates comments and 1-based endpoints") {
    std::istringstream in("c a comment\np edge 3 2\nc another\ne 1 2\ne 2 3\n");
    Graph g = read_dimacs(in);
    CHECK(g == path(3));
}

TEST_CASE("dimacs rejects malformed input") {
    std::istringstream no_header("e 1 2\n");
    CHECK_THROWS(read_dimacs(no_header));
    std::istringstream bad_edge("p edge 2 1\ne 1 5\n");
    CHECK_THROWS(read_dimacs(bad_edge));
    std::istringstream junk("p edge 2 0\nx nonsense\n");
    CHECK_THROWS(read_dimacs(junk));
}

TEST_CASE("colouring text format round trip") {
    Colouring f{3, {0, 2, 1, 0}};
    std::ostringstream out;
    write_colouring(f, out);
    std::istringstream in(out.str());
    Colouring back = read_colouring(in);
    CHECK(back == f);
}

TEST_CASE("colouring format rejects gaps and bad colours") {
    std::istringstream gap("k 3\n0 1\n2 0\n");
    CHECK_THROWS(read_colouring(gap));
    std::istringstream range("k 2\n0 5\n");
    CHECK_THROWS(read_colouring(range));
}

TEST_CASE("fnv1a is stable") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("gadget sidecar carries terminals, tags and colouring") {
    GadgetGraph chain = chain_gadget(3, 2);
    nlohmann::json meta = gadget_meta(chain);
    CHECK(meta["kind"] == "gadget");
    CHECK(meta["n"] == 10);
    CHECK(meta["terminals"].size() == 2);
    CHECK(meta["tags"].size() == 10);
    CHECK_FALSE(meta["canonical_colouring"].is_null());
}

TEST_CASE("reduction sidecar carries provenance and claims") {
    ReductionOutput out = coleman_cai(complete(3), 3);
    nlohmann::json meta = reduction_meta(out, "deadbeef");
    CHECK(meta["kind"] == "reduction");
    CHECK(meta["n"] == 12);
    CHECK(meta["provenance"].size() == 12);
    CHECK(meta["source_hash"] == "deadbeef");
    CHECK(meta["claimed_properties"].size() == 2);
}
