#include <doctest.h>

#include <isspack/errors.hh>
#include <isspack/generators.hh>
#include <isspack/io.hh>
#include <isspack/solvers.hh>

#include "helpers.hh"

using namespace isspack;
using namespace testing_support;

TEST_CASE("graph documents")
{
    auto g = pattern_by_name("paw");
    CHECK(to_json(g).dump() == R"({"n":4,"edges":[[1,2],[1,3],[2,3],[3,4]]})");
    CHECK(graph_from_json(to_json(g)) == g);
    CHECK_THROWS_AS(graph_from_json(parse_json(R"({"n":3,"edges":[[1,1]]})")), ParseError);
    CHECK_THROWS_AS(graph_from_json(parse_json(R"({"n":3,"edges":[[1,2,3]]})")), ParseError);
    CHECK_THROWS_AS(graph_from_json(parse_json(R"({"edges":[]})")), ParseError);
    CHECK_THROWS_AS(parse_json("{"), ParseError);
}

TEST_CASE("set family documents")
{
    auto inst = PspInstance{ family_1(3, { { 1 }, { 2, 3 }, {} }), 2 };
    auto j = to_json(inst.family, inst.r);
    CHECK(j.dump() == R"({"universe_size":3,"sets":[[1],[2,3],[]],"labels":[],"r":2})");
    auto back = psp_from_json(j);
    CHECK(back.family == inst.family);
    CHECK(back.r == 2);
    CHECK_THROWS_AS(psp_from_json(parse_json(R"({"universe_size":3,"sets":[[4]],"r":1})")), ParseError);
    CHECK_THROWS_AS(psp_from_json(parse_json(R"({"universe_size":3,"sets":[[0]],"r":1})")), ParseError);
    CHECK_THROWS_AS(psp_from_json(parse_json(R"({"universe_size":3,"sets":[[1,1]],"r":1})")), ParseError);
    CHECK_THROWS_AS(psp_from_json(parse_json(R"({"universe_size":3,"sets":[[1]]})")), ParseError);
    CHECK_THROWS_AS(label_from_json(parse_json(R"({"kind":"Q"})")), ParseError);
}

TEST_CASE("labels round trip")
{
    SetLabel v = VSetLabel{ 2, 1, 3 };
    SetLabel e = ESetLabel{ 1, 4, 2, 3 };
    CHECK(to_json(v).dump() == R"({"kind":"V","alpha":2,"i":1,"beta":3})");
    CHECK(label_from_json(to_json(v)) == v);
    CHECK(label_from_json(to_json(e)) == e);
}

TEST_CASE("gadget pair documents")
{
    auto pair = build_compatible_iss(6);
    auto back = iss_pair_from_json(to_json(pair));
    CHECK(back.n_elems == 6);
    CHECK(back.m_sets == 10);
    CHECK(back.s_a == pair.s_a);
    CHECK(back.s_b == pair.s_b);
}

TEST_CASE("reduced instances rebuild from their reduction block")
{
    auto g = generate_random_graph(5, 0.6, 2);
    auto h = pattern_by_name("p3");
    for (auto & pattern : enumerate_orderings(h)) {
        auto red = build_psp_instance(SubIsoInstance(g, h), pattern, GadgetMode::Paper);
        auto text = to_json(red).dump();
        auto back = reduced_from_json(parse_json(text));
        CHECK(back.inst.family == red.inst.family);
        CHECK(back.pattern == red.pattern);
        CHECK(solve_set_packing_bnb(back.inst).found == solve_set_packing_bnb(red.inst).found);
        CHECK(to_json(back).dump() == text);
    }

    auto red = build_psp_instance(SubIsoInstance(g, h), ordering_at(h, 0), GadgetMode::Tight);
    auto j = to_json(red);
    j["sets"][0][0] = 1 + (j["sets"][0][0].get<int>() % int(red.inst.family.universe_size()));
    CHECK_THROWS_AS(reduced_from_json(j), ParseError);
}

TEST_CASE("vector sum documents")
{
    auto k3 = pattern_by_name("k3");
    auto red = build_xcover_instance(SubIsoInstance(k3, k3), ordering_at(k3, 2), GadgetMode::Tight);
    auto vec = vectorize_instance(red);
    auto back = vecsum_from_json(parse_json(to_json(vec).dump()));
    CHECK(back == vec);
    CHECK_THROWS_AS(vecsum_from_json(parse_json(R"({"dim":3,"vectors":[[1]],"target":[1],"r":1,"indicator_blocks":[[3,1]]})")),
            ParseError);
}

TEST_CASE("subgraph instances")
{
    SubIsoInstance inst(pattern_by_name("c4"), pattern_by_name("p3"));
    auto back = subiso_from_json(parse_json(to_json(inst).dump()));
    CHECK(back.g() == inst.g());
    CHECK(back.h() == inst.h());
    CHECK_THROWS_AS(subiso_from_json(parse_json(R"({"g":{"n":3,"edges":[]},"h":{"n":2,"edges":[]}})")), ParseError);
}

TEST_CASE("files")
{
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), IoError);
    CHECK_THROWS_AS(write_text_file("/nonexistent/dir/file.json", "x"), IoError);
}
