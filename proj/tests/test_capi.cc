#include <doctest.h>

#include <isspack/isspack.h>

#include <cstring>
#include <string>

namespace
{
    auto text(char * p) -> std::string
    {
        std::string s = p ? p : "";
        isspack_string_free(p);
        return s;
    }
}

TEST_CASE("status reporting")
{
    size_t n = 0;
    CHECK(isspack_gadget_size(3, ISSPACK_MODE_PAPER, &n) == ISSPACK_OK);
    CHECK(n == 6);
    CHECK(std::string(isspack_last_error()).empty());
    CHECK(isspack_gadget_size(3, ISSPACK_MODE_TIGHT, &n) == ISSPACK_OK);
    CHECK(n == 4);
    CHECK(isspack_gadget_size(0, ISSPACK_MODE_PAPER, &n) == ISSPACK_E_ARGUMENT);
    CHECK_FALSE(std::string(isspack_last_error()).empty());
    CHECK(isspack_gadget_size(3, ISSPACK_MODE_PAPER, nullptr) == ISSPACK_E_ARGUMENT);
    CHECK(std::strlen(isspack_version()) > 0);
    CHECK(std::string(isspack_status_name(ISSPACK_E_BUDGET)) == "budget exceeded");

    isspack_mode mode;
    CHECK(isspack_parse_mode("tight", &mode) == ISSPACK_OK);
    CHECK(mode == ISSPACK_MODE_TIGHT);
    CHECK(isspack_parse_mode("other", &mode) == ISSPACK_E_ARGUMENT);
}

TEST_CASE("gadget pairs")
{
    isspack_iss * iss = nullptr;
    REQUIRE(isspack_iss_build(8, &iss) == ISSPACK_OK);
    CHECK(isspack_iss_m_sets(iss) == 35);
    int passed = 0;
    char * report = nullptr;
    CHECK(isspack_iss_check(iss, &passed, &report) == ISSPACK_OK);
    CHECK(passed == 1);
    CHECK(text(report).find("complement_exchange") != std::string::npos);
    char * json = nullptr;
    CHECK(isspack_iss_to_json(iss, &json) == ISSPACK_OK);
    CHECK(text(json).find("\"pair\"") != std::string::npos);
    isspack_iss_free(iss);

    isspack_iss * odd = nullptr;
    CHECK(isspack_iss_build(7, &odd) == ISSPACK_E_ARGUMENT);
    CHECK(odd == nullptr);
}

TEST_CASE("reduce, serialize, reload and solve")
{
    isspack_graph * g = nullptr;
    isspack_graph * h = nullptr;
    REQUIRE(isspack_graph_from_json(R"({"n":4,"edges":[[1,2],[2,3],[1,3],[3,4]]})", &g) == ISSPACK_OK);
    REQUIRE(isspack_graph_pattern("k3", &h) == ISSPACK_OK);
    uint64_t orderings = 0;
    CHECK(isspack_ordering_count(h, &orderings) == ISSPACK_OK);
    CHECK(orderings == 6);

    isspack_budget budget;
    isspack_budget_default(&budget);

    for (auto kind : { ISSPACK_KIND_PSP, ISSPACK_KIND_XCOVER, ISSPACK_KIND_VECSUM }) {
        for (uint64_t p = 0 ; p < orderings ; ++p) {
            isspack_instance * inst = nullptr;
            REQUIRE(isspack_reduce(g, h, kind, ISSPACK_MODE_TIGHT, p, &inst) == ISSPACK_OK);
            char * doc = nullptr;
            REQUIRE(isspack_instance_to_json(inst, &doc) == ISSPACK_OK);
            isspack_instance * loaded = nullptr;
            REQUIRE(isspack_instance_from_json(kind, doc, &loaded) == ISSPACK_OK);
            isspack_string_free(doc);

            const char * algo = kind == ISSPACK_KIND_VECSUM ? "enum" : "bnb";
            isspack_solve_result a, b;
            CHECK(isspack_solve(inst, algo, &budget, &a) == ISSPACK_OK);
            CHECK(isspack_solve(loaded, algo, &budget, &b) == ISSPACK_OK);
            CHECK(a.found == b.found);
            CHECK(a.found == 1);
            REQUIRE(a.witness_json);
            CHECK(std::string(a.witness_json) == std::string(b.witness_json));
            isspack_solve_result_clear(&a);
            isspack_solve_result_clear(&b);
            CHECK(a.witness_json == nullptr);

            char * stats = nullptr;
            CHECK(isspack_instance_stats_json(loaded, &stats) == ISSPACK_OK);
            CHECK(text(stats).find("\"universe_size\":54") != std::string::npos);

            isspack_instance_free(inst);
            isspack_instance_free(loaded);
        }
    }

    isspack_instance * psp = nullptr;
    REQUIRE(isspack_reduce(g, h, ISSPACK_KIND_PSP, ISSPACK_MODE_PAPER, 0, &psp) == ISSPACK_OK);
    isspack_solve_result result;
    REQUIRE(isspack_solve(psp, "bnb", &budget, &result) == ISSPACK_OK);
    CHECK(result.found == 1);
    isspack_solve_result_clear(&result);
    CHECK(isspack_solve(psp, "bfs", &budget, &result) == ISSPACK_E_ARGUMENT);
    CHECK(result.witness_json == nullptr);
    CHECK(isspack_instance_set_r(psp, 2) == ISSPACK_E_ARGUMENT);

    size_t indices[] = { 0 };
    char * lifted = nullptr;
    CHECK(isspack_lift(psp, indices, 1, &lifted) == ISSPACK_E_ARGUMENT);
    isspack_instance_free(psp);

    isspack_graph_free(g);
    isspack_graph_free(h);
}

TEST_CASE("loading checks stored sets against the reduction block")
{
    isspack_graph * g = nullptr;
    isspack_graph * h = nullptr;
    REQUIRE(isspack_graph_pattern("c4", &g) == ISSPACK_OK);
    REQUIRE(isspack_graph_pattern("p3", &h) == ISSPACK_OK);
    isspack_instance * inst = nullptr;
    REQUIRE(isspack_reduce(g, h, ISSPACK_KIND_XCOVER, ISSPACK_MODE_PAPER, 0, &inst) == ISSPACK_OK);
    char * doc = nullptr;
    REQUIRE(isspack_instance_to_json(inst, &doc) == ISSPACK_OK);
    std::string s = text(doc);
    auto at = s.find("\"r\":");
    REQUIRE(at != std::string::npos);
    s.replace(at, 5, "\"r\":9");

    isspack_instance * loaded = nullptr;
    CHECK(isspack_instance_from_json(ISSPACK_KIND_XCOVER, s.c_str(), &loaded) == ISSPACK_E_PARSE);
    CHECK(isspack_instance_from_json(ISSPACK_KIND_PSP, "{\"universe_size\":2", &loaded) == ISSPACK_E_PARSE);
    CHECK(loaded == nullptr);

    isspack_instance_free(inst);
    isspack_graph_free(g);
    isspack_graph_free(h);
}

TEST_CASE("plain instances and budgets")
{
    isspack_instance * inst = nullptr;
    REQUIRE(isspack_instance_from_json(ISSPACK_KIND_PSP, R"({"universe_size":2,"sets":[[1],[2],[1,2]],"r":2})", &inst)
            == ISSPACK_OK);
    isspack_solve_result result;
    REQUIRE(isspack_solve(inst, "dp", nullptr, &result) == ISSPACK_OK);
    CHECK(result.found == 1);
    CHECK(result.value == 2);
    CHECK(std::string(result.witness_json) == R"({"indices":[0,1]})");
    isspack_solve_result_clear(&result);

    CHECK(isspack_instance_set_r(inst, 3) == ISSPACK_OK);
    REQUIRE(isspack_solve(inst, "bnb", nullptr, &result) == ISSPACK_OK);
    CHECK(result.found == 0);
    isspack_instance_free(inst);

    isspack_instance * big = nullptr;
    REQUIRE(isspack_instance_random_psp(26, 4, 0.5, 1, 1, &big) == ISSPACK_OK);
    CHECK(isspack_solve(big, "dp", nullptr, &result) == ISSPACK_E_BUDGET);
    isspack_instance_free(big);

    isspack_instance * subiso = nullptr;
    REQUIRE(isspack_instance_from_json(ISSPACK_KIND_SUBISO,
            R"({"g":{"n":3,"edges":[[1,2],[2,3]]},"h":{"n":3,"edges":[[1,2],[2,3],[1,3]]}})", &subiso) == ISSPACK_OK);
    REQUIRE(isspack_solve(subiso, "enum", nullptr, &result) == ISSPACK_OK);
    CHECK(result.found == 0);
    isspack_instance_free(subiso);
}

TEST_CASE("verify and bench")
{
    isspack_graph * h = nullptr;
    REQUIRE(isspack_graph_pattern("edge", &h) == ISSPACK_OK);
    size_t bad = 99;
    char * report = nullptr;
    CHECK(isspack_verify_sweep(3, h, ISSPACK_MODE_TIGHT, 1, 2, nullptr, 5, &bad, &report) == ISSPACK_OK);
    CHECK(bad == 0);
    CHECK(text(report).find("\"seed\": 5") != std::string::npos);
    CHECK(isspack_verify_sweep(6, h, ISSPACK_MODE_TIGHT, 0, 1, nullptr, 5, &bad, nullptr) == ISSPACK_E_BUDGET);

    isspack_graph * g = nullptr;
    REQUIRE(isspack_graph_random(5, 0.5, 9, &g) == ISSPACK_OK);
    int agreed = 0;
    CHECK(isspack_verify_pair(g, h, ISSPACK_MODE_PAPER, 1, nullptr, &agreed, nullptr) == ISSPACK_OK);
    CHECK(agreed == 1);

    int ns[] = { 3 };
    char * compact = nullptr;
    isspack_graph * k3 = nullptr;
    REQUIRE(isspack_graph_pattern("k3", &k3) == ISSPACK_OK);
    CHECK(isspack_compactness_sweep(ns, 1, k3, ISSPACK_MODE_PAPER, &compact) == ISSPACK_OK);
    CHECK(text(compact).find("\"universe_size\": 54") != std::string::npos);

    isspack_bench_config config;
    isspack_bench_config_default(&config);
    size_t universes[] = { 8 };
    size_t sets[] = { 16, 32 };
    config.universes = universes;
    config.universe_count = 1;
    config.set_counts = sets;
    config.set_count_count = 2;
    char * csv = nullptr;
    CHECK(isspack_bench(&config, nullptr, &bad, &csv) == ISSPACK_OK);
    CHECK(bad == 0);
    CHECK(text(csv).find("universe,sets,r,dp_ms,bnb_ms,agree\n") != std::string::npos);

    isspack_graph_free(g);
    isspack_graph_free(h);
    isspack_graph_free(k3);
}
