#include <doctest.h>

#include "ladder/graph.hpp"
#include "ladder/regularization.hpp"
#include "ladder/verification.hpp"
#include "oracles.hpp"

using namespace ladder;

TEST_CASE("3-regular partition counts")
{
    const long long expected[] = {1, 1, 2, 2, 4, 5, 7, 9, 13, 16, 22, 27, 36};
    for (int n = 0; n <= 12; ++n) {
        CHECK(oracle::regular_count(n, 3) == expected[n]);
    }
}

TEST_CASE("crystal level sizes")
{
    for (int ell = 2; ell <= 5; ++ell) {
        const Modulus m(ell);
        for (auto model : {CrystalModel::Classical, CrystalModel::Ladder}) {
            const auto g = build_crystal(m, 9, model);
            REQUIRE(g.levels.size() == 10);
            for (int n = 0; n <= 9; ++n) {
                CHECK(static_cast<long long>(g.levels[static_cast<std::size_t>(n)].size())
                      == oracle::regular_count(n, ell));
            }
            CHECK(std::is_sorted(g.edges.begin(), g.edges.end()));
            for (const auto& level : g.levels) {
                CHECK(std::is_sorted(level.begin(), level.end()));
            }
        }
    }
    const auto zero = build_crystal(Modulus(3), 0, CrystalModel::Classical);
    CHECK(zero.node_count() == 1);
    CHECK(zero.edges.empty());
}

TEST_CASE("ladder nodes map bijectively onto classical nodes")
{
    const Modulus three(3);
    const auto cl = build_crystal(three, 9, CrystalModel::Classical);
    const auto ld = build_crystal(three, 9, CrystalModel::Ladder);
    for (std::size_t n = 0; n < cl.levels.size(); ++n) {
        std::vector<Partition> img;
        for (const auto& p : ld.levels[n]) {
            img.push_back(regularize(p, three));
        }
        std::sort(img.begin(), img.end());
        CHECK(img == cl.levels[n]);
    }
    std::vector<CrystalEdge> mapped;
    for (const auto& e : ld.edges) {
        mapped.push_back({regularize(e.source, three), regularize(e.target, three), e.residue});
    }
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == cl.edges);
}

TEST_CASE("i-strings")
{
    const Modulus three(3);
    CHECK(string_graph(Partition{8, 5, 4, 1}, Residue{1}, three, CrystalModel::Classical)
          == std::vector<Partition>{Partition{7, 5, 4, 1}, Partition{8, 5, 4, 1}, Partition{8, 5, 4, 2}});
    const auto s = string_graph(Partition{5, 3, 1, 1, 1, 1, 1}, Residue{2}, three, CrystalModel::Ladder);
    CHECK(s.size() == 5);
    CHECK(s.front() == Partition{5, 3, 1, 1, 1, 1, 1});
    CHECK(s.back() == Partition{6, 4, 2, 1, 1, 1, 1, 1});
}

TEST_CASE("commuting square on (2,1,1,1)")
{
    const Modulus three(3);
    const Partition p{2, 1, 1, 1};
    const auto up = f_hat(p, Residue{2}, three);
    REQUIRE(up.has_value());
    CHECK(regularize(*up, three) == Partition{3, 2, 1});
    CHECK(regularize(p, three) == Partition{2, 2, 1});
    CHECK(f_tilde(Partition{2, 2, 1}, Residue{2}, three) == Partition{3, 2, 1});
}

TEST_CASE("DOT export")
{
    const Modulus three(3);
    const auto zero = export_dot(build_crystal(three, 0, CrystalModel::Classical));
    CHECK(zero.find("\"empty\";") != std::string::npos);
    CHECK(zero.find("->") == std::string::npos);

    const auto g = build_crystal(three, 2, CrystalModel::Classical);
    CHECK(g.node_count() == 4);
    CHECK(g.edges.size() == 3);
    const auto dot = export_dot(g);
    CHECK(dot.find("\"empty\" -> \"1\" [label=0];") != std::string::npos);
    CHECK(dot.find("\"1\" -> \"2\" [label=1];") != std::string::npos);
    CHECK(dot.find("\"1\" -> \"1,1\" [label=2];") != std::string::npos);
    CHECK(dot.find("{rank=same; \"1,1\"; \"2\";}") != std::string::npos);
    CHECK(dot.find('\r') == std::string::npos);
    CHECK(dot == export_dot(build_crystal(three, 2, CrystalModel::Classical)));
}

TEST_CASE("verification suites pass at small scale")
{
    for (int ell = 3; ell <= 4; ++ell) {
        const Modulus m(ell);
        for (const auto& r : {verify_isomorphism(m, 7), crystal_structure_suite(m, 7), theorem_suite(m, 8),
                              regularization_suite(m, 9), mullineux_suite(m, 9), equivalence_suite(m, 10)}) {
            CAPTURE(r.suite);
            CHECK(r.passed());
            CHECK(r.checks > 0);
        }
    }
    const auto vacuous = theorem_suite(Modulus(3), 0);
    CHECK(vacuous.passed());
}

TEST_CASE("report JSON layout")
{
    VerificationReport r;
    r.suite = "x";
    r.ell = 3;
    r.params["nmax"] = 2;
    r.checks = 5;
    r.failures.push_back({"3,1", -1, "a", "b"});
    r.failures.push_back({"2", 1, "c", "d"});
    const auto j = r.to_json();
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) {
        keys.push_back(k);
    }
    CHECK(keys == std::vector<std::string>{"suite", "ell", "params", "checks", "passed", "failures"});
    CHECK(j["failures"][0]["residue"].is_null());
    CHECK(j["failures"][1]["residue"] == 1);
    CHECK_FALSE(j["passed"].get<bool>());
}
