#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "treeph/boundary.hpp"
#include "treeph/cavity.hpp"
#include "treeph/errors.hpp"
#include "treeph/ingest.hpp"
#include "treeph/morse.hpp"
#include "treeph/network.hpp"

using namespace treeph;

namespace {

SimplicialNetwork torus() {
    return parse_simplex_list(read_file("data/torus.simplices"));
}

std::set<Simplex> member_set(const SimplicialNetwork& K, const RepresentativeCycle& c) {
    std::set<Simplex> out;
    for (Index i : c.members) out.insert(K.simplex(c.dim, i));
    return out;
}

} // namespace

TEST_CASE("torus 1-cavities are the two short frozen triangles") {
    SimplicialNetwork K = torus();
    TreeDecomposition d = classify(K);
    auto cycles = solve_cavities(K, d, 1);
    REQUIRE(cycles.size() == 2);

    CHECK(K.simplex(1, cycles[0].generator) == make_simplex({2, 3}));
    CHECK(member_set(K, cycles[0]) ==
          std::set<Simplex>{make_simplex({1, 2}), make_simplex({1, 3}),
                            make_simplex({2, 3})});

    CHECK(K.simplex(1, cycles[1].generator) == make_simplex({4, 7}));
    CHECK(member_set(K, cycles[1]) ==
          std::set<Simplex>{make_simplex({1, 4}), make_simplex({1, 7}),
                            make_simplex({4, 7})});

    for (const auto& c : cycles)
        CHECK(is_cycle(K, Chain{c.dim, c.members}));
}

TEST_CASE("torus 2-cavity is the full surface") {
    SimplicialNetwork K = torus();
    TreeDecomposition d = classify(K);
    auto cycles = solve_cavities(K, d, 2);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].length() == 18);
    CHECK(is_cycle(K, Chain{2, cycles[0].members}));
}

TEST_CASE("cavity members solve the tree completion uniquely") {
    SimplicialNetwork K = torus();
    TreeDecomposition d = classify(K);
    for (int k = 1; k <= 2; ++k) {
        auto cycles = solve_cavities(K, d, k);
        auto expected = oracle::exhaustive_tree_cycles(K, d.tree[k], d.generators[k], k);
        REQUIRE(cycles.size() == expected.size());
        for (std::size_t i = 0; i < cycles.size(); ++i)
            CHECK(cycles[i].members == expected[i]);
    }
}

TEST_CASE("oriented solve agrees with the binary solve on the torus") {
    SimplicialNetwork K = torus();
    TreeDecomposition d = classify(K);
    for (int k = 1; k <= 2; ++k) {
        auto bin = solve_cavities(K, d, k);
        auto ori = solve_cavities_oriented(K, d, k);
        REQUIRE(bin.size() == ori.size());
        for (std::size_t i = 0; i < bin.size(); ++i) {
            CHECK(bin[i].generator == ori[i].generator);
            CHECK(bin[i].members == ori[i].members);
        }
    }
}

TEST_CASE("full basis validates and spans") {
    SimplicialNetwork K = torus();
    TreeDecomposition d = classify(K);
    CavityBasis basis = solve_all_cavities(K, d);
    CHECK(basis.count(0) == 1);
    CHECK(basis.count(1) == 2);
    CHECK(basis.count(2) == 1);

    BasisReport rep = validate_basis(K, basis);
    CHECK(rep.valid);
    CHECK(rep.failures.empty());
}

TEST_CASE("validate_basis flags broken bases") {
    SimplicialNetwork K = torus();
    TreeDecomposition d = classify(K);
    CavityBasis basis = solve_all_cavities(K, d);

    SUBCASE("non-cycle member set") {
        basis.cycles[1][0].members.pop_back();
        BasisReport rep = validate_basis(K, basis);
        CHECK_FALSE(rep.valid);
        CHECK_FALSE(rep.failures.empty());
    }
    SUBCASE("duplicated representative is dependent") {
        basis.cycles[1][1] = basis.cycles[1][0];
        BasisReport rep = validate_basis(K, basis);
        CHECK_FALSE(rep.valid);
    }
    SUBCASE("boundary cycle is dependent modulo boundaries") {
        // replace a 1-cavity with the boundary of a triangle
        Chain b = apply_boundary(K, Chain{2, {0}});
        basis.cycles[1][0].members = b.members;
        basis.cycles[1][0].generator = b.members[0];
        BasisReport rep = validate_basis(K, basis);
        CHECK_FALSE(rep.valid);
    }
    SUBCASE("wrong count per dimension") {
        basis.cycles[1].pop_back();
        BasisReport rep = validate_basis(K, basis);
        CHECK_FALSE(rep.valid);
    }
}

TEST_CASE("hollow tetrahedron cavity is its whole shell") {
    std::vector<Simplex> tops{make_simplex({1, 2, 3}), make_simplex({1, 2, 4}),
                              make_simplex({1, 3, 4}), make_simplex({2, 3, 4})};
    SimplicialNetwork K = explicit_complex(tops);
    BettiVector b = betti_numbers(K);
    CHECK(b.beta == std::vector<long long>{1, 0, 1});

    TreeDecomposition d = classify(K);
    auto cycles = solve_cavities(K, d, 2);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].members == std::vector<Index>{0, 1, 2, 3});

    auto expected = oracle::exhaustive_tree_cycles(K, d.tree[2], d.generators[2], 2);
    CHECK(cycles[0].members == expected[0]);
}

TEST_CASE("graph with two independent loops") {
    // two triangles sharing the vertex 3, edges only
    std::vector<Simplex> tops{make_simplex({1, 2}), make_simplex({1, 3}),
                              make_simplex({2, 3}), make_simplex({3, 4}),
                              make_simplex({3, 5}), make_simplex({4, 5})};
    SimplicialNetwork K = explicit_complex(tops);
    CHECK(betti_numbers(K).beta == std::vector<long long>{1, 2});

    TreeDecomposition d = classify(K);
    auto cycles = solve_cavities(K, d, 1);
    REQUIRE(cycles.size() == 2);
    CHECK(member_set(K, cycles[0]) ==
          std::set<Simplex>{make_simplex({1, 2}), make_simplex({1, 3}),
                            make_simplex({2, 3})});
    CHECK(member_set(K, cycles[1]) ==
          std::set<Simplex>{make_simplex({3, 4}), make_simplex({3, 5}),
                            make_simplex({4, 5})});

    auto expected = oracle::exhaustive_tree_cycles(K, d.tree[1], d.generators[1], 1);
    for (std::size_t i = 0; i < cycles.size(); ++i)
        CHECK(cycles[i].members == expected[i]);

    auto ori = solve_cavities_oriented(K, d, 1);
    for (std::size_t i = 0; i < cycles.size(); ++i)
        CHECK(ori[i].members == cycles[i].members);
}

TEST_CASE("cavity text export lists one cycle per line") {
    SimplicialNetwork K = torus();
    CavityBasis basis = solve_all_cavities(K, classify(K));
    std::string text = cavities_to_text(K, basis);
    CHECK(text.find("1 (2,3) : (1,2);(1,3);(2,3)\n") != std::string::npos);
    CHECK(text.find("1 (4,7) : (1,4);(1,7);(4,7)\n") != std::string::npos);
    CHECK(text.find("0 (1) : (1)\n") != std::string::npos);

    std::string json = cavities_to_structured(K, basis);
    CHECK(json.find("\"generator\"") != std::string::npos);
    CHECK(json.find("\"members\"") != std::string::npos);
}

TEST_CASE("solve_cavities rejects out-of-range dimensions") {
    SimplicialNetwork K = torus();
    TreeDecomposition d = classify(K);
    CHECK_THROWS_AS(solve_cavities(K, d, 0), DimensionError);
    CHECK_THROWS_AS(solve_cavities(K, d, 3), DimensionError);
}
