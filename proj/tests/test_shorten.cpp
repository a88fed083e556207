#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "treeph/boundary.hpp"
#include "treeph/cavity.hpp"
#include "treeph/errors.hpp"
#include "treeph/ingest.hpp"
#include "treeph/morse.hpp"
#include "treeph/network.hpp"
#include "treeph/shorten.hpp"

using namespace treeph;

namespace {

std::set<Simplex> member_set(const SimplicialNetwork& K, const RepresentativeCycle& c) {
    std::set<Simplex> out;
    for (Index i : c.members) out.insert(K.simplex(c.dim, i));
    return out;
}

} // namespace

TEST_CASE("boundary add shortens the ten-triangle cavity to eight") {
    SimplicialNetwork K = parse_simplex_list(read_file("data/table4_iter1.simplices"));
    CHECK(K.simplex_counts() == std::vector<std::size_t>{7, 15, 11, 1});
    CHECK(betti_numbers(K).beta == std::vector<long long>{1, 0, 1, 0});

    TreeDecomposition d = classify(K);
    CavityBasis basis = solve_all_cavities(K, d);
    REQUIRE(basis.count(2) == 1);
    CHECK(basis.cycles[2][0].length() == 10);

    auto [shortened, moves] = shorten_basis(K, basis, 2, 10);
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].dim == 2);
    CHECK(moves[0].cycle_id == 0);
    CHECK(moves[0].kind == ShorteningMove::Kind::BoundaryAdd);
    CHECK(K.simplex(3, moves[0].candidate) == make_simplex({4, 13, 87, 118}));
    CHECK(moves[0].before_len == 10);
    CHECK(moves[0].after_len == 8);

    REQUIRE(shortened.count(2) == 1);
    CHECK(member_set(K, shortened.cycles[2][0]) ==
          std::set<Simplex>{
              make_simplex({13, 87, 118}), make_simplex({13, 87, 133}),
              make_simplex({13, 117, 118}), make_simplex({13, 117, 133}),
              make_simplex({87, 118, 192}), make_simplex({87, 133, 192}),
              make_simplex({117, 118, 192}), make_simplex({117, 133, 192})});

    CHECK(validate_basis(K, shortened).valid);

    // the move log renders the accepted move
    std::string log = move_log_text(K, moves);
    CHECK(log.find("boundary-add") != std::string::npos);
    CHECK(log.find("(4,13,87,118)") != std::string::npos);
}

TEST_CASE("already-minimal bases are fixpoints") {
    SimplicialNetwork K = parse_simplex_list(read_file("data/torus.simplices"));
    TreeDecomposition d = classify(K);
    CavityBasis basis = solve_all_cavities(K, d);

    auto [s1, moves1] = shorten_basis(K, basis, 1, 10);
    CHECK(moves1.empty());
    for (std::size_t i = 0; i < basis.cycles[1].size(); ++i)
        CHECK(s1.cycles[1][i].members == basis.cycles[1][i].members);

    // the full-surface 2-cycle cannot shrink: it is the only 2-cycle
    auto [s2, moves2] = shorten_basis(K, basis, 2, 10);
    CHECK(moves2.empty());
    CHECK(s2.cycles[2][0].length() == 18);
}

TEST_CASE("cavity add combines overlapping representatives") {
    // two hollow triangles glued along (2,3): the spanning tree forces
    // the second representative through the first loop (length 4), and
    // one cavity addition restores the short loop
    std::vector<Simplex> tops{make_simplex({1, 2}), make_simplex({1, 3}),
                              make_simplex({2, 3}), make_simplex({2, 4}),
                              make_simplex({3, 4})};
    SimplicialNetwork K = explicit_complex(tops);
    CHECK(betti_numbers(K).beta == std::vector<long long>{1, 2});

    TreeDecomposition d = classify(K);
    CavityBasis basis = solve_all_cavities(K, d);
    REQUIRE(basis.count(1) == 2);
    CHECK(basis.cycles[1][0].length() == 3);
    CHECK(basis.cycles[1][1].length() == 4);

    auto [shortened, moves] = shorten_basis(K, basis, 1, 10);
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].kind == ShorteningMove::Kind::CavityAdd);
    CHECK(moves[0].cycle_id == 1);
    CHECK(moves[0].candidate == 0);
    CHECK(moves[0].before_len == 4);
    CHECK(moves[0].after_len == 3);
    CHECK(member_set(K, shortened.cycles[1][1]) ==
          std::set<Simplex>{make_simplex({2, 3}), make_simplex({2, 4}),
                            make_simplex({3, 4})});
    CHECK(validate_basis(K, shortened).valid);
}

TEST_CASE("minimal one-cavities finds shortest independent loops") {
    SimplicialNetwork K = parse_simplex_list(read_file("data/torus.simplices"));
    TreeDecomposition d = classify(K);
    auto cycles = minimal_one_cavities(K, d);
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0].length() == 3);
    CHECK(cycles[1].length() == 3);
    for (const auto& c : cycles) CHECK(is_cycle(K, Chain{1, c.members}));

    // swapping them into the basis keeps it valid
    CavityBasis basis = solve_all_cavities(K, d);
    basis.cycles[1] = cycles;
    CHECK(validate_basis(K, basis).valid);
}

TEST_CASE("minimal one-cavities on a graph with a long forced loop") {
    // pentagon: single loop of length 5, no shorter cycle exists
    std::vector<Simplex> tops{make_simplex({1, 2}), make_simplex({2, 3}),
                              make_simplex({3, 4}), make_simplex({4, 5}),
                              make_simplex({1, 5})};
    SimplicialNetwork K = explicit_complex(tops);
    TreeDecomposition d = classify(K);
    auto cycles = minimal_one_cavities(K, d);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].length() == 5);
}

TEST_CASE("shorten_basis validates its input dimension") {
    SimplicialNetwork K = parse_simplex_list(read_file("data/torus.simplices"));
    CavityBasis basis = solve_all_cavities(K, classify(K));
    CHECK_THROWS_AS(shorten_basis(K, basis, 5, 5), DimensionError);
    CHECK_THROWS_AS(shorten_basis(K, basis, -1, 5), DimensionError);

    // order 0 is a fixpoint: single-vertex cycles cannot shrink
    auto [s0, moves0] = shorten_basis(K, basis, 0, 5);
    CHECK(moves0.empty());
}
