#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "skewhad/autgroup.hpp"
#include "skewhad/hadamard.hpp"

using namespace skewhad;

namespace {

AssociationScheme paley_scheme(int q) { return scheme_from_skew_hadamard(paley_skew_hadamard(q)); }

// Element-set equality against the brute-force filter of S_m.
void check_against_brute_force(const AssociationScheme& x) {
    const auto brute = oracle::brute_force_automorphisms(x);
    const PermutationGroup g = automorphism_group(x);
    const StabilizerChain chain(g);
    CHECK(chain.order() == brute.size());
    for (const auto& images : brute) CHECK(chain.contains(Permutation(images)));
}

}  // namespace

TEST_SUITE("autgroup") {

TEST_CASE("order-3 scheme: the full group is the cyclic rotation group") {
    const AssociationScheme x = oracle::directed_triangle();
    CHECK(oracle::brute_force_automorphisms(x).size() == 3);
    check_against_brute_force(x);
    CHECK(is_transitive(automorphism_group(x)));
}

TEST_CASE("order-7 Paley scheme: group of order 21, transitive") {
    const AssociationScheme x = paley_scheme(7);
    const auto brute = oracle::brute_force_automorphisms(x);
    CHECK(brute.size() == 21);
    check_against_brute_force(x);
    const PermutationGroup g = automorphism_group(x);
    CHECK(group_order(g) == 21);
    CHECK(is_transitive(g));
}

TEST_CASE("order-7 scheme from the doubled paley(3) matrix") {
    const AssociationScheme x = scheme_from_skew_hadamard(doubling(paley_skew_hadamard(3)));
    CHECK(oracle::brute_force_automorphisms(x).size() == 21);
    check_against_brute_force(x);
}

TEST_CASE("generic-mode search matches brute force on {I, J-I} schemes") {
    for (int m : {4, 5, 8}) {
        const AssociationScheme x = oracle::complete_scheme(m);
        check_against_brute_force(x);  // Aut = S_m
    }
}

TEST_CASE("pentagon scheme: the dihedral group of order 10") {
    const AssociationScheme x = oracle::pentagon();
    CHECK(oracle::brute_force_automorphisms(x).size() == 10);
    check_against_brute_force(x);
}

TEST_CASE("order-15 doubled scheme: order 21 with the center fixed") {
    const AssociationScheme y = doubled_scheme(paley_scheme(7));
    const PermutationGroup g = automorphism_group(y);
    CHECK(group_order(g) == 21);
    for (const Permutation& sigma : g.generators) CHECK(sigma(8) == 8);
    CHECK(orbits(g) == std::vector<std::vector<Point>>{
                           {1, 2, 3, 4, 5, 6, 7}, {8}, {9, 10, 11, 12, 13, 14, 15}});
    CHECK_FALSE(is_transitive(g));
}

TEST_CASE("group order via the stabilizer chain") {
    CHECK(group_order(PermutationGroup{5, {}}) == 1);

    std::vector<Point> cycle{2, 3, 4, 5, 6, 7, 1};
    CHECK(group_order(PermutationGroup{7, {Permutation(cycle)}}) == 7);

    // S4 from a transposition and a 4-cycle.
    const PermutationGroup s4{4, {Permutation({2, 1, 3, 4}), Permutation({2, 3, 4, 1})}};
    CHECK(group_order(s4) == 24);
    CHECK(StabilizerChain(s4).contains(Permutation({4, 3, 2, 1})));
    CHECK_FALSE(StabilizerChain(s4).contains(Permutation({1, 2, 3})));
}

TEST_CASE("orbit partitions") {
    CHECK(orbits(PermutationGroup{5, {}}) ==
          std::vector<std::vector<Point>>{{1}, {2}, {3}, {4}, {5}});
    std::vector<Point> cycle{2, 3, 4, 5, 6, 7, 1};
    CHECK(orbits(PermutationGroup{7, {Permutation(cycle)}}) ==
          std::vector<std::vector<Point>>{{1, 2, 3, 4, 5, 6, 7}});
    CHECK_FALSE(is_transitive(PermutationGroup{2, {}}));
}

TEST_CASE("group order is divisible by every orbit size") {
    const AssociationScheme y = doubled_scheme(paley_scheme(7));
    const PermutationGroup g = automorphism_group(y);
    const std::uint64_t order = group_order(g);
    for (const auto& orbit : orbits(g)) CHECK(order % orbit.size() == 0);
}

TEST_CASE("generators preserve the transpose relation as well") {
    for (int q : {7, 11}) {
        const AssociationScheme y = doubled_scheme(paley_scheme(q));
        const RelationMatrix& b2 = y.relation(2);
        for (const Permutation& sigma : automorphism_group(y).generators) {
            for (Point i = 1; i <= y.order(); ++i)
                for (Point j = 1; j <= y.order(); ++j)
                    CHECK(b2.get(sigma(i), sigma(j)) == b2.get(i, j));
        }
    }
}

TEST_CASE("block closure on doubled schemes") {
    const AssociationScheme y = doubled_scheme(paley_scheme(7));
    PermutationGroup g = automorphism_group(y);
    CHECK(verify_block_closure(y, g));

    // Injecting the transposition (1 8) breaks it.
    std::vector<Point> swap18(15);
    for (Point i = 1; i <= 15; ++i) swap18[i - 1] = i;
    swap18[0] = 8;
    swap18[7] = 1;
    g.generators.emplace_back(swap18);
    CHECK_FALSE(verify_block_closure(y, g));

    // The order-7 doubling of the triangle has a transitive group.
    const AssociationScheme y7 = doubled_scheme(oracle::directed_triangle());
    const PermutationGroup g7 = automorphism_group(y7);
    CHECK(is_transitive(g7));
    CHECK_FALSE(verify_block_closure(y7, g7));
}

TEST_CASE("block closure rejects non-doubled input") {
    const AssociationScheme x19 = paley_scheme(19);
    CHECK_THROWS_AS(verify_block_closure(x19, automorphism_group(x19)), std::invalid_argument);
}

TEST_CASE("restriction isomorphism for m = 7") {
    const AssociationScheme x = paley_scheme(7);
    CHECK(verify_restriction_isomorphism(x, doubled_scheme(x)));
}

TEST_CASE("restriction isomorphism for m = 11 with the affine oracle") {
    const AssociationScheme x = paley_scheme(11);
    const AssociationScheme y = doubled_scheme(x);
    CHECK(verify_restriction_isomorphism(x, y));
    const std::uint64_t affine = oracle::affine_qr_automorphism_count(x, 11);
    CHECK(affine == 55);
    CHECK(group_order(automorphism_group(x)) == affine);
    CHECK(group_order(automorphism_group(y)) == affine);
}

TEST_CASE("restriction isomorphism rejects mismatched pairs") {
    const AssociationScheme x7 = paley_scheme(7);
    const AssociationScheme y23 = doubled_scheme(paley_scheme(11));
    CHECK_THROWS_AS(verify_restriction_isomorphism(x7, y23), std::invalid_argument);
    CHECK_THROWS_AS(verify_restriction_isomorphism(oracle::directed_triangle(),
                                                   doubled_scheme(oracle::directed_triangle())),
                    std::invalid_argument);  // m < 7
}

TEST_CASE("degree cap") {
    CHECK_THROWS_AS(automorphism_group(oracle::complete_scheme(513)), std::invalid_argument);
}

}  // TEST_SUITE
