#include "doctest.h"

#include <sstream>

#include "oracles.hpp"
#include "skewhad/hadamard.hpp"
#include "skewhad/schurian.hpp"

using namespace skewhad;

namespace {

AssociationScheme paley_scheme(int q) { return scheme_from_skew_hadamard(paley_skew_hadamard(q)); }

}  // namespace

TEST_SUITE("schurian") {

TEST_CASE("orbital scheme of the cyclic group of order 3") {
    const PermutationGroup c3{3, {Permutation({2, 3, 1})}};
    const AssociationScheme omega = orbital_scheme(c3);
    CHECK(omega == oracle::directed_triangle());
    CHECK(omega.class_count() == 2);
}

TEST_CASE("orbital scheme of Aut(Fano) reproduces the scheme") {
    const AssociationScheme x = paley_scheme(7);
    const AssociationScheme omega = orbital_scheme(automorphism_group(x));
    CHECK(omega == x);
}

TEST_CASE("orbital scheme of the symmetric group is {I, J-I}") {
    const PermutationGroup s4{4, {Permutation({2, 1, 3, 4}), Permutation({2, 3, 4, 1})}};
    const AssociationScheme omega = orbital_scheme(s4);
    CHECK(omega.class_count() == 1);
    CHECK(omega == oracle::complete_scheme(4));
}

TEST_CASE("orbital scheme rejects intransitive groups") {
    CHECK_THROWS_AS(orbital_scheme(PermutationGroup{3, {}}), std::invalid_argument);
    const AssociationScheme y = doubled_scheme(paley_scheme(7));
    CHECK_THROWS_AS(orbital_scheme(automorphism_group(y)), std::invalid_argument);
}

TEST_CASE("orbital schemes always pass the axioms") {
    const PermutationGroup c7{7, {Permutation({2, 3, 4, 5, 6, 7, 1})}};
    const AssociationScheme omega = orbital_scheme(c7);
    CHECK_NOTHROW(verify_scheme_axioms(omega.relations()));
    CHECK(omega.class_count() == 6);
}

TEST_CASE("relations refine into the orbitals of a transitive subgroup") {
    // The translation subgroup of Aut(Fano): every Fano relation is a
    // union of its 2-orbits.
    const AssociationScheme x = paley_scheme(7);
    const PermutationGroup c7{7, {Permutation({2, 3, 4, 5, 6, 7, 1})}};
    const AssociationScheme omega = orbital_scheme(c7);
    CHECK(omega.class_count() >= x.class_count());
    for (int k = 0; k <= omega.class_count(); ++k) {
        int owner = -1;
        for (Point i = 1; i <= 7; ++i)
            for (Point j = 1; j <= 7; ++j) {
                if (!omega.relation(k).get(i, j)) continue;
                const int in_x = x.relation_index_at(i, j);
                if (owner < 0) owner = in_x;
                CHECK(owner == in_x);
            }
    }
}

TEST_CASE("schurian verdicts") {
    SUBCASE("order-7 Paley scheme is schurian") {
        const SchurianVerdict v = is_schurian(paley_scheme(7));
        CHECK(v.is_schurian);
        CHECK(v.reason == SchurianReason::orbitals_coincide);
        CHECK(v.orbital_class_count == 2);
        CHECK(v.aut_order == 21);
    }
    SUBCASE("order-15 doubled scheme is not, by intransitivity") {
        const SchurianVerdict v = is_schurian(doubled_scheme(paley_scheme(7)));
        CHECK_FALSE(v.is_schurian);
        CHECK(v.reason == SchurianReason::intransitive_group);
        CHECK(v.orbital_class_count == 0);  // short circuit: orbitals never built
        CHECK(v.aut_order == 21);
    }
    SUBCASE("order-23 doubled scheme is not") {
        const SchurianVerdict v = is_schurian(doubled_scheme(paley_scheme(11)));
        CHECK_FALSE(v.is_schurian);
        CHECK(v.reason == SchurianReason::intransitive_group);
        CHECK(v.aut_order == 55);
    }
    SUBCASE("small schurian fixed points") {
        CHECK(is_schurian(oracle::directed_triangle()).is_schurian);
        CHECK(is_schurian(oracle::complete_scheme(4)).is_schurian);
        CHECK(is_schurian(oracle::pentagon()).is_schurian);
    }
}

TEST_CASE("theorem pipeline for m = 7") {
    const TheoremReport r = verify_main_theorem(paley_scheme(7));
    CHECK(r.verified);
    CHECK(r.m == 7);
    CHECK(r.stages.size() == 9);
    for (const auto& s : r.stages) CHECK(s.pass);

    const std::string text = r.to_text();
    CHECK(text.find("aut_base: PASS order=21") != std::string::npos);
    CHECK(text.find("aut_doubled: PASS order=21") != std::string::npos);
    CHECK(text.find("non_schurian: PASS reason=intransitive_group") != std::string::npos);
    CHECK(text.rfind("THEOREM: VERIFIED for m=7\n") == text.size() - 26);
}

TEST_CASE("theorem pipeline for m = 11") {
    const TheoremReport r = verify_main_theorem(paley_scheme(11));
    CHECK(r.verified);
    const std::string text = r.to_text();
    CHECK(text.find("restriction_isomorphism: PASS orders=(55,55)") != std::string::npos);
}

TEST_CASE("theorem pipeline rejects small orders") {
    CHECK_THROWS_WITH_AS(verify_main_theorem(oracle::directed_triangle()),
                         doctest::Contains("schurian"), std::invalid_argument);
    CHECK_THROWS_AS(verify_main_theorem(oracle::pentagon()), std::invalid_argument);
}

}  // TEST_SUITE
