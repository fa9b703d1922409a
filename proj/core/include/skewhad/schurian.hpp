#ifndef SKEWHAD_SCHURIAN_HPP
#define SKEWHAD_SCHURIAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "skewhad/autgroup.hpp"
#include "skewhad/scheme.hpp"

namespace skewhad {

enum class SchurianReason {
    intransitive_group,  // Aut(X) is intransitive; orbital comparison never ran
    orbital_mismatch,    // 2-orbit partition of Aut(X) differs from X
    orbitals_coincide,   // schurian
};

const char* to_string(SchurianReason r);

struct SchurianVerdict {
    bool is_schurian = false;
    SchurianReason reason = SchurianReason::intransitive_group;
    int orbital_class_count = 0;  // 0 when the orbital scheme was never built
    std::uint64_t aut_order = 0;
};

/// Scheme of the 2-orbits of a transitive group: R_0 is the diagonal,
/// the other orbitals are ordered by their lexicographically least pair.
/// The result passes verify_scheme_axioms. Rejects intransitive groups.
AssociationScheme orbital_scheme(const PermutationGroup& g);

/// X is schurian iff Aut(X) is transitive and its 2-orbit partition
/// equals X's relation partition (as set partitions of X x X).
SchurianVerdict is_schurian(const AssociationScheme& x);

struct TheoremStage {
    std::string name;
    bool pass = false;
    std::string details;
};

/// Full pipeline over a non-symmetric class-2 scheme X of order m >= 7:
/// doubling, axiom and product verification, the nu extremal check, both
/// automorphism groups, block closure, the restriction isomorphism and
/// the schurian verdict, one pass/fail line per stage.
struct TheoremReport {
    int m = 0;
    std::vector<TheoremStage> stages;
    bool verified = false;

    /// One "<stage>: PASS|FAIL <details>" line per stage plus the final
    /// "THEOREM: VERIFIED|FAILED for m=<m>" line, LF-terminated.
    std::string to_text() const;
};

TheoremReport verify_main_theorem(const AssociationScheme& x);

}  // namespace skewhad

#endif
