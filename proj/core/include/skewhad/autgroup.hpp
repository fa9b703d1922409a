#ifndef SKEWHAD_AUTGROUP_HPP
#define SKEWHAD_AUTGROUP_HPP

#include <cstdint>
#include <vector>

#include "skewhad/permutation.hpp"
#include "skewhad/scheme.hpp"

namespace skewhad {

/// Hard cap on the automorphism search degree; larger inputs are
/// rejected instead of running unbounded searches.
inline constexpr int kAutDegreeCap = 512;

/// sigma is an automorphism iff (A_k) at (sigma i, sigma j) equals
/// (A_k) at (i, j) for every relation and every cell. For non-symmetric
/// class-2 schemes preserving A_1 alone is equivalent and is what gets
/// tested.
bool is_automorphism(const AssociationScheme& x, const Permutation& sigma);

/// Generators of the full automorphism group, computed by equitable
/// partition refinement on the relation colors plus
/// individualization-refinement backtracking. Deterministic: target cell
/// is the first smallest non-singleton cell, branch values ascend, and
/// every returned generator has been re-verified against the defining
/// condition.
PermutationGroup automorphism_group(const AssociationScheme& x);

/// Stabilizer chain over the natural base 1, 2, 3, ... giving exact
/// order and membership tests.
class StabilizerChain {
public:
    explicit StabilizerChain(const PermutationGroup& g);

    int degree() const { return degree_; }

    /// Exact group order; throws std::overflow_error past 2^64.
    std::uint64_t order() const;

    bool contains(const Permutation& p) const;

private:
    struct Level {
        Point base = 0;
        std::vector<Permutation> generators;
        std::vector<Point> orbit;              // discovery order, orbit[0] == base
        std::vector<Permutation> transversal;  // transversal[t] maps base to orbit[t]
        std::vector<int> slot;                 // slot[p-1] = index into orbit, or -1
    };

    void insert(Permutation p, int from_level);
    void rebuild_orbit(int level);
    bool sift(Permutation p, int from_level, Permutation* residue, int* stuck_level) const;
    void close();

    int degree_ = 0;
    std::vector<Level> levels_;
};

std::uint64_t group_order(const PermutationGroup& g);

/// Orbit partition of {1..degree}: cells sorted ascending, listed by
/// their minimum element.
std::vector<std::vector<Point>> orbits(const PermutationGroup& g);

bool is_transitive(const PermutationGroup& g);

/// For a doubled scheme of order 2n-1 with center n: true iff every
/// generator fixes n and maps {1..n-1} and {n+1..2n-1} onto themselves.
bool verify_block_closure(const AssociationScheme& y, const PermutationGroup& g);

/// Certifies Aut(Y) ~ Aut(X) for Y = doubled_scheme(X), m = order(X) >= 7:
/// (a) every generator of Aut(Y) fixes m+1 and couples the outer blocks,
///     sigma(a + m + 1) = sigma(a) + m + 1;
/// (b) its restriction to {1..m} is an automorphism of X;
/// (c) every generator of Aut(X) lifts to an automorphism of Y;
/// (d) the two group orders agree.
/// Throws std::invalid_argument if Y is not the doubling of X.
bool verify_restriction_isomorphism(const AssociationScheme& x, const AssociationScheme& y);

}  // namespace skewhad

#endif
