#ifndef SKEWHAD_TRIPLES_HPP
#define SKEWHAD_TRIPLES_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "skewhad/scheme.hpp"

namespace skewhad {

/// Out-neighborhood N(i) = {j : (A_1)_ij = 1} in the digraph of the
/// first non-identity relation. Sorted ascending, 1-based.
std::vector<Point> neighbor_set(const AssociationScheme& y, Point i);

/// nu(i,j,k) = |N(i) & N(j) & N(k)| for i < j < k.
int nu(const AssociationScheme& y, Point i, Point j, Point k);

/// |N(i) & N(j)| for i != j; equals (m-3)/4 on every pair of a
/// non-symmetric class-2 scheme of order m.
int pair_intersection_size(const AssociationScheme& y, Point i, Point j);

/// Result of the exhaustive enumeration of all C(m,3) triples.
struct NuReport {
    int order = 0;
    int pair_size = 0;
    int max_nu = 0;
    std::vector<std::array<Point, 3>> extremal_triples;  // lexicographic
    std::map<int, std::int64_t> histogram;               // value -> count

    bool operator==(const NuReport&) const = default;
};

/// Survey mode: enumerate every triple of any non-symmetric class-2
/// scheme and report max, extremal triples and the histogram. No
/// structural assertions.
NuReport nu_survey(const AssociationScheme& y);

/// Assert mode over a doubled scheme of order 2n-1, n >= 8, in standard
/// labeling (center point n with N(n) = {1..n-1}).
struct NuExtremesCheck {
    NuReport report;
    int expected_max = 0;          // (n-2)/2
    int expected_through_center = 0;  // (n-4)/4
    bool max_ok = false;           // max_nu == (n-2)/2
    bool extremal_ok = false;      // extremal set == {(a, n, n+a) : 1 <= a <= n-1}
    bool through_center_ok = false;  // every other triple containing n has nu = (n-4)/4

    bool all_ok() const { return max_ok && extremal_ok && through_center_ok; }
};

/// Runs the survey and checks the extremal characterization: the maximum
/// (n-2)/2 is attained exactly on the n-1 triples (a, n, n+a), and every
/// other triple through the center has nu = (n-4)/4. Rejects schemes
/// without the doubled block structure and n < 8.
NuExtremesCheck nu_extremes(const AssociationScheme& y);

/// Key-value text report: order, pair_size, max_nu, count_extremal, one
/// "i j k" line per extremal triple, then "value count" histogram lines
/// ascending.
void write_nu_report(std::ostream& out, const NuReport& r);

}  // namespace skewhad

#endif
