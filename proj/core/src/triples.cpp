#include "skewhad/triples.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace skewhad {

namespace {

void require_class2(const AssociationScheme& y, const char* who) {
    if (!y.is_nonsymmetric_class2())
        throw std::invalid_argument(std::string(who) + ": scheme must be non-symmetric class 2");
}

void require_point(const AssociationScheme& y, Point i, const char* who) {
    if (i < 1 || i > y.order())
        throw std::invalid_argument(std::string(who) + ": point " + std::to_string(i) + " out of range");
}

}  // namespace

std::vector<Point> neighbor_set(const AssociationScheme& y, Point i) {
    require_class2(y, "neighbor_set");
    require_point(y, i, "neighbor_set");
    std::vector<Point> out;
    const BitRow& row = y.relation(1).row(i);
    for (Point j = 1; j <= y.order(); ++j)
        if (row.test(j - 1)) out.push_back(j);
    return out;
}

int nu(const AssociationScheme& y, Point i, Point j, Point k) {
    require_class2(y, "nu");
    require_point(y, i, "nu");
    require_point(y, k, "nu");
    if (!(i < j && j < k)) throw std::invalid_argument("nu: indices must satisfy i < j < k");
    const RelationMatrix& b1 = y.relation(1);
    return BitRow::and_count(b1.row(i), b1.row(j), b1.row(k));
}

int pair_intersection_size(const AssociationScheme& y, Point i, Point j) {
    require_class2(y, "pair_intersection_size");
    require_point(y, i, "pair_intersection_size");
    require_point(y, j, "pair_intersection_size");
    if (i == j) throw std::invalid_argument("pair_intersection_size: points must differ");
    const RelationMatrix& b1 = y.relation(1);
    return BitRow::and_count(b1.row(i), b1.row(j));
}

NuReport nu_survey(const AssociationScheme& y) {
    require_class2(y, "nu_survey");
    const int m = y.order();
    const RelationMatrix& b1 = y.relation(1);

    NuReport r;
    r.order = m;
    r.pair_size = (m - 3) / 4;
    r.max_nu = 0;
    for (Point i = 1; i <= m; ++i) {
        for (Point j = i + 1; j <= m; ++j) {
            for (Point k = j + 1; k <= m; ++k) {
                const int v = BitRow::and_count(b1.row(i), b1.row(j), b1.row(k));
                ++r.histogram[v];
                if (v > r.max_nu) {
                    r.max_nu = v;
                    r.extremal_triples.clear();
                }
                if (v == r.max_nu) r.extremal_triples.push_back({i, j, k});
            }
        }
    }
    return r;
}

NuExtremesCheck nu_extremes(const AssociationScheme& y) {
    require_class2(y, "nu_extremes");
    const int m = y.order();
    if (m % 2 == 0) throw std::invalid_argument("nu_extremes: order must be odd");
    const Point n = (m + 1) / 2;
    if (n % 4 != 0)
        throw std::invalid_argument("nu_extremes: a doubled scheme has order 2n-1 with n = 0 (mod 4)");
    if (n < 8)
        throw std::invalid_argument("nu_extremes: the extremal characterization needs n >= 8 (order >= 15); "
                                    "use the survey for smaller schemes");
    // Standard doubled labeling: the center's out-neighborhood is the first block.
    const BitRow& center_row = y.relation(1).row(n);
    for (Point j = 1; j <= m; ++j) {
        if (center_row.test(j - 1) != (j < n))
            throw std::invalid_argument("nu_extremes: scheme does not carry the doubled block structure "
                                        "(row of point " + std::to_string(n) + " is not {1.." +
                                        std::to_string(n - 1) + "})");
    }

    NuExtremesCheck c;
    c.report = nu_survey(y);
    c.expected_max = (n - 2) / 2;
    c.expected_through_center = (n - 4) / 4;
    c.max_ok = (c.report.max_nu == c.expected_max);

    std::vector<std::array<Point, 3>> expected;
    for (Point a = 1; a <= n - 1; ++a) expected.push_back({a, n, n + a});
    c.extremal_ok = (c.report.extremal_triples == expected);

    c.through_center_ok = true;
    const RelationMatrix& b1 = y.relation(1);
    for (Point i = 1; i <= m; ++i) {
        for (Point j = i + 1; j <= m; ++j) {
            for (Point k = j + 1; k <= m; ++k) {
                if (i != n && j != n && k != n) continue;
                if (j == n && k == n + i) continue;  // the extremal family (a, n, n+a)
                if (BitRow::and_count(b1.row(i), b1.row(j), b1.row(k)) != c.expected_through_center)
                    c.through_center_ok = false;
            }
        }
    }
    return c;
}

void write_nu_report(std::ostream& out, const NuReport& r) {
    out << "order " << r.order << "\n";
    out << "pair_size " << r.pair_size << "\n";
    out << "max_nu " << r.max_nu << "\n";
    out << "count_extremal " << r.extremal_triples.size() << "\n";
    for (const auto& t : r.extremal_triples) out << t[0] << ' ' << t[1] << ' ' << t[2] << "\n";
    for (const auto& [value, count] : r.histogram) out << value << ' ' << count << "\n";
}

}  // namespace skewhad
