#include "skewhad/schurian.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "skewhad/triples.hpp"

namespace skewhad {

const char* to_string(SchurianReason r) {
    switch (r) {
        case SchurianReason::intransitive_group: return "intransitive_group";
        case SchurianReason::orbital_mismatch: return "orbital_mismatch";
        case SchurianReason::orbitals_coincide: return "orbitals_coincide";
    }
    return "?";
}

namespace {

// Union-find over the m*m ordered pairs.
struct PairForest {
    std::vector<int> parent;

    explicit PairForest(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

AssociationScheme orbital_scheme(const PermutationGroup& g) {
    const int m = g.degree;
    if (m < 1) throw std::invalid_argument("orbital_scheme: empty point set");
    if (m > kAutDegreeCap)
        throw std::invalid_argument("orbital_scheme: degree exceeds the cap of " + std::to_string(kAutDegreeCap));
    if (!is_transitive(g)) throw std::invalid_argument("orbital_scheme: group must be transitive");

    const auto id = [m](Point x, Point y) { return (x - 1) * m + (y - 1); };
    PairForest forest(static_cast<std::size_t>(m) * m);
    for (const auto& sigma : g.generators)
        for (Point x = 1; x <= m; ++x)
            for (Point y = 1; y <= m; ++y) forest.unite(id(x, y), id(sigma(x), sigma(y)));

    // Orbitals ordered by least pair; the diagonal orbit holds (1,1) and
    // therefore always comes first.
    std::vector<int> index_of_root(static_cast<std::size_t>(m) * m, -1);
    int classes = 0;
    for (int cell = 0; cell < m * m; ++cell) {
        const int root = forest.find(cell);
        if (index_of_root[root] < 0) index_of_root[root] = classes++;
    }

    std::vector<RelationMatrix> rels(classes, RelationMatrix(m));
    for (Point x = 1; x <= m; ++x)
        for (Point y = 1; y <= m; ++y)
            rels[index_of_root[forest.find(id(x, y))]].set(x, y);

    AssociationScheme scheme(std::move(rels));
    try {
        verify_scheme_axioms(scheme.relations());
    } catch (const axiom_error& e) {
        throw std::logic_error(std::string("orbital_scheme: axiom check failed internally: ") + e.what());
    }
    return scheme;
}

namespace {

// Do the two relation lists induce the same set partition of X x X?
bool same_partition(const AssociationScheme& a, const AssociationScheme& b) {
    if (a.order() != b.order()) return false;
    const int m = a.order();
    std::vector<int> a_to_b(a.class_count() + 1, -1);
    std::vector<int> b_to_a(b.class_count() + 1, -1);
    for (Point i = 1; i <= m; ++i) {
        for (Point j = 1; j <= m; ++j) {
            const int ka = a.relation_index_at(i, j);
            const int kb = b.relation_index_at(i, j);
            if (a_to_b[ka] < 0) a_to_b[ka] = kb;
            if (b_to_a[kb] < 0) b_to_a[kb] = ka;
            if (a_to_b[ka] != kb || b_to_a[kb] != ka) return false;
        }
    }
    return true;
}

}  // namespace

SchurianVerdict is_schurian(const AssociationScheme& x) {
    const PermutationGroup g = automorphism_group(x);
    SchurianVerdict v;
    v.aut_order = group_order(g);
    if (!is_transitive(g)) {
        // Short circuit: the orbital scheme is never built.
        v.is_schurian = false;
        v.reason = SchurianReason::intransitive_group;
        v.orbital_class_count = 0;
        return v;
    }
    const AssociationScheme omega = orbital_scheme(g);
    v.orbital_class_count = omega.class_count();
    if (same_partition(x, omega)) {
        v.is_schurian = true;
        v.reason = SchurianReason::orbitals_coincide;
    } else {
        v.is_schurian = false;
        v.reason = SchurianReason::orbital_mismatch;
    }
    return v;
}

std::string TheoremReport::to_text() const {
    std::ostringstream out;
    for (const auto& s : stages) {
        out << s.name << ": " << (s.pass ? "PASS" : "FAIL");
        if (!s.details.empty()) out << ' ' << s.details;
        out << "\n";
    }
    out << "THEOREM: " << (verified ? "VERIFIED" : "FAILED") << " for m=" << m << "\n";
    return out.str();
}

TheoremReport verify_main_theorem(const AssociationScheme& x) {
    const int m = x.order();
    if (m < 7)
        throw std::invalid_argument(
            "theorem: order m=" + std::to_string(m) +
            " is below 7; the order-7 doubled scheme (Fano plane) has a transitive automorphism "
            "group and is schurian, so the non-schurian statement needs m >= 7");
    if (!x.is_nonsymmetric_class2())
        throw std::invalid_argument("theorem: input must be a non-symmetric class-2 scheme");
    try {
        verify_scheme_axioms(x.relations());
    } catch (const axiom_error& e) {
        throw std::invalid_argument(std::string("theorem: input is not an association scheme: ") + e.what());
    }

    TheoremReport report;
    report.m = m;
    bool all = true;
    const auto stage = [&](const std::string& name, bool pass, const std::string& details) {
        report.stages.push_back({name, pass, details});
        all = all && pass;
    };

    std::string current = "doubled_scheme";
    try {
        const AssociationScheme y = doubled_scheme(x);
        const Point center = doubled_center(y);
        {
            std::ostringstream d;
            d << "order=" << y.order() << " center=" << center;
            stage("doubled_scheme", y.order() == 2 * m + 1, d.str());
        }
        current = "scheme_axioms";
        {
            const SchemeVerification ver = verify_scheme_axioms(y.relations());
            std::ostringstream d;
            d << "classes=" << y.class_count() << " symmetric=" << (ver.symmetric ? "true" : "false")
              << " commutative=" << (ver.commutative ? "true" : "false");
            stage("scheme_axioms", y.class_count() == 2 && !ver.symmetric && ver.commutative, d.str());
        }
        current = "class2_products";
        {
            const bool ok = verify_class2_products(y);
            const int my = y.order();
            std::ostringstream d;
            d << "coefficients=(" << (my - 3) / 4 << ',' << (my + 1) / 4 << ',' << (my - 1) / 2 << ")";
            stage("class2_products", ok, d.str());
        }
        current = "nu_extremes";
        {
            const NuExtremesCheck nx = nu_extremes(y);
            std::ostringstream d;
            d << "max_nu=" << nx.report.max_nu << " extremal_triples=" << nx.report.extremal_triples.size()
              << " through_center=" << nx.expected_through_center;
            stage("nu_extremes", nx.all_ok(), d.str());
        }
        current = "aut_base";
        const PermutationGroup gx = automorphism_group(x);
        const std::uint64_t ox = group_order(gx);
        {
            std::ostringstream d;
            d << "order=" << ox << " generators=" << gx.generators.size();
            stage("aut_base", true, d.str());
        }
        current = "aut_doubled";
        const PermutationGroup gy = automorphism_group(y);
        const std::uint64_t oy = group_order(gy);
        {
            std::ostringstream d;
            d << "order=" << oy << " generators=" << gy.generators.size();
            stage("aut_doubled", true, d.str());
        }
        current = "block_closure";
        {
            const bool closed = verify_block_closure(y, gy);
            const bool transitive = is_transitive(gy);
            std::ostringstream d;
            d << "blocks_fixed=" << (closed ? "true" : "false")
              << " transitive=" << (transitive ? "true" : "false");
            stage("block_closure", closed && !transitive, d.str());
        }
        current = "restriction_isomorphism";
        {
            const bool iso = verify_restriction_isomorphism(x, y);
            std::ostringstream d;
            d << "orders=(" << ox << ',' << oy << ")";
            stage("restriction_isomorphism", iso, d.str());
        }
        current = "non_schurian";
        {
            const SchurianVerdict v = is_schurian(y);
            std::ostringstream d;
            d << "reason=" << to_string(v.reason) << " aut_order=" << v.aut_order;
            stage("non_schurian", !v.is_schurian && v.reason == SchurianReason::intransitive_group, d.str());
        }
    } catch (const std::exception& e) {
        stage(current, false, e.what());
    }

    report.verified = all;
    return report;
}

}  // namespace skewhad
