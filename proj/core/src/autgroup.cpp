#include "skewhad/autgroup.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "skewhad/triples.hpp"

namespace skewhad {

bool is_automorphism(const AssociationScheme& x, const Permutation& sigma) {
    if (sigma.degree() != x.order())
        throw std::invalid_argument("is_automorphism: degree mismatch");
    const int m = x.order();
    if (x.is_nonsymmetric_class2()) {
        // Preserving A_1 is the whole condition for this class.
        const RelationMatrix& a1 = x.relation(1);
        for (Point i = 1; i <= m; ++i)
            for (Point j = 1; j <= m; ++j)
                if (a1.get(sigma(i), sigma(j)) != a1.get(i, j)) return false;
        return true;
    }
    for (int k = 0; k <= x.class_count(); ++k) {
        const RelationMatrix& a = x.relation(k);
        for (Point i = 1; i <= m; ++i)
            for (Point j = 1; j <= m; ++j)
                if (a.get(sigma(i), sigma(j)) != a.get(i, j)) return false;
    }
    return true;
}

namespace {

// Aligned ordered partition pair for the individualization-refinement
// search. Cells hold 0-based points, sorted ascending; cell c on the
// domain side always corresponds to cell c on the image side and the two
// have equal sizes.
struct PartitionPair {
    std::vector<std::vector<int>> dom, img;

    static PartitionPair unit(int m) {
        PartitionPair p;
        std::vector<int> all(m);
        for (int i = 0; i < m; ++i) all[i] = i;
        p.dom.push_back(all);
        p.img.push_back(std::move(all));
        return p;
    }

    bool discrete() const {
        for (const auto& c : dom)
            if (c.size() > 1) return false;
        return true;
    }

    // First smallest non-singleton cell, ties broken by least minimum
    // element; -1 when discrete.
    int target_cell() const {
        int best = -1;
        for (int c = 0; c < static_cast<int>(dom.size()); ++c) {
            if (dom[c].size() < 2) continue;
            if (best < 0 || dom[c].size() < dom[best].size() ||
                (dom[c].size() == dom[best].size() && dom[c][0] < dom[best][0]))
                best = c;
        }
        return best;
    }

    void individualize(int cell, int u, int v) {
        auto split = [](std::vector<std::vector<int>>& side, int c, int point) {
            std::vector<int> rest;
            rest.reserve(side[c].size() - 1);
            for (int p : side[c])
                if (p != point) rest.push_back(p);
            side[c] = {point};
            side.insert(side.begin() + c + 1, std::move(rest));
        };
        split(dom, cell, u);
        split(img, cell, v);
    }

    Permutation extract() const {
        std::vector<Point> images(dom.size());
        for (std::size_t c = 0; c < dom.size(); ++c) images[dom[c][0]] = img[c][0] + 1;
        return Permutation(std::move(images));
    }
};

BitRow cell_mask(const std::vector<int>& cell, int m) {
    BitRow mask(m);
    for (int p : cell) mask.set(p);
    return mask;
}

// Equitable refinement of both sides in lockstep: for a splitter cell s
// and relation color r, each cell is split by the count of r-neighbors
// inside s, sub-cells ordered by ascending count. Returns false when the
// two sides disagree on the count multiset of some cell, which proves no
// automorphism is consistent with the current pair.
bool refine_pair(PartitionPair& p, const std::vector<const RelationMatrix*>& colors, int m) {
    bool swept_clean = false;
    while (!swept_clean) {
        swept_clean = true;
        for (std::size_t s = 0; s < p.dom.size() && swept_clean; ++s) {
            const BitRow mask_dom = cell_mask(p.dom[s], m);
            const BitRow mask_img = cell_mask(p.img[s], m);
            for (const RelationMatrix* color : colors) {
                bool split_any = false;
                std::vector<std::vector<int>> new_dom, new_img;
                new_dom.reserve(p.dom.size());
                new_img.reserve(p.img.size());
                for (std::size_t c = 0; c < p.dom.size(); ++c) {
                    if (p.dom[c].size() == 1) {
                        const int cd = BitRow::and_count(color->row(p.dom[c][0] + 1), mask_dom);
                        const int ci = BitRow::and_count(color->row(p.img[c][0] + 1), mask_img);
                        if (cd != ci) return false;
                        new_dom.push_back(p.dom[c]);
                        new_img.push_back(p.img[c]);
                        continue;
                    }
                    std::vector<std::pair<int, int>> cnt_dom, cnt_img;  // (count, point)
                    cnt_dom.reserve(p.dom[c].size());
                    cnt_img.reserve(p.img[c].size());
                    for (int x : p.dom[c])
                        cnt_dom.emplace_back(BitRow::and_count(color->row(x + 1), mask_dom), x);
                    for (int y : p.img[c])
                        cnt_img.emplace_back(BitRow::and_count(color->row(y + 1), mask_img), y);
                    std::sort(cnt_dom.begin(), cnt_dom.end());
                    std::sort(cnt_img.begin(), cnt_img.end());
                    for (std::size_t t = 0; t < cnt_dom.size(); ++t)
                        if (cnt_dom[t].first != cnt_img[t].first) return false;

                    std::size_t begin = 0;
                    for (std::size_t t = 1; t <= cnt_dom.size(); ++t) {
                        if (t == cnt_dom.size() || cnt_dom[t].first != cnt_dom[begin].first) {
                            std::vector<int> gd, gi;
                            gd.reserve(t - begin);
                            gi.reserve(t - begin);
                            for (std::size_t u = begin; u < t; ++u) {
                                gd.push_back(cnt_dom[u].second);
                                gi.push_back(cnt_img[u].second);
                            }
                            new_dom.push_back(std::move(gd));
                            new_img.push_back(std::move(gi));
                            begin = t;
                        }
                    }
                    if (cnt_dom.front().first != cnt_dom.back().first) split_any = true;
                }
                if (split_any) {
                    p.dom = std::move(new_dom);
                    p.img = std::move(new_img);
                    swept_clean = false;
                    break;
                }
            }
        }
    }
    return true;
}

struct AutSearch {
    const AssociationScheme& x;
    int m;
    std::vector<const RelationMatrix*> colors;

    explicit AutSearch(const AssociationScheme& scheme) : x(scheme), m(scheme.order()) {
        for (int k = 0; k <= x.class_count(); ++k) colors.push_back(&x.relation(k));
    }

    std::optional<Permutation> dfs(const PartitionPair& pair) const {
        const int cell = pair.target_cell();
        if (cell < 0) {
            Permutation candidate = pair.extract();
            if (is_automorphism(x, candidate)) return candidate;
            return std::nullopt;
        }
        const int u = pair.dom[cell][0];
        for (int v : pair.img[cell]) {
            PartitionPair child = pair;
            child.individualize(cell, u, v);
            if (!refine_pair(child, colors, m)) continue;
            if (auto found = dfs(child)) return found;
        }
        return std::nullopt;
    }
};

bool in_orbit(Point from, Point to, const std::vector<Permutation>& gens, int degree) {
    if (from == to) return true;
    std::vector<char> seen(degree, 0);
    std::vector<Point> queue{from};
    seen[from - 1] = 1;
    while (!queue.empty()) {
        const Point p = queue.back();
        queue.pop_back();
        for (const auto& g : gens) {
            const Point q = g(p);
            if (!seen[q - 1]) {
                if (q == to) return true;
                seen[q - 1] = 1;
                queue.push_back(q);
            }
        }
    }
    return false;
}

}  // namespace

PermutationGroup automorphism_group(const AssociationScheme& x) {
    const int m = x.order();
    if (m > kAutDegreeCap)
        throw std::invalid_argument("automorphism_group: degree " + std::to_string(m) + " exceeds the cap of " +
                                    std::to_string(kAutDegreeCap));

    AutSearch search(x);
    PartitionPair root = PartitionPair::unit(m);
    refine_pair(root, search.colors, m);

    // Leftmost path: individualize each base point to itself. The pair
    // states along it drive one stabilizer level each.
    struct LevelState {
        PartitionPair before;
        int cell;
        int base;  // 0-based
    };
    std::vector<LevelState> levels;
    PartitionPair walk = root;
    while (true) {
        const int cell = walk.target_cell();
        if (cell < 0) break;
        const int base = walk.dom[cell][0];
        levels.push_back({walk, cell, base});
        walk.individualize(cell, base, base);
        refine_pair(walk, search.colors, m);
    }

    // Bottom-up over the base: at level k every previously found
    // generator fixes base points 0..k-1, so orbit pruning is sound.
    std::vector<Permutation> gens;
    for (int k = static_cast<int>(levels.size()) - 1; k >= 0; --k) {
        const LevelState& st = levels[k];
        for (int v : st.before.img[st.cell]) {
            if (v == st.base) continue;
            if (in_orbit(st.base + 1, v + 1, gens, m)) continue;
            PartitionPair child = st.before;
            child.individualize(st.cell, st.base, v);
            if (!refine_pair(child, search.colors, m)) continue;
            if (auto found = search.dfs(child)) gens.push_back(*found);
        }
    }

    for (const auto& g : gens) {
        if (!is_automorphism(x, g))
            throw std::logic_error("automorphism_group: generator failed the defining condition");
    }
    return PermutationGroup{m, std::move(gens)};
}

StabilizerChain::StabilizerChain(const PermutationGroup& g) : degree_(g.degree), levels_(g.degree) {
    for (int i = 0; i < degree_; ++i) {
        levels_[i].base = i + 1;
        levels_[i].orbit = {i + 1};
        levels_[i].transversal = {Permutation(degree_)};
        levels_[i].slot.assign(degree_, -1);
        levels_[i].slot[i] = 0;
    }
    for (const auto& gen : g.generators) {
        if (gen.degree() != degree_)
            throw std::invalid_argument("stabilizer chain: generator degree mismatch");
        insert(gen, 0);
    }
    close();
}

void StabilizerChain::rebuild_orbit(int level) {
    // The group at this level is generated by every stored generator
    // whose strip level is at least `level`: those fix the earlier base
    // points. Generators stored deeper can still grow this orbit through
    // intermediate points, so the whole tail participates.
    std::vector<const Permutation*> gens;
    for (int j = level; j < degree_; ++j)
        for (const auto& g : levels_[j].generators) gens.push_back(&g);

    Level& lv = levels_[level];
    lv.orbit = {lv.base};
    lv.transversal = {Permutation(degree_)};
    lv.slot.assign(degree_, -1);
    lv.slot[lv.base - 1] = 0;
    for (std::size_t t = 0; t < lv.orbit.size(); ++t) {
        for (const Permutation* s : gens) {
            const Point q = (*s)(lv.orbit[t]);
            if (lv.slot[q - 1] < 0) {
                lv.slot[q - 1] = static_cast<int>(lv.orbit.size());
                lv.orbit.push_back(q);
                lv.transversal.push_back(lv.transversal[t].then(*s));
            }
        }
    }
}

bool StabilizerChain::sift(Permutation p, int from_level, Permutation* residue, int* stuck_level) const {
    for (int j = from_level; j < degree_; ++j) {
        const Level& lv = levels_[j];
        const Point q = p(lv.base);
        if (q == lv.base) continue;
        if (lv.slot[q - 1] < 0) {
            if (residue) *residue = std::move(p);
            if (stuck_level) *stuck_level = j;
            return false;
        }
        p = p.then(lv.transversal[lv.slot[q - 1]].inverse());
    }
    // The natural base covers every point, so a full sift is the identity.
    return true;
}

void StabilizerChain::insert(Permutation p, int from_level) {
    int i = from_level;
    while (i < degree_ && p(levels_[i].base) == levels_[i].base) ++i;
    if (i == degree_) return;  // identity
    Permutation residue;
    int stuck = 0;
    if (sift(p, i, &residue, &stuck)) return;  // already represented
    levels_[stuck].generators.push_back(std::move(residue));
    for (int j = stuck; j >= 0; --j) rebuild_orbit(j);
}

void StabilizerChain::close() {
    // Fixpoint of Schreier's lemma: a clean pass in which every Schreier
    // generator of every level sifts to the identity certifies the chain.
    // Every insertion strictly grows an orbit, so the restarts terminate.
restart:
    for (int i = 0; i < degree_; ++i) {
        std::vector<const Permutation*> gens;
        for (int j = i; j < degree_; ++j)
            for (const auto& g : levels_[j].generators) gens.push_back(&g);
        const Level& lv = levels_[i];
        for (std::size_t t = 0; t < lv.orbit.size(); ++t) {
            for (const Permutation* gen : gens) {
                const int target = lv.slot[(*gen)(lv.orbit[t]) - 1];
                Permutation schreier = lv.transversal[t].then(*gen).then(lv.transversal[target].inverse());
                if (schreier.is_identity()) continue;
                Permutation residue;
                int stuck = 0;
                if (!sift(std::move(schreier), i + 1, &residue, &stuck)) {
                    levels_[stuck].generators.push_back(std::move(residue));
                    for (int j = stuck; j >= 0; --j) rebuild_orbit(j);
                    goto restart;
                }
            }
        }
    }
}

std::uint64_t StabilizerChain::order() const {
    std::uint64_t n = 1;
    for (const Level& lv : levels_) {
        if (__builtin_mul_overflow(n, static_cast<std::uint64_t>(lv.orbit.size()), &n))
            throw std::overflow_error("group order exceeds 64 bits");
    }
    return n;
}

bool StabilizerChain::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    return sift(p, 0, nullptr, nullptr);
}

std::uint64_t group_order(const PermutationGroup& g) { return StabilizerChain(g).order(); }

std::vector<std::vector<Point>> orbits(const PermutationGroup& g) {
    std::vector<char> seen(g.degree, 0);
    std::vector<std::vector<Point>> out;
    for (Point start = 1; start <= g.degree; ++start) {
        if (seen[start - 1]) continue;
        std::vector<Point> orbit{start};
        seen[start - 1] = 1;
        for (std::size_t t = 0; t < orbit.size(); ++t) {
            for (const auto& gen : g.generators) {
                const Point q = gen(orbit[t]);
                if (!seen[q - 1]) {
                    seen[q - 1] = 1;
                    orbit.push_back(q);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

bool is_transitive(const PermutationGroup& g) { return orbits(g).size() == 1; }

bool verify_block_closure(const AssociationScheme& y, const PermutationGroup& g) {
    if (!y.is_nonsymmetric_class2())
        throw std::invalid_argument("block closure: scheme must be non-symmetric class 2");
    if (y.order() % 2 == 0) throw std::invalid_argument("block closure: order must be odd");
    if (g.degree != y.order()) throw std::invalid_argument("block closure: group degree mismatch");
    const Point n = doubled_center(y);
    const BitRow& center_row = y.relation(1).row(n);
    for (Point j = 1; j <= y.order(); ++j) {
        if (center_row.test(j - 1) != (j < n))
            throw std::invalid_argument("block closure: scheme does not carry the doubled block structure");
    }
    for (const auto& sigma : g.generators) {
        if (sigma(n) != n) return false;
        for (Point a = 1; a < n; ++a)
            if (sigma(a) >= n) return false;
        for (Point a = n + 1; a <= y.order(); ++a)
            if (sigma(a) <= n) return false;
    }
    return true;
}

bool verify_restriction_isomorphism(const AssociationScheme& x, const AssociationScheme& y) {
    const int m = x.order();
    if (m < 7) throw std::invalid_argument("restriction isomorphism: order of X must be at least 7");
    if (!(y == doubled_scheme(x)))
        throw std::invalid_argument("restriction isomorphism: Y is not the doubling of X");
    const Point center = m + 1;

    const PermutationGroup gx = automorphism_group(x);
    const PermutationGroup gy = automorphism_group(y);

    // (a) every Aut(Y) generator fixes the center and couples the blocks
    for (const auto& sigma : gy.generators) {
        if (sigma(center) != center) return false;
        for (Point a = 1; a <= m; ++a)
            if (sigma(a + center) != sigma(a) + center) return false;
    }

    // (b) restrictions land in Aut(X)
    for (const auto& sigma : gy.generators) {
        std::vector<Point> tau(m);
        for (Point a = 1; a <= m; ++a) tau[a - 1] = sigma(a);
        if (!is_automorphism(x, Permutation(std::move(tau)))) return false;
    }

    // (c) every Aut(X) generator lifts to Aut(Y)
    for (const auto& tau : gx.generators) {
        std::vector<Point> lifted(2 * m + 1);
        for (Point a = 1; a <= m; ++a) {
            lifted[a - 1] = tau(a);
            lifted[center + a - 1] = tau(a) + center;
        }
        lifted[center - 1] = center;
        if (!is_automorphism(y, Permutation(std::move(lifted)))) return false;
    }

    // (d) equal orders certify the bijection
    return group_order(gx) == group_order(gy);
}

}  // namespace skewhad
