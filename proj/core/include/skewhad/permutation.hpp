#ifndef SKEWHAD_PERMUTATION_HPP
#define SKEWHAD_PERMUTATION_HPP

#include <iosfwd>
#include <vector>

#include "skewhad/common.hpp"

namespace skewhad {

/// Bijection on {1..m} stored as the image list. Composition is
/// left-to-right: a.then(b) maps i to b(a(i)).
class Permutation {
public:
    Permutation() = default;

    /// Identity on {1..degree}.
    explicit Permutation(int degree);

    /// images[i-1] is the image of point i; must be a bijection on {1..m}.
    explicit Permutation(std::vector<Point> images);

    int degree() const { return static_cast<int>(images_.size()); }

    Point operator()(Point i) const { return images_[i - 1]; }

    const std::vector<Point>& images() const { return images_; }

    Permutation then(const Permutation& g) const;
    Permutation inverse() const;
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<Point> images_;
};

/// Degree plus a finite generator list. An empty generator list is the
/// trivial group.
struct PermutationGroup {
    int degree = 0;
    std::vector<Permutation> generators;
};

/// Text format: line 1 is "degree g", then g lines of degree-length
/// 1-based image lists in one-line notation.
PermutationGroup read_permutation_group(std::istream& in);
void write_permutation_group(std::ostream& out, const PermutationGroup& g);

}  // namespace skewhad

#endif
