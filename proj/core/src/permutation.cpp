#include "skewhad/permutation.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace skewhad {

Permutation::Permutation(int degree) {
    if (degree < 0) throw std::invalid_argument("permutation: negative degree");
    images_.resize(degree);
    for (Point i = 1; i <= degree; ++i) images_[i - 1] = i;
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
    const int m = degree();
    std::vector<char> seen(m, 0);
    for (Point v : images_) {
        if (v < 1 || v > m || seen[v - 1])
            throw std::invalid_argument("permutation: image list is not a bijection on {1..m}");
        seen[v - 1] = 1;
    }
}

Permutation Permutation::then(const Permutation& g) const {
    if (degree() != g.degree()) throw std::invalid_argument("permutation: degree mismatch");
    std::vector<Point> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = g.images_[images_[i] - 1];
    Permutation p;
    p.images_ = std::move(out);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<Point> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i] - 1] = static_cast<Point>(i + 1);
    Permutation p;
    p.images_ = std::move(out);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<Point>(i + 1)) return false;
    return true;
}

PermutationGroup read_permutation_group(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error("group: missing header line");
    std::istringstream head(line);
    int degree = 0, count = 0;
    std::string extra;
    if (!(head >> degree >> count) || (head >> extra))
        throw parse_error("group: header must be 'degree g'");
    if (degree < 0 || count < 0) throw parse_error("group: negative header values");

    PermutationGroup g;
    g.degree = degree;
    for (int t = 0; t < count; ++t) {
        if (!std::getline(in, line)) throw parse_error("group: missing generator " + std::to_string(t + 1));
        std::istringstream row(line);
        std::vector<Point> images(degree);
        for (int i = 0; i < degree; ++i) {
            if (!(row >> images[i])) throw parse_error("group: generator line is short");
        }
        if (row >> extra) throw parse_error("group: generator line has trailing tokens");
        try {
            g.generators.emplace_back(std::move(images));
        } catch (const std::invalid_argument& e) {
            throw parse_error(std::string("group: ") + e.what());
        }
    }
    return g;
}

void write_permutation_group(std::ostream& out, const PermutationGroup& g) {
    out << g.degree << ' ' << g.generators.size() << "\n";
    for (const auto& p : g.generators) {
        for (int i = 1; i <= g.degree; ++i) {
            if (i > 1) out << ' ';
            out << p(i);
        }
        out << "\n";
    }
}

}  // namespace skewhad
