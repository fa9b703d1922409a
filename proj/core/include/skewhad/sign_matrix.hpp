#ifndef SKEWHAD_SIGN_MATRIX_HPP
#define SKEWHAD_SIGN_MATRIX_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "skewhad/common.hpp"

namespace skewhad {

/// Square matrix with entries in {+1, -1}. All arithmetic on these is
/// exact integer arithmetic; there are no tolerances anywhere.
class SignMatrix {
public:
    SignMatrix() = default;

    /// Order-n matrix, all entries +1.
    explicit SignMatrix(int order);

    int order() const { return order_; }

    /// Entry at row i, column j (1-based); always +1 or -1.
    int at(Point i, Point j) const { return cells_[idx(i, j)]; }

    /// value must be +1 or -1.
    void set(Point i, Point j, int value);

    SignMatrix transposed() const;

    bool operator==(const SignMatrix&) const = default;

private:
    std::size_t idx(Point i, Point j) const {
        return static_cast<std::size_t>(i - 1) * order_ + (j - 1);
    }

    int order_ = 0;
    std::vector<std::int8_t> cells_;
};

/// Reads the ".shm" text format: line 1 is the decimal order n, followed
/// by n lines of n space-separated "+"/"-" tokens. Anything else,
/// including trailing garbage, is rejected with parse_error.
SignMatrix read_sign_matrix(std::istream& in);

/// Writes the exact ".shm" format with LF line endings.
void write_sign_matrix(std::ostream& out, const SignMatrix& m);

SignMatrix load_sign_matrix(const std::string& path);
void save_sign_matrix(const std::string& path, const SignMatrix& m);

}  // namespace skewhad

#endif
