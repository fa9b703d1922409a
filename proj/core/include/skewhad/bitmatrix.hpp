#ifndef SKEWHAD_BITMATRIX_HPP
#define SKEWHAD_BITMATRIX_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "skewhad/common.hpp"

namespace skewhad {

/// Fixed-size bit vector used for relation rows, neighbor sets and cell
/// masks. Bit b corresponds to point b+1. The fused intersection counts
/// are the work horses of the triple enumeration and the partition
/// refinement, so they avoid temporaries.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(int size) : size_(size), words_((size + 63) / 64, 0) {
        if (size < 0) throw std::invalid_argument("BitRow: negative size");
    }

    int size() const { return size_; }

    bool test(int bit) const {
        return (words_[static_cast<std::size_t>(bit) >> 6] >> (bit & 63)) & 1u;
    }
    void set(int bit) { words_[static_cast<std::size_t>(bit) >> 6] |= std::uint64_t{1} << (bit & 63); }
    void reset(int bit) { words_[static_cast<std::size_t>(bit) >> 6] &= ~(std::uint64_t{1} << (bit & 63)); }

    int count() const {
        int n = 0;
        for (std::uint64_t w : words_) n += std::popcount(w);
        return n;
    }

    bool operator==(const BitRow&) const = default;

    static int and_count(const BitRow& a, const BitRow& b) {
        int n = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            n += std::popcount(a.words_[i] & b.words_[i]);
        return n;
    }

    static int and_count(const BitRow& a, const BitRow& b, const BitRow& c) {
        int n = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            n += std::popcount(a.words_[i] & b.words_[i] & c.words_[i]);
        return n;
    }

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Square 0/1 matrix with bit-packed rows. Rows and columns are 1-based
/// points, like every point-valued interface in this library.
class RelationMatrix {
public:
    RelationMatrix() = default;
    explicit RelationMatrix(int order) : order_(order), rows_(order, BitRow(order)) {
        if (order < 1 || order > kMaxOrder)
            throw std::invalid_argument("RelationMatrix: order out of range");
    }

    static RelationMatrix identity(int order) {
        RelationMatrix m(order);
        for (Point i = 1; i <= order; ++i) m.set(i, i);
        return m;
    }

    int order() const { return order_; }

    bool get(Point i, Point j) const { return rows_[i - 1].test(j - 1); }
    void set(Point i, Point j) { rows_[i - 1].set(j - 1); }

    /// Row i as a bit vector; bit b is column b+1.
    const BitRow& row(Point i) const { return rows_[i - 1]; }

    RelationMatrix transposed() const {
        RelationMatrix t(order_);
        for (Point i = 1; i <= order_; ++i)
            for (Point j = 1; j <= order_; ++j)
                if (get(i, j)) t.set(j, i);
        return t;
    }

    bool is_identity() const {
        for (Point i = 1; i <= order_; ++i) {
            if (!get(i, i) || rows_[i - 1].count() != 1) return false;
        }
        return true;
    }

    int ones_count() const {
        int n = 0;
        for (const BitRow& r : rows_) n += r.count();
        return n;
    }

    bool operator==(const RelationMatrix&) const = default;

private:
    int order_ = 0;
    std::vector<BitRow> rows_;
};

}  // namespace skewhad

#endif
