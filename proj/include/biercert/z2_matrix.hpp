#pragma once

#include <cstdint>
#include <vector>

namespace bier {

/// Dense matrix over GF(2) with rows packed into 64-bit words. Row
/// reduction uses the first row carrying a pivot bit, so every elimination
/// is deterministic.
class Z2Matrix {
public:
    Z2Matrix() = default;
    Z2Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const {
        return bits_[static_cast<std::size_t>(r) * words_ + (c >> 6)] >> (c & 63) & 1;
    }
    void set(int r, int c, bool v);

    int rank() const;

    /// Reduced row-echelon form (stable under repetition).
    Z2Matrix row_reduced() const;

    /// True iff Ax = b has a solution over GF(2). b must have rows() entries.
    bool consistent(const std::vector<std::uint8_t>& b) const;

    bool operator==(const Z2Matrix&) const = default;

private:
    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::uint64_t> bits_;

    // in-place full reduction; returns the rank
    int reduce_in_place();
};

}  // namespace bier
