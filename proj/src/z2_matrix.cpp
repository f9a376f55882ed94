#include "biercert/z2_matrix.hpp"

#include <stdexcept>

#include "biercert/errors.hpp"

namespace bier {

Z2Matrix::Z2Matrix(int rows, int cols) : rows_(rows), cols_(cols), words_((cols + 63) / 64) {
    if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be nonnegative");
    bits_.assign(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(words_), 0);
}

void Z2Matrix::set(int r, int c, bool v) {
    auto& word = bits_[static_cast<std::size_t>(r) * words_ + (c >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    if (v)
        word |= bit;
    else
        word &= ~bit;
}

int Z2Matrix::reduce_in_place() {
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        const int w = c >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (bits_[static_cast<std::size_t>(r) * words_ + w] & bit) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int i = 0; i < words_; ++i)
                std::swap(bits_[static_cast<std::size_t>(pivot) * words_ + i],
                          bits_[static_cast<std::size_t>(rank) * words_ + i]);
        for (int r = 0; r < rows_; ++r) {
            if (r == rank) continue;
            if (bits_[static_cast<std::size_t>(r) * words_ + w] & bit)
                for (int i = w; i < words_; ++i)
                    bits_[static_cast<std::size_t>(r) * words_ + i] ^=
                        bits_[static_cast<std::size_t>(rank) * words_ + i];
        }
        ++rank;
    }
    return rank;
}

int Z2Matrix::rank() const {
    Z2Matrix copy = *this;
    return copy.reduce_in_place();
}

Z2Matrix Z2Matrix::row_reduced() const {
    Z2Matrix copy = *this;
    copy.reduce_in_place();
    return copy;
}

bool Z2Matrix::consistent(const std::vector<std::uint8_t>& b) const {
    if (static_cast<int>(b.size()) != rows_)
        throw InputError("right-hand side length does not match the row count");
    Z2Matrix aug(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int w = 0; w < words_; ++w)
            aug.bits_[static_cast<std::size_t>(r) * aug.words_ + w] =
                bits_[static_cast<std::size_t>(r) * words_ + w];
        if (b[static_cast<std::size_t>(r)]) aug.set(r, cols_, true);
    }
    return aug.rank() == rank();
}

}  // namespace bier
