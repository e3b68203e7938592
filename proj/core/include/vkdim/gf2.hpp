#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace vkdim {

/// Packed vector over GF(2).
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool value = true)
    {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= bit;
        } else {
            words_[i >> 6] &= ~bit;
        }
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& other);
    bool any() const;
    std::size_t count() const;
    /// Index of the lowest set bit at or after `from`, or size() if none.
    std::size_t find_next(std::size_t from) const;
    std::vector<std::size_t> ones() const;
    /// Parity of the dot product.
    bool dot(const BitVector& other) const;

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense row-major matrix over GF(2).
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
    void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }
    const BitVector& row(std::size_t r) const { return rows_[r]; }

    std::size_t rank() const;
    /// Basis of {x : A x = 0}, one vector per free column of the reduced form.
    std::vector<BitVector> kernel_basis() const;
    /// Some x with A x = b, or nullopt when b is outside the column space.
    std::optional<BitVector> solve(const BitVector& b) const;
    BitVector multiply(const BitVector& x) const;
    Gf2Matrix transposed() const;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

}  // namespace vkdim
