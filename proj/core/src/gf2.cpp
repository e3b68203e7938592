#include "vkdim/gf2.hpp"

#include <bit>

namespace vkdim {

BitVector& BitVector::operator^=(const BitVector& other)
{
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

bool BitVector::any() const
{
    for (auto w : words_) {
        if (w) return true;
    }
    return false;
}

std::size_t BitVector::count() const
{
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitVector::find_next(std::size_t from) const
{
    if (from >= size_) return size_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (w) {
            std::size_t i = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            return i < size_ ? i : size_;
        }
        if (++wi >= words_.size()) return size_;
        w = words_[wi];
    }
}

std::vector<std::size_t> BitVector::ones() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = find_next(0); i < size_; i = find_next(i + 1)) out.push_back(i);
    return out;
}

bool BitVector::dot(const BitVector& other) const
{
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

namespace {

// Reduced row echelon form in place; returns pivot columns by row. Every row
// operation is mirrored on `rhs` when provided.
std::vector<std::size_t> reduce(std::vector<BitVector>& rows, std::size_t cols,
                                std::vector<bool>* rhs)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i].get(c)) {
                rows[i] ^= rows[r];
                if (rhs) (*rhs)[i] = (*rhs)[i] != (*rhs)[r];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t Gf2Matrix::rank() const
{
    std::vector<BitVector> work = rows_;
    return reduce(work, cols_, nullptr).size();
}

std::vector<BitVector> Gf2Matrix::kernel_basis() const
{
    std::vector<BitVector> work = rows_;
    const auto pivots = reduce(work, cols_, nullptr);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        BitVector x(cols_);
        x.set(free);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (work[r].get(free)) x.set(pivots[r]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<BitVector> Gf2Matrix::solve(const BitVector& b) const
{
    std::vector<BitVector> work = rows_;
    std::vector<bool> rhs(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) rhs[i] = b.get(i);
    const auto pivots = reduce(work, cols_, &rhs);
    for (std::size_t r = pivots.size(); r < work.size(); ++r) {
        if (rhs[r]) return std::nullopt;
    }
    BitVector x(cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (rhs[r]) x.set(pivots[r]);
    }
    return x;
}

BitVector Gf2Matrix::multiply(const BitVector& x) const
{
    BitVector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].dot(x)) out.set(r);
    }
    return out;
}

Gf2Matrix Gf2Matrix::transposed() const
{
    Gf2Matrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (auto c : rows_[r].ones()) t.set(c, r);
    }
    return t;
}

}  // namespace vkdim
