#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vkdim {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transposed() const;
    std::vector<Integer> multiply(const std::vector<Integer>& x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rational_rank(const IntMatrix& a);

/// Basis of the rational kernel {x : A x = 0}, each vector scaled to a
/// primitive integer vector.
std::vector<std::vector<Integer>> rational_kernel_basis(const IntMatrix& a);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<Integer> smith_invariant_factors(const IntMatrix& a);

/// Some integer x with A x = b, or nullopt when none exists.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& b);

/// Exact determinant of a square rational matrix.
Rational determinant(std::vector<std::vector<Rational>> m);

/// Unique solution of the square system M x = b, or nullopt if M is singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> b);

}  // namespace vkdim
