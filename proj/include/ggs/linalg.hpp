#pragma once

#include <cstdint>
#include <vector>

#include "ggs/field.hpp"

namespace ggs {

/// Dense row-major matrix of field element codes.
class GFMatrix {
public:
    GFMatrix() = default;
    GFMatrix(std::int64_t rows, std::int64_t cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), 0) {}

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    Field::Element get(std::int64_t r, std::int64_t c) const {
        return Field::Element{a_[static_cast<std::size_t>(r * cols_ + c)]};
    }
    void set(std::int64_t r, std::int64_t c, Field::Element v) {
        a_[static_cast<std::size_t>(r * cols_ + c)] = v.code;
    }
    std::uint32_t* row_data(std::int64_t r) { return a_.data() + r * cols_; }
    const std::uint32_t* row_data(std::int64_t r) const { return a_.data() + r * cols_; }

    bool operator==(const GFMatrix&) const = default;

private:
    std::int64_t rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> a_;
};

std::int64_t rank(const Field& f, GFMatrix m);

/// Reduced row echelon form: leftmost pivots, rows processed in order,
/// pivots normalized to 1, full elimination above and below.
GFMatrix rref(const Field& f, GFMatrix m);

/// Nonzero rows of rref(m): a canonical basis of the row space.
GFMatrix row_basis(const Field& f, const GFMatrix& m);

/// Basis of the right kernel {x : m x = 0}, one solution per row; has
/// cols(m) - rank(m) rows.
GFMatrix nullspace(const Field& f, const GFMatrix& m);

/// Standard bilinear form of two rows.
Field::Element dot(const Field& f, const std::uint32_t* a, const std::uint32_t* b, std::int64_t len);

}  // namespace ggs
