#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "prepro/rational.hpp"

namespace prepro {

/// Dense matrix of exact rationals. Ambient dimensions at desk scale stay in
/// the low thousands, so density is acceptable; the elimination routines skip
/// zero entries, which keeps the mostly-sparse inputs of this project cheap.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(std::vector<std::vector<Rat>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rat> row(std::size_t i) const;
    void append_row(const std::vector<Rat>& r);

    bool operator==(const RationalMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

/// Reduced row-echelon form and rank. Exact arithmetic, no pivoting
/// heuristics needed; the result is the canonical RREF of the row space.
std::pair<RationalMatrix, std::size_t> rref(RationalMatrix m);

/// In-place variant; returns pivot columns in increasing order.
std::vector<std::size_t> rref_in_place(RationalMatrix& m);

/// Matrix-vector product.
std::vector<Rat> matvec(const RationalMatrix& m, const std::vector<Rat>& v);

/// Expresses v as a linear combination of the given rows, if possible.
/// Returns the coefficients (one per row of `rows`) or nullopt when v lies
/// outside their span.
std::optional<std::vector<Rat>> express_in_rows(const RationalMatrix& rows,
                                                const std::vector<Rat>& v);

}  // namespace prepro
