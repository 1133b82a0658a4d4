#include "prepro/subspace.hpp"

#include "prepro/errors.hpp"

namespace prepro {

namespace {

RationalMatrix canonical_basis(std::size_t ambient, RationalMatrix rows) {
    if (rows.rows() > 0 && rows.cols() != ambient)
        throw InvalidArgument("basis width does not match ambient dimension");
    auto [red, rank] = rref(std::move(rows));
    RationalMatrix out(rank, ambient);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < ambient; ++j) out.at(i, j) = red.at(i, j);
    return out;
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim, RationalMatrix rows)
    : ambient_(ambient_dim), basis_(canonical_basis(ambient_dim, std::move(rows))) {}

Subspace Subspace::full(std::size_t ambient_dim) {
    return Subspace(ambient_dim, RationalMatrix::identity(ambient_dim));
}

Subspace Subspace::span_of(std::size_t ambient_dim,
                           const std::vector<std::vector<Rat>>& vectors) {
    RationalMatrix m(vectors.size(), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient_dim)
            throw InvalidArgument("vector length does not match ambient dimension");
        for (std::size_t j = 0; j < ambient_dim; ++j) m.at(i, j) = vectors[i][j];
    }
    return Subspace(ambient_dim, std::move(m));
}

bool Subspace::contains(const std::vector<Rat>& v) const {
    if (v.size() != ambient_) throw InvalidArgument("vector length mismatch");
    std::vector<Rat> residual = v;
    // Reduce against RREF rows; pivot of row i is the first nonzero column.
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t c = 0;
        while (c < ambient_ && is_zero(basis_.at(i, c))) ++c;
        if (c == ambient_) continue;
        if (is_zero(residual[c])) continue;
        Rat f = residual[c];
        for (std::size_t j = c; j < ambient_; ++j)
            if (!is_zero(basis_.at(i, j))) residual[j] -= f * basis_.at(i, j);
    }
    for (const Rat& x : residual)
        if (!is_zero(x)) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw InvalidArgument("ambient dimension mismatch");
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw InvalidArgument("ambient dimension mismatch");
    RationalMatrix m(a.dim() + b.dim(), a.ambient_dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient_dim(); ++j) m.at(i, j) = a.basis().at(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.ambient_dim(); ++j)
            m.at(a.dim() + i, j) = b.basis().at(i, j);
    return Subspace(a.ambient_dim(), std::move(m));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw InvalidArgument("ambient dimension mismatch");
    const std::size_t n = a.ambient_dim();
    // Zassenhaus: rows [A | A] and [B | 0]; reduced rows with zero left half
    // carry an intersection basis in the right half.
    RationalMatrix m(a.dim() + b.dim(), 2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = a.basis().at(i, j);
            m.at(i, n + j) = a.basis().at(i, j);
        }
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(a.dim() + i, j) = b.basis().at(i, j);
    rref_in_place(m);
    RationalMatrix inter(0, n);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = is_zero(m.at(i, j));
        if (!left_zero) continue;
        std::vector<Rat> right(n);
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
            right[j] = m.at(i, n + j);
            nonzero = nonzero || !is_zero(right[j]);
        }
        if (nonzero) inter.append_row(right);
    }
    return Subspace(n, std::move(inter));
}

Subspace kernel(const RationalMatrix& m) {
    RationalMatrix red = m;
    auto pivots = rref_in_place(red);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (auto c : pivots) is_pivot[c] = true;
    RationalMatrix basis(0, nc);
    for (std::size_t free_col = 0; free_col < nc; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(nc);
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red.at(i, free_col);
        basis.append_row(v);
    }
    return Subspace(nc, std::move(basis));
}

}  // namespace prepro
