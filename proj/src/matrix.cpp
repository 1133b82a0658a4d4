#include "prepro/matrix.hpp"

#include "prepro/errors.hpp"

namespace prepro {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return RationalMatrix();
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw InvalidArgument("ragged row lengths");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

std::vector<Rat> RationalMatrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void RationalMatrix::append_row(const std::vector<Rat>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw InvalidArgument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

std::vector<std::size_t> rref_in_place(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    const std::size_t nr = m.rows(), nc = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && is_zero(m.at(p, c))) ++p;
        if (p == nr) continue;
        if (p != r)
            for (std::size_t j = c; j < nc; ++j) swap(m.at(r, j), m.at(p, j));
        if (m.at(r, c) != 1) {
            Rat inv = 1 / m.at(r, c);
            m.at(r, c) = 1;
            for (std::size_t j = c + 1; j < nc; ++j)
                if (!is_zero(m.at(r, j))) m.at(r, j) *= inv;
        }
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            Rat f = m.at(i, c);
            m.at(i, c) = 0;
            for (std::size_t j = c + 1; j < nc; ++j)
                if (!is_zero(m.at(r, j))) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::pair<RationalMatrix, std::size_t> rref(RationalMatrix m) {
    auto pivots = rref_in_place(m);
    return {std::move(m), pivots.size()};
}

std::vector<Rat> matvec(const RationalMatrix& m, const std::vector<Rat>& v) {
    if (v.size() != m.cols()) throw InvalidArgument("matrix-vector size mismatch");
    std::vector<Rat> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_zero(m.at(i, j)) && !is_zero(v[j])) out[i] += m.at(i, j) * v[j];
    return out;
}

std::optional<std::vector<Rat>> express_in_rows(const RationalMatrix& rows,
                                                const std::vector<Rat>& v) {
    if (v.size() != rows.cols() && rows.rows() > 0)
        throw InvalidArgument("vector length mismatch");
    // Row-reduce [rows | I]; reducing v against the left block then records a
    // combination over the RREF rows, which the right block maps back to the
    // original rows.
    const std::size_t nr = rows.rows(), nc = rows.cols();
    RationalMatrix aug(nr, nc + nr);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) aug.at(i, j) = rows.at(i, j);
        aug.at(i, nc + i) = 1;
    }
    // Eliminate left block only.
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    {
        std::size_t r = 0;
        for (std::size_t c = 0; c < nc && r < nr; ++c) {
            std::size_t p = r;
            while (p < nr && is_zero(aug.at(p, c))) ++p;
            if (p == nr) continue;
            if (p != r)
                for (std::size_t j = 0; j < nc + nr; ++j) swap(aug.at(r, j), aug.at(p, j));
            Rat inv = 1 / aug.at(r, c);
            for (std::size_t j = 0; j < nc + nr; ++j)
                if (!is_zero(aug.at(r, j))) aug.at(r, j) *= inv;
            for (std::size_t i = 0; i < nr; ++i) {
                if (i == r || is_zero(aug.at(i, c))) continue;
                Rat f = aug.at(i, c);
                for (std::size_t j = 0; j < nc + nr; ++j)
                    if (!is_zero(aug.at(r, j))) aug.at(i, j) -= f * aug.at(r, j);
            }
            pivots.emplace_back(r, c);
            ++r;
        }
    }
    std::vector<Rat> residual = v;
    std::vector<Rat> mu(nr);
    for (auto [r, c] : pivots) {
        if (is_zero(residual[c])) continue;
        Rat f = residual[c];
        for (std::size_t j = 0; j < nc; ++j)
            if (!is_zero(aug.at(r, j))) residual[j] -= f * aug.at(r, j);
        mu[r] = f;
    }
    for (const Rat& x : residual)
        if (!is_zero(x)) return std::nullopt;
    std::vector<Rat> coeffs(nr);
    for (std::size_t r = 0; r < nr; ++r) {
        if (is_zero(mu[r])) continue;
        for (std::size_t i = 0; i < nr; ++i)
            if (!is_zero(aug.at(r, nc + i))) coeffs[i] += mu[r] * aug.at(r, nc + i);
    }
    return coeffs;
}

}  // namespace prepro
