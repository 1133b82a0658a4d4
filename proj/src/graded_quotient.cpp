#include "prepro/graded_quotient.hpp"

#include <algorithm>

#include "prepro/errors.hpp"

namespace prepro {

GradedQuotient::GradedQuotient(const QuadraticPresentation& p) : pres_(p) {
    const Quiver& q = pres_.quiver();
    Level l0;
    for (const auto& v : q.vertices()) l0.basis.push_back(Path::trivial(v.id));
    Level l1;
    for (const auto& a : q.arrows()) l1.basis.push_back(Path::of_word({a.id}));
    for (auto* lv : {&l0, &l1})
        for (std::size_t i = 0; i < lv->basis.size(); ++i) lv->index[lv->basis[i]] = i;
    levels_.push_back(std::move(l0));
    levels_.push_back(std::move(l1));
}

void GradedQuotient::extend_to(std::size_t l) {
    while (levels_.size() <= l) build_level(levels_.size());
}

const GradedQuotient::SparseVec* GradedQuotient::killed_lookup(std::size_t l,
                                                               const Path& p) const {
    auto it = levels_[l].killed.find(p);
    return it == levels_[l].killed.end() ? nullptr : &it->second;
}

void GradedQuotient::build_level(std::size_t l) {
    const Quiver& q = pres_.quiver();
    const Level& prev = levels_[l - 1];
    const Level& prev2 = levels_[l - 2];
    Level cur;

    // Candidates grouped by (source, target); global order is word-lex since
    // prev.basis is word-lex sorted and the extending arrow is least
    // significant.
    struct Block {
        std::vector<Path> candidates;
        std::map<Path, std::size_t> col;
        std::vector<std::vector<Rat>> rows;
    };
    std::map<std::pair<VertexId, VertexId>, Block> blocks;
    std::vector<Path> all_candidates;
    for (const Path& b : prev.basis) {
        const VertexId bs = path_source(q, b);
        const VertexId bt = path_target(q, b);
        for (const ArrowId a : q.arrows_into(bs)) {
            Path cand = b.extended_by(a);
            Block& blk = blocks[{q.arrow(a).source, bt}];
            blk.col[cand] = blk.candidates.size();
            blk.candidates.push_back(cand);
            all_candidates.push_back(std::move(cand));
        }
    }

    // Relation images: for b' of degree l-2 and relation m with
    // target(m) = source(b'), reduce b' (x) x through level l-1 and extend by
    // the first-acting relation letter y.
    for (const Path& b2 : prev2.basis) {
        const VertexId b2s = path_source(q, b2);
        const VertexId b2t = path_target(q, b2);
        for (const PathVector& rel : pres_.relations()) {
            const auto h = homogeneity(q, rel);
            if (!h || h->target != b2s) continue;
            Block& blk = blocks[{h->source, b2t}];
            std::vector<Rat> row(blk.candidates.size());
            bool nonzero = false;
            for (const auto& [mpath, mcoef] : rel.terms()) {
                const ArrowId x = mpath.word[0];  // acts second
                const ArrowId y = mpath.word[1];  // acts first
                const Path bx = b2.extended_by(x);
                auto emit = [&](const Path& bprev, const Rat& c) {
                    row[blk.col.at(bprev.extended_by(y))] += c;
                    nonzero = true;
                };
                if (auto idx = prev.index.find(bx); idx != prev.index.end()) {
                    emit(prev.basis[idx->second], mcoef);
                } else if (const SparseVec* red = killed_lookup(l - 1, bx)) {
                    for (const auto& [bi, c] : *red) emit(prev.basis[bi], mcoef * c);
                } else {
                    throw InvalidArgument("internal: candidate missing from level");
                }
            }
            if (nonzero) blk.rows.push_back(std::move(row));
        }
    }

    // Per-block elimination; pivots are killed, the rest survive.
    std::map<Path, SparseVec> killed_local;  // combos over surviving PATHS first
    std::vector<Path> survivors;
    for (auto& [key, blk] : blocks) {
        RationalMatrix m(blk.rows.size(), blk.candidates.size());
        for (std::size_t i = 0; i < blk.rows.size(); ++i)
            for (std::size_t j = 0; j < blk.candidates.size(); ++j)
                m.at(i, j) = std::move(blk.rows[i][j]);
        auto pivots = rref_in_place(m);
        std::vector<bool> is_pivot(blk.candidates.size(), false);
        for (auto c : pivots) is_pivot[c] = true;
        for (std::size_t j = 0; j < blk.candidates.size(); ++j)
            if (!is_pivot[j]) survivors.push_back(blk.candidates[j]);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            SparseVec combo;
            for (std::size_t j = pivots[i] + 1; j < blk.candidates.size(); ++j)
                if (!is_pivot[j] && !prepro::is_zero(m.at(i, j)))
                    combo.emplace_back(j, -m.at(i, j));  // path-index within block for now
            killed_local[blk.candidates[pivots[i]]] = std::move(combo);
        }
        blk.rows.clear();
    }

    std::sort(survivors.begin(), survivors.end());
    cur.basis = std::move(survivors);
    for (std::size_t i = 0; i < cur.basis.size(); ++i) cur.index[cur.basis[i]] = i;

    // Resolve killed combos to global basis indices.
    for (auto& [key, blk] : blocks) {
        (void)key;
        for (const Path& cand : blk.candidates) {
            auto it = killed_local.find(cand);
            if (it == killed_local.end()) continue;
            SparseVec resolved;
            for (const auto& [local_j, c] : it->second)
                resolved.emplace_back(cur.index.at(blk.candidates[local_j]), c);
            std::sort(resolved.begin(), resolved.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            cur.killed[cand] = std::move(resolved);
        }
    }

    levels_.push_back(std::move(cur));
}

const std::vector<Path>& GradedQuotient::basis(std::size_t l) {
    extend_to(l);
    return levels_[l].basis;
}

DimMatrix GradedQuotient::dims(std::size_t l) {
    extend_to(l);
    const Quiver& q = pres_.quiver();
    DimMatrix d(q.vertices().size());
    for (const Path& p : levels_[l].basis)
        ++d.at(q.vertex_index(path_target(q, p)), q.vertex_index(path_source(q, p)));
    return d;
}

long GradedQuotient::total_dim(std::size_t l) {
    extend_to(l);
    return static_cast<long>(levels_[l].basis.size());
}

std::vector<Rat> GradedQuotient::reduce(const PathVector& v) {
    const Quiver& q = pres_.quiver();
    auto h = homogeneity(q, v);
    if (!h && !v.empty()) throw InvalidArgument("reduce requires a homogeneous vector");
    const std::size_t l = v.empty() ? 0 : h->length;
    extend_to(l);
    std::vector<Rat> out(levels_[l].basis.size());
    for (const auto& [p, coef] : v.terms()) {
        if (l <= 1) {
            out[levels_[l].index.at(p)] += coef;
            continue;
        }
        // Peel the word from the last-acting end; each step is a candidate
        // of the next level.
        SparseVec cur{{levels_[1].index.at(Path::of_word({p.word[0]})), Rat(1)}};
        for (std::size_t k = 2; k <= l; ++k) {
            const ArrowId a = p.word[k - 1];
            std::map<std::size_t, Rat> next;
            for (const auto& [bi, c] : cur) {
                Path cand = levels_[k - 1].basis[bi].extended_by(a);
                if (auto it = levels_[k].index.find(cand); it != levels_[k].index.end()) {
                    next[it->second] += c;
                } else if (const SparseVec* red = killed_lookup(k, cand)) {
                    for (const auto& [bj, cc] : *red) next[bj] += c * cc;
                } else {
                    throw InvalidArgument("internal: candidate missing during reduce");
                }
            }
            cur.clear();
            for (auto& [i, c] : next)
                if (!prepro::is_zero(c)) cur.emplace_back(i, std::move(c));
        }
        for (const auto& [i, c] : cur) out[i] += coef * c;
    }
    return out;
}

bool GradedQuotient::is_zero(const PathVector& v) {
    for (const Rat& c : reduce(v))
        if (!prepro::is_zero(c)) return false;
    return true;
}

}  // namespace prepro
