#include "prepro/koszul.hpp"

#include <algorithm>
#include <map>

#include "prepro/errors.hpp"

namespace prepro {

KoszulComplex::KoszulComplex(const QuadraticPresentation& p) : pres_(p) {
    const Quiver& q = pres_.quiver();
    Level l0;
    for (const auto& v : q.vertices()) l0.vecs.push_back({v.id, v.id, {}});
    Level l1;
    for (const auto& a : q.arrows()) l1.vecs.push_back({a.source, a.target, {}});
    Level l2;
    for (const PathVector& rel : pres_.relations()) {
        auto h = homogeneity(q, rel);
        Vec v{h->source, h->target, {}};
        for (const auto& [mp, mc] : rel.terms())
            v.comp.emplace_back(q.arrow_index(mp.word[0]), mp.word[1], mc);
        l2.vecs.push_back(std::move(v));
    }
    levels_.push_back(std::move(l0));
    levels_.push_back(std::move(l1));
    levels_.push_back(std::move(l2));
}

void KoszulComplex::extend_to(std::size_t l) {
    while (levels_.size() <= l) build_level(levels_.size());
}

void KoszulComplex::build_level(std::size_t l) {
    const Quiver& q = pres_.quiver();
    const Level& prev = levels_[l - 1];
    const Level& prev2 = levels_[l - 2];
    Level cur;

    // Pre-reduce the relation blocks once: per (source, target) pair the
    // relation rows in RREF with their pivot columns.
    struct MBlock {
        std::vector<Path> basis;
        std::map<Path, std::size_t> col;
        RationalMatrix rows;
        std::vector<std::size_t> pivots;
    };
    std::map<std::pair<VertexId, VertexId>, MBlock> mblocks;
    auto mblock_for = [&](VertexId s, VertexId t) -> MBlock& {
        auto it = mblocks.find({s, t});
        if (it != mblocks.end()) return it->second;
        MBlock blk;
        blk.basis = enumerate_paths(q, 2, s, t);
        for (std::size_t i = 0; i < blk.basis.size(); ++i) blk.col[blk.basis[i]] = i;
        RationalMatrix m(0, blk.basis.size());
        for (const PathVector& rel : pres_.relations()) {
            auto h = homogeneity(q, rel);
            if (h->source != s || h->target != t) continue;
            m.append_row(coordinates(rel, blk.basis));
        }
        blk.pivots = rref_in_place(m);
        blk.rows = std::move(m);
        return mblocks.emplace(std::make_pair(s, t), std::move(blk)).first->second;
    };

    // Work per (source, target) block of candidates.
    std::map<std::pair<VertexId, VertexId>, std::vector<std::pair<std::size_t, ArrowId>>>
        cand_blocks;
    for (std::size_t i = 0; i < prev.vecs.size(); ++i)
        for (const ArrowId a : q.arrows_into(prev.vecs[i].source))
            cand_blocks[{q.arrow(a).source, prev.vecs[i].target}].emplace_back(i, a);

    for (const auto& [key, cands] : cand_blocks) {
        const VertexId s = key.first;
        // Constraint rows indexed by (prev2 vector m, position in its pair
        // block); build them column by column.
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_index;
        std::vector<std::vector<Rat>> cols(cands.size());
        auto row_of = [&](std::size_t m, std::size_t pos) {
            auto [it, inserted] = row_index.emplace(std::make_pair(m, pos), row_index.size());
            return it->second;
        };
        for (std::size_t cidx = 0; cidx < cands.size(); ++cidx) {
            const auto& [i, a] = cands[cidx];
            // Pair vectors per prev2 component, then reduced modulo M.
            std::map<std::size_t, std::vector<Rat>> pairs;
            for (const auto& [m, b, e] : prev.vecs[i].comp) {
                MBlock& blk = mblock_for(s, prev2.vecs[m].source);
                auto& vec = pairs.try_emplace(m, blk.basis.size()).first->second;
                vec[blk.col.at(Path::of_word({b, a}))] += e;
            }
            for (auto& [m, vec] : pairs) {
                MBlock& blk = mblock_for(s, prev2.vecs[m].source);
                for (std::size_t r = 0; r < blk.pivots.size(); ++r) {
                    const std::size_t pc = blk.pivots[r];
                    if (is_zero(vec[pc])) continue;
                    Rat f = vec[pc];
                    for (std::size_t j = pc; j < vec.size(); ++j)
                        if (!is_zero(blk.rows.at(r, j))) vec[j] -= f * blk.rows.at(r, j);
                }
                for (std::size_t j = 0; j < vec.size(); ++j) {
                    if (is_zero(vec[j])) continue;
                    cols[cidx].resize(std::max(cols[cidx].size(), row_of(m, j) + 1));
                    cols[cidx][row_of(m, j)] = vec[j];
                }
            }
        }
        RationalMatrix constraints(row_index.size(), cands.size());
        for (std::size_t cidx = 0; cidx < cands.size(); ++cidx)
            for (std::size_t r = 0; r < cols[cidx].size(); ++r)
                constraints.at(r, cidx) = std::move(cols[cidx][r]);
        Subspace ker = kernel(constraints);
        for (std::size_t i = 0; i < ker.dim(); ++i) {
            Vec v{key.first, key.second, {}};
            for (std::size_t j = 0; j < cands.size(); ++j) {
                const Rat& c = ker.basis().at(i, j);
                if (!is_zero(c)) v.comp.emplace_back(cands[j].first, cands[j].second, c);
            }
            cur.vecs.push_back(std::move(v));
        }
    }
    levels_.push_back(std::move(cur));
}

void KoszulComplex::expand_level(std::size_t l) {
    Level& lv = levels_[l];
    if (lv.expanded_ready) return;
    const Quiver& q = pres_.quiver();
    lv.expanded.clear();
    if (l == 0) {
        for (const Vec& v : lv.vecs)
            lv.expanded.push_back(PathVector::term(Path::trivial(v.source), 1));
    } else if (l == 1) {
        for (const auto& a : q.arrows())
            lv.expanded.push_back(PathVector::term(Path::of_word({a.id}), 1));
    } else {
        expand_level(l - 1);
        const Level& prev = levels_[l - 1];
        for (const Vec& v : lv.vecs) {
            PathVector pv;
            for (const auto& [i, a, c] : v.comp)
                for (const auto& [p, e] : prev.expanded[i].terms())
                    pv.add_term(p.extended_by(a), c * e);
            lv.expanded.push_back(std::move(pv));
        }
    }
    lv.expanded_ready = true;
}

long KoszulComplex::total_dim(std::size_t l) {
    extend_to(l);
    return static_cast<long>(levels_[l].vecs.size());
}

DimMatrix KoszulComplex::dims(std::size_t l) {
    extend_to(l);
    const Quiver& q = pres_.quiver();
    DimMatrix d(q.vertices().size());
    for (const Vec& v : levels_[l].vecs)
        ++d.at(q.vertex_index(v.target), q.vertex_index(v.source));
    return d;
}

const std::vector<PathVector>& KoszulComplex::generators(std::size_t l) {
    extend_to(l);
    expand_level(l);
    return levels_[l].expanded;
}

const std::vector<std::tuple<std::size_t, ArrowId, Rat>>& KoszulComplex::components(
    std::size_t l, std::size_t j) {
    extend_to(l);
    return levels_[l].vecs.at(j).comp;
}

VertexId KoszulComplex::generator_source(std::size_t l, std::size_t j) {
    extend_to(l);
    return levels_[l].vecs.at(j).source;
}

VertexId KoszulComplex::generator_target(std::size_t l, std::size_t j) {
    extend_to(l);
    return levels_[l].vecs.at(j).target;
}

Subspace koszul_space(const QuadraticPresentation& p, std::size_t l) {
    KoszulComplex kc(p);
    const auto& gens = kc.generators(l);
    auto ambient = enumerate_paths(p.quiver(), l);
    RationalMatrix rows(0, ambient.size());
    for (const PathVector& g : gens) rows.append_row(coordinates(g, ambient));
    return Subspace(ambient.size(), std::move(rows));
}

std::vector<KoszulDimsEntry> koszul_dims(const QuadraticPresentation& p, std::size_t l_max) {
    KoszulComplex kc(p);
    std::vector<KoszulDimsEntry> out;
    for (std::size_t l = 0; l <= l_max; ++l)
        out.push_back({l, kc.total_dim(l), kc.dims(l)});
    return out;
}

TopFormResult top_form(const QuadraticPresentation& p, std::size_t n) {
    if (n < 2) throw InvalidArgument("top_form requires degree >= 2");
    KoszulComplex kc(p);
    TopFormResult res;
    res.dims = kc.dims(n);
    const std::size_t nv = p.quiver().vertices().size();
    for (std::size_t j = 0; j < nv; ++j)
        for (std::size_t i = 0; i < nv; ++i) {
            const long expected = (i == j) ? 1 : 0;
            if (res.dims.at(j, i) != expected) return res;
        }
    for (const PathVector& g : kc.generators(n)) {
        // Scale so the lexicographically first path carries coefficient +1.
        const Rat& lead = g.terms().begin()->second;
        PathVector scaled = g;
        scaled *= 1 / lead;
        res.form += scaled;
    }
    res.ok = true;
    return res;
}

}  // namespace prepro
