#include "prepro/grading.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "prepro/errors.hpp"
#include "prepro/graded_quotient.hpp"

namespace prepro {

GradingVerdict validate_grading(const QuadraticPresentation& p, const Superpotential& w,
                                const WeightGrading& g) {
    const Quiver& q = p.quiver();
    for (const auto& a : q.arrows())
        if (!g.count(a.id)) throw InvalidArgument("grading missing arrow " + a.label);
    GradingVerdict v;
    v.relations_homogeneous = true;
    for (std::size_t i = 0; i < p.relations().size(); ++i) {
        std::optional<int> deg;
        for (const auto& [path, c] : p.relations()[i].terms()) {
            const int d = path_degree(g, path);
            if (deg && *deg != d) {
                v.relations_homogeneous = false;
                if (!v.first_violation) v.first_violation = i;
            }
            deg = d;
        }
    }
    for (const auto& [path, c] : w.form().terms())
        ++v.superpotential_term_degrees[path_degree(g, path)];
    if (v.relations_homogeneous && v.superpotential_term_degrees.size() == 1)
        v.gorenstein_parameter = v.superpotential_term_degrees.begin()->first;
    return v;
}

std::optional<int> gorenstein_parameter(const QuadraticPresentation& p, const Superpotential& w,
                                        const WeightGrading& g) {
    return validate_grading(p, w, g).gorenstein_parameter;
}

QuadraticPresentation degree_zero_part(const QuadraticPresentation& p, const WeightGrading& g) {
    const Quiver& q = p.quiver();
    for (const auto& a : q.arrows()) {
        auto it = g.find(a.id);
        if (it == g.end()) throw InvalidArgument("grading missing arrow " + a.label);
        if (it->second != 0 && it->second != 1)
            throw InvalidArgument("degree_zero_part expects {0,1} arrow degrees");
    }
    Quiver sub;
    for (const auto& v : q.vertices()) sub.add_vertex_with_id(v.id, v.label);
    for (const auto& a : q.arrows())
        if (g.at(a.id) == 0) sub.add_arrow_with_id(a.id, a.source, a.target, a.label);
    std::vector<PathVector> relations;
    for (const PathVector& rel : p.relations()) {
        std::optional<int> deg;
        bool mixed = false;
        for (const auto& [path, c] : rel.terms()) {
            const int d = path_degree(g, path);
            if (deg && *deg != d) mixed = true;
            deg = d;
        }
        if (mixed) throw InvalidArgument("relations are not homogeneous under the grading");
        if (deg == 0) relations.push_back(rel);
    }
    return QuadraticPresentation(std::move(sub), std::move(relations));
}

Finiteness finiteness_check(const QuadraticPresentation& p0, std::size_t l_max) {
    if (l_max < 1) throw InvalidArgument("finiteness_check requires l_max >= 1");
    Finiteness res;
    res.bound = l_max;
    GradedQuotient gq(p0);
    long total = gq.total_dim(0);
    for (std::size_t l = 1; l <= l_max; ++l) {
        const long d = gq.total_dim(l);
        if (d == 0) {
            res.kind = Finiteness::Kind::Finite;
            res.total_dim = total;
            return res;
        }
        total += d;
    }
    // Dimensions survive to the bound; look for a cycle with nonvanishing
    // powers as an infinite-dimensionality certificate.
    for (const Path& cycle : find_cycles(p0.quiver())) {
        bool survives = true;
        PathVector power = PathVector::term(cycle, 1);
        for (std::size_t m = 1; m * cycle.length() <= l_max; ++m) {
            if (m > 1) {
                PathVector next;
                for (const auto& [pp, c] : power.terms()) {
                    Path ext = pp;
                    ext.word.insert(ext.word.end(), cycle.word.begin(), cycle.word.end());
                    next.add_term(ext, c);
                }
                power = std::move(next);
            }
            if (gq.is_zero(power)) {
                survives = false;
                break;
            }
        }
        if (survives) {
            res.kind = Finiteness::Kind::Infinite;
            res.witness = cycle;
            return res;
        }
    }
    res.kind = Finiteness::Kind::Inconclusive;
    return res;
}

namespace {

struct SearchContext {
    const QuadraticPresentation& p;
    const Superpotential& w;
    std::vector<ArrowId> arrows;                       // ascending id
    std::map<ArrowId, std::size_t> arrow_pos;
    // Relations as term lists of arrow positions (length-2 words).
    std::vector<std::vector<std::array<std::size_t, 2>>> relation_terms;
    // Superpotential terms as arrow position lists.
    std::vector<std::vector<std::size_t>> sp_terms;
};

bool assignment_valid(const SearchContext& ctx, const std::vector<int>& deg) {
    for (const auto& rel : ctx.relation_terms) {
        int d0 = deg[rel[0][0]] + deg[rel[0][1]];
        for (const auto& t : rel)
            if (deg[t[0]] + deg[t[1]] != d0) return false;
    }
    for (const auto& term : ctx.sp_terms) {
        int d = 0;
        for (std::size_t pos : term) d += deg[pos];
        if (d != 1) return false;
    }
    return true;
}

void search_rec(const SearchContext& ctx, std::vector<int>& deg, std::size_t k,
                const std::function<void(const std::vector<int>&)>& emit) {
    if (k == deg.size()) {
        if (assignment_valid(ctx, deg)) emit(deg);
        return;
    }
    for (int d = 0; d <= 1; ++d) {
        deg[k] = d;
        // Prune on superpotential terms whose assigned prefix already breaks
        // the degree-1 requirement, and on fully-assigned relations.
        bool ok = true;
        for (const auto& term : ctx.sp_terms) {
            int sum = 0;
            std::size_t unassigned = 0;
            for (std::size_t pos : term) {
                if (pos <= k)
                    sum += deg[pos];
                else
                    ++unassigned;
            }
            if (sum > 1 || (unassigned == 0 && sum != 1)) {
                ok = false;
                break;
            }
        }
        if (ok)
            for (const auto& rel : ctx.relation_terms) {
                std::optional<int> d0;
                for (const auto& t : rel) {
                    if (t[0] > k || t[1] > k) continue;
                    const int dt = deg[t[0]] + deg[t[1]];
                    if (d0 && *d0 != dt) {
                        ok = false;
                        break;
                    }
                    d0 = dt;
                }
                if (!ok) break;
            }
        if (ok) search_rec(ctx, deg, k + 1, emit);
    }
    deg[k] = 0;
}

}  // namespace

GradingSearchResult grading_search(const QuadraticPresentation& p, const Superpotential& w,
                                   const GradingSearchOptions& opts) {
    const Quiver& q = p.quiver();
    const std::size_t na = q.arrows().size();
    if (na > opts.arrow_limit)
        throw LimitError("grading search over " + std::to_string(na) +
                         " arrows exceeds the limit of " + std::to_string(opts.arrow_limit));

    SearchContext ctx{p, w, {}, {}, {}, {}};
    for (const auto& a : q.arrows()) {
        ctx.arrow_pos[a.id] = ctx.arrows.size();
        ctx.arrows.push_back(a.id);
    }
    for (const PathVector& rel : p.relations()) {
        std::vector<std::array<std::size_t, 2>> terms;
        for (const auto& [path, c] : rel.terms())
            terms.push_back({ctx.arrow_pos.at(path.word[0]), ctx.arrow_pos.at(path.word[1])});
        ctx.relation_terms.push_back(std::move(terms));
    }
    for (const auto& [path, c] : w.form().terms()) {
        std::vector<std::size_t> term;
        for (const ArrowId a : path.word) term.push_back(ctx.arrow_pos.at(a));
        ctx.sp_terms.push_back(std::move(term));
    }

    GradingSearchResult res;
    res.assignments = 1ull << na;
    auto emit = [&](const std::vector<int>& deg) {
        WeightGrading g;
        for (std::size_t i = 0; i < na; ++i) g[ctx.arrows[i]] = deg[i];
        GradingVerdict verdict = validate_grading(p, w, g);
        verdict.degree0_finiteness = finiteness_check(degree_zero_part(p, g), opts.l_max);
        switch (verdict.degree0_finiteness->kind) {
            case Finiteness::Kind::Finite: ++res.finite_count; break;
            case Finiteness::Kind::Infinite: ++res.infinite_count; break;
            case Finiteness::Kind::Inconclusive: ++res.inconclusive_count; break;
        }
        res.valid.emplace_back(std::move(g), std::move(verdict));
    };

    std::vector<int> deg(na, 0);
    if (opts.brute) {
        // Bit order chosen so both modes emit valid gradings in the same order.
        for (unsigned long long mask = 0; mask < res.assignments; ++mask) {
            for (std::size_t i = 0; i < na; ++i)
                deg[i] = (mask >> (na - 1 - i)) & 1ull ? 1 : 0;
            if (assignment_valid(ctx, deg)) emit(deg);
        }
    } else {
        search_rec(ctx, deg, 0, emit);
    }
    return res;
}

}  // namespace prepro
