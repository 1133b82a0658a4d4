#include "prepro/preprojective.hpp"

#include <map>
#include <sstream>

#include "prepro/errors.hpp"
#include "prepro/koszul.hpp"

namespace prepro {

namespace {

std::string fresh_arrow_label(const Quiver& q, std::size_t k) {
    std::string base = "a_q" + std::to_string(k + 1);
    while (q.arrow_by_label(base)) base += "'";
    return base;
}

}  // namespace

PreprojectivePresentation build_preprojective(const QuadraticPresentation& p, std::size_t n,
                                              std::size_t probe_degree) {
    if (n < 1) throw InvalidArgument("build_preprojective requires n >= 1");
    const Quiver& q = p.quiver();
    KoszulComplex kc(p);
    const long dim_n = kc.total_dim(n);
    const long dim_n1 = kc.total_dim(n + 1);
    if (dim_n == 0 || dim_n1 != 0) {
        std::ostringstream os;
        os << "Koszul space dimensions do not match global dimension " << n << ":";
        for (std::size_t l = 0; l <= n + 1; ++l) os << " dim K_" << l << " = " << kc.total_dim(l);
        throw PreconditionError(os.str());
    }
    if (auto probe = koszulity_probe(p, probe_degree); !probe.pass) {
        std::ostringstream os;
        os << "Koszulity probe failed at degree " << *probe.failed_degree;
        throw PreconditionError(os.str());
    }

    PreprojectivePresentation pp{p, n, {}, {}, {}, {}, {}, {}};
    pp.generators = kc.generators(n);

    Quiver ext;
    for (const auto& v : q.vertices()) ext.add_vertex_with_id(v.id, v.label);
    for (const auto& a : q.arrows()) ext.add_arrow_with_id(a.id, a.source, a.target, a.label);
    for (std::size_t k = 0; k < pp.generators.size(); ++k) {
        // a_q: j -> i for the generator q: i -> j.
        const VertexId i = kc.generator_source(n, k);
        const VertexId j = kc.generator_target(n, k);
        pp.new_arrows.push_back(ext.add_arrow(j, i, fresh_arrow_label(ext, k)));
    }

    // Left relations, one per K_{n-1} basis vector p: sum_q (dL_p q) a_q.
    // The Koszul engine already stores each q over K_{n-1} (x) V, which is
    // exactly the left-derivative data. For n = 1 the generators are the
    // arrows themselves and K_0 is spanned by the trivial paths, so the
    // vertex-indexed derivative of q is q when the endpoint matches.
    const std::size_t kn1 = static_cast<std::size_t>(kc.total_dim(n - 1));
    std::vector<PathVector> left(kn1);
    if (n == 1) {
        for (std::size_t k = 0; k < pp.generators.size(); ++k) {
            const ArrowId arr = q.arrows()[k].id;
            left[q.vertex_index(q.arrow(arr).target)].add_term(
                Path::of_word({arr, pp.new_arrows[k]}), 1);
        }
    } else {
        for (std::size_t k = 0; k < pp.generators.size(); ++k)
            for (const auto& [t, y, c] : kc.components(n, k))
                left[t].add_term(Path::of_word({y, pp.new_arrows[k]}), c);
    }
    for (const auto& r : left)
        if (!r.empty()) pp.left_relations.push_back(r);

    // Right relations need q expanded over V (x) K_{n-1}: solve once per
    // vertex-pair block against the candidate rows (arrow w) (x) p.
    std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> gen_blocks;
    for (std::size_t k = 0; k < pp.generators.size(); ++k)
        gen_blocks[{kc.generator_source(n, k), kc.generator_target(n, k)}].push_back(k);
    std::vector<PathVector> right(kn1);
    for (const auto& [key, gens] : gen_blocks) {
        const auto [i, j] = key;
        auto ambient = enumerate_paths(q, n, i, j);
        RationalMatrix rows(0, ambient.size());
        std::vector<std::pair<ArrowId, std::size_t>> cand;  // (last arrow w, K_{n-1} index)
        for (std::size_t t = 0; t < kn1; ++t) {
            if (kc.generator_source(n - 1, t) != i) continue;
            const VertexId u = kc.generator_target(n - 1, t);
            const PathVector& rho = kc.generators(n - 1)[t];
            for (const ArrowId w : q.arrows_from(u)) {
                if (q.arrow(w).target != j) continue;
                PathVector ext_vec = concatenate(q, PathVector::term(Path::of_word({w}), 1), rho);
                rows.append_row(coordinates(ext_vec, ambient));
                cand.emplace_back(w, t);
            }
        }
        for (const std::size_t k : gens) {
            auto coeffs = express_in_rows(rows, coordinates(pp.generators[k], ambient));
            if (!coeffs)
                throw PreconditionError(
                    "generator does not lie in V (x) K_{n-1}; presentation is not Koszul at "
                    "the top degree");
            for (std::size_t c = 0; c < cand.size(); ++c) {
                if (is_zero((*coeffs)[c])) continue;
                right[cand[c].second].add_term(
                    Path::of_word({pp.new_arrows[k], cand[c].first}), (*coeffs)[c]);
            }
        }
    }
    for (const auto& r : right)
        if (!r.empty()) pp.right_relations.push_back(r);

    // One relation per K_{n-1} generator, combining both derivative sides
    // with the sign of the top differential:
    //   sum_q a_q (dR_p q) + (-1)^n sum_q (dL_p q) a_q.
    // On quivers where each generator p meets only one side (such as the
    // three-vertex example) this splits into the familiar one-sided lists.
    {
        const Rat sign = (n % 2 == 0) ? 1 : -1;
        std::vector<PathVector> combined;
        for (std::size_t t = 0; t < kn1; ++t) {
            PathVector r = right[t] + sign * left[t];
            if (!r.empty()) combined.push_back(std::move(r));
        }
        QuadraticPresentation reduced(ext, combined);
        pp.new_relations = reduced.relations();
    }

    std::vector<PathVector> all = p.relations();
    all.insert(all.end(), pp.new_relations.begin(), pp.new_relations.end());
    pp.presentation = QuadraticPresentation(ext, std::move(all));

    for (const auto& a : q.arrows()) pp.grading[a.id] = 0;
    for (const ArrowId a : pp.new_arrows) pp.grading[a] = 1;
    return pp;
}

Superpotential preprojective_superpotential(const PreprojectivePresentation& pp) {
    const Quiver& ext = pp.presentation.quiver();
    PathVector omega;
    for (std::size_t k = 0; k < pp.generators.size(); ++k) {
        PathVector term = concatenate(
            ext, pp.generators[k], PathVector::term(Path::of_word({pp.new_arrows[k]}), 1));
        PathVector acc = term;
        omega += acc;
        for (std::size_t l = 1; l <= pp.n; ++l) {
            acc = signed_cyclic_shift(ext, acc);
            omega += acc;
        }
    }
    return Superpotential(ext, std::move(omega));
}

}  // namespace prepro
