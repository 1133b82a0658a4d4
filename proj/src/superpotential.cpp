#include "prepro/superpotential.hpp"

#include <algorithm>

#include "prepro/errors.hpp"

namespace prepro {

namespace {

void require_closed_homogeneous(const Quiver& q, const PathVector& v) {
    std::optional<std::size_t> len;
    for (const auto& [p, c] : v.terms()) {
        if (path_source(q, p) != path_target(q, p))
            throw InvalidArgument("cyclic shift requires closed terms");
        if (len && *len != p.length())
            throw InvalidArgument("cyclic shift requires a homogeneous vector");
        len = p.length();
    }
}

}  // namespace

PathVector cyclic_rotate(const Quiver& q, const PathVector& v) {
    require_closed_homogeneous(q, v);
    PathVector out;
    for (const auto& [p, c] : v.terms()) {
        if (p.length() <= 1) {
            out.add_term(p, c);
            continue;
        }
        Path r;
        r.word.reserve(p.word.size());
        r.word.push_back(p.word.back());
        r.word.insert(r.word.end(), p.word.begin(), p.word.end() - 1);
        out.add_term(r, c);
    }
    return out;
}

PathVector signed_cyclic_shift(const Quiver& q, const PathVector& v) {
    PathVector out = cyclic_rotate(q, v);
    // Sign (-1)^(n-1) per shift; terms share one length but may be based at
    // different vertices.
    const std::size_t n = v.empty() ? 0 : v.terms().begin()->first.length();
    if (n >= 2 && n % 2 == 0) out *= Rat(-1);
    return out;
}

SuperpotentialCheck check_superpotential(const Quiver& q, const PathVector& v) {
    SuperpotentialCheck res;
    if (v.empty()) {
        res.reason = "zero vector";
        return res;
    }
    std::optional<std::size_t> len;
    for (const auto& [p, c] : v.terms()) {
        if (path_source(q, p) != path_target(q, p)) {
            res.reason = "term " + path_to_string(q, p) + " is not a closed cycle";
            return res;
        }
        if (len && *len != p.length()) {
            res.reason = "terms have mixed lengths";
            return res;
        }
        len = p.length();
    }
    if (!(signed_cyclic_shift(q, v) == v)) {
        res.reason = "not fixed by the signed cyclic shift";
        return res;
    }
    res.ok = true;
    return res;
}

Superpotential::Superpotential(const Quiver& q, PathVector form) : form_(std::move(form)) {
    auto chk = check_superpotential(q, form_);
    if (!chk.ok) throw InvalidArgument("not a superpotential: " + chk.reason);
    degree_ = form_.terms().begin()->first.length();
}

PathVector derive(const Quiver& q, const Superpotential& w, const Path& p, Side side) {
    if (p.length() >= w.degree())
        throw InvalidArgument("derivative order must be smaller than the degree");
    PathVector out;
    for (const auto& [term, c] : w.form().terms()) {
        if (p.is_trivial()) {
            const VertexId v = side == Side::Left ? path_target(q, term) : path_source(q, term);
            if (v == p.base) out.add_term(term, c);
            continue;
        }
        const std::size_t k = p.length();
        if (side == Side::Left) {
            if (!std::equal(p.word.begin(), p.word.end(), term.word.begin())) continue;
            Path rest;
            rest.word.assign(term.word.begin() + static_cast<std::ptrdiff_t>(k),
                             term.word.end());
            out.add_term(rest, c);
        } else {
            if (!std::equal(p.word.rbegin(), p.word.rend(), term.word.rbegin())) continue;
            Path rest;
            rest.word.assign(term.word.begin(),
                             term.word.end() - static_cast<std::ptrdiff_t>(k));
            out.add_term(rest, c);
        }
    }
    return out;
}

QuadraticPresentation derivation_quotient(const Quiver& q, const Superpotential& w) {
    if (w.degree() < 2) throw InvalidArgument("derivation quotient needs degree >= 2");
    std::vector<PathVector> relations;
    for (const Path& p : enumerate_paths(q, w.degree() - 2)) {
        PathVector d = derive(q, w, p, Side::Left);
        if (!d.empty()) relations.push_back(std::move(d));
    }
    return QuadraticPresentation(q, std::move(relations));
}

Superpotential shuffle_product(const Quiver& q1, const Superpotential& w1, const Quiver& q2,
                               const Superpotential& w2, const TensorProduct& tp) {
    const Quiver& pq = tp.presentation.quiver();
    const std::size_t n1 = w1.degree(), n2 = w2.degree();
    // Interleavings as bitmasks over n1+n2 action slots; bit set = letter of
    // the first factor. Sign = parity of crossings between the two blocks.
    std::vector<std::pair<unsigned, int>> shuffles;
    const std::size_t n = n1 + n2;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != n1) continue;
        int inversions = 0, seen_second = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (mask & (1u << k))
                inversions += seen_second;
            else
                ++seen_second;
        }
        shuffles.emplace_back(mask, inversions % 2 == 0 ? 1 : -1);
    }

    PathVector total;
    for (const auto& [t1, c1] : w1.form().terms()) {
        // Action-order letters (first-acting first).
        std::vector<ArrowId> a1(t1.word.rbegin(), t1.word.rend());
        const VertexId u0 = t1.is_trivial() ? t1.base : path_source(q1, t1);
        for (const auto& [t2, c2] : w2.form().terms()) {
            std::vector<ArrowId> a2(t2.word.rbegin(), t2.word.rend());
            const VertexId v0 = t2.is_trivial() ? t2.base : path_source(q2, t2);
            for (const auto& [mask, sign] : shuffles) {
                VertexId u = u0, v = v0;
                std::size_t i1 = 0, i2 = 0;
                std::vector<ArrowId> action;
                action.reserve(n);
                for (std::size_t k = 0; k < n; ++k) {
                    if (mask & (1u << k)) {
                        auto it = tp.map.arrow_left.find({a1[i1], v});
                        if (it == tp.map.arrow_left.end())
                            throw InvalidArgument("tensor map misses a lifted arrow");
                        action.push_back(it->second);
                        u = q1.arrow(a1[i1]).target;
                        ++i1;
                    } else {
                        auto it = tp.map.arrow_right.find({u, a2[i2]});
                        if (it == tp.map.arrow_right.end())
                            throw InvalidArgument("tensor map misses a lifted arrow");
                        action.push_back(it->second);
                        v = q2.arrow(a2[i2]).target;
                        ++i2;
                    }
                }
                if (n == 0) {
                    total.add_term(Path::trivial(tp.map.vertex.at({u0, v0})), c1 * c2);
                    continue;
                }
                Path word;
                word.word.assign(action.rbegin(), action.rend());
                if (!path_is_valid(pq, word))
                    throw InvalidArgument("shuffle lift produced a non-composable path");
                total.add_term(word, sign * c1 * c2);
            }
        }
    }
    return Superpotential(pq, std::move(total));
}

}  // namespace prepro
