#pragma once

#include "prepro/presentation.hpp"

namespace prepro::testing {

/// One vertex, n loops x1..xn, all commutators: the polynomial ring k[x1..xn].
inline QuadraticPresentation poly_ring(std::size_t n) {
    Quiver q;
    VertexId v = q.add_vertex("*");
    std::vector<ArrowId> loops;
    for (std::size_t i = 0; i < n; ++i)
        loops.push_back(q.add_arrow(v, v, "x" + std::to_string(i + 1)));
    std::vector<PathVector> rels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            PathVector r;
            r.add_term(Path::of_word({loops[i], loops[j]}), 1);
            r.add_term(Path::of_word({loops[j], loops[i]}), -1);
            rels.push_back(std::move(r));
        }
    return QuadraticPresentation(std::move(q), std::move(rels));
}

/// One vertex, n loops, no relations: the free algebra.
inline QuadraticPresentation free_algebra(std::size_t n) {
    Quiver q;
    VertexId v = q.add_vertex("*");
    for (std::size_t i = 0; i < n; ++i) q.add_arrow(v, v, "x" + std::to_string(i + 1));
    return QuadraticPresentation(std::move(q), {});
}

/// Beilinson quiver of the projective plane: 1 -> 2 -> 3 with arrow triples
/// a,b,c and d,e,f and the relations db - ea, fa - dc, ec - fb. A Koszul
/// algebra of global dimension 2.
inline QuadraticPresentation beilinson_p2() {
    Quiver q;
    VertexId v1 = q.add_vertex("1");
    VertexId v2 = q.add_vertex("2");
    VertexId v3 = q.add_vertex("3");
    ArrowId a = q.add_arrow(v1, v2, "a");
    ArrowId b = q.add_arrow(v1, v2, "b");
    ArrowId c = q.add_arrow(v1, v2, "c");
    ArrowId d = q.add_arrow(v2, v3, "d");
    ArrowId e = q.add_arrow(v2, v3, "e");
    ArrowId f = q.add_arrow(v2, v3, "f");
    std::vector<PathVector> rels;
    PathVector q1, q2, q3;
    q1.add_term(Path::of_word({d, b}), 1);
    q1.add_term(Path::of_word({e, a}), -1);
    q2.add_term(Path::of_word({f, a}), 1);
    q2.add_term(Path::of_word({d, c}), -1);
    q3.add_term(Path::of_word({e, c}), 1);
    q3.add_term(Path::of_word({f, b}), -1);
    rels.push_back(q1);
    rels.push_back(q2);
    rels.push_back(q3);
    return QuadraticPresentation(std::move(q), std::move(rels));
}

/// Beilinson quiver of projective 3-space: vertices 1..4, four parallel
/// arrows between consecutive vertices, commutation relations between the
/// parallel families. Koszul of global dimension 3.
inline QuadraticPresentation beilinson_p3() {
    Quiver q;
    std::vector<VertexId> v;
    for (int k = 1; k <= 4; ++k) v.push_back(q.add_vertex(std::to_string(k)));
    // arrows[k][i]: i-th arrow from vertex k to k+1
    std::vector<std::vector<ArrowId>> arrows(3);
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 4; ++i)
            arrows[k].push_back(
                q.add_arrow(v[k], v[k + 1],
                            "x" + std::to_string(i) + "_" + std::to_string(k + 1)));
    std::vector<PathVector> rels;
    for (int k = 0; k + 1 < 3; ++k)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                PathVector r;
                r.add_term(Path::of_word({arrows[k + 1][i], arrows[k][j]}), 1);
                r.add_term(Path::of_word({arrows[k + 1][j], arrows[k][i]}), -1);
                rels.push_back(std::move(r));
            }
    return QuadraticPresentation(std::move(q), std::move(rels));
}

}  // namespace prepro::testing
