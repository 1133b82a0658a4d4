#include "prepro/tensor_product.hpp"

#include "prepro/errors.hpp"

namespace prepro {

TensorProduct tensor_presentation(const QuadraticPresentation& p1,
                                  const QuadraticPresentation& p2) {
    const Quiver& q1 = p1.quiver();
    const Quiver& q2 = p2.quiver();
    Quiver q;
    TensorMap map;
    for (const auto& v1 : q1.vertices())
        for (const auto& v2 : q2.vertices())
            map.vertex[{v1.id, v2.id}] =
                q.add_vertex("(" + v1.label + "," + v2.label + ")");
    for (const auto& a : q1.arrows())
        for (const auto& v2 : q2.vertices())
            map.arrow_left[{a.id, v2.id}] =
                q.add_arrow(map.vertex.at({a.source, v2.id}), map.vertex.at({a.target, v2.id}),
                            "(" + a.label + "," + v2.label + ")");
    for (const auto& v1 : q1.vertices())
        for (const auto& a : q2.arrows())
            map.arrow_right[{v1.id, a.id}] =
                q.add_arrow(map.vertex.at({v1.id, a.source}), map.vertex.at({v1.id, a.target}),
                            "(" + v1.label + "," + a.label + ")");

    std::vector<PathVector> relations;
    // Lifted relations of the first factor at every co-vertex.
    for (const PathVector& rel : p1.relations())
        for (const auto& v2 : q2.vertices()) {
            PathVector lifted;
            for (const auto& [path, c] : rel.terms())
                lifted.add_term(Path::of_word({map.arrow_left.at({path.word[0], v2.id}),
                                               map.arrow_left.at({path.word[1], v2.id})}),
                                c);
            relations.push_back(std::move(lifted));
        }
    for (const PathVector& rel : p2.relations())
        for (const auto& v1 : q1.vertices()) {
            PathVector lifted;
            for (const auto& [path, c] : rel.terms())
                lifted.add_term(Path::of_word({map.arrow_right.at({v1.id, path.word[0]}),
                                               map.arrow_right.at({v1.id, path.word[1]})}),
                                c);
            relations.push_back(std::move(lifted));
        }
    // One commutator per arrow pair: (a1, e_t)(e_i, a2) - (e_j, a2)(a1, e_s).
    for (const auto& a1 : q1.arrows())
        for (const auto& a2 : q2.arrows()) {
            PathVector comm;
            comm.add_term(Path::of_word({map.arrow_left.at({a1.id, a2.target}),
                                         map.arrow_right.at({a1.source, a2.id})}),
                          1);
            comm.add_term(Path::of_word({map.arrow_right.at({a1.target, a2.id}),
                                         map.arrow_left.at({a1.id, a2.source})}),
                          -1);
            relations.push_back(std::move(comm));
        }
    return TensorProduct{QuadraticPresentation(std::move(q), std::move(relations)),
                         std::move(map)};
}

WeightGrading lift_grading_sum(const WeightGrading& g1, const WeightGrading& g2,
                               const TensorMap& t) {
    WeightGrading g;
    for (const auto& [key, id] : t.arrow_left) {
        auto it = g1.find(key.first);
        if (it == g1.end()) throw InvalidArgument("first factor grading misses an arrow");
        g[id] = it->second;
    }
    for (const auto& [key, id] : t.arrow_right) {
        auto it = g2.find(key.second);
        if (it == g2.end()) throw InvalidArgument("second factor grading misses an arrow");
        g[id] = it->second;
    }
    return g;
}

}  // namespace prepro
