#include "prepro/json_io.hpp"

#include "prepro/errors.hpp"

namespace prepro {

namespace {

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field: ") + name);
    return *it;
}

}  // namespace

Json quiver_to_json(const Quiver& q) {
    Json vertices = Json::array();
    for (const auto& v : q.vertices()) vertices.push_back({{"id", v.id}, {"label", v.label}});
    Json arrows = Json::array();
    for (const auto& a : q.arrows())
        arrows.push_back({{"id", a.id},
                          {"source", a.source},
                          {"target", a.target},
                          {"label", a.label}});
    return Json{{"vertices", std::move(vertices)}, {"arrows", std::move(arrows)}};
}

Quiver quiver_from_json(const Json& j) {
    Quiver q;
    try {
        for (const auto& v : field(j, "vertices"))
            q.add_vertex_with_id(field(v, "id").get<VertexId>(),
                                 field(v, "label").get<std::string>());
        for (const auto& a : field(j, "arrows"))
            q.add_arrow_with_id(field(a, "id").get<ArrowId>(),
                                field(a, "source").get<VertexId>(),
                                field(a, "target").get<VertexId>(),
                                field(a, "label").get<std::string>());
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("invalid quiver: ") + e.what());
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid quiver: ") + e.what());
    }
    return q;
}

Json path_to_json(const Path& p) {
    Json j{{"path", p.word}};
    if (p.is_trivial()) j["vertex"] = p.base;
    return j;
}

Path path_from_json(const Json& j) {
    Path p;
    for (const auto& a : field(j, "path")) p.word.push_back(a.get<ArrowId>());
    if (p.word.empty()) {
        p.base = field(j, "vertex").get<VertexId>();
    }
    return p;
}

Json pathvector_to_json(const PathVector& v) {
    Json terms = Json::array();
    for (const auto& [p, c] : v.terms()) {
        Json t = path_to_json(p);
        Json term{{"coef", rat_to_string(c)}};
        term.update(t);
        terms.push_back(std::move(term));
    }
    return terms;
}

PathVector pathvector_from_json(const Json& j) {
    PathVector v;
    for (const auto& t : j)
        v.add_term(path_from_json(t), rat_from_string(field(t, "coef").get<std::string>()));
    return v;
}

Json presentation_to_json(const QuadraticPresentation& p) {
    Json rels = Json::array();
    for (const PathVector& r : p.relations()) rels.push_back(pathvector_to_json(r));
    return Json{{"quiver", quiver_to_json(p.quiver())}, {"relations", std::move(rels)}};
}

QuadraticPresentation presentation_from_json(const Json& j) {
    Quiver q = quiver_from_json(field(j, "quiver"));
    std::vector<PathVector> rels;
    for (const auto& r : field(j, "relations")) rels.push_back(pathvector_from_json(r));
    try {
        return QuadraticPresentation(std::move(q), std::move(rels));
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("invalid presentation: ") + e.what());
    }
}

Json superpotential_to_json(const Superpotential& w) {
    return Json{{"degree", w.degree()}, {"terms", pathvector_to_json(w.form())}};
}

Superpotential superpotential_from_json(const Quiver& q, const Json& j) {
    PathVector form = pathvector_from_json(field(j, "terms"));
    try {
        Superpotential w(q, std::move(form));
        if (w.degree() != field(j, "degree").get<std::size_t>())
            throw ParseError("superpotential degree does not match its terms");
        return w;
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("invalid superpotential: ") + e.what());
    }
}

Json grading_to_json(const WeightGrading& g) {
    Json degrees = Json::array();
    for (const auto& [arrow, degree] : g)
        degrees.push_back({{"arrow", arrow}, {"degree", degree}});
    return Json{{"degrees", std::move(degrees)}};
}

WeightGrading grading_from_json(const Json& j) {
    WeightGrading g;
    for (const auto& d : field(j, "degrees"))
        g[field(d, "arrow").get<ArrowId>()] = field(d, "degree").get<int>();
    return g;
}

Json finiteness_to_json(const Finiteness& f) {
    switch (f.kind) {
        case Finiteness::Kind::Finite:
            return Json{{"kind", "finite"}, {"total_dim", f.total_dim}, {"bound", f.bound}};
        case Finiteness::Kind::Infinite:
            return Json{{"kind", "infinite"},
                        {"witness", path_to_json(f.witness)},
                        {"bound", f.bound}};
        default:
            return Json{{"kind", "inconclusive"}, {"bound", f.bound}};
    }
}

Json grading_verdict_to_json(const GradingVerdict& v) {
    Json degrees = Json::array();
    for (const auto& [deg, count] : v.superpotential_term_degrees)
        degrees.push_back({{"degree", deg}, {"terms", count}});
    Json j{{"relations_homogeneous", v.relations_homogeneous},
           {"superpotential_term_degrees", std::move(degrees)}};
    if (v.first_violation) j["first_violation"] = *v.first_violation;
    j["gorenstein_parameter"] =
        v.gorenstein_parameter ? Json(*v.gorenstein_parameter) : Json(nullptr);
    if (v.degree0_finiteness) j["degree0_finiteness"] = finiteness_to_json(*v.degree0_finiteness);
    return j;
}

Json classification_to_json(const GroupClassification& c) {
    Json j{{"spec", c.spec.to_string()},
           {"normalized", c.normalized.to_string()},
           {"air", c.air},
           {"cond_zero_weight", c.cond_a},
           {"cond_excess_sum", c.cond_b},
           {"embeds", to_string(c.embeds)},
           {"verdict", to_string(c.verdict)}};
    if (c.air_generator_weights) j["air_generator"] = *c.air_generator_weights;
    return j;
}

Json make_document(const std::string& kind, Json payload) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind;
    j[kind] = std::move(payload);
    return j;
}

Document parse_document(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON document");
    if (!j.is_object()) throw ParseError("document must be a JSON object");
    const auto version = field(j, "schema_version").get<std::string>();
    if (version != kSchemaVersion)
        throw ParseError("unsupported schema_version: " + version);
    Document doc;
    doc.kind = field(j, "kind").get<std::string>();
    doc.payload = field(j, doc.kind.c_str());
    return doc;
}

QuadraticPresentation presentation_from_document(const Document& doc) {
    if (doc.kind == "presentation") return presentation_from_json(doc.payload);
    if (doc.kind == "report" && doc.payload.contains("presentation"))
        return presentation_from_json(doc.payload["presentation"]);
    throw ParseError("document does not carry a presentation");
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace prepro
