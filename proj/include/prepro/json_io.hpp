#pragma once

#include <string>

#include <json.hpp>

#include "prepro/grading.hpp"
#include "prepro/mckay.hpp"
#include "prepro/presentation.hpp"
#include "prepro/superpotential.hpp"
#include "prepro/weight_grading.hpp"

namespace prepro {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json path_to_json(const Path& p);
Path path_from_json(const Json& j);

Json pathvector_to_json(const PathVector& v);
PathVector pathvector_from_json(const Json& j);

Json presentation_to_json(const QuadraticPresentation& p);
QuadraticPresentation presentation_from_json(const Json& j);

Json superpotential_to_json(const Superpotential& w);
Superpotential superpotential_from_json(const Quiver& q, const Json& j);

Json grading_to_json(const WeightGrading& g);
WeightGrading grading_from_json(const Json& j);

Json finiteness_to_json(const Finiteness& f);
Json grading_verdict_to_json(const GradingVerdict& v);
Json classification_to_json(const GroupClassification& c);

/// Wraps a payload as {"schema_version": "1", "kind": kind, kind: payload}.
Json make_document(const std::string& kind, Json payload);

struct Document {
    std::string kind;
    Json payload;
};

/// Parses and validates the envelope; throws ParseError on malformed input
/// or schema mismatch.
Document parse_document(const std::string& text);

/// Extracts a presentation from a presentation document or from a report
/// that embeds one.
QuadraticPresentation presentation_from_document(const Document& doc);

std::string dump_document(const Json& doc);

}  // namespace prepro
