#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace prepro {

using VertexId = std::int32_t;
using ArrowId = std::int32_t;

struct Vertex {
    VertexId id;
    std::string label;
};

struct Arrow {
    ArrowId id;
    VertexId source;
    VertexId target;
    std::string label;
};

/// Directed multigraph. Ids need not be contiguous (subquivers keep the
/// parent's ids) but must be unique, and labels must be unique within kind.
class Quiver {
public:
    VertexId add_vertex(const std::string& label);
    void add_vertex_with_id(VertexId id, const std::string& label);
    ArrowId add_arrow(VertexId source, VertexId target, const std::string& label);
    void add_arrow_with_id(ArrowId id, VertexId source, VertexId target,
                           const std::string& label);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool has_vertex(VertexId id) const { return vertex_index_.count(id) > 0; }
    bool has_arrow(ArrowId id) const { return arrow_index_.count(id) > 0; }
    const Vertex& vertex(VertexId id) const;
    const Arrow& arrow(ArrowId id) const;
    std::size_t vertex_index(VertexId id) const;
    std::size_t arrow_index(ArrowId id) const;

    std::optional<VertexId> vertex_by_label(const std::string& label) const;
    std::optional<ArrowId> arrow_by_label(const std::string& label) const;

    /// Arrows with the given source, ascending id.
    const std::vector<ArrowId>& arrows_from(VertexId source) const;
    /// Arrows with the given target, ascending id.
    const std::vector<ArrowId>& arrows_into(VertexId target) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Arrow> arrows_;
    std::map<VertexId, std::size_t> vertex_index_;
    std::map<ArrowId, std::size_t> arrow_index_;
    std::map<VertexId, std::vector<ArrowId>> out_;
    std::map<VertexId, std::vector<ArrowId>> in_;
    std::vector<ArrowId> no_arrows_;
};

/// Composable arrow sequence, or a trivial path at a vertex. The word is
/// stored in tensor order: word[0] acts last and word.back() acts first, so
/// the word "db" (d after b) is {d, b}. Paths order by (length, word) with
/// trivial paths ordered by vertex; this is the lexicographic order used for
/// every path basis in the project.
struct Path {
    std::vector<ArrowId> word;  // empty for trivial paths
    VertexId base = -1;         // meaningful only when word is empty

    static Path trivial(VertexId v) { return Path{{}, v}; }
    static Path of_word(std::vector<ArrowId> w) { return Path{std::move(w), -1}; }

    std::size_t length() const { return word.size(); }
    bool is_trivial() const { return word.empty(); }

    /// This path extended by a first-acting arrow (base cleared, so extending
    /// a trivial path yields the plain one-arrow word).
    Path extended_by(ArrowId a) const {
        Path p;
        p.word.reserve(word.size() + 1);
        p.word = word;
        p.word.push_back(a);
        return p;
    }

    friend auto operator<=>(const Path&, const Path&) = default;
};

/// Source vertex (where the first-acting arrow starts). Validates the word.
VertexId path_source(const Quiver& q, const Path& p);
/// Target vertex (where the last-acting arrow ends).
VertexId path_target(const Quiver& q, const Path& p);
/// True when consecutive arrows compose (target of each feeds the next).
bool path_is_valid(const Quiver& q, const Path& p);

/// p after q, i.e. q acts first. Empty when target(q) != source(p).
/// Trivial paths are two-sided identities.
std::optional<Path> compose(const Quiver& q, const Path& p, const Path& r);

/// All composable words of the given length with the given endpoints, in
/// lexicographic word order. Length 0 yields trivial paths by vertex id.
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t length,
                                  std::optional<VertexId> source = std::nullopt,
                                  std::optional<VertexId> target = std::nullopt);

/// Elementary oriented cycles (no repeated vertex) through the allowed
/// arrows, each anchored at its minimal vertex. Empty iff the restricted
/// subquiver is acyclic. Deterministic order.
std::vector<Path> find_cycles(const Quiver& q, const std::set<ArrowId>& allowed);
std::vector<Path> find_cycles(const Quiver& q);

/// Human-readable word, e.g. "d.b" or "e_2".
std::string path_to_string(const Quiver& q, const Path& p);

}  // namespace prepro
