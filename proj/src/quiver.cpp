#include "prepro/quiver.hpp"

#include <algorithm>

#include "prepro/errors.hpp"

namespace prepro {

VertexId Quiver::add_vertex(const std::string& label) {
    VertexId id = vertices_.empty() ? 0 : vertices_.back().id + 1;
    add_vertex_with_id(id, label);
    return id;
}

void Quiver::add_vertex_with_id(VertexId id, const std::string& label) {
    if (vertex_index_.count(id)) throw InvalidArgument("duplicate vertex id");
    if (vertex_by_label(label)) throw InvalidArgument("duplicate vertex label: " + label);
    vertex_index_[id] = vertices_.size();
    vertices_.push_back({id, label});
}

ArrowId Quiver::add_arrow(VertexId source, VertexId target, const std::string& label) {
    ArrowId id = arrows_.empty() ? 0 : arrows_.back().id + 1;
    add_arrow_with_id(id, source, target, label);
    return id;
}

void Quiver::add_arrow_with_id(ArrowId id, VertexId source, VertexId target,
                               const std::string& label) {
    if (arrow_index_.count(id)) throw InvalidArgument("duplicate arrow id");
    if (!has_vertex(source) || !has_vertex(target))
        throw InvalidArgument("arrow endpoints must be existing vertices");
    if (!arrows_.empty() && arrows_.back().id > id)
        throw InvalidArgument("arrow ids must be added in increasing order");
    if (arrow_by_label(label)) throw InvalidArgument("duplicate arrow label: " + label);
    arrow_index_[id] = arrows_.size();
    arrows_.push_back({id, source, target, label});
    out_[source].push_back(id);
    in_[target].push_back(id);
}

const Vertex& Quiver::vertex(VertexId id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) throw InvalidArgument("unknown vertex id");
    return vertices_[it->second];
}

const Arrow& Quiver::arrow(ArrowId id) const {
    auto it = arrow_index_.find(id);
    if (it == arrow_index_.end()) throw InvalidArgument("unknown arrow id");
    return arrows_[it->second];
}

std::size_t Quiver::vertex_index(VertexId id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) throw InvalidArgument("unknown vertex id");
    return it->second;
}

std::size_t Quiver::arrow_index(ArrowId id) const {
    auto it = arrow_index_.find(id);
    if (it == arrow_index_.end()) throw InvalidArgument("unknown arrow id");
    return it->second;
}

std::optional<VertexId> Quiver::vertex_by_label(const std::string& label) const {
    for (const auto& v : vertices_)
        if (v.label == label) return v.id;
    return std::nullopt;
}

std::optional<ArrowId> Quiver::arrow_by_label(const std::string& label) const {
    for (const auto& a : arrows_)
        if (a.label == label) return a.id;
    return std::nullopt;
}

const std::vector<ArrowId>& Quiver::arrows_from(VertexId source) const {
    auto it = out_.find(source);
    return it == out_.end() ? no_arrows_ : it->second;
}

const std::vector<ArrowId>& Quiver::arrows_into(VertexId target) const {
    auto it = in_.find(target);
    return it == in_.end() ? no_arrows_ : it->second;
}

VertexId path_source(const Quiver& q, const Path& p) {
    if (p.is_trivial()) return p.base;
    return q.arrow(p.word.back()).source;
}

VertexId path_target(const Quiver& q, const Path& p) {
    if (p.is_trivial()) return p.base;
    return q.arrow(p.word.front()).target;
}

bool path_is_valid(const Quiver& q, const Path& p) {
    if (p.is_trivial()) return q.has_vertex(p.base);
    for (const ArrowId a : p.word)
        if (!q.has_arrow(a)) return false;
    for (std::size_t i = 0; i + 1 < p.word.size(); ++i)
        if (q.arrow(p.word[i]).source != q.arrow(p.word[i + 1]).target) return false;
    return true;
}

std::optional<Path> compose(const Quiver& q, const Path& p, const Path& r) {
    if (path_target(q, r) != path_source(q, p)) return std::nullopt;
    if (p.is_trivial()) return r;
    if (r.is_trivial()) return p;
    Path out;
    out.word = p.word;
    out.word.insert(out.word.end(), r.word.begin(), r.word.end());
    return out;
}

namespace {

void enumerate_rec(const Quiver& q, std::size_t remaining, VertexId next_target,
                   std::optional<VertexId> source, std::vector<ArrowId>& word,
                   std::vector<Path>& out) {
    if (remaining == 0) {
        if (!source || q.arrow(word.back()).source == *source)
            out.push_back(Path::of_word(word));
        return;
    }
    for (const ArrowId a : q.arrows_into(next_target)) {
        // Cheap prune: at the final slot the arrow's source must match.
        if (remaining == 1 && source && q.arrow(a).source != *source) continue;
        word.push_back(a);
        enumerate_rec(q, remaining - 1, q.arrow(a).source, source, word, out);
        word.pop_back();
    }
}

}  // namespace

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t length,
                                  std::optional<VertexId> source,
                                  std::optional<VertexId> target) {
    std::vector<Path> out;
    if (length == 0) {
        for (const auto& v : q.vertices()) {
            if (source && v.id != *source) continue;
            if (target && v.id != *target) continue;
            out.push_back(Path::trivial(v.id));
        }
        return out;
    }
    std::vector<ArrowId> word;
    if (target) {
        enumerate_rec(q, length, *target, source, word, out);
    } else {
        for (const auto& v : q.vertices()) enumerate_rec(q, length, v.id, source, word, out);
        std::sort(out.begin(), out.end());
    }
    return out;
}

namespace {

// Cycle search anchored at a start vertex; only vertices with index >= the
// anchor's are visited, so each elementary cycle appears exactly once.
void cycle_dfs(const Quiver& q, const std::set<ArrowId>* allowed, VertexId anchor,
               VertexId at, std::vector<ArrowId>& action_seq, std::set<VertexId>& on_path,
               std::vector<Path>& out) {
    for (const ArrowId a : q.arrows_from(at)) {
        if (allowed && !allowed->count(a)) continue;
        const VertexId t = q.arrow(a).target;
        if (t == anchor) {
            std::vector<ArrowId> word(action_seq.rbegin(), action_seq.rend());
            word.insert(word.begin(), a);
            out.push_back(Path::of_word(word));
            continue;
        }
        if (q.vertex_index(t) < q.vertex_index(anchor) || on_path.count(t)) continue;
        on_path.insert(t);
        action_seq.push_back(a);
        cycle_dfs(q, allowed, anchor, t, action_seq, on_path, out);
        action_seq.pop_back();
        on_path.erase(t);
    }
}

}  // namespace

std::vector<Path> find_cycles(const Quiver& q, const std::set<ArrowId>& allowed) {
    std::vector<Path> out;
    for (const auto& v : q.vertices()) {
        std::vector<ArrowId> action_seq;
        std::set<VertexId> on_path{v.id};
        cycle_dfs(q, &allowed, v.id, v.id, action_seq, on_path, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Path> find_cycles(const Quiver& q) {
    std::set<ArrowId> all;
    for (const auto& a : q.arrows()) all.insert(a.id);
    return find_cycles(q, all);
}

std::string path_to_string(const Quiver& q, const Path& p) {
    if (p.is_trivial()) return "e_" + q.vertex(p.base).label;
    std::string s;
    for (std::size_t i = 0; i < p.word.size(); ++i) {
        if (i) s += '.';
        s += q.arrow(p.word[i]).label;
    }
    return s;
}

}  // namespace prepro
