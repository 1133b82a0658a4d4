#include "prepro/path_vector.hpp"

#include <algorithm>

#include "prepro/errors.hpp"

namespace prepro {

PathVector PathVector::term(Path p, Rat coef) {
    PathVector v;
    v.add_term(p, coef);
    return v;
}

void PathVector::add_term(const Path& p, const Rat& coef) {
    if (is_zero(coef)) return;
    auto [it, inserted] = terms_.emplace(p, coef);
    if (!inserted) {
        it->second += coef;
        if (is_zero(it->second)) terms_.erase(it);
    }
}

Rat PathVector::coefficient(const Path& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rat(0) : it->second;
}

PathVector& PathVector::operator+=(const PathVector& other) {
    for (const auto& [p, c] : other.terms_) add_term(p, c);
    return *this;
}

PathVector& PathVector::operator-=(const PathVector& other) {
    for (const auto& [p, c] : other.terms_) add_term(p, -c);
    return *this;
}

PathVector& PathVector::operator*=(const Rat& scalar) {
    if (is_zero(scalar)) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_) c *= scalar;
    return *this;
}

std::optional<Homogeneity> homogeneity(const Quiver& q, const PathVector& v) {
    std::optional<Homogeneity> h;
    for (const auto& [p, c] : v.terms()) {
        Homogeneity ph{path_source(q, p), path_target(q, p), p.length()};
        if (!h)
            h = ph;
        else if (!(*h == ph))
            return std::nullopt;
    }
    return h;
}

PathVector concatenate(const Quiver& q, const PathVector& u, const PathVector& v) {
    PathVector out;
    for (const auto& [pu, cu] : u.terms())
        for (const auto& [pv, cv] : v.terms())
            if (auto p = compose(q, pu, pv)) out.add_term(*p, cu * cv);
    return out;
}

std::vector<Rat> coordinates(const PathVector& v, const std::vector<Path>& basis) {
    std::vector<Rat> coords(basis.size());
    auto it = v.terms().begin();
    // Both the basis and the term map follow the canonical path order.
    std::size_t i = 0;
    for (; it != v.terms().end(); ++it) {
        while (i < basis.size() && basis[i] < it->first) ++i;
        if (i == basis.size() || !(basis[i] == it->first))
            throw InvalidArgument("path outside the coordinate basis");
        coords[i] = it->second;
    }
    return coords;
}

PathVector from_coordinates(const std::vector<Path>& basis, const std::vector<Rat>& coords) {
    if (basis.size() != coords.size()) throw InvalidArgument("coordinate length mismatch");
    PathVector v;
    for (std::size_t i = 0; i < basis.size(); ++i) v.add_term(basis[i], coords[i]);
    return v;
}

std::string pathvector_to_string(const Quiver& q, const PathVector& v) {
    if (v.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [p, c] : v.terms()) {
        std::string coef = rat_to_string(c);
        if (first) {
            if (coef == "1")
                s += path_to_string(q, p);
            else if (coef == "-1")
                s += "-" + path_to_string(q, p);
            else
                s += coef + "*" + path_to_string(q, p);
        } else {
            if (coef == "1")
                s += " + " + path_to_string(q, p);
            else if (coef == "-1")
                s += " - " + path_to_string(q, p);
            else if (sgn(c) < 0)
                s += " - " + rat_to_string(Rat(-c)) + "*" + path_to_string(q, p);
            else
                s += " + " + coef + "*" + path_to_string(q, p);
        }
        first = false;
    }
    return s;
}

}  // namespace prepro
