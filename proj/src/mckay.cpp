#include "prepro/mckay.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "prepro/errors.hpp"

namespace prepro {

CyclicGroupSpec::CyclicGroupSpec(long order, std::vector<long> w)
    : r(order), weights(std::move(w)) {
    if (r < 1) throw InvalidArgument("group order must be >= 1");
    if (weights.empty()) throw InvalidArgument("at least one weight required");
    for (long& a : weights) a = ((a % r) + r) % r;
}

bool CyclicGroupSpec::in_sl() const {
    long s = std::accumulate(weights.begin(), weights.end(), 0L);
    return s % r == 0;
}

bool CyclicGroupSpec::faithful() const {
    long g = r;
    for (long a : weights) g = std::gcd(g, a);
    return g == 1;
}

CyclicGroupSpec CyclicGroupSpec::normalized() const {
    long g = r;
    for (long a : weights) g = std::gcd(g, a);
    std::vector<long> w = weights;
    for (long& a : w) a /= g;
    return CyclicGroupSpec(r / g, std::move(w));
}

CyclicGroupSpec CyclicGroupSpec::parse(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("group spec must look like r:a1,a2,...");
    auto parse_long = [&](const std::string& t) {
        if (t.empty()) throw ParseError("empty number in group spec: " + s);
        std::size_t pos = 0;
        long v;
        try {
            v = std::stol(t, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad number in group spec: " + s);
        }
        if (pos != t.size()) throw ParseError("bad number in group spec: " + s);
        return v;
    };
    const long r = parse_long(s.substr(0, colon));
    std::vector<long> weights;
    std::string rest = s.substr(colon + 1);
    std::size_t start = 0;
    while (true) {
        const auto comma = rest.find(',', start);
        weights.push_back(parse_long(rest.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return CyclicGroupSpec(r, std::move(weights));
}

std::string CyclicGroupSpec::to_string() const {
    std::ostringstream os;
    os << r << ":";
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i) os << ",";
        os << weights[i];
    }
    return os.str();
}

namespace {

// Arrow id of x_i^l under the fixed (type-major, then vertex) ordering.
ArrowId mckay_arrow(const CyclicGroupSpec& s, std::size_t type, long vertex) {
    return static_cast<ArrowId>(static_cast<long>(type) * s.r + vertex);
}

}  // namespace

QuadraticPresentation mckay_presentation(const CyclicGroupSpec& s) {
    Quiver q;
    for (long l = 0; l < s.r; ++l) q.add_vertex_with_id(static_cast<VertexId>(l),
                                                        std::to_string(l));
    for (std::size_t i = 0; i < s.n(); ++i)
        for (long l = 0; l < s.r; ++l) {
            std::string label = "x" + std::to_string(i + 1) + "^" + std::to_string(l);
            q.add_arrow_with_id(mckay_arrow(s, i, l), static_cast<VertexId>(l),
                                static_cast<VertexId>((l + s.weights[i]) % s.r), label);
        }
    std::vector<PathVector> relations;
    for (long l = 0; l < s.r; ++l)
        for (std::size_t i = 0; i < s.n(); ++i)
            for (std::size_t i2 = i + 1; i2 < s.n(); ++i2) {
                PathVector rel;
                rel.add_term(Path::of_word({mckay_arrow(s, i2, (l + s.weights[i]) % s.r),
                                            mckay_arrow(s, i, l)}),
                             1);
                rel.add_term(Path::of_word({mckay_arrow(s, i, (l + s.weights[i2]) % s.r),
                                            mckay_arrow(s, i2, l)}),
                             -1);
                relations.push_back(std::move(rel));
            }
    return QuadraticPresentation(std::move(q), std::move(relations));
}

Superpotential skew_superpotential(const CyclicGroupSpec& s) {
    if (!s.in_sl())
        throw PreconditionError("skew superpotential needs the SL condition (weight sum " +
                                std::to_string(std::accumulate(s.weights.begin(),
                                                               s.weights.end(), 0L)) +
                                " not divisible by " + std::to_string(s.r) + ")");
    QuadraticPresentation pres = mckay_presentation(s);
    const Quiver& q = pres.quiver();
    const std::size_t n = s.n();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    PathVector omega;
    for (long l = 0; l < s.r; ++l) {
        std::vector<std::size_t> types = perm;
        do {
            // Parity by counting inversions.
            int inv = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (types[i] > types[j]) ++inv;
            long at = l;
            std::vector<ArrowId> action;
            for (std::size_t k = 0; k < n; ++k) {
                action.push_back(mckay_arrow(s, types[k], at));
                at = (at + s.weights[types[k]]) % s.r;
            }
            Path word;
            word.word.assign(action.rbegin(), action.rend());
            omega.add_term(word, inv % 2 == 0 ? 1 : -1);
        } while (std::next_permutation(types.begin(), types.end()));
    }
    return Superpotential(q, std::move(omega));
}

WeightGrading air_grading(const CyclicGroupSpec& s) {
    WeightGrading g;
    for (std::size_t i = 0; i < s.n(); ++i)
        for (long l = 0; l < s.r; ++l)
            g[mckay_arrow(s, i, l)] = (l + s.weights[i] >= s.r) ? 1 : 0;
    return g;
}

GroupClassification classify_group(const CyclicGroupSpec& s) {
    GroupClassification rec{s, s.normalized(), false, std::nullopt, false, false,
                            EmbedFlag::Unknown, GroupVerdict::Unknown};
    const CyclicGroupSpec& ns = rec.normalized;
    const long r = ns.r;
    const std::size_t n = ns.n();

    bool all_generators_cond_b = true;
    // k = r only passes the gcd filter when r = 1, where the identity is the
    // sole generator.
    for (long k = 1; k <= r; ++k) {
        if (std::gcd(k, r) != 1) continue;
        std::vector<long> w(n);
        bool all_pos = true, all_coprime = true;
        long sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = (k * ns.weights[i]) % r;
            sum += w[i];
            if (w[i] == 0) all_pos = false;
            if (std::gcd(w[i], r) != 1) all_coprime = false;
        }
        if (!all_pos) rec.cond_a = true;
        if (!(all_pos && sum > r)) all_generators_cond_b = false;
        if (all_pos && all_coprime && sum == r && !rec.air) {
            rec.air = true;
            rec.air_generator_weights = w;
        }
    }
    rec.cond_b = all_generators_cond_b;

    // Embedding into SL(n1) x SL(n2) needs n >= 2; the converse of the
    // embedding criterion applies only for n <= 4 or with a zero weight.
    if (n < 2) {
        rec.embeds = EmbedFlag::No;
    } else if (rec.cond_a) {
        rec.embeds = EmbedFlag::Yes;
    } else if (rec.cond_b) {
        rec.embeds = (n <= 4) ? EmbedFlag::Yes : EmbedFlag::Unknown;
    } else {
        rec.embeds = EmbedFlag::No;
    }

    if (rec.air)
        rec.verdict = GroupVerdict::PreprojectiveGradingExists;
    else if (rec.embeds == EmbedFlag::Yes)
        rec.verdict = GroupVerdict::NoPreprojectiveStructure;
    else
        rec.verdict = GroupVerdict::Unknown;
    return rec;
}

std::string to_string(EmbedFlag f) {
    switch (f) {
        case EmbedFlag::Yes: return "yes";
        case EmbedFlag::No: return "no";
        default: return "unknown";
    }
}

std::string to_string(GroupVerdict v) {
    switch (v) {
        case GroupVerdict::PreprojectiveGradingExists: return "preprojective-grading-exists";
        case GroupVerdict::NoPreprojectiveStructure: return "no-preprojective-structure";
        default: return "unknown";
    }
}

}  // namespace prepro
