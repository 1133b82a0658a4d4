#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prepro/presentation.hpp"
#include "prepro/superpotential.hpp"
#include "prepro/weight_grading.hpp"

namespace prepro {

/// Cyclic subgroup 1/r(a_1,...,a_n) of GL(n): the diagonal matrix with
/// entries xi^{a_i} for a primitive r-th root of unity xi. Weights are kept
/// reduced modulo r.
struct CyclicGroupSpec {
    long r = 1;
    std::vector<long> weights;

    CyclicGroupSpec(long order, std::vector<long> w);

    std::size_t n() const { return weights.size(); }
    /// Sum of weights divisible by r, i.e. the generator lies in SL(n).
    bool in_sl() const;
    /// gcd(r, a_1, ..., a_n) = 1, i.e. the generator really has order r.
    bool faithful() const;
    /// Divides out a common factor so the stated order is the group order.
    CyclicGroupSpec normalized() const;

    /// Parses "r:a1,a2,...,an"; throws ParseError.
    static CyclicGroupSpec parse(const std::string& s);
    std::string to_string() const;
};

/// McKay presentation of the cyclic group: vertices Z_r, arrows
/// x_i^l : l -> l + a_i, and for every vertex and every pair i < i' the
/// commutator x_{i'}^{l+a_i} (x) x_i^l - x_i^{l+a_{i'}} (x) x_{i'}^l.
/// Counts: r*n arrows and r*C(n,2) independent relations.
QuadraticPresentation mckay_presentation(const CyclicGroupSpec& s);

/// Antisymmetrized n-cycle superpotential: the sum over vertices and
/// permutations of the signed routed cycle of the n arrow types. Requires the
/// SL condition (throws PreconditionError otherwise); spans K_n with one
/// generator per vertex.
Superpotential skew_superpotential(const CyclicGroupSpec& s);

/// Degree 1 exactly on the wrapping arrows (l + a_i >= r).
WeightGrading air_grading(const CyclicGroupSpec& s);

enum class EmbedFlag { Yes, No, Unknown };
enum class GroupVerdict { PreprojectiveGradingExists, NoPreprojectiveStructure, Unknown };

struct GroupClassification {
    CyclicGroupSpec spec;
    CyclicGroupSpec normalized;
    bool air = false;  // some generator has coprime positive weights summing to r
    std::optional<std::vector<long>> air_generator_weights;
    bool cond_a = false;  // some generator has a zero weight
    bool cond_b = false;  // every generator has positive weights summing beyond r
    EmbedFlag embeds = EmbedFlag::Unknown;
    GroupVerdict verdict = GroupVerdict::Unknown;
};

/// Classification by the generator conditions: the grading-existence test on
/// some generator, the embedding conditions over all generators, and the
/// partial converse (applied only when n <= 4 or a zero weight exists).
GroupClassification classify_group(const CyclicGroupSpec& s);

std::string to_string(EmbedFlag f);
std::string to_string(GroupVerdict v);

}  // namespace prepro
