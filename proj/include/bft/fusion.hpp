#pragma once

#include "bft/mass.hpp"

#include <map>
#include <span>

namespace bft {

enum class RuleId { Conjunctive, Dempster, Yager, Disjunctive, DuboisPrade, Pcr5 };

inline constexpr RuleId all_rules[] = {RuleId::Conjunctive, RuleId::Dempster,
                                       RuleId::Yager,       RuleId::Disjunctive,
                                       RuleId::DuboisPrade, RuleId::Pcr5};

inline const char* rule_name(RuleId r) {
    switch (r) {
    case RuleId::Conjunctive: return "conjunctive";
    case RuleId::Dempster: return "dempster";
    case RuleId::Yager: return "yager";
    case RuleId::Disjunctive: return "disjunctive";
    case RuleId::DuboisPrade: return "dubois-prade";
    case RuleId::Pcr5: return "pcr5";
    }
    return "?";
}

inline RuleId rule_from_name(std::string_view name) {
    for (RuleId r : all_rules)
        if (name == rule_name(r))
            return r;
    if (name == "dubois_prade") // tolerated spelling
        return RuleId::DuboisPrade;
    throw ValidationError("unknown combination rule '" + std::string(name) + "'");
}

namespace detail {

inline MassFunction bba_from_words(const Frame& f, const std::map<std::uint32_t, double>& acc) {
    std::vector<std::pair<SubsetRef, double>> out;
    out.reserve(acc.size());
    for (const auto& [bits, value] : acc)
        if (value != 0.0)
            out.emplace_back(SubsetRef(f, bits), value);
    return MassFunction(f, out);
}

inline void require_empty_free(const MassFunction& m, const char* rule) {
    if (m.empty_set_mass() > MassFunction::mass_tolerance)
        throw ComputationError(std::string(rule) +
                               ": inputs must carry no mass on the empty set");
}

} // namespace detail

// Conjunctive (unnormalized) combination; conflict accumulates on the empty set.
inline MassFunction conjunctive(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1.frame(), m2.frame(), "conjunctive");
    std::map<std::uint32_t, double> acc;
    for (const auto& [a, va] : m1.focal())
        for (const auto& [b, vb] : m2.focal())
            acc[a & b] += va * vb;
    return detail::bba_from_words(m1.frame(), acc);
}

// Dempster's rule: conjunctive combination renormalized by 1 - k where k is
// the conflict mass. Total conflict (k = 1) is a computation error.
inline MassFunction dempster(const MassFunction& m1, const MassFunction& m2) {
    MassFunction c = conjunctive(m1, m2);
    double k = c.empty_set_mass();
    if (k >= 1.0 - MassFunction::mass_tolerance)
        throw ComputationError("dempster: total conflict between the inputs (k = 1)");
    std::vector<std::pair<SubsetRef, double>> out;
    out.reserve(c.focal_count());
    for (const auto& [bits, value] : c.focal())
        if (bits != 0)
            out.emplace_back(SubsetRef(c.frame(), bits), value / (1.0 - k));
    return MassFunction(c.frame(), out);
}

// Yager's rule: conjunctive combination with the conflict mass moved to the
// whole frame.
inline MassFunction yager_rule(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1.frame(), m2.frame(), "yager");
    detail::require_empty_free(m1, "yager");
    detail::require_empty_free(m2, "yager");
    MassFunction c = conjunctive(m1, m2);
    double k = c.empty_set_mass();
    std::map<std::uint32_t, double> acc;
    for (const auto& [bits, value] : c.focal())
        if (bits != 0)
            acc[bits] += value;
    if (k != 0.0)
        acc[c.frame().subset_count() - 1] += k;
    return detail::bba_from_words(c.frame(), acc);
}

// Disjunctive combination: products land on unions.
inline MassFunction disjunctive(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1.frame(), m2.frame(), "disjunctive");
    detail::require_empty_free(m1, "disjunctive");
    detail::require_empty_free(m2, "disjunctive");
    std::map<std::uint32_t, double> acc;
    for (const auto& [a, va] : m1.focal())
        for (const auto& [b, vb] : m2.focal())
            acc[a | b] += va * vb;
    return detail::bba_from_words(m1.frame(), acc);
}

// Dubois-Prade: agreeing pairs land on the intersection, conflicting pairs on
// the union.
inline MassFunction dubois_prade(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1.frame(), m2.frame(), "dubois-prade");
    detail::require_empty_free(m1, "dubois-prade");
    detail::require_empty_free(m2, "dubois-prade");
    std::map<std::uint32_t, double> acc;
    for (const auto& [a, va] : m1.focal())
        for (const auto& [b, vb] : m2.focal())
            acc[(a & b) != 0 ? (a & b) : (a | b)] += va * vb;
    return detail::bba_from_words(m1.frame(), acc);
}

// PCR5: conjunctive combination, then each conflicting product is split back
// to its two sources proportionally to their masses. A zero denominator
// contributes nothing.
inline MassFunction pcr5(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1.frame(), m2.frame(), "pcr5");
    detail::require_empty_free(m1, "pcr5");
    detail::require_empty_free(m2, "pcr5");
    std::map<std::uint32_t, double> acc;
    for (const auto& [a, va] : m1.focal())
        for (const auto& [b, vb] : m2.focal()) {
            if ((a & b) != 0) {
                acc[a & b] += va * vb;
                continue;
            }
            double den = va + vb;
            if (den > 0.0) {
                acc[a] += va * va * vb / den;
                acc[b] += vb * vb * va / den;
            }
        }
    return detail::bba_from_words(m1.frame(), acc);
}

inline MassFunction combine(RuleId rule, const MassFunction& m1, const MassFunction& m2) {
    switch (rule) {
    case RuleId::Conjunctive: return conjunctive(m1, m2);
    case RuleId::Dempster: return dempster(m1, m2);
    case RuleId::Yager: return yager_rule(m1, m2);
    case RuleId::Disjunctive: return disjunctive(m1, m2);
    case RuleId::DuboisPrade: return dubois_prade(m1, m2);
    case RuleId::Pcr5: return pcr5(m1, m2);
    }
    throw ValidationError("unknown combination rule");
}

// Left fold over the list. For rules that are not associative (yager,
// dubois-prade, pcr5) the result depends on this order.
inline MassFunction combine_many(RuleId rule, std::span<const MassFunction> bbas) {
    if (bbas.empty())
        throw ValidationError("combine_many needs at least one input");
    MassFunction acc = bbas[0];
    for (std::size_t i = 1; i < bbas.size(); ++i)
        acc = combine(rule, acc, bbas[i]);
    return acc;
}

} // namespace bft
