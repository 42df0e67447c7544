#pragma once

#include "bft/fusion.hpp"
#include "bft/transforms.hpp"

namespace bft {

// Jaccard overlap of two subset words. By convention the empty set matches
// only itself: D({},{}) = 1 and D({},B) = 0 for non-empty B.
inline double jaccard_word(std::uint32_t a, std::uint32_t b) {
    if ((a | b) == 0)
        return 1.0;
    return static_cast<double>(std::popcount(a & b)) /
           static_cast<double>(std::popcount(a | b));
}

inline double jaccard_index(const SubsetRef& a, const SubsetRef& b) {
    require_same_frame(a.frame(), b.frame(), "jaccard_index");
    return jaccard_word(a.bits(), b.bits());
}

// Dense 2^n x 2^n similarity matrix in canonical subset order (row/column i
// is the subset with word i). Only for small frames; distances never need it.
class JaccardMatrix {
public:
    static constexpr std::size_t max_frame_size = 10; // 2^20 doubles = 8 MB

    explicit JaccardMatrix(const Frame& frame) : frame_(frame), dim_(frame.subset_count()) {
        if (frame.size() > max_frame_size)
            throw ComputationError("frame too large for a dense similarity matrix (limit " +
                                   std::to_string(max_frame_size) + " labels)");
        entries_.resize(static_cast<std::size_t>(dim_) * dim_);
        for (std::uint32_t i = 0; i < dim_; ++i)
            for (std::uint32_t j = 0; j < dim_; ++j)
                entries_[static_cast<std::size_t>(i) * dim_ + j] = jaccard_word(i, j);
    }

    const Frame& frame() const { return frame_; }
    std::uint32_t dimension() const { return dim_; }
    double at(std::uint32_t i, std::uint32_t j) const {
        if (i >= dim_ || j >= dim_)
            throw ValidationError("similarity matrix index out of range");
        return entries_[static_cast<std::size_t>(i) * dim_ + j];
    }

private:
    Frame frame_;
    std::uint32_t dim_;
    std::vector<double> entries_;
};

inline JaccardMatrix jaccard_matrix(const Frame& frame) { return JaccardMatrix(frame); }

// Distance d(m1, m2) = sqrt((1/2) u^T D u) with u the difference of the two
// mass vectors over the full powerset (empty set included) and D the Jaccard
// similarity. u vanishes outside the union of focal sets, so the quadratic
// form is evaluated on that sparse support and no dense matrix is built.
inline double jousselme_distance(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1.frame(), m2.frame(), "distance");
    std::vector<std::pair<std::uint32_t, double>> diff;
    diff.reserve(m1.focal_count() + m2.focal_count());
    const auto& a = m1.focal();
    const auto& b = m2.focal();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
            diff.emplace_back(a[i].first, a[i].second), ++i;
        else if (i == a.size() || b[j].first < a[i].first)
            diff.emplace_back(b[j].first, -b[j].second), ++j;
        else {
            double d = a[i].second - b[j].second;
            if (d != 0.0)
                diff.emplace_back(a[i].first, d);
            ++i, ++j;
        }
    }
    double q = 0.0;
    for (std::size_t r = 0; r < diff.size(); ++r) {
        q += diff[r].second * diff[r].second; // D(A, A) = 1
        for (std::size_t s = r + 1; s < diff.size(); ++s)
            q += 2.0 * diff[r].second * diff[s].second *
                 jaccard_word(diff[r].first, diff[s].first);
    }
    return std::sqrt(std::max(q, 0.0) / 2.0);
}

// Conflict between two experts, measured as their distance.
inline double conflict_pair(const MassFunction& m1, const MassFunction& m2) {
    return jousselme_distance(m1, m2);
}

// Mean distance from expert i to every other expert.
inline double conflict_one_vs_each(std::size_t i, std::span<const MassFunction> bbas) {
    if (bbas.size() < 2)
        throw ValidationError("conflict needs at least two experts");
    if (i >= bbas.size())
        throw ValidationError("expert index out of range");
    double sum = 0.0;
    for (std::size_t j = 0; j < bbas.size(); ++j)
        if (j != i)
            sum += jousselme_distance(bbas[i], bbas[j]);
    return sum / static_cast<double>(bbas.size() - 1);
}

// Distance from expert i to the combination of all the others. A failure of
// the combination rule propagates.
inline double conflict_one_vs_combined(std::size_t i, std::span<const MassFunction> bbas,
                                       RuleId rule = RuleId::Conjunctive) {
    if (bbas.size() < 2)
        throw ValidationError("conflict needs at least two experts");
    if (i >= bbas.size())
        throw ValidationError("expert index out of range");
    std::vector<MassFunction> others;
    others.reserve(bbas.size() - 1);
    for (std::size_t j = 0; j < bbas.size(); ++j)
        if (j != i)
            others.push_back(bbas[j]);
    return jousselme_distance(bbas[i], combine_many(rule, others));
}

// a_n: the mass the n-fold conjunctive self-combination piles onto the empty
// set. a_1 is the bba's own empty-set mass; the sequence is non-decreasing.
inline double auto_conflict(const MassFunction& m, int n) {
    if (n < 1)
        throw ValidationError("auto-conflict order must be at least 1");
    if (n == 1)
        return m.empty_set_mass();
    MassFunction acc = m;
    for (int k = 1; k < n; ++k)
        acc = conjunctive(acc, m);
    return acc.empty_set_mass();
}

namespace detail {

inline void require_empty_free_measure(const MassFunction& m, const char* what) {
    if (m.empty_set_mass() > MassFunction::mass_tolerance)
        throw ComputationError(std::string(what) +
                               " is undefined when the empty set carries mass");
}

} // namespace detail

// N(m) = sum over focal X of m(X) log2 |X|. Zero exactly for Bayesian bbas,
// maximal (log2 n) for the vacuous bba.
inline double non_specificity(const MassFunction& m) {
    detail::require_empty_free_measure(m, "non-specificity");
    double sum = 0.0;
    for (const auto& [bits, value] : m.focal())
        sum += value * std::log2(static_cast<double>(std::popcount(bits)));
    return sum;
}

// S(m) = sum over focal X of m(X) / |X|, in (0, 1]; 1 iff Bayesian.
inline double yager_specificity(const MassFunction& m) {
    detail::require_empty_free_measure(m, "specificity");
    double sum = 0.0;
    for (const auto& [bits, value] : m.focal())
        sum += value / static_cast<double>(std::popcount(bits));
    return sum;
}

// E(m) = -sum m(X) log2 pl(X).
inline double discord_pl(const MassFunction& m) {
    detail::require_empty_free_measure(m, "discord (plausibility form)");
    double sum = 0.0;
    for (const auto& [bits, value] : m.focal())
        sum -= value * std::log2(plausibility(m, SubsetRef(m.frame(), bits)));
    return sum;
}

// C(m) = -sum m(X) log2 bel(X).
inline double discord_bel(const MassFunction& m) {
    detail::require_empty_free_measure(m, "discord (belief form)");
    double sum = 0.0;
    for (const auto& [bits, value] : m.focal())
        sum -= value * std::log2(belief(m, SubsetRef(m.frame(), bits)));
    return sum;
}

// D(m) = -sum m(X) log2 betP(X), betP extended additively to subsets.
inline double discord_betp(const MassFunction& m) {
    detail::require_empty_free_measure(m, "discord (pignistic form)");
    PignisticDistribution p(m);
    double sum = 0.0;
    for (const auto& [bits, value] : m.focal())
        sum -= value * std::log2(p.measure_of(SubsetRef(m.frame(), bits)));
    return sum;
}

// Shannon entropy of the pignistic probabilities, with 0 log 0 = 0.
inline double pignistic_entropy(const MassFunction& m) {
    PignisticDistribution p(m);
    double sum = 0.0;
    for (double v : p.values())
        if (v > 0.0)
            sum -= v * std::log2(v);
    return sum;
}

// Contribution of one subset: the distance from m to the categorical bba on X.
inline double contradiction_of_element(const MassFunction& m, const SubsetRef& x) {
    require_same_frame(m.frame(), x.frame(), "contradiction");
    return jousselme_distance(m, MassFunction::categorical(m.frame(), x));
}

// Contr(m) = c * sum over focal X of m(X) d(m, m_X), default c = 2.
inline double contradiction(const MassFunction& m, double c = 2.0) {
    double sum = 0.0;
    for (const auto& [bits, value] : m.focal())
        sum += value * contradiction_of_element(m, SubsetRef(m.frame(), bits));
    return c * sum;
}

// delta_N(m) = sum m(X) log_n |X| for an n-label frame: non-specificity
// rescaled to [0, 1]. Undefined on a single-label frame (log base 1).
inline double degree_non_specificity(const MassFunction& m) {
    if (m.frame().size() < 2)
        throw ComputationError(
            "degree of non-specificity is undefined on a single-label frame");
    detail::require_empty_free_measure(m, "degree of non-specificity");
    double log_n = std::log2(static_cast<double>(m.frame().size()));
    double sum = 0.0;
    for (const auto& [bits, value] : m.focal())
        sum += value * std::log2(static_cast<double>(std::popcount(bits))) / log_n;
    return sum;
}

// delta_B(m) = 1 - delta_N(m): 1 iff Bayesian, 0 iff vacuous.
inline double degree_bayesianity(const MassFunction& m) {
    return 1.0 - degree_non_specificity(m);
}

// How the most committed element X_max is chosen for the specificity degree.
enum class SpecificityApproach {
    FocalRatio,      // argmax m(X)/|X| over non-empty focal elements
    PignisticArgmax, // argmax betP over singletons
};

struct MostSpecificSelection {
    SubsetRef x_max;
    SpecificityApproach approach;
    bool tie_broken; // another candidate achieved the same winning score
};

// Selects X_max. FocalRatio ties prefer the smaller cardinality, then the
// smaller canonical subset index; PignisticArgmax ties prefer the smaller
// singleton index. A bba with all mass on the empty set has no candidate.
inline MostSpecificSelection most_specific_element(const MassFunction& m,
                                                   SpecificityApproach approach) {
    if (approach == SpecificityApproach::FocalRatio) {
        bool have = false, tie = false;
        std::uint32_t best_bits = 0;
        double best_ratio = 0.0;
        int best_card = 0;
        for (const auto& [bits, value] : m.focal()) {
            if (bits == 0)
                continue;
            int card = std::popcount(bits);
            double ratio = value / card;
            if (!have || ratio > best_ratio) {
                have = true;
                tie = false;
                best_bits = bits;
                best_ratio = ratio;
                best_card = card;
            } else if (ratio == best_ratio) {
                tie = true;
                if (card < best_card) { // focal order already favors smaller index
                    best_bits = bits;
                    best_card = card;
                }
            }
        }
        if (!have)
            throw ComputationError(
                "most specific element undefined: all mass sits on the empty set");
        return {SubsetRef(m.frame(), best_bits), approach, tie};
    }
    PignisticDistribution p(m);
    std::size_t best = 0;
    bool tie = false;
    for (std::size_t i = 1; i < m.frame().size(); ++i) {
        if (p.value(i) > p.value(best)) {
            best = i;
            tie = false;
        } else if (p.value(i) == p.value(best)) {
            tie = true;
        }
    }
    return {singleton(m.frame(), best), approach, tie};
}

// The categorical bba on X_max.
inline MassFunction most_specific_bba(const MassFunction& m, SpecificityApproach approach) {
    return MassFunction::categorical(m.frame(),
                                     most_specific_element(m, approach).x_max);
}

// delta_S(m) = 1 - d(m, m_s) where m_s is categorical on X_max. Both
// approaches measure the distance from the original bba; they differ only in
// how X_max is picked.
inline double degree_specificity(const MassFunction& m, SpecificityApproach approach) {
    return 1.0 - jousselme_distance(m, most_specific_bba(m, approach));
}

} // namespace bft
