#pragma once

#include "bft/mass.hpp"

namespace bft {

// bel(X): total mass of the non-empty focal elements contained in X.
inline double belief(const MassFunction& m, const SubsetRef& x) {
    require_same_frame(m.frame(), x.frame(), "belief");
    double sum = 0.0;
    for (const auto& [bits, value] : m.focal())
        if (bits != 0 && (bits & ~x.bits()) == 0)
            sum += value;
    return sum;
}

// pl(X): total mass of the focal elements intersecting X.
inline double plausibility(const MassFunction& m, const SubsetRef& x) {
    require_same_frame(m.frame(), x.frame(), "plausibility");
    double sum = 0.0;
    for (const auto& [bits, value] : m.focal())
        if ((bits & x.bits()) != 0)
            sum += value;
    return sum;
}

// q(X): total mass of the focal elements containing X. q({}) = 1.
inline double commonality(const MassFunction& m, const SubsetRef& x) {
    require_same_frame(m.frame(), x.frame(), "commonality");
    double sum = 0.0;
    for (const auto& [bits, value] : m.focal())
        if ((x.bits() & ~bits) == 0)
            sum += value;
    return sum;
}

// Pignistic probabilities over the singletons: each non-empty focal element
// spreads its mass uniformly over its members. The empty set's mass is left
// out and nothing is renormalized, so the values sum to 1 - m({}).
class PignisticDistribution {
public:
    explicit PignisticDistribution(const MassFunction& m)
        : frame_(m.frame()), p_(m.frame().size(), 0.0) {
        if (m.empty_set_mass() >= 1.0 - MassFunction::mass_tolerance)
            throw ComputationError(
                "pignistic transform undefined: all mass sits on the empty set");
        for (const auto& [bits, value] : m.focal()) {
            if (bits == 0)
                continue;
            double share = value / std::popcount(bits);
            for (std::size_t i = 0; i < frame_.size(); ++i)
                if ((bits >> i) & 1u)
                    p_[i] += share;
        }
    }

    const Frame& frame() const { return frame_; }
    double value(std::size_t i) const { return p_.at(i); }
    const std::vector<double>& values() const { return p_; }

    // Additive extension to any subset: sum of the singleton values inside X.
    double measure_of(const SubsetRef& x) const {
        require_same_frame(frame_, x.frame(), "pignistic measure");
        double sum = 0.0;
        for (std::size_t i = 0; i < frame_.size(); ++i)
            if (x.contains(i))
                sum += p_[i];
        return sum;
    }

private:
    Frame frame_;
    std::vector<double> p_;
};

inline PignisticDistribution pignistic(const MassFunction& m) {
    return PignisticDistribution(m);
}

} // namespace bft
