#pragma once

#include "bft/frame.hpp"

#include <cmath>
#include <utility>

namespace bft {

// Basic belief assignment over a frame's powerset. Only focal elements
// (subsets carrying strictly positive mass) are stored, sorted by subset
// index. Mass on the empty set is permitted. The total mass must equal 1
// within mass_tolerance; inputs are never renormalized.
class MassFunction {
public:
    static constexpr double mass_tolerance = 1e-9;

    MassFunction(const Frame& frame,
                 const std::vector<std::pair<SubsetRef, double>>& assignments)
        : frame_(frame) {
        focal_.reserve(assignments.size());
        double sum = 0.0;
        for (const auto& [subset, value] : assignments) {
            require_same_frame(frame_, subset.frame(), "mass assignment");
            if (!(value >= 0.0)) // also rejects NaN
                throw ValidationError("mass on " + subset_to_string(subset) +
                                      " is negative or not a number");
            sum += value;
            focal_.emplace_back(subset.bits(), value);
        }
        if (std::abs(sum - 1.0) > mass_tolerance)
            throw ValidationError("masses sum to " + detail::format_double(sum) +
                                  " (off by " + detail::format_double(sum - 1.0) +
                                  "); they must sum to 1");
        std::sort(focal_.begin(), focal_.end());
        // Merge duplicate subsets, then drop zero-mass entries.
        std::size_t w = 0;
        for (std::size_t r = 0; r < focal_.size(); ++r) {
            if (w > 0 && focal_[w - 1].first == focal_[r].first)
                focal_[w - 1].second += focal_[r].second;
            else
                focal_[w++] = focal_[r];
        }
        focal_.resize(w);
        std::erase_if(focal_, [](const auto& e) { return e.second == 0.0; });
    }

    static MassFunction categorical(const Frame& frame, const SubsetRef& x) {
        return MassFunction(frame, {{x, 1.0}});
    }

    const Frame& frame() const { return frame_; }

    // Focal elements as (subset word, mass), ascending by subset word.
    const std::vector<std::pair<std::uint32_t, double>>& focal() const { return focal_; }
    std::size_t focal_count() const { return focal_.size(); }

    double mass_word(std::uint32_t bits) const {
        auto it = std::lower_bound(focal_.begin(), focal_.end(), bits,
                                   [](const auto& e, std::uint32_t b) { return e.first < b; });
        return (it != focal_.end() && it->first == bits) ? it->second : 0.0;
    }

    double mass(const SubsetRef& x) const {
        require_same_frame(frame_, x.frame(), "mass lookup");
        return mass_word(x.bits());
    }

    double empty_set_mass() const {
        return (!focal_.empty() && focal_.front().first == 0) ? focal_.front().second : 0.0;
    }

    // True when every focal element is a singleton.
    bool is_bayesian() const {
        for (const auto& [bits, value] : focal_) {
            (void)value;
            if (std::popcount(bits) != 1)
                return false;
        }
        return true;
    }

    friend bool operator==(const MassFunction& a, const MassFunction& b) {
        return a.frame_ == b.frame_ && a.focal_ == b.focal_;
    }
    friend bool operator!=(const MassFunction& a, const MassFunction& b) { return !(a == b); }

private:
    Frame frame_;
    std::vector<std::pair<std::uint32_t, double>> focal_;
};

} // namespace bft
