#pragma once

#include "bft/metrics.hpp"

#include <optional>

namespace bft {

// One measure slot: either a value or the reason it is undefined for this bba.
struct MeasureEntry {
    std::optional<double> value;
    std::string reason;

    bool present() const { return value.has_value(); }
};

// Every scalar measure of one bba, evaluated in one sweep. Measures that are
// undefined for the input are reported absent with the reason instead of
// raising.
struct MeasureReport {
    MeasureEntry non_specificity;
    MeasureEntry yager_specificity;
    MeasureEntry discord_pl;
    MeasureEntry discord_bel;
    MeasureEntry discord_betp;
    MeasureEntry pignistic_entropy;
    MeasureEntry contradiction;
    MeasureEntry degree_non_specificity;
    MeasureEntry degree_bayesianity;
    MeasureEntry degree_specificity_1; // FocalRatio selection
    MeasureEntry degree_specificity_2; // PignisticArgmax selection
    bool bayesian = false;
};

inline MeasureReport measure_report(const MassFunction& m, double contr_c = 2.0) {
    MeasureReport r;
    r.bayesian = m.is_bayesian();
    auto eval = [](MeasureEntry& e, auto&& fn) {
        try {
            e.value = fn();
        } catch (const ComputationError& ex) {
            e.reason = ex.what();
        }
    };
    eval(r.non_specificity, [&] { return non_specificity(m); });
    eval(r.yager_specificity, [&] { return yager_specificity(m); });
    eval(r.discord_pl, [&] { return discord_pl(m); });
    eval(r.discord_bel, [&] { return discord_bel(m); });
    eval(r.discord_betp, [&] { return discord_betp(m); });
    eval(r.pignistic_entropy, [&] { return pignistic_entropy(m); });
    eval(r.contradiction, [&] { return contradiction(m, contr_c); });
    eval(r.degree_non_specificity, [&] { return degree_non_specificity(m); });
    eval(r.degree_bayesianity, [&] { return degree_bayesianity(m); });
    eval(r.degree_specificity_1,
         [&] { return degree_specificity(m, SpecificityApproach::FocalRatio); });
    eval(r.degree_specificity_2,
         [&] { return degree_specificity(m, SpecificityApproach::PignisticArgmax); });
    return r;
}

// One row of the rule comparison: an input bba or the output of one rule,
// with the specificity selection under both approaches. A failing rule keeps
// its row, flagged with the failure reason.
struct RuleSpecificityRow {
    std::string source;          // "input 1", "input 2", or the rule name
    std::optional<RuleId> rule;  // empty for the input rows
    std::optional<MassFunction> bba; // empty when the rule failed
    std::string failure;

    struct ApproachResult {
        SubsetRef x_max;
        double delta_s;
        bool tie_broken;
    };
    std::optional<ApproachResult> approach_1;
    std::optional<ApproachResult> approach_2;
};

inline std::vector<RuleSpecificityRow>
rule_specificity_report(const MassFunction& m1, const MassFunction& m2,
                        std::span<const RuleId> rules = all_rules) {
    require_same_frame(m1.frame(), m2.frame(), "rule comparison");
    std::vector<RuleSpecificityRow> rows;
    auto evaluate = [](RuleSpecificityRow& row, const MassFunction& m) {
        row.bba = m;
        auto run = [&](SpecificityApproach ap) -> std::optional<RuleSpecificityRow::ApproachResult> {
            try {
                MostSpecificSelection sel = most_specific_element(m, ap);
                double ds = 1.0 - jousselme_distance(
                                      m, MassFunction::categorical(m.frame(), sel.x_max));
                return RuleSpecificityRow::ApproachResult{sel.x_max, ds, sel.tie_broken};
            } catch (const ComputationError& ex) {
                if (row.failure.empty())
                    row.failure = ex.what();
                return std::nullopt;
            }
        };
        row.approach_1 = run(SpecificityApproach::FocalRatio);
        row.approach_2 = run(SpecificityApproach::PignisticArgmax);
    };
    for (int i = 0; i < 2; ++i) {
        RuleSpecificityRow row;
        row.source = i == 0 ? "input 1" : "input 2";
        evaluate(row, i == 0 ? m1 : m2);
        rows.push_back(std::move(row));
    }
    for (RuleId rule : rules) {
        RuleSpecificityRow row;
        row.source = rule_name(rule);
        row.rule = rule;
        try {
            evaluate(row, combine(rule, m1, m2));
        } catch (const ComputationError& ex) {
            row.failure = ex.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace bft
