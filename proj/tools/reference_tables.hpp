#pragma once

// Built-in reference corpus: small fixture bbas together with the recorded
// values the toolkit is expected to regenerate. Cells carry the acceptance
// criterion they belong to (0 = shown for reference, not checked) and a
// per-cell tolerance matching how coarsely the recorded value was rounded.

#include "bft/bft.hpp"

#include <string>
#include <vector>

namespace refcorpus {

struct ValueCheck {
    int criterion;
    std::string table;
    std::string cell;
    double expected;
    double computed;
    double tol;
    bool checked() const { return criterion > 0; }
    bool pass() const { return std::abs(expected - computed) <= tol; }
};

struct ChoiceCheck {
    int criterion;
    std::string table;
    std::string cell;
    std::string expected;
    std::string computed;
    bool checked() const { return criterion > 0; }
    bool pass() const { return expected == computed; }
};

struct OrderingCheck {
    int criterion;
    std::string table;
    std::string cell;
    bool ok;
    std::string detail;
    bool checked() const { return criterion > 0; }
    bool pass() const { return ok; }
};

struct Corpus {
    std::vector<ValueCheck> values;
    std::vector<ChoiceCheck> choices;
    std::vector<OrderingCheck> orderings;

    int checked_cells() const {
        int n = 0;
        for (const auto& v : values) n += v.checked();
        for (const auto& v : choices) n += v.checked();
        for (const auto& v : orderings) n += v.checked();
        return n;
    }
    int failed_cells() const {
        int n = 0;
        for (const auto& v : values) n += v.checked() && !v.pass();
        for (const auto& v : choices) n += v.checked() && !v.pass();
        for (const auto& v : orderings) n += v.checked() && !v.pass();
        return n;
    }
};

namespace detail {

inline bft::MassFunction
mk(const bft::Frame& f, std::initializer_list<std::pair<const char*, double>> a) {
    std::vector<std::pair<bft::SubsetRef, double>> v;
    for (const auto& [expr, mass] : a)
        v.emplace_back(bft::subset_parse(f, expr), mass);
    return bft::MassFunction(f, v);
}

} // namespace detail

inline Corpus build_corpus() {
    using namespace bft;
    using detail::mk;

    Corpus c;
    constexpr double exact = 1e-9;     // value recorded without rounding
    constexpr double two_dec = 0.005;  // value recorded at 2 decimals
    constexpr double three_dec = 0.0005; // value recorded at 3-4 decimals

    Frame f2({"th1", "th2"});
    Frame f3({"th1", "th2", "th3"});
    Frame f4({"th1", "th2", "th3", "th4"});

    auto val = [&c](int crit, const std::string& table, const std::string& cell,
                    double expected, double computed, double tol) {
        c.values.push_back({crit, table, cell, expected, computed, tol});
    };
    auto choice = [&c](int crit, const std::string& table, const std::string& cell,
                       const std::string& expected, const std::string& computed) {
        c.choices.push_back({crit, table, cell, expected, computed});
    };

    { // ---- contradiction examples -------------------------------------
        const std::string t = "contradiction examples";
        MassFunction m1 = mk(f3, {{"th1", 0.5}, {"th2", 0.5}});
        MassFunction m2 = mk(f3, {{"th1", 0.6}, {"th2", 0.3}, {"th3", 0.1}});
        MassFunction m3 = mk(f3, {{"th1|th2|th3", 0.6}, {"th2", 0.3}, {"th3", 0.1}});
        MassFunction m4 = mk(f3, {{"th1|th2", 0.6}, {"th1|th3", 0.3}, {"th2|th3", 0.1}});

        val(1, t, "Contr(m1)", 1.0, contradiction(m1), exact);
        val(1, t, "Contr(m2)", 0.9849, contradiction(m2), three_dec);
        val(1, t, "Contr(m3)", 0.8092, contradiction(m3), three_dec);
        val(1, t, "Contr(m4)", 0.80, contradiction(m4), two_dec);
        val(1, t, "Contr_m2(th1)", 0.36,
            contradiction_of_element(m2, subset_parse(f3, "th1")), two_dec);
        val(1, t, "Contr_m2(th2)", 0.66,
            contradiction_of_element(m2, subset_parse(f3, "th2")), two_dec);
        val(1, t, "Contr_m2(th3)", 0.79,
            contradiction_of_element(m2, subset_parse(f3, "th3")), two_dec);
        // recorded alongside but not part of the gate
        val(0, t, "Contr_m3(th1|th2|th3)", 0.28,
            contradiction_of_element(m3, full_set(f3)), two_dec);
        val(0, t, "Contr_m3(th2)", 0.56,
            contradiction_of_element(m3, subset_parse(f3, "th2")), two_dec);
        val(0, t, "Contr_m3(th3)", 0.71,
            contradiction_of_element(m3, subset_parse(f3, "th3")), two_dec);
        val(0, t, "Contr_m4(th1|th2)", 0.29,
            contradiction_of_element(m4, subset_parse(f3, "th1|th2")), two_dec);
        val(0, t, "Contr_m4(th1|th3)", 0.53,
            contradiction_of_element(m4, subset_parse(f3, "th1|th3")), two_dec);
        val(0, t, "Contr_m4(th2|th3)", 0.65,
            contradiction_of_element(m4, subset_parse(f3, "th2|th3")), two_dec);
    }

    { // ---- bayesianity degrees ----------------------------------------
        const std::string t = "bayesianity degrees";
        const MassFunction rows[] = {
            mk(f3, {{"th1", 0.4}, {"th2", 0.1}, {"th3", 0.1}, {"th1|th2", 0.3}, {"th1|th3", 0.1}}),
            mk(f3, {{"th1", 0.3}, {"th2", 0.1}, {"th3", 0.1}, {"th1|th2", 0.3}, {"th1|th3", 0.2}}),
            mk(f3, {{"th1", 0.1}, {"th2", 0.3}, {"th3", 0.1}, {"th1|th2", 0.5}}),
            mk(f3, {{"th1", 0.3}, {"th2", 0.1}, {"th3", 0.1}, {"th1|th2|th3", 0.5}}),
            mk(f3, {{"th1|th2", 0.6}, {"th1|th3", 0.4}}),
            mk(f3, {{"th1|th2", 0.6}, {"th1|th2|th3", 0.4}}),
            mk(f3, {{"th1|th2|th3", 1.0}}),
        };
        const double recorded_b[] = {0.75, 0.68, 0.68, 0.5, 0.37, 0.23, 0.0};
        for (int i = 0; i < 7; ++i) {
            std::string tag = "m" + std::to_string(i + 1);
            val(2, t, "delta_B[" + tag + "]", recorded_b[i],
                degree_bayesianity(rows[i]), two_dec);
            val(2, t, "delta_NS[" + tag + "]", 1.0 - recorded_b[i],
                degree_non_specificity(rows[i]), two_dec);
        }
        MassFunction rehosted = mk(
            f4, {{"th1", 0.4}, {"th2", 0.1}, {"th3", 0.1}, {"th1|th2", 0.3}, {"th1|th3", 0.1}});
        val(2, t, "delta_B[m1 on a 4-label frame]", 0.80, degree_bayesianity(rehosted),
            two_dec);
    }

    { // ---- bayesian specificity degrees --------------------------------
        const std::string t = "bayesian specificity degrees";
        const MassFunction rows[] = {
            mk(f3, {{"th1", 1.0 / 3}, {"th2", 1.0 / 3}, {"th3", 1.0 / 3}}),
            mk(f3, {{"th1", 0.4}, {"th2", 0.4}, {"th3", 0.2}}),
            mk(f3, {{"th1", 0.45}, {"th2", 0.45}, {"th3", 0.10}}),
            mk(f3, {{"th1", 0.45}, {"th2", 0.40}, {"th3", 0.15}}),
            mk(f3, {{"th1", 0.45}, {"th2", 0.30}, {"th3", 0.25}}),
            mk(f3, {{"th1", 0.45}, {"th2", 0.275}, {"th3", 0.275}}),
            mk(f3, {{"th1", 0.6}, {"th2", 0.3}, {"th3", 0.1}}),
            mk(f3, {{"th1", 1.0}}),
        };
        const double recorded[] = {0.423, 0.471, 0.493, 0.508, 0.523, 0.524, 0.639, 1.0};
        double ds[8];
        for (int i = 0; i < 8; ++i) {
            ds[i] = degree_specificity(rows[i], SpecificityApproach::FocalRatio);
            val(3, t, "delta_S[m" + std::to_string(i + 1) + "]", recorded[i], ds[i],
                three_dec);
        }
        bool ordered = ds[2] < ds[3] && ds[3] < ds[4] && ds[4] < ds[5];
        c.orderings.push_back({3, t, "delta_S[m3] < delta_S[m4] < delta_S[m5] < delta_S[m6]",
                               ordered,
                               ordered ? "strictly increasing" : "chain broken"});
    }

    { // ---- specificity worked examples ---------------------------------
        const std::string t = "specificity worked examples";
        MassFunction w1 = mk(f2, {{"th1", 0.6}, {"th1|th2", 0.4}});
        MassFunction w2 = mk(f2, {{"th1", 0.5}, {"th1|th2", 0.5}});
        MassFunction w3 = mk(f2, {{"th1", 0.5}, {"th2", 0.5}});
        MassFunction w4 = mk(f3, {{"th1", 0.6}, {"th1|th2|th3", 0.4}});
        MassFunction w5 = mk(f3, {{"th1|th2", 0.7}, {"th1|th3", 0.3}});
        val(4, t, "delta_S(w1)", 0.7172,
            degree_specificity(w1, SpecificityApproach::FocalRatio), three_dec);
        val(4, t, "delta_S(w2)", 0.6465,
            degree_specificity(w2, SpecificityApproach::FocalRatio), three_dec);
        val(4, t, "delta_S(w3)", 0.5,
            degree_specificity(w3, SpecificityApproach::FocalRatio), three_dec);
        val(4, t, "delta_S(w4)", 0.6734,
            degree_specificity(w4, SpecificityApproach::FocalRatio), three_dec);
        val(4, t, "delta_S(w5) first approach", 0.755,
            degree_specificity(w5, SpecificityApproach::FocalRatio), three_dec);
        val(4, t, "delta_S(w5) second approach", 0.111,
            degree_specificity(w5, SpecificityApproach::PignisticArgmax), three_dec);
    }

    // ---- the two fusion tables ---------------------------------------
    struct FusionFixture {
        int criterion;
        std::string table;
        MassFunction in1, in2;
        // recorded cells, indexed by column (input1, input2, then the six rules)
        // and by subset word 0..7
        double mass[8][8];
        const char* xmax1[8];
        const char* xmax2[8];
        double ds1[8];
        double ds2[8];
    };

    const std::vector<FusionFixture> fusions = {
        {5,
         "fusion specificity, bayesian inputs",
         mk(f3, {{"th1", 0.6}, {"th2", 0.1}, {"th3", 0.3}}),
         mk(f3, {{"th1", 0.2}, {"th2", 0.6}, {"th3", 0.2}}),
         {{0, 0.6, 0.1, 0, 0.3, 0, 0, 0},
          {0, 0.2, 0.6, 0, 0.2, 0, 0, 0},
          {0.76, 0.12, 0.06, 0, 0.06, 0, 0, 0},
          {0, 0.50, 0.25, 0, 0.25, 0, 0, 0},
          {0, 0.12, 0.06, 0, 0.06, 0, 0, 0.76},
          {0, 0.12, 0.06, 0.38, 0.06, 0.18, 0.20, 0},
          {0, 0.12, 0.06, 0.38, 0.06, 0.18, 0.20, 0},
          {0, 0.43, 0.37, 0, 0.20, 0, 0, 0}},
         {"th1", "th2", "th1", "th1", "th1|th2|th3", "th1|th2", "th1|th2", "th1"},
         {"th1", "th2", "th1", "th1", "th1", "th1", "th1", "th1"},
         {0.639, 0.655, 0.176, 0.567, 0.857, 0.619, 0.619, 0.497},
         {0.639, 0.655, 0.176, 0.567, 0.457, 0.478, 0.478, 0.497}},
        {6,
         "fusion specificity, non-bayesian inputs",
         mk(f3, {{"th1", 0.4}, {"th2", 0.1}, {"th3", 0.3}, {"th1|th2", 0.2}}),
         mk(f3, {{"th1", 0.2}, {"th2", 0.3}, {"th3", 0.1}, {"th1|th2", 0.1},
                 {"th2|th3", 0.2}, {"th1|th2|th3", 0.1}}),
         {{0, 0.4, 0.1, 0.2, 0.3, 0, 0, 0},
          {0, 0.2, 0.3, 0.1, 0.1, 0, 0.2, 0.1},
          {0.47, 0.2, 0.17, 0.04, 0.12, 0, 0, 0},
          {0, 0.377, 0.321, 0.076, 0.226, 0, 0, 0},
          {0, 0.2, 0.17, 0.04, 0.12, 0, 0, 0.47},
          {0, 0.08, 0.03, 0.31, 0.03, 0.1, 0.18, 0.27},
          {0, 0.2, 0.17, 0.18, 0.12, 0.1, 0.1, 0.13},
          {0, 0.39, 0.28, 0.06, 0.24, 0, 0.03, 0}},
         {"th1", "th2", "th1", "th1", "th1", "th1|th2", "th1", "th1"},
         {"th1", "th2", "th1", "th1", "th1", "th1", "th1", "th1"},
         {0.553, 0.522, 0.336, 0.488, 0.389, 0.609, 0.428, 0.497},
         {0.553, 0.522, 0.336, 0.488, 0.389, 0.456, 0.428, 0.497}},
    };

    for (const auto& fx : fusions) {
        const char* columns[] = {"input 1",     "input 2",      "conjunctive",
                                 "dempster",    "yager",        "disjunctive",
                                 "dubois-prade", "pcr5"};
        std::vector<MassFunction> col_bba;
        col_bba.push_back(fx.in1);
        col_bba.push_back(fx.in2);
        for (RuleId r : all_rules)
            col_bba.push_back(combine(r, fx.in1, fx.in2));
        for (int col = 0; col < 8; ++col) {
            const MassFunction& m = col_bba[col];
            for (std::uint32_t w = 0; w < 8; ++w)
                val(fx.criterion, fx.table,
                    std::string("m[") + columns[col] + "](" +
                        subset_to_string(SubsetRef(f3, w)) + ")",
                    fx.mass[col][w], m.mass_word(w), two_dec);
            auto s1 = most_specific_element(m, SpecificityApproach::FocalRatio);
            auto s2 = most_specific_element(m, SpecificityApproach::PignisticArgmax);
            choice(fx.criterion, fx.table,
                   std::string("x_max 1-[") + columns[col] + "]", fx.xmax1[col],
                   subset_to_string(s1.x_max));
            choice(fx.criterion, fx.table,
                   std::string("x_max 2-[") + columns[col] + "]", fx.xmax2[col],
                   subset_to_string(s2.x_max));
            val(fx.criterion, fx.table,
                std::string("delta_S 1-[") + columns[col] + "]", fx.ds1[col],
                degree_specificity(m, SpecificityApproach::FocalRatio), three_dec);
            val(fx.criterion, fx.table,
                std::string("delta_S 2-[") + columns[col] + "]", fx.ds2[col],
                degree_specificity(m, SpecificityApproach::PignisticArgmax), three_dec);
        }
    }

    { // ---- specificity against the classic measures ---------------------
        const std::string t = "specificity vs classic measures";
        MassFunction uniform = mk(f3, {{"th1", 1.0 / 3}, {"th2", 1.0 / 3}, {"th3", 1.0 / 3}});
        MassFunction halves = mk(f2, {{"th1", 0.5}, {"th2", 0.5}});
        MassFunction certain = mk(f3, {{"th1", 1.0}});
        const MassFunction* rows[] = {&uniform, &halves, &certain};
        const char* tags[] = {"uniform", "two halves", "certainty"};
        const double recorded_ds[] = {0.423, 0.5, 1.0};
        for (int i = 0; i < 3; ++i) {
            val(7, t, std::string("NS[") + tags[i] + "]", 0.0, non_specificity(*rows[i]),
                exact);
            val(7, t, std::string("S[") + tags[i] + "]", 1.0, yager_specificity(*rows[i]),
                exact);
            val(7, t, std::string("delta_S[") + tags[i] + "]", recorded_ds[i],
                degree_specificity(*rows[i], SpecificityApproach::FocalRatio), three_dec);
        }
    }

    return c;
}

} // namespace refcorpus
