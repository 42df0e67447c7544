// bft — belief-functions toolkit command line front end.
//
// Commands
//   measures <file...>            scalar measure report per bba
//   combine --rule <name> <f...>  combine two or more bbas, print the result
//   compare <fileA> <fileB>       rule-by-rule specificity comparison
//   distance <fileA> <fileB>      Jousselme distance between two bbas
//   autoconflict -n <N> <file>    auto-conflict sequence a_1..a_N
//   paper-tables                  regenerate the built-in reference tables
//
// Global flags: --format text|csv, --contr-c <real>, --approach 1|2, --out <path>.
// Exit codes: 0 success, 1 validation/parse error, 2 computation error,
// 3 reference-table mismatch.

#include "bft/bft.hpp"
#include "reference_tables.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Options {
    std::string format = "text";
    double contr_c = 2.0;
    int approach = 0; // 0 = both, 1 or 2 = only that selection approach
    std::string out_path;

    bool want_approach(int which) const { return approach == 0 || approach == which; }
};

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fmt_decimals(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"')
            quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

// Left-aligned column padding for the text tables.
std::string pad(const std::string& s, std::size_t width) {
    std::string out = s;
    if (out.size() < width)
        out.append(width - out.size(), ' ');
    return out;
}

struct LoadedBba {
    std::string path;
    bft::BbaDocument doc;
};

LoadedBba load_input(const std::string& path) {
    return LoadedBba{path, bft::load_bba(path)};
}

// ---- measures -----------------------------------------------------------

struct MeasureColumn {
    const char* header;
    const bft::MeasureEntry bft::MeasureReport::* entry;
    int approach; // 0 = always shown, 1/2 = tied to that approach
};

constexpr MeasureColumn measure_columns[] = {
    {"NS", &bft::MeasureReport::non_specificity, 0},
    {"S", &bft::MeasureReport::yager_specificity, 0},
    {"E", &bft::MeasureReport::discord_pl, 0},
    {"C", &bft::MeasureReport::discord_bel, 0},
    {"D", &bft::MeasureReport::discord_betp, 0},
    {"H_betP", &bft::MeasureReport::pignistic_entropy, 0},
    {"Contr", &bft::MeasureReport::contradiction, 0},
    {"delta_NS", &bft::MeasureReport::degree_non_specificity, 0},
    {"delta_B", &bft::MeasureReport::degree_bayesianity, 0},
    {"delta_S_1", &bft::MeasureReport::degree_specificity_1, 1},
    {"delta_S_2", &bft::MeasureReport::degree_specificity_2, 2},
};

int run_measures(const Options& opt, const std::vector<std::string>& files,
                 std::ostream& out) {
    bool any_failed = false;
    bool csv = opt.format == "csv";
    if (csv) {
        out << "file,name";
        for (const auto& col : measure_columns)
            if (col.approach == 0 || opt.want_approach(col.approach))
                out << ',' << col.header;
        out << ",bayesian,notes\n";
    }
    for (const auto& path : files) {
        std::optional<LoadedBba> input;
        try {
            input = load_input(path);
        } catch (const bft::ValidationError& ex) {
            std::cerr << "error: " << ex.what() << "\n";
            any_failed = true;
            continue;
        }
        bft::MeasureReport report = bft::measure_report(input->doc.bba, opt.contr_c);
        if (csv) {
            std::string notes;
            out << csv_escape(path) << ',' << csv_escape(input->doc.name);
            for (const auto& col : measure_columns) {
                if (col.approach != 0 && !opt.want_approach(col.approach))
                    continue;
                const bft::MeasureEntry& e = report.*(col.entry);
                out << ',';
                if (e.present()) {
                    out << fmt6(*e.value);
                } else {
                    if (!notes.empty())
                        notes += "; ";
                    notes += std::string(col.header) + ": " + e.reason;
                }
            }
            out << ',' << (report.bayesian ? "yes" : "no") << ','
                << csv_escape(notes) << "\n";
        } else {
            out << "== " << path;
            if (!input->doc.name.empty())
                out << " (" << input->doc.name << ")";
            out << " ==\n";
            out << "bayesian  : " << (report.bayesian ? "yes" : "no") << "\n";
            for (const auto& col : measure_columns) {
                if (col.approach != 0 && !opt.want_approach(col.approach))
                    continue;
                const bft::MeasureEntry& e = report.*(col.entry);
                out << pad(col.header, 10) << "= ";
                if (e.present())
                    out << fmt6(*e.value);
                else
                    out << "n/a (" << e.reason << ")";
                out << "\n";
            }
            out << "\n";
        }
    }
    return any_failed ? 1 : 0;
}

// ---- combine -------------------------------------------------------------

int run_combine(const Options&, const std::string& rule_text,
                const std::vector<std::string>& files, std::ostream& out) {
    bft::RuleId rule = bft::rule_from_name(rule_text);
    std::vector<bft::MassFunction> inputs;
    inputs.reserve(files.size());
    for (const auto& path : files)
        inputs.push_back(load_input(path).doc.bba);
    bft::MassFunction combined = bft::combine_many(rule, inputs);
    out << bft::serialize_bba_document(combined, bft::rule_name(rule));
    return 0;
}

// ---- compare -------------------------------------------------------------

void render_compare_text(const Options& opt,
                         const std::vector<bft::RuleSpecificityRow>& rows,
                         const bft::Frame& frame, std::ostream& out) {
    // Columns: every subset that is focal in at least one row.
    std::set<std::uint32_t> words;
    for (const auto& row : rows)
        if (row.bba)
            for (const auto& [bits, value] : row.bba->focal()) {
                (void)value;
                words.insert(bits);
            }
    std::vector<std::string> headers{"source"};
    std::vector<std::uint32_t> word_list(words.begin(), words.end());
    for (auto w : word_list)
        headers.push_back("m(" + bft::subset_to_string(bft::SubsetRef(frame, w)) + ")");
    for (int ap = 1; ap <= 2; ++ap) {
        if (!opt.want_approach(ap))
            continue;
        headers.push_back("x_max " + std::to_string(ap) + "-");
        headers.push_back("delta_S " + std::to_string(ap) + "-");
    }

    std::vector<std::vector<std::string>> grid;
    grid.push_back(headers);
    std::vector<std::string> footnotes;
    bool any_tie = false;
    for (const auto& row : rows) {
        std::vector<std::string> cells{row.source};
        for (auto w : word_list) {
            if (row.bba) {
                double v = row.bba->mass_word(w);
                cells.push_back(v == 0.0 ? "-" : fmt6(v));
            } else {
                cells.push_back("-");
            }
        }
        for (int ap = 1; ap <= 2; ++ap) {
            if (!opt.want_approach(ap))
                continue;
            const auto& result = ap == 1 ? row.approach_1 : row.approach_2;
            if (result) {
                std::string tag = bft::subset_to_string(result->x_max);
                if (result->tie_broken) {
                    tag += "*";
                    any_tie = true;
                }
                cells.push_back(tag);
                cells.push_back(fmt6(result->delta_s));
            } else {
                cells.push_back("-");
                cells.push_back("-");
            }
        }
        grid.push_back(std::move(cells));
        if (!row.failure.empty())
            footnotes.push_back("note[" + row.source + "]: " + row.failure);
    }

    std::vector<std::size_t> widths(headers.size(), 0);
    for (const auto& cells : grid)
        for (std::size_t i = 0; i < cells.size(); ++i)
            widths[i] = std::max(widths[i], cells[i].size());
    for (const auto& cells : grid) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out << (i == 0 ? "" : "  ") << pad(cells[i], widths[i]);
        out << "\n";
    }
    if (any_tie)
        out << "* selection tie broken deterministically\n";
    for (const auto& note : footnotes)
        out << note << "\n";
}

void render_compare_csv(const Options& opt,
                        const std::vector<bft::RuleSpecificityRow>& rows,
                        const bft::Frame& frame, std::ostream& out) {
    out << "source,field,value\n";
    auto emit = [&out](const std::string& source, const std::string& field,
                       const std::string& value) {
        out << csv_escape(source) << ',' << csv_escape(field) << ','
            << csv_escape(value) << "\n";
    };
    for (const auto& row : rows) {
        if (row.bba)
            for (const auto& [bits, value] : row.bba->focal())
                emit(row.source,
                     "m(" + bft::subset_to_string(bft::SubsetRef(frame, bits)) + ")",
                     fmt6(value));
        for (int ap = 1; ap <= 2; ++ap) {
            if (!opt.want_approach(ap))
                continue;
            const auto& result = ap == 1 ? row.approach_1 : row.approach_2;
            if (!result)
                continue;
            std::string suffix = std::to_string(ap);
            emit(row.source, "x_max_" + suffix, bft::subset_to_string(result->x_max));
            emit(row.source, "delta_S_" + suffix, fmt6(result->delta_s));
            if (result->tie_broken)
                emit(row.source, "tie_" + suffix, "tie-broken");
        }
        if (!row.failure.empty())
            emit(row.source, "error", row.failure);
    }
}

int run_compare(const Options& opt, const std::string& rules_text,
                const std::string& file_a, const std::string& file_b,
                std::ostream& out) {
    std::vector<bft::RuleId> rules;
    if (rules_text.empty()) {
        rules.assign(std::begin(bft::all_rules), std::end(bft::all_rules));
    } else {
        std::istringstream parts(rules_text);
        for (std::string token; std::getline(parts, token, ',');) {
            token = bft::detail::trim_copy(token);
            if (!token.empty())
                rules.push_back(bft::rule_from_name(token));
        }
        if (rules.empty())
            throw bft::ValidationError("--rules lists no combination rule");
    }
    bft::MassFunction a = load_input(file_a).doc.bba;
    bft::MassFunction b = load_input(file_b).doc.bba;
    auto rows = bft::rule_specificity_report(a, b, rules);
    if (opt.format == "csv")
        render_compare_csv(opt, rows, a.frame(), out);
    else
        render_compare_text(opt, rows, a.frame(), out);
    return 0;
}

// ---- distance ------------------------------------------------------------

int run_distance(const Options& opt, const std::string& file_a,
                 const std::string& file_b, std::ostream& out) {
    bft::MassFunction a = load_input(file_a).doc.bba;
    bft::MassFunction b = load_input(file_b).doc.bba;
    double d = bft::jousselme_distance(a, b);
    if (opt.format == "csv") {
        out << "fileA,fileB,distance\n"
            << csv_escape(file_a) << ',' << csv_escape(file_b) << ',' << fmt6(d)
            << "\n";
    } else {
        out << "jousselme distance = " << fmt6(d) << "\n";
    }
    return 0;
}

// ---- autoconflict ----------------------------------------------------------

int run_autoconflict(const Options& opt, int order, const std::string& file,
                     std::ostream& out) {
    if (order < 1)
        throw bft::ValidationError("auto-conflict order must be at least 1");
    bft::MassFunction m = load_input(file).doc.bba;
    std::vector<double> values;
    values.push_back(m.empty_set_mass());
    bft::MassFunction acc = m;
    for (int k = 2; k <= order; ++k) {
        acc = bft::combine(bft::RuleId::Conjunctive, acc, m);
        values.push_back(acc.empty_set_mass());
    }
    if (opt.format == "csv") {
        out << "order,value\n";
        for (int k = 1; k <= order; ++k)
            out << k << ',' << fmt6(values[k - 1]) << "\n";
    } else {
        for (int k = 1; k <= order; ++k)
            out << "a_" << k << " = " << fmt6(values[k - 1]) << "\n";
    }
    return 0;
}

// ---- paper-tables ----------------------------------------------------------

int display_decimals(double tol) {
    if (tol >= 0.005)
        return 2;
    if (tol >= 0.0005)
        return 4;
    return 6;
}

int run_paper_tables(const Options& opt, std::ostream& out) {
    refcorpus::Corpus corpus = refcorpus::build_corpus();
    bool csv = opt.format == "csv";

    struct Mismatch {
        std::string table, cell, detail;
    };
    std::vector<Mismatch> mismatches;

    if (csv)
        out << "table,cell,kind,expected,computed,status\n";

    // Interleave the three cell kinds per table, preserving insertion order.
    std::vector<std::string> table_order;
    for (const auto& v : corpus.values)
        if (std::find(table_order.begin(), table_order.end(), v.table) ==
            table_order.end())
            table_order.push_back(v.table);

    for (const auto& table : table_order) {
        if (!csv)
            out << "== " << table << " ==\n";
        for (const auto& v : corpus.values) {
            if (v.table != table)
                continue;
            std::string status =
                !v.checked() ? "info" : (v.pass() ? "ok" : "MISMATCH");
            std::string expected = bft::detail::format_double(v.expected, "%.10g");
            std::string computed = fmt_decimals(v.computed, display_decimals(v.tol));
            if (csv)
                out << csv_escape(table) << ',' << csv_escape(v.cell) << ",value,"
                    << expected << ',' << computed << ',' << status << "\n";
            else
                out << "  " << pad(v.cell, 44) << pad(expected, 12)
                    << pad(computed, 12) << status << "\n";
            if (v.checked() && !v.pass())
                mismatches.push_back(
                    {table, v.cell,
                     "expected " + expected + ", computed " +
                         bft::detail::format_double(v.computed, "%.10g") +
                         " (tolerance " +
                         bft::detail::format_double(v.tol, "%.10g") + ")"});
        }
        for (const auto& v : corpus.choices) {
            if (v.table != table)
                continue;
            std::string status =
                !v.checked() ? "info" : (v.pass() ? "ok" : "MISMATCH");
            if (csv)
                out << csv_escape(table) << ',' << csv_escape(v.cell) << ",choice,"
                    << csv_escape(v.expected) << ',' << csv_escape(v.computed) << ','
                    << status << "\n";
            else
                out << "  " << pad(v.cell, 44) << pad(v.expected, 12)
                    << pad(v.computed, 12) << status << "\n";
            if (v.checked() && !v.pass())
                mismatches.push_back(
                    {table, v.cell,
                     "expected " + v.expected + ", computed " + v.computed});
        }
        for (const auto& v : corpus.orderings) {
            if (v.table != table)
                continue;
            std::string status =
                !v.checked() ? "info" : (v.pass() ? "ok" : "MISMATCH");
            if (csv)
                out << csv_escape(table) << ',' << csv_escape(v.cell) << ",ordering,"
                    << "holds," << csv_escape(v.detail) << ',' << status << "\n";
            else
                out << "  " << pad(v.cell, 44) << pad("holds", 12)
                    << pad(v.detail, 12) << status << "\n";
            if (v.checked() && !v.pass())
                mismatches.push_back({table, v.cell, v.detail});
        }
    }

    if (!csv) {
        out << "\ncells checked: " << corpus.checked_cells()
            << ", mismatches: " << mismatches.size() << "\n";
        for (const auto& m : mismatches)
            out << "MISMATCH " << m.table << " :: " << m.cell << ": " << m.detail
                << "\n";
    }
    return mismatches.empty() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"belief-functions toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();
    app.add_option("--contr-c", opt.contr_c,
                   "scale constant for the contradiction measure")
        ->capture_default_str();
    app.add_option("--approach", opt.approach,
                   "restrict specificity output to one selection approach")
        ->check(CLI::IsMember({1, 2}));
    app.add_option("--out", opt.out_path, "write the report to this file");

    std::vector<std::string> measure_files;
    CLI::App* cmd_measures =
        app.add_subcommand("measures", "scalar measure report per bba file");
    cmd_measures->add_option("files", measure_files, "bba document files")
        ->required()
        ->expected(-1);
    cmd_measures->fallthrough();

    std::string combine_rule;
    std::vector<std::string> combine_files;
    CLI::App* cmd_combine =
        app.add_subcommand("combine", "combine bbas and print the result document");
    cmd_combine->add_option("--rule", combine_rule, "combination rule")->required();
    cmd_combine->add_option("files", combine_files, "two or more bba document files")
        ->required()
        ->expected(-1);
    cmd_combine->fallthrough();

    std::string compare_rules;
    std::string compare_a, compare_b;
    CLI::App* cmd_compare = app.add_subcommand(
        "compare", "specificity comparison of the combination rules");
    cmd_compare->add_option("--rules", compare_rules,
                            "comma-separated list of rules (default: all)");
    cmd_compare->add_option("fileA", compare_a, "first bba document")->required();
    cmd_compare->add_option("fileB", compare_b, "second bba document")->required();
    cmd_compare->fallthrough();

    std::string distance_a, distance_b;
    CLI::App* cmd_distance =
        app.add_subcommand("distance", "Jousselme distance between two bbas");
    cmd_distance->add_option("fileA", distance_a, "first bba document")->required();
    cmd_distance->add_option("fileB", distance_b, "second bba document")->required();
    cmd_distance->fallthrough();

    int autoconflict_order = 0;
    std::string autoconflict_file;
    CLI::App* cmd_autoconflict =
        app.add_subcommand("autoconflict", "auto-conflict sequence of one bba");
    cmd_autoconflict->add_option("-n,--order", autoconflict_order, "highest order")
        ->required();
    cmd_autoconflict->add_option("file", autoconflict_file, "bba document")
        ->required();
    cmd_autoconflict->fallthrough();

    CLI::App* cmd_tables = app.add_subcommand(
        "paper-tables", "regenerate the built-in reference tables and check them");
    cmd_tables->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    std::ostringstream report;
    int code = 0;
    try {
        if (*cmd_measures)
            code = run_measures(opt, measure_files, report);
        else if (*cmd_combine) {
            if (combine_files.size() < 2)
                throw bft::ValidationError("combine needs at least two input files");
            code = run_combine(opt, combine_rule, combine_files, report);
        } else if (*cmd_compare)
            code = run_compare(opt, compare_rules, compare_a, compare_b, report);
        else if (*cmd_distance)
            code = run_distance(opt, distance_a, distance_b, report);
        else if (*cmd_autoconflict)
            code = run_autoconflict(opt, autoconflict_order, autoconflict_file, report);
        else if (*cmd_tables)
            code = run_paper_tables(opt, report);
    } catch (const bft::ValidationError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const bft::ComputationError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }

    if (opt.out_path.empty()) {
        std::cout << report.str();
    } else {
        std::ofstream file(opt.out_path);
        if (!file) {
            std::cerr << "error: cannot write '" << opt.out_path << "'\n";
            return 1;
        }
        file << report.str();
        if (!file) {
            std::cerr << "error: write to '" << opt.out_path << "' failed\n";
            return 1;
        }
    }
    return code;
}
