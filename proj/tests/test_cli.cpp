// End-to-end tests for the command line front end. The binary under test is
// named by the BFT_CLI environment variable (set by the test harness).

#include <catch2/catch_amalgamated.hpp>

#include "bft/bft.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

std::string cli_path() {
    const char* bin = std::getenv("BFT_CLI");
    REQUIRE(bin != nullptr);
    return bin;
}

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd = cli_path() + " " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;)
        output.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// Fixture documents written once into a per-process scratch directory.
struct Fixtures {
    std::filesystem::path dir;
    std::string fusion1, fusion2;   // the two bayesian fusion-table inputs
    std::string cat_a, cat_b;       // clashing categorical bbas on {a,b}
    std::string simple, other_frame, bad_sum;

    Fixtures() {
        dir = std::filesystem::temp_directory_path() /
              ("bft_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
        fusion1 = write("fusion1.bba",
                        "name: fusion input 1\n"
                        "frame: th1 th2 th3\n"
                        "m: th1 = 0.6\n"
                        "m: th2 = 0.1\n"
                        "m: th3 = 0.3\n");
        fusion2 = write("fusion2.bba",
                        "frame: th1 th2 th3\n"
                        "m: th1 = 0.2\n"
                        "m: th2 = 0.6\n"
                        "m: th3 = 0.2\n");
        cat_a = write("cat_a.bba", "frame: a b\nm: a = 1\n");
        cat_b = write("cat_b.bba", "frame: a b\nm: b = 1\n");
        simple = write("simple.bba",
                       "name: w2\n"
                       "frame: a b\n"
                       "m: a = 0.5\n"
                       "m: a|b = 0.5\n");
        other_frame = write("other.bba", "frame: x y z\nm: x = 1\n");
        bad_sum = write("bad_sum.bba", "frame: a b\nm: a = 0.5\nm: b = 0.4\n");
    }

    std::string write(const std::string& file, const std::string& text) {
        std::filesystem::path p = dir / file;
        std::ofstream out(p);
        out << text;
        return p.string();
    }
};

Fixtures& fixtures() {
    static Fixtures f;
    return f;
}

bft::MassFunction load(const std::string& path) {
    return bft::load_bba(path).bba;
}

} // namespace

TEST_CASE("measures: csv rows carry every measure at six decimals") {
    const auto& fx = fixtures();
    auto r = run_cli("--format csv measures " + fx.simple);
    REQUIRE(r.exit_code == 0);
    std::string expected_header =
        "file,name,NS,S,E,C,D,H_betP,Contr,delta_NS,delta_B,delta_S_1,delta_S_2,"
        "bayesian,notes\n";
    std::string expected_row =
        fx.simple +
        ",w2,0.500000,0.750000,0.000000,0.500000,0.207519,0.811278,0.707107,"
        "0.500000,0.500000,0.646447,0.646447,no,\n";
    CHECK(r.output == expected_header + expected_row);
}

TEST_CASE("measures: categorical bba gives the all-zero discord row") {
    const auto& fx = fixtures();
    auto r = run_cli("--format csv measures " + fx.cat_a);
    REQUIRE(r.exit_code == 0);
    std::string expected_row =
        fx.cat_a +
        ",,0.000000,1.000000,0.000000,0.000000,0.000000,0.000000,0.000000,"
        "0.000000,1.000000,1.000000,1.000000,yes,\n";
    CHECK(r.output.find(expected_row) != std::string::npos);
}

TEST_CASE("measures: text mode lists each measure with its name") {
    const auto& fx = fixtures();
    auto r = run_cli("measures " + fx.simple);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("== " + fx.simple + " (w2) ==") != std::string::npos);
    CHECK(r.output.find("bayesian  : no") != std::string::npos);
    CHECK(r.output.find("delta_S_1 = 0.646447") != std::string::npos);
    CHECK(r.output.find("Contr     = 0.707107") != std::string::npos);
}

TEST_CASE("measures: undefined measures appear as notes, not failures") {
    auto& fx = fixtures();
    auto path = fx.write("with_empty.bba", "frame: a b\nm: {} = 0.3\nm: a = 0.7\n");
    auto r = run_cli("--format csv measures " + path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("NS: ") != std::string::npos);   // reason in the notes column
    CHECK(r.output.find(",no,") != std::string::npos);
}

TEST_CASE("measures: --approach narrows the specificity columns") {
    const auto& fx = fixtures();
    auto r = run_cli("--format csv --approach 1 measures " + fx.simple);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("delta_S_1") != std::string::npos);
    CHECK(r.output.find("delta_S_2") == std::string::npos);
}

TEST_CASE("measures: csv output is byte-deterministic across runs") {
    const auto& fx = fixtures();
    std::string args =
        "--format csv measures " + fx.fusion1 + " " + fx.fusion2 + " " + fx.simple;
    auto r1 = run_cli(args);
    auto r2 = run_cli(args);
    REQUIRE(r1.exit_code == 0);
    CHECK(r1.output == r2.output);
}

TEST_CASE("measures: --contr-c rescales the contradiction column") {
    const auto& fx = fixtures();
    auto r1 = run_cli("--format csv measures " + fx.simple);
    auto r2 = run_cli("--format csv --contr-c 1.0 measures " + fx.simple);
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r2.exit_code == 0);
    CHECK(r1.output.find("0.707107") != std::string::npos);
    CHECK(r2.output.find("0.353553") != std::string::npos);
}

TEST_CASE("measures: a bad file is reported and the run exits nonzero") {
    const auto& fx = fixtures();
    auto r = run_cli("measures " + fx.bad_sum + " " + fx.simple, true);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("0.9") != std::string::npos);          // deficit named
    CHECK(r.output.find("delta_S_1") != std::string::npos);    // good file still reported
}

TEST_CASE("measures: missing file exits 1") {
    auto r = run_cli("measures /no/such/file.bba", true);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("cannot open") != std::string::npos);
}

TEST_CASE("combine: document output round-trips to the library result") {
    const auto& fx = fixtures();
    auto r = run_cli("combine --rule pcr5 " + fx.fusion1 + " " + fx.fusion2);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("name: pcr5\n") != std::string::npos);
    CHECK(r.output.find("frame: th1 th2 th3\n") != std::string::npos);
    auto parsed = bft::parse_bba_document(r.output, "cli-output");
    auto expected =
        bft::combine(bft::RuleId::Pcr5, load(fx.fusion1), load(fx.fusion2));
    REQUIRE(parsed.bba.focal().size() == expected.focal().size());
    for (std::size_t i = 0; i < expected.focal().size(); ++i) {
        CHECK(parsed.bba.focal()[i].first == expected.focal()[i].first);
        CHECK(parsed.bba.focal()[i].second == expected.focal()[i].second);
    }
}

TEST_CASE("combine: total conflict under dempster exits 2") {
    const auto& fx = fixtures();
    auto r = run_cli("combine --rule dempster " + fx.cat_a + " " + fx.cat_b, true);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("total conflict") != std::string::npos);
}

TEST_CASE("combine: unknown rule exits 1") {
    const auto& fx = fixtures();
    auto r = run_cli("combine --rule average " + fx.cat_a + " " + fx.cat_b, true);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("unknown combination rule") != std::string::npos);
}

TEST_CASE("combine: fewer than two inputs exits 1") {
    const auto& fx = fixtures();
    auto r = run_cli("combine --rule conjunctive " + fx.cat_a, true);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("at least two") != std::string::npos);
}

TEST_CASE("compare: text table lists inputs, rules, and selections") {
    const auto& fx = fixtures();
    auto r = run_cli("compare " + fx.fusion1 + " " + fx.fusion2);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("source") != std::string::npos);
    CHECK(r.output.find("input 1") != std::string::npos);
    CHECK(r.output.find("input 2") != std::string::npos);
    for (const char* rule :
         {"conjunctive", "dempster", "yager", "disjunctive", "dubois-prade", "pcr5"})
        CHECK(r.output.find(rule) != std::string::npos);
    CHECK(r.output.find("x_max 1-") != std::string::npos);
    CHECK(r.output.find("0.857171") != std::string::npos); // yager, first approach
}

TEST_CASE("compare: csv is tidy source,field,value rows") {
    const auto& fx = fixtures();
    auto r = run_cli("--format csv compare " + fx.fusion1 + " " + fx.fusion2);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.rfind("source,field,value\n", 0) == 0);
    CHECK(r.output.find("yager,x_max_1,th1|th2|th3\n") != std::string::npos);
    CHECK(r.output.find("yager,delta_S_1,0.857171\n") != std::string::npos);
    CHECK(r.output.find("yager,delta_S_2,0.302098\n") != std::string::npos);
    CHECK(r.output.find("pcr5,delta_S_1,0.496483\n") != std::string::npos);
}

TEST_CASE("compare: failed rules keep a flagged row") {
    const auto& fx = fixtures();
    auto r = run_cli("compare " + fx.cat_a + " " + fx.cat_b);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("note[dempster]:") != std::string::npos);
    CHECK(r.output.find("note[conjunctive]:") != std::string::npos); // all mass on {}
    CHECK(r.output.find("pcr5") != std::string::npos);
}

TEST_CASE("compare: --rules narrows the rows") {
    const auto& fx = fixtures();
    auto r = run_cli("--format csv compare --rules yager,pcr5 " + fx.fusion1 + " " +
                     fx.fusion2);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("yager,") != std::string::npos);
    CHECK(r.output.find("pcr5,") != std::string::npos);
    CHECK(r.output.find("dempster,") == std::string::npos);
    CHECK(r.output.find("disjunctive,") == std::string::npos);
}

TEST_CASE("compare: mismatched frames exit 1") {
    const auto& fx = fixtures();
    auto r = run_cli("compare " + fx.cat_a + " " + fx.other_frame, true);
    CHECK(r.exit_code == 1);
}

TEST_CASE("distance: prints the jousselme distance") {
    const auto& fx = fixtures();
    double d = bft::jousselme_distance(load(fx.fusion1), load(fx.fusion2));
    auto text = run_cli("distance " + fx.fusion1 + " " + fx.fusion2);
    REQUIRE(text.exit_code == 0);
    CHECK(text.output == "jousselme distance = " + fmt6(d) + "\n");
    auto csv = run_cli("--format csv distance " + fx.fusion1 + " " + fx.fusion2);
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.output == "fileA,fileB,distance\n" + fx.fusion1 + "," + fx.fusion2 +
                            "," + fmt6(d) + "\n");
}

TEST_CASE("distance: mismatched frames exit 1") {
    const auto& fx = fixtures();
    auto r = run_cli("distance " + fx.cat_a + " " + fx.other_frame, true);
    CHECK(r.exit_code == 1);
}

TEST_CASE("autoconflict: prints the sequence up to the requested order") {
    const auto& fx = fixtures();
    bft::MassFunction m = load(fx.fusion1);
    std::string expected;
    for (int k = 1; k <= 3; ++k)
        expected +=
            "a_" + std::to_string(k) + " = " + fmt6(bft::auto_conflict(m, k)) + "\n";
    auto r = run_cli("autoconflict -n 3 " + fx.fusion1);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == expected);

    auto csv = run_cli("--format csv autoconflict -n 2 " + fx.fusion1);
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.output == "order,value\n1," + fmt6(bft::auto_conflict(m, 1)) + "\n2," +
                            fmt6(bft::auto_conflict(m, 2)) + "\n");
}

TEST_CASE("autoconflict: order below one exits 1") {
    const auto& fx = fixtures();
    auto r = run_cli("autoconflict -n 0 " + fx.fusion1, true);
    CHECK(r.exit_code == 1);
}

TEST_CASE("paper-tables: prints every table and flags known deviations") {
    auto r = run_cli("paper-tables");
    CHECK(r.exit_code == 3);
    for (const char* table :
         {"contradiction examples", "bayesianity degrees",
          "bayesian specificity degrees", "specificity worked examples",
          "fusion specificity, bayesian inputs",
          "fusion specificity, non-bayesian inputs",
          "specificity vs classic measures"})
        CHECK(r.output.find(table) != std::string::npos);
    CHECK(r.output.find("Contr(m2)") != std::string::npos);
    CHECK(r.output.find("0.9849") != std::string::npos);
    CHECK(r.output.find("delta_S 1-[yager]") != std::string::npos);
    CHECK(r.output.find("MISMATCH") != std::string::npos);
    CHECK(r.output.find("cells checked:") != std::string::npos);
}

TEST_CASE("paper-tables: csv mode carries one row per cell") {
    auto r = run_cli("--format csv paper-tables");
    CHECK(r.exit_code == 3);
    CHECK(r.output.rfind("table,cell,kind,expected,computed,status\n", 0) == 0);
    CHECK(r.output.find(",value,") != std::string::npos);
    CHECK(r.output.find(",choice,") != std::string::npos);
    CHECK(r.output.find(",ordering,") != std::string::npos);
}

TEST_CASE("--out writes the same bytes the command prints") {
    const auto& fx = fixtures();
    auto printed = run_cli("--format csv measures " + fx.simple);
    REQUIRE(printed.exit_code == 0);
    std::filesystem::path out = fx.dir / "report.csv";
    auto r = run_cli("--format csv --out " + out.string() + " measures " + fx.simple);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.empty());
    std::ifstream in(out);
    std::string file_content((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
    CHECK(file_content == printed.output);
}

TEST_CASE("cli: help exits 0, missing subcommand exits 1") {
    auto help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("measures") != std::string::npos);
    auto none = run_cli("", true);
    CHECK(none.exit_code == 1);
    auto unknown = run_cli("frobnicate", true);
    CHECK(unknown.exit_code == 1);
}
