#include "bft/bft.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>

using namespace bft;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_bba_document(text, "doc");
        return "";
    } catch (const ValidationError& e) {
        return e.what();
    }
}

} // namespace

TEST_CASE("parsing a minimal document") {
    BbaDocument doc = parse_bba_document("frame: th1 th2\nm: th1 = 1\n", "doc");
    CHECK(doc.name.empty());
    CHECK(doc.bba.frame().labels() == std::vector<std::string>{"th1", "th2"});
    CHECK(doc.bba.mass_word(1) == 1.0);
}

TEST_CASE("parsing names, comments, blanks and whitespace") {
    std::string text = "# a leading comment\n"
                       "name: expert one\n"
                       "\n"
                       "frame: th1 th2 th3   # inline comment\n"
                       "  m:  th2 | th1  =  0.25\n"
                       "m: {} = 0.05\n"
                       "m: th3 = 0.7 # trailing\n";
    BbaDocument doc = parse_bba_document(text, "doc");
    CHECK(doc.name == "expert one");
    CHECK(doc.bba.mass_word(3) == 0.25);
    CHECK(doc.bba.empty_set_mass() == 0.05);
    CHECK(doc.bba.mass_word(4) == 0.7);
}

TEST_CASE("parsing tolerates CRLF line endings") {
    BbaDocument doc = parse_bba_document("frame: a b\r\nm: a = 1\r\n", "doc");
    CHECK(doc.bba.mass_word(1) == 1.0);
}

TEST_CASE("duplicate subset lines accumulate") {
    BbaDocument doc =
        parse_bba_document("frame: a b\nm: a = 0.3\nm: a = 0.3\nm: b = 0.4\n", "doc");
    CHECK(doc.bba.mass_word(1) == 0.6);
}

TEST_CASE("parse errors carry the source and line number") {
    CHECK(error_of("frame: a b\nm: c = 1\n").find("doc:2") != std::string::npos);
    CHECK(error_of("frame: a b\nm: c = 1\n").find("unknown label") != std::string::npos);
    CHECK(error_of("frame: a b\nm: a = x\n").find("doc:2") != std::string::npos);
    CHECK(error_of("frame: a b\nm: a 1\n").find("doc:2") != std::string::npos);
    CHECK(error_of("m: a = 1\nframe: a\n").find("doc:1") != std::string::npos);
    CHECK(error_of("frame: a b\nframe: a b\n").find("duplicate frame") != std::string::npos);
    CHECK(error_of("frame: a b\nwhat is this\n").find("unrecognized") != std::string::npos);
    CHECK(error_of("frame: a a\n").find("doc:1") != std::string::npos);
    CHECK(error_of("").find("missing frame") != std::string::npos);
    CHECK(error_of("# only a comment\n").find("missing frame") != std::string::npos);
}

TEST_CASE("mass total is validated with the offending sum named") {
    std::string msg = error_of("frame: a b\nm: a = 0.4\nm: b = 0.5\n");
    CHECK(msg.find("doc") != std::string::npos);
    CHECK(msg.find("0.9") != std::string::npos);
    CHECK(error_of("frame: a b\nm: a = -0.1\nm: b = 1.1\n").find("negative") !=
          std::string::npos);
}

TEST_CASE("serialization uses canonical order and full precision") {
    Frame f({"th1", "th2", "th3"});
    MassFunction m(f, {{SubsetRef(f, 7), 0.1},
                       {SubsetRef(f, 1), 1.0 / 3},
                       {SubsetRef(f, 0), 0.05},
                       {SubsetRef(f, 5), 0.85 - 1.0 / 3}});
    std::string text = serialize_bba_document(m, "mixed");
    // focal lines appear in ascending subset order
    auto p0 = text.find("m: {}");
    auto p1 = text.find("m: th1 ");
    auto p5 = text.find("m: th1|th3");
    auto p7 = text.find("m: th1|th2|th3");
    REQUIRE(p0 != std::string::npos);
    CHECK(p0 < p1);
    CHECK(p1 < p5);
    CHECK(p5 < p7);
    CHECK(text.rfind("name: mixed\n", 0) == 0);

    BbaDocument back = parse_bba_document(text, "doc");
    CHECK(back.name == "mixed");
    CHECK(back.bba == m); // bit-exact round trip
}

TEST_CASE("round trip is bit-exact on awkward values") {
    Frame f({"a", "b"});
    MassFunction m(f, {{SubsetRef(f, 1), 0.1}, {SubsetRef(f, 2), 0.7}, {SubsetRef(f, 3), 0.2}});
    BbaDocument once = parse_bba_document(serialize_bba_document(m), "doc");
    CHECK(once.bba == m);
    BbaDocument twice = parse_bba_document(serialize_bba_document(once.bba), "doc");
    CHECK(twice.bba == once.bba);
}

TEST_CASE("file save and load round trip") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "bft_io_test";
    fs::create_directories(dir);
    fs::path p = dir / "m.bba";

    Frame f({"th1", "th2"});
    MassFunction m(f, {{SubsetRef(f, 1), 1.0 / 3}, {SubsetRef(f, 3), 2.0 / 3}});
    save_bba(m, p, "saved");
    BbaDocument doc = load_bba(p);
    CHECK(doc.name == "saved");
    CHECK(doc.bba == m);

    CHECK_THROWS_AS(load_bba(dir / "absent.bba"), ValidationError);
    fs::remove_all(dir);
}
