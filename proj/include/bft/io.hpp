#pragma once

#include "bft/mass.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>

namespace bft {

// A bba together with its optional display name, as read from or written to
// the text document format:
//
//   # comment (anywhere; the rest of the line is ignored)
//   name: optional display name
//   frame: label label ...
//   m: subset-expression = decimal     (one line per focal element)
//
// Subset expressions use "{}" for the empty set and '|' to join labels.
struct BbaDocument {
    std::string name;
    MassFunction bba;
};

namespace detail {

inline std::string trim_copy(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return std::string(s);
}

inline double parse_mass_value(const std::string& text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ValidationError("'" + text + "' is not a decimal number");
    return value;
}

} // namespace detail

// Parses one document. Errors carry the source name and 1-based line number.
inline BbaDocument parse_bba_document(std::istream& in, const std::string& source) {
    std::optional<Frame> frame;
    std::string name;
    std::vector<std::pair<SubsetRef, double>> assignments;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        return ValidationError(source + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::string body = detail::trim_copy(line);
        if (body.empty())
            continue;
        if (body.rfind("name:", 0) == 0) {
            name = detail::trim_copy(std::string_view(body).substr(5));
            continue;
        }
        if (body.rfind("frame:", 0) == 0) {
            if (frame)
                throw fail("duplicate frame line");
            std::istringstream words(body.substr(6));
            std::vector<std::string> labels;
            for (std::string w; words >> w;)
                labels.push_back(w);
            try {
                frame.emplace(std::move(labels));
            } catch (const ValidationError& ex) {
                throw fail(ex.what());
            }
            continue;
        }
        if (body.rfind("m:", 0) == 0) {
            if (!frame)
                throw fail("mass line before the frame line");
            std::string rest = body.substr(2);
            auto eq = rest.find('=');
            if (eq == std::string::npos)
                throw fail("mass line needs the form 'm: subset = value'");
            std::string expr = detail::trim_copy(std::string_view(rest).substr(0, eq));
            std::string num = detail::trim_copy(std::string_view(rest).substr(eq + 1));
            try {
                assignments.emplace_back(subset_parse(*frame, expr),
                                         detail::parse_mass_value(num));
            } catch (const ValidationError& ex) {
                throw fail(ex.what());
            }
            continue;
        }
        throw fail("unrecognized line '" + body + "'");
    }
    if (!frame)
        throw ValidationError(source + ": missing frame line");
    try {
        return BbaDocument{std::move(name), MassFunction(*frame, assignments)};
    } catch (const ValidationError& ex) {
        throw ValidationError(source + ": " + ex.what());
    }
}

inline BbaDocument parse_bba_document(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    return parse_bba_document(in, source);
}

// Serializes with focal elements in canonical ascending subset order and
// masses at 17 significant digits, so a parse/serialize round trip is
// bit-exact.
inline std::string serialize_bba_document(const MassFunction& m, const std::string& name = "") {
    std::string out;
    if (!name.empty())
        out += "name: " + name + "\n";
    out += "frame:";
    for (const auto& label : m.frame().labels())
        out += " " + label;
    out += "\n";
    for (const auto& [bits, value] : m.focal())
        out += "m: " + subset_to_string(SubsetRef(m.frame(), bits)) + " = " +
               detail::format_double(value, "%.17g") + "\n";
    return out;
}

inline BbaDocument load_bba(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open '" + path.string() + "'");
    return parse_bba_document(in, path.filename().string());
}

inline void save_bba(const MassFunction& m, const std::filesystem::path& path,
                     const std::string& name = "") {
    std::ofstream out(path);
    if (!out)
        throw ValidationError("cannot write '" + path.string() + "'");
    out << serialize_bba_document(m, name);
    if (!out)
        throw ValidationError("write to '" + path.string() + "' failed");
}

} // namespace bft
