#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bft {

// Malformed input: bad labels, masses that do not sum to one, parse failures,
// operands living on different frames.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed input for which the requested quantity is undefined
// (total conflict, log of zero, all mass on the empty set, ...).
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string format_double(double v, const char* fmt = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

} // namespace detail

// Frame of discernment: an ordered list of distinct hypothesis labels.
// Immutable and cheap to copy. Subsets are n-bit membership words over it:
// bit i set <=> label i present, so index 0 is the empty set and
// index 2^n - 1 the whole frame.
class Frame {
public:
    // Keeps subset words in 32 bits and powerset sweeps tractable.
    static constexpr std::size_t max_size = 20;

    explicit Frame(std::vector<std::string> labels) {
        if (labels.empty())
            throw ValidationError("frame needs at least one label");
        if (labels.size() > max_size)
            throw ValidationError("frame exceeds the " + std::to_string(max_size) +
                                  "-label limit");
        for (const auto& l : labels) {
            if (l.empty())
                throw ValidationError("empty frame label");
            if (l.find_first_of(" \t|{}#=") != std::string::npos)
                throw ValidationError("label '" + l + "' contains a reserved character");
        }
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ValidationError("duplicate frame label");
        labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
    }

    std::size_t size() const { return labels_->size(); }
    std::uint32_t subset_count() const { return std::uint32_t{1} << size(); }
    const std::string& label(std::size_t i) const { return (*labels_)[i]; }
    const std::vector<std::string>& labels() const { return *labels_; }

    std::optional<std::size_t> index_of(std::string_view label) const {
        for (std::size_t i = 0; i < labels_->size(); ++i)
            if ((*labels_)[i] == label)
                return i;
        return std::nullopt;
    }

    // Content equality: two frames agree iff they list the same labels in the
    // same order, regardless of how they were built.
    friend bool operator==(const Frame& a, const Frame& b) {
        return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
    }
    friend bool operator!=(const Frame& a, const Frame& b) { return !(a == b); }

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
};

inline void require_same_frame(const Frame& a, const Frame& b, const char* what) {
    if (a != b)
        throw ValidationError(std::string(what) + ": operands live on different frames");
}

// One subset of a frame, as a validated membership word.
class SubsetRef {
public:
    SubsetRef(Frame frame, std::uint32_t bits) : frame_(std::move(frame)), bits_(bits) {
        if (bits_ >= frame_.subset_count())
            throw ValidationError("subset word " + std::to_string(bits_) +
                                  " out of range for a " + std::to_string(frame_.size()) +
                                  "-label frame");
    }

    const Frame& frame() const { return frame_; }
    std::uint32_t bits() const { return bits_; }
    std::size_t cardinality() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool is_empty() const { return bits_ == 0; }
    bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }

    friend bool operator==(const SubsetRef& a, const SubsetRef& b) {
        return a.frame_ == b.frame_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const SubsetRef& a, const SubsetRef& b) { return !(a == b); }

private:
    Frame frame_;
    std::uint32_t bits_;
};

inline SubsetRef empty_set(const Frame& f) { return SubsetRef(f, 0); }
inline SubsetRef full_set(const Frame& f) { return SubsetRef(f, f.subset_count() - 1); }

inline SubsetRef singleton(const Frame& f, std::size_t i) {
    if (i >= f.size())
        throw ValidationError("singleton index out of range");
    return SubsetRef(f, std::uint32_t{1} << i);
}

inline SubsetRef subset_intersect(const SubsetRef& a, const SubsetRef& b) {
    require_same_frame(a.frame(), b.frame(), "subset_intersect");
    return SubsetRef(a.frame(), a.bits() & b.bits());
}

inline SubsetRef subset_union(const SubsetRef& a, const SubsetRef& b) {
    require_same_frame(a.frame(), b.frame(), "subset_union");
    return SubsetRef(a.frame(), a.bits() | b.bits());
}

inline SubsetRef subset_complement(const SubsetRef& a) {
    return SubsetRef(a.frame(), ~a.bits() & (a.frame().subset_count() - 1));
}

inline std::size_t subset_card(const SubsetRef& a) { return a.cardinality(); }

inline bool subset_contains(const SubsetRef& outer, const SubsetRef& inner) {
    require_same_frame(outer.frame(), inner.frame(), "subset_contains");
    return (inner.bits() & ~outer.bits()) == 0;
}

// Renders "{}" for the empty set, otherwise labels joined with '|' in frame order.
inline std::string subset_to_string(const SubsetRef& x) {
    if (x.is_empty())
        return "{}";
    std::string out;
    for (std::size_t i = 0; i < x.frame().size(); ++i) {
        if (!x.contains(i))
            continue;
        if (!out.empty())
            out += '|';
        out += x.frame().label(i);
    }
    return out;
}

// Parses "{}" or labels joined with '|'. Order-insensitive; duplicate labels
// collapse; an unknown label is a validation error.
inline SubsetRef subset_parse(const Frame& frame, std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text == "{}")
        return empty_set(frame);
    if (text.empty())
        throw ValidationError("empty subset expression");
    std::uint32_t bits = 0;
    std::size_t start = 0;
    while (true) {
        std::size_t bar = text.find('|', start);
        std::string_view tok =
            trim(text.substr(start, bar == std::string_view::npos ? bar : bar - start));
        auto idx = frame.index_of(tok);
        if (!idx)
            throw ValidationError("unknown label '" + std::string(tok) +
                                  "' in subset expression");
        bits |= std::uint32_t{1} << *idx;
        if (bar == std::string_view::npos)
            break;
        start = bar + 1;
    }
    return SubsetRef(frame, bits);
}

} // namespace bft
