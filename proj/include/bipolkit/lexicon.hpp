#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace bipolkit {

struct TypeList {
    std::string name;
    std::vector<std::string> terms;  // cleaned form, single- or multi-token
};

struct Axis {
    std::string name;
    std::vector<TypeList> types;  // at least two
};

struct Lexicon {
    std::string language;
    std::vector<Axis> axes;
};

struct Diagnostic {
    enum class Severity { error, warning };
    Severity severity;
    std::string message;
};

// Structural checks plus a warning for terms shared across types of one axis.
std::vector<Diagnostic> validate_lexicon(const Lexicon& lex);

// Parses the lexicon JSON file and rejects any invariant violation.
Lexicon load_lexicon(const std::string& path);
std::string lexicon_to_json_string(const Lexicon& lex);

struct TermCount {
    std::string term;
    std::uint64_t count;
};

struct TypeCounts {
    std::string name;
    std::uint64_t sum = 0;                 // summed frequency of all terms of this type
    std::vector<TermCount> terms;          // nonzero per-term counts, lexicon order
};

struct AxisCounts {
    std::string axis;
    std::vector<TypeCounts> types;         // every type of the axis, lexicon order
};

// Term-frequency counting over a compiled lexicon. Multi-token terms match
// contiguous token runs greedily left to right without overlapping
// themselves; distinct terms count independently.
class Matcher {
public:
    explicit Matcher(const Lexicon& lex);

    std::size_t term_count() const { return terms_.size(); }
    std::size_t type_count() const { return type_names_.size(); }
    std::size_t axis_count() const { return axis_names_.size(); }

    struct Scratch {
        std::vector<std::uint32_t> term_counts;   // by term id
        std::vector<std::uint64_t> type_sums;     // by type id
        std::vector<std::uint32_t> touched_terms;
        std::vector<std::uint32_t> touched_types;
        std::vector<std::size_t> next_start;      // per multi-token term
    };
    Scratch make_scratch() const;

    // Fills scratch with counts for one token sequence (resets it first).
    void count(const std::vector<std::string>& tokens, Scratch& scratch) const;

    // Type ids of one axis occupy [axis_type_begin(a), axis_type_end(a)).
    std::size_t axis_type_begin(std::size_t axis) const { return axis_begin_[axis]; }
    std::size_t axis_type_end(std::size_t axis) const { return axis_begin_[axis + 1]; }
    const std::string& axis_name(std::size_t axis) const { return axis_names_[axis]; }
    const std::string& type_name(std::size_t type) const { return type_names_[type]; }
    std::size_t type_axis(std::size_t type) const { return type_axis_[type]; }
    std::size_t term_type(std::size_t term) const { return terms_[term].type; }
    const std::string& term_text(std::size_t term) const { return terms_[term].text; }

private:
    struct Term {
        std::string text;
        std::vector<std::string> tokens;
        std::size_t type = 0;
        std::size_t multi_slot = 0;  // valid when tokens.size() > 1
    };

    std::vector<Term> terms_;
    std::vector<std::string> axis_names_;
    std::vector<std::string> type_names_;
    std::vector<std::size_t> type_axis_;
    std::vector<std::size_t> axis_begin_;  // axis_count()+1 entries
    std::unordered_map<std::string, std::vector<std::uint32_t>> single_;  // token -> term ids
    std::unordered_map<std::string, std::vector<std::uint32_t>> multi_;   // first token -> term ids
    std::size_t multi_count_ = 0;
};

// Convenience wrapper over Matcher for one sample.
std::vector<AxisCounts> match_terms(const std::vector<std::string>& tokens, const Lexicon& lex);
std::vector<AxisCounts> match_terms(const std::vector<std::string>& tokens, const Matcher& matcher);

}  // namespace bipolkit
