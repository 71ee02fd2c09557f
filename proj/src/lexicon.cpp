#include "bipolkit/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "bipolkit/errors.hpp"
#include "bipolkit/textprep.hpp"

namespace bipolkit {

std::vector<Diagnostic> validate_lexicon(const Lexicon& lex) {
    std::vector<Diagnostic> out;
    auto error = [&](std::string msg) { out.push_back({Diagnostic::Severity::error, std::move(msg)}); };
    auto warn = [&](std::string msg) { out.push_back({Diagnostic::Severity::warning, std::move(msg)}); };

    if (lex.axes.empty()) error("lexicon has no axes");
    std::set<std::string> axis_names;
    for (const auto& axis : lex.axes) {
        if (!axis_names.insert(axis.name).second) {
            error("duplicate axis '" + axis.name + "'");
        }
        if (axis.types.size() < 2) {
            error("axis '" + axis.name + "' needs at least 2 types");
        }
        std::set<std::string> type_names;
        std::map<std::string, std::vector<std::string>> term_types;
        for (const auto& type : axis.types) {
            if (!type_names.insert(type.name).second) {
                error("axis '" + axis.name + "': duplicate type '" + type.name + "'");
            }
            if (type.terms.empty()) {
                error("axis '" + axis.name + "', type '" + type.name + "' has no terms");
            }
            std::set<std::string> seen;
            for (const auto& term : type.terms) {
                if (!seen.insert(term).second) {
                    error("axis '" + axis.name + "', type '" + type.name + "': duplicate term '" +
                          term + "'");
                }
                if (term != clean_text(term)) {
                    error("axis '" + axis.name + "', type '" + type.name + "': term '" + term +
                          "' is not in cleaned form");
                }
                term_types[term].push_back(type.name);
            }
        }
        for (const auto& [term, types] : term_types) {
            if (types.size() > 1) {
                std::string joined;
                for (const auto& t : types) joined += (joined.empty() ? "" : ", ") + t;
                warn("axis '" + axis.name + "': term '" + term + "' appears in multiple types (" +
                     joined + "); it will count toward each");
            }
        }
    }
    return out;
}

namespace {

Lexicon lexicon_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw DataError("lexicon: top-level value must be an object");
    Lexicon lex;
    if (!doc.contains("language") || !doc["language"].is_string()) {
        throw DataError("lexicon: missing string field 'language'");
    }
    lex.language = doc["language"].get<std::string>();
    if (!doc.contains("axes") || !doc["axes"].is_array()) {
        throw DataError("lexicon: missing array field 'axes'");
    }
    for (const auto& jaxis : doc["axes"]) {
        Axis axis;
        if (!jaxis.is_object() || !jaxis.contains("name") || !jaxis["name"].is_string()) {
            throw DataError("lexicon: every axis needs a string field 'name'");
        }
        axis.name = jaxis["name"].get<std::string>();
        if (!jaxis.contains("types") || !jaxis["types"].is_array()) {
            throw DataError("lexicon: axis '" + axis.name + "' needs an array field 'types'");
        }
        for (const auto& jtype : jaxis["types"]) {
            TypeList type;
            if (!jtype.is_object() || !jtype.contains("name") || !jtype["name"].is_string()) {
                throw DataError("lexicon: axis '" + axis.name +
                                "': every type needs a string field 'name'");
            }
            type.name = jtype["name"].get<std::string>();
            if (!jtype.contains("terms") || !jtype["terms"].is_array()) {
                throw DataError("lexicon: axis '" + axis.name + "', type '" + type.name +
                                "' needs an array field 'terms'");
            }
            for (const auto& jterm : jtype["terms"]) {
                if (!jterm.is_string()) {
                    throw DataError("lexicon: axis '" + axis.name + "', type '" + type.name +
                                    "': terms must be strings");
                }
                type.terms.push_back(jterm.get<std::string>());
            }
            axis.types.push_back(std::move(type));
        }
        lex.axes.push_back(std::move(axis));
    }
    return lex;
}

}  // namespace

Lexicon load_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open lexicon file: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError("lexicon " + path + ": " + e.what());
    }
    Lexicon lex = lexicon_from_json(doc);
    for (const auto& diag : validate_lexicon(lex)) {
        if (diag.severity == Diagnostic::Severity::error) {
            throw DataError("lexicon " + path + ": " + diag.message);
        }
    }
    return lex;
}

std::string lexicon_to_json_string(const Lexicon& lex) {
    nlohmann::ordered_json doc;
    doc["language"] = lex.language;
    doc["axes"] = nlohmann::ordered_json::array();
    for (const auto& axis : lex.axes) {
        nlohmann::ordered_json jaxis;
        jaxis["name"] = axis.name;
        jaxis["types"] = nlohmann::ordered_json::array();
        for (const auto& type : axis.types) {
            nlohmann::ordered_json jtype;
            jtype["name"] = type.name;
            jtype["terms"] = type.terms;
            jaxis["types"].push_back(std::move(jtype));
        }
        doc["axes"].push_back(std::move(jaxis));
    }
    return doc.dump(2) + "\n";
}

Matcher::Matcher(const Lexicon& lex) {
    axis_begin_.push_back(0);
    for (const auto& axis : lex.axes) {
        const std::size_t axis_id = axis_names_.size();
        axis_names_.push_back(axis.name);
        for (const auto& type : axis.types) {
            const std::size_t type_id = type_names_.size();
            type_names_.push_back(type.name);
            type_axis_.push_back(axis_id);
            for (const auto& term : type.terms) {
                Term t;
                t.text = term;
                t.tokens = tokenize(term);
                t.type = type_id;
                if (t.tokens.empty()) continue;  // loader rejects these; guard anyway
                const auto id = static_cast<std::uint32_t>(terms_.size());
                if (t.tokens.size() == 1) {
                    single_[t.tokens[0]].push_back(id);
                } else {
                    t.multi_slot = multi_count_++;
                    multi_[t.tokens[0]].push_back(id);
                }
                terms_.push_back(std::move(t));
            }
        }
        axis_begin_.push_back(type_names_.size());
    }
}

Matcher::Scratch Matcher::make_scratch() const {
    Scratch s;
    s.term_counts.assign(terms_.size(), 0);
    s.type_sums.assign(type_names_.size(), 0);
    s.next_start.assign(multi_count_, 0);
    return s;
}

void Matcher::count(const std::vector<std::string>& tokens, Scratch& s) const {
    for (auto id : s.touched_terms) s.term_counts[id] = 0;
    for (auto id : s.touched_types) s.type_sums[id] = 0;
    s.touched_terms.clear();
    s.touched_types.clear();
    std::fill(s.next_start.begin(), s.next_start.end(), 0);

    auto bump = [&](std::uint32_t term_id) {
        if (s.term_counts[term_id]++ == 0) s.touched_terms.push_back(term_id);
    };

    for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
        if (auto it = single_.find(tokens[pos]); it != single_.end()) {
            for (auto id : it->second) bump(id);
        }
        if (multi_count_ == 0) continue;
        if (auto it = multi_.find(tokens[pos]); it != multi_.end()) {
            for (auto id : it->second) {
                const Term& term = terms_[id];
                if (pos < s.next_start[term.multi_slot]) continue;
                if (pos + term.tokens.size() > tokens.size()) continue;
                bool match = true;
                for (std::size_t k = 1; k < term.tokens.size() && match; ++k) {
                    match = tokens[pos + k] == term.tokens[k];
                }
                if (match) {
                    bump(id);
                    s.next_start[term.multi_slot] = pos + term.tokens.size();
                }
            }
        }
    }

    for (auto id : s.touched_terms) {
        const std::size_t type = terms_[id].type;
        if (s.type_sums[type] == 0) s.touched_types.push_back(static_cast<std::uint32_t>(type));
        s.type_sums[type] += s.term_counts[id];
    }
}

std::vector<AxisCounts> match_terms(const std::vector<std::string>& tokens, const Matcher& matcher) {
    auto scratch = matcher.make_scratch();
    matcher.count(tokens, scratch);

    std::vector<AxisCounts> out(matcher.axis_count());
    for (std::size_t a = 0; a < matcher.axis_count(); ++a) {
        out[a].axis = matcher.axis_name(a);
        for (std::size_t ty = matcher.axis_type_begin(a); ty < matcher.axis_type_end(a); ++ty) {
            out[a].types.push_back({matcher.type_name(ty), scratch.type_sums[ty], {}});
        }
    }
    for (std::size_t id = 0; id < matcher.term_count(); ++id) {
        const auto c = scratch.term_counts[id];
        if (c == 0) continue;
        const std::size_t ty = matcher.term_type(id);
        const std::size_t a = matcher.type_axis(ty);
        out[a].types[ty - matcher.axis_type_begin(a)].terms.push_back({matcher.term_text(id), c});
    }
    return out;
}

std::vector<AxisCounts> match_terms(const std::vector<std::string>& tokens, const Lexicon& lex) {
    return match_terms(tokens, Matcher(lex));
}

}  // namespace bipolkit
