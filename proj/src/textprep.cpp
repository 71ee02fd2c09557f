#include "bipolkit/textprep.hpp"

#include <cstddef>
#include <unordered_map>

#include "bipolkit/threads.hpp"
#include "bipolkit/unicode.hpp"

namespace bipolkit {
namespace {

bool ascii_word_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
}

bool ascii_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

bool matches_at(std::string_view s, std::size_t pos, std::string_view token) {
    if (pos + token.size() > s.size()) return false;
    for (std::size_t i = 0; i < token.size(); ++i) {
        char c = s[pos + i];
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        if (c != token[i]) return false;
    }
    return true;
}

// http://..., https://... and www.-prefixed hosts, consumed up to whitespace.
std::string strip_urls(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        bool hit = matches_at(s, i, "http://") || matches_at(s, i, "https://");
        if (!hit && matches_at(s, i, "www.") && (i == 0 || !ascii_word_char(s[i - 1]))) {
            hit = true;
        }
        if (hit) {
            while (i < s.size() && !ascii_space(s[i])) ++i;
            out.push_back(' ');
            continue;
        }
        out.push_back(s[i++]);
    }
    return out;
}

bool local_part_char(char c) {
    return ascii_word_char(c) || c == '.' || c == '%' || c == '+' || c == '-';
}

bool domain_char(char c) { return ascii_word_char(c) || c == '.' || c == '-'; }

bool ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

std::string strip_emails(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    std::size_t emitted = 0;  // start of the not-yet-copied tail
    while (i < s.size()) {
        if (s[i] != '@') {
            ++i;
            continue;
        }
        std::size_t begin = i;
        while (begin > emitted && local_part_char(s[begin - 1])) --begin;
        std::size_t end = i + 1;
        while (end < s.size() && domain_char(s[end])) ++end;
        while (end > i + 1 && (s[end - 1] == '.' || s[end - 1] == '-')) --end;
        // require a local part and a dotted domain with an alphabetic TLD
        bool ok = begin < i && end > i + 1;
        if (ok) {
            std::string_view domain = s.substr(i + 1, end - i - 1);
            auto dot = domain.rfind('.');
            ok = dot != std::string_view::npos && domain.size() - dot - 1 >= 2;
            for (std::size_t k = dot + 1; ok && k < domain.size(); ++k) {
                ok = ascii_alpha(domain[k]);
            }
        }
        if (!ok) {
            ++i;
            continue;
        }
        out.append(s.substr(emitted, begin - emitted));
        out.push_back(' ');
        i = emitted = end;
    }
    out.append(s.substr(emitted));
    return out;
}

bool ascii_digit(char c) { return c >= '0' && c <= '9'; }

// Dotted-quad IPv4 with word boundaries on both sides. Octets are 1-3
// digits; range validation is deliberately loose to catch log-style noise.
std::string strip_ipv4(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (!ascii_digit(s[i]) || (i > 0 && (ascii_word_char(s[i - 1])))) {
            out.push_back(s[i++]);
            continue;
        }
        std::size_t j = i;
        int groups = 0;
        bool ok = true;
        while (groups < 4) {
            std::size_t start = j;
            while (j < s.size() && ascii_digit(s[j]) && j - start < 3) ++j;
            if (j == start) {
                ok = false;
                break;
            }
            ++groups;
            if (groups < 4) {
                if (j < s.size() && s[j] == '.') {
                    ++j;
                } else {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && j < s.size() && ascii_word_char(s[j])) ok = false;
        if (ok) {
            out.push_back(' ');
            i = j;
        } else {
            out.push_back(s[i++]);
        }
    }
    return out;
}

bool is_emoji(char32_t cp) {
    return (cp >= 0x1F300 && cp <= 0x1F5FF) ||  // misc symbols and pictographs
           (cp >= 0x1F600 && cp <= 0x1F64F) ||  // emoticons
           (cp >= 0x1F680 && cp <= 0x1F6FF) ||  // transport and map
           (cp >= 0x1F900 && cp <= 0x1F9FF) ||  // supplemental symbols
           (cp >= 0x1F1E6 && cp <= 0x1F1FF);    // regional indicators (flags)
}

}  // namespace

std::optional<Label> label_from_string(std::string_view s) {
    if (s == "biased") return Label::biased;
    if (s == "unbiased") return Label::unbiased;
    return std::nullopt;
}

const char* label_to_string(Label l) { return l == Label::biased ? "biased" : "unbiased"; }

std::string clean_text(std::string_view raw) {
    const std::string pass1 = strip_ipv4(strip_emails(strip_urls(raw)));

    std::string out;
    out.reserve(pass1.size());
    bool pending_space = false;
    auto emit = [&](char32_t cp) {
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        unicode::append_utf8(out, cp);
    };
    std::size_t i = 0;
    while (i < pass1.size()) {
        const auto [cp, len] = unicode::decode(pass1, i);
        i += len;
        if (cp == U'\'' || cp == U'’') {
            emit(U'\'');
        } else if (is_emoji(cp)) {
            pending_space = true;
        } else if (unicode::is_letter(cp)) {
            emit(unicode::to_lower(cp));
        } else {
            // digits, punctuation, whitespace, symbols
            pending_space = true;
        }
    }
    return out;
}

std::vector<CleanSample> clean_corpus(const std::vector<RawSample>& corpus, CleanStats* stats,
                                      int threads) {
    const std::size_t n = corpus.size();
    std::vector<std::string> cleaned(n);
    const int t = effective_threads(threads);
#ifdef _OPENMP
#pragma omp parallel for num_threads(t) schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        cleaned[static_cast<std::size_t>(i)] = clean_text(corpus[static_cast<std::size_t>(i)].text);
    }
    (void)t;

    // keeper per distinct text = smallest original index
    std::unordered_map<std::string_view, std::uint64_t> keeper;
    keeper.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (cleaned[i].empty()) continue;
        auto [it, inserted] = keeper.emplace(cleaned[i], corpus[i].index);
        if (!inserted && corpus[i].index < it->second) it->second = corpus[i].index;
    }

    CleanStats st;
    st.in = n;
    std::vector<bool> keep(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (cleaned[i].empty()) {
            ++st.dropped_empty;
        } else if (keeper.at(cleaned[i]) != corpus[i].index) {
            ++st.dropped_duplicate;
        } else {
            keep[i] = true;
        }
    }
    keeper.clear();
    std::vector<CleanSample> out;
    out.reserve(n - st.dropped_empty - st.dropped_duplicate);
    for (std::size_t i = 0; i < n; ++i) {
        if (keep[i]) out.push_back({corpus[i].index, std::move(cleaned[i]), corpus[i].label});
    }
    st.out = out.size();
    if (stats) *stats = st;
    return out;
}

std::vector<std::string> tokenize(std::string_view clean) {
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (start < clean.size()) {
        auto end = clean.find(' ', start);
        if (end == std::string_view::npos) end = clean.size();
        if (end > start) tokens.emplace_back(clean.substr(start, end - start));
        start = end + 1;
    }
    return tokens;
}

}  // namespace bipolkit
