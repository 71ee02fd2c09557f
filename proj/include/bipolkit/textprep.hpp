#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bipolkit {

enum class Label { unbiased, biased };

std::optional<Label> label_from_string(std::string_view s);
const char* label_to_string(Label l);

struct RawSample {
    std::uint64_t index = 0;  // row position in the source file
    std::string text;
    std::optional<Label> label;
};

struct CleanSample {
    std::uint64_t index = 0;
    std::string text;  // lowercase, single-space separated, letters/apostrophes only
    std::optional<Label> label;
};

struct CleanStats {
    std::uint64_t in = 0;
    std::uint64_t dropped_empty = 0;
    std::uint64_t dropped_duplicate = 0;
    std::uint64_t out = 0;
};

// Normalizes one text. Rule order: URLs, emails, IPv4 addresses, emoji,
// digits, remaining non-letter/apostrophe characters, lowercasing,
// whitespace collapse, trim. Removed spans become single spaces so
// neighbouring words never fuse. Total and idempotent.
std::string clean_text(std::string_view raw);

// Cleans every sample, drops empty results, drops exact duplicates of the
// cleaned text (the occurrence with the smallest original index survives).
// Output order follows input order; identical for any thread count.
std::vector<CleanSample> clean_corpus(const std::vector<RawSample>& corpus,
                                      CleanStats* stats = nullptr, int threads = 0);

// Splits cleaned text on single spaces.
std::vector<std::string> tokenize(std::string_view clean);

}  // namespace bipolkit
