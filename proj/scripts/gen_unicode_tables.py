#!/usr/bin/env python3
"""Regenerates include/bipolkit/unicode_tables.inc from Python's unicodedata.

The cleaning pipeline needs two classifications: "is this codepoint a letter"
(general categories Lu/Ll/Lt/Lm/Lo) and "what is its simple lowercase form".
Only letters receive a lowercase mapping; everything else is stripped before
casing applies.
"""

import sys
import unicodedata

MAX_CP = 0x110000


def main() -> None:
    letters = []
    for cp in range(MAX_CP):
        if unicodedata.category(chr(cp)).startswith("L"):
            letters.append(cp)
    letter_set = set(letters)

    ranges = []
    lo = hi = letters[0]
    for cp in letters[1:]:
        if cp == hi + 1:
            hi = cp
        else:
            ranges.append((lo, hi))
            lo = hi = cp
    ranges.append((lo, hi))

    lower_map = []
    multi = 0
    for cp in letters:
        low = chr(cp).lower()
        if len(low) > 1:
            # Full case mapping expands (e.g. U+0130); fall back to the
            # leading codepoint, which matches the simple mapping.
            multi += 1
            low = low[0]
        target = ord(low)
        if target == cp:
            continue
        assert target in letter_set, f"lower(U+{cp:04X}) leaves letter set"
        assert chr(target).lower() == chr(target), f"lower not idempotent at U+{cp:04X}"
        lower_map.append((cp, target))

    out = sys.stdout
    out.write(
        "// Generated by scripts/gen_unicode_tables.py "
        f"(Unicode {unicodedata.unidata_version}). Do not edit.\n\n"
    )
    out.write(f"inline constexpr uint32_t kLetterRanges[][2] = {{\n")
    for i in range(0, len(ranges), 6):
        row = ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in ranges[i : i + 6])
        out.write(f"    {row},\n")
    out.write("};\n\n")
    out.write(f"inline constexpr uint32_t kLowerMap[][2] = {{\n")
    for i in range(0, len(lower_map), 6):
        row = ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in lower_map[i : i + 6])
        out.write(f"    {row},\n")
    out.write("};\n")
    sys.stderr.write(
        f"{len(ranges)} letter ranges, {len(lower_map)} lowercase pairs, "
        f"{multi} multi-codepoint lowerings collapsed\n"
    )


if __name__ == "__main__":
    main()
