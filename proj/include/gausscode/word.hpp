#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gausscode/errors.hpp"

namespace gausscode {

// A cyclic sequence of 2n letters in which each of n symbols occurs exactly
// twice. Stored normalized: symbol ids are 0..n-1 in order of first
// occurrence. `names` keeps the display token of each id (original input
// tokens after parse, generated defaults otherwise).
struct DoubleOccurrenceWord {
    std::vector<int> letters;
    std::vector<std::string> names;

    int symbol_count() const { return static_cast<int>(names.size()); }
    int length() const { return static_cast<int>(letters.size()); }

    friend bool operator==(const DoubleOccurrenceWord&,
                           const DoubleOccurrenceWord&) = default;
};

// One representative per orbit under rotation, reversal and renaming:
// the lexicographically least normalized word over all 2n rotations in
// both directions.
struct CanonicalWord {
    DoubleOccurrenceWord representative;

    friend bool operator==(const CanonicalWord&, const CanonicalWord&) = default;
};

// Default display names: a..z for n <= 26, else s0, s1, ...
std::vector<std::string> default_names(int n);

// Accepts either a run of single-character alphanumeric tokens or
// whitespace/comma-separated multi-character alphanumeric tokens.
// Throws InvalidInput when a token appears a number of times other than
// two, or contains a non-alphanumeric character.
DoubleOccurrenceWord parse(const std::string& text);

// Inverse of parse: single-character names are concatenated, otherwise
// tokens are joined with commas.
std::string format(const DoubleOccurrenceWord& w);

// Validates and normalizes a raw letter sequence, assigning default names.
DoubleOccurrenceWord from_letters(const std::vector<int>& letters);

// Cyclic/orientation transforms; results are re-normalized.
DoubleOccurrenceWord rotated(const DoubleOccurrenceWord& w, int k);
DoubleOccurrenceWord reversed(const DoubleOccurrenceWord& w);
// Renames symbol i to perm[i] and re-normalizes (an n-permutation).
DoubleOccurrenceWord relabeled(const DoubleOccurrenceWord& w,
                               const std::vector<int>& perm);

CanonicalWord canonicalize(const DoubleOccurrenceWord& w);

inline constexpr int kDefaultEnumerateLimit = 9;

// (2n-1)!!, the number of normalized words on n symbols.
std::uint64_t count_words(int n);

// Yields every normalized word on n symbols exactly once, in lexicographic
// order; with canonical_only, only orbit representatives. Throws
// LimitExceeded when n > hard_limit.
void enumerate_words(int n, bool canonical_only,
                     const std::function<void(const DoubleOccurrenceWord&)>& yield,
                     int hard_limit = kDefaultEnumerateLimit);

std::vector<DoubleOccurrenceWord> all_words(int n, bool canonical_only = false,
                                            int hard_limit = kDefaultEnumerateLimit);

// Uniform over normalized words (uniform random perfect matching of 2n slots).
DoubleOccurrenceWord random_word(int n, std::mt19937_64& rng);

}  // namespace gausscode
