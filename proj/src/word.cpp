#include "gausscode/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace gausscode {

namespace {

bool alnum_token(const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
        if (!std::isalnum(static_cast<unsigned char>(c))) return false;
    return true;
}

// Relabels a raw letter sequence so ids run 0.. in order of first occurrence.
std::vector<int> normalize_letters(const std::vector<int>& raw,
                                   std::vector<int>* old_of_new = nullptr) {
    std::vector<int> map(raw.empty() ? 0 : *std::max_element(raw.begin(), raw.end()) + 1, -1);
    std::vector<int> out;
    out.reserve(raw.size());
    int next = 0;
    for (int v : raw) {
        if (map[v] < 0) {
            map[v] = next++;
            if (old_of_new) old_of_new->push_back(v);
        }
        out.push_back(map[v]);
    }
    return out;
}

}  // namespace

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (n <= 26)
            names.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            names.push_back("s" + std::to_string(i));
    }
    return names;
}

DoubleOccurrenceWord parse(const std::string& text) {
    std::vector<std::string> tokens;
    bool separated = text.find_first_of(", \t\n\r") != std::string::npos;
    if (separated) {
        std::string cur;
        for (char c : text) {
            if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
                if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) tokens.push_back(std::move(cur));
    } else {
        for (char c : text) tokens.emplace_back(1, c);
    }

    DoubleOccurrenceWord w;
    std::map<std::string, int> id_of;
    std::map<std::string, int> seen;
    for (const std::string& t : tokens) {
        if (!alnum_token(t)) throw InvalidInput("bad token '" + t + "': tokens must be alphanumeric");
        auto it = id_of.find(t);
        if (it == id_of.end()) {
            it = id_of.emplace(t, static_cast<int>(w.names.size())).first;
            w.names.push_back(t);
        }
        w.letters.push_back(it->second);
        ++seen[t];
    }
    for (const auto& [t, c] : seen)
        if (c != 2)
            throw InvalidInput("token '" + t + "' appears " + std::to_string(c) +
                               " times, expected exactly 2");
    return w;
}

std::string format(const DoubleOccurrenceWord& w) {
    bool single = std::all_of(w.names.begin(), w.names.end(),
                              [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (!single && i) out += ',';
        out += w.names[w.letters[i]];
    }
    return out;
}

DoubleOccurrenceWord from_letters(const std::vector<int>& letters) {
    if (letters.size() % 2) throw InvalidInput("word length must be even");
    std::vector<int> counts;
    for (int v : letters) {
        if (v < 0) throw InvalidInput("letter ids must be nonnegative");
        if (v >= static_cast<int>(counts.size())) counts.resize(v + 1, 0);
        ++counts[v];
    }
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] != 2)
            throw InvalidInput("symbol " + std::to_string(i) + " appears " +
                               std::to_string(counts[i]) + " times, expected exactly 2");
    DoubleOccurrenceWord w;
    w.letters = normalize_letters(letters);
    w.names = default_names(static_cast<int>(letters.size() / 2));
    return w;
}

DoubleOccurrenceWord rotated(const DoubleOccurrenceWord& w, int k) {
    int len = w.length();
    if (len == 0) return w;
    k = ((k % len) + len) % len;
    std::vector<int> raw(w.letters.begin() + k, w.letters.end());
    raw.insert(raw.end(), w.letters.begin(), w.letters.begin() + k);
    std::vector<int> old_of_new;
    DoubleOccurrenceWord out;
    out.letters = normalize_letters(raw, &old_of_new);
    for (int old : old_of_new) out.names.push_back(w.names[old]);
    return out;
}

DoubleOccurrenceWord reversed(const DoubleOccurrenceWord& w) {
    std::vector<int> raw(w.letters.rbegin(), w.letters.rend());
    std::vector<int> old_of_new;
    DoubleOccurrenceWord out;
    out.letters = normalize_letters(raw, &old_of_new);
    for (int old : old_of_new) out.names.push_back(w.names[old]);
    return out;
}

DoubleOccurrenceWord relabeled(const DoubleOccurrenceWord& w,
                               const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != w.symbol_count())
        throw InvalidInput("relabeled: permutation size mismatch");
    std::vector<int> raw;
    raw.reserve(w.letters.size());
    for (int v : w.letters) raw.push_back(perm[v]);
    std::vector<int> old_of_new;
    DoubleOccurrenceWord out;
    out.letters = normalize_letters(raw, &old_of_new);
    // old_of_new maps new ids to renamed ids; displayed names follow the symbol.
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
    for (int renamed : old_of_new) out.names.push_back(w.names[inv[renamed]]);
    return out;
}

CanonicalWord canonicalize(const DoubleOccurrenceWord& w) {
    DoubleOccurrenceWord best;
    best.letters = w.letters.empty() ? std::vector<int>{} : normalize_letters(w.letters);
    best.names = default_names(w.symbol_count());
    DoubleOccurrenceWord rev = reversed(w);
    for (int dir = 0; dir < 2; ++dir) {
        const DoubleOccurrenceWord& base = dir ? rev : w;
        for (int k = 0; k < w.length(); ++k) {
            DoubleOccurrenceWord cand = rotated(base, k);
            if (cand.letters < best.letters) best.letters = cand.letters;
        }
    }
    best.names = default_names(w.symbol_count());
    return CanonicalWord{std::move(best)};
}

std::uint64_t count_words(int n) {
    if (n < 0) throw InvalidInput("negative symbol count");
    if (n > 17) throw LimitExceeded("(2n-1)!! overflows 64 bits for n > 17");
    std::uint64_t c = 1;
    for (int k = 3; k <= 2 * n - 1; k += 2) c *= static_cast<std::uint64_t>(k);
    return c;
}

namespace {

void enumerate_rec(std::vector<int>& slots, int next_id, bool canonical_only,
                   const std::function<void(const DoubleOccurrenceWord&)>& yield) {
    int first = -1;
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (slots[i] < 0) {
            first = static_cast<int>(i);
            break;
        }
    if (first < 0) {
        DoubleOccurrenceWord w;
        w.letters = slots;
        w.names = default_names(static_cast<int>(slots.size() / 2));
        if (!canonical_only || canonicalize(w).representative.letters == w.letters)
            yield(w);
        return;
    }
    slots[first] = next_id;
    for (std::size_t j = first + 1; j < slots.size(); ++j) {
        if (slots[j] >= 0) continue;
        slots[j] = next_id;
        enumerate_rec(slots, next_id + 1, canonical_only, yield);
        slots[j] = -1;
    }
    slots[first] = -1;
}

}  // namespace

void enumerate_words(int n, bool canonical_only,
                     const std::function<void(const DoubleOccurrenceWord&)>& yield,
                     int hard_limit) {
    if (n < 0) throw InvalidInput("negative symbol count");
    if (n > hard_limit)
        throw LimitExceeded("enumeration limited to n <= " + std::to_string(hard_limit));
    if (n == 0) {
        DoubleOccurrenceWord empty;
        yield(empty);
        return;
    }
    std::vector<int> slots(2 * n, -1);
    enumerate_rec(slots, 0, canonical_only, yield);
}

std::vector<DoubleOccurrenceWord> all_words(int n, bool canonical_only, int hard_limit) {
    std::vector<DoubleOccurrenceWord> out;
    enumerate_words(n, canonical_only,
                    [&](const DoubleOccurrenceWord& w) { out.push_back(w); }, hard_limit);
    return out;
}

DoubleOccurrenceWord random_word(int n, std::mt19937_64& rng) {
    std::vector<int> raw;
    raw.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
        raw.push_back(i);
        raw.push_back(i);
    }
    std::shuffle(raw.begin(), raw.end(), rng);
    return from_letters(raw);
}

}  // namespace gausscode
