#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gausscode/errors.hpp"

namespace gausscode {

// Fixed-width bit vector. Backs GF(2) diagonal matrices and vertex subsets;
// the two are identified (bit i set <=> d_ii = 1 <=> vertex i in the subset).
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }
    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }
    void flip(int i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    int count() const;
    bool any() const;
    BitVec& operator^=(const BitVec& o);

    std::vector<int> members() const;
    static BitVec from_members(int size, const std::vector<int>& ids);

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

using Gf2Diagonal = BitVec;

// Dense square matrix over GF(2), rows bit-packed into 64-bit words.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    explicit Gf2Matrix(int n)
        : n_(n), stride_((n + 63) / 64), bits_(std::size_t(n) * stride_, 0) {}

    static Gf2Matrix identity(int n);
    static Gf2Matrix diagonal(const BitVec& bits);
    // Rows as strings of '0'/'1' characters, the debug serialization format.
    static Gf2Matrix from_rows(const std::vector<std::string>& rows);

    int dim() const { return n_; }
    int stride() const { return stride_; }

    bool get(int r, int c) const {
        return (row(r)[c >> 6] >> (c & 63)) & 1;
    }
    void set(int r, int c, bool v) {
        std::uint64_t m = std::uint64_t(1) << (c & 63);
        if (v)
            row(r)[c >> 6] |= m;
        else
            row(r)[c >> 6] &= ~m;
    }

    std::uint64_t* row(int r) { return bits_.data() + std::size_t(r) * stride_; }
    const std::uint64_t* row(int r) const {
        return bits_.data() + std::size_t(r) * stride_;
    }

    int row_weight(int r) const;
    BitVec diagonal_bits() const;
    bool is_symmetric() const;
    bool is_zero_diagonal() const;

    std::string to_debug_string() const;

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    int n_ = 0;
    int stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Entrywise XOR. Throws InvalidInput on dimension mismatch.
Gf2Matrix mat_add(const Gf2Matrix& a, const Gf2Matrix& b);

// Row-by-row product: row i of the result is the XOR of the rows of b
// selected by the set bits of row i of a. Throws InvalidInput on mismatch.
Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b);

bool is_idempotent(const Gf2Matrix& m);

// Row rank via forward elimination.
int rank(const Gf2Matrix& m);

// Gauss-Jordan inverse; nullopt when singular.
std::optional<Gf2Matrix> inverse(const Gf2Matrix& m);

}  // namespace gausscode
