#include "gausscode/gf2.hpp"

#include <bit>

namespace gausscode {

int BitVec::count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool BitVec::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (o.size_ != size_) throw InvalidInput("BitVec size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

std::vector<int> BitVec::members() const {
    std::vector<int> out;
    for (int i = 0; i < size_; ++i)
        if (get(i)) out.push_back(i);
    return out;
}

BitVec BitVec::from_members(int size, const std::vector<int>& ids) {
    BitVec v(size);
    for (int i : ids) {
        if (i < 0 || i >= size) throw InvalidInput("bit index out of range");
        v.set(i, true);
    }
    return v;
}

Gf2Matrix Gf2Matrix::identity(int n) {
    Gf2Matrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Gf2Matrix Gf2Matrix::diagonal(const BitVec& bits) {
    Gf2Matrix m(bits.size());
    for (int i = 0; i < bits.size(); ++i) m.set(i, i, bits.get(i));
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::string>& rows) {
    int n = static_cast<int>(rows.size());
    Gf2Matrix m(n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[r].size()) != n)
            throw InvalidInput("matrix rows must be square");
        for (int c = 0; c < n; ++c) {
            char ch = rows[r][c];
            if (ch != '0' && ch != '1') throw InvalidInput("matrix entries must be 0/1");
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

int Gf2Matrix::row_weight(int r) const {
    int c = 0;
    for (int w = 0; w < stride_; ++w) c += std::popcount(row(r)[w]);
    return c;
}

BitVec Gf2Matrix::diagonal_bits() const {
    BitVec d(n_);
    for (int i = 0; i < n_; ++i) d.set(i, get(i, i));
    return d;
}

bool Gf2Matrix::is_symmetric() const {
    for (int r = 0; r < n_; ++r)
        for (int c = r + 1; c < n_; ++c)
            if (get(r, c) != get(c, r)) return false;
    return true;
}

bool Gf2Matrix::is_zero_diagonal() const {
    for (int i = 0; i < n_; ++i)
        if (get(i, i)) return false;
    return true;
}

std::string Gf2Matrix::to_debug_string() const {
    std::string s;
    s.reserve(std::size_t(n_) * (n_ + 1));
    for (int r = 0; r < n_; ++r) {
        for (int c = 0; c < n_; ++c) s += get(r, c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

Gf2Matrix mat_add(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.dim() != b.dim()) throw InvalidInput("mat_add: dimension mismatch");
    Gf2Matrix c = a;
    for (int r = 0; r < c.dim(); ++r) {
        std::uint64_t* cr = c.row(r);
        const std::uint64_t* br = b.row(r);
        for (int w = 0; w < c.stride(); ++w) cr[w] ^= br[w];
    }
    return c;
}

Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.dim() != b.dim()) throw InvalidInput("mat_mul: dimension mismatch");
    int n = a.dim();
    Gf2Matrix c(n);
    for (int r = 0; r < n; ++r) {
        std::uint64_t* cr = c.row(r);
        for (int k = 0; k < n; ++k) {
            if (!a.get(r, k)) continue;
            const std::uint64_t* bk = b.row(k);
            for (int w = 0; w < c.stride(); ++w) cr[w] ^= bk[w];
        }
    }
    return c;
}

bool is_idempotent(const Gf2Matrix& m) {
    return mat_mul(m, m) == m;
}

int rank(const Gf2Matrix& m) {
    Gf2Matrix a = m;
    int n = a.dim();
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int pivot = -1;
        for (int i = r; i < n; ++i)
            if (a.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int w = 0; w < a.stride(); ++w)
                std::swap(a.row(pivot)[w], a.row(r)[w]);
        for (int i = r + 1; i < n; ++i) {
            if (!a.get(i, c)) continue;
            for (int w = 0; w < a.stride(); ++w) a.row(i)[w] ^= a.row(r)[w];
        }
        ++r;
    }
    return r;
}

std::optional<Gf2Matrix> inverse(const Gf2Matrix& m) {
    int n = m.dim();
    Gf2Matrix a = m;
    Gf2Matrix inv = Gf2Matrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (a.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != c)
            for (int w = 0; w < a.stride(); ++w) {
                std::swap(a.row(pivot)[w], a.row(c)[w]);
                std::swap(inv.row(pivot)[w], inv.row(c)[w]);
            }
        for (int i = 0; i < n; ++i) {
            if (i == c || !a.get(i, c)) continue;
            for (int w = 0; w < a.stride(); ++w) {
                a.row(i)[w] ^= a.row(c)[w];
                inv.row(i)[w] ^= inv.row(c)[w];
            }
        }
    }
    return inv;
}

}  // namespace gausscode
