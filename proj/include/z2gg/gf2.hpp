#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace z2gg::gf2 {

using Word = std::uint64_t;
constexpr int kWordBits = 64;

// Dense GF(2) vector, 64 entries per word.
class Vec {
public:
    Vec() = default;
    explicit Vec(int n) : n_(n), w_((n + kWordBits - 1) / kWordBits, 0) {}

    int size() const { return n_; }
    bool get(int i) const { return (w_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    void set(int i, bool b) {
        Word m = Word(1) << (i % kWordBits);
        if (b) w_[i / kWordBits] |= m; else w_[i / kWordBits] &= ~m;
    }
    void flip(int i) { w_[i / kWordBits] ^= Word(1) << (i % kWordBits); }

    Vec& operator^=(const Vec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    friend Vec operator^(Vec a, const Vec& b) { a ^= b; return a; }
    bool operator==(const Vec& o) const { return n_ == o.n_ && w_ == o.w_; }

    bool is_zero() const {
        for (Word w : w_) if (w) return false;
        return true;
    }
    int popcount() const;
    // Lowest set index, or -1. Row pivots are always the first set column.
    int first_set() const;
    bool dot(const Vec& o) const;

    const std::vector<Word>& words() const { return w_; }
    std::vector<Word>& words() { return w_; }
    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<Word> w_;
};

enum class Kernel {
    Serial,    // reference implementation
    Parallel,  // OpenMP row updates; bit-identical to Serial
    Auto,      // Parallel above a size threshold
};

// Dense bit-packed matrix, row major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), wpr_((cols + kWordBits - 1) / kWordBits),
          data_(std::size_t(rows) * wpr_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const {
        return (data_[std::size_t(r) * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1u;
    }
    void set(int r, int c, bool b) {
        Word m = Word(1) << (c % kWordBits);
        auto& w = data_[std::size_t(r) * wpr_ + c / kWordBits];
        if (b) w |= m; else w &= ~m;
    }
    void xor_row_into(int src, int dst) {
        Word* d = row_ptr(dst);
        const Word* s = row_ptr(src);
        for (int k = 0; k < wpr_; ++k) d[k] ^= s[k];
    }
    void swap_rows(int a, int b);

    Vec row(int r) const;
    void set_row(int r, const Vec& v);

    Vec apply(const Vec& x) const;             // y = M x
    Matrix transposed() const;

    Word* row_ptr(int r) { return data_.data() + std::size_t(r) * wpr_; }
    const Word* row_ptr(int r) const { return data_.data() + std::size_t(r) * wpr_; }
    int words_per_row() const { return wpr_; }

    std::string to_string() const;  // debug grid of 0/1

private:
    int rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<Word> data_;
};

struct Echelon {
    Matrix reduced;               // full RREF
    std::vector<int> pivot_cols;  // ascending; lexicographically first pivots
    int rank = 0;
};

Echelon eliminate(Matrix m, Kernel kernel = Kernel::Auto);
int rank(const Matrix& m, Kernel kernel = Kernel::Auto);

// Basis of { x : M x = 0 }. Each vector is verified against M before return
// and the count must equal cols - rank (the elimination self-check).
// Basis vector i is the unique one with a 1 in free column i; *free_cols
// receives those columns, so coordinates in this basis can be read off.
std::vector<Vec> nullspace(const Matrix& m, Kernel kernel = Kernel::Auto,
                           std::vector<int>* free_cols = nullptr);

// One solution of M x = b, or nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b, Kernel kernel = Kernel::Auto);

// Incremental reducer: rows kept in reduced form keyed by their first set bit.
// Used for coset canonicalization and coordinate maps. Inserting a vector
// reduces it against the current rows (returning the remainder) and optionally
// keeps it. Tags accumulate GF(2) bookkeeping alongside the reduction.
class Reducer {
public:
    explicit Reducer(int width, int tag_width = 0) : width_(width), tagw_(tag_width) {}

    // Reduce v (and its tag) against the stored rows, in place.
    void reduce(Vec& v, Vec* tag = nullptr) const;
    // Reduce, then store the remainder if nonzero. Returns true if stored.
    bool insert(Vec v, Vec tag);
    bool insert(Vec v) { return insert(std::move(v), Vec(tagw_)); }

    int rank() const { return int(rows_.size()); }
    int width() const { return width_; }

private:
    struct Row { int pivot; Vec v; Vec tag; };
    int width_, tagw_;
    std::vector<Row> rows_;  // sorted by pivot
};

}  // namespace z2gg::gf2
