#include "z2gg/gf2.hpp"

#include "z2gg/errors.hpp"

#include <bit>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace z2gg::gf2 {

int Vec::popcount() const {
    int n = 0;
    for (Word w : w_) n += std::popcount(w);
    return n;
}

int Vec::first_set() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return int(k) * kWordBits + std::countr_zero(w_[k]);
    return -1;
}

bool Vec::dot(const Vec& o) const {
    Word acc = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
    return std::popcount(acc) & 1;
}

std::string Vec::to_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i) if (get(i)) s[i] = '1';
    return s;
}

void Matrix::swap_rows(int a, int b) {
    if (a == b) return;
    Word* pa = row_ptr(a);
    Word* pb = row_ptr(b);
    for (int k = 0; k < wpr_; ++k) std::swap(pa[k], pb[k]);
}

Vec Matrix::row(int r) const {
    Vec v(cols_);
    const Word* p = row_ptr(r);
    for (int k = 0; k < wpr_; ++k) v.words()[k] = p[k];
    return v;
}

void Matrix::set_row(int r, const Vec& v) {
    Word* p = row_ptr(r);
    for (int k = 0; k < wpr_; ++k) p[k] = v.words()[k];
}

Vec Matrix::apply(const Vec& x) const {
    Vec y(rows_);
    for (int r = 0; r < rows_; ++r) {
        const Word* p = row_ptr(r);
        Word acc = 0;
        for (int k = 0; k < wpr_; ++k) acc ^= p[k] & x.words()[k];
        if (std::popcount(acc) & 1) y.set(r, true);
    }
    return y;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) os << (get(r, c) ? '1' : '0');
        os << '\n';
    }
    return os.str();
}

namespace {

bool use_parallel(Kernel k, const Matrix& m) {
    switch (k) {
        case Kernel::Serial: return false;
        case Kernel::Parallel: return true;
        case Kernel::Auto:
            return std::size_t(m.rows()) * m.words_per_row() > (1u << 16);
    }
    return false;
}

// Full Gauss-Jordan. The clear-other-rows sweep is the data-parallel part;
// pivot choice is identical for both kernels, so results are bit-identical.
void eliminate_inner(Matrix& m, std::vector<int>& pivots, bool parallel) {
    const int rows = m.rows(), cols = m.cols(), wpr = m.words_per_row();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m.get(i, c)) { pr = i; break; }
        if (pr < 0) continue;
        m.swap_rows(r, pr);
        const Word* src = m.row_ptr(r);
        if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (int i = 0; i < rows; ++i) {
                if (i != r && m.get(i, c)) {
                    Word* dst = m.row_ptr(i);
                    for (int k = 0; k < wpr; ++k) dst[k] ^= src[k];
                }
            }
        } else {
            for (int i = 0; i < rows; ++i) {
                if (i != r && m.get(i, c)) {
                    Word* dst = m.row_ptr(i);
                    for (int k = 0; k < wpr; ++k) dst[k] ^= src[k];
                }
            }
        }
        pivots.push_back(c);
        ++r;
    }
}

}  // namespace

Echelon eliminate(Matrix m, Kernel kernel) {
    Echelon e;
    bool par = use_parallel(kernel, m);
    eliminate_inner(m, e.pivot_cols, par);
    e.rank = int(e.pivot_cols.size());
    e.reduced = std::move(m);
    return e;
}

int rank(const Matrix& m, Kernel kernel) { return eliminate(m, kernel).rank; }

std::vector<Vec> nullspace(const Matrix& m, Kernel kernel, std::vector<int>* free_cols) {
    Echelon e = eliminate(m, kernel);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivot_cols) is_pivot[c] = true;

    if (free_cols) free_cols->clear();
    std::vector<Vec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        if (free_cols) free_cols->push_back(c);
        Vec v(m.cols());
        v.set(c, true);
        for (int i = 0; i < e.rank; ++i)
            if (e.reduced.get(i, c)) v.set(e.pivot_cols[i], true);
        if (!m.apply(v).is_zero())
            throw Error("EliminationSelfCheck", "nullspace vector fails M x = 0");
        basis.push_back(std::move(v));
    }
    if (int(basis.size()) != m.cols() - e.rank)
        throw Error("EliminationSelfCheck", "rank + nullity != cols");
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b, Kernel kernel) {
    Matrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        const Word* src = m.row_ptr(r);
        Word* dst = aug.row_ptr(r);
        for (int k = 0; k < m.words_per_row(); ++k) dst[k] = src[k];
        if (b.get(r)) aug.set(r, m.cols(), true);
    }
    Echelon e = eliminate(std::move(aug), kernel);
    Vec x(m.cols());
    for (int i = 0; i < e.rank; ++i) {
        if (e.pivot_cols[i] == m.cols()) return std::nullopt;  // 0 = 1 row
        if (e.reduced.get(i, m.cols())) x.set(e.pivot_cols[i], true);
    }
    return x;
}

void Reducer::reduce(Vec& v, Vec* tag) const {
    for (const Row& row : rows_) {
        if (v.get(row.pivot)) {
            v ^= row.v;
            if (tag) *tag ^= row.tag;
        }
    }
}

bool Reducer::insert(Vec v, Vec tag) {
    reduce(v, tagw_ ? &tag : nullptr);
    int p = v.first_set();
    if (p < 0) return false;
    // keep rows fully reduced against each other
    for (Row& row : rows_) {
        if (row.v.get(p)) {
            row.v ^= v;
            row.tag ^= tag;
        }
    }
    Row nr{p, std::move(v), std::move(tag)};
    auto it = rows_.begin();
    while (it != rows_.end() && it->pivot < p) ++it;
    rows_.insert(it, std::move(nr));
    return true;
}

}  // namespace z2gg::gf2
