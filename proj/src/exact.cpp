#include "z2gg/exact.hpp"

#include "z2gg/errors.hpp"

#include <algorithm>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace z2gg::exact {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long u = v < 0 ? 0ull - (unsigned long long)v : (unsigned long long)v;
    while (u) {
        limbs_.push_back(std::uint32_t(u & 0xffffffffu));
        u >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_abs(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_abs(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> out(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0);
        out[i] = std::uint32_t(s);
        carry = s >> 32;
    }
    out[big.size()] = std::uint32_t(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// requires |a| >= |b|
std::vector<std::uint32_t> BigInt::sub_abs(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = std::int64_t(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
        borrow = s < 0;
        out[i] = std::uint32_t(s + (borrow ? (std::int64_t(1) << 32) : 0));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.limbs_ = BigInt::add_abs(a.limbs_, b.limbs_);
    } else {
        int c = BigInt::cmp_abs(a, b);
        if (c == 0) return BigInt();
        const BigInt& big = c > 0 ? a : b;
        const BigInt& small = c > 0 ? b : a;
        r.sign_ = big.sign_;
        r.limbs_ = BigInt::sub_abs(big.limbs_, small.limbs_);
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) {
    BigInt nb = b;
    nb.sign_ = -nb.sign_;
    return a + nb;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t s = std::uint64_t(a.limbs_[i]) * b.limbs_[j] +
                              r.limbs_[i + j] + carry;
            r.limbs_[i + j] = std::uint32_t(s);
            carry = s >> 32;
        }
        r.limbs_[i + b.limbs_.size()] += std::uint32_t(carry);
    }
    r.trim();
    return r;
}

BigInt BigInt::div_exact(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw Error("DivisionByZero", "exact division by zero");
    if (num.is_zero()) return BigInt();
    constexpr std::uint64_t B = std::uint64_t(1) << 32;
    BigInt q;
    q.sign_ = num.sign_ * den.sign_;

    if (den.limbs_.size() == 1) {  // short division
        const std::uint64_t d = den.limbs_[0];
        q.limbs_.assign(num.limbs_.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = num.limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | num.limbs_[i];
            q.limbs_[i] = std::uint32_t(cur / d);
            rem = cur % d;
        }
        if (rem) throw Error("InexactDivision", "exact division left a remainder");
        q.trim();
        return q;
    }

    // Knuth algorithm D on 32-bit limbs
    const int n = int(den.limbs_.size());
    const int m = int(num.limbs_.size()) - n;
    if (m < 0) throw Error("InexactDivision", "exact division left a remainder");
    int shift = 0;
    while (!((den.limbs_[n - 1] << shift) & 0x80000000u)) ++shift;

    auto shl = [&](const std::vector<std::uint32_t>& a) {
        std::vector<std::uint32_t> out(a.size() + 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            out[i] |= shift ? (a[i] << shift) : a[i];
            if (shift) out[i + 1] |= std::uint32_t(std::uint64_t(a[i]) >> (32 - shift));
        }
        return out;
    };
    std::vector<std::uint32_t> u = shl(num.limbs_);  // m+n+1 limbs
    std::vector<std::uint32_t> v = shl(den.limbs_);
    v.resize(n);  // top shifted limb cannot overflow: v[n-1] has its high bit set

    q.limbs_.assign(m + 1, 0);
    for (int j = m; j >= 0; --j) {
        std::uint64_t top = (std::uint64_t(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = top / v[n - 1];
        std::uint64_t rhat = top % v[n - 1];
        while (qhat >= B ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= B) break;
        }
        // u[j..j+n] -= qhat * v
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (int i = 0; i < n; ++i) {
            std::uint64_t prod = qhat * v[i] + carry;
            carry = prod >> 32;
            std::int64_t t = std::int64_t(u[i + j]) - std::int64_t(prod & 0xffffffffu) - borrow;
            borrow = t < 0;
            u[i + j] = std::uint32_t(t + (borrow ? std::int64_t(B) : 0));
        }
        std::int64_t t = std::int64_t(u[j + n]) - std::int64_t(carry) - borrow;
        if (t < 0) {  // qhat was one too large: add back
            --qhat;
            std::uint64_t c2 = 0;
            for (int i = 0; i < n; ++i) {
                std::uint64_t s = std::uint64_t(u[i + j]) + v[i] + c2;
                u[i + j] = std::uint32_t(s);
                c2 = s >> 32;
            }
            t += std::int64_t(c2);
        }
        u[j + n] = std::uint32_t(t);
        q.limbs_[j] = std::uint32_t(qhat);
    }
    for (std::uint32_t limb : u)
        if (limb) throw Error("InexactDivision", "exact division left a remainder");
    q.trim();
    return q;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    // repeated division by 10^9
    std::vector<std::uint32_t> l = limbs_;
    std::string out;
    while (!l.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = l.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | l[i];
            l[i] = std::uint32_t(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!l.empty() && l.back() == 0) l.pop_back();
        for (int k = 0; k < 9; ++k) {
            out.push_back(char('0' + rem % 10));
            rem /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    if (sign_ < 0) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

long long bareiss_nullity(std::vector<std::vector<BigInt>> m) {
    if (m.empty()) return 0;
    const int rows = int(m.size());
    const int cols = int(m[0].size());
    BigInt prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m[i][j] = BigInt::div_exact(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
            m[i][c] = BigInt();
        }
        prev = m[r][c];
        ++r;
    }
    return cols - r;
}

namespace {

constexpr std::uint32_t kM31 = 2147483647u;  // 2^31 - 1

struct ReduceGeneric {
    std::uint32_t p;
    std::uint32_t operator()(std::uint64_t x) const { return std::uint32_t(x % p); }
};

// x < 2^63: two folds land in [0, 2^31]
struct ReduceM31 {
    std::uint32_t p;  // = kM31
    std::uint32_t operator()(std::uint64_t x) const {
        x = (x & kM31) + (x >> 31);
        x = (x & kM31) + (x >> 31);
        return x >= kM31 ? std::uint32_t(x - kM31) : std::uint32_t(x);
    }
};

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1, base = a % p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return std::uint32_t(r);
}

template <typename Reduce>
int modp_rank_impl(ModMatrix& m, bool parallel, Reduce reduce) {
    const std::uint32_t p = m.p;
    const int rows = m.rows, cols = m.cols;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m.at(i, c)) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = c; j < cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
        std::uint32_t inv = powmod(m.at(r, c), p - 2, p);
        for (int j = c; j < cols; ++j)
            m.at(r, j) = reduce(std::uint64_t(m.at(r, j)) * inv);
        const std::uint32_t* src = &m.at(r, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
        for (int i = r + 1; i < rows; ++i) {
            std::uint32_t f = m.at(i, c);
            if (!f) continue;
            std::uint32_t neg = p - f;
            std::uint32_t* dst = &m.at(i, 0);
            for (int j = c; j < cols; ++j)
                dst[j] = reduce(dst[j] + std::uint64_t(neg) * src[j]);
        }
        ++r;
    }
    return r;
}

}  // namespace

int modp_rank(ModMatrix m, gf2::Kernel kernel) {
    for (auto& x : m.a) x %= m.p;
    bool parallel = kernel == gf2::Kernel::Parallel ||
                    (kernel == gf2::Kernel::Auto && std::size_t(m.rows) * m.cols > (1u << 18));
    if (m.p == kM31) return modp_rank_impl(m, parallel, ReduceM31{m.p});
    return modp_rank_impl(m, parallel, ReduceGeneric{m.p});
}

}  // namespace z2gg::exact
