#pragma once

#include "z2gg/gf2.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace z2gg::exact {

// Arbitrary-precision signed integer, base 2^32. Just enough for
// fraction-free elimination: add, subtract, multiply, exact divide.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT: implicit by design

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return sign_; }

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }

    // Quotient of an exact division; throws if a remainder is left.
    static BigInt div_exact(const BigInt& num, const BigInt& den);

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && limbs_ == o.limbs_; }
    std::string to_string() const;

private:
    static int cmp_abs(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_abs(const std::vector<std::uint32_t>&,
                                              const std::vector<std::uint32_t>&);
    static std::vector<std::uint32_t> sub_abs(const std::vector<std::uint32_t>&,
                                              const std::vector<std::uint32_t>&);
    void trim();

    int sign_ = 0;                       // -1, 0, +1
    std::vector<std::uint32_t> limbs_;   // little endian, no trailing zeros
};

// Rational nullity of an integer matrix by Bareiss fraction-free elimination.
// Exact for any input; cost grows with entry size, so callers guard dimensions.
long long bareiss_nullity(std::vector<std::vector<BigInt>> m);

// Dense elimination over F_p (p an odd word-sized prime). Returns the rank.
// Serial kernel is the reference; the parallel kernel gives identical results.
struct ModMatrix {
    int rows = 0, cols = 0;
    std::uint32_t p = 0;
    std::vector<std::uint32_t> a;  // row major

    std::uint32_t& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    std::uint32_t at(int r, int c) const { return a[std::size_t(r) * cols + c]; }
};

int modp_rank(ModMatrix m, gf2::Kernel kernel = gf2::Kernel::Auto);

}  // namespace z2gg::exact
