#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

// Minimal unsigned big integer, enough for exact defeat counts and
// probabilities on cycles up to a few hundred players (values < 3^n).

namespace hatcycle {

class BigUint {
  public:
    BigUint() = default;
    BigUint(std::uint64_t v) {  // NOLINT: implicit by design
        if (v) limbs_.push_back(v);
    }

    static BigUint pow(std::uint64_t base, unsigned exp);

    bool is_zero() const { return limbs_.empty(); }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1) == 0; }

    BigUint& operator+=(const BigUint& o);
    /// Requires *this >= o.
    BigUint& operator-=(const BigUint& o);
    BigUint operator*(const BigUint& o) const;
    BigUint& operator*=(const BigUint& o) { return *this = *this * o; }

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }

    int compare(const BigUint& o) const;
    friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return a.compare(b) >= 0; }

    /// Divides in place by a small divisor, returns the remainder.
    std::uint64_t div_small(std::uint64_t divisor);

    void shift_right1();

    static std::pair<BigUint, BigUint> divmod(const BigUint& num, const BigUint& den);

    std::string to_string() const;

    /// Value as uint64 if it fits, used by tests on small counts.
    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t as_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

  private:
    void trim();
    std::vector<std::uint64_t> limbs_;  // little-endian, no trailing zeros
};

BigUint gcd(BigUint a, BigUint b);

/// Exact non-negative rational, always stored reduced.
struct Rational {
    BigUint num;
    BigUint den{1};

    static Rational make(BigUint num, BigUint den);
    std::string to_string() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

}  // namespace hatcycle
