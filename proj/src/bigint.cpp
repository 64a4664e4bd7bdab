#include "hatcycle/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace hatcycle {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::pow(u64 base, unsigned exp) {
    BigUint r{1};
    BigUint b{base};
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

BigUint& BigUint::operator+=(const BigUint& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 s = static_cast<u128>(limbs_[i]) + carry + (i < o.limbs_.size() ? o.limbs_[i] : 0);
        limbs_[i] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
    if (*this < o) throw std::underflow_error("BigUint subtraction underflow");
    u64 borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 need = static_cast<u128>(i < o.limbs_.size() ? o.limbs_[i] : 0) + borrow;
        if (static_cast<u128>(limbs_[i]) >= need) {
            limbs_[i] = static_cast<u64>(limbs_[i] - need);
            borrow = 0;
        } else {
            limbs_[i] = static_cast<u64>((static_cast<u128>(1) << 64) + limbs_[i] - need);
            borrow = 1;
        }
    }
    trim();
    return *this;
}

BigUint BigUint::operator*(const BigUint& o) const {
    if (is_zero() || o.is_zero()) return {};
    BigUint r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            u128 cur = static_cast<u128>(limbs_[i]) * o.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        r.limbs_[i + o.limbs_.size()] += carry;
    }
    r.trim();
    return r;
}

int BigUint::compare(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size())
        return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
}

u64 BigUint::div_small(u64 divisor) {
    u128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (rem << 64) | limbs_[i];
        limbs_[i] = static_cast<u64>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<u64>(rem);
}

void BigUint::shift_right1() {
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        limbs_[i] >>= 1;
        if (i + 1 < limbs_.size() && (limbs_[i + 1] & 1))
            limbs_[i] |= (static_cast<u64>(1) << 63);
    }
    trim();
}

std::pair<BigUint, BigUint> BigUint::divmod(const BigUint& num, const BigUint& den) {
    if (den.is_zero()) throw std::invalid_argument("division by zero");
    if (num < den) return {BigUint{}, num};

    auto shift_left1 = [](BigUint& v) {
        u64 carry = 0;
        for (std::size_t i = 0; i < v.limbs_.size(); ++i) {
            u64 next = v.limbs_[i] >> 63;
            v.limbs_[i] = (v.limbs_[i] << 1) | carry;
            carry = next;
        }
        if (carry) v.limbs_.push_back(carry);
    };
    auto set_low_bit = [](BigUint& v) {
        if (v.limbs_.empty()) v.limbs_.push_back(1);
        else v.limbs_[0] |= 1;
    };

    std::size_t bits = num.limbs_.size() * 64;
    u64 top = num.limbs_.back();
    while (!(top & (static_cast<u64>(1) << 63))) {
        top <<= 1;
        --bits;
    }

    BigUint quotient, remainder;
    for (std::size_t i = bits; i-- > 0;) {
        shift_left1(remainder);
        shift_left1(quotient);
        if ((num.limbs_[i / 64] >> (i % 64)) & 1) set_low_bit(remainder);
        if (remainder >= den) {
            remainder -= den;
            set_low_bit(quotient);
        }
    }
    return {std::move(quotient), std::move(remainder)};
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        u64 chunk = tmp.div_small(1000000000000000000ULL);
        std::string part = std::to_string(chunk);
        if (!tmp.is_zero()) part.insert(0, 18 - part.size(), '0');
        out.insert(0, part);
    }
    return out;
}

BigUint gcd(BigUint a, BigUint b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    unsigned shift = 0;
    while (a.is_even() && b.is_even()) {
        a.shift_right1();
        b.shift_right1();
        ++shift;
    }
    while (a.is_even()) a.shift_right1();
    while (!b.is_zero()) {
        while (b.is_even()) b.shift_right1();
        if (a > b) std::swap(a, b);
        b -= a;
    }
    BigUint two_pow{1};
    for (unsigned i = 0; i < shift; ++i) two_pow *= BigUint{2};
    return a * two_pow;
}

Rational Rational::make(BigUint num, BigUint den) {
    if (den.is_zero()) throw std::invalid_argument("rational with zero denominator");
    if (num.is_zero()) return Rational{BigUint{}, BigUint{1}};
    BigUint g = gcd(num, den);
    if (g > BigUint{1}) {
        num = BigUint::divmod(num, g).first;
        den = BigUint::divmod(den, g).first;
    }
    return Rational{std::move(num), std::move(den)};
}

std::string Rational::to_string() const {
    if (den == BigUint{1}) return num.to_string();
    return num.to_string() + "/" + den.to_string();
}

}  // namespace hatcycle
