#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace dj {

/// Exact nonnegative integer with base 10^9 limbs, little-endian. Covers the
/// handful of operations the counting code needs: add, multiply, render.
/// Multiplication switches from schoolbook to Karatsuba past 32 limbs.
class BigUInt {
public:
    BigUInt() : limbs_{0} {}

    BigUInt(std::uint64_t v) {
        do {
            limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
            v /= kBase;
        } while (v != 0);
    }

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

    BigUInt& operator+=(const BigUInt& o) {
        if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint32_t rhs = i < o.limbs_.size() ? o.limbs_[i] : 0;
            std::uint32_t sum = limbs_[i] + rhs + carry;
            carry = sum >= kBase ? 1 : 0;
            limbs_[i] = carry ? sum - kBase : sum;
        }
        if (carry) limbs_.push_back(carry);
        return *this;
    }

    friend BigUInt operator+(BigUInt a, const BigUInt& b) { return a += b; }

    friend BigUInt operator*(const BigUInt& a, const BigUInt& b) {
        if (a.is_zero() || b.is_zero()) return BigUInt();
        BigUInt r;
        r.limbs_ = mul_limbs(a.limbs_, b.limbs_);
        r.trim();
        return r;
    }

    friend bool operator==(const BigUInt&, const BigUInt&) = default;

    std::string to_string() const {
        std::string out = std::to_string(limbs_.back());
        char buf[10];
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::snprintf(buf, sizeof(buf), "%09u", limbs_[i]);
            out += buf;
        }
        return out;
    }

    std::size_t digit_count() const {
        return (limbs_.size() - 1) * 9 + std::to_string(limbs_.back()).size();
    }

    /// Residue modulo m (m < 2^32), for probabilistic cross-checks.
    std::uint64_t mod(std::uint64_t m) const {
        std::uint64_t r = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) r = (r * kBase + limbs_[i]) % m;
        return r;
    }

private:
    static constexpr std::uint32_t kBase = 1'000'000'000;
    static constexpr std::size_t kKaratsubaCutoff = 32;

    using Limbs = std::vector<std::uint32_t>;

    // Plain O(|a|*|b|); result has exactly |a|+|b| limbs, leading zeros kept.
    static Limbs mul_school(const Limbs& a, const Limbs& b) {
        Limbs r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = r[i + j] + ai * b[j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            std::size_t pos = i + b.size();
            while (carry) {
                std::uint64_t cur = r[pos] + carry;
                r[pos] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++pos;
            }
        }
        return r;
    }

    static Limbs add_limbs(const Limbs& a, const Limbs& b) {
        Limbs r(std::max(a.size(), b.size()) + 1, 0);
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i + 1 < r.size(); ++i) {
            std::uint32_t sum = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0) + carry;
            carry = sum >= kBase ? 1 : 0;
            r[i] = carry ? sum - kBase : sum;
        }
        r.back() = carry;
        return r;
    }

    // a -= b, requires a >= b.
    static void sub_in_place(Limbs& a, const Limbs& b) {
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            borrow = cur < 0 ? 1 : 0;
            a[i] = static_cast<std::uint32_t>(cur + (borrow ? kBase : 0));
        }
    }

    // r[shift..] += v with carry propagation.
    static void add_into(Limbs& r, const Limbs& v, std::size_t shift) {
        std::uint32_t carry = 0;
        std::size_t i = 0;
        for (; i < v.size(); ++i) {
            std::uint32_t sum = r[shift + i] + v[i] + carry;
            carry = sum >= kBase ? 1 : 0;
            r[shift + i] = carry ? sum - kBase : sum;
        }
        while (carry) {
            std::uint32_t sum = r[shift + i] + carry;
            carry = sum >= kBase ? 1 : 0;
            r[shift + i] = carry ? sum - kBase : sum;
            ++i;
        }
    }

    static Limbs mul_limbs(const Limbs& a, const Limbs& b) {
        if (std::min(a.size(), b.size()) <= kKaratsubaCutoff) return mul_school(a, b);

        // Split both at half the shorter length so all four parts are nonempty.
        std::size_t m = std::min(a.size(), b.size()) / 2;
        Limbs a0(a.begin(), a.begin() + m), a1(a.begin() + m, a.end());
        Limbs b0(b.begin(), b.begin() + m), b1(b.begin() + m, b.end());

        Limbs z0 = mul_limbs(a0, b0);
        Limbs z2 = mul_limbs(a1, b1);
        Limbs z1 = mul_limbs(add_limbs(a0, a1), add_limbs(b0, b1));
        sub_in_place(z1, z0);
        sub_in_place(z1, z2);

        Limbs r(a.size() + b.size() + 2, 0);
        add_into(r, z0, 0);
        add_into(r, z1, m);
        add_into(r, z2, 2 * m);
        return r;
    }

    void trim() {
        while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint32_t> limbs_;
};

}  // namespace dj
