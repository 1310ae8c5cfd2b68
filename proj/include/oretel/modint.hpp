#ifndef ORETEL_MODINT_HPP
#define ORETEL_MODINT_HPP

#include "oretel/errors.hpp"
#include "oretel/rational.hpp"

#include <cassert>
#include <cstdint>
#include <string>

namespace oretel {

// Largest prime below 2^31; all modular arithmetic defaults to this modulus
// so products fit comfortably into int64.
inline constexpr uint32_t kDefaultPrime = 2147483629u;

// Element of F_p for a word-sized prime p. The modulus travels with the
// value; mixing moduli is a programming error. Modulus 0 marks the neutral
// constants (zero/one) produced by generic code before a real modulus is
// known; they adopt the modulus of the first real operand they meet.
class ModInt {
public:
    ModInt() : v_(0), p_(0) {}
    ModInt(int64_t v, uint32_t p) : p_(p) {
        if (p == 0) {
            assert(v == 0 || v == 1);
            v_ = v;
        } else {
            int64_t r = v % static_cast<int64_t>(p);
            if (r < 0) r += p;
            v_ = r;
        }
    }

    static ModInt zero() { return ModInt(); }
    static ModInt one() { return ModInt(1, 0); }

    static ModInt from_rat(const Rat& q, uint32_t p) {
        mpz_class m(p);
        mpz_class den_mod = q.den() % m;
        if (den_mod == 0) throw BadEvaluationPoint("denominator divisible by modulus");
        mpz_class num_mod = q.num() % m;
        ModInt n(num_mod.get_si(), p);
        ModInt d(den_mod.get_si(), p);
        return n / d;
    }

    uint32_t modulus() const { return p_; }
    int64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    ModInt operator-() const {
        if (v_ == 0) return *this;
        assert(p_ != 0);
        return ModInt(static_cast<int64_t>(p_) - v_, p_);
    }

    ModInt operator+(const ModInt& o) const {
        uint32_t p = joint(o);
        assert(p != 0 || v_ + o.v_ <= 1);
        int64_t s = v_ + o.v_;
        if (p && s >= p) s -= p;
        return raw(s, p);
    }

    ModInt operator-(const ModInt& o) const {
        uint32_t p = joint(o);
        assert(p != 0 || o.v_ == 0 || (v_ == 1 && o.v_ == 1));
        int64_t s = v_ - o.v_;
        if (s < 0) s += p;
        return raw(s, p);
    }

    ModInt operator*(const ModInt& o) const {
        uint32_t p = joint(o);
        if (p == 0) return raw(v_ * o.v_, 0);
        return raw((v_ * o.v_) % p, p);
    }

    ModInt operator/(const ModInt& o) const { return *this * o.inv(); }

    ModInt& operator+=(const ModInt& o) { *this = *this + o; return *this; }
    ModInt& operator-=(const ModInt& o) { *this = *this - o; return *this; }
    ModInt& operator*=(const ModInt& o) { *this = *this * o; return *this; }
    ModInt& operator/=(const ModInt& o) { *this = *this / o; return *this; }

    ModInt inv() const {
        assert(v_ != 0);
        if (p_ == 0) return *this; // value 1
        // extended Euclid
        int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b) {
            int64_t q = a / b;
            int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        assert(a == 1);
        return ModInt(x0, p_);
    }

    ModInt scale_int(long k) const {
        if (p_ == 0) { assert(v_ * k == 0 || v_ * k == 1); return raw(v_ * k, 0); }
        int64_t kk = k % static_cast<int64_t>(p_);
        if (kk < 0) kk += p_;
        return raw((v_ * kk) % p_, p_);
    }

    ModInt scale_big(const mpz_class& z) const {
        if (p_ == 0) {
            assert(v_ == 0 || z == 0 || z == 1);
            return raw(v_ * z.get_si(), 0);
        }
        mpz_class r = z % p_;
        if (r < 0) r += p_;
        return raw((v_ * r.get_si()) % p_, p_);
    }

    ModInt pow(unsigned e) const {
        ModInt r = one();
        ModInt b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const ModInt& o) const {
        if (v_ != o.v_) return false;
        return p_ == o.p_ || p_ == 0 || o.p_ == 0;
    }
    bool operator!=(const ModInt& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

private:
    static ModInt raw(int64_t v, uint32_t p) {
        ModInt m;
        m.v_ = v;
        m.p_ = p;
        return m;
    }
    uint32_t joint(const ModInt& o) const {
        if (p_ == 0) return o.p_;
        assert(o.p_ == 0 || o.p_ == p_);
        return p_;
    }

    int64_t v_;
    uint32_t p_;
};

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace oretel

#endif
