#ifndef ORETEL_RATIONAL_HPP
#define ORETEL_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace oretel {

// Arbitrary-precision rational, always canonical: gcd(|num|, den) = 1, den >= 1.
// Thin value wrapper around GMP's mpq_class; all mutating paths re-canonicalize.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}
    Rat(long n, long d) : q_(n, d) { q_.canonicalize(); }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rat(const mpz_class& z) : q_(z) {}
    Rat(const mpz_class& n, const mpz_class& d) : q_(n, d) { q_.canonicalize(); }
    explicit Rat(const std::string& s) : q_(s) { q_.canonicalize(); }

    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_)); }
    Rat operator/(const Rat& o) const { return Rat(mpq_class(q_ / o.q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) { q_ /= o.q_; return *this; }

    Rat scale_int(long k) const { return Rat(mpq_class(q_ * k)); }
    Rat scale_big(const mpz_class& z) const { return Rat(mpq_class(q_ * z)); }
    Rat inv() const { return Rat(mpq_class(1 / q_)); }
    Rat abs() const { return Rat(mpq_class(::abs(q_))); }

    Rat pow(unsigned e) const {
        mpq_class r(1);
        mpq_class b = q_;
        unsigned k = e;
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return Rat(r);
    }

    bool operator==(const Rat& o) const { return q_ == o.q_; }
    bool operator!=(const Rat& o) const { return q_ != o.q_; }
    bool operator<(const Rat& o) const { return q_ < o.q_; }
    bool operator>(const Rat& o) const { return q_ > o.q_; }

    std::string str() const { return q_.get_str(); }

    double to_double() const { return q_.get_d(); }

private:
    mpq_class q_;
};

inline mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

} // namespace oretel

#endif
