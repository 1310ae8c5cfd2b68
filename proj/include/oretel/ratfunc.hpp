#ifndef ORETEL_RATFUNC_HPP
#define ORETEL_RATFUNC_HPP

#include "oretel/errors.hpp"
#include "oretel/mpoly.hpp"

#include <cassert>

namespace oretel {

// Reduced rational function num/den over the field of fractions of C[vars].
// Invariants: gcd(num, den) = 1, den nonzero with normalized content
// (integer-primitive positive lead over Q, monic over F_p).
template <class C>
class RatFunc {
public:
    RatFunc() = default;

    static RatFunc from_poly(MPoly<C> n) {
        RatFunc r;
        r.den_ = MPoly<C>::one(n.vars());
        r.num_ = std::move(n);
        return r;
    }

    static RatFunc make(MPoly<C> n, MPoly<C> d) {
        assert(!d.is_zero());
        assert(same_vars(n.vars(), d.vars()));
        if (n.is_zero()) return from_poly(std::move(n));
        MPoly<C> g = poly_gcd(n, d);
        if (!g.is_constant()) {
            n = n.exact_div(g);
            d = d.exact_div(g);
        }
        C c = d.content();
        RatFunc r;
        r.num_ = n.scale(c.inv());
        r.den_ = d.scale(c.inv());
        return r;
    }

    static RatFunc zero(const VarsPtr& vars) { return from_poly(MPoly<C>::zero(vars)); }
    static RatFunc one(const VarsPtr& vars) { return from_poly(MPoly<C>::one(vars)); }
    static RatFunc variable(const VarsPtr& vars, int idx) {
        return from_poly(MPoly<C>::variable(vars, idx));
    }
    static RatFunc constant(const VarsPtr& vars, C c) {
        return from_poly(MPoly<C>::constant(vars, std::move(c)));
    }

    const MPoly<C>& num() const { return num_; }
    const MPoly<C>& den() const { return den_; }
    const VarsPtr& vars() const { return num_.vars(); }
    bool valid() const { return !den_.is_zero() && num_.vars() != nullptr; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    RatFunc operator+(const RatFunc& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        MPoly<C> g = poly_gcd(den_, o.den_);
        if (g.is_constant()) return make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
        MPoly<C> da = den_.exact_div(g);
        MPoly<C> db = o.den_.exact_div(g);
        return make(num_ * db + o.num_ * da, da * o.den_);
    }

    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }

    RatFunc operator*(const RatFunc& o) const {
        if (is_zero() || o.is_zero()) return zero(vars());
        MPoly<C> g1 = poly_gcd(num_, o.den_);
        MPoly<C> g2 = poly_gcd(o.num_, den_);
        MPoly<C> n1 = g1.is_constant() ? num_ : num_.exact_div(g1);
        MPoly<C> d2 = g1.is_constant() ? o.den_ : o.den_.exact_div(g1);
        MPoly<C> n2 = g2.is_constant() ? o.num_ : o.num_.exact_div(g2);
        MPoly<C> d1 = g2.is_constant() ? den_ : den_.exact_div(g2);
        MPoly<C> d = d1 * d2;
        C c = d.content();
        RatFunc r;
        r.num_ = (n1 * n2).scale(c.inv());
        r.den_ = d.scale(c.inv());
        return r;
    }

    RatFunc operator/(const RatFunc& o) const {
        assert(!o.is_zero());
        RatFunc inv;
        inv.num_ = o.den_;
        inv.den_ = o.num_;
        C c = inv.den_.content();
        inv.num_ = inv.num_.scale(c.inv());
        inv.den_ = inv.den_.scale(c.inv());
        return *this * inv;
    }

    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc derivative(int var) const {
        return make(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
    }

    RatFunc shift_var(int var, long delta) const {
        if (delta == 0) return *this;
        return make(num_.shift_var(var, delta), den_.shift_var(var, delta));
    }

    Rat eval_rat(const std::vector<Rat>& point) const
        requires std::is_same_v<C, Rat>
    {
        Rat d = den_.eval_rat(point);
        if (d.is_zero()) throw CoefficientPole("denominator vanishes at evaluation point");
        return num_.eval_rat(point) / d;
    }

    RatFunc<ModInt> eval_partial_mod(const std::vector<long>& assigned,
                                     const std::vector<bool>& mask, uint32_t p) const
        requires std::is_same_v<C, Rat>
    {
        MPoly<ModInt> n = num_.eval_partial_mod(assigned, mask, p);
        MPoly<ModInt> d = den_.eval_partial_mod(assigned, mask, p);
        if (d.is_zero()) throw BadEvaluationPoint("denominator image vanishes");
        return RatFunc<ModInt>::make(std::move(n), std::move(d));
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    MPoly<C> num_;
    MPoly<C> den_;
};

using QRat = RatFunc<Rat>;
using PRat = RatFunc<ModInt>;

// Full evaluation of a rational function at an integer point in F_p; throws
// BadEvaluationPoint when the denominator image vanishes.
inline ModInt evaluate_hom(const RatFunc<Rat>& f, const std::vector<long>& point, uint32_t p) {
    std::vector<bool> mask(point.size(), true);
    RatFunc<ModInt> img = f.eval_partial_mod(point, mask, p);
    assert(img.num().is_constant() && img.den().is_constant());
    return img.num().constant_value() / img.den().constant_value();
}

} // namespace oretel

#endif
