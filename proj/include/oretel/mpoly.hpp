#ifndef ORETEL_MPOLY_HPP
#define ORETEL_MPOLY_HPP

#include "oretel/errors.hpp"
#include "oretel/modint.hpp"
#include "oretel/rational.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

namespace oretel {

// Ordered variable registry, shared by every value of one computation.
class VarTable {
public:
    static std::shared_ptr<const VarTable> make(std::vector<std::string> names) {
        auto t = std::make_shared<VarTable>();
        t->names_ = std::move(names);
        return t;
    }
    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& n) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return static_cast<int>(i);
        return -1;
    }
    bool operator==(const VarTable& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using VarsPtr = std::shared_ptr<const VarTable>;

inline bool same_vars(const VarsPtr& a, const VarsPtr& b) {
    return a == b || (a && b && *a == *b);
}

using Exp = std::vector<int>;

inline int exp_total(const Exp& e) {
    int t = 0;
    for (int x : e) t += x;
    return t;
}

inline Exp exp_add(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// componentwise a - b; caller guarantees nonnegativity
inline Exp exp_sub(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        assert(r[i] >= 0);
    }
    return r;
}

inline bool exp_divides(const Exp& a, const Exp& b) { // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// graded reverse lexicographic: compare total degree first; on ties the
// monomial with the smaller exponent in the last differing position is larger
inline int grevlex_cmp(const Exp& a, const Exp& b) {
    int da = exp_total(a), db = exp_total(b);
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

struct GrevlexGreater {
    bool operator()(const Exp& a, const Exp& b) const { return grevlex_cmp(a, b) > 0; }
};

namespace detail {
template <class C>
inline bool is_rat_coeff = std::is_same_v<C, Rat>;
}

// Multivariate polynomial over a field C (Rat or ModInt). Terms are kept in
// descending grevlex order with no zero coefficients.
template <class C>
class MPoly {
public:
    struct Term {
        Exp exp;
        C coef;
    };

    MPoly() = default;
    explicit MPoly(VarsPtr vars) : vars_(std::move(vars)) {}

    static MPoly zero(VarsPtr vars) { return MPoly(std::move(vars)); }

    static MPoly constant(VarsPtr vars, C c) {
        MPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_.push_back({Exp(p.vars_->size(), 0), std::move(c)});
        return p;
    }

    static MPoly one(VarsPtr vars) { return constant(std::move(vars), C::one()); }

    static MPoly variable(VarsPtr vars, int idx) {
        MPoly p(std::move(vars));
        Exp e(p.vars_->size(), 0);
        e[idx] = 1;
        p.terms_.push_back({std::move(e), C::one()});
        return p;
    }

    static MPoly monomial(VarsPtr vars, Exp e, C c) {
        MPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_.push_back({std::move(e), std::move(c)});
        return p;
    }

    const VarsPtr& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t nterms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && exp_total(terms_[0].exp) == 0);
    }

    bool is_one() const {
        return terms_.size() == 1 && exp_total(terms_[0].exp) == 0 && terms_[0].coef.is_one();
    }

    const Term& leading() const {
        assert(!terms_.empty());
        return terms_[0];
    }

    C constant_value() const {
        assert(is_constant());
        if (terms_.empty()) return C();
        return terms_[0].coef;
    }

    int degree(int var) const {
        int d = 0;
        for (auto& t : terms_) d = std::max(d, t.exp[var]);
        return d;
    }

    int total_degree() const {
        int d = 0;
        for (auto& t : terms_) d = std::max(d, exp_total(t.exp));
        return d;
    }

    std::vector<int> max_degrees() const {
        std::vector<int> d(vars_->size(), 0);
        for (auto& t : terms_)
            for (size_t i = 0; i < d.size(); ++i) d[i] = std::max(d[i], t.exp[i]);
        return d;
    }

    bool uses_var(int var) const {
        for (auto& t : terms_)
            if (t.exp[var] > 0) return true;
        return false;
    }

    C coeff_at(const Exp& e) const {
        for (auto& t : terms_)
            if (t.exp == e) return t.coef;
        return C();
    }

    MPoly operator-() const {
        MPoly r(vars_);
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) r.terms_.push_back({t.exp, -t.coef});
        return r;
    }

    MPoly operator+(const MPoly& o) const { return merged(o, false); }
    MPoly operator-(const MPoly& o) const { return merged(o, true); }

    MPoly operator*(const MPoly& o) const {
        assert(same_vars(vars_, o.vars_));
        if (is_zero() || o.is_zero()) return zero(vars_);
        std::map<Exp, C, GrevlexGreater> acc;
        for (auto& a : terms_)
            for (auto& b : o.terms_) {
                Exp e = exp_add(a.exp, b.exp);
                C c = a.coef * b.coef;
                auto it = acc.find(e);
                if (it == acc.end()) {
                    if (!c.is_zero()) acc.emplace(std::move(e), std::move(c));
                } else {
                    it->second += c;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        MPoly r(vars_);
        r.terms_.reserve(acc.size());
        for (auto& [e, c] : acc) r.terms_.push_back({e, c});
        return r;
    }

    MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
    MPoly& operator-=(const MPoly& o) { *this = *this - o; return *this; }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    MPoly scale(const C& c) const {
        if (c.is_zero()) return zero(vars_);
        MPoly r(vars_);
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) r.terms_.push_back({t.exp, t.coef * c});
        return r;
    }

    MPoly mul_monomial(const Exp& e, const C& c) const {
        if (c.is_zero()) return zero(vars_);
        MPoly r(vars_);
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) r.terms_.push_back({exp_add(t.exp, e), t.coef * c});
        return r;
    }

    MPoly pow(unsigned k) const {
        MPoly r = one(vars_);
        MPoly b = *this;
        while (k) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    bool operator==(const MPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].exp != o.terms_[i].exp || terms_[i].coef != o.terms_[i].coef)
                return false;
        return true;
    }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // d/d(var)
    MPoly derivative(int var) const {
        MPoly r(vars_);
        for (auto& t : terms_) {
            if (t.exp[var] == 0) continue;
            Exp e = t.exp;
            long k = e[var];
            e[var] -= 1;
            C c = t.coef.scale_int(k);
            if (!c.is_zero()) r.terms_.push_back({std::move(e), std::move(c)});
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return grevlex_cmp(a.exp, b.exp) > 0; });
        return r;
    }

    // substitute var -> var + delta
    MPoly shift_var(int var, long delta) const {
        if (delta == 0) return *this;
        std::map<Exp, C, GrevlexGreater> acc;
        for (auto& t : terms_) {
            int e = t.exp[var];
            if (e == 0) {
                add_to(acc, t.exp, t.coef);
                continue;
            }
            // (x+delta)^e = sum binom(e,k) delta^(e-k) x^k
            mpz_class binom = 1;
            mpz_class dpow = 1;
            for (int j = 0; j < e; ++j) dpow *= delta;
            for (int k = 0; k <= e; ++k) {
                mpz_class factor = binom * dpow;
                if (factor != 0) {
                    Exp ne = t.exp;
                    ne[var] = k;
                    add_to(acc, ne, t.coef.scale_big(factor));
                }
                // binom(e,k+1) = binom(e,k)*(e-k)/(k+1); delta power drops by one
                binom = binom * (e - k) / (k + 1);
                if (delta != 0) dpow /= delta;
            }
        }
        return from_map(vars_, acc);
    }

    // Full evaluation; values indexed by variable.
    Rat eval_rat(const std::vector<Rat>& point) const
        requires std::is_same_v<C, Rat>
    {
        Rat s(0);
        for (auto& t : terms_) {
            Rat m = t.coef;
            for (size_t i = 0; i < point.size(); ++i)
                if (t.exp[i]) m *= point[i].pow(static_cast<unsigned>(t.exp[i]));
            s += m;
        }
        return s;
    }

    // Evaluate a subset of variables at integers mod p; the rest stay symbolic.
    // assigned[i] >= 0 marks variable i for substitution.
    MPoly<ModInt> eval_partial_mod(const std::vector<long>& assigned,
                                   const std::vector<bool>& mask, uint32_t p) const
        requires std::is_same_v<C, Rat>
    {
        std::map<Exp, ModInt, GrevlexGreater> acc;
        for (auto& t : terms_) {
            ModInt c = ModInt::from_rat(t.coef, p);
            Exp e = t.exp;
            for (size_t i = 0; i < mask.size(); ++i) {
                if (!mask[i] || e[i] == 0) continue;
                ModInt base(assigned[i], p);
                c = c * base.pow(static_cast<unsigned>(e[i]));
                e[i] = 0;
            }
            auto it = acc.find(e);
            if (it == acc.end()) {
                if (!c.is_zero()) acc.emplace(std::move(e), c);
            } else {
                it->second += c;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
        MPoly<ModInt> r(vars_);
        for (auto& [e, c] : acc) r.append_term(e, c);
        return r;
    }

    void append_term(const Exp& e, const C& c) { // caller keeps order/nonzero invariants
        terms_.push_back({e, c});
    }

    // content * primitive decomposition.
    // Rat: content is the rational c with poly/c integer, coprime, positive lead.
    // ModInt: content is the leading coefficient (primitive = monic).
    C content() const {
        if (terms_.empty()) return C();
        if constexpr (std::is_same_v<C, Rat>) {
            mpz_class g = 0, l = 1;
            for (auto& t : terms_) {
                g = gcd_z(g, t.coef.num());
                l = lcm_z(l, t.coef.den());
            }
            Rat c(g, l);
            if (terms_[0].coef.sign() < 0) c = -c;
            return c;
        } else {
            return terms_[0].coef;
        }
    }

    MPoly primitive() const {
        if (terms_.empty()) return *this;
        return scale(content().inv());
    }

    MPoly normalized() const { return primitive(); }

    // exact division; throws DivisionNotExact when the remainder is nonzero
    MPoly exact_div(const MPoly& b) const {
        auto q = try_exact_div(b);
        if (!q) throw DivisionNotExact("polynomial division not exact");
        return *q;
    }

    std::optional<MPoly> try_exact_div(const MPoly& b) const {
        assert(same_vars(vars_, b.vars_));
        assert(!b.is_zero());
        MPoly r = *this;
        MPoly q(vars_);
        std::vector<Term> qterms;
        const Term& lb = b.leading();
        while (!r.is_zero()) {
            const Term& lr = r.leading();
            if (!exp_divides(lb.exp, lr.exp)) return std::nullopt;
            Exp e = exp_sub(lr.exp, lb.exp);
            C c = lr.coef / lb.coef;
            qterms.push_back({e, c});
            r = r - b.mul_monomial(e, c);
        }
        q.terms_ = std::move(qterms);
        std::sort(q.terms_.begin(), q.terms_.end(),
                  [](const Term& a, const Term& b2) { return grevlex_cmp(a.exp, b2.exp) > 0; });
        return q;
    }

    bool divides(const MPoly& a) const { return a.try_exact_div(*this).has_value(); }

    // content of *this viewed as a polynomial in the masked variables,
    // i.e. the gcd of the coefficients living in the unmasked variables
    MPoly content_wrt(const std::vector<bool>& mask) const;
    MPoly primitive_wrt(const std::vector<bool>& mask) const {
        if (is_zero()) return *this;
        return exact_div(content_wrt(mask));
    }

    std::string str() const;

private:
    static void add_to(std::map<Exp, C, GrevlexGreater>& acc, const Exp& e, const C& c) {
        if (c.is_zero()) return;
        auto it = acc.find(e);
        if (it == acc.end()) {
            acc.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }

    static MPoly from_map(const VarsPtr& vars, const std::map<Exp, C, GrevlexGreater>& acc) {
        MPoly r(vars);
        r.terms_.reserve(acc.size());
        for (auto& [e, c] : acc) r.terms_.push_back({e, c});
        return r;
    }

    MPoly merged(const MPoly& o, bool sub) const {
        assert(same_vars(vars_, o.vars_));
        MPoly r(vars_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = grevlex_cmp(terms_[i].exp, o.terms_[j].exp);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back({o.terms_[j].exp, sub ? -o.terms_[j].coef : o.terms_[j].coef});
                ++j;
            } else {
                C s = sub ? terms_[i].coef - o.terms_[j].coef : terms_[i].coef + o.terms_[j].coef;
                if (!s.is_zero()) r.terms_.push_back({terms_[i].exp, std::move(s)});
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j)
            r.terms_.push_back({o.terms_[j].exp, sub ? -o.terms_[j].coef : o.terms_[j].coef});
        return r;
    }

    VarsPtr vars_;
    std::vector<Term> terms_;
};

template <class C>
MPoly<C> poly_gcd(const MPoly<C>& a, const MPoly<C>& b);

namespace detail {

// Univariate view of a multivariate polynomial in one main variable; the
// coefficients are polynomials in the remaining variables.
template <class C>
struct Uni {
    std::vector<MPoly<C>> c; // index = degree in the main variable
    int deg() const {
        for (size_t i = c.size(); i-- > 0;)
            if (!c[i].is_zero()) return static_cast<int>(i);
        return -1;
    }
    bool is_zero() const { return deg() < 0; }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

template <class C>
Uni<C> to_uni(const MPoly<C>& p, int var) {
    Uni<C> u;
    u.c.assign(static_cast<size_t>(p.degree(var)) + 1, MPoly<C>::zero(p.vars()));
    for (auto& t : p.terms()) {
        Exp e = t.exp;
        int k = e[var];
        e[var] = 0;
        u.c[k] += MPoly<C>::monomial(p.vars(), e, t.coef);
    }
    return u;
}

template <class C>
MPoly<C> from_uni(const Uni<C>& u, const VarsPtr& vars, int var) {
    MPoly<C> r = MPoly<C>::zero(vars);
    for (size_t k = 0; k < u.c.size(); ++k) {
        if (u.c[k].is_zero()) continue;
        Exp e(vars->size(), 0);
        e[var] = static_cast<int>(k);
        r += u.c[k].mul_monomial(e, C::one());
    }
    return r;
}

template <class C>
MPoly<C> uni_content(const Uni<C>& u) {
    MPoly<C> g;
    bool first = true;
    for (auto& ci : u.c) {
        if (ci.is_zero()) continue;
        if (first) {
            g = ci.normalized();
            first = false;
        } else {
            g = poly_gcd(g, ci);
        }
        if (g.is_constant()) break;
    }
    return g.is_constant() ? MPoly<C>::one(g.vars()) : g;
}

template <class C>
Uni<C> uni_div_content(const Uni<C>& u, const MPoly<C>& cont) {
    Uni<C> r = u;
    if (cont.is_one()) return r;
    for (auto& ci : r.c)
        if (!ci.is_zero()) ci = ci.exact_div(cont);
    return r;
}

// pseudo-remainder sequence step: repeatedly R = lc(B)*R - lc(R)*x^(dR-dB)*B
template <class C>
Uni<C> uni_prem(const Uni<C>& A, const Uni<C>& B) {
    int dB = B.deg();
    assert(dB >= 0);
    const MPoly<C>& lb = B.c[static_cast<size_t>(dB)];
    Uni<C> R = A;
    R.trim();
    while (true) {
        int dR = R.deg();
        if (dR < dB) break;
        MPoly<C> lr = R.c[static_cast<size_t>(dR)];
        for (auto& ci : R.c) ci = ci * lb;
        for (int k = 0; k <= dB; ++k) {
            if (B.c[static_cast<size_t>(k)].is_zero()) continue;
            R.c[static_cast<size_t>(k + dR - dB)] -= lr * B.c[static_cast<size_t>(k)];
        }
        R.trim();
    }
    return R;
}

// Sound modular filter (Rat only): certifies gcd(a, b) is constant. For each
// variable present in both inputs, evaluate the remaining variables at a
// random point mod p. When neither image loses leading degree, the image of
// the gcd keeps its degree too (leading coefficients divide), so a constant
// univariate gcd mod p proves degree zero in that variable.
bool gcd_certified_trivial(const MPoly<Rat>& a, const MPoly<Rat>& b);

} // namespace detail

template <class C>
MPoly<C> poly_gcd(const MPoly<C>& a, const MPoly<C>& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.normalized();
    if (b.is_zero()) return a.normalized();
    if (a.is_constant() || b.is_constant()) return MPoly<C>::one(a.vars());

    int main_var = -1, best = 0;
    const size_t n = a.vars()->size();
    for (size_t v = 0; v < n; ++v) {
        int da = a.degree(static_cast<int>(v));
        int db = b.degree(static_cast<int>(v));
        if (da == 0 || db == 0) continue;
        int m = std::max(da, db);
        if (main_var < 0 || m < best) {
            main_var = static_cast<int>(v);
            best = m;
        }
    }
    if (main_var < 0) return MPoly<C>::one(a.vars());

    if constexpr (std::is_same_v<C, Rat>) {
        if (detail::gcd_certified_trivial(a, b)) return MPoly<C>::one(a.vars());
    }

    auto A = detail::to_uni(a, main_var);
    auto B = detail::to_uni(b, main_var);
    MPoly<C> contA = detail::uni_content(A);
    MPoly<C> contB = detail::uni_content(B);
    auto ppA = detail::uni_div_content(A, contA);
    auto ppB = detail::uni_div_content(B, contB);
    MPoly<C> cont = poly_gcd(contA, contB);

    detail::Uni<C> r1 = std::move(ppA), r2 = std::move(ppB);
    if (r1.deg() < r2.deg()) std::swap(r1, r2);
    while (!r2.is_zero()) {
        auto r = detail::uni_prem(r1, r2);
        r1 = std::move(r2);
        if (r.is_zero()) {
            r2 = std::move(r);
        } else {
            MPoly<C> c = detail::uni_content(r);
            r2 = detail::uni_div_content(r, c);
        }
    }
    MPoly<C> g = detail::from_uni(r1, a.vars(), main_var) * cont;
    return g.normalized();
}

template <class C>
MPoly<C> poly_lcm(const MPoly<C>& a, const MPoly<C>& b) {
    if (a.is_zero() || b.is_zero()) return MPoly<C>::zero(a.vars());
    return (a * b).exact_div(poly_gcd(a, b)).normalized();
}

namespace detail {
template <class C>
void insert_coprime(std::vector<MPoly<C>>& basis, MPoly<C> f) {
    f = f.normalized();
    if (f.is_constant()) return;
    for (size_t i = 0; i < basis.size(); ++i) {
        MPoly<C> g = poly_gcd(f, basis[i]);
        if (g.is_constant()) continue;
        MPoly<C> b = basis[i];
        MPoly<C> brem = b.exact_div(g);
        MPoly<C> frem = f.exact_div(g);
        basis.erase(basis.begin() + static_cast<long>(i));
        insert_coprime(basis, g);
        insert_coprime(basis, brem);
        insert_coprime(basis, frem);
        return;
    }
    basis.push_back(std::move(f));
}
} // namespace detail

// Pairwise-coprime polynomials that multiplicatively generate every input up
// to a constant. No irreducible factorization involved, only gcd refinement.
template <class C>
std::vector<MPoly<C>> gcd_free_basis(const std::vector<MPoly<C>>& in) {
    std::vector<MPoly<C>> basis;
    for (auto& f : in) {
        assert(!f.is_zero());
        detail::insert_coprime(basis, f);
    }
    std::sort(basis.begin(), basis.end(), [](const MPoly<C>& x, const MPoly<C>& y) {
        if (x.total_degree() != y.total_degree()) return x.total_degree() < y.total_degree();
        if (x.is_zero() || y.is_zero()) return y.is_zero() && !x.is_zero();
        int c = grevlex_cmp(x.leading().exp, y.leading().exp);
        if (c != 0) return c < 0;
        return x.str() < y.str();
    });
    return basis;
}

// exponent of b in f (largest k with b^k | f)
template <class C>
int factor_multiplicity(MPoly<C> f, const MPoly<C>& b) {
    assert(!b.is_constant());
    int k = 0;
    while (true) {
        auto q = f.try_exact_div(b);
        if (!q) return k;
        f = std::move(*q);
        ++k;
    }
}

template <class C>
MPoly<C> MPoly<C>::content_wrt(const std::vector<bool>& mask) const {
    assert(!is_zero());
    std::map<Exp, MPoly<C>, GrevlexGreater> groups;
    for (auto& t : terms_) {
        Exp key(vars_->size(), 0);
        Exp rest = t.exp;
        for (size_t i = 0; i < mask.size(); ++i) {
            if (mask[i]) {
                key[i] = t.exp[i];
                rest[i] = 0;
            }
        }
        auto it = groups.find(key);
        if (it == groups.end()) it = groups.emplace(key, MPoly<C>::zero(vars_)).first;
        it->second += MPoly<C>::monomial(vars_, rest, t.coef);
    }
    MPoly<C> g;
    bool first = true;
    for (auto& [k, p] : groups) {
        if (first) {
            g = p.normalized();
            first = false;
        } else {
            g = poly_gcd(g, p);
        }
        if (g.is_constant()) break;
    }
    if (g.is_constant()) {
        // keep the sign/scaling convention: dividing by this content must
        // leave a normalized polynomial
        if constexpr (std::is_same_v<C, Rat>) {
            return MPoly<C>::constant(vars_, content());
        } else {
            return MPoly<C>::constant(vars_, content());
        }
    }
    // fix constants so that exact_div(*this, content) is primitive-consistent
    if constexpr (std::is_same_v<C, Rat>) {
        MPoly<C> pp = exact_div(g);
        return g.scale(pp.content());
    } else {
        return g;
    }
}

template <class C>
std::string MPoly<C>::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& t : terms_) {
        std::string cs;
        bool neg = false;
        if constexpr (std::is_same_v<C, Rat>) {
            Rat c = t.coef;
            neg = c.sign() < 0;
            cs = (neg ? -c : c).str();
        } else {
            cs = t.coef.str();
        }
        std::string mono;
        for (size_t i = 0; i < vars_->size(); ++i) {
            if (t.exp[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_->name(i);
            if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
        }
        std::string term;
        if (mono.empty()) {
            term = cs;
        } else if (cs == "1") {
            term = mono;
        } else {
            term = cs + "*" + mono;
        }
        if (first) {
            out = (neg ? "-" : "") + term;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + term;
        }
    }
    return out;
}

} // namespace oretel

#endif
