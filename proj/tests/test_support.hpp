#ifndef ORETEL_TEST_SUPPORT_HPP
#define ORETEL_TEST_SUPPORT_HPP

#include "oretel/mpoly.hpp"
#include "oretel/ratfunc.hpp"

#include <random>
#include <vector>

namespace oretel::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240117u);
    return g;
}

inline long rand_int(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng());
}

// random polynomial with a handful of small terms
inline MPoly<Rat> random_poly(const VarsPtr& vars, int max_deg = 3, int max_terms = 4,
                              long coef_range = 6) {
    MPoly<Rat> p = MPoly<Rat>::zero(vars);
    int nt = static_cast<int>(rand_int(1, max_terms));
    for (int t = 0; t < nt; ++t) {
        Exp e(vars->size(), 0);
        for (auto& x : e) x = static_cast<int>(rand_int(0, max_deg));
        long c = rand_int(-coef_range, coef_range);
        if (c == 0) c = 1;
        p += MPoly<Rat>::monomial(vars, e, Rat(c));
    }
    return p;
}

inline MPoly<Rat> random_nonzero_poly(const VarsPtr& vars, int max_deg = 3, int max_terms = 4) {
    while (true) {
        auto p = random_poly(vars, max_deg, max_terms);
        if (!p.is_zero()) return p;
    }
}

inline RatFunc<Rat> random_ratfunc(const VarsPtr& vars, int max_deg = 2) {
    return RatFunc<Rat>::make(random_poly(vars, max_deg, 3),
                              random_nonzero_poly(vars, max_deg, 2));
}

} // namespace oretel::testing

#endif
