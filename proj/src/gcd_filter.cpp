#include "oretel/mpoly.hpp"

#include <optional>
#include <random>

namespace oretel::detail {

namespace {

uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1;
    }
    return r;
}

// dense univariate image of p in `var`, all other variables evaluated at
// `point`, coefficients mod `prime`; nullopt when a coefficient denominator
// is divisible by the prime
std::optional<std::vector<uint64_t>> univar_image(const MPoly<Rat>& p, int var,
                                                  const std::vector<long>& point,
                                                  uint32_t prime) {
    std::vector<uint64_t> c(static_cast<size_t>(p.degree(var)) + 1, 0);
    for (auto& t : p.terms()) {
        ModInt m(0, prime);
        try {
            m = ModInt::from_rat(t.coef, prime);
        } catch (const BadEvaluationPoint&) {
            return std::nullopt;
        }
        uint64_t v = static_cast<uint64_t>(m.value());
        for (size_t i = 0; i < point.size(); ++i) {
            if (static_cast<int>(i) == var || t.exp[i] == 0) continue;
            v = (v * pow_mod(static_cast<uint64_t>(point[i]), static_cast<uint64_t>(t.exp[i]),
                             prime)) %
                prime;
        }
        size_t k = static_cast<size_t>(t.exp[var]);
        c[k] = (c[k] + v) % prime;
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

std::vector<uint64_t> univar_gcd(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t p) {
    auto deg = [](const std::vector<uint64_t>& x) { return static_cast<int>(x.size()) - 1; };
    auto rem = [&](std::vector<uint64_t> x, const std::vector<uint64_t>& y) {
        uint64_t inv = pow_mod(y.back(), p - 2, p);
        while (deg(x) >= deg(y)) {
            uint64_t f = (x.back() * inv) % p;
            size_t off = x.size() - y.size();
            for (size_t i = 0; i < y.size(); ++i)
                x[off + i] = (x[off + i] + p - (f * y[i]) % p) % p;
            while (!x.empty() && x.back() == 0) x.pop_back();
            if (x.empty()) break;
        }
        return x;
    };
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        auto r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace

bool gcd_certified_trivial(const MPoly<Rat>& a, const MPoly<Rat>& b) {
    static thread_local std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    static const uint32_t primes[] = {2147483629u, 2147483647u, 1999999973u};
    const size_t n = a.vars()->size();
    std::uniform_int_distribution<long> dist(2, 999983);

    for (size_t v = 0; v < n; ++v) {
        int da = a.degree(static_cast<int>(v));
        int db = b.degree(static_cast<int>(v));
        if (da == 0 || db == 0) continue;
        bool certified = false;
        for (int attempt = 0; attempt < 4 && !certified; ++attempt) {
            uint32_t p = primes[attempt % 3];
            std::vector<long> point(n);
            for (auto& x : point) x = dist(rng);
            auto ia = univar_image(a, static_cast<int>(v), point, p);
            auto ib = univar_image(b, static_cast<int>(v), point, p);
            if (!ia || !ib) continue;
            // leading-degree guard: image degree must not drop, otherwise the
            // bound deg_v(gcd) <= deg(image gcd) is not valid
            if (static_cast<int>(ia->size()) - 1 != da || static_cast<int>(ib->size()) - 1 != db)
                continue;
            auto g = univar_gcd(*ia, *ib, p);
            if (static_cast<int>(g.size()) - 1 == 0)
                certified = true;
            else
                return false; // plausibly a real common factor: run the full PRS
        }
        if (!certified) return false;
    }
    return true;
}

} // namespace oretel::detail
