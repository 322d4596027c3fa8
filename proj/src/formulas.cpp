#include "copwin/formulas.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace copwin {

double Pow2Rational::value() const { return std::ldexp(static_cast<double>(num), exp); }

std::string Pow2Rational::to_string() const {
    if (exp >= 0) return std::to_string(num << exp);
    return std::to_string(num) + "/2^" + std::to_string(-exp);
}

void Rational::reduce() {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
}

std::string Rational::to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("binomial: bad arguments");
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t t;
        if (__builtin_mul_overflow(r, static_cast<std::uint64_t>(n - k + i), &t))
            throw std::overflow_error("binomial: result exceeds 64 bits");
        r = t / i;
    }
    return r;
}

FirstMoment kdom_first_moment(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("kdom_first_moment: need 1 <= k <= n");

    double log2q = std::log2(1.0 - std::ldexp(1.0, -k)); // log2(1 - 2^-k)
    double log2v = std::log2(static_cast<double>(binomial(n, k))) + (n - k) * log2q;

    FirstMoment fm{std::exp2(log2v), log2v, std::nullopt};
    if (k == 1) {
        // (1 - 1/2)^(n-1) has a power-of-two denominator, exact form available.
        Pow2Rational exact{n, -(n - 1)};
        exact.reduce();
        fm.exact = exact;
    }
    return fm;
}

double labelled_count_formula(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("labelled_count_formula: need 1 <= k <= n");
    double log2q = std::log2(1.0 - std::ldexp(1.0, -k));
    return -k * log2q + std::log2(static_cast<double>(binomial(n, k))) +
           static_cast<double>(n) * n / 2.0 - (0.5 - log2q) * n;
}

Pow2Rational pair_domination_probability(int k, int l) {
    if (k < 1 || l < 0 || l >= k)
        throw std::invalid_argument("pair_domination_probability: need 0 <= l < k");
    if (k > 10) throw std::invalid_argument("pair_domination_probability: k > 10 unsupported");

    const int e = 2 * k - l;
    // (1 - 2^-l) + (1 - 2^-(k-l))^2 2^-l, over the common denominator 2^(2k-l)
    std::int64_t lhs = ((std::int64_t{1} << l) - 1) * (std::int64_t{1} << (2 * (k - l))) +
                       ((std::int64_t{1} << (k - l)) - 1) * ((std::int64_t{1} << (k - l)) - 1);
    // 1 - 2^-k - 2^-k (1 - 2^-(k-l))
    std::int64_t rhs = (std::int64_t{1} << e) - (std::int64_t{1} << (k - l)) -
                       ((std::int64_t{1} << (k - l)) - 1);
    if (lhs != rhs) throw std::logic_error("pair_domination_probability: identity violated");

    Pow2Rational r{lhs, -e};
    r.reduce();
    return r;
}

Rational eta(int k, int l) {
    if (k < 1 || l < 0 || l >= k) throw std::invalid_argument("eta: need 0 <= l < k");
    if (k > 62) throw std::invalid_argument("eta: k > 62 unsupported");
    Rational r{(std::uint64_t{1} << (k - l)) - 1, (std::uint64_t{1} << k) - 1};
    r.reduce();
    return r;
}

double chernoff_bound(double mean, double eps) {
    if (!(eps > 0.0 && eps < 1.5)) throw std::invalid_argument("chernoff_bound: need 0 < eps < 3/2");
    if (mean < 0.0) throw std::invalid_argument("chernoff_bound: need mean >= 0");
    return 2.0 * std::exp(-eps * eps * mean / 3.0);
}

Pow2Rational pair_domination_bruteforce(int k, int l) {
    if (k < 1 || l < 0 || l >= k)
        throw std::invalid_argument("pair_domination_bruteforce: need 0 <= l < k");
    if (k > 10) throw std::invalid_argument("pair_domination_bruteforce: k > 10 unsupported");

    // Incidence patterns of v to S unite T: l shared bits, k-l only-S bits,
    // k-l only-T bits. Dominated by both iff v hits S and hits T.
    const int bits = 2 * k - l;
    const unsigned shared = (1u << l) - 1;
    const unsigned only_s = ((1u << (k - l)) - 1) << l;
    const unsigned only_t = ((1u << (k - l)) - 1) << k;
    std::int64_t hit = 0;
    for (unsigned m = 0; m < (1u << bits); ++m)
        if ((m & (shared | only_s)) && (m & (shared | only_t))) ++hit;

    Pow2Rational r{hit, -bits};
    r.reduce();
    return r;
}

Rational eta_bruteforce(int k, int l) {
    if (k < 1 || l < 0 || l >= k) throw std::invalid_argument("eta_bruteforce: need 0 <= l < k");
    if (k > 20) throw std::invalid_argument("eta_bruteforce: k > 20 unsupported");

    // Patterns of u to S, T the first l members: eta = P(u nonadjacent to T,
    // dominated by S) / P(dominated by S).
    const unsigned tmask = (1u << l) - 1;
    std::uint64_t num = 0, den = 0;
    for (unsigned m = 0; m < (1u << k); ++m) {
        if (m == 0) continue; // not dominated by S
        ++den;
        if ((m & tmask) == 0) ++num;
    }
    Rational r{num, den};
    r.reduce();
    return r;
}

} // namespace copwin
