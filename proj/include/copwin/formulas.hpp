#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace copwin {

// Exact rational num * 2^exp. Enough for every power-of-two-denominator
// value in scope; arithmetic stays in int64 by construction.
struct Pow2Rational {
    std::int64_t num = 0;
    int exp = 0;

    void reduce() {
        if (num == 0) { exp = 0; return; }
        while ((num & 1) == 0) { num >>= 1; ++exp; }
    }

    double value() const;
    bool operator==(const Pow2Rational& o) const { return num == o.num && exp == o.exp; }
    std::string to_string() const; // "num/2^e" or integer form
};

// Reduced nonnegative rational with general denominator.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    void reduce();
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
    std::string to_string() const;
};

// Exact binomial coefficient; throws std::overflow_error past uint64.
std::uint64_t binomial(int n, int k);

struct FirstMoment {
    double value;
    double log2_value;
    // Exact form, available when the denominator is a power of two (k = 1).
    std::optional<Pow2Rational> exact;
};

// C(n,k) (1 - 2^-k)^(n-k), the expected count of k-element dominating
// sets' union bound. Computed in log space.
FirstMoment kdom_first_moment(int n, int k);

// log2 of (1-2^-k)^-k C(n,k) 2^(n^2/2 - (1/2 - log2(1-2^-k)) n), evaluated
// via that displayed expression so the identity against
// log2(first moment) + C(n,2) is a genuine cross-check.
double labelled_count_formula(int n, int k);

// P(v dominated by both S and T), |S| = |T| = k, |S meet T| = l. Both
// published forms are evaluated exactly and compared before returning.
Pow2Rational pair_domination_probability(int k, int l);

// eta = 2^-l (1 - 2^-(k-l)) / (1 - 2^-k) = (2^(k-l) - 1) / (2^k - 1).
Rational eta(int k, int l);

// 2 exp(-eps^2 mean / 3), valid for 0 < eps < 3/2; may exceed 1, cap when
// reporting as a probability.
double chernoff_bound(double mean, double eps);

// Brute-force pattern enumerations backing the two rationals; used by the
// property tests, kept in the library so the CLI can expose them too.
Pow2Rational pair_domination_bruteforce(int k, int l);
Rational eta_bruteforce(int k, int l);

} // namespace copwin
