#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qstable/rational.hpp"

namespace qstab {

// Planning layer: given a part count q and an ambient dimension d, decide
// which argument route covers q and pick the prime the fully general
// construction would run with. Routes, cheapest first:
//
//   prime_power_q         q itself is a prime power
//   prime_power_q_plus_1  q+1 is a prime power
//   prime_2q_plus_1       2q+1 is prime
//   general               none of the above (first hit: q = 34)
//
// Whatever the route, the report carries a prime p = 1 (mod q) passing the
// join-margin inequality, so downstream consumers always have the general
// parameters available; the route merely records that a cheaper argument
// already applies.

inline constexpr std::int64_t kPrimalityLimit = 10'000'000;

inline bool is_prime(std::int64_t n) {
    if (n > kPrimalityLimit) {
        throw std::domain_error("primality test limited to n <= 10^7");
    }
    if (n < 2) return false;
    for (std::int64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

namespace detail {

// Largest integer r with r^k <= n, by binary search in exact arithmetic.
inline std::int64_t floor_kth_root(std::int64_t n, int k) {
    std::int64_t lo = 1, hi = n;
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo + 1) / 2;
        BigInt power = 1;
        for (int i = 0; i < k && power <= n; ++i) power *= mid;
        if (power <= n) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

}  // namespace detail

inline bool is_prime_power(std::int64_t n) {
    if (n < 2) return false;
    for (int k = 1; (std::int64_t{1} << k) <= 2 * n; ++k) {
        const std::int64_t root = detail::floor_kth_root(n, k);
        BigInt power = 1;
        for (int i = 0; i < k; ++i) power *= root;
        if (power == n && is_prime(root)) return true;
    }
    return false;
}

enum class Route { prime_power_q, prime_power_q_plus_1, prime_2q_plus_1, general };

inline std::string route_name(Route route) {
    switch (route) {
        case Route::prime_power_q: return "prime_power_q";
        case Route::prime_power_q_plus_1: return "prime_power_q_plus_1";
        case Route::prime_2q_plus_1: return "prime_2q_plus_1";
        case Route::general: return "general";
    }
    throw std::logic_error("unreachable route");
}

inline Route route_for(std::int64_t q) {
    if (q < 2) throw std::domain_error("route_for requires q >= 2");
    if (is_prime_power(q)) return Route::prime_power_q;
    if (is_prime_power(q + 1)) return Route::prime_power_q_plus_1;
    if (is_prime(2 * q + 1)) return Route::prime_2q_plus_1;
    return Route::general;
}

// Least prime p >= lower with p = 1 (mod q).
inline std::int64_t find_prime(std::int64_t q, std::int64_t lower) {
    if (q < 1) throw std::domain_error("find_prime requires q >= 1");
    for (std::int64_t p = lower < 2 ? 2 : lower;; ++p) {
        if (p % q == 1 % q && is_prime(p)) return p;
    }
}

struct BoundCheck {
    bool holds = false;
    Rational margin = 0;  // left side minus right side, exact
};

// The inequality that makes a candidate prime big enough: an n-fold-join
// argument delivers ((n+1)(p/q - c) + 2n - 2)-connectivity, which must reach
// p(d+1) - 2 for the embedding obstruction in dimension d. Rearranged, both
// sides kept rational:
//
//     (n+1)(p/q - c) + 2n >= p(d+1).
//
// Requires n >= q(d+1), the number of points the argument consumes.
inline BoundCheck join_margin_check(std::int64_t c, std::int64_t d, std::int64_t q,
                                    std::int64_t n, std::int64_t p) {
    if (c < 0 || d < 0 || q < 1) {
        throw std::domain_error("join_margin_check requires c >= 0, d >= 0, q >= 1");
    }
    if (n < q * (d + 1)) {
        throw std::domain_error("join_margin_check requires n >= q(d+1)");
    }
    const Rational lhs = Rational(n + 1) * (Rational(p, q) - c) + 2 * n;
    const Rational rhs = Rational(p) * (d + 1);
    return BoundCheck{lhs >= rhs, lhs - rhs};
}

// Connectivity of an (n+1)-fold join of conn-connected complexes.
inline std::int64_t join_conn_bound(std::int64_t conn, std::int64_t n) {
    return (n + 1) * conn + 2 * n;
}

struct PlanReport {
    std::int64_t q = 0;
    std::int64_t d = 0;
    Route route = Route::general;
    std::int64_t p = 0;   // prime, p = 1 (mod q), passes join_margin_check
    std::int64_t a = 0;   // (p-1)/q - 1
    std::int64_t c = 0;   // constant used in the margin check (reported only)
    std::int64_t n = 0;   // q(d+1)
    bool bound_ok = false;
};

inline PlanReport plan(std::int64_t q, std::int64_t d, std::int64_t c = 4) {
    if (q < 2 || d < 1) throw std::domain_error("plan requires q >= 2 and d >= 1");
    PlanReport report;
    report.q = q;
    report.d = d;
    report.c = c;
    report.n = q * (d + 1);
    report.route = route_for(q);
    std::int64_t p = find_prime(q, q + 1);
    while (!join_margin_check(c, d, q, report.n, p).holds) {
        p = find_prime(q, p + 1);
    }
    report.p = p;
    report.a = (p - 1) / q - 1;
    report.bound_ok = true;
    // Sanity invariant of the chosen parameters, kept exact: the sparse
    // complex for (p, q) is (a-2)-connected at best, and a-2 >= p/q - c holds
    // for every p = 1 (mod q) when c >= 3.
    if (Rational(report.a - 2) < Rational(p, q) - 4) {
        throw std::logic_error("plan produced parameters violating a-2 >= p/q - 4");
    }
    return report;
}

}  // namespace qstab
