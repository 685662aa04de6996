#pragma once

#include "qstable/chain.hpp"
#include "qstable/complex.hpp"
#include "qstable/snf.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Reduced homology of simplicial complexes, plus the consistency checks the
// rest of the project leans on: connectivity verdicts, the join formula, and
// Euler / universal-coefficient cross-validation.

namespace qstab {

struct HomologyGroup {
    long long free_rank = 0;
    std::vector<BigInt> torsion;   // invariant factors > 1, divisibility order

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
};

/// Reduced integral homology in degrees 0..top_dim.
struct HomologyResult {
    int top_dim = -1;
    std::vector<HomologyGroup> groups;
    std::vector<std::size_t> face_counts;   // faces per dimension 0..top_dim
    bool empty_face_only = false;           // complex was {empty face}: H~ in degree -1 is Z

    const HomologyGroup& group(int d) const { return groups.at(static_cast<std::size_t>(d)); }
};

/// Reduced Betti numbers over a field, degrees 0..top_dim.
struct BettiTable {
    std::string field;   // "Q" or "GF(p)"
    int top_dim = -1;
    std::vector<long long> reduced;

    long long betti(int d) const {
        if (d < 0 || d > top_dim) return 0;
        return reduced.at(static_cast<std::size_t>(d));
    }
};

inline HomologyResult integral_homology(const SimplicialComplex& complex) {
    HomologyResult out;
    ChainComplex chain(complex);
    out.top_dim = chain.top_dim();
    out.empty_face_only = (out.top_dim == -1);
    if (out.empty_face_only) return out;

    std::vector<SmithSummary> smith;
    smith.reserve(static_cast<std::size_t>(out.top_dim + 1));
    for (int d = 0; d <= out.top_dim; ++d) {
        smith.push_back(smith_summary(chain.boundary(d)));
        out.face_counts.push_back(chain.basis_size(d));
    }
    for (int d = 0; d <= out.top_dim; ++d) {
        HomologyGroup g;
        const long long cycles = static_cast<long long>(chain.basis_size(d)) -
                                 smith[static_cast<std::size_t>(d)].rank;
        const long long image = (d < out.top_dim) ? smith[static_cast<std::size_t>(d + 1)].rank : 0;
        g.free_rank = cycles - image;
        if (d < out.top_dim) g.torsion = smith[static_cast<std::size_t>(d + 1)].torsion;
        out.groups.push_back(std::move(g));
    }
    return out;
}

inline BettiTable betti_rational(const SimplicialComplex& complex) {
    const HomologyResult h = integral_homology(complex);
    BettiTable out;
    out.field = "Q";
    out.top_dim = h.top_dim;
    for (const HomologyGroup& g : h.groups) out.reduced.push_back(g.free_rank);
    return out;
}

inline BettiTable betti_mod_p(const SimplicialComplex& complex, long long p) {
    ChainComplex chain(complex);
    BettiTable out;
    out.field = "GF(" + std::to_string(p) + ")";
    out.top_dim = chain.top_dim();
    std::vector<long long> ranks;
    for (int d = 0; d <= out.top_dim; ++d) ranks.push_back(rank_mod_p(chain.boundary(d), p));
    for (int d = 0; d <= out.top_dim; ++d) {
        const long long image = (d < out.top_dim) ? ranks[static_cast<std::size_t>(d + 1)] : 0;
        out.reduced.push_back(static_cast<long long>(chain.basis_size(d)) -
                              ranks[static_cast<std::size_t>(d)] - image);
    }
    return out;
}

/**
 * Homological connectivity: the largest n such that reduced integral
 * homology vanishes in every degree <= n. Disconnected complexes get -1.
 * When every degree through the top dimension vanishes there is no finite
 * answer from homology alone; value is then the top dimension and
 * contractible_like is set.
 */
struct ConnectivityVerdict {
    int value = -1;
    bool contractible_like = false;
    // Verdicts are computed from integral homology. They certify homotopical
    // connectivity statements only in the degrees where vanishing homology is
    // the obstruction; the flag keeps that caveat attached to the data.
    bool homological_evidence = true;

    bool at_least(int threshold) const { return contractible_like || value >= threshold; }

    std::string to_string() const {
        if (contractible_like) return "acyclic";
        return std::to_string(value);
    }
};

inline ConnectivityVerdict connectivity_verdict(const HomologyResult& h) {
    if (h.empty_face_only) {
        throw std::domain_error("connectivity of the empty-face complex is undefined");
    }
    ConnectivityVerdict v;
    v.value = h.top_dim;
    v.contractible_like = true;
    for (int d = 0; d <= h.top_dim; ++d) {
        if (!h.group(d).trivial()) {
            v.value = d - 1;
            v.contractible_like = false;
            break;
        }
    }
    return v;
}

inline ConnectivityVerdict connectivity_verdict(const SimplicialComplex& complex) {
    return connectivity_verdict(integral_homology(complex));
}

/**
 * Checks conn(K * L) = conn(K) + conn(L) + 2 at the level of homological
 * connectivity. If either factor is acyclic the sum is meaningless; the
 * check then degrades to "the join is acyclic too".
 */
struct JoinFormulaCheck {
    ConnectivityVerdict left;
    ConnectivityVerdict right;
    ConnectivityVerdict joined;
    bool skipped = false;   // a factor was acyclic
    bool pass = false;
};

inline JoinFormulaCheck verify_join_formula(const SimplicialComplex& k,
                                            const SimplicialComplex& l) {
    JoinFormulaCheck out;
    out.left = connectivity_verdict(k);
    out.right = connectivity_verdict(l);
    out.joined = connectivity_verdict(join(k, l));
    if (out.left.contractible_like || out.right.contractible_like) {
        out.skipped = true;
        out.pass = out.joined.contractible_like;
        return out;
    }
    out.pass = !out.joined.contractible_like &&
               out.joined.value == out.left.value + out.right.value + 2;
    return out;
}

/**
 * Rational Betti numbers of a join against the convolution of the factors:
 * b~_n(K*L) = sum over i+j = n-1 of b~_i(K) b~_j(L). Exact when both factor
 * homologies are torsion-free, which is how it is used in tests.
 */
inline bool join_betti_matches_product(const BettiTable& a, const BettiTable& b,
                                       const BettiTable& ab) {
    for (int n = 0; n <= ab.top_dim + 1; ++n) {
        long long expect = 0;
        for (int i = -1; i <= n; ++i) {
            const int j = n - 1 - i;
            const long long left = (i == -1) ? 0 : a.betti(i);
            const long long right = (j == -1) ? 0 : b.betti(j);
            expect += left * right;
        }
        if (ab.betti(n) != expect) return false;
    }
    return true;
}

/// Euler characteristic and universal-coefficient consistency for one complex.
struct HomologyCrossCheck {
    bool euler_ok = false;
    bool uct_ok = false;
    std::string detail;   // human-readable reason on failure

    bool pass() const { return euler_ok && uct_ok; }
};

namespace detail {

inline std::vector<long long> small_prime_factors(BigInt v) {
    std::vector<long long> primes;
    for (long long p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
        if (v % p == 0) {
            primes.push_back(p);
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) primes.push_back(static_cast<long long>(v));
    return primes;
}

} // namespace detail

inline HomologyCrossCheck verify_cross_checks(const SimplicialComplex& complex) {
    HomologyCrossCheck out;
    const HomologyResult h = integral_homology(complex);
    if (h.empty_face_only) {
        out.euler_ok = true;
        out.uct_ok = true;
        return out;
    }

    // Alternating sums of face counts and of Betti numbers agree; both
    // include the empty face / degree -1 contribution of -1 and 0.
    long long chi_faces = -1;
    long long chi_betti = 0;
    for (int d = 0; d <= h.top_dim; ++d) {
        const long long sign = (d % 2 == 0) ? 1 : -1;
        chi_faces += sign * static_cast<long long>(h.face_counts[static_cast<std::size_t>(d)]);
        chi_betti += sign * h.group(d).free_rank;
    }
    out.euler_ok = (chi_faces == chi_betti);
    if (!out.euler_ok) {
        std::ostringstream os;
        os << "euler mismatch: faces give " << chi_faces << ", betti give " << chi_betti;
        out.detail = os.str();
    }

    // Universal coefficients: over GF(p) each torsion factor divisible by p
    // shows up once in its own degree and once one degree higher.
    std::vector<long long> primes = {2, 3};
    for (const HomologyGroup& g : h.groups) {
        for (const BigInt& t : g.torsion) {
            for (long long p : detail::small_prime_factors(t)) {
                bool known = false;
                for (long long q : primes) known = known || (q == p);
                if (!known) primes.push_back(p);
            }
        }
    }
    out.uct_ok = true;
    for (long long p : primes) {
        const BettiTable mod_p = betti_mod_p(complex, p);
        for (int d = 0; d <= h.top_dim; ++d) {
            auto torsion_count = [&](int degree) {
                if (degree < 0 || degree > h.top_dim) return 0LL;
                long long n = 0;
                for (const BigInt& t : h.group(degree).torsion) {
                    if (t % p == 0) ++n;
                }
                return n;
            };
            const long long expect = h.group(d).free_rank + torsion_count(d) + torsion_count(d - 1);
            if (mod_p.betti(d) != expect) {
                out.uct_ok = false;
                std::ostringstream os;
                os << "universal coefficient mismatch at degree " << d << " mod " << p
                   << ": got " << mod_p.betti(d) << ", expected " << expect;
                out.detail = os.str();
            }
        }
    }
    return out;
}

/// Short textual form of a homology table, e.g. "0:Z 1:Z_2 2:0".
inline std::string homology_to_string(const HomologyResult& h) {
    std::ostringstream os;
    for (int d = 0; d <= h.top_dim; ++d) {
        if (d) os << ' ';
        os << d << ':';
        const HomologyGroup& g = h.group(d);
        if (g.trivial()) {
            os << '0';
            continue;
        }
        bool first = true;
        if (g.free_rank == 1) {
            os << 'Z';
            first = false;
        } else if (g.free_rank > 1) {
            os << "Z^" << g.free_rank;
            first = false;
        }
        for (const BigInt& t : g.torsion) {
            if (!first) os << '+';
            os << "Z_" << t;
            first = false;
        }
    }
    return os.str();
}

} // namespace qstab
