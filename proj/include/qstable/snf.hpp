#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "qstable/rational.hpp"

// Exact rank and Smith normal form of sparse integer matrices.
//
// The workhorse is a sparse elimination restricted to pivots of value +-1,
// chosen greedily from the sparsest rows (a Markowitz-style heuristic).
// Every unit pivot contributes an invariant factor 1, so boundary matrices
// of simplicial complexes usually reduce completely without coefficient
// growth. Whatever survives without a unit entry is handed to a dense Smith
// routine over arbitrary-precision integers; for the matrices handled here
// that residue is tiny (it carries exactly the torsion).

namespace qstab {

/// Signals that 64-bit elimination hit an overflow; callers retry with BigInt.
class ReductionOverflow : public std::overflow_error {
public:
    ReductionOverflow() : std::overflow_error("integer elimination overflow") {}
};

struct Triplet {
    int row = 0;
    int col = 0;
    long long value = 0;
};

struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Triplet> entries;   // duplicates are summed on load
};

struct SmithSummary {
    long long rank = 0;
    std::vector<BigInt> torsion;    // invariant factors > 1, in divisibility order
};

namespace detail {

template <typename Int>
inline Int checked_mul(const Int& a, const Int& b) {
    if constexpr (std::is_same_v<Int, long long>) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw ReductionOverflow();
        return r;
    } else {
        return a * b;
    }
}

template <typename Int>
inline Int checked_sub(const Int& a, const Int& b) {
    if constexpr (std::is_same_v<Int, long long>) {
        long long r;
        if (__builtin_sub_overflow(a, b, &r)) throw ReductionOverflow();
        return r;
    } else {
        return a - b;
    }
}

inline BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

/// Dense Smith normal form; returns the full diagonal in divisibility order.
inline std::vector<BigInt> dense_smith(std::vector<std::vector<BigInt>> m) {
    std::vector<BigInt> diag;
    const std::size_t R = m.size();
    const std::size_t C = R ? m[0].size() : 0;
    std::size_t t = 0;
    while (t < R && t < C) {
        // Locate a nonzero entry of least magnitude in the trailing block.
        std::size_t pi = t, pj = t;
        bool found = false;
        BigInt best = 0;
        for (std::size_t i = t; i < R; ++i) {
            for (std::size_t j = t; j < C; ++j) {
                if (m[i][j] == 0) continue;
                BigInt a = big_abs(m[i][j]);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (!found) break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < R; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (m[i][t] == 0) continue;
                BigInt qo = m[i][t] / m[t][t];
                for (std::size_t j = t; j < C; ++j) m[i][j] -= qo * m[t][j];
                if (m[i][t] != 0) {   // remainder smaller than pivot; swap up
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (m[t][j] == 0) continue;
                BigInt qo = m[t][j] / m[t][t];
                for (std::size_t i = t; i < R; ++i) m[i][j] -= qo * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < R; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
            if (clean) {
                // The pivot must divide the rest of the block; if it does
                // not, fold the offending row in and reduce again.
                for (std::size_t i = t + 1; i < R && clean; ++i) {
                    for (std::size_t j = t + 1; j < C && clean; ++j) {
                        if (m[i][j] % m[t][t] != 0) {
                            for (std::size_t jj = t; jj < C; ++jj) m[t][jj] += m[i][jj];
                            clean = false;
                        }
                    }
                }
            }
        }
        diag.push_back(big_abs(m[t][t]));
        ++t;
    }
    return diag;
}

/**
 * Sparse elimination over the integers restricted to unit pivots, followed
 * by dense Smith normal form of the residue. Int is the working entry type;
 * the 64-bit instantiation throws ReductionOverflow on wraparound.
 */
template <typename Int>
inline SmithSummary reduce_unit_pivot(const SparseIntMatrix& matrix) {
    const int nrows = matrix.rows;
    std::vector<std::map<int, Int>> row(static_cast<std::size_t>(nrows));
    std::vector<std::set<int>> col_rows(static_cast<std::size_t>(matrix.cols));
    for (const Triplet& e : matrix.entries) {
        Int& slot = row[static_cast<std::size_t>(e.row)][e.col];
        slot += static_cast<Int>(e.value);
        if (slot == 0) row[static_cast<std::size_t>(e.row)].erase(e.col);
    }
    for (int r = 0; r < nrows; ++r) {
        for (const auto& [c, v] : row[static_cast<std::size_t>(r)]) {
            col_rows[static_cast<std::size_t>(c)].insert(r);
        }
    }

    std::vector<char> row_active(static_cast<std::size_t>(nrows), 1);
    using QEntry = std::pair<std::size_t, int>;   // (row nnz, row id), lazily updated
    std::priority_queue<QEntry, std::vector<QEntry>, std::greater<QEntry>> queue;
    for (int r = 0; r < nrows; ++r) {
        if (!row[static_cast<std::size_t>(r)].empty()) queue.push({row[static_cast<std::size_t>(r)].size(), r});
    }

    long long unit_pivots = 0;
    while (!queue.empty()) {
        auto [nnz, r] = queue.top();
        queue.pop();
        auto& rr = row[static_cast<std::size_t>(r)];
        if (!row_active[static_cast<std::size_t>(r)] || rr.empty() || rr.size() != nnz) continue;

        // Unit entry whose column is sparsest.
        int pivot_col = -1;
        Int pivot_val = 0;
        std::size_t best_col_nnz = 0;
        for (const auto& [c, v] : rr) {
            if (v != 1 && v != -1) continue;
            const std::size_t cn = col_rows[static_cast<std::size_t>(c)].size();
            if (pivot_col < 0 || cn < best_col_nnz) {
                pivot_col = c;
                pivot_val = v;
                best_col_nnz = cn;
            }
        }
        if (pivot_col < 0) continue;   // re-queued automatically if touched later

        ++unit_pivots;
        row_active[static_cast<std::size_t>(r)] = 0;

        // Clear the pivot column from every other row.
        std::vector<int> victims(col_rows[static_cast<std::size_t>(pivot_col)].begin(),
                                 col_rows[static_cast<std::size_t>(pivot_col)].end());
        for (int r2 : victims) {
            if (r2 == r) continue;
            auto& target = row[static_cast<std::size_t>(r2)];
            const Int coef = checked_mul(target.at(pivot_col), pivot_val);   // pivot_val is its own inverse
            for (const auto& [c, v] : rr) {
                auto it = target.find(c);
                if (it == target.end()) {
                    target.emplace(c, checked_sub(Int(0), checked_mul(coef, v)));
                    col_rows[static_cast<std::size_t>(c)].insert(r2);
                } else {
                    it->second = checked_sub(it->second, checked_mul(coef, v));
                    if (it->second == 0) {
                        target.erase(it);
                        col_rows[static_cast<std::size_t>(c)].erase(r2);
                    }
                }
            }
            if (!target.empty()) queue.push({target.size(), r2});
        }
        // Retire the pivot row and column.
        for (const auto& [c, v] : rr) col_rows[static_cast<std::size_t>(c)].erase(r);
        rr.clear();
    }

    // Collect the residue (no unit entries anywhere) into a dense block.
    std::vector<int> live_rows;
    std::set<int> live_col_set;
    for (int r = 0; r < nrows; ++r) {
        if (row_active[static_cast<std::size_t>(r)] && !row[static_cast<std::size_t>(r)].empty()) {
            live_rows.push_back(r);
            for (const auto& [c, v] : row[static_cast<std::size_t>(r)]) live_col_set.insert(c);
        }
    }
    SmithSummary out;
    out.rank = unit_pivots;
    if (!live_rows.empty()) {
        std::map<int, std::size_t> col_pos;
        for (int c : live_col_set) col_pos.emplace(c, col_pos.size());
        std::vector<std::vector<BigInt>> dense(
            live_rows.size(), std::vector<BigInt>(col_pos.size(), BigInt(0)));
        for (std::size_t i = 0; i < live_rows.size(); ++i) {
            for (const auto& [c, v] : row[static_cast<std::size_t>(live_rows[i])]) {
                dense[i][col_pos[c]] = BigInt(v);
            }
        }
        for (const BigInt& d : dense_smith(std::move(dense))) {
            out.rank += 1;
            if (d != 1) out.torsion.push_back(d);
        }
    }
    return out;
}

} // namespace detail

/// Rank and invariant factors over the integers.
inline SmithSummary smith_summary(const SparseIntMatrix& matrix) {
    try {
        return detail::reduce_unit_pivot<long long>(matrix);
    } catch (const ReductionOverflow&) {
        return detail::reduce_unit_pivot<BigInt>(matrix);
    }
}

/// Rank of the matrix over the field with p elements (p prime).
inline long long rank_mod_p(const SparseIntMatrix& matrix, long long p) {
    if (p < 2) throw std::domain_error("rank_mod_p needs a prime modulus");
    auto inverse = [p](long long a) {
        // Fermat inverse; p is prime and a is nonzero mod p.
        long long result = 1, base = a % p, e = p - 2;
        while (e) {
            if (e & 1) result = static_cast<long long>(
                static_cast<__int128>(result) * base % p);
            base = static_cast<long long>(static_cast<__int128>(base) * base % p);
            e >>= 1;
        }
        return result;
    };

    std::vector<std::map<int, long long>> row(static_cast<std::size_t>(matrix.rows));
    for (const Triplet& e : matrix.entries) {
        long long v = ((e.value % p) + p) % p;
        auto& rr = row[static_cast<std::size_t>(e.row)];
        auto [it, inserted] = rr.emplace(e.col, v);
        if (!inserted) {
            it->second = (it->second + v) % p;
            if (it->second == 0) rr.erase(it);
        } else if (it->second == 0) {
            rr.erase(it);
        }
    }
    std::vector<std::set<int>> col_rows(static_cast<std::size_t>(matrix.cols));
    for (int r = 0; r < matrix.rows; ++r) {
        for (const auto& [c, v] : row[static_cast<std::size_t>(r)]) {
            col_rows[static_cast<std::size_t>(c)].insert(r);
        }
    }

    std::vector<char> active(static_cast<std::size_t>(matrix.rows), 1);
    using QEntry = std::pair<std::size_t, int>;
    std::priority_queue<QEntry, std::vector<QEntry>, std::greater<QEntry>> queue;
    for (int r = 0; r < matrix.rows; ++r) {
        if (!row[static_cast<std::size_t>(r)].empty()) queue.push({row[static_cast<std::size_t>(r)].size(), r});
    }
    long long rank = 0;
    while (!queue.empty()) {
        auto [nnz, r] = queue.top();
        queue.pop();
        auto& rr = row[static_cast<std::size_t>(r)];
        if (!active[static_cast<std::size_t>(r)] || rr.empty() || rr.size() != nnz) continue;

        int pivot_col = rr.begin()->first;
        std::size_t best = col_rows[static_cast<std::size_t>(pivot_col)].size();
        for (const auto& [c, v] : rr) {
            const std::size_t cn = col_rows[static_cast<std::size_t>(c)].size();
            if (cn < best) {
                best = cn;
                pivot_col = c;
            }
        }
        const long long inv = inverse(rr.at(pivot_col));

        ++rank;
        active[static_cast<std::size_t>(r)] = 0;
        std::vector<int> victims(col_rows[static_cast<std::size_t>(pivot_col)].begin(),
                                 col_rows[static_cast<std::size_t>(pivot_col)].end());
        for (int r2 : victims) {
            if (r2 == r) continue;
            auto& target = row[static_cast<std::size_t>(r2)];
            const long long coef = static_cast<long long>(
                static_cast<__int128>(target.at(pivot_col)) * inv % p);
            for (const auto& [c, v] : rr) {
                const long long delta = static_cast<long long>(
                    static_cast<__int128>(coef) * v % p);
                if (delta == 0) continue;
                auto it = target.find(c);
                if (it == target.end()) {
                    target.emplace(c, p - delta);
                    col_rows[static_cast<std::size_t>(c)].insert(r2);
                } else {
                    it->second = ((it->second - delta) % p + p) % p;
                    if (it->second == 0) {
                        target.erase(it);
                        col_rows[static_cast<std::size_t>(c)].erase(r2);
                    }
                }
            }
            if (!target.empty()) queue.push({target.size(), r2});
        }
        for (const auto& [c, v] : rr) col_rows[static_cast<std::size_t>(c)].erase(r);
        rr.clear();
    }
    return rank;
}

} // namespace qstab
