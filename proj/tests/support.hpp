#pragma once

#include "qstable/complex.hpp"
#include "qstable/face.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

// Brute-force reference implementations used as oracles in the tests. These
// deliberately take the dumbest possible route (powerset scans, pairwise
// checks) so that agreement with the library is meaningful evidence.

namespace oracle {

inline bool linear_stable(const std::vector<int>& verts, int q) {
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (std::abs(verts[i] - verts[j]) < q) return false;
        }
    }
    return true;
}

inline bool cyclic_stable(const std::vector<int>& verts, int p, int q) {
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            const int d = std::abs(verts[i] - verts[j]);
            if (std::min(d, p - d) < q) return false;
        }
    }
    return true;
}

/// All subsets of [1..n] satisfying the given predicate, as sorted vertex lists.
template <typename Pred>
inline std::vector<std::vector<int>> stable_subsets(int n, Pred&& pred) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> verts;
        for (int v = 1; v <= n; ++v) {
            if (mask & (1u << (v - 1))) verts.push_back(v);
        }
        if (pred(verts)) out.push_back(std::move(verts));
    }
    return out;
}

/// Inclusion-maximal members of a subset family.
inline std::vector<std::vector<int>> maximal_members(std::vector<std::vector<int>> family) {
    std::vector<std::vector<int>> out;
    for (const auto& s : family) {
        bool dominated = false;
        for (const auto& t : family) {
            if (s == t || t.size() <= s.size()) continue;
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Every face of a complex (including the empty face), found by powerset scan
/// over the universe. Only usable for universes of at most ~20 vertices.
inline std::set<std::vector<int>> all_faces(const qstab::SimplicialComplex& k) {
    std::set<std::vector<int>> out;
    const auto& uni = k.universe();
    for (std::uint32_t mask = 0; mask < (1u << uni.size()); ++mask) {
        std::vector<int> verts;
        for (std::size_t i = 0; i < uni.size(); ++i) {
            if (mask & (1u << i)) verts.push_back(uni[i]);
        }
        if (k.has_face(qstab::Face(verts))) out.insert(std::move(verts));
    }
    return out;
}

inline std::vector<std::vector<int>> maximal_as_lists(const qstab::SimplicialComplex& k) {
    std::vector<std::vector<int>> out;
    for (const auto& f : k.maximal_faces()) out.push_back(f.vertices());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oracle
