#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qstable/complex.hpp"
#include "qstable/face.hpp"

// Complexes of q-stable sets. A subset of {1..r} is q-stable when any two of
// its elements differ by at least q; a subset of Z/p is cyclically q-stable
// when any two elements are at cyclic distance at least q. The constructors
// below enumerate maximal faces directly through their gap structure instead
// of filtering all 2^n subsets, which keeps p around 30 comfortable.

namespace qstab {

/// Parameter bundle used by the command line and by block_sequence.
struct FamilyParams {
    int q = 2;
    int r = 0;   // linear families
    int p = 0;   // cyclic families
    int a = 1;   // extendability threshold
    int k = 0;   // truncation width
};

namespace detail {

/**
 * Maximal q-stable subsets of {1..r}. A q-stable set is maximal exactly when
 * its least element is at most q, consecutive gaps are at most 2q-1 (a gap of
 * 2q would admit an insertion), and its greatest element exceeds r-q.
 */
inline std::vector<Face> maximal_linear_stable(int r, int q) {
    std::vector<Face> out;
    if (r <= 0) return out;
    std::vector<int> chain;
    auto dfs = [&](auto&& self, int last) -> void {
        bool extended = false;
        const int lo = last + q;
        const int hi = std::min(last + 2 * q - 1, r);
        for (int v = lo; v <= hi; ++v) {
            chain.push_back(v);
            self(self, v);
            chain.pop_back();
            extended = true;
        }
        if (!extended && last + q > r) out.emplace_back(chain);
    };
    for (int v1 = 1; v1 <= std::min(q, r); ++v1) {
        chain.push_back(v1);
        dfs(dfs, v1);
        chain.pop_back();
    }
    return out;
}

/**
 * Maximal cyclically q-stable subsets of Z/p on vertices {1..p}. Sets are
 * anchored at their least element; all consecutive gaps, including the
 * wrap-around gap, must lie in [q, 2q-1]. When p <= 2q-1 no two vertices are
 * compatible and the maximal faces are the p singletons.
 */
inline std::vector<Face> maximal_cyclic_stable(int p, int q) {
    std::vector<Face> out;
    if (p <= 0) return out;
    if (p <= 2 * q - 1) {
        for (int v = 1; v <= p; ++v) out.push_back(Face{v});
        return out;
    }
    std::vector<int> chain;
    auto dfs = [&](auto&& self, int first, int last) -> void {
        const int wrap = first + p - last;
        if (wrap >= q && wrap <= 2 * q - 1 && chain.size() >= 2) out.emplace_back(chain);
        const int lo = last + q;
        const int hi = std::min(last + 2 * q - 1, p);
        for (int v = lo; v <= hi; ++v) {
            // Keep the wrap-around gap feasible: v may not crowd the anchor.
            if (first + p - v < q) break;
            chain.push_back(v);
            self(self, first, v);
            chain.pop_back();
        }
    };
    for (int v1 = 1; v1 <= p; ++v1) {
        chain.push_back(v1);
        dfs(dfs, v1, v1);
        chain.pop_back();
    }
    return out;
}

inline std::vector<int> range_universe(int lo, int hi) {
    std::vector<int> u;
    for (int v = lo; v <= hi; ++v) u.push_back(v);
    return u;
}

inline std::vector<Face> keep_of_size_at_least(std::vector<Face> faces, int a) {
    std::vector<Face> out;
    for (Face& f : faces) {
        if (static_cast<int>(f.size()) >= a) out.push_back(std::move(f));
    }
    return out;
}

} // namespace detail

/// L_r: the complex of all q-stable subsets of {1..r}.
inline SimplicialComplex linear_stable(int r, int q) {
    if (r < 0 || q < 1) throw std::domain_error("linear_stable requires r >= 0, q >= 1");
    std::vector<Face> maximal = detail::maximal_linear_stable(r, q);
    if (maximal.empty()) maximal.push_back(Face{});   // only the empty face
    return make_complex(detail::range_universe(1, r), std::move(maximal));
}

/**
 * L^a_r: faces of L_r that extend to a q-stable set of size at least a.
 * Equivalently, the complex generated by the maximal faces of L_r having at
 * least a elements. The result is void exactly when r <= (a-1)q.
 */
inline SimplicialComplex linear_stable_extendable(int r, int q, int a) {
    if (r < 0 || q < 1 || a < 1) {
        throw std::domain_error("linear_stable_extendable requires r >= 0, q >= 1, a >= 1");
    }
    return make_complex(detail::range_universe(1, r),
                        detail::keep_of_size_at_least(detail::maximal_linear_stable(r, q), a));
}

/// C_p: the complex of all cyclically q-stable subsets of Z/p on {1..p}.
inline SimplicialComplex cyclic_stable(int p, int q) {
    if (p < 1 || q < 1) throw std::domain_error("cyclic_stable requires p >= 1, q >= 1");
    return make_complex(detail::range_universe(1, p), detail::maximal_cyclic_stable(p, q));
}

/// C^a_p: faces of C_p extending to a cyclically q-stable set of size >= a.
inline SimplicialComplex cyclic_stable_extendable(int p, int q, int a) {
    if (p < 1 || q < 1 || a < 1) {
        throw std::domain_error("cyclic_stable_extendable requires p >= 1, q >= 1, a >= 1");
    }
    return make_complex(detail::range_universe(1, p),
                        detail::keep_of_size_at_least(detail::maximal_cyclic_stable(p, q), a));
}

/**
 * T^{a-1}_m for m = (a-2)q + k + 2: the union of a copy of L^{a-1}_{m-1}
 * shifted off vertex 1 with a copy of L^{a-1}_{m-k} that stops short of the
 * last k vertices. Informally these are the faces that skip vertex 1 or the
 * top k vertices, but the extendability witness must stay inside the same
 * window; taking induced subcomplexes of L^{a-1}_m instead would let a face
 * certify its size-(a-1) extension through the very vertices it avoids, and
 * the two readings genuinely differ once a reaches 4.
 *
 * For k <= q-2 every maximal face of L^{a-1}_m has one vertex per length-q
 * block with offsets k_1 <= ... <= k_{a-1} <= k+2, and this complex is the
 * one generated by the maximal faces with k_1 >= 2 or k_{a-1} <= 2.
 */
inline SimplicialComplex truncated_complex(int q, int a, int k) {
    if (a < 2 || k < 1 || k > q - 1) {
        throw std::domain_error("truncated_complex requires a >= 2 and 1 <= k <= q-1");
    }
    const int m = (a - 2) * q + k + 2;
    SimplicialComplex shifted = translate(linear_stable_extendable(m - 1, q, a - 1), 1);
    SimplicialComplex shortened = linear_stable_extendable(m - k, q, a - 1);
    SimplicialComplex t = complex_union(shifted, shortened);
    // The declared universe stays the full range even if vertex 1 or the top
    // vertices carry no face.
    return make_complex(detail::range_universe(1, m), t.maximal_faces());
}

/**
 * Block coordinates of a maximal face of L^{a-1}_r. Requires
 * (a-2)q+1 <= r <= (a-1)q, where {1..r} splits into a-1 blocks
 * I_j = {(j-1)q+1, ..., jq} (the last block ends at r) and every maximal
 * face has exactly one element per block. Returns k_1 <= ... <= k_{a-1}
 * with block-j element equal to (j-1)q + k_j.
 */
inline std::vector<int> block_sequence(const Face& face, const FamilyParams& params) {
    const int q = params.q, a = params.a, r = params.r;
    const int blocks = a - 1;
    if (blocks < 1) throw std::domain_error("block_sequence requires a >= 2");
    if (r < (a - 2) * q + 1 || r > (a - 1) * q) {
        throw std::domain_error("block_sequence: r outside [(a-2)q+1, (a-1)q]");
    }
    SimplicialComplex l = linear_stable_extendable(r, q, blocks);
    const auto& mx = l.maximal_faces();
    if (std::find(mx.begin(), mx.end(), face) == mx.end()) {
        throw std::domain_error("block_sequence: face " + face.to_string() +
                                " is not a maximal face of L^{a-1}_r");
    }
    if (static_cast<int>(face.size()) != blocks) {
        throw std::domain_error("block_sequence: face does not meet one element per block");
    }
    std::vector<int> ks;
    ks.reserve(face.size());
    for (int j = 0; j < blocks; ++j) {
        ks.push_back(face.vertices()[static_cast<std::size_t>(j)] - j * q);
    }
    return ks;
}

/// Outcome of a face-set identity check, with a witness on failure.
struct IdentityCheck {
    bool equal = false;
    std::optional<Face> counterexample;   // a maximal face of one side missing from the other
};

namespace detail {

inline IdentityCheck compare_face_sets(const SimplicialComplex& lhs,
                                       const SimplicialComplex& rhs) {
    IdentityCheck res;
    for (const Face& m : lhs.maximal_faces()) {
        if (!rhs.has_face(m)) {
            res.counterexample = m;
            return res;
        }
    }
    for (const Face& m : rhs.maximal_faces()) {
        if (!lhs.has_face(m)) {
            res.counterexample = m;
            return res;
        }
    }
    res.equal = true;
    return res;
}

} // namespace detail

/**
 * Checks the covering identity C^a_{r+q-1} = union over j in {0..q-1} of
 * (L^a_r + j) as face sets, with r = p - q + 1 so the cyclic side lives on
 * {1..p}. Returns a witness face from the symmetric difference on failure.
 */
inline IdentityCheck verify_decomposition(int p, int q, int a) {
    const int r = p - q + 1;
    if (r < 0) throw std::domain_error("verify_decomposition requires p >= q - 1");
    SimplicialComplex cyclic = cyclic_stable_extendable(p, q, a);
    SimplicialComplex cover = translate(linear_stable_extendable(r, q, a), 0);
    for (int j = 1; j <= q - 1; ++j) {
        cover = complex_union(cover, translate(linear_stable_extendable(r, q, a), j));
    }
    return detail::compare_face_sets(cyclic, cover);
}

/// Result of comparing L_r with its extendable subcomplex L^a_r.
struct ExtendabilityCheck {
    int a = 0;
    bool equal = false;
    std::optional<Face> counterexample;   // maximal face with fewer than a elements
};

/**
 * Checks L_r = L^a_r for a = floor(r / (2q-1)): every maximal q-stable
 * subset of {1..r} must have at least a elements, because a maximal face
 * cannot leave a gap of length 2q-1 anywhere.
 */
inline ExtendabilityCheck verify_L_equals_La(int r, int q) {
    ExtendabilityCheck res;
    res.a = r / (2 * q - 1);
    res.equal = true;
    for (const Face& m : detail::maximal_linear_stable(r, q)) {
        if (static_cast<int>(m.size()) < res.a) {
            res.equal = false;
            res.counterexample = m;
            break;
        }
    }
    return res;
}

/// The union complex of the connectivity claim at r = aq+2, its
/// intersection, and the distinguished face present only at k = q-1.
struct Claim54Instance {
    int q = 0, a = 0, k = 0, r = 0;
    SimplicialComplex left;            // L^a_{r-1}
    SimplicialComplex right;           // L^{a-1}_{r+k-2q} + (q-1)
    SimplicialComplex union_complex;
    SimplicialComplex intersection;
    std::optional<Face> sigma_star;    // {q, 2q, ..., aq} when k = q-1
};

inline Claim54Instance claim54_complex(int q, int a, int k) {
    if (a < 2 || k < 1 || k > q - 1) {
        throw std::domain_error("claim54_complex requires a >= 2 and 1 <= k <= q-1");
    }
    Claim54Instance inst;
    inst.q = q;
    inst.a = a;
    inst.k = k;
    inst.r = a * q + 2;
    inst.left = linear_stable_extendable(inst.r - 1, q, a);
    inst.right = translate(linear_stable_extendable(inst.r + k - 2 * q, q, a - 1), q - 1);
    inst.union_complex = complex_union(inst.left, inst.right);
    inst.intersection = complex_intersection(inst.left, inst.right);
    if (k == q - 1) {
        std::vector<int> vs;
        for (int j = 1; j <= a; ++j) vs.push_back(j * q);
        inst.sigma_star = Face(std::move(vs));
    }
    return inst;
}

} // namespace qstab
