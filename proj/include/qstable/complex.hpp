#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qstable/face.hpp"

namespace qstab {

/**
 * A finite abstract simplicial complex, stored as a declared vertex universe
 * plus the antichain of maximal faces (closure under subsets is implicit).
 *
 * Two degenerate values are kept distinct on purpose:
 *   - the void complex: no faces at all (maximal face list is empty);
 *   - the empty-face complex: exactly one maximal face, the empty face.
 * Connectivity statements branch on "empty", which means the void complex.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    const std::vector<int>& universe() const { return universe_; }
    const std::vector<Face>& maximal_faces() const { return maximal_; }

    /// True when the complex has no faces at all.
    bool is_void() const { return maximal_.empty(); }

    /// True when the only face is the empty face.
    bool is_empty_face_only() const {
        return maximal_.size() == 1 && maximal_[0].empty();
    }

    /// Dimension of the complex; -1 for the empty-face complex.
    /// Calling this on the void complex is a domain error.
    int dim() const {
        if (is_void()) throw std::domain_error("void complex has no dimension");
        int d = -1;
        for (const Face& f : maximal_) d = std::max(d, f.dim());
        return d;
    }

    bool has_face(const Face& f) const {
        for (const Face& m : maximal_) {
            if (f.subset_of(m)) return true;
        }
        return false;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.universe_ == b.universe_ && a.maximal_ == b.maximal_;
    }
    friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) {
        return !(a == b);
    }

    friend SimplicialComplex make_complex(std::vector<int> universe,
                                          std::vector<Face> faces);

private:
    std::vector<int> universe_;   // sorted, unique
    std::vector<Face> maximal_;   // antichain, sorted lexicographically
};

/**
 * Builds the complex whose faces are all subsets of the given candidates.
 * Candidates may overlap or repeat; the result stores the antichain of
 * maximal ones in lexicographic order. A face with a vertex outside the
 * universe, or a duplicate vertex inside one face (caught by Face itself),
 * is malformed input.
 */
inline SimplicialComplex make_complex(std::vector<int> universe,
                                      std::vector<Face> faces) {
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

    for (const Face& f : faces) {
        for (int v : f.vertices()) {
            if (!std::binary_search(universe.begin(), universe.end(), v)) {
                throw std::invalid_argument(
                    "face vertex " + std::to_string(v) + " is not in the universe");
            }
        }
    }

    // Antichain reduction: drop any candidate contained in another.
    std::sort(faces.begin(), faces.end(),
              [](const Face& a, const Face& b) { return a.size() > b.size(); });
    std::vector<Face> maximal;
    for (const Face& f : faces) {
        bool dominated = false;
        for (const Face& m : maximal) {
            if (m.size() < f.size()) break;   // kept list is size-sorted
            if (f == m || f.subset_of(m)) { dominated = true; break; }
        }
        if (!dominated) {
            auto pos = std::lower_bound(
                maximal.begin(), maximal.end(), f,
                [](const Face& a, const Face& b) { return a.size() > b.size(); });
            maximal.insert(pos, f);
        }
    }
    std::sort(maximal.begin(), maximal.end());

    SimplicialComplex k;
    k.universe_ = std::move(universe);
    k.maximal_ = std::move(maximal);
    return k;
}

/// True when K and L have the same faces, ignoring the declared universes.
inline bool same_faces(const SimplicialComplex& k, const SimplicialComplex& l) {
    return k.maximal_faces() == l.maximal_faces();
}

/**
 * All faces of dimension exactly k, sorted lexicographically.
 * k = -1 yields the empty face when the complex is nonempty; any k below
 * that, or above the dimension, yields an empty list.
 */
inline std::vector<Face> faces_of_dim(const SimplicialComplex& k, int d) {
    if (d < -1) return {};
    if (d == -1) {
        if (k.is_void()) return {};
        return {Face{}};
    }
    const std::size_t want = static_cast<std::size_t>(d) + 1;
    std::unordered_set<Face, FaceHash> seen;
    std::vector<int> idx;
    for (const Face& m : k.maximal_faces()) {
        const auto& vs = m.vertices();
        if (vs.size() < want) continue;
        // Enumerate all `want`-subsets of this maximal face.
        idx.resize(want);
        for (std::size_t i = 0; i < want; ++i) idx[i] = static_cast<int>(i);
        while (true) {
            std::vector<int> sub(want);
            for (std::size_t i = 0; i < want; ++i) sub[i] = vs[static_cast<std::size_t>(idx[i])];
            seen.insert(Face(std::move(sub)));
            // next combination
            int i = static_cast<int>(want) - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                                 static_cast<int>(vs.size() - want + static_cast<std::size_t>(i)))
                --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < want; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    std::vector<Face> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of faces in each dimension 0..dim; empty for the void and
/// empty-face complexes.
inline std::vector<std::size_t> f_vector(const SimplicialComplex& k) {
    std::vector<std::size_t> f;
    if (k.is_void() || k.is_empty_face_only()) return f;
    const int d = k.dim();
    for (int i = 0; i <= d; ++i) f.push_back(faces_of_dim(k, i).size());
    return f;
}

/// Total face count including the empty face.
inline std::size_t count_all_faces(const SimplicialComplex& k) {
    if (k.is_void()) return 0;
    std::size_t n = 1;
    for (std::size_t c : f_vector(k)) n += c;
    return n;
}

namespace detail {

/// Deterministic flattening of a (component, vertex) tag pair used by joins:
/// encode(c, v) = c*stride + v, with stride one past the largest input
/// vertex id, so distinct pairs always map to distinct ids.
inline int join_encode(int component, int v, int stride) {
    return component * stride + v;
}

inline int join_stride(const std::vector<const SimplicialComplex*>& parts) {
    int mx = 0;
    for (const auto* k : parts) {
        for (int v : k->universe()) mx = std::max(mx, v);
    }
    return mx + 1;
}

inline Face tag_face(const Face& f, int component, int stride) {
    std::vector<int> out;
    out.reserve(f.size());
    for (int v : f.vertices()) out.push_back(join_encode(component, v, stride));
    return Face(std::move(out));
}

} // namespace detail

/**
 * Join of two complexes: faces are sigma x {1} union tau x {2} over faces
 * sigma of K and tau of L, with the tag pairs flattened to plain ints by
 * detail::join_encode. Joining with the empty-face complex returns the other
 * complex retagged; joining with the void complex is void.
 */
inline SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
    const int stride = detail::join_stride({&k, &l});
    std::vector<int> universe;
    for (int v : k.universe()) universe.push_back(detail::join_encode(1, v, stride));
    for (int v : l.universe()) universe.push_back(detail::join_encode(2, v, stride));
    std::vector<Face> faces;
    for (const Face& a : k.maximal_faces()) {
        for (const Face& b : l.maximal_faces()) {
            faces.push_back(detail::tag_face(a, 1, stride)
                                .united(detail::tag_face(b, 2, stride)));
        }
    }
    return make_complex(std::move(universe), std::move(faces));
}

/**
 * n-fold join of K with itself, components tagged 1..n with one shared
 * stride. n must be positive; n = 1 returns K retagged with component 1.
 */
inline SimplicialComplex n_fold_join(const SimplicialComplex& k, int n) {
    if (n <= 0) throw std::domain_error("n_fold_join requires n >= 1");
    const int stride = detail::join_stride({&k});
    std::vector<int> universe;
    for (int c = 1; c <= n; ++c) {
        for (int v : k.universe()) universe.push_back(detail::join_encode(c, v, stride));
    }
    std::vector<Face> faces;
    if (!k.maximal_faces().empty()) {
        faces.push_back(Face{});
        for (int c = 1; c <= n; ++c) {
            std::vector<Face> next;
            next.reserve(faces.size() * k.maximal_faces().size());
            for (const Face& partial : faces) {
                for (const Face& m : k.maximal_faces()) {
                    next.push_back(partial.united(detail::tag_face(m, c, stride)));
                }
            }
            faces = std::move(next);
        }
    }
    return make_complex(std::move(universe), std::move(faces));
}

/// Shift every vertex id by s (an exact inverse of translating by -s).
inline SimplicialComplex translate(const SimplicialComplex& k, int s) {
    std::vector<int> universe;
    universe.reserve(k.universe().size());
    for (int v : k.universe()) universe.push_back(v + s);
    std::vector<Face> faces;
    faces.reserve(k.maximal_faces().size());
    for (const Face& m : k.maximal_faces()) faces.push_back(m.translated(s));
    return make_complex(std::move(universe), std::move(faces));
}

/**
 * Relabel vertices through an explicit map. Every universe vertex must be
 * mapped, and the map must be injective on the universe; anything else is
 * a domain error. The f-vector is preserved exactly.
 */
inline SimplicialComplex relabel(const SimplicialComplex& k,
                                 const std::map<int, int>& vertex_map) {
    std::set<int> images;
    std::vector<int> universe;
    for (int v : k.universe()) {
        auto it = vertex_map.find(v);
        if (it == vertex_map.end()) {
            throw std::domain_error("relabel map misses vertex " + std::to_string(v));
        }
        if (!images.insert(it->second).second) {
            throw std::domain_error("relabel map is not injective on the universe");
        }
        universe.push_back(it->second);
    }
    std::vector<Face> faces;
    faces.reserve(k.maximal_faces().size());
    for (const Face& m : k.maximal_faces()) {
        std::vector<int> vs;
        vs.reserve(m.size());
        for (int v : m.vertices()) vs.push_back(vertex_map.at(v));
        faces.emplace_back(std::move(vs));
    }
    return make_complex(std::move(universe), std::move(faces));
}

/// Union: faces of either complex; universes merge.
inline SimplicialComplex complex_union(const SimplicialComplex& k,
                                       const SimplicialComplex& l) {
    std::vector<int> universe = k.universe();
    universe.insert(universe.end(), l.universe().begin(), l.universe().end());
    std::vector<Face> faces = k.maximal_faces();
    faces.insert(faces.end(), l.maximal_faces().begin(), l.maximal_faces().end());
    return make_complex(std::move(universe), std::move(faces));
}

/**
 * Intersection: a face belongs to it exactly when it is a face of both
 * complexes, i.e. lies under a maximal face of each. The maximal faces of
 * the result are the maximal elements among pairwise intersections.
 */
inline SimplicialComplex complex_intersection(const SimplicialComplex& k,
                                              const SimplicialComplex& l) {
    std::vector<int> universe;
    std::set_intersection(k.universe().begin(), k.universe().end(),
                          l.universe().begin(), l.universe().end(),
                          std::back_inserter(universe));
    std::vector<Face> faces;
    for (const Face& a : k.maximal_faces()) {
        for (const Face& b : l.maximal_faces()) {
            faces.push_back(a.intersected(b));
        }
    }
    return make_complex(std::move(universe), std::move(faces));
}

/**
 * Induced subcomplex on a vertex subset: all faces whose vertices lie in
 * `keep`. The maximal faces are the maximal elements among restrictions of
 * the original maximal faces.
 */
inline SimplicialComplex restrict_to(const SimplicialComplex& k,
                                     const std::vector<int>& keep) {
    Face keep_face{std::vector<int>(keep)};
    std::vector<int> universe;
    std::set_intersection(k.universe().begin(), k.universe().end(),
                          keep_face.vertices().begin(), keep_face.vertices().end(),
                          std::back_inserter(universe));
    std::vector<Face> faces;
    faces.reserve(k.maximal_faces().size());
    for (const Face& m : k.maximal_faces()) faces.push_back(m.intersected(keep_face));
    return make_complex(std::move(universe), std::move(faces));
}

/// All faces of dimension <= d (the d-skeleton).
inline SimplicialComplex skeleton(const SimplicialComplex& k, int d) {
    if (d < -1) throw std::domain_error("skeleton dimension below -1");
    std::vector<Face> faces;
    if (!k.is_void()) {
        faces.push_back(Face{});
        for (int i = 0; i <= d; ++i) {
            auto fd = faces_of_dim(k, i);
            faces.insert(faces.end(), fd.begin(), fd.end());
        }
    }
    return make_complex(k.universe(), std::move(faces));
}

/// The cyclic shift j -> j+1 on {1..p}, the generator used by rotation checks.
struct RotationAction {
    int modulus = 0;

    int apply(int v) const { return v == modulus ? 1 : v + 1; }

    Face apply(const Face& f) const {
        std::vector<int> out;
        out.reserve(f.size());
        for (int v : f.vertices()) out.push_back(apply(v));
        return Face(std::move(out));
    }
};

/**
 * Whether the complex is invariant under the cyclic shift on {1..p}.
 * The universe must be exactly {1..p}; anything else is a domain error.
 */
inline bool is_rotation_invariant(const SimplicialComplex& k, const RotationAction& rot) {
    const int p = rot.modulus;
    if (p <= 0) throw std::domain_error("rotation modulus must be positive");
    const auto& u = k.universe();
    if (static_cast<int>(u.size()) != p) {
        throw std::domain_error("universe is not {1..p}");
    }
    for (int i = 0; i < p; ++i) {
        if (u[static_cast<std::size_t>(i)] != i + 1) {
            throw std::domain_error("universe is not {1..p}");
        }
    }
    // A bijection on vertices preserves the complex iff it maps every
    // maximal face to a face.
    for (const Face& m : k.maximal_faces()) {
        if (!k.has_face(rot.apply(m))) return false;
    }
    return true;
}

/**
 * Lexicographically least set of q vertices of K no two of which span an
 * edge of K (an independent set in the 1-skeleton), or std::nullopt when
 * none exists. q must be positive.
 */
inline std::optional<Face> find_independent_set(const SimplicialComplex& k, int q) {
    if (q <= 0) throw std::domain_error("independent set size must be positive");
    std::vector<int> verts;
    for (const Face& f : faces_of_dim(k, 0)) verts.push_back(f.vertices()[0]);

    std::unordered_set<Face, FaceHash> edges;
    for (const Face& e : faces_of_dim(k, 1)) edges.insert(e);
    auto adjacent = [&](int a, int b) {
        return edges.count(Face{std::min(a, b), std::max(a, b)}) > 0;
    };

    std::vector<int> chosen;
    auto dfs = [&](auto&& self, std::size_t start) -> bool {
        if (static_cast<int>(chosen.size()) == q) return true;
        for (std::size_t i = start; i < verts.size(); ++i) {
            const int v = verts[i];
            bool ok = true;
            for (int c : chosen) {
                if (adjacent(c, v)) { ok = false; break; }
            }
            if (!ok) continue;
            chosen.push_back(v);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    return Face(chosen);
}

} // namespace qstab
