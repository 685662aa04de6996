#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qstable/complex.hpp"
#include "qstable/lp.hpp"
#include "qstable/planner.hpp"
#include "qstable/rational.hpp"
#include "qstable/rng.hpp"

namespace qstab {

// Search and verification of common-point certificates for affine maps:
// given rational point images, find disjoint index sets whose convex hulls
// meet, under optional coloring or label-complex constraints. All feasibility
// questions reduce to the exact simplex in lp.hpp, so a "found" answer comes
// with rational weights that recheck by pure arithmetic, and a "not found"
// answer on an exhausted finite search is definitive.

// Point images of abstract vertices 1..n. Point i is stored 0-based but every
// public index set below speaks 1-based, matching complex vertex labels.
struct PointConfiguration {
    int dimension = 0;
    std::vector<std::vector<Rational>> points;

    int size() const { return static_cast<int>(points.size()); }

    const std::vector<Rational>& point(int index) const {
        if (index < 1 || index > size()) {
            throw std::out_of_range("point index " + std::to_string(index) + " out of range");
        }
        return points[static_cast<std::size_t>(index - 1)];
    }
};

inline PointConfiguration make_configuration(int dimension,
                                             std::vector<std::vector<Rational>> points) {
    if (dimension < 1) throw std::domain_error("configuration dimension must be >= 1");
    for (const auto& pt : points) {
        if (static_cast<int>(pt.size()) != dimension) {
            throw std::domain_error("point has wrong number of coordinates");
        }
    }
    return PointConfiguration{dimension, std::move(points)};
}

struct PartitionCertificate {
    std::vector<std::vector<int>> parts;           // 1-based point indices
    std::vector<std::vector<Rational>> weights;    // parallel to parts
    std::vector<Rational> common_point_value;      // the shared point y
};

// Color classes over point indices. Rainbow mode limits every part to at most
// one point per class; equal-coefficient mode instead forces each class to
// carry the same total weight in every part.
enum class ColorMode { rainbow, equal_coefficient };

struct ColorConstraint {
    ColorMode mode = ColorMode::rainbow;
    std::vector<std::vector<int>> classes;  // pairwise disjoint 1-based indices
};

namespace detail {

inline void validate_classes(const ColorConstraint& constraint, int num_points) {
    std::vector<bool> seen(static_cast<std::size_t>(num_points) + 1, false);
    for (const auto& cls : constraint.classes) {
        for (int v : cls) {
            if (v < 1 || v > num_points) {
                throw std::domain_error("color class contains invalid point index");
            }
            if (seen[static_cast<std::size_t>(v)]) {
                throw std::domain_error("color classes must be pairwise disjoint");
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
}

// Class id per point (0 = uncolored), for quick rainbow checks.
inline std::vector<int> class_of_point(const ColorConstraint& constraint, int num_points) {
    std::vector<int> owner(static_cast<std::size_t>(num_points) + 1, 0);
    for (std::size_t c = 0; c < constraint.classes.size(); ++c) {
        for (int v : constraint.classes[c]) {
            owner[static_cast<std::size_t>(v)] = static_cast<int>(c) + 1;
        }
    }
    return owner;
}

// Feasibility core shared by every search: does some point lie in the convex
// hull of each listed set? Sets may overlap here; public entry points that
// promise disjointness validate it themselves. Optional equality rows force
// equal per-class weight mass across all sets.
inline std::optional<PartitionCertificate> hulls_common_point(
    const std::vector<std::vector<int>>& parts, const PointConfiguration& config,
    const std::vector<std::vector<int>>* equal_mass_classes) {
    const int d = config.dimension;
    const int q = static_cast<int>(parts.size());

    std::vector<int> offset(parts.size() + 1, 0);
    for (int j = 0; j < q; ++j) {
        if (parts[static_cast<std::size_t>(j)].empty()) {
            throw std::domain_error("common_point: empty part");
        }
        offset[static_cast<std::size_t>(j) + 1] =
            offset[static_cast<std::size_t>(j)] +
            static_cast<int>(parts[static_cast<std::size_t>(j)].size());
    }
    const int num_lambda = offset[parts.size()];

    LpProblem lp;
    lp.num_vars = num_lambda + d;  // weights, then the witness coordinates
    lp.is_free.assign(static_cast<std::size_t>(lp.num_vars), false);
    for (int t = 0; t < d; ++t) lp.is_free[static_cast<std::size_t>(num_lambda + t)] = true;

    for (int j = 0; j < q; ++j) {
        const auto& part = parts[static_cast<std::size_t>(j)];
        LinearConstraint convexity;
        convexity.coeffs.assign(static_cast<std::size_t>(lp.num_vars), Rational(0));
        for (int i = 0; i < static_cast<int>(part.size()); ++i) {
            convexity.coeffs[static_cast<std::size_t>(offset[static_cast<std::size_t>(j)] + i)] = 1;
        }
        convexity.rel = Relation::eq;
        convexity.rhs = 1;
        lp.constraints.push_back(std::move(convexity));

        for (int t = 0; t < d; ++t) {
            LinearConstraint barycenter;
            barycenter.coeffs.assign(static_cast<std::size_t>(lp.num_vars), Rational(0));
            for (int i = 0; i < static_cast<int>(part.size()); ++i) {
                const auto& pt = config.point(part[static_cast<std::size_t>(i)]);
                barycenter.coeffs[static_cast<std::size_t>(offset[static_cast<std::size_t>(j)] + i)] =
                    pt[static_cast<std::size_t>(t)];
            }
            barycenter.coeffs[static_cast<std::size_t>(num_lambda + t)] = -1;
            barycenter.rel = Relation::eq;
            barycenter.rhs = 0;
            lp.constraints.push_back(std::move(barycenter));
        }
    }

    if (equal_mass_classes != nullptr && q >= 2) {
        // Equal class mass across parts. Rows for parts 2..q against part 1;
        // the final class is implied because each part's weights sum to 1,
        // but writing every class keeps the rows easy to audit.
        for (const auto& cls : *equal_mass_classes) {
            for (int j = 1; j < q; ++j) {
                LinearConstraint balance;
                balance.coeffs.assign(static_cast<std::size_t>(lp.num_vars), Rational(0));
                bool touched = false;
                for (int target : {0, j}) {
                    const auto& part = parts[static_cast<std::size_t>(target)];
                    const Rational sign = target == 0 ? 1 : -1;
                    for (int i = 0; i < static_cast<int>(part.size()); ++i) {
                        const int idx = part[static_cast<std::size_t>(i)];
                        if (std::find(cls.begin(), cls.end(), idx) != cls.end()) {
                            balance.coeffs[static_cast<std::size_t>(
                                offset[static_cast<std::size_t>(target)] + i)] = sign;
                            touched = true;
                        }
                    }
                }
                if (!touched) continue;
                balance.rel = Relation::eq;
                balance.rhs = 0;
                lp.constraints.push_back(std::move(balance));
            }
        }
    }

    const LpSolution solution = solve_lp(lp);
    if (solution.status != LpStatus::optimal) return std::nullopt;

    PartitionCertificate cert;
    cert.parts = parts;
    cert.weights.resize(parts.size());
    for (int j = 0; j < q; ++j) {
        auto& w = cert.weights[static_cast<std::size_t>(j)];
        w.assign(solution.values.begin() + offset[static_cast<std::size_t>(j)],
                 solution.values.begin() + offset[static_cast<std::size_t>(j) + 1]);
    }
    cert.common_point_value.assign(solution.values.begin() + num_lambda, solution.values.end());
    return cert;
}

}  // namespace detail

// Exact recheck of a certificate against the configuration it was issued for:
// parts disjoint, weights convex, and all part barycenters equal to the
// witness, coordinate by coordinate with zero tolerance.
inline bool verify_certificate(const PointConfiguration& config,
                               const PartitionCertificate& cert) {
    std::vector<bool> used(static_cast<std::size_t>(config.size()) + 1, false);
    if (cert.parts.size() != cert.weights.size()) return false;
    if (static_cast<int>(cert.common_point_value.size()) != config.dimension) return false;
    for (std::size_t j = 0; j < cert.parts.size(); ++j) {
        const auto& part = cert.parts[j];
        const auto& weights = cert.weights[j];
        if (part.empty() || part.size() != weights.size()) return false;
        Rational total = 0;
        std::vector<Rational> barycenter(static_cast<std::size_t>(config.dimension), Rational(0));
        for (std::size_t i = 0; i < part.size(); ++i) {
            const int idx = part[i];
            if (idx < 1 || idx > config.size() || used[static_cast<std::size_t>(idx)]) return false;
            used[static_cast<std::size_t>(idx)] = true;
            if (weights[i] < 0) return false;
            total += weights[i];
            const auto& pt = config.point(idx);
            for (int t = 0; t < config.dimension; ++t) {
                barycenter[static_cast<std::size_t>(t)] += weights[i] * pt[static_cast<std::size_t>(t)];
            }
        }
        if (total != 1) return false;
        for (int t = 0; t < config.dimension; ++t) {
            if (barycenter[static_cast<std::size_t>(t)] !=
                cert.common_point_value[static_cast<std::size_t>(t)]) {
                return false;
            }
        }
    }
    return true;
}

// LP feasibility for a fixed family of disjoint parts. Optional equal-mass
// classes add the balance rows used by equal_coefficient_search.
inline std::optional<PartitionCertificate> common_point(
    const std::vector<std::vector<int>>& parts, const PointConfiguration& config,
    const std::vector<std::vector<int>>* equal_mass_classes = nullptr) {
    std::vector<bool> used(static_cast<std::size_t>(config.size()) + 1, false);
    for (const auto& part : parts) {
        if (part.empty()) throw std::domain_error("common_point: empty part");
        for (int idx : part) {
            if (idx < 1 || idx > config.size()) {
                throw std::domain_error("common_point: point index out of range");
            }
            if (used[static_cast<std::size_t>(idx)]) {
                throw std::domain_error("common_point: parts must be disjoint");
            }
            used[static_cast<std::size_t>(idx)] = true;
        }
    }
    auto cert = detail::hulls_common_point(parts, config, equal_mass_classes);
    if (cert && !verify_certificate(config, *cert)) {
        throw std::logic_error("internal error: certificate failed exact recheck");
    }
    return cert;
}

namespace detail {

// Necessary condition checked before each LP: the parts' bounding boxes must
// share a point. Boxes only spend a handful of comparisons, and at desk scale
// they reject the vast majority of candidate partitions.
inline bool bounding_boxes_intersect(const std::vector<std::vector<int>>& parts,
                                     const PointConfiguration& config) {
    const int d = config.dimension;
    for (int t = 0; t < d; ++t) {
        bool first_part = true;
        Rational lo = 0, hi = 0;
        for (const auto& part : parts) {
            bool first_point = true;
            Rational pmin = 0, pmax = 0;
            for (int idx : part) {
                const Rational& coord = config.point(idx)[static_cast<std::size_t>(t)];
                if (first_point || coord < pmin) pmin = coord;
                if (first_point || coord > pmax) pmax = coord;
                first_point = false;
            }
            if (first_part) {
                lo = pmin;
                hi = pmax;
                first_part = false;
            } else {
                if (pmin > lo) lo = pmin;
                if (pmax < hi) hi = pmax;
            }
        }
        if (lo > hi) return false;
    }
    return true;
}

// Depth-first walk over canonical encodings of q disjoint parts drawn from
// {1..n}: each point joins an existing part, opens the next one, or stays
// unused, with parts numbered in order of their least element. Visits every
// family of q disjoint nonempty subsets exactly once, in a stable
// lexicographic order that tries fuller partitions before sparser ones.
template <typename Visitor>
inline bool enumerate_partitions(int num_points, int q, const std::vector<int>& class_owner,
                                 bool rainbow, Visitor&& visit) {
    std::vector<std::vector<int>> parts;
    parts.reserve(static_cast<std::size_t>(q));

    auto rainbow_ok = [&](int part_index, int point) {
        if (!rainbow || class_owner.empty()) return true;
        const int cls = class_owner[static_cast<std::size_t>(point)];
        if (cls == 0) return true;
        for (int other : parts[static_cast<std::size_t>(part_index)]) {
            if (class_owner[static_cast<std::size_t>(other)] == cls) return false;
        }
        return true;
    };

    // Returns true when the visitor accepted a family and the walk stops.
    auto dfs = [&](auto&& self, int point) -> bool {
        const int open = static_cast<int>(parts.size());
        if (point > num_points) {
            return open == q && visit(parts);
        }
        // Every part must be opened by the end; bail out when the remaining
        // points cannot open enough new ones.
        if (open + (num_points - point + 1) < q) return false;
        for (int j = 0; j < open; ++j) {
            if (!rainbow_ok(j, point)) continue;
            parts[static_cast<std::size_t>(j)].push_back(point);
            if (self(self, point + 1)) return true;
            parts[static_cast<std::size_t>(j)].pop_back();
        }
        if (open < q) {
            parts.push_back({point});
            if (self(self, point + 1)) return true;
            parts.pop_back();
        }
        return self(self, point + 1);  // leave the point unused
    };
    return dfs(dfs, 1);
}

}  // namespace detail

// Searches all partitions of the whole index set into q disjoint parts, in
// lexicographic order over their growth-string encodings, and returns the
// first partition whose hulls share a point. Rainbow constraints prune the
// enumeration; equal-coefficient constraints become LP rows.
inline std::optional<PartitionCertificate> tverberg_partition(
    const PointConfiguration& config, int q, const ColorConstraint* constraints = nullptr) {
    if (q < 2) throw std::domain_error("tverberg_partition requires q >= 2");
    if (config.size() < q) return std::nullopt;

    std::vector<int> class_owner;
    bool rainbow = false;
    const std::vector<std::vector<int>>* balance = nullptr;
    if (constraints != nullptr) {
        detail::validate_classes(*constraints, config.size());
        class_owner = detail::class_of_point(*constraints, config.size());
        rainbow = constraints->mode == ColorMode::rainbow;
        if (constraints->mode == ColorMode::equal_coefficient) balance = &constraints->classes;
    }

    std::optional<PartitionCertificate> found;
    detail::enumerate_partitions(
        config.size(), q, class_owner, rainbow,
        [&](const std::vector<std::vector<int>>& parts) {
            if (!detail::bounding_boxes_intersect(parts, config)) return false;
            auto cert = detail::hulls_common_point(parts, config, balance);
            if (!cert) return false;
            found = std::move(cert);
            return true;
        });
    if (found && !verify_certificate(config, *found)) {
        throw std::logic_error("internal error: certificate failed exact recheck");
    }
    return found;
}

// Search for q disjoint supports with a common point where every class must
// contribute the same total weight to each part. The support search is the
// same growth-string walk as tverberg_partition; only the LP differs.
inline std::optional<PartitionCertificate> equal_coefficient_search(
    const PointConfiguration& config, int q, const ColorConstraint& classes) {
    ColorConstraint balanced = classes;
    balanced.mode = ColorMode::equal_coefficient;
    return tverberg_partition(config, q, &balanced);
}

// A family of p faces of the point index set, not necessarily disjoint,
// together with the witness their hulls share. The per-vertex label sets
// {j : point v lies in face j} are the objects constrained to be faces of a
// given complex.
struct LabelCover {
    std::vector<std::vector<int>> faces;           // faces[j] = 1-based point indices
    std::vector<std::vector<int>> vertex_labels;   // vertex_labels[v-1] = sorted face ids
    std::vector<std::vector<Rational>> weights;    // parallel to faces
    std::vector<Rational> witness;
};

// Candidate label faces per vertex are the faces of the constraint complex.
// The assignment search is exponential in the number of points, so the face
// list is capped; past the cap the instance is declared out of scope rather
// than silently truncated.
inline constexpr std::size_t kLabelFaceCap = 4096;

// Finds p faces (one label set per point, drawn from the faces of
// `constraint`) whose convex hulls share a point. Exhaustive over label
// assignments in lexicographic order, LP at every fully labeled leaf.
inline std::optional<LabelCover> sigma_constrained_cover(const PointConfiguration& config,
                                                         const SimplicialComplex& constraint,
                                                         int p) {
    if (p < 1) throw std::domain_error("sigma_constrained_cover requires p >= 1");
    std::vector<int> expected(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) expected[static_cast<std::size_t>(j)] = j + 1;
    if (constraint.universe() != expected) {
        throw std::domain_error("constraint complex must have universe {1..p}");
    }

    // All faces of the constraint complex, empty face first, then by size and
    // lexicographic order. Nonempty labels early keeps coverage achievable
    // with fewer branches explored.
    std::vector<Face> label_faces;
    label_faces.emplace_back();
    for (const Face& maximal : constraint.maximal_faces()) {
        const auto verts = maximal.vertices();
        const std::size_t n = verts.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::vector<int> subset;
            for (std::size_t b = 0; b < n; ++b) {
                if (mask & (std::size_t{1} << b)) subset.push_back(verts[b]);
            }
            label_faces.emplace_back(std::move(subset));
        }
    }
    std::sort(label_faces.begin(), label_faces.end());
    label_faces.erase(std::unique(label_faces.begin(), label_faces.end()), label_faces.end());
    std::stable_sort(label_faces.begin(), label_faces.end(),
                     [](const Face& a, const Face& b) { return a.size() < b.size(); });
    if (label_faces.size() > kLabelFaceCap) {
        throw std::domain_error("constraint complex has too many faces for label search");
    }

    const int n = config.size();
    int max_label = 0;
    for (const Face& f : label_faces) max_label = std::max(max_label, static_cast<int>(f.size()));
    std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> members(static_cast<std::size_t>(p));
    std::optional<LabelCover> found;

    auto dfs = [&](auto&& self, int vertex) -> bool {
        if (vertex > n) {
            for (const auto& face_members : members) {
                if (face_members.empty()) return false;
            }
            if (!detail::bounding_boxes_intersect(members, config)) return false;
            auto cert = detail::hulls_common_point(members, config, nullptr);
            if (!cert) return false;
            LabelCover cover;
            cover.faces = members;
            cover.weights = cert->weights;
            cover.witness = cert->common_point_value;
            cover.vertex_labels.resize(static_cast<std::size_t>(n));
            for (int v = 1; v <= n; ++v) {
                cover.vertex_labels[static_cast<std::size_t>(v - 1)] =
                    label_faces[choice[static_cast<std::size_t>(v - 1)]].vertices();
            }
            found = std::move(cover);
            return true;
        }
        // Count how many of the p faces are still empty; the remaining
        // vertices must be able to populate all of them.
        int empty_faces = 0;
        for (const auto& face_members : members) {
            if (face_members.empty()) ++empty_faces;
        }
        if (static_cast<long long>(empty_faces) >
            static_cast<long long>(n - vertex + 1) * max_label) {
            return false;
        }
        for (std::size_t c = 0; c < label_faces.size(); ++c) {
            choice[static_cast<std::size_t>(vertex - 1)] = c;
            for (int j : label_faces[c].vertices()) {
                members[static_cast<std::size_t>(j - 1)].push_back(vertex);
            }
            if (self(self, vertex + 1)) return true;
            for (int j : label_faces[c].vertices()) {
                members[static_cast<std::size_t>(j - 1)].pop_back();
            }
        }
        return false;
    };
    dfs(dfs, 1);
    return found;
}

// Least m in {0..p-1} whose cyclic shift of I misses sigma_plus. Exists under
// the preconditions: the p shifts of I hit each vertex exactly |I| times, so
// at most |I|·|sigma_plus| < p shifts can collide with sigma_plus.
inline int shift_to_avoid(const Face& independent, const Face& sigma_plus,
                          const SimplicialComplex& complex, int p) {
    if (!is_prime(p)) {
        throw std::domain_error("shift_to_avoid: p = " + std::to_string(p) + " is not prime");
    }
    const auto verts = independent.vertices();
    for (int v : verts) {
        if (v < 1 || v > p) throw std::domain_error("shift_to_avoid: vertex outside {1..p}");
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (complex.has_face(Face{verts[i], verts[j]})) {
                throw std::domain_error("shift_to_avoid: set is not independent, edge {" +
                                        std::to_string(verts[i]) + "," +
                                        std::to_string(verts[j]) + "} is a face");
            }
        }
    }
    if (!complex.has_face(sigma_plus)) {
        throw std::domain_error("shift_to_avoid: sigma_plus is not a face of the complex");
    }

    for (int m = 0; m < p; ++m) {
        bool hit = false;
        for (int v : verts) {
            const int shifted = (v - 1 + m) % p + 1;
            if (sigma_plus.contains(shifted)) {
                hit = true;
                break;
            }
        }
        if (!hit) return m;
    }
    throw std::logic_error("shift_to_avoid: no shift found despite preconditions");
}

// Draws (q-1)(d+1) integer points and certifies by exhaustive enumeration
// that no q-part partition has a common point, demonstrating that one point
// fewer than the classic bound admits no certificate. Degenerate draws are
// re-rolled a bounded number of times.
inline constexpr int kWitnessRetries = 32;

inline PointConfiguration optimality_witness(int q, int d,
                                             std::uint64_t seed = SplitMix64::kDefaultSeed) {
    if (q < 2 || d < 1) throw std::domain_error("optimality_witness requires q >= 2, d >= 1");
    const int n = (q - 1) * (d + 1);
    if (n > 12) throw std::domain_error("optimality_witness limited to (q-1)(d+1) <= 12 points");

    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < kWitnessRetries; ++attempt) {
        std::vector<std::vector<Rational>> pts(static_cast<std::size_t>(n));
        for (auto& pt : pts) {
            pt.resize(static_cast<std::size_t>(d));
            for (auto& coord : pt) coord = Rational(rng.next_in_range(-1'000'000, 1'000'000));
        }
        PointConfiguration config = make_configuration(d, std::move(pts));

        bool admits_partition = false;
        detail::enumerate_partitions(
            n, q, {}, false, [&](const std::vector<std::vector<int>>& parts) {
                if (!detail::bounding_boxes_intersect(parts, config)) return false;
                if (detail::hulls_common_point(parts, config, nullptr)) {
                    admits_partition = true;
                    return true;
                }
                return false;
            });
        if (!admits_partition) return config;
    }
    throw std::runtime_error("optimality_witness: no generic draw excluded all partitions");
}

}  // namespace qstab
