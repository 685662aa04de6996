#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qstable/lp.hpp"
#include "qstable/rational.hpp"
#include "qstable/tverberg.hpp"

namespace qstab {

// Planar "surrounding" certificates: split 3q points into q vertex-disjoint
// triangles that all strictly contain one common point. Strict containment is
// phrased through orientation determinants, so the certificate is checkable
// with nothing but exact sign evaluations.

// Twice the signed area of (a, b, c): positive when the walk a -> b -> c
// turns counterclockwise, zero exactly on collinear triples.
inline Rational orient2d(const std::vector<Rational>& a, const std::vector<Rational>& b,
                         const std::vector<Rational>& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

struct BirchCertificate {
    std::vector<std::array<int, 3>> triangles;  // 1-based indices, counterclockwise
    std::vector<Rational> witness;              // the surrounded point
    Rational margin = 0;                        // least determinant slack, > 0
};

// Exact recheck: triangles disjoint, all 3q determinants strictly positive at
// the witness.
inline bool verify_birch(const PointConfiguration& config, const BirchCertificate& cert) {
    if (config.dimension != 2 || cert.witness.size() != 2) return false;
    std::vector<bool> used(static_cast<std::size_t>(config.size()) + 1, false);
    for (const auto& tri : cert.triangles) {
        for (int idx : tri) {
            if (idx < 1 || idx > config.size() || used[static_cast<std::size_t>(idx)]) {
                return false;
            }
            used[static_cast<std::size_t>(idx)] = true;
        }
        for (int e = 0; e < 3; ++e) {
            const auto& p = config.point(tri[static_cast<std::size_t>(e)]);
            const auto& r = config.point(tri[static_cast<std::size_t>((e + 1) % 3)]);
            if (orient2d(p, r, cert.witness) <= 0) return false;
        }
    }
    return true;
}

namespace detail {

// Partitions of {1..3q} into unordered triples, each triple anchored by its
// least element and partners chosen in lexicographic order.
template <typename Visitor>
inline bool enumerate_triples(int num_points, Visitor&& visit) {
    std::vector<bool> taken(static_cast<std::size_t>(num_points) + 1, false);
    std::vector<std::array<int, 3>> triples;
    auto dfs = [&](auto&& self) -> bool {
        int anchor = 0;
        for (int v = 1; v <= num_points; ++v) {
            if (!taken[static_cast<std::size_t>(v)]) {
                anchor = v;
                break;
            }
        }
        if (anchor == 0) return visit(triples);
        taken[static_cast<std::size_t>(anchor)] = true;
        for (int i = anchor + 1; i <= num_points; ++i) {
            if (taken[static_cast<std::size_t>(i)]) continue;
            taken[static_cast<std::size_t>(i)] = true;
            for (int j = i + 1; j <= num_points; ++j) {
                if (taken[static_cast<std::size_t>(j)]) continue;
                taken[static_cast<std::size_t>(j)] = true;
                triples.push_back({anchor, i, j});
                if (self(self)) return true;
                triples.pop_back();
                taken[static_cast<std::size_t>(j)] = false;
            }
            taken[static_cast<std::size_t>(i)] = false;
        }
        taken[static_cast<std::size_t>(anchor)] = false;
        return false;
    };
    return dfs(dfs);
}

}  // namespace detail

// Finds q vertex-disjoint triangles over exactly 3q planar points and a point
// strictly inside all of them, by enumerating triple partitions and
// maximizing the worst determinant slack by LP. Triples whose three points
// are collinear cannot bound a region and are skipped; if every partition
// contains such a triple the input is rejected as degenerate.
inline std::optional<BirchCertificate> birch_certificate(const PointConfiguration& config,
                                                         int q) {
    if (config.dimension != 2) throw std::domain_error("birch_certificate requires d = 2");
    if (q < 1 || config.size() != 3 * q) {
        throw std::domain_error("birch_certificate requires exactly 3q points");
    }

    bool saw_nondegenerate = false;
    std::optional<BirchCertificate> found;
    detail::enumerate_triples(3 * q, [&](const std::vector<std::array<int, 3>>& triples) {
        std::vector<std::array<int, 3>> oriented;
        oriented.reserve(triples.size());
        for (const auto& tri : triples) {
            const Rational area = orient2d(config.point(tri[0]), config.point(tri[1]),
                                           config.point(tri[2]));
            if (area == 0) return false;  // collinear triple, try the next partition
            oriented.push_back(area > 0 ? tri : std::array<int, 3>{tri[0], tri[2], tri[1]});
        }
        saw_nondegenerate = true;

        // Variables: witness coordinates (free) and the slack margin. Each
        // directed triangle edge (p, r) demands orient2d(p, r, y) >= margin.
        LpProblem lp;
        lp.num_vars = 3;
        lp.is_free = {true, true, false};
        lp.objective = {Rational(0), Rational(0), Rational(1)};
        for (const auto& tri : oriented) {
            for (int e = 0; e < 3; ++e) {
                const auto& p = config.point(tri[static_cast<std::size_t>(e)]);
                const auto& r = config.point(tri[static_cast<std::size_t>((e + 1) % 3)]);
                LinearConstraint edge;
                edge.coeffs = {-(r[1] - p[1]), r[0] - p[0], Rational(-1)};
                edge.rel = Relation::ge;
                edge.rhs = (r[0] - p[0]) * p[1] - (r[1] - p[1]) * p[0];
                lp.constraints.push_back(std::move(edge));
            }
        }
        const LpSolution solution = solve_lp(lp);
        if (solution.status != LpStatus::optimal || solution.objective_value <= 0) {
            return false;  // at best boundary contact, not a surround
        }
        BirchCertificate cert;
        cert.triangles = oriented;
        cert.witness = {solution.values[0], solution.values[1]};
        cert.margin = solution.values[2];
        if (!verify_birch(config, cert)) {
            throw std::logic_error("internal error: surround certificate failed recheck");
        }
        found = std::move(cert);
        return true;
    });
    if (!found && !saw_nondegenerate) {
        throw std::domain_error(
            "birch_certificate: degenerate input, every triple partition has a collinear "
            "triple");
    }
    return found;
}

}  // namespace qstab
