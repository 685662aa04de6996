#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qstable/birch.hpp"
#include "qstable/complex.hpp"
#include "qstable/homology.hpp"
#include "qstable/planner.hpp"
#include "qstable/rational.hpp"
#include "qstable/tverberg.hpp"
#include "qstable/version.hpp"

// File formats in one place.
//
//   Complex JSON   {"version":1,"universe":[ints],"maximal_faces":[[ints],..]}
//                  with both lists in canonical sorted order; readers accept
//                  files without the version field.
//   Points text    one point per line, coordinates whitespace-separated, each
//                  an integer, exact decimal, or num/den rational.
//   Certificates   JSON with every rational rendered as a "num/den" string,
//                  so no reader ever sees a rounded coordinate.

namespace qstab {

using Json = nlohmann::json;

inline Json complex_to_json(const SimplicialComplex& complex) {
    Json out;
    out["version"] = kFormatVersion;
    out["universe"] = complex.universe();
    Json faces = Json::array();
    for (const Face& f : complex.maximal_faces()) faces.push_back(f.vertices());
    out["maximal_faces"] = std::move(faces);
    return out;
}

inline SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("universe") || !j.contains("maximal_faces")) {
        throw std::runtime_error(
            "complex JSON must be an object with 'universe' and 'maximal_faces'");
    }
    std::vector<int> universe = j.at("universe").get<std::vector<int>>();
    std::vector<Face> maximal;
    for (const auto& entry : j.at("maximal_faces")) {
        maximal.emplace_back(entry.get<std::vector<int>>());
    }
    return make_complex(std::move(universe), std::move(maximal));
}

inline SimplicialComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open complex file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::runtime_error("cannot parse " + path + ": " + e.what());
    }
    try {
        return complex_from_json(j);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

// One point per line; blank lines and lines starting with '#' are skipped.
// Every diagnostic carries the 1-based line number.
inline PointConfiguration parse_points(std::istream& in) {
    std::vector<std::vector<Rational>> points;
    std::string line;
    int line_number = 0;
    int dimension = -1;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream row(line);
        std::vector<Rational> coords;
        std::string token;
        while (row >> token) {
            if (token[0] == '#') break;
            try {
                coords.push_back(parse_rational(token));
            } catch (const std::exception& e) {
                throw std::runtime_error("points file line " + std::to_string(line_number) +
                                         ": " + e.what());
            }
        }
        if (coords.empty()) continue;
        if (dimension < 0) {
            dimension = static_cast<int>(coords.size());
        } else if (static_cast<int>(coords.size()) != dimension) {
            throw std::runtime_error("points file line " + std::to_string(line_number) +
                                     ": expected " + std::to_string(dimension) +
                                     " coordinates, got " + std::to_string(coords.size()));
        }
        points.push_back(std::move(coords));
    }
    if (points.empty()) throw std::runtime_error("points file contains no points");
    return make_configuration(dimension, std::move(points));
}

inline PointConfiguration read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open points file: " + path);
    return parse_points(in);
}

inline Json rationals_to_json(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const Rational& v : values) out.push_back(rational_to_string(v));
    return out;
}

inline Json homology_to_json(const HomologyResult& result) {
    Json out;
    out["version"] = kFormatVersion;
    out["coefficients"] = "int";
    out["reduced"] = true;
    out["top_dim"] = result.top_dim;
    out["empty_complex"] = result.empty_face_only;
    Json groups = Json::array();
    for (int d = 0; d <= result.top_dim; ++d) {
        const HomologyGroup& g = result.group(d);
        Json entry;
        entry["dim"] = d;
        entry["free_rank"] = g.free_rank;
        Json torsion = Json::array();
        for (const BigInt& t : g.torsion) torsion.push_back(t.str());
        entry["torsion"] = std::move(torsion);
        groups.push_back(std::move(entry));
    }
    out["groups"] = std::move(groups);
    out["face_counts"] = result.face_counts;
    return out;
}

inline Json betti_to_json(const BettiTable& table) {
    Json out;
    out["version"] = kFormatVersion;
    out["coefficients"] = table.field;
    out["reduced"] = true;
    out["top_dim"] = table.top_dim;
    out["betti"] = table.reduced;
    return out;
}

inline Json certificate_to_json(const PartitionCertificate& cert) {
    Json out;
    out["version"] = kFormatVersion;
    out["type"] = "partition_certificate";
    out["parts"] = cert.parts;
    Json weights = Json::array();
    for (const auto& w : cert.weights) weights.push_back(rationals_to_json(w));
    out["weights"] = std::move(weights);
    out["common_point"] = rationals_to_json(cert.common_point_value);
    return out;
}

inline Json label_cover_to_json(const LabelCover& cover) {
    Json out;
    out["version"] = kFormatVersion;
    out["type"] = "label_cover";
    out["faces"] = cover.faces;
    out["vertex_labels"] = cover.vertex_labels;
    Json weights = Json::array();
    for (const auto& w : cover.weights) weights.push_back(rationals_to_json(w));
    out["weights"] = std::move(weights);
    out["witness"] = rationals_to_json(cover.witness);
    return out;
}

inline Json birch_to_json(const BirchCertificate& cert) {
    Json out;
    out["version"] = kFormatVersion;
    out["type"] = "surround_certificate";
    Json triangles = Json::array();
    for (const auto& tri : cert.triangles) {
        triangles.push_back(std::vector<int>{tri[0], tri[1], tri[2]});
    }
    out["triangles"] = std::move(triangles);
    out["witness"] = rationals_to_json(cert.witness);
    out["margin"] = rational_to_string(cert.margin);
    return out;
}

inline Json configuration_to_json(const PointConfiguration& config) {
    Json out;
    out["version"] = kFormatVersion;
    out["type"] = "point_configuration";
    out["dimension"] = config.dimension;
    Json pts = Json::array();
    for (const auto& pt : config.points) pts.push_back(rationals_to_json(pt));
    out["points"] = std::move(pts);
    return out;
}

inline Json plan_to_json(const PlanReport& report) {
    Json out;
    out["version"] = kFormatVersion;
    out["type"] = "plan_report";
    out["q"] = report.q;
    out["d"] = report.d;
    out["route"] = route_name(report.route);
    out["p"] = report.p;
    out["a"] = report.a;
    out["c"] = report.c;
    out["n"] = report.n;
    out["bound_ok"] = report.bound_ok;
    return out;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace qstab
