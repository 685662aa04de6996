#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qstab {

/**
 * A face of a simplicial complex: a finite set of integer vertex ids,
 * stored strictly sorted. The empty face is a valid value and is distinct
 * from "no face" (callers use std::optional for the latter).
 */
class Face {
public:
    Face() = default;

    explicit Face(std::vector<int> vertices) : verts_(std::move(vertices)) {
        std::sort(verts_.begin(), verts_.end());
        if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end()) {
            throw std::invalid_argument("face has a duplicate vertex id");
        }
    }

    Face(std::initializer_list<int> vertices) : Face(std::vector<int>(vertices)) {}

    const std::vector<int>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }

    /// Dimension; the empty face has dimension -1.
    int dim() const { return static_cast<int>(verts_.size()) - 1; }

    bool contains(int v) const {
        return std::binary_search(verts_.begin(), verts_.end(), v);
    }

    bool subset_of(const Face& other) const {
        return std::includes(other.verts_.begin(), other.verts_.end(),
                             verts_.begin(), verts_.end());
    }

    Face united(const Face& other) const {
        std::vector<int> out;
        out.reserve(verts_.size() + other.verts_.size());
        std::set_union(verts_.begin(), verts_.end(),
                       other.verts_.begin(), other.verts_.end(),
                       std::back_inserter(out));
        return Face(std::move(out));
    }

    Face intersected(const Face& other) const {
        std::vector<int> out;
        std::set_intersection(verts_.begin(), verts_.end(),
                              other.verts_.begin(), other.verts_.end(),
                              std::back_inserter(out));
        return Face(std::move(out));
    }

    Face translated(int shift) const {
        std::vector<int> out(verts_);
        for (int& v : out) v += shift;
        return Face(std::move(out));
    }

    /// Face with the vertex at position i removed (for boundary maps).
    Face without_index(std::size_t i) const {
        std::vector<int> out(verts_);
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        return Face(std::move(out));
    }

    friend bool operator==(const Face& a, const Face& b) { return a.verts_ == b.verts_; }
    friend bool operator!=(const Face& a, const Face& b) { return !(a == b); }

    /// Lexicographic order on vertex sequences; a proper prefix sorts first.
    friend bool operator<(const Face& a, const Face& b) { return a.verts_ < b.verts_; }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(verts_[i]);
        }
        s += "}";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Face& f) {
        return os << f.to_string();
    }

private:
    std::vector<int> verts_;
};

struct FaceHash {
    std::size_t operator()(const Face& f) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : f.vertices()) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace qstab
