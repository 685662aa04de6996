#pragma once

#include "qstable/complex.hpp"
#include "qstable/snf.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

// Augmented simplicial chain complex with integer coefficients. The basis in
// degree -1 is the empty face, so the homology read off downstream is reduced
// homology throughout.

namespace qstab {

class ChainComplex {
public:
    explicit ChainComplex(const SimplicialComplex& complex) {
        if (complex.is_void()) {
            throw std::domain_error("chain complex of the void complex is undefined");
        }
        top_dim_ = complex.dim();
        bases_.reserve(static_cast<std::size_t>(top_dim_ + 2));
        for (int d = -1; d <= top_dim_; ++d) {
            bases_.push_back(faces_of_dim(complex, d));
        }

        boundaries_.reserve(static_cast<std::size_t>(top_dim_ + 1));
        for (int d = 0; d <= top_dim_; ++d) {
            const auto& domain = basis(d);
            const auto& image = basis(d - 1);
            std::unordered_map<Face, int, FaceHash> index;
            index.reserve(image.size() * 2);
            for (std::size_t i = 0; i < image.size(); ++i) {
                index.emplace(image[i], static_cast<int>(i));
            }
            SparseIntMatrix m;
            m.rows = static_cast<int>(image.size());
            m.cols = static_cast<int>(domain.size());
            m.entries.reserve(domain.size() * static_cast<std::size_t>(d + 1));
            for (std::size_t j = 0; j < domain.size(); ++j) {
                long long sign = 1;
                for (std::size_t drop = 0; drop < domain[j].size(); ++drop) {
                    m.entries.push_back({index.at(domain[j].without_index(drop)),
                                         static_cast<int>(j), sign});
                    sign = -sign;
                }
            }
            boundaries_.push_back(std::move(m));
        }
        check_square_zero();
    }

    int top_dim() const { return top_dim_; }

    /// Faces of dimension d, lexicographically sorted; valid for -1 <= d <= top_dim.
    const std::vector<Face>& basis(int d) const {
        return bases_.at(static_cast<std::size_t>(d + 1));
    }

    std::size_t basis_size(int d) const {
        if (d < -1 || d > top_dim_) return 0;
        return basis(d).size();
    }

    /// Matrix of the boundary map in degree d (columns are d-faces); 0 <= d <= top_dim.
    const SparseIntMatrix& boundary(int d) const {
        return boundaries_.at(static_cast<std::size_t>(d));
    }

private:
    void check_square_zero() const {
        for (int d = 1; d <= top_dim_; ++d) {
            const SparseIntMatrix& high = boundary(d);
            const SparseIntMatrix& low = boundary(d - 1);
            std::vector<std::vector<std::pair<int, long long>>> low_cols(
                static_cast<std::size_t>(low.cols));
            for (const Triplet& e : low.entries) {
                low_cols[static_cast<std::size_t>(e.col)].push_back({e.row, e.value});
            }
            std::vector<std::vector<std::pair<int, long long>>> high_cols(
                static_cast<std::size_t>(high.cols));
            for (const Triplet& e : high.entries) {
                high_cols[static_cast<std::size_t>(e.col)].push_back({e.row, e.value});
            }
            for (std::size_t j = 0; j < high_cols.size(); ++j) {
                std::map<int, long long> acc;
                for (const auto& [mid, v1] : high_cols[j]) {
                    for (const auto& [out, v2] : low_cols[static_cast<std::size_t>(mid)]) {
                        acc[out] += v1 * v2;
                    }
                }
                for (const auto& [out, total] : acc) {
                    if (total != 0) {
                        throw std::logic_error("boundary of a boundary is nonzero");
                    }
                }
            }
        }
    }

    int top_dim_ = -1;
    std::vector<std::vector<Face>> bases_;
    std::vector<SparseIntMatrix> boundaries_;
};

} // namespace qstab
