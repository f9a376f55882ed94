#pragma once

#include <cstdint>
#include <vector>

#include "biercert/simplicial_complex.hpp"

namespace bier {

/// Dense face indicator over all 2^n subsets of the ground set. Built once,
/// queried in O(1); the workhorse behind duals, minimal nonfaces and
/// complementarity scans. Refuses ground sets above 24 vertices.
class FaceTable {
public:
    static constexpr int max_ground = 24;

    explicit FaceTable(const SimplicialComplex& k);

    int n() const { return n_; }
    std::uint64_t subset_count() const { return std::uint64_t{1} << n_; }

    bool is_face(std::uint64_t mask) const {
        return words_[mask >> 6] >> (mask & 63) & 1;
    }

    /// All faces in ascending mask order, including the empty face for
    /// non-void complexes.
    std::vector<FaceSet> all_faces() const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;

    void mark(std::uint64_t mask) { words_[mask >> 6] |= std::uint64_t{1} << (mask & 63); }
};

/// Faces of dimension `dim` in canonical order. Uses the dense table when
/// the ground set allows it and falls back to per-facet subset enumeration
/// (with a work cap) otherwise.
std::vector<FaceSet> faces_of_dimension(const SimplicialComplex& k, int dim);

}  // namespace bier
