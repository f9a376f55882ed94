#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "biercert/errors.hpp"

namespace bier {

/// A subset of the ground set {1,...,n}, n <= 63, packed into one machine
/// word: vertex v occupies bit v-1. Numeric order of the masks is the
/// canonical face order used throughout, so sorting by value is sorting
/// lexicographically by mask. The empty face (mask 0) is a legal value.
struct FaceSet {
    std::uint64_t bits = 0;

    static constexpr int max_vertices = 63;

    static constexpr FaceSet from_mask(std::uint64_t m) { return FaceSet{m}; }

    static FaceSet of(std::initializer_list<int> labels) {
        FaceSet f;
        for (int v : labels) f = f.with(v);
        return f;
    }

    /// The full face {1,...,n}.
    static constexpr FaceSet full(int n) {
        return FaceSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    bool contains(int v) const { return v >= 1 && v <= 64 && (bits >> (v - 1) & 1); }

    FaceSet with(int v) const {
        if (v < 1 || v > max_vertices)
            throw InputError("vertex label out of range: " + std::to_string(v));
        return FaceSet{bits | std::uint64_t{1} << (v - 1)};
    }

    FaceSet without(int v) const { return FaceSet{bits & ~(std::uint64_t{1} << (v - 1))}; }

    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }

    bool subset_of(FaceSet o) const { return (bits & ~o.bits) == 0; }
    bool disjoint_with(FaceSet o) const { return (bits & o.bits) == 0; }

    FaceSet unioned(FaceSet o) const { return FaceSet{bits | o.bits}; }
    FaceSet intersected(FaceSet o) const { return FaceSet{bits & o.bits}; }
    FaceSet minus(FaceSet o) const { return FaceSet{bits & ~o.bits}; }
    FaceSet complement_in(int n) const { return FaceSet{full(n).bits & ~bits}; }

    /// Vertex labels in ascending order.
    std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    /// "{1 3 5}" or "{}" for the empty face.
    std::string to_string() const;

    auto operator<=>(const FaceSet&) const = default;
};

/// Validating construction from 1-based labels against a ground set [n].
/// Duplicate labels are tolerated; labels outside 1..n are an InputError.
FaceSet face_from_labels(const std::vector<int>& labels, int n);

}  // namespace bier
