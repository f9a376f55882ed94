#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "biercert/face_set.hpp"

namespace bier {

/// The void complex has no faces at all; the empty-only complex has the
/// empty set as its one face. They are different values: Alexander duality
/// sends the full simplex to the void complex and the boundary of the full
/// simplex to the empty-only complex, so collapsing them would break the
/// duality involution.
enum class ComplexKind { Void, EmptyOnly, Standard };

std::string to_string(ComplexKind k);

/// f-vector: counts[i] is the number of i-dimensional faces. The implied
/// f_{-1} = 1 (the empty face) is not stored.
using FVector = std::vector<std::int64_t>;

/// A family of subsets of [n] in canonical order, pairwise distinct.
struct SetSystem {
    int n = 0;
    std::vector<FaceSet> members;
    bool operator==(const SetSystem&) const = default;
};

/// A simplicial complex on ground set {1,...,n}, stored as its facets
/// (maximal faces) as an antichain in canonical (ascending mask) order.
/// Values are immutable after construction; all operations are pure
/// functions, so complexes can be shared freely across threads.
class SimplicialComplex {
public:
    SimplicialComplex() = default;  // the void complex on an empty ground set

    /// Canonicalises arbitrary generating faces: removes duplicates and
    /// dominated faces, sorts, and infers the kind. Throws InputError for
    /// n < 0, n > 63 or faces outside [n].
    static SimplicialComplex from_facets(int n, std::vector<FaceSet> raw);
    static SimplicialComplex from_vertex_lists(int n, const std::vector<std::vector<int>>& raw);

    int n() const { return n_; }
    ComplexKind kind() const { return kind_; }
    const std::vector<FaceSet>& facets() const { return facets_; }

    /// max |facet| - 1; -1 for the empty-only complex. InputError on void.
    int dimension() const;

    /// True iff s is contained in some facet. The empty face is a face of
    /// every non-void complex; the void complex has no faces.
    bool is_face(FaceSet s) const;

    /// All facets have equal size (false for the void complex).
    bool is_pure() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    int n_ = 0;
    ComplexKind kind_ = ComplexKind::Void;
    std::vector<FaceSet> facets_;

    friend SimplicialComplex from_antichain_unchecked(int n, std::vector<FaceSet> sorted_antichain);
};

/// Trusted constructor for callers that already hold a sorted antichain
/// (skips the quadratic dominance scan).
SimplicialComplex from_antichain_unchecked(int n, std::vector<FaceSet> sorted_antichain);

FVector f_vector(const SimplicialComplex& k);
std::int64_t euler_characteristic(const SimplicialComplex& k);

/// The subcomplex of all faces contained in s, on the same ground set.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, FaceSet s);

/// Full subcomplex on the complement of y.
SimplicialComplex opposite_complex(const SimplicialComplex& k, FaceSet y);

/// All minimal nonfaces: sets that are not faces while every proper subset
/// is. Exhaustive 2^n scan; ResourceLimitError when n > 24.
SetSystem minimal_nonfaces(const SimplicialComplex& k);

/// Every k-subset of [n] is a face.
bool is_k_neighborly(const SimplicialComplex& k, int size);

/// The complex generated by the facets of k together with all s-subsets of [n].
SimplicialComplex add_all_faces_of_size(const SimplicialComplex& k, int s);

/// Every (d-1)-face lies in exactly two facets. Requires a pure complex.
bool is_weak_pseudomanifold(const SimplicialComplex& k);

/// Facet graph (facets adjacent when they share a ridge) is connected.
/// Requires a pure complex.
bool is_connected(const SimplicialComplex& k);

// generators
SimplicialComplex boundary_of_simplex(int m);      // on [m+1], m >= 1
SimplicialComplex full_simplex(int n);             // single facet [n]
SimplicialComplex cross_polytope_boundary(int k);  // k-fold join of point pairs, on [2k]
SimplicialComplex cycle_complex(int n);            // n-cycle 1-2-...-n-1, n >= 3

}  // namespace bier
