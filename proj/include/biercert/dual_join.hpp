#pragma once

#include <cstdint>

#include "biercert/simplicial_complex.hpp"

namespace bier {

/// A complex on the disjoint union of two vertex copies: factor-1 vertices
/// keep their labels 1..n1, factor-2 vertex v becomes v + n1. For deleted
/// joins both factors live on the same ground set, so the result sits on
/// [2n].
struct JoinedComplex {
    SimplicialComplex complex;
    int factor1_n = 0;
    int factor2_n = 0;

    int offset() const { return factor1_n; }

    /// The part of a face lying in copy 1, in factor labels.
    FaceSet factor1_part(FaceSet f) const {
        return f.intersected(FaceSet::full(factor1_n));
    }

    /// The part of a face lying in copy 2, mapped back to factor labels.
    FaceSet factor2_part(FaceSet f) const {
        return FaceSet::from_mask(f.bits >> factor1_n);
    }

    /// The label-swap involution i <-> n+i. Requires equal factor sizes.
    FaceSet swap_copies(FaceSet f) const;
};

/// Alexander dual B(K): all sets whose complement in [n] is not a face.
/// May be void (K the full simplex) or empty-only (K the boundary of the
/// full simplex). ResourceLimitError when n > 24.
SimplicialComplex alexander_dual(const SimplicialComplex& k);

bool is_self_dual(const SimplicialComplex& k);

/// Join: faces are disjoint unions of a face of each factor across the two
/// vertex copies. Both factors must be non-void.
JoinedComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Deleted join of two complexes on the same ground set [n]: faces are
/// pairs of *disjoint* faces (disjoint back in [n]). Facets are
/// materialised explicitly; ResourceLimitError when n > 16 — use
/// deleted_join_f_vector for counting at larger sizes.
JoinedComplex deleted_join(const SimplicialComplex& a, const SimplicialComplex& b);

/// The deleted join of K with its Alexander dual. K must be a proper,
/// non-void subcomplex of the full simplex on [n].
JoinedComplex bier_sphere(int n, const SimplicialComplex& k);

/// f-vector of the deleted join computed by counting disjoint face pairs,
/// without materialising any face of the join. Deterministic for every
/// thread count.
FVector deleted_join_f_vector(const SimplicialComplex& a, const SimplicialComplex& b,
                              int threads = 0);

}  // namespace bier
