#pragma once

#include <cstdint>
#include <vector>

#include "biercert/simplicial_complex.hpp"
#include "biercert/z2_matrix.hpp"

namespace bier {

/// A GF(2) cochain of degree m: the set of m-faces where it evaluates to 1,
/// in canonical order. Built through make_cochain, which checks the support
/// against the ambient complex.
struct Cochain {
    int degree = 0;
    std::vector<FaceSet> support;
    bool operator==(const Cochain&) const = default;
};

/// A GF(2) chain; same representation as a cochain, paired against them.
struct Chain {
    int degree = 0;
    std::vector<FaceSet> support;
    bool operator==(const Chain&) const = default;
};

struct FundamentalClass {
    Chain chain;    // sum of all facets
    bool is_cycle;  // boundary vanishes over GF(2)
};

Cochain make_cochain(const SimplicialComplex& k, int degree, std::vector<FaceSet> support);
Chain make_chain(const SimplicialComplex& k, int degree, std::vector<FaceSet> support);

/// Symmetric difference (addition over GF(2)). Degrees must match.
Cochain add(const Cochain& a, const Cochain& b);
Chain add(const Chain& a, const Chain& b);

/// Boundary operator in degree i: rows are (i-1)-faces, columns i-faces,
/// entries are incidences (signs vanish mod 2). Requires 1 <= i <= dim.
Z2Matrix boundary_matrix(const SimplicialComplex& k, int i);

/// beta_i = f_i - rank d_i - rank d_{i+1}, i = 0..dim.
std::vector<std::int64_t> betti_numbers_z2(const SimplicialComplex& k);

Cochain coboundary(const SimplicialComplex& k, const Cochain& a);
Chain boundary(const SimplicialComplex& k, const Chain& z);

bool is_cocycle(const SimplicialComplex& k, const Cochain& a);

/// Solves a = delta(b) over GF(2) by Gaussian elimination on the augmented
/// coboundary matrix. Degree-0 cochains are coboundaries only when zero.
bool is_coboundary(const SimplicialComplex& k, const Cochain& a);

/// Front-face/back-face cup product in the natural vertex order: on a
/// (p+q)-face with ordered vertices v0 < ... < v_{p+q} the value is
/// a(front p-face) * b(back q-face). Only pairing-level results are vertex-
/// order independent; cochain-level output depends on the order by design.
Cochain cup_product(const SimplicialComplex& k, const Cochain& a, const Cochain& b);

/// Sum of all facets of a pure complex, flagged as a cycle when its
/// boundary vanishes.
FundamentalClass fundamental_class(const SimplicialComplex& k);

/// Parity of |support(a) and support(z)|. Degrees must match.
int pairing(const Cochain& a, const Chain& z);

/// The counting cochain on a pure complex of dimension d = 2m: each m-face
/// maps to the parity of the number of facets disjoint from it.
Cochain counting_cochain(const SimplicialComplex& k, int m);

/// Restrict a cocycle to the full subcomplex on s and test whether the
/// restriction is *not* a coboundary there.
bool class_nonzero_on(const SimplicialComplex& k, const Cochain& a, FaceSet s);

}  // namespace bier
