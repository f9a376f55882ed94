#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biercert/simplicial_complex.hpp"

namespace bier {

struct CertifyOptions {
    int exact_chi_limit = 32;  // exact coloring only up to this many Kneser vertices
    int threads = 0;           // 0: BIERCERT_THREADS env var, else hardware parallelism
};

struct ComplementarityResult {
    bool holds = false;
    std::optional<FaceSet> witness;  // first failing subset in canonical order
    bool witness_both_faces = false; // witness and its complement are both faces / neither
};

/// Exactly one of S and its complement is a face, for every S in 2^[n].
ComplementarityResult complementarity_check(const SimplicialComplex& k, int threads = 0);

/// Disjointness graph of a set system: vertices are the members, edges join
/// disjoint pairs.
struct KneserGraph {
    SetSystem family;
    std::vector<std::vector<int>> adjacency;  // indices into family.members
    std::int64_t edge_count = 0;
};

KneserGraph kneser_graph(const SetSystem& family);

/// Greedy coloring in degree-descending order; an upper bound for chi.
/// Graphs without edges have chromatic number 1 (0 when empty).
int chromatic_upper(const KneserGraph& g);

/// Exact chromatic number by branch and bound with a greedy clique lower
/// bound. Returns nullopt above max_vertices (edgeless graphs short-circuit
/// at any size).
std::optional<int> chromatic_exact(const KneserGraph& g, int max_vertices = 32);

struct SarkariaBound {
    std::optional<int> bound;  // n - chi - 1; nullopt when there is no nonface
    int chi = 0;
    std::string chi_source;    // "exact" | "greedy" | "degenerate"
    std::int64_t nonface_count = 0;
    std::int64_t kneser_edges = 0;
};

/// Coloring bound on the free-involution index of the deleted self-join:
/// n - chi(KG(minimal nonfaces)) - 1. Any upper bound on chi keeps the
/// bound valid, so the greedy value is used when the exact solver is out of
/// reach.
SarkariaBound sarkaria_bound(const SimplicialComplex& k, const CertifyOptions& opts = {});

/// The assembled nonembeddability certificate. index_lower is a certified
/// lower bound for the free-involution index of the deleted self-join;
/// every continuous map of the complex into E^d with d < index_lower must
/// identify points of two disjoint faces, so no embedding into those
/// dimensions exists. Degenerate inputs yield "no obstruction found", never
/// an over-claim.
struct Certificate {
    int n = 0;
    std::optional<int> dim;  // absent for the void complex
    ComplexKind kind = ComplexKind::Void;
    bool complementarity = false;
    std::optional<FaceSet> complementarity_witness;
    bool witness_both_faces = false;
    bool self_dual = false;
    int neighborliness = 0;  // largest k with every k-subset a face
    std::int64_t nonface_count = 0;
    std::int64_t kneser_edges = 0;
    int chi_upper = 0;
    std::optional<int> chi_exact;
    std::string chi_used = "degenerate";  // "exact" | "greedy" | "degenerate"
    std::optional<int> sarkaria_lower;
    std::optional<int> bier_lower;   // n - 2, present iff self-dual
    std::optional<int> index_lower;  // max of the available routes
    std::vector<int> nonembeddable_dims;  // all d with 0 <= d < index_lower
    std::vector<std::string> method_trail;
};

Certificate nonembeddability_report(const SimplicialComplex& k, const CertifyOptions& opts = {});

struct IndexBound {
    std::optional<int> value;
    std::vector<std::string> trail;
};

/// max(Sarkaria route, Bier route); the trail records both attempts.
IndexBound index_lower_bound(const SimplicialComplex& k, const CertifyOptions& opts = {});

struct Prop32Result {
    bool holds = true;
    int spheres_checked = 0;
    std::optional<FaceSet> first_violation;  // vertex set of the offending sphere
};

/// For a pure complex of dimension 2m, checks over every induced 1-sphere S
/// (full subcomplex that is a single cycle) whether
///   <counting cochain, [S]> = 1  <=>  some facet is disjoint from S.
/// Implemented for m = 1 only; larger m signals UnsupportedError.
Prop32Result prop32_equivalence(const SimplicialComplex& k, int m);

/// Enumerates the 2^10 ways of picking one triangle from each complementary
/// triple pair of [6] and keeps the selections that are closed connected
/// surfaces. Every result satisfies complementarity by construction; the
/// list is canonically ordered.
std::vector<SimplicialComplex> search_complementarity_surfaces();

}  // namespace bier
