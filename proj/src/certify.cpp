#include "biercert/certify.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "biercert/cochain.hpp"
#include "biercert/dual_join.hpp"
#include "biercert/errors.hpp"
#include "biercert/face_table.hpp"
#include "biercert/parallel.hpp"

namespace bier {

ComplementarityResult complementarity_check(const SimplicialComplex& k, int threads) {
    const FaceTable table(k);
    const std::uint64_t full = FaceSet::full(k.n()).bits;
    const std::uint64_t total = table.subset_count();
    const int nthreads = resolve_thread_count(threads);

    struct ChunkResult {
        std::uint64_t first_fail = ~std::uint64_t{0};
        bool both = false;
    };
    std::vector<ChunkResult> results(static_cast<std::size_t>(nthreads));
    parallel_chunks(total, nthreads, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
        auto& mine = results[static_cast<std::size_t>(chunk)];
        for (std::uint64_t m = begin; m < end; ++m) {
            const bool a = table.is_face(m);
            const bool b = table.is_face(full & ~m);
            if (a == b) {
                mine.first_fail = m;
                mine.both = a;
                break;
            }
        }
    });
    ComplementarityResult out;
    out.holds = true;
    for (const auto& r : results)
        if (r.first_fail != ~std::uint64_t{0}) {
            if (out.holds || r.first_fail < out.witness->bits) {
                out.holds = false;
                out.witness = FaceSet::from_mask(r.first_fail);
                out.witness_both_faces = r.both;
            }
        }
    return out;
}

KneserGraph kneser_graph(const SetSystem& family) {
    const std::size_t v = family.members.size();
    if (v > 20000) throw ResourceLimitError("set system too large for the pairwise disjointness scan");
    KneserGraph g;
    g.family = family;
    g.adjacency.assign(v, {});
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            if (family.members[i].disjoint_with(family.members[j])) {
                g.adjacency[i].push_back(static_cast<int>(j));
                g.adjacency[j].push_back(static_cast<int>(i));
                ++g.edge_count;
            }
    return g;
}

int chromatic_upper(const KneserGraph& g) {
    const int v = static_cast<int>(g.family.members.size());
    if (v == 0) return 0;
    std::vector<int> order(static_cast<std::size_t>(v));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.adjacency[static_cast<std::size_t>(a)].size() >
               g.adjacency[static_cast<std::size_t>(b)].size();
    });
    std::vector<int> color(static_cast<std::size_t>(v), -1);
    int used = 0;
    std::vector<char> taken;
    for (int u : order) {
        taken.assign(static_cast<std::size_t>(used + 1), 0);
        for (int w : g.adjacency[static_cast<std::size_t>(u)])
            if (color[static_cast<std::size_t>(w)] >= 0)
                taken[static_cast<std::size_t>(color[static_cast<std::size_t>(w)])] = 1;
        int c = 0;
        while (taken[static_cast<std::size_t>(c)]) ++c;
        color[static_cast<std::size_t>(u)] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

std::optional<int> chromatic_exact(const KneserGraph& g, int max_vertices) {
    const int v = static_cast<int>(g.family.members.size());
    if (v == 0) return 0;
    if (g.edge_count == 0) return 1;
    if (v > max_vertices || v > 64) return std::nullopt;

    // reindex in degree-descending order; adjacency as single-word masks
    std::vector<int> order(static_cast<std::size_t>(v));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.adjacency[static_cast<std::size_t>(a)].size() >
               g.adjacency[static_cast<std::size_t>(b)].size();
    });
    std::vector<int> position(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(v), 0);
    for (int old = 0; old < v; ++old)
        for (int w : g.adjacency[static_cast<std::size_t>(old)])
            adj[static_cast<std::size_t>(position[static_cast<std::size_t>(old)])] |=
                std::uint64_t{1} << position[static_cast<std::size_t>(w)];

    // greedy clique along the order, for the lower bound
    int clique = 0;
    {
        std::uint64_t candidates = v == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v) - 1;
        while (candidates) {
            const int u = std::countr_zero(candidates);
            ++clique;
            candidates &= adj[static_cast<std::size_t>(u)];
        }
    }
    int best = chromatic_upper(g);
    if (best <= clique) return best;

    std::vector<int> color(static_cast<std::size_t>(v), -1);
    bool optimal = false;
    const std::function<void(int, int)> dfs = [&](int depth, int used) {
        if (optimal || used >= best) return;
        if (depth == v) {
            best = used;
            if (best <= clique) optimal = true;
            return;
        }
        for (int c = 0; c <= used && c < best - 1; ++c) {
            bool clash = false;
            for (std::uint64_t t = adj[static_cast<std::size_t>(depth)]; t; t &= t - 1)
                if (color[static_cast<std::size_t>(std::countr_zero(t))] == c) { clash = true; break; }
            if (clash) continue;
            color[static_cast<std::size_t>(depth)] = c;
            dfs(depth + 1, std::max(used, c + 1));
            color[static_cast<std::size_t>(depth)] = -1;
            if (optimal) return;
        }
    };
    dfs(0, 0);
    return best;
}

namespace {

SarkariaBound sarkaria_from_family(int n, const SetSystem& family, const CertifyOptions& opts) {
    SarkariaBound out;
    out.nonface_count = static_cast<std::int64_t>(family.members.size());
    if (family.members.empty()) {
        out.chi_source = "degenerate";
        return out;  // the full simplex: the coloring route claims nothing
    }
    const KneserGraph g = kneser_graph(family);
    out.kneser_edges = g.edge_count;
    const int upper = chromatic_upper(g);
    const std::optional<int> exact = chromatic_exact(g, opts.exact_chi_limit);
    if (exact) {
        out.chi = *exact;
        out.chi_source = "exact";
    } else {
        out.chi = upper;
        out.chi_source = "greedy";
    }
    out.bound = n - out.chi - 1;
    return out;
}

}  // namespace

SarkariaBound sarkaria_bound(const SimplicialComplex& k, const CertifyOptions& opts) {
    return sarkaria_from_family(k.n(), minimal_nonfaces(k), opts);
}

namespace {

std::string sarkaria_trail(int n, const SarkariaBound& s) {
    if (!s.bound)
        return "sarkaria: no minimal nonfaces; coloring route inapplicable";
    return "sarkaria: |F|=" + std::to_string(s.nonface_count) +
           ", kneser edges=" + std::to_string(s.kneser_edges) + ", chi=" + std::to_string(s.chi) +
           " (" + s.chi_source + "); index >= " + std::to_string(n) + "-" + std::to_string(s.chi) +
           "-1 = " + std::to_string(*s.bound);
}

std::string bier_trail(int n, bool self_dual) {
    if (!self_dual) return "bier: K differs from its alexander dual; sphere route inapplicable";
    return "bier: K equals its alexander dual; the deleted self-join is a combinatorial " +
           std::to_string(n - 2) + "-sphere; index >= " + std::to_string(n - 2);
}

std::string conclusion_trail(const std::optional<int>& index) {
    if (!index || *index < 1) return "conclusion: no obstruction found";
    return "conclusion: index of the deleted self-join >= " + std::to_string(*index) +
           "; the deleted join of E^d has index d, so every continuous map into E^d with d < " +
           std::to_string(*index) + " identifies points of two disjoint faces";
}

}  // namespace

Certificate nonembeddability_report(const SimplicialComplex& k, const CertifyOptions& opts) {
    Certificate cert;
    cert.n = k.n();
    cert.kind = k.kind();
    if (k.kind() != ComplexKind::Void) cert.dim = k.dimension();

    const ComplementarityResult comp = complementarity_check(k, opts.threads);
    cert.complementarity = comp.holds;
    cert.complementarity_witness = comp.witness;
    cert.witness_both_faces = comp.witness_both_faces;
    cert.self_dual = is_self_dual(k);
    if (cert.complementarity != cert.self_dual)
        throw std::logic_error("complementarity and self-duality disagree");

    if (k.kind() == ComplexKind::Void) {
        cert.method_trail = {"degenerate: the void complex yields no obstruction",
                             conclusion_trail(std::nullopt)};
        return cert;
    }

    const SetSystem family = minimal_nonfaces(k);
    const SarkariaBound sark = sarkaria_from_family(k.n(), family, opts);
    cert.nonface_count = sark.nonface_count;
    cert.kneser_edges = sark.kneser_edges;
    int smallest_nonface = k.n() + 1;
    for (FaceSet f : family.members) smallest_nonface = std::min(smallest_nonface, f.size());
    cert.neighborliness = smallest_nonface - 1;
    cert.sarkaria_lower = sark.bound;
    cert.chi_used = sark.chi_source;
    if (sark.bound) {
        const KneserGraph g = kneser_graph(family);
        cert.chi_upper = chromatic_upper(g);
        cert.chi_exact = chromatic_exact(g, opts.exact_chi_limit);
    }
    if (cert.self_dual) cert.bier_lower = k.n() - 2;

    if (cert.sarkaria_lower || cert.bier_lower)
        cert.index_lower = std::max(cert.sarkaria_lower.value_or(INT_MIN),
                                    cert.bier_lower.value_or(INT_MIN));
    for (int d = 0; cert.index_lower && d < *cert.index_lower; ++d)
        cert.nonembeddable_dims.push_back(d);

    cert.method_trail = {sarkaria_trail(k.n(), sark), bier_trail(k.n(), cert.self_dual),
                         conclusion_trail(cert.index_lower)};
    return cert;
}

IndexBound index_lower_bound(const SimplicialComplex& k, const CertifyOptions& opts) {
    const Certificate cert = nonembeddability_report(k, opts);
    return IndexBound{cert.index_lower, cert.method_trail};
}

Prop32Result prop32_equivalence(const SimplicialComplex& k, int m) {
    if (m < 1) throw InputError("the degree parameter must be positive");
    if (m > 1)
        throw UnsupportedError("induced-sphere enumeration is implemented for m = 1 only");
    if (k.kind() != ComplexKind::Standard || !k.is_pure() || k.dimension() != 2)
        throw InputError("m = 1 requires a pure 2-dimensional complex");
    if (k.n() > 20) throw ResourceLimitError("vertex-subset scan capped at 20 vertices");

    const Cochain counting = counting_cochain(k, 1);
    const FaceTable table(k);
    const int n = k.n();

    Prop32Result out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        if (std::popcount(s) < 3) continue;
        // the full subcomplex on s must be a single cycle: every vertex of s
        // present with exactly two incident edges, no triangle, connected
        bool candidate = true;
        for (std::uint64_t t = s; candidate && t; t &= t - 1)
            if (!table.is_face(t & -t)) candidate = false;
        if (!candidate) continue;
        for (FaceSet facet : k.facets())
            if (facet.subset_of(FaceSet::from_mask(s))) { candidate = false; break; }
        if (!candidate) continue;

        std::vector<int> verts = FaceSet::from_mask(s).labels();
        std::vector<FaceSet> edges;
        std::unordered_map<int, int> degree;
        for (std::size_t i = 0; i < verts.size() && candidate; ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                const FaceSet e = FaceSet::of({verts[i], verts[j]});
                if (table.is_face(e.bits)) {
                    edges.push_back(e);
                    ++degree[verts[i]];
                    ++degree[verts[j]];
                }
            }
        for (int v : verts)
            if (degree[v] != 2) { candidate = false; break; }
        if (!candidate) continue;
        // connectivity walk along the cycle edges
        std::unordered_map<int, std::vector<int>> adj;
        for (FaceSet e : edges) {
            const auto l = e.labels();
            adj[l[0]].push_back(l[1]);
            adj[l[1]].push_back(l[0]);
        }
        std::vector<int> stack = {verts[0]};
        std::unordered_map<int, bool> seen = {{verts[0], true}};
        std::size_t reached = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != verts.size()) continue;

        ++out.spheres_checked;
        int lhs = 0;
        for (FaceSet e : edges)
            if (std::binary_search(counting.support.begin(), counting.support.end(), e)) lhs ^= 1;
        bool rhs = false;
        for (FaceSet facet : k.facets())
            if (facet.disjoint_with(FaceSet::from_mask(s))) { rhs = true; break; }
        if ((lhs == 1) != rhs) {
            out.holds = false;
            if (!out.first_violation) out.first_violation = FaceSet::from_mask(s);
        }
    }
    return out;
}

std::vector<SimplicialComplex> search_complementarity_surfaces() {
    const int n = 6;
    const FaceSet full = FaceSet::full(n);
    // the ten complementary triple pairs, keyed by the triple containing vertex 1
    std::vector<std::pair<FaceSet, FaceSet>> pairs;
    for (std::uint64_t m = 0; m <= full.bits; ++m)
        if (std::popcount(m) == 3 && (m & 1))
            pairs.emplace_back(FaceSet::from_mask(m), FaceSet::from_mask(full.bits & ~m));

    std::vector<SimplicialComplex> results;
    for (std::uint32_t sel = 0; sel < (1u << pairs.size()); ++sel) {
        std::vector<FaceSet> facets;
        facets.reserve(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i)
            facets.push_back(sel >> i & 1 ? pairs[i].second : pairs[i].first);
        SimplicialComplex k = SimplicialComplex::from_facets(n, std::move(facets));
        if (is_weak_pseudomanifold(k) && is_connected(k)) results.push_back(std::move(k));
    }
    std::sort(results.begin(), results.end(),
              [](const SimplicialComplex& a, const SimplicialComplex& b) {
                  return a.facets() < b.facets();
              });
    return results;
}

}  // namespace bier
