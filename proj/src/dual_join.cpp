#include "biercert/dual_join.hpp"

#include <algorithm>
#include <string>

#include "biercert/errors.hpp"
#include "biercert/face_table.hpp"
#include "biercert/parallel.hpp"

namespace bier {

FaceSet JoinedComplex::swap_copies(FaceSet f) const {
    if (factor1_n != factor2_n)
        throw InputError("label swap needs equal factor sizes");
    const std::uint64_t low = FaceSet::full(factor1_n).bits;
    return FaceSet::from_mask(((f.bits & low) << factor1_n) | (f.bits >> factor1_n & low));
}

SimplicialComplex alexander_dual(const SimplicialComplex& k) {
    if (k.kind() == ComplexKind::Void) {
        // every subset is a nonface, so the dual is the full simplex
        return SimplicialComplex::from_facets(k.n(), {FaceSet::full(k.n())});
    }
    // maximal complements of nonfaces are the complements of minimal nonfaces
    const SetSystem nonfaces = minimal_nonfaces(k);
    std::vector<FaceSet> facets;
    facets.reserve(nonfaces.members.size());
    for (FaceSet m : nonfaces.members) facets.push_back(m.complement_in(k.n()));
    return SimplicialComplex::from_facets(k.n(), std::move(facets));
}

bool is_self_dual(const SimplicialComplex& k) { return alexander_dual(k) == k; }

JoinedComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.kind() == ComplexKind::Void || b.kind() == ComplexKind::Void)
        throw InputError("join factors must be non-void");
    const int n = a.n() + b.n();
    if (n > FaceSet::max_vertices)
        throw InputError("joined ground set exceeds the 63-vertex cap");
    std::vector<FaceSet> facets;
    facets.reserve(a.facets().size() * b.facets().size());
    for (FaceSet fa : a.facets())
        for (FaceSet fb : b.facets())
            facets.push_back(FaceSet::from_mask(fa.bits | fb.bits << a.n()));
    // unions of antichains over disjoint copies stay an antichain
    std::sort(facets.begin(), facets.end());
    return JoinedComplex{from_antichain_unchecked(n, std::move(facets)), a.n(), b.n()};
}

namespace {

constexpr int kDeletedJoinMaterializeCap = 16;

void check_same_ground(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.n() != b.n())
        throw InputError("deleted join factors must share a ground set (" +
                         std::to_string(a.n()) + " vs " + std::to_string(b.n()) + ")");
}

}  // namespace

JoinedComplex deleted_join(const SimplicialComplex& a, const SimplicialComplex& b) {
    check_same_ground(a, b);
    const int n = a.n();
    if (2 * n > FaceSet::max_vertices)
        throw InputError("joined ground set exceeds the 63-vertex cap");
    if (a.kind() == ComplexKind::Void || b.kind() == ComplexKind::Void)
        return JoinedComplex{SimplicialComplex::from_facets(2 * n, {}), n, n};
    if (n > kDeletedJoinMaterializeCap)
        throw ResourceLimitError("deleted-join facets are only materialised up to n=" +
                                 std::to_string(kDeletedJoinMaterializeCap) +
                                 "; use deleted_join_f_vector for counting");
    const FaceTable ta(a), tb(b);
    const std::uint64_t full = FaceSet::full(n).bits;
    std::vector<FaceSet> facets;
    for (std::uint64_t f1 = 0; f1 <= full; ++f1) {
        if (!ta.is_face(f1)) continue;
        const std::uint64_t comp = full & ~f1;
        for (std::uint64_t f2 = comp;; f2 = (f2 - 1) & comp) {
            if (tb.is_face(f2)) {
                bool maximal = true;
                for (std::uint64_t t = comp & ~f2; t; t &= t - 1) {
                    const std::uint64_t v = t & -t;
                    if (ta.is_face(f1 | v) || tb.is_face(f2 | v)) { maximal = false; break; }
                }
                if (maximal) facets.push_back(FaceSet::from_mask(f1 | f2 << n));
            }
            if (!f2) break;
        }
    }
    std::sort(facets.begin(), facets.end());
    return JoinedComplex{from_antichain_unchecked(2 * n, std::move(facets)), n, n};
}

JoinedComplex bier_sphere(int n, const SimplicialComplex& k) {
    if (n != k.n())
        throw InputError("ground-set size does not match the complex");
    if (k.kind() == ComplexKind::Void)
        throw InputError("the void complex has no Bier sphere");
    if (k.kind() == ComplexKind::Standard && k.facets().size() == 1 &&
        k.facets()[0] == FaceSet::full(n))
        throw InputError("the full simplex has no Bier sphere (its dual is void)");
    return deleted_join(k, alexander_dual(k));
}

FVector deleted_join_f_vector(const SimplicialComplex& a, const SimplicialComplex& b,
                              int threads) {
    check_same_ground(a, b);
    const int n = a.n();
    if (a.kind() == ComplexKind::Void || b.kind() == ComplexKind::Void) return {};
    const FaceTable ta(a), tb(b);
    const std::vector<FaceSet> faces_a = ta.all_faces();
    const std::uint64_t full = FaceSet::full(n).bits;
    const int nthreads = resolve_thread_count(threads);

    // pair_count[i][j]: ordered pairs of disjoint faces with sizes i and j
    std::vector<std::vector<std::int64_t>> totals(
        static_cast<std::size_t>(n + 1), std::vector<std::int64_t>(static_cast<std::size_t>(n + 1), 0));

    if (n <= 16) {
        // subset-sum table: inside[mask][s] = number of faces of b of size s within mask
        const std::size_t width = static_cast<std::size_t>(n + 1);
        std::vector<std::uint32_t> inside((std::size_t{1} << n) * width, 0);
        for (std::uint64_t m = 0; m <= full; ++m)
            if (tb.is_face(m)) inside[static_cast<std::size_t>(m) * width +
                                      static_cast<std::size_t>(std::popcount(m))] = 1;
        for (int bit = 0; bit < n; ++bit) {
            const std::uint64_t step = std::uint64_t{1} << bit;
            for (std::uint64_t m = 0; m <= full; ++m) {
                if (!(m & step)) continue;
                const std::size_t dst = static_cast<std::size_t>(m) * width;
                const std::size_t src = static_cast<std::size_t>(m ^ step) * width;
                for (std::size_t s = 0; s < width; ++s) inside[dst + s] += inside[src + s];
            }
        }
        std::vector<std::vector<std::vector<std::int64_t>>> local(
            static_cast<std::size_t>(nthreads), totals);
        parallel_chunks(faces_a.size(), nthreads,
                        [&](int chunk, std::uint64_t begin, std::uint64_t end) {
                            auto& mine = local[static_cast<std::size_t>(chunk)];
                            for (std::uint64_t i = begin; i < end; ++i) {
                                const FaceSet f = faces_a[static_cast<std::size_t>(i)];
                                const std::size_t row =
                                    static_cast<std::size_t>(full & ~f.bits) * width;
                                auto& out = mine[static_cast<std::size_t>(f.size())];
                                for (std::size_t s = 0; s < width; ++s) out[s] += inside[row + s];
                            }
                        });
        for (const auto& mine : local)
            for (std::size_t i = 0; i < mine.size(); ++i)
                for (std::size_t j = 0; j < mine[i].size(); ++j) totals[i][j] += mine[i][j];
    } else {
        const std::vector<FaceSet> faces_b = tb.all_faces();
        if (static_cast<std::uint64_t>(faces_a.size()) * faces_b.size() > (std::uint64_t{1} << 33))
            throw ResourceLimitError("too many face pairs to count");
        std::vector<std::vector<std::vector<std::int64_t>>> local(
            static_cast<std::size_t>(nthreads), totals);
        parallel_chunks(faces_a.size(), nthreads,
                        [&](int chunk, std::uint64_t begin, std::uint64_t end) {
                            auto& mine = local[static_cast<std::size_t>(chunk)];
                            for (std::uint64_t i = begin; i < end; ++i) {
                                const FaceSet f = faces_a[static_cast<std::size_t>(i)];
                                auto& out = mine[static_cast<std::size_t>(f.size())];
                                for (FaceSet g : faces_b)
                                    if (f.disjoint_with(g)) ++out[static_cast<std::size_t>(g.size())];
                            }
                        });
        for (const auto& mine : local)
            for (std::size_t i = 0; i < mine.size(); ++i)
                for (std::size_t j = 0; j < mine[i].size(); ++j) totals[i][j] += mine[i][j];
    }

    FVector f(static_cast<std::size_t>(2 * n), 0);
    int top = -1;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const int dim = i + j - 1;
            if (dim < 0 || totals[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0)
                continue;
            f[static_cast<std::size_t>(dim)] +=
                totals[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            top = std::max(top, dim);
        }
    f.resize(static_cast<std::size_t>(top + 1));
    return f;
}

}  // namespace bier
