// Shared fixtures and independent oracles for the test suites. Everything
// here deliberately avoids the library's fast paths: Betti numbers come from
// explicit kernel/image bases over dense GF(2) arrays, face scans call
// SimplicialComplex::is_face directly, and enumerations are exhaustive.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "biercert/certify.hpp"
#include "biercert/simplicial_complex.hpp"

namespace bier::testing {

// ---------------------------------------------------------------------------
// fixtures

inline SimplicialComplex isolated_points(int n) {
    std::vector<FaceSet> facets;
    for (int v = 1; v <= n; ++v) facets.push_back(FaceSet::of({v}));
    return SimplicialComplex::from_facets(n, std::move(facets));
}

inline SimplicialComplex octahedron_boundary() { return cross_polytope_boundary(3); }

inline const SimplicialComplex& rp2_6() {
    static const SimplicialComplex k = search_complementarity_surfaces().front();
    return k;
}

// ---------------------------------------------------------------------------
// random generation (fixed seeds at the call sites keep runs reproducible)

inline FaceSet random_nonempty_face(std::mt19937_64& rng, int n) {
    const std::uint64_t full = FaceSet::full(n).bits;
    std::uint64_t m = 0;
    while (m == 0) m = rng() & full;
    return FaceSet::from_mask(m);
}

inline SimplicialComplex random_complex(std::mt19937_64& rng, int n, int max_facets = 0) {
    const int cap = max_facets > 0 ? max_facets : n + 3;
    const int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cap));
    std::vector<FaceSet> facets;
    for (int i = 0; i < count; ++i) facets.push_back(random_nonempty_face(rng, n));
    return SimplicialComplex::from_facets(n, std::move(facets));
}

// proper: neither void nor the full simplex (valid Bier-sphere input)
inline SimplicialComplex random_proper_complex(std::mt19937_64& rng, int n) {
    while (true) {
        SimplicialComplex k = random_complex(rng, n);
        if (!(k.facets().size() == 1 && k.facets()[0] == FaceSet::full(n))) return k;
    }
}

// ---------------------------------------------------------------------------
// naive f-vector: scan all 2^n subsets against is_face

inline FVector naive_f_vector(const SimplicialComplex& k) {
    FVector f;
    const std::uint64_t full = FaceSet::full(k.n()).bits;
    for (std::uint64_t m = 1; m <= full; ++m) {
        if (!k.is_face(FaceSet::from_mask(m))) continue;
        const std::size_t dim = static_cast<std::size_t>(std::popcount(m) - 1);
        if (f.size() <= dim) f.resize(dim + 1, 0);
        ++f[dim];
    }
    return f;
}

// ---------------------------------------------------------------------------
// naive Betti numbers: explicit kernel and image bases over dense GF(2)
// arrays, independent of the packed-row matrix code

using DenseZ2 = std::vector<std::vector<std::uint8_t>>;  // row-major

inline std::vector<FaceSet> naive_faces(const SimplicialComplex& k, int dim) {
    std::vector<FaceSet> out;
    const std::uint64_t full = FaceSet::full(k.n()).bits;
    for (std::uint64_t m = 1; m <= full; ++m)
        if (std::popcount(m) == dim + 1 && k.is_face(FaceSet::from_mask(m)))
            out.push_back(FaceSet::from_mask(m));
    return out;
}

inline DenseZ2 naive_boundary(const std::vector<FaceSet>& rows, const std::vector<FaceSet>& cols) {
    DenseZ2 m(rows.size(), std::vector<std::uint8_t>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::uint64_t t = cols[c].bits; t; t &= t - 1) {
            const FaceSet sub = FaceSet::from_mask(cols[c].bits ^ (t & -t));
            const auto it = std::lower_bound(rows.begin(), rows.end(), sub);
            m[static_cast<std::size_t>(it - rows.begin())][c] = 1;
        }
    return m;
}

// reduced row echelon form; returns pivot column per pivot row
inline std::vector<int> dense_rref(DenseZ2& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && !m[p][c]) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m[i][c])
                for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

// basis of the null space of m (as column vectors)
inline std::vector<std::vector<std::uint8_t>> dense_kernel_basis(DenseZ2 m, std::size_t cols) {
    const std::vector<int> pivots = dense_rref(m);
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
    std::vector<std::vector<std::uint8_t>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint8_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (!m[r].empty() && m[r][free]) v[static_cast<std::size_t>(pivots[r])] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

// maximal independent subset of the columns of m (as column vectors)
inline std::vector<std::vector<std::uint8_t>> dense_column_space_basis(const DenseZ2& m) {
    std::vector<std::vector<std::uint8_t>> basis;
    if (m.empty()) return basis;
    const std::size_t rows = m.size(), cols = m[0].size();
    DenseZ2 stacked;  // grows one candidate at a time; rank checked incrementally
    for (std::size_t c = 0; c < cols; ++c) {
        std::vector<std::uint8_t> col(rows);
        for (std::size_t r = 0; r < rows; ++r) col[r] = m[r][c];
        DenseZ2 trial = stacked;
        trial.push_back(col);
        DenseZ2 probe = trial;
        if (dense_rref(probe).size() == trial.size()) {
            stacked = std::move(trial);
            basis.push_back(std::move(col));
        }
    }
    return basis;
}

inline std::vector<std::uint8_t> dense_apply(const DenseZ2& m, const std::vector<std::uint8_t>& v) {
    std::vector<std::uint8_t> out(m.size(), 0);
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) out[r] ^= m[r][c] & v[c];
    return out;
}

/// Betti numbers from explicit kernel/image bases; also verifies that every
/// image vector lies in the kernel.
inline std::vector<std::int64_t> naive_betti(const SimplicialComplex& k) {
    const int d = k.dimension();
    if (d < 0) return {};
    std::vector<std::vector<FaceSet>> faces;
    for (int i = 0; i <= d; ++i) faces.push_back(naive_faces(k, i));
    std::vector<std::int64_t> betti;
    for (int i = 0; i <= d; ++i) {
        const std::size_t fi = faces[static_cast<std::size_t>(i)].size();
        std::vector<std::vector<std::uint8_t>> kernel;
        if (i == 0) {
            for (std::size_t j = 0; j < fi; ++j) {
                std::vector<std::uint8_t> v(fi, 0);
                v[j] = 1;
                kernel.push_back(std::move(v));
            }
        } else {
            kernel = dense_kernel_basis(
                naive_boundary(faces[static_cast<std::size_t>(i - 1)], faces[static_cast<std::size_t>(i)]), fi);
        }
        std::vector<std::vector<std::uint8_t>> image;
        if (i < d) {
            const DenseZ2 next = naive_boundary(faces[static_cast<std::size_t>(i)],
                                                faces[static_cast<std::size_t>(i + 1)]);
            image = dense_column_space_basis(next);
            if (i > 0) {
                const DenseZ2 here = naive_boundary(faces[static_cast<std::size_t>(i - 1)],
                                                    faces[static_cast<std::size_t>(i)]);
                for (const auto& v : image) {
                    const auto w = dense_apply(here, v);
                    for (std::uint8_t x : w)
                        if (x) throw std::logic_error("image vector escapes the kernel");
                }
            }
        }
        betti.push_back(static_cast<std::int64_t>(kernel.size()) -
                        static_cast<std::int64_t>(image.size()));
    }
    return betti;
}

// ---------------------------------------------------------------------------
// exhaustive complex enumeration (all downward-closed families on [n])

inline std::vector<SimplicialComplex> all_complexes(int n) {
    std::vector<std::uint64_t> order;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) order.push_back(m);
    std::stable_sort(order.begin(), order.end(),
                     [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });

    std::vector<SimplicialComplex> out;
    out.push_back(SimplicialComplex::from_facets(n, {}));  // the void complex

    std::vector<char> face(std::size_t{1} << n, 0);
    face[0] = 1;
    const std::function<void(std::size_t)> walk = [&](std::size_t idx) {
        if (idx == order.size()) {
            std::vector<FaceSet> facets;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                if (!face[m]) continue;
                bool maximal = true;
                for (int v = 0; v < n && maximal; ++v)
                    if (!(m >> v & 1) && face[m | std::uint64_t{1} << v]) maximal = false;
                if (maximal) facets.push_back(FaceSet::from_mask(m));
            }
            out.push_back(SimplicialComplex::from_facets(n, std::move(facets)));
            return;
        }
        const std::uint64_t m = order[idx];
        walk(idx + 1);  // m stays a nonface
        bool closed = true;
        for (std::uint64_t t = m; closed && t; t &= t - 1)
            if (!face[m ^ (t & -t)]) closed = false;
        if (closed) {
            face[m] = 1;
            walk(idx + 1);
            face[m] = 0;
        }
    };
    walk(0);
    return out;
}

// ---------------------------------------------------------------------------
// exhaustive enumeration of the complexes satisfying complementarity on [n]:
// backtracking over complement pairs with closure propagation

inline std::vector<SimplicialComplex> complementarity_complexes(int n) {
    const std::uint64_t full = FaceSet::full(n).bits;
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<signed char> state(count, -1);  // -1 undecided, 0 nonface, 1 face
    std::vector<std::uint64_t> trail;

    const std::function<bool(std::uint64_t, bool)> assign = [&](std::uint64_t m, bool value) {
        if (state[m] != -1) return state[m] == static_cast<signed char>(value);
        state[m] = static_cast<signed char>(value);
        trail.push_back(m);
        if (!assign(full & ~m, !value)) return false;  // exactly-one pairing
        if (value) {
            for (std::uint64_t t = m; t; t &= t - 1)
                if (!assign(m ^ (t & -t), true)) return false;  // downward closure
        } else {
            for (std::uint64_t t = full & ~m; t; t &= t - 1)
                if (!assign(m | (t & -t), false)) return false;  // upward closure
        }
        return true;
    };

    std::vector<SimplicialComplex> out;
    const std::function<void()> walk = [&]() {
        std::uint64_t next = count;
        for (std::uint64_t m = 0; m < count; ++m)
            if (state[m] == -1) { next = m; break; }
        if (next == count) {
            std::vector<FaceSet> facets;
            for (std::uint64_t m = 0; m < count; ++m) {
                if (state[m] != 1) continue;
                bool maximal = true;
                for (std::uint64_t t = full & ~m; maximal && t; t &= t - 1)
                    if (state[m | (t & -t)] == 1) maximal = false;
                if (maximal) facets.push_back(FaceSet::from_mask(m));
            }
            out.push_back(SimplicialComplex::from_facets(n, std::move(facets)));
            return;
        }
        for (bool value : {true, false}) {
            const std::size_t mark = trail.size();
            if (assign(next, value)) walk();
            while (trail.size() > mark) {
                state[trail.back()] = -1;
                trail.pop_back();
            }
        }
    };
    walk();
    std::sort(out.begin(), out.end(), [](const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.facets() < b.facets();
    });
    return out;
}

}  // namespace bier::testing
