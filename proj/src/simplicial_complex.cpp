#include "biercert/simplicial_complex.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "biercert/errors.hpp"
#include "biercert/face_table.hpp"

namespace bier {

std::string FaceSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : labels()) {
        if (!first) out += ' ';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

FaceSet face_from_labels(const std::vector<int>& labels, int n) {
    FaceSet f;
    for (int v : labels) {
        if (v < 1 || v > n)
            throw InputError("vertex label " + std::to_string(v) +
                             " outside the ground set [" + std::to_string(n) + "]");
        f = f.with(v);
    }
    return f;
}

std::string to_string(ComplexKind k) {
    switch (k) {
        case ComplexKind::Void: return "void";
        case ComplexKind::EmptyOnly: return "empty-only";
        case ComplexKind::Standard: return "standard";
    }
    return "?";
}

namespace {

void check_ground(int n) {
    if (n < 0) throw InputError("ground-set size must be nonnegative");
    if (n > FaceSet::max_vertices)
        throw InputError("ground-set size " + std::to_string(n) + " exceeds the 63-vertex cap");
}

// Keeps the maximal faces of `raw` in ascending mask order.
std::vector<FaceSet> antichain_reduce(std::vector<FaceSet> raw) {
    std::sort(raw.begin(), raw.end(),
              [](FaceSet a, FaceSet b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<FaceSet> kept;
    for (FaceSet f : raw) {
        bool dominated = false;
        for (FaceSet g : kept) {
            if (g.size() <= f.size()) break;  // kept is size-descending
            if (f.subset_of(g)) { dominated = true; break; }
        }
        if (!dominated) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return kept;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<FaceSet> raw) {
    check_ground(n);
    const FaceSet full = FaceSet::full(n);
    for (FaceSet f : raw)
        if (!f.subset_of(full))
            throw InputError("face " + f.to_string() + " outside the ground set [" +
                             std::to_string(n) + "]");
    SimplicialComplex k;
    k.n_ = n;
    if (raw.empty()) {
        k.kind_ = ComplexKind::Void;
        return k;
    }
    k.facets_ = antichain_reduce(std::move(raw));
    k.kind_ = (k.facets_.size() == 1 && k.facets_[0].empty()) ? ComplexKind::EmptyOnly
                                                              : ComplexKind::Standard;
    return k;
}

SimplicialComplex SimplicialComplex::from_vertex_lists(int n,
                                                       const std::vector<std::vector<int>>& raw) {
    check_ground(n);
    std::vector<FaceSet> faces;
    faces.reserve(raw.size());
    for (const auto& labels : raw) faces.push_back(face_from_labels(labels, n));
    return from_facets(n, std::move(faces));
}

SimplicialComplex from_antichain_unchecked(int n, std::vector<FaceSet> sorted_antichain) {
    SimplicialComplex k;
    k.n_ = n;
    k.facets_ = std::move(sorted_antichain);
    k.kind_ = k.facets_.empty() ? ComplexKind::Void
              : (k.facets_.size() == 1 && k.facets_[0].empty()) ? ComplexKind::EmptyOnly
                                                                : ComplexKind::Standard;
    return k;
}

int SimplicialComplex::dimension() const {
    if (kind_ == ComplexKind::Void) throw InputError("the void complex has no dimension");
    int d = -1;
    for (FaceSet f : facets_) d = std::max(d, f.size() - 1);
    return d;
}

bool SimplicialComplex::is_face(FaceSet s) const {
    if (kind_ == ComplexKind::Void) return false;
    for (FaceSet f : facets_)
        if (s.subset_of(f)) return true;
    return false;
}

bool SimplicialComplex::is_pure() const {
    if (facets_.empty()) return false;
    const int size = facets_[0].size();
    for (FaceSet f : facets_)
        if (f.size() != size) return false;
    return true;
}

namespace {

constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 27;

std::uint64_t subset_enumeration_cost(const SimplicialComplex& k) {
    std::uint64_t cost = 0;
    for (FaceSet f : k.facets()) {
        cost += std::uint64_t{1} << f.size();
        if (cost > kEnumerationBudget) return cost;
    }
    return cost;
}

}  // namespace

FVector f_vector(const SimplicialComplex& k) {
    if (k.kind() == ComplexKind::Void)
        throw InputError("the f-vector of the void complex is undefined");
    const int d = k.dimension();
    FVector f(static_cast<std::size_t>(std::max(d + 1, 0)), 0);
    if (d < 0) return f;
    if (k.n() <= FaceTable::max_ground) {
        FaceTable table(k);
        const std::uint64_t end = table.subset_count();
        for (std::uint64_t m = 1; m < end; ++m)
            if (table.is_face(m)) ++f[static_cast<std::size_t>(std::popcount(m) - 1)];
        return f;
    }
    if (subset_enumeration_cost(k) > kEnumerationBudget)
        throw ResourceLimitError("face enumeration too large (n > 24 and facet subsets exceed the budget)");
    std::unordered_set<std::uint64_t> seen;
    for (FaceSet facet : k.facets())
        for (std::uint64_t s = facet.bits;; s = (s - 1) & facet.bits) {
            if (s && seen.insert(s).second) ++f[static_cast<std::size_t>(std::popcount(s) - 1)];
            if (!s) break;
        }
    return f;
}

std::int64_t euler_characteristic(const SimplicialComplex& k) {
    std::int64_t chi = 0;
    int sign = 1;
    for (std::int64_t fi : f_vector(k)) {
        chi += sign * fi;
        sign = -sign;
    }
    return chi;
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, FaceSet s) {
    if (!s.subset_of(FaceSet::full(k.n())))
        throw InputError("vertex subset outside the ground set");
    if (k.kind() == ComplexKind::Void) return k;
    std::vector<FaceSet> cut;
    cut.reserve(k.facets().size());
    for (FaceSet f : k.facets()) cut.push_back(f.intersected(s));
    return SimplicialComplex::from_facets(k.n(), std::move(cut));
}

SimplicialComplex opposite_complex(const SimplicialComplex& k, FaceSet y) {
    if (!y.subset_of(FaceSet::full(k.n())))
        throw InputError("vertex subset outside the ground set");
    return full_subcomplex(k, y.complement_in(k.n()));
}

SetSystem minimal_nonfaces(const SimplicialComplex& k) {
    if (k.kind() == ComplexKind::Void)
        throw InputError("minimal nonfaces of the void complex are undefined");
    FaceTable table(k);
    std::vector<FaceSet> members;
    const std::uint64_t end = table.subset_count();
    for (std::uint64_t m = 1; m < end; ++m) {
        if (table.is_face(m)) continue;
        bool minimal = true;
        for (std::uint64_t t = m; t; t &= t - 1)
            if (!table.is_face(m ^ (t & -t))) { minimal = false; break; }
        if (minimal) members.push_back(FaceSet::from_mask(m));
    }
    return SetSystem{k.n(), std::move(members)};
}

namespace {

// Gosper's hack; iterates all size-k masks within [n] in ascending order.
template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
    if (k == 0) { fn(std::uint64_t{0}); return; }
    if (k > n) return;
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t m = (std::uint64_t{1} << k) - 1;
    while (m < limit) {
        fn(m);
        const std::uint64_t u = m & ~(m - 1);
        const std::uint64_t v = m + u;
        if (v >= limit) break;
        m = v | ((m ^ v) >> 2) / u;
    }
}

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (r > cap) return cap + 1;
    }
    return r;
}

}  // namespace

bool is_k_neighborly(const SimplicialComplex& k, int size) {
    if (size < 1) throw InputError("neighborliness parameter must be positive");
    if (size > k.n()) throw InputError("neighborliness parameter exceeds the ground set");
    if (k.kind() == ComplexKind::Void) return false;
    if (binomial_capped(k.n(), size, kEnumerationBudget) > kEnumerationBudget)
        throw ResourceLimitError("too many subsets to scan for neighborliness");
    bool all = true;
    for_each_combination(k.n(), size, [&](std::uint64_t m) {
        if (all && !k.is_face(FaceSet::from_mask(m))) all = false;
    });
    return all;
}

SimplicialComplex add_all_faces_of_size(const SimplicialComplex& k, int s) {
    if (s < 1) throw InputError("face size must be positive");
    if (s > k.n()) throw InputError("face size exceeds the ground set");
    if (binomial_capped(k.n(), s, kEnumerationBudget) > kEnumerationBudget)
        throw ResourceLimitError("too many subsets to add");
    std::vector<FaceSet> raw = k.facets();
    for_each_combination(k.n(), s, [&](std::uint64_t m) { raw.push_back(FaceSet::from_mask(m)); });
    return SimplicialComplex::from_facets(k.n(), std::move(raw));
}

namespace {

void require_pure(const SimplicialComplex& k, const char* op) {
    if (!k.is_pure())
        throw InputError(std::string(op) + " requires a pure complex");
}

}  // namespace

bool is_weak_pseudomanifold(const SimplicialComplex& k) {
    require_pure(k, "the pseudomanifold check");
    if (k.dimension() < 0) return true;  // no ridges at all
    if (k.dimension() == 0) {
        // the single ridge is the empty face, contained in every facet
        return k.facets().size() == 2;
    }
    std::unordered_map<std::uint64_t, int> ridge_count;
    for (FaceSet f : k.facets())
        for (std::uint64_t t = f.bits; t; t &= t - 1) ++ridge_count[f.bits ^ (t & -t)];
    for (const auto& [ridge, count] : ridge_count)
        if (count != 2) return false;
    return true;
}

bool is_connected(const SimplicialComplex& k) {
    require_pure(k, "the connectivity check");
    const auto& facets = k.facets();
    if (facets.size() <= 1) return true;
    if (k.dimension() == 0) return false;  // two or more isolated vertices
    std::unordered_map<std::uint64_t, std::vector<int>> by_ridge;
    for (int i = 0; i < static_cast<int>(facets.size()); ++i)
        for (std::uint64_t t = facets[i].bits; t; t &= t - 1)
            by_ridge[facets[i].bits ^ (t & -t)].push_back(i);
    std::vector<char> seen(facets.size(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (std::uint64_t t = facets[i].bits; t; t &= t - 1)
            for (int j : by_ridge[facets[i].bits ^ (t & -t)])
                if (!seen[j]) {
                    seen[j] = 1;
                    ++reached;
                    stack.push_back(j);
                }
    }
    return reached == facets.size();
}

SimplicialComplex boundary_of_simplex(int m) {
    if (m < 1) throw InputError("simplex dimension must be positive");
    const int n = m + 1;
    check_ground(n);
    std::vector<FaceSet> facets;
    const FaceSet full = FaceSet::full(n);
    for (int v = 1; v <= n; ++v) facets.push_back(full.without(v));
    return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex full_simplex(int n) {
    if (n < 1) throw InputError("ground-set size must be positive");
    check_ground(n);
    return SimplicialComplex::from_facets(n, {FaceSet::full(n)});
}

SimplicialComplex cross_polytope_boundary(int k) {
    if (k < 1) throw InputError("cross-polytope dimension must be positive");
    check_ground(2 * k);
    // antipodal pairs {2i-1, 2i}; facets pick one vertex from each pair
    std::vector<FaceSet> facets;
    facets.reserve(std::size_t{1} << k);
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << k); ++choice) {
        FaceSet f;
        for (int i = 0; i < k; ++i) f = f.with(2 * i + 1 + static_cast<int>(choice >> i & 1));
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(2 * k, std::move(facets));
}

SimplicialComplex cycle_complex(int n) {
    if (n < 3) throw InputError("a cycle needs at least three vertices");
    check_ground(n);
    std::vector<FaceSet> facets;
    for (int v = 1; v < n; ++v) facets.push_back(FaceSet::of({v, v + 1}));
    facets.push_back(FaceSet::of({n, 1}));
    return SimplicialComplex::from_facets(n, std::move(facets));
}

}  // namespace bier
