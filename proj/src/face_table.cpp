#include "biercert/face_table.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "biercert/errors.hpp"

namespace bier {

FaceTable::FaceTable(const SimplicialComplex& k) : n_(k.n()) {
    if (n_ > max_ground)
        throw ResourceLimitError("ground set too large for an exhaustive subset scan (n=" +
                                 std::to_string(n_) + ", cap=" + std::to_string(max_ground) + ")");
    const std::uint64_t size = subset_count();
    words_.assign(static_cast<std::size_t>((size + 63) / 64), 0);
    if (k.kind() == ComplexKind::Void) return;

    std::uint64_t submask_cost = 0;
    for (FaceSet f : k.facets()) submask_cost += std::uint64_t{1} << f.size();

    if (submask_cost <= static_cast<std::uint64_t>(n_) * size) {
        for (FaceSet f : k.facets())
            for (std::uint64_t s = f.bits;; s = (s - 1) & f.bits) {
                mark(s);
                if (!s) break;
            }
    } else {
        // downward closure: supersets are numerically larger, so a single
        // descending sweep finalises every mask before it propagates
        for (FaceSet f : k.facets()) mark(f.bits);
        for (std::uint64_t m = size; m-- > 0;) {
            if (!is_face(m)) continue;
            for (std::uint64_t t = m; t; t &= t - 1) mark(m ^ (t & -t));
        }
    }
}

std::vector<FaceSet> FaceTable::all_faces() const {
    std::vector<FaceSet> out;
    const std::uint64_t end = subset_count();
    for (std::uint64_t m = 0; m < end; ++m)
        if (is_face(m)) out.push_back(FaceSet::from_mask(m));
    return out;
}

namespace {

// n-choose-k with saturation
std::uint64_t binom_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (r > cap) return cap + 1;
    }
    return r;
}

void collect_subsets_of_size(FaceSet facet, int size, std::vector<FaceSet>& out) {
    std::vector<int> labels = facet.labels();
    std::vector<int> idx(static_cast<std::size_t>(size));
    // lexicographic combinations of the facet's own vertices
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    const int m = static_cast<int>(labels.size());
    while (true) {
        FaceSet f;
        for (int i : idx) f = f.with(labels[static_cast<std::size_t>(i)]);
        out.push_back(f);
        int j = size - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] == m - size + j) --j;
        if (j < 0) break;
        ++idx[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < size; ++t)
            idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
}

}  // namespace

std::vector<FaceSet> faces_of_dimension(const SimplicialComplex& k, int dim) {
    if (dim < 0) throw InputError("face dimension must be nonnegative");
    if (k.kind() == ComplexKind::Void)
        throw InputError("the void complex has no faces");
    std::vector<FaceSet> out;
    const int size = dim + 1;
    if (k.n() <= FaceTable::max_ground) {
        FaceTable table(k);
        const std::uint64_t end = table.subset_count();
        for (std::uint64_t m = 1; m < end; ++m)
            if (std::popcount(m) == size && table.is_face(m)) out.push_back(FaceSet::from_mask(m));
        return out;
    }
    constexpr std::uint64_t kBudget = std::uint64_t{1} << 27;
    std::uint64_t cost = 0;
    for (FaceSet f : k.facets()) {
        cost += binom_capped(f.size(), size, kBudget);
        if (cost > kBudget)
            throw ResourceLimitError("face enumeration exceeds the work budget (n > 24)");
    }
    for (FaceSet f : k.facets())
        if (f.size() >= size) collect_subsets_of_size(f, size, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace bier
