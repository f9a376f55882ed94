#include "biercert/cochain.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "biercert/errors.hpp"
#include "biercert/face_table.hpp"

namespace bier {

namespace {

bool supports(const std::vector<FaceSet>& sorted, FaceSet f) {
    return std::binary_search(sorted.begin(), sorted.end(), f);
}

std::vector<FaceSet> checked_support(const SimplicialComplex& k, int degree,
                                     std::vector<FaceSet> support, const char* what) {
    if (degree < 0) throw InputError(std::string(what) + " degree must be nonnegative");
    std::sort(support.begin(), support.end());
    if (std::adjacent_find(support.begin(), support.end()) != support.end())
        throw InputError(std::string(what) + " support contains a duplicate face");
    for (FaceSet f : support) {
        if (f.size() != degree + 1)
            throw InputError(std::string(what) + " support face " + f.to_string() +
                             " does not have degree " + std::to_string(degree));
        if (!k.is_face(f))
            throw InputError(std::string(what) + " support face " + f.to_string() +
                             " is not a face of the complex");
    }
    return support;
}

// all faces grouped by size, one table build; index 0 holds the vertices
std::vector<std::vector<FaceSet>> faces_by_dimension(const SimplicialComplex& k) {
    const int d = k.dimension();
    std::vector<std::vector<FaceSet>> out(static_cast<std::size_t>(std::max(d + 1, 0)));
    if (d < 0) return out;
    if (k.n() <= FaceTable::max_ground) {
        FaceTable table(k);
        const std::uint64_t end = table.subset_count();
        for (std::uint64_t m = 1; m < end; ++m)
            if (table.is_face(m))
                out[static_cast<std::size_t>(std::popcount(m) - 1)].push_back(FaceSet::from_mask(m));
        return out;
    }
    for (int i = 0; i <= d; ++i) out[static_cast<std::size_t>(i)] = faces_of_dimension(k, i);
    return out;
}

}  // namespace

Cochain make_cochain(const SimplicialComplex& k, int degree, std::vector<FaceSet> support) {
    return Cochain{degree, checked_support(k, degree, std::move(support), "cochain")};
}

Chain make_chain(const SimplicialComplex& k, int degree, std::vector<FaceSet> support) {
    return Chain{degree, checked_support(k, degree, std::move(support), "chain")};
}

namespace {

std::vector<FaceSet> symmetric_difference(const std::vector<FaceSet>& a,
                                          const std::vector<FaceSet>& b) {
    std::vector<FaceSet> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

Cochain add(const Cochain& a, const Cochain& b) {
    if (a.degree != b.degree) throw InputError("cochain degrees differ");
    return Cochain{a.degree, symmetric_difference(a.support, b.support)};
}

Chain add(const Chain& a, const Chain& b) {
    if (a.degree != b.degree) throw InputError("chain degrees differ");
    return Chain{a.degree, symmetric_difference(a.support, b.support)};
}

Z2Matrix boundary_matrix(const SimplicialComplex& k, int i) {
    if (k.kind() == ComplexKind::Void) throw InputError("void complex has no boundary operator");
    if (i < 1 || i > k.dimension())
        throw InputError("boundary degree " + std::to_string(i) + " out of range");
    const std::vector<FaceSet> rows = faces_of_dimension(k, i - 1);
    const std::vector<FaceSet> cols = faces_of_dimension(k, i);
    Z2Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
        const std::uint64_t bits = cols[static_cast<std::size_t>(c)].bits;
        for (std::uint64_t t = bits; t; t &= t - 1) {
            const FaceSet sub = FaceSet::from_mask(bits ^ (t & -t));
            const auto it = std::lower_bound(rows.begin(), rows.end(), sub);
            m.set(static_cast<int>(it - rows.begin()), c, true);
        }
    }
    return m;
}

std::vector<std::int64_t> betti_numbers_z2(const SimplicialComplex& k) {
    if (k.kind() == ComplexKind::Void)
        throw InputError("Betti numbers of the void complex are undefined");
    const int d = k.dimension();
    if (d < 0) return {};
    const auto faces = faces_by_dimension(k);
    // ranks of the boundary operators d_1 .. d_d
    std::vector<int> rank(static_cast<std::size_t>(d + 2), 0);
    for (int i = 1; i <= d; ++i) {
        const auto& rows = faces[static_cast<std::size_t>(i - 1)];
        const auto& cols = faces[static_cast<std::size_t>(i)];
        Z2Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
            const std::uint64_t bits = cols[static_cast<std::size_t>(c)].bits;
            for (std::uint64_t t = bits; t; t &= t - 1) {
                const FaceSet sub = FaceSet::from_mask(bits ^ (t & -t));
                const auto it = std::lower_bound(rows.begin(), rows.end(), sub);
                m.set(static_cast<int>(it - rows.begin()), c, true);
            }
        }
        rank[static_cast<std::size_t>(i)] = m.rank();
    }
    std::vector<std::int64_t> betti(static_cast<std::size_t>(d + 1), 0);
    for (int i = 0; i <= d; ++i)
        betti[static_cast<std::size_t>(i)] =
            static_cast<std::int64_t>(faces[static_cast<std::size_t>(i)].size()) -
            rank[static_cast<std::size_t>(i)] - rank[static_cast<std::size_t>(i + 1)];
    return betti;
}

Cochain coboundary(const SimplicialComplex& k, const Cochain& a) {
    const int target = a.degree + 1;
    std::vector<FaceSet> support;
    if (k.kind() != ComplexKind::Void && target <= k.dimension()) {
        for (FaceSet tau : faces_of_dimension(k, target)) {
            int parity = 0;
            for (std::uint64_t t = tau.bits; t; t &= t - 1)
                if (supports(a.support, FaceSet::from_mask(tau.bits ^ (t & -t)))) parity ^= 1;
            if (parity) support.push_back(tau);
        }
    }
    return Cochain{target, std::move(support)};
}

Chain boundary(const SimplicialComplex& k, const Chain& z) {
    (void)k;
    if (z.degree == 0) return Chain{-1, {}};
    std::unordered_map<std::uint64_t, int> parity;
    for (FaceSet f : z.support)
        for (std::uint64_t t = f.bits; t; t &= t - 1) parity[f.bits ^ (t & -t)] ^= 1;
    std::vector<FaceSet> support;
    for (const auto& [mask, p] : parity)
        if (p) support.push_back(FaceSet::from_mask(mask));
    std::sort(support.begin(), support.end());
    return Chain{z.degree - 1, std::move(support)};
}

bool is_cocycle(const SimplicialComplex& k, const Cochain& a) {
    return coboundary(k, a).support.empty();
}

bool is_coboundary(const SimplicialComplex& k, const Cochain& a) {
    if (a.degree == 0) return a.support.empty();  // no (-1)-cochains
    if (k.kind() == ComplexKind::Void || a.degree > k.dimension()) return a.support.empty();
    const std::vector<FaceSet> rows = faces_of_dimension(k, a.degree);
    const std::vector<FaceSet> cols = faces_of_dimension(k, a.degree - 1);
    if (rows.empty()) return a.support.empty();
    Z2Matrix delta(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        const std::uint64_t bits = rows[static_cast<std::size_t>(r)].bits;
        for (std::uint64_t t = bits; t; t &= t - 1) {
            const FaceSet sub = FaceSet::from_mask(bits ^ (t & -t));
            const auto it = std::lower_bound(cols.begin(), cols.end(), sub);
            delta.set(r, static_cast<int>(it - cols.begin()), true);
        }
    }
    std::vector<std::uint8_t> rhs(rows.size(), 0);
    for (FaceSet f : a.support) {
        const auto it = std::lower_bound(rows.begin(), rows.end(), f);
        rhs[static_cast<std::size_t>(it - rows.begin())] = 1;
    }
    return delta.consistent(rhs);
}

Cochain cup_product(const SimplicialComplex& k, const Cochain& a, const Cochain& b) {
    const int p = a.degree, q = b.degree;
    std::vector<FaceSet> support;
    if (k.kind() != ComplexKind::Void && p + q <= k.dimension()) {
        for (FaceSet tau : faces_of_dimension(k, p + q)) {
            // front = lowest p+1 vertices, back = highest q+1; they share v_p
            std::uint64_t front = 0, back = tau.bits;
            for (int i = 0; i < p; ++i) {
                const std::uint64_t low = back & ~(back - 1);
                front |= low;
                back ^= low;
            }
            front |= back & ~(back - 1);
            if (supports(a.support, FaceSet::from_mask(front)) &&
                supports(b.support, FaceSet::from_mask(back)))
                support.push_back(tau);
        }
    }
    return Cochain{p + q, std::move(support)};
}

FundamentalClass fundamental_class(const SimplicialComplex& k) {
    if (k.kind() != ComplexKind::Standard || !k.is_pure())
        throw InputError("the fundamental class needs a pure complex of dimension >= 0");
    Chain chain{k.dimension(), k.facets()};
    const bool cycle = boundary(k, chain).support.empty();
    return FundamentalClass{std::move(chain), cycle};
}

int pairing(const Cochain& a, const Chain& z) {
    if (a.degree != z.degree) throw InputError("pairing degrees differ");
    int parity = 0;
    auto ia = a.support.begin();
    auto iz = z.support.begin();
    while (ia != a.support.end() && iz != z.support.end()) {
        if (*ia < *iz)
            ++ia;
        else if (*iz < *ia)
            ++iz;
        else {
            parity ^= 1;
            ++ia;
            ++iz;
        }
    }
    return parity;
}

Cochain counting_cochain(const SimplicialComplex& k, int m) {
    if (m < 0) throw InputError("counting-cochain degree must be nonnegative");
    if (k.kind() != ComplexKind::Standard || !k.is_pure())
        throw InputError("the counting cochain needs a pure complex");
    if (k.dimension() != 2 * m)
        throw InputError("counting cochain requires dimension 2m (dim=" +
                         std::to_string(k.dimension()) + ", m=" + std::to_string(m) + ")");
    std::vector<FaceSet> support;
    for (FaceSet sigma : faces_of_dimension(k, m)) {
        int disjoint = 0;
        for (FaceSet facet : k.facets())
            if (facet.disjoint_with(sigma)) disjoint ^= 1;
        if (disjoint) support.push_back(sigma);
    }
    return Cochain{m, std::move(support)};
}

bool class_nonzero_on(const SimplicialComplex& k, const Cochain& a, FaceSet s) {
    if (!is_cocycle(k, a)) throw InputError("class restriction needs a cocycle");
    const SimplicialComplex sub = full_subcomplex(k, s);
    std::vector<FaceSet> restricted;
    for (FaceSet f : a.support)
        if (f.subset_of(s)) restricted.push_back(f);
    return !is_coboundary(sub, Cochain{a.degree, std::move(restricted)});
}

}  // namespace bier
