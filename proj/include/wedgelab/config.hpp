// Discretized configuration complexes D_k(X) and their unordered quotients
// UD_k(X): cells are ordered k-tuples of pairwise vertex-disjoint faces of an
// ambient simplicial complex, with integer boundary operators following the
// product-cell sign rule.

#ifndef WEDGELAB_CONFIG_HPP
#define WEDGELAB_CONFIG_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "integer.hpp"
#include "poset.hpp"
#include "simplicial.hpp"
#include "sparse_matrix.hpp"

namespace wedgelab {

// One product cell sigma_1 x ... x sigma_k, materialized with its factors.
struct ConfigCell {
    std::vector<Simplex> parts;

    int dim() const {
        int d = 0;
        for (const Simplex& s : parts) d += s.dim();
        return d;
    }
};

class ConfigComplex {
public:
    const SimplicialComplex& ambient() const { return ambient_; }
    int k() const { return k_; }
    bool ordered() const { return ordered_; }

    // Top dimension, or -1 for the empty complex.
    int dim() const { return static_cast<int>(cells_.size()) - 1; }

    long long cell_count(int d) const {
        if (d < 0 || d > dim()) return 0;
        if (k_ == 0) return 1;
        return static_cast<long long>(cells_[static_cast<size_t>(d)].size()) / k_;
    }

    long long total_cells() const {
        long long t = 0;
        for (int d = 0; d <= dim(); ++d) t += cell_count(d);
        return t;
    }

    // Face ids of the k parts of cell (d, idx), in tuple order.
    std::span<const int> cell_parts(int d, long long idx) const {
        if (d < 0 || d > dim() || idx < 0 || idx >= cell_count(d))
            throw std::out_of_range("ConfigComplex::cell_parts");
        return {cells_[static_cast<size_t>(d)].data() + idx * k_, static_cast<size_t>(k_)};
    }

    ConfigCell cell(int d, long long idx) const {
        ConfigCell c;
        for (int f : cell_parts(d, idx)) c.parts.push_back(ambient_.face(f));
        return c;
    }

    // Index of the cell with the given parts within dimension d, or -1.
    long long cell_index(int d, std::span<const int> parts) const {
        if (d < 0 || d > dim() || k_ == 0) return k_ == 0 && d == 0 ? 0 : -1;
        const auto& flat = cells_[static_cast<size_t>(d)];
        long long lo = 0, hi = static_cast<long long>(flat.size()) / k_;
        while (lo < hi) {
            long long mid = (lo + hi) / 2;
            const int* cand = flat.data() + mid * k_;
            int cmp = 0;
            for (int i = 0; i < k_; ++i) {
                if (cand[i] != parts[static_cast<size_t>(i)]) {
                    cmp = cand[i] < parts[static_cast<size_t>(i)] ? -1 : 1;
                    break;
                }
            }
            if (cmp < 0)
                lo = mid + 1;
            else if (cmp > 0)
                hi = mid;
            else
                return mid;
        }
        return -1;
    }

private:
    ConfigComplex(SimplicialComplex ambient, int k, bool ordered)
        : ambient_(std::move(ambient)), k_(k), ordered_(ordered) {}

    SimplicialComplex ambient_;
    int k_;
    bool ordered_;
    // cells_[d]: flat face-id tuples, stride k, in lexicographic tuple order.
    std::vector<std::vector<int>> cells_;

    friend ConfigComplex build_config(const SimplicialComplex&, int, bool);
};

namespace detail {

// Vertex bitmask of a face, as 64-bit blocks over the ambient vertex set.
inline void face_vertex_masks(const SimplicialComplex& X, size_t vwords,
                              std::vector<std::uint64_t>& out) {
    out.assign(static_cast<size_t>(X.total_faces()) * vwords, 0);
    for (int f = 0; f < X.total_faces(); ++f)
        for (int v : X.face(f).vertices)
            out[static_cast<size_t>(f) * vwords + static_cast<size_t>(v - 1) / 64] |=
                1ull << ((v - 1) % 64);
}

}  // namespace detail

inline ConfigComplex build_config(const SimplicialComplex& X, int k, bool ordered) {
    if (k < 0) throw std::domain_error("build_config: negative k");
    ConfigComplex C(X, k, ordered);
    if (k == 0) {
        // a single empty product cell: one point
        C.cells_.resize(1);
        return C;
    }
    const int nfaces = static_cast<int>(X.total_faces());
    const int nverts = X.vertex_count();
    const size_t vwords = (static_cast<size_t>(std::max(nverts, 1)) + 63) / 64;
    std::vector<std::uint64_t> vmask;
    detail::face_vertex_masks(X, vwords, vmask);
    std::vector<int> face_nverts(static_cast<size_t>(nfaces));
    for (int f = 0; f < nfaces; ++f)
        face_nverts[static_cast<size_t>(f)] = X.face(f).dim() + 1;

    const int top = std::max(nverts - k, -1);
    std::vector<std::vector<int>> buckets(static_cast<size_t>(std::max(top + 1, 0)));

    // Pairwise-disjointness rows, one bitset row per face, for fast candidate
    // intersection.  Skipped for very large face lists, where the plain
    // vertex-mask test is used instead.
    const size_t fwords = (static_cast<size_t>(nfaces) + 63) / 64;
    const bool use_compat = k >= 2 && nfaces > 0 && nfaces <= 8192;
    std::vector<std::uint64_t> compat;
    if (use_compat) {
        compat.assign(static_cast<size_t>(nfaces) * fwords, 0);
        for (int f = 0; f < nfaces; ++f)
            for (int g = 0; g < nfaces; ++g) {
                bool dis = true;
                for (size_t w = 0; w < vwords; ++w)
                    if (vmask[static_cast<size_t>(f) * vwords + w] &
                        vmask[static_cast<size_t>(g) * vwords + w]) {
                        dis = false;
                        break;
                    }
                if (dis)
                    compat[static_cast<size_t>(f) * fwords + static_cast<size_t>(g) / 64] |=
                        1ull << (g % 64);
            }
    }

    std::vector<int> parts(static_cast<size_t>(k));
    // avail bitset per recursion level (compat path)
    std::vector<std::uint64_t> avail(static_cast<size_t>(k) * fwords, 0);
    std::vector<std::uint64_t> used((use_compat ? 0 : static_cast<size_t>(k)) * vwords, 0);

    auto emit = [&](int verts_used) {
        auto& bucket = buckets[static_cast<size_t>(verts_used - k)];
        bucket.insert(bucket.end(), parts.begin(), parts.end());
    };

    if (use_compat) {
        // level 0 candidates: every face
        for (size_t w = 0; w < fwords; ++w) avail[w] = ~0ull;
        if (nfaces % 64) avail[fwords - 1] = (1ull << (nfaces % 64)) - 1;
        auto rec = [&](auto&& self, int level, int verts_used) -> void {
            if (nverts - verts_used < k - level) return;
            const std::uint64_t* av = avail.data() + static_cast<size_t>(level) * fwords;
            for (size_t w = 0; w < fwords; ++w) {
                std::uint64_t bits = av[w];
                while (bits) {
                    int f = static_cast<int>(w * 64 + static_cast<size_t>(std::countr_zero(bits)));
                    bits &= bits - 1;
                    parts[static_cast<size_t>(level)] = f;
                    int vu = verts_used + face_nverts[static_cast<size_t>(f)];
                    if (level == k - 1) {
                        emit(vu);
                        continue;
                    }
                    std::uint64_t* next = avail.data() + static_cast<size_t>(level + 1) * fwords;
                    const std::uint64_t* cf = compat.data() + static_cast<size_t>(f) * fwords;
                    if (ordered) {
                        for (size_t u = 0; u < fwords; ++u) next[u] = av[u] & cf[u];
                    } else {
                        // restrict to ids > f for orbit representatives
                        for (size_t u = 0; u < fwords; ++u) next[u] = av[u] & cf[u];
                        size_t fw = static_cast<size_t>(f) / 64;
                        for (size_t u = 0; u < fw; ++u) next[u] = 0;
                        next[fw] &= ~((f % 64 == 63) ? ~0ull : ((2ull << (f % 64)) - 1));
                    }
                    self(self, level + 1, vu);
                }
            }
        };
        if (nfaces > 0) rec(rec, 0, 0);
    } else {
        auto disjoint_from_used = [&](int level, int f) {
            const std::uint64_t* u = used.data() + static_cast<size_t>(level) * vwords;
            const std::uint64_t* m = vmask.data() + static_cast<size_t>(f) * vwords;
            for (size_t w = 0; w < vwords; ++w)
                if (u[w] & m[w]) return false;
            return true;
        };
        auto rec = [&](auto&& self, int level, int first, int verts_used) -> void {
            if (nverts - verts_used < k - level) return;
            for (int f = first; f < nfaces; ++f) {
                if (k >= 2 && !disjoint_from_used(level, f)) continue;
                parts[static_cast<size_t>(level)] = f;
                int vu = verts_used + face_nverts[static_cast<size_t>(f)];
                if (level == k - 1) {
                    emit(vu);
                    continue;
                }
                std::uint64_t* nu = used.data() + static_cast<size_t>(level + 1) * vwords;
                const std::uint64_t* cu = used.data() + static_cast<size_t>(level) * vwords;
                const std::uint64_t* m = vmask.data() + static_cast<size_t>(f) * vwords;
                for (size_t w = 0; w < vwords; ++w) nu[w] = cu[w] | m[w];
                self(self, level + 1, ordered ? 0 : f + 1, vu);
            }
        };
        if (nfaces > 0 && k >= 1) rec(rec, 0, 0, 0);
    }

    while (!buckets.empty() && buckets.back().empty()) buckets.pop_back();
    C.cells_ = std::move(buckets);
    return C;
}

// All ordered k-tuples of pairwise vertex-disjoint faces of X.
inline ConfigComplex build_ordered(const SimplicialComplex& X, int k) {
    return build_config(X, k, true);
}

// One cell per orbit of the coordinate-permuting action: the representative
// is the lexicographically least tuple, i.e. parts in increasing face order.
inline ConfigComplex build_unordered(const SimplicialComplex& X, int k) {
    return build_config(X, k, false);
}

inline std::vector<long long> f_vector(const ConfigComplex& C) {
    std::vector<long long> f;
    for (int d = 0; d <= C.dim(); ++d) f.push_back(C.cell_count(d));
    return f;
}

inline Integer euler_characteristic(const ConfigComplex& C) {
    Integer chi = 0;
    for (int d = 0; d <= C.dim(); ++d) {
        if (d % 2 == 0)
            chi += C.cell_count(d);
        else
            chi -= C.cell_count(d);
    }
    return chi;
}

// Boundary operators, one matrix per dimension d >= 1, mapping d-chains to
// (d-1)-chains.  Signs follow the product rule
//   d(s_1 x ... x s_k) = sum_i (-1)^{dim s_1 + ... + dim s_{i-1}}
//                          s_1 x ... x d(s_i) x ... x s_k
// with the simplex boundary d(s) = sum_j (-1)^j (s minus its j-th vertex).
// For unordered complexes each term is projected to its orbit representative
// with the Koszul sign of the factor-sorting permutation.
inline std::vector<SparseIntMatrix> boundary_matrices(const ConfigComplex& C) {
    const SimplicialComplex& X = C.ambient();
    const int k = C.k();
    std::vector<SparseIntMatrix> out;
    std::vector<int> term(static_cast<size_t>(k));
    std::vector<int> sorted(static_cast<size_t>(k));
    std::vector<int> dims(static_cast<size_t>(k));
    for (int d = 1; d <= C.dim(); ++d) {
        SparseIntMatrix M(C.cell_count(d - 1), C.cell_count(d));
        for (long long idx = 0; idx < C.cell_count(d); ++idx) {
            auto parts = C.cell_parts(d, idx);
            for (int i = 0; i < k; ++i) dims[static_cast<size_t>(i)] = X.face(parts[static_cast<size_t>(i)]).dim();
            int prefix = 0;
            for (int i = 0; i < k; ++i) {
                const Simplex& s = X.face(parts[static_cast<size_t>(i)]);
                const int di = s.dim();
                if (di > 0) {
                    for (size_t t = 0; t < static_cast<size_t>(k); ++t) term[t] = parts[t];
                    for (int j = 0; j <= di; ++j) {
                        int child = X.face_id(omit_vertex(s, j));
                        term[static_cast<size_t>(i)] = child;
                        int sign = ((prefix + j) % 2 == 0) ? 1 : -1;
                        long long ridx;
                        if (C.ordered()) {
                            ridx = C.cell_index(d - 1, term);
                        } else {
                            // sort parts ascending, tracking the Koszul sign
                            // (-1)^{ab} per adjacent transposition of factors
                            // of dimensions a and b
                            for (size_t t = 0; t < static_cast<size_t>(k); ++t) sorted[t] = term[t];
                            std::vector<int> tdims = dims;
                            tdims[static_cast<size_t>(i)] = di - 1;
                            for (int a = 1; a < k; ++a)
                                for (int b = a; b > 0 && sorted[static_cast<size_t>(b - 1)] > sorted[static_cast<size_t>(b)]; --b) {
                                    std::swap(sorted[static_cast<size_t>(b - 1)], sorted[static_cast<size_t>(b)]);
                                    if ((tdims[static_cast<size_t>(b - 1)] % 2) && (tdims[static_cast<size_t>(b)] % 2)) sign = -sign;
                                    std::swap(tdims[static_cast<size_t>(b - 1)], tdims[static_cast<size_t>(b)]);
                                }
                            ridx = C.cell_index(d - 1, sorted);
                        }
                        if (ridx < 0)
                            throw std::logic_error("boundary_matrices: missing boundary cell");
                        M.add(ridx, idx, sign);
                    }
                }
                prefix += di;
            }
        }
        M.finalize();
        out.push_back(std::move(M));
    }
    return out;
}

// Face poset of an ordered complex: cells ordered by coordinatewise face
// inclusion.  Element index = cells in dimension order, lexicographic within
// each dimension.
inline Poset face_poset(const ConfigComplex& C) {
    if (!C.ordered()) throw std::invalid_argument("face_poset: complex must be ordered");
    const SimplicialComplex& X = C.ambient();
    const int k = C.k();
    const long long n = C.total_cells();
    if (n > 100000) throw std::invalid_argument("face_poset: complex too large");
    // flatten cells and their per-part vertex sets
    std::vector<std::vector<const std::vector<int>*>> cells;
    cells.reserve(static_cast<size_t>(n));
    for (int d = 0; d <= C.dim(); ++d)
        for (long long i = 0; i < C.cell_count(d); ++i) {
            std::vector<const std::vector<int>*> ps;
            for (int f : C.cell_parts(d, i)) ps.push_back(&X.face(f).vertices);
            cells.push_back(std::move(ps));
        }
    auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    return Poset::from_relation(static_cast<int>(n), [&](int a, int b) {
        for (int i = 0; i < k; ++i)
            if (!subset(*cells[static_cast<size_t>(a)][static_cast<size_t>(i)],
                        *cells[static_cast<size_t>(b)][static_cast<size_t>(i)]))
                return false;
        return true;
    });
}

// Summary JSON: {space, k, ordered, f_vector, dim, euler}.  All numbers are
// serialized as decimal strings.
inline nlohmann::ordered_json complex_summary(const ConfigComplex& C, const std::string& space) {
    nlohmann::ordered_json j;
    j["space"] = space;
    j["k"] = std::to_string(C.k());
    j["ordered"] = C.ordered();
    nlohmann::ordered_json fv = nlohmann::ordered_json::array();
    for (long long c : f_vector(C)) fv.push_back(std::to_string(c));
    j["f_vector"] = std::move(fv);
    j["dim"] = std::to_string(C.dim());
    j["euler"] = to_decimal(euler_characteristic(C));
    return j;
}

}  // namespace wedgelab

#endif
