// Ordered partial partitions of [n] with exactly k labeled parts, the poset
// they form under componentwise inclusion, its order complex, and the order
// isomorphism with the face poset of the k-point configuration complex on
// the (n-1)-simplex.

#ifndef WEDGELAB_PARTITIONS_HPP
#define WEDGELAB_PARTITIONS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "poset.hpp"
#include "simplicial.hpp"

namespace wedgelab {

// k pairwise disjoint nonempty subsets of {1..n}, in a fixed order.  Parts
// are bitmasks: bit i-1 stands for element i.
struct OrderedPartialPartition {
    int n = 0;
    std::vector<std::uint32_t> parts;

    OrderedPartialPartition() = default;
    OrderedPartialPartition(int n_, std::vector<std::uint32_t> parts_)
        : n(n_), parts(std::move(parts_)) {
        if (n < 1 || n > 31) throw std::invalid_argument("OrderedPartialPartition: n out of range");
        const std::uint32_t full = (1u << n) - 1;
        std::uint32_t seen = 0;
        for (std::uint32_t p : parts) {
            if (p == 0) throw std::invalid_argument("OrderedPartialPartition: empty part");
            if (p & ~full) throw std::invalid_argument("OrderedPartialPartition: element out of range");
            if (p & seen) throw std::invalid_argument("OrderedPartialPartition: parts not disjoint");
            seen |= p;
        }
    }

    int k() const { return static_cast<int>(parts.size()); }

    bool operator==(const OrderedPartialPartition& o) const {
        return n == o.n && parts == o.parts;
    }
    bool operator<(const OrderedPartialPartition& o) const {
        return parts < o.parts;
    }
};

inline void require_same_shape(const OrderedPartialPartition& a, const OrderedPartialPartition& b) {
    if (a.n != b.n || a.k() != b.k())
        throw std::invalid_argument("ordered partial partitions have different n or k");
}

// (S_i) <= (T_i) iff S_i is a subset of T_i for every i.
inline bool leq(const OrderedPartialPartition& a, const OrderedPartialPartition& b) {
    require_same_shape(a, b);
    for (size_t i = 0; i < a.parts.size(); ++i)
        if (a.parts[i] & ~b.parts[i]) return false;
    return true;
}

// Componentwise intersection; absent when some intersection is empty.
inline std::optional<OrderedPartialPartition> meet(const OrderedPartialPartition& a,
                                                   const OrderedPartialPartition& b) {
    require_same_shape(a, b);
    std::vector<std::uint32_t> ps(a.parts.size());
    for (size_t i = 0; i < ps.size(); ++i) {
        ps[i] = a.parts[i] & b.parts[i];
        if (ps[i] == 0) return std::nullopt;
    }
    return OrderedPartialPartition(a.n, std::move(ps));
}

// Componentwise union; absent when the resulting parts are not pairwise
// disjoint (the poset is not a lattice).
inline std::optional<OrderedPartialPartition> join(const OrderedPartialPartition& a,
                                                   const OrderedPartialPartition& b) {
    require_same_shape(a, b);
    std::vector<std::uint32_t> ps(a.parts.size());
    std::uint32_t seen = 0;
    for (size_t i = 0; i < ps.size(); ++i) {
        ps[i] = a.parts[i] | b.parts[i];
        if (ps[i] & seen) return std::nullopt;
        seen |= ps[i];
    }
    return OrderedPartialPartition(a.n, std::move(ps));
}

struct PartitionPoset {
    int n = 0;
    int k = 0;
    std::vector<OrderedPartialPartition> elements;  // sorted lexicographically by part masks
    Poset relation;

    long long element_index(const OrderedPartialPartition& p) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), p);
        if (it == elements.end() || !(*it == p)) return -1;
        return it - elements.begin();
    }
};

// All ordered partial partitions of [n] with exactly k parts, in
// lexicographic part-mask order, together with the inclusion relation.
inline PartitionPoset build_poset(int n, int k) {
    if (k < 1 || n < k) throw std::domain_error("build_poset: need 1 <= k <= n");
    if (n > 31) throw std::domain_error("build_poset: n too large");
    PartitionPoset P;
    P.n = n;
    P.k = k;
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint32_t> parts(static_cast<size_t>(k));
    auto rec = [&](auto&& self, int level, std::uint32_t used) -> void {
        if (std::popcount(full & ~used) < k - level) return;
        const std::uint32_t free = full & ~used;
        // submasks of `free` in increasing numeric order
        for (std::uint32_t s = (0 - free) & free; s != 0; s = (s - free) & free) {
            parts[static_cast<size_t>(level)] = s;
            if (level == k - 1) {
                OrderedPartialPartition p;
                p.n = n;
                p.parts = parts;
                P.elements.push_back(std::move(p));
            } else {
                self(self, level + 1, used | s);
            }
        }
    };
    rec(rec, 0, 0);
    P.relation = Poset::from_relation(static_cast<int>(P.elements.size()), [&](int a, int b) {
        for (int i = 0; i < k; ++i)
            if (P.elements[static_cast<size_t>(a)].parts[static_cast<size_t>(i)] &
                ~P.elements[static_cast<size_t>(b)].parts[static_cast<size_t>(i)])
                return false;
        return true;
    });
    return P;
}

// Order complex of a finite poset: vertex i+1 stands for element i, and the
// d-faces are the (d+1)-element chains.  A set of pairwise comparable
// elements is totally ordered, so the chains are exactly the cliques of the
// comparability graph.
inline SimplicialComplex order_complex(const Poset& P) {
    const int n = P.size();
    if (n < 1) throw std::invalid_argument("order_complex: empty poset");
    if (n > 4096) throw std::invalid_argument("order_complex: poset too large");
    const size_t words = (static_cast<size_t>(n) + 63) / 64;
    // comparability rows, restricted to higher indices for ascending cliques
    std::vector<std::uint64_t> comp(static_cast<size_t>(n) * words, 0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (P.leq(a, b) || P.leq(b, a))
                comp[static_cast<size_t>(a) * words + static_cast<size_t>(b) / 64] |= 1ull << (b % 64);
    std::vector<Simplex> faces;
    std::vector<int> chain;
    std::vector<std::uint64_t> cand(static_cast<size_t>(n + 1) * words, 0);
    auto rec = [&](auto&& self, int v, int depth) -> void {
        chain.push_back(v + 1);
        faces.push_back(Simplex{chain});
        const std::uint64_t* cur =
            depth == 0 ? comp.data() + static_cast<size_t>(v) * words
                       : cand.data() + static_cast<size_t>(depth) * words;
        std::uint64_t* next = cand.data() + static_cast<size_t>(depth + 1) * words;
        bool any = false;
        for (size_t w = 0; w < words; ++w) {
            next[w] = cur[w] & comp[static_cast<size_t>(v) * words + w];
            any = any || next[w];
        }
        if (any)
            for (size_t w = 0; w < words; ++w) {
                std::uint64_t bits = next[w];
                while (bits) {
                    int u = static_cast<int>(w * 64 + static_cast<size_t>(std::countr_zero(bits)));
                    bits &= bits - 1;
                    self(self, u, depth + 1);
                }
            }
        chain.pop_back();
    };
    for (int v = 0; v < n; ++v) rec(rec, v, 0);
    return SimplicialComplex(n, faces);
}

inline SimplicialComplex order_complex(const PartitionPoset& P) {
    return order_complex(P.relation);
}

// The cell -> partition bijection, checked to preserve and reflect order.
// cell_to_element[g] is the poset index of the g-th cell of the ordered
// complex (cells in dimension order, lexicographic within each dimension).
struct FacePosetIso {
    ConfigComplex cells;
    PartitionPoset poset;
    std::vector<long long> cell_to_element;
};

inline FacePosetIso face_poset_isomorphism(int n, int k) {
    if (k < 1 || n < k) throw std::domain_error("face_poset_isomorphism: need 1 <= k <= n");
    ConfigComplex C = build_ordered(full_simplex(n - 1), k);
    PartitionPoset P = build_poset(n, k);
    if (C.total_cells() != static_cast<long long>(P.elements.size()))
        throw std::logic_error("face_poset_isomorphism: cell and element counts differ");
    std::vector<long long> map;
    std::vector<char> hit(P.elements.size(), 0);
    for (int d = 0; d <= C.dim(); ++d)
        for (long long i = 0; i < C.cell_count(d); ++i) {
            OrderedPartialPartition p;
            p.n = n;
            for (int f : C.cell_parts(d, i)) {
                std::uint32_t mask = 0;
                for (int v : C.ambient().face(f).vertices) mask |= 1u << (v - 1);
                p.parts.push_back(mask);
            }
            long long e = P.element_index(p);
            if (e < 0 || hit[static_cast<size_t>(e)])
                throw std::logic_error("face_poset_isomorphism: map is not a bijection");
            hit[static_cast<size_t>(e)] = 1;
            map.push_back(e);
        }
    Poset F = face_poset(C);
    const int N = F.size();
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            if (F.leq(a, b) != P.relation.leq(static_cast<int>(map[static_cast<size_t>(a)]),
                                             static_cast<int>(map[static_cast<size_t>(b)])))
                throw std::logic_error("face_poset_isomorphism: order not preserved");
    return FacePosetIso{std::move(C), std::move(P), std::move(map)};
}

// Hasse diagram as a JSON array of [lower_index, upper_index] pairs, indices
// as decimal strings.
inline nlohmann::ordered_json hasse_to_json(const Poset& P) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [lo, hi] : P.hasse_edges()) {
        nlohmann::ordered_json e = nlohmann::ordered_json::array();
        e.push_back(std::to_string(lo));
        e.push_back(std::to_string(hi));
        arr.push_back(std::move(e));
    }
    return arr;
}

inline nlohmann::ordered_json hasse_to_json(const PartitionPoset& P) {
    return hasse_to_json(P.relation);
}

}  // namespace wedgelab

#endif
