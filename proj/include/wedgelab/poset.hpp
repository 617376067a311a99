// Finite posets stored as a full comparability relation (one bitset row per
// element), with Hasse-diagram extraction.

#ifndef WEDGELAB_POSET_HPP
#define WEDGELAB_POSET_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wedgelab {

class Poset {
public:
    // Build from a reflexive order predicate on {0, ..., n-1}.
    static Poset from_relation(int n, const std::function<bool(int, int)>& leq) {
        Poset p(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (leq(a, b)) p.set(a, b);
        return p;
    }

    Poset() : Poset(0) {}

    explicit Poset(int n) : n_(n), words_((static_cast<size_t>(n) + 63) / 64) {
        if (n < 0) throw std::invalid_argument("Poset: negative size");
        up_.assign(static_cast<size_t>(n) * words_, 0);
        for (int a = 0; a < n; ++a) set(a, a);
    }

    int size() const { return n_; }

    void set(int a, int b) {
        up_[row(a) + static_cast<size_t>(b) / 64] |= 1ull << (b % 64);
    }

    bool leq(int a, int b) const {
        return (up_[row(a) + static_cast<size_t>(b) / 64] >> (b % 64)) & 1ull;
    }

    // All elements >= a, as a raw bitset row.
    const std::uint64_t* up_row(int a) const { return up_.data() + row(a); }
    size_t words() const { return words_; }

    // Covering relations (a, b): a < b with nothing strictly between, sorted
    // by (a, b).
    std::vector<std::pair<int, int>> hasse_edges() const {
        std::vector<std::uint64_t> down(static_cast<size_t>(n_) * words_, 0);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (leq(a, b)) down[row(b) + static_cast<size_t>(a) / 64] |= 1ull << (a % 64);
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) {
                if (a == b || !leq(a, b)) continue;
                bool covered = true;
                for (size_t w = 0; w < words_; ++w) {
                    std::uint64_t between = up_[row(a) + w] & down[row(b) + w];
                    // mask out a and b themselves
                    if (static_cast<size_t>(a) / 64 == w) between &= ~(1ull << (a % 64));
                    if (static_cast<size_t>(b) / 64 == w) between &= ~(1ull << (b % 64));
                    if (between != 0) {
                        covered = false;
                        break;
                    }
                }
                if (covered) edges.emplace_back(a, b);
            }
        return edges;
    }

private:
    size_t row(int a) const { return static_cast<size_t>(a) * words_; }

    int n_;
    size_t words_;
    std::vector<std::uint64_t> up_;
};

}  // namespace wedgelab

#endif
