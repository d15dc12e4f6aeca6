#ifndef HERMSPACE_MULTI_INDEX_HPP
#define HERMSPACE_MULTI_INDEX_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "hermspace/errors.hpp"

namespace hws {

// Sparse multi-index k in N_0^s.  Only nonzero entries are stored; the map
// key is the 1-based dimension index.  An absent dimension means k_j = 0.
class MultiIndex {
public:
    MultiIndex() = default;

    // Dense construction; zero entries are dropped.
    explicit MultiIndex(const std::vector<std::uint32_t>& dense) {
        for (std::size_t i = 0; i < dense.size(); ++i) {
            if (dense[i] != 0) entries_[static_cast<std::uint32_t>(i + 1)] = dense[i];
        }
    }

    MultiIndex(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> init) {
        for (const auto& [dim, k] : init) set(dim, k);
    }

    void set(std::uint32_t dim, std::uint32_t k) {
        if (dim == 0) throw domain_error("MultiIndex: dimension indices are 1-based");
        if (k == 0)
            entries_.erase(dim);
        else
            entries_[dim] = k;
    }

    std::uint32_t operator[](std::uint32_t dim) const {
        auto it = entries_.find(dim);
        return it == entries_.end() ? 0u : it->second;
    }

    bool empty() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }

    // Largest dimension index with a nonzero entry (0 for the zero index).
    std::uint32_t max_dimension() const {
        return entries_.empty() ? 0u : entries_.rbegin()->first;
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& [dim, k] : entries_) d += k;
        return d;
    }

    const std::map<std::uint32_t, std::uint32_t>& entries() const { return entries_; }

    std::vector<std::uint32_t> dense(std::uint32_t s) const {
        std::vector<std::uint32_t> out(s, 0u);
        for (const auto& [dim, k] : entries_) {
            if (dim <= s) out[dim - 1] = k;
        }
        return out;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.entries_ == b.entries_;
    }

    // Lexicographic order on the dense expansion (k_1, k_2, ...).
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
        auto ia = a.entries_.begin(), ib = b.entries_.begin();
        while (ia != a.entries_.end() && ib != b.entries_.end()) {
            if (ia->first != ib->first) {
                // First differing dense position is min(ia,ib)->first; the side
                // whose entry sits there is nonzero, the other side is zero.
                return ia->first > ib->first;
            }
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia, ++ib;
        }
        return ia == a.entries_.end() && ib != b.entries_.end();
    }

private:
    std::map<std::uint32_t, std::uint32_t> entries_;
};

} // namespace hws

#endif
