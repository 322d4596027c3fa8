#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace copwin {

// Set of vertices out of a fixed universe {0, ..., n-1}, stored as a bitset.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int n) : n_(check_n(n)), w_((n + 63) / 64, 0) {}

    VertexSet(int n, std::initializer_list<int> vs) : VertexSet(n) {
        for (int v : vs) set(v);
    }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (auto& w : s.w_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        check(v);
        return (w_[v >> 6] >> (v & 63)) & 1;
    }

    void set(int v) {
        check(v);
        w_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        check(v);
        w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    // True when every member of this set is also in other.
    bool subset_of(const VertexSet& other) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~other.w_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & other.w_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    // Removes every member of o from this set.
    VertexSet& subtract(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    VertexSet complement() const {
        VertexSet r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    bool operator==(const VertexSet&) const = default;

    // Lowest member, or -1 when empty.
    int first() const { return scan(0); }

    // Lowest member greater than v, or -1.
    int next(int v) const { return v + 1 >= n_ ? -1 : scan(v + 1); }

    std::vector<int> to_vector() const {
        std::vector<int> r;
        for (int v = first(); v >= 0; v = next(v)) r.push_back(v);
        return r;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;

    static int check_n(int n) {
        if (n < 0) throw std::invalid_argument("VertexSet: negative universe");
        return n;
    }

    void check(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("VertexSet: vertex out of range");
    }

    void trim() {
        if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }

    int scan(int from) const {
        std::size_t i = static_cast<std::size_t>(from) >> 6;
        if (i >= w_.size()) return -1;
        std::uint64_t w = w_[i] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
            if (++i == w_.size()) return -1;
            w = w_[i];
        }
    }
};

} // namespace copwin
