#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace domenum {

/// Fixed-universe dynamic bitset used for all vertex/edge set arithmetic.
/// The universe size is set at construction and shared by all sets taking
/// part in an operation.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static Bitset of(int universe, std::initializer_list<int> bits) {
        Bitset b(universe);
        for (int i : bits) b.set(i);
        return b;
    }

    static Bitset full(int universe) {
        Bitset b(universe);
        for (int i = 0; i < universe; ++i) b.set(i);
        return b;
    }

    int universe() const { return n_; }

    void set(int i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    bool subset_of(const Bitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator-=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& o) const { return words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return words_ != o.words_; }

    int first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return int(k * 64) + __builtin_ctzll(words_[k]);
        return -1;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                fn(int(k * 64) + __builtin_ctzll(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    /// Lexicographic order on the sorted element sequences, so that
    /// {a} < {a,b} < {b}. Used wherever a family of sets needs a canonical
    /// deterministic order.
    bool lex_less(const Bitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t d = words_[k] ^ o.words_[k];
            if (!d) continue;
            std::uint64_t low = d & (~d + 1);
            if (words_[k] & low) {
                // *this owns the smallest differing element; it is smaller
                // unless it is a strict superset continuation (o exhausted).
                return rest_nonempty(o, k, low);
            }
            return !rest_nonempty(*this, k, low);
        }
        return false;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    // True if `b` has any element strictly above the bit marked by `low`
    // inside word `k` or in any later word.
    static bool rest_nonempty(const Bitset& b, std::size_t k, std::uint64_t low) {
        if (b.words_[k] & ~(low | (low - 1))) return true;
        for (std::size_t j = k + 1; j < b.words_.size(); ++j)
            if (b.words_[j]) return true;
        return false;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

struct BitsetLess {
    bool operator()(const Bitset& a, const Bitset& b) const { return a.lex_less(b); }
};

}  // namespace domenum
