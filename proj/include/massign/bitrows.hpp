#pragma once

// Bit-packed rows over F2 and an incremental reduced row echelon basis.

#include <cstdint>
#include <vector>

namespace massign::f2rows {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int bits) : bits_(bits), words_((static_cast<std::size_t>(bits) + 63) / 64, 0) {}

    int size() const { return bits_; }

    bool test(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1ull; }

    void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    // Index of the lowest set bit, or -1.
    int first_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return static_cast<int>(w * 64) + countr_zero(words_[w]);
        return -1;
    }

    bool operator==(const BitVec&) const = default;

private:
    static int countr_zero(std::uint64_t x) { return __builtin_ctzll(x); }

    int bits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Maintains the unique reduced row echelon form of the inserted row space.
// Pivots are the lowest set columns, kept strictly increasing.
class EchelonBasis {
public:
    EchelonBasis() = default;
    explicit EchelonBasis(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& pivots() const { return pivots_; }
    const BitVec& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

    // Clears every pivot column of v.
    void reduce(BitVec& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (v.test(pivots_[i])) v ^= rows_[i];
    }

    // Returns true if v was independent of the current row space.
    bool insert(BitVec v) {
        reduce(v);
        int p = v.first_set();
        if (p < 0) return false;
        // Back-substitute so existing rows lose column p.
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i].test(p)) rows_[i] ^= v;
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
        pivots_.insert(pos, p);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
        return true;
    }

    bool is_pivot(int col) const {
        return std::binary_search(pivots_.begin(), pivots_.end(), col);
    }

private:
    int cols_ = 0;
    std::vector<int> pivots_;
    std::vector<BitVec> rows_;
};

}  // namespace massign::f2rows
