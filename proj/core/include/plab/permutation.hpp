#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace plab {

/// Element of S_n in one-line notation. Entries are 1-based: word()[i-1] is
/// the value at position i, each of 1..n appearing exactly once.
///
/// In process contexts the word is read as an arrangement: the entry at
/// position p is the label of the particle currently sitting at p. Adjacent
/// swaps exchange the two entries at positions pos, pos+1, which is the
/// wiring-diagram picture of a sorting network.
class Permutation {
public:
    static Permutation identity(int n);
    static Permutation reverse(int n);

    /// Validating constructor: throws std::invalid_argument unless the word
    /// is a bijection of {1..n}.
    static Permutation from_one_line(std::vector<int> word);

    int size() const { return static_cast<int>(word_.size()); }

    /// Value at 1-based position i.
    int operator()(int i) const { return word_[static_cast<std::size_t>(i) - 1]; }

    std::span<const int> word() const { return word_; }

    /// inv[v-1] = 1-based position of value v.
    std::vector<int> inverse_word() const;

    bool operator==(const Permutation&) const = default;

    /// Internal unchecked constructor for trusted callers.
    struct unchecked_t {};
    Permutation(std::vector<int> word, unchecked_t) : word_(std::move(word)) {}

private:
    std::vector<int> word_;
};

/// Sequence of adjacent-transposition positions, each in 1..n-1. Encodes
/// sorting networks and, more generally, swap-generated permutation
/// process histories.
struct SwapWord {
    int n = 0;
    std::vector<int> positions;

    /// Throws std::invalid_argument if n < 1 or any position is out of range.
    void validate() const;

    bool operator==(const SwapWord&) const = default;
};

/// Returns p with the values at positions pos and pos+1 exchanged
/// (right multiplication by the adjacent transposition at pos).
/// Throws std::invalid_argument unless 1 <= pos <= n-1.
Permutation apply_swap(const Permutation& p, int pos);

/// Number of pairs i < j with p(i) > p(j).
long long inversions(const Permutation& p);

/// True iff w has length n(n-1)/2, every swap raises the inversion count by
/// exactly one, and the final permutation is the reverse. Malformed words
/// return false rather than throwing.
bool is_sorting_network(const SwapWord& w);

} // namespace plab
