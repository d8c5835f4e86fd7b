#include "plab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace plab {

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("Permutation: n must be positive");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return {std::move(w), unchecked_t{}};
}

Permutation Permutation::reverse(int n) {
    if (n < 1) throw std::invalid_argument("Permutation: n must be positive");
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    return {std::move(w), unchecked_t{}};
}

Permutation Permutation::from_one_line(std::vector<int> word) {
    if (word.empty()) throw std::invalid_argument("Permutation: empty one-line word");
    std::vector<char> seen(word.size(), 0);
    const int n = static_cast<int>(word.size());
    for (int v : word) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1])
            throw std::invalid_argument("Permutation: word is not a bijection of 1..n");
        seen[static_cast<std::size_t>(v) - 1] = 1;
    }
    return {std::move(word), unchecked_t{}};
}

std::vector<int> Permutation::inverse_word() const {
    std::vector<int> inv(word_.size());
    for (int i = 0; i < size(); ++i)
        inv[static_cast<std::size_t>(word_[static_cast<std::size_t>(i)]) - 1] = i + 1;
    return inv;
}

void SwapWord::validate() const {
    if (n < 1) throw std::invalid_argument("SwapWord: n must be positive");
    for (int pos : positions)
        if (pos < 1 || pos > n - 1)
            throw std::invalid_argument("SwapWord: position out of range 1..n-1");
}

Permutation apply_swap(const Permutation& p, int pos) {
    if (pos < 1 || pos > p.size() - 1)
        throw std::invalid_argument("apply_swap: position out of range 1..n-1");
    std::vector<int> w(p.word().begin(), p.word().end());
    std::swap(w[static_cast<std::size_t>(pos) - 1], w[static_cast<std::size_t>(pos)]);
    return {std::move(w), Permutation::unchecked_t{}};
}

long long inversions(const Permutation& p) {
    // Merge-sort count; n stays desk scale but swap-word validation calls
    // this once per prefix, so keep it O(n log n).
    std::vector<int> a(p.word().begin(), p.word().end());
    std::vector<int> tmp(a.size());
    long long count = 0;
    for (std::size_t width = 1; width < a.size(); width *= 2) {
        for (std::size_t lo = 0; lo + width < a.size(); lo += 2 * width) {
            const std::size_t mid = lo + width;
            const std::size_t hi = std::min(lo + 2 * width, a.size());
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi) {
                if (a[i] <= a[j]) tmp[k++] = a[i++];
                else { count += static_cast<long long>(mid - i); tmp[k++] = a[j++]; }
            }
            while (i < mid) tmp[k++] = a[i++];
            while (j < hi) tmp[k++] = a[j++];
            std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo),
                      tmp.begin() + static_cast<std::ptrdiff_t>(hi),
                      a.begin() + static_cast<std::ptrdiff_t>(lo));
        }
    }
    return count;
}

bool is_sorting_network(const SwapWord& w) {
    if (w.n < 1) return false;
    const long long target = static_cast<long long>(w.n) * (w.n - 1) / 2;
    if (static_cast<long long>(w.positions.size()) != target) return false;
    std::vector<int> word(static_cast<std::size_t>(w.n));
    std::iota(word.begin(), word.end(), 1);
    for (int pos : w.positions) {
        if (pos < 1 || pos > w.n - 1) return false;
        auto& a = word[static_cast<std::size_t>(pos) - 1];
        auto& b = word[static_cast<std::size_t>(pos)];
        // Inversions grow by one exactly when the swapped pair was in
        // increasing order.
        if (a > b) return false;
        std::swap(a, b);
    }
    for (int i = 0; i < w.n; ++i)
        if (word[static_cast<std::size_t>(i)] != w.n - i) return false;
    return true;
}

} // namespace plab
