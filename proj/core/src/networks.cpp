#include "plab/networks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "plab/rng.hpp"

namespace plab {

namespace {

int staircase_cells(int n) { return n * (n - 1) / 2; }

} // namespace

StaircaseTableau StaircaseTableau::from_rows(std::vector<std::vector<int>> rows) {
    const int n = static_cast<int>(rows.size()) + 1;
    if (n < 2) throw std::invalid_argument("StaircaseTableau: need at least one row");
    for (int i = 0; i < n - 1; ++i)
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n - 1 - i)
            throw std::invalid_argument("StaircaseTableau: rows must form the staircase shape");
    const int cells = staircase_cells(n);
    std::vector<char> seen(static_cast<std::size_t>(cells), 0);
    for (const auto& row : rows)
        for (int v : row) {
            if (v < 1 || v > cells || seen[static_cast<std::size_t>(v) - 1])
                throw std::invalid_argument("StaircaseTableau: entries must be a bijection with [N]");
            seen[static_cast<std::size_t>(v) - 1] = 1;
        }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j + 1 < rows[i].size(); ++j)
            if (rows[i][j] >= rows[i][j + 1])
                throw std::invalid_argument("StaircaseTableau: rows must increase");
        if (i + 1 < rows.size())
            for (std::size_t j = 0; j < rows[i + 1].size(); ++j)
                if (rows[i][j] >= rows[i + 1][j])
                    throw std::invalid_argument("StaircaseTableau: columns must increase");
    }
    return {std::move(rows), unchecked_t{}};
}

int StaircaseTableau::cells() const { return staircase_cells(n()); }

BigInt stanley_count(int n) {
    if (n < 2) throw std::invalid_argument("stanley_count: n must be >= 2");
    const int cells = staircase_cells(n);
    BigInt num = 1;
    for (int k = 2; k <= cells; ++k) num *= k;
    BigInt den = 1;
    for (int k = 1; k <= n - 1; ++k) {
        // hook length 2k-1 appears with multiplicity n-k in the staircase
        const BigInt h = 2 * k - 1;
        for (int rep = 0; rep < n - k; ++rep) den *= h;
    }
    return num / den;
}

std::vector<SwapWord> enumerate_networks(int n) {
    if (n < 2 || n > 5)
        throw std::invalid_argument("enumerate_networks: n must be in 2..5");
    const int target = staircase_cells(n);
    std::vector<SwapWord> out;
    std::vector<int> word;
    std::vector<int> arr(static_cast<std::size_t>(n));
    std::iota(arr.begin(), arr.end(), 1);

    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == target) {
            out.push_back(SwapWord{n, word});
            return;
        }
        for (int pos = 1; pos <= n - 1; ++pos) {
            auto& a = arr[static_cast<std::size_t>(pos) - 1];
            auto& b = arr[static_cast<std::size_t>(pos)];
            if (a < b) { // swap raises the inversion count by one
                std::swap(a, b);
                word.push_back(pos);
                self(self);
                word.pop_back();
                std::swap(a, b);
            }
        }
    };
    dfs(dfs);
    return out;
}

StaircaseTableau sample_staircase_tableau(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("sample_staircase_tableau: n must be >= 2");
    Rng rng(seed);
    const int nrows = n - 1;
    std::vector<int> rowlen(static_cast<std::size_t>(nrows));
    std::vector<int> collen(static_cast<std::size_t>(nrows));
    for (int i = 0; i < nrows; ++i) {
        rowlen[static_cast<std::size_t>(i)] = nrows - i;
        collen[static_cast<std::size_t>(i)] = nrows - i;
    }
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(nrows));
    for (int i = 0; i < nrows; ++i)
        rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(nrows - i), 0);

    int remaining = staircase_cells(n);
    for (int entry = remaining; entry >= 1; --entry) {
        // Uniform cell of the current shape.
        std::uint64_t u = rng.uniform_index(static_cast<std::uint64_t>(remaining));
        int r = 0;
        while (u >= static_cast<std::uint64_t>(rowlen[static_cast<std::size_t>(r)])) {
            u -= static_cast<std::uint64_t>(rowlen[static_cast<std::size_t>(r)]);
            ++r;
        }
        int c = static_cast<int>(u);
        // Hook walk to a corner.
        for (;;) {
            const int arm = rowlen[static_cast<std::size_t>(r)] - 1 - c;
            const int leg = collen[static_cast<std::size_t>(c)] - 1 - r;
            if (arm + leg == 0) break;
            const std::uint64_t pick = rng.uniform_index(static_cast<std::uint64_t>(arm + leg));
            if (pick < static_cast<std::uint64_t>(arm))
                c += static_cast<int>(pick) + 1;
            else
                r += static_cast<int>(pick) - arm + 1;
        }
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = entry;
        rowlen[static_cast<std::size_t>(r)] -= 1;
        collen[static_cast<std::size_t>(c)] -= 1;
        remaining -= 1;
    }
    return StaircaseTableau(std::move(rows), StaircaseTableau::unchecked_t{});
}

SwapWord edelman_greene_word(const StaircaseTableau& q) {
    const int n = q.n();
    const int cells = q.cells();
    // Cell of each entry in the recording tableau.
    std::vector<std::pair<int, int>> where(static_cast<std::size_t>(cells));
    for (int r = 0; r < n - 1; ++r)
        for (int c = 0; c < static_cast<int>(q.rows()[static_cast<std::size_t>(r)].size()); ++c)
            where[static_cast<std::size_t>(q.rows()[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) - 1] = {r, c};

    // Superstandard insertion tableau P(r,c) = r+c+1 (0-based), shared by all
    // reduced words of the reverse permutation.
    std::vector<std::vector<int>> p(static_cast<std::size_t>(n - 1));
    for (int r = 0; r < n - 1; ++r) {
        p[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(n - 1 - r));
        for (int c = 0; c < n - 1 - r; ++c)
            p[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = r + c + 1;
    }

    std::vector<int> word(static_cast<std::size_t>(cells));
    for (int entry = cells; entry >= 1; --entry) {
        const auto [r0, c0] = where[static_cast<std::size_t>(entry) - 1];
        auto& row0 = p[static_cast<std::size_t>(r0)];
        int carry = row0[static_cast<std::size_t>(c0)];
        row0.pop_back(); // standardness puts the popped cell at the row end
        for (int r = r0 - 1; r >= 0; --r) {
            auto& row = p[static_cast<std::size_t>(r)];
            // Largest value < carry; Coxeter-Knuth reverse rule: if the row
            // contains both carry-1 and carry, the forward step left the row
            // unchanged and the bumped value was carry-1.
            auto it = std::lower_bound(row.begin(), row.end(), carry);
            const bool has_carry = (it != row.end() && *it == carry);
            if (it == row.begin())
                throw std::invalid_argument("edelman_greene_word: tableau is not a staircase SYT");
            auto prev = it - 1;
            if (has_carry && *prev == carry - 1) {
                carry = carry - 1;
            } else {
                const int bumped = *prev;
                *prev = carry;
                carry = bumped;
            }
        }
        word[static_cast<std::size_t>(entry) - 1] = carry;
    }
    SwapWord w{n, std::move(word)};
    return w;
}

SwapWord sample_rsn(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("sample_rsn: n must be >= 2");
    return edelman_greene_word(sample_staircase_tableau(n, seed));
}

PermutationProcess sample_interchange(int n, int steps, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("sample_interchange: n must be >= 2");
    if (steps < 1) throw std::invalid_argument("sample_interchange: steps must be >= 1");
    Rng rng(seed);
    SwapWord w{n, {}};
    w.positions.reserve(static_cast<std::size_t>(steps));
    for (int t = 0; t < steps; ++t)
        w.positions.push_back(1 + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n - 1))));
    return process_from_word(w);
}

PermutationProcess sample_cycle_rotation(int n, int steps, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("sample_cycle_rotation: n must be >= 2");
    if (steps < 1) throw std::invalid_argument("sample_cycle_rotation: steps must be >= 1");
    Rng rng(seed);
    std::vector<Permutation> snaps;
    snaps.reserve(static_cast<std::size_t>(steps) + 1);
    snaps.push_back(Permutation::identity(n));
    long long shift = 0;
    for (int t = 0; t < steps; ++t) {
        shift += rng.uniform_index(2) == 0 ? 1 : -1;
        const long long s = ((shift % n) + n) % n;
        std::vector<int> word(static_cast<std::size_t>(n));
        for (int pos = 0; pos < n; ++pos)
            // particle at position pos arrived from pos - shift (cyclically)
            word[static_cast<std::size_t>(pos)] =
                static_cast<int>(((pos - s) % n + n) % n) + 1;
        snaps.emplace_back(std::move(word), Permutation::unchecked_t{});
    }
    return PermutationProcess::from_snapshots(std::move(snaps));
}

SwapWord bubble_network(int n) {
    if (n < 2) throw std::invalid_argument("bubble_network: n must be >= 2");
    SwapWord w{n, {}};
    w.positions.reserve(static_cast<std::size_t>(staircase_cells(n)));
    for (int pass = n - 1; pass >= 1; --pass)
        for (int pos = 1; pos <= pass; ++pos)
            w.positions.push_back(pos);
    return w;
}

StretchableResult stretchable_network(const DiscretePermuton& p) {
    const int m = static_cast<int>(p.size());
    if (m < 2) throw std::invalid_argument("stretchable_network: need at least two points");

    // Initial order by x-coordinate; distinct x required.
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return p.xs()[static_cast<std::size_t>(a)] < p.xs()[static_cast<std::size_t>(b)];
    });
    for (int k = 1; k < m; ++k)
        if (p.xs()[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] ==
            p.xs()[static_cast<std::size_t>(order[static_cast<std::size_t>(k - 1)])])
            throw std::invalid_argument("stretchable_network: x-coordinates must be distinct");

    struct Crossing {
        double angle;
        int i, j; // 0-based point indices, i < j
    };
    std::vector<Crossing> events;
    events.reserve(static_cast<std::size_t>(m) * (static_cast<std::size_t>(m) - 1) / 2);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const double dx = p.xs()[static_cast<std::size_t>(i)] - p.xs()[static_cast<std::size_t>(j)];
            const double dy = p.ys()[static_cast<std::size_t>(i)] - p.ys()[static_cast<std::size_t>(j)];
            // Rotated x-coordinates coincide when cos(th) dx + sin(th) dy = 0,
            // which has a root in (0, pi/2) only when dx and dy oppose.
            if (dx == 0.0 || dy == 0.0 || (dx > 0.0) == (dy > 0.0))
                throw NotANetworkError("stretchable_network: pair never crosses", i, j);
            events.push_back({std::atan(-dx / dy), i, j});
        }
    std::stable_sort(events.begin(), events.end(), [](const Crossing& a, const Crossing& b) {
        if (a.angle != b.angle) return a.angle < b.angle;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });

    std::vector<int> pos_of(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) pos_of[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;

    SwapWord w{m, {}};
    w.positions.reserve(events.size());
    int tie_warnings = 0;

    std::size_t g0 = 0;
    while (g0 < events.size()) {
        std::size_t g1 = g0 + 1;
        while (g1 < events.size() && events[g1].angle == events[g0].angle) ++g1;
        if (g1 - g0 > 1) tie_warnings += static_cast<int>(g1 - g0 - 1);
        // Within an equal-angle group, repeatedly apply whichever crossings
        // are currently adjacent (lowest pair index first). Continuous
        // samples give singleton groups; exact grids (such as reverse-permuton
        // samples, where every pair crosses at pi/4) need the scheduling.
        std::vector<Crossing> group(events.begin() + static_cast<std::ptrdiff_t>(g0),
                                    events.begin() + static_cast<std::ptrdiff_t>(g1));
        while (!group.empty()) {
            bool progress = false;
            std::size_t out = 0;
            for (std::size_t e = 0; e < group.size(); ++e) {
                const int pi_ = pos_of[static_cast<std::size_t>(group[e].i)];
                const int pj = pos_of[static_cast<std::size_t>(group[e].j)];
                if (pi_ + 1 == pj || pj + 1 == pi_) {
                    const int left = std::min(pi_, pj);
                    std::swap(order[static_cast<std::size_t>(left)], order[static_cast<std::size_t>(left) + 1]);
                    pos_of[static_cast<std::size_t>(order[static_cast<std::size_t>(left)])] = left;
                    pos_of[static_cast<std::size_t>(order[static_cast<std::size_t>(left) + 1])] = left + 1;
                    w.positions.push_back(left + 1);
                    progress = true;
                } else {
                    group[out++] = group[e];
                }
            }
            group.resize(out);
            if (!group.empty() && !progress)
                throw NotANetworkError("stretchable_network: concurrent crossings admit no swap schedule",
                                       group.front().i, group.front().j);
        }
        g0 = g1;
    }
    return {std::move(w), tie_warnings};
}

std::vector<long long> swap_histogram(const SwapWord& w, double t0, double t1) {
    w.validate();
    if (!(t0 >= 0.0 && t1 <= 1.0 && t0 < t1))
        throw std::invalid_argument("swap_histogram: need 0 <= t0 < t1 <= 1");
    const double N = static_cast<double>(w.positions.size());
    std::vector<long long> counts(static_cast<std::size_t>(w.n) - 1, 0);
    for (std::size_t k = 0; k < w.positions.size(); ++k) {
        const double idx = static_cast<double>(k);
        if (idx >= t0 * N && idx < t1 * N)
            counts[static_cast<std::size_t>(w.positions[k]) - 1] += 1;
    }
    return counts;
}

} // namespace plab
