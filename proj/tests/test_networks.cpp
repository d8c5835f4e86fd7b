#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "plab/measures.hpp"
#include "plab/networks.hpp"
#include "plab/rng.hpp"
#include "plab/stats.hpp"

using namespace plab;

namespace {

// Test-side oracle: all standard fillings of the staircase shape, by DFS over
// placements of 1..N respecting row/column increase.
void all_staircase_syt(int n, std::vector<StaircaseTableau>& out) {
    const int nrows = n - 1;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(nrows));
    std::vector<int> filled(static_cast<std::size_t>(nrows), 0);
    for (int i = 0; i < nrows; ++i) rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(nrows - i), 0);
    const int cells = n * (n - 1) / 2;

    auto dfs = [&](auto&& self, int entry) -> void {
        if (entry > cells) {
            out.push_back(StaircaseTableau::from_rows(rows));
            return;
        }
        for (int r = 0; r < nrows; ++r) {
            const int c = filled[static_cast<std::size_t>(r)];
            if (c >= nrows - r) continue;                      // row full
            if (r > 0 && filled[static_cast<std::size_t>(r) - 1] <= c) continue; // column constraint
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = entry;
            filled[static_cast<std::size_t>(r)] += 1;
            self(self, entry + 1);
            filled[static_cast<std::size_t>(r)] -= 1;
        }
    };
    dfs(dfs, 1);
}

std::set<std::vector<int>> word_set(const std::vector<SwapWord>& words) {
    std::set<std::vector<int>> s;
    for (const auto& w : words) s.insert(w.positions);
    return s;
}

} // namespace

TEST_CASE("stanley_count") {
    CHECK(stanley_count(2) == 1);
    CHECK(stanley_count(3) == 2);
    CHECK(stanley_count(4) == 16);
    CHECK(stanley_count(5) == 768);
    CHECK(stanley_count(6) == 292864);
    CHECK_THROWS_AS(stanley_count(1), std::invalid_argument);
    // Desk-scale big-integer case: the n = 30 count has hundreds of digits.
    CHECK(stanley_count(30).str().size() > 300);
}

TEST_CASE("enumerate_networks") {
    const auto n2 = enumerate_networks(2);
    REQUIRE(n2.size() == 1);
    CHECK(n2[0].positions == std::vector<int>{1});

    const auto n3 = enumerate_networks(3);
    CHECK(word_set(n3) ==
          std::set<std::vector<int>>{{1, 2, 1}, {2, 1, 2}});

    for (int n = 2; n <= 5; ++n) {
        const auto all = enumerate_networks(n);
        CHECK(BigInt(all.size()) == stanley_count(n));
        for (const auto& w : all) CHECK(is_sorting_network(w));
        CHECK(word_set(all).size() == all.size());
    }
    CHECK_THROWS_AS(enumerate_networks(6), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_networks(1), std::invalid_argument);
}

TEST_CASE("edelman_greene_word is a bijection onto sorting networks") {
    for (int n = 3; n <= 5; ++n) {
        std::vector<StaircaseTableau> tableaux;
        all_staircase_syt(n, tableaux);
        CHECK(BigInt(tableaux.size()) == stanley_count(n));
        std::set<std::vector<int>> images;
        for (const auto& t : tableaux) {
            const auto w = edelman_greene_word(t);
            CHECK(is_sorting_network(w));
            images.insert(w.positions);
        }
        CHECK(images == word_set(enumerate_networks(n)));
    }
}

TEST_CASE("hand-checked reading at n = 3") {
    const auto t1 = StaircaseTableau::from_rows({{1, 2}, {3}});
    CHECK(edelman_greene_word(t1).positions == std::vector<int>{1, 2, 1});
    const auto t2 = StaircaseTableau::from_rows({{1, 3}, {2}});
    CHECK(edelman_greene_word(t2).positions == std::vector<int>{2, 1, 2});
    CHECK_THROWS_AS(StaircaseTableau::from_rows({{2, 1}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(StaircaseTableau::from_rows({{1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("sampled tableaux are standard") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto t = sample_staircase_tableau(7, seed);
        CHECK_NOTHROW(StaircaseTableau::from_rows(t.rows()));
    }
}

TEST_CASE("sample_rsn basics") {
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK(sample_rsn(2, seed).positions == std::vector<int>{1});

    // n = 3: the two networks appear with frequency 1/2 +- 5%.
    std::map<std::vector<int>, int> freq;
    for (std::uint64_t seed = 0; seed < 2000; ++seed)
        freq[sample_rsn(3, seed).positions] += 1;
    REQUIRE(freq.size() == 2);
    for (const auto& [word, count] : freq)
        CHECK(std::fabs(count / 2000.0 - 0.5) <= 0.05);

    // Validity across sizes.
    for (int n : {6, 20, 50, 200})
        CHECK(is_sorting_network(sample_rsn(n, 1234 + static_cast<std::uint64_t>(n))));
}

TEST_CASE("sample_rsn uniformity at n = 4") {
    const auto support = word_set(enumerate_networks(4));
    std::map<std::vector<int>, long long> freq;
    for (std::uint64_t seed = 0; seed < 2000; ++seed)
        freq[sample_rsn(4, mix_seed(777, seed)).positions] += 1;
    // Support is exactly the enumerated 16 words.
    for (const auto& [word, count] : freq) CHECK(support.count(word) == 1);
    CHECK(freq.size() == support.size());
    std::vector<long long> counts;
    for (const auto& [word, count] : freq) counts.push_back(count);
    CHECK(chi_square_uniform(counts).p_value > 0.01);
}

TEST_CASE("swap position distribution is stationary across steps") {
    // Homogeneity of the swap position across step indices (n = 6, N = 15).
    const int samples = 100000;
    std::vector<std::vector<long long>> table(15, std::vector<long long>(5, 0));
    for (int s = 0; s < samples; ++s) {
        const auto w = sample_rsn(6, mix_seed(31, static_cast<std::uint64_t>(s)));
        for (int k = 0; k < 15; ++k)
            table[static_cast<std::size_t>(k)][static_cast<std::size_t>(w.positions[static_cast<std::size_t>(k)]) - 1] += 1;
    }
    CHECK(chi_square_homogeneity(table).p_value > 0.01);
}

TEST_CASE("sample_interchange") {
    CHECK_THROWS_AS(sample_interchange(5, 0, 1), std::invalid_argument);

    const auto one = sample_interchange(5, 1, 3);
    CHECK(one.t_max() == 1);
    CHECK(inversions(one.snapshot(1)) == 1);

    const auto proc = sample_interchange(9, 60, 4);
    for (int t = 1; t <= proc.t_max(); ++t) {
        int diffs = 0;
        for (int i = 1; i <= 9; ++i)
            if (proc.snapshot(t)(i) != proc.snapshot(t - 1)(i)) ++diffs;
        CHECK(diffs == 2); // one adjacent swap
    }
}

TEST_CASE("sample_cycle_rotation") {
    const int n = 8;
    const auto proc = sample_cycle_rotation(n, 40, 5);
    // Each snapshot is a cyclic rotation of the identity, consecutive ones by
    // exactly one unit.
    long long prev_shift = 0;
    for (int t = 0; t <= proc.t_max(); ++t) {
        const auto w = proc.snapshot(t).word();
        const long long shift = (1 - w[0] % n + n) % n;
        for (int pos = 0; pos < n; ++pos)
            CHECK(w[static_cast<std::size_t>(pos)] ==
                  static_cast<int>(((pos - shift) % n + n) % n) + 1);
        if (t > 0) {
            const long long d = ((shift - prev_shift) % n + n) % n;
            CHECK((d == 1 || d == n - 1));
        }
        prev_shift = shift;
    }
    // Circular gaps between particles stay fixed; trajectories differ by a
    // constant circular offset.
    const auto inv0 = proc.snapshot(0).inverse_word();
    for (int t = 0; t <= proc.t_max(); ++t) {
        const auto inv = proc.snapshot(t).inverse_word();
        const int base = ((inv[0] - inv0[0]) % n + n) % n;
        for (int i = 0; i < n; ++i)
            CHECK(((inv[static_cast<std::size_t>(i)] - inv0[static_cast<std::size_t>(i)]) % n + n) % n == base);
    }
}

TEST_CASE("bubble_network") {
    CHECK(bubble_network(2).positions == std::vector<int>{1});
    const auto b3 = bubble_network(3);
    CHECK(is_sorting_network(b3));
    CHECK(word_set(enumerate_networks(3)).count(b3.positions) == 1);
    const auto b50 = bubble_network(50);
    CHECK(b50.positions.size() == 1225);
    CHECK(is_sorting_network(b50));
}

TEST_CASE("stretchable_network") {
    // Two antipodal points cross at exactly pi/4 and give the single swap.
    const auto two = DiscretePermuton::from_points({{-0.5, 0.5}, {0.5, -0.5}});
    const auto r2 = stretchable_network(two);
    CHECK(r2.word.positions == std::vector<int>{1});
    CHECK(r2.word.n == 2);

    // Reverse-permuton samples: all pairs cross (at the same angle), the
    // scheduled word is a full sorting network.
    const auto rev = sample_permuton(PermutonKind::reverse, 200, 71);
    const auto rr = stretchable_network(rev);
    CHECK(rr.word.positions.size() == 200 * 199 / 2);
    CHECK(is_sorting_network(rr.word));
    CHECK(rr.tie_warnings > 0);

    // Identity samples: no pair crosses.
    const auto id = sample_permuton(PermutonKind::identity, 50, 72);
    CHECK_THROWS_AS(stretchable_network(id), NotANetworkError);
    try {
        stretchable_network(id);
    } catch (const NotANetworkError& e) {
        CHECK(e.i >= 0);
        CHECK(e.j > e.i);
    }

    // A generic cloud in crossing position with distinct angles: any strictly
    // decreasing y(x) keeps every pair crossing while spreading the angles.
    PointSet ps;
    Rng rng(73);
    for (int i = 0; i < 40; ++i) {
        const double x = rng.uniform(-0.9, 0.9);
        ps.x.push_back(x);
        ps.y.push_back(-0.8 * x - 0.1 * x * x * x);
    }
    const auto generic = stretchable_network(DiscretePermuton::from_points(ps));
    CHECK(is_sorting_network(generic.word));
    CHECK(generic.tie_warnings == 0);
}

TEST_CASE("swap_histogram") {
    const auto b = bubble_network(50);
    const auto full = swap_histogram(b, 0.0, 1.0);
    long long total = 0;
    for (long long c : full) total += c;
    CHECK(total == 1225);
    // Bubble profile: position k is used in every pass of length >= k.
    for (int pos = 1; pos <= 49; ++pos)
        CHECK(full[static_cast<std::size_t>(pos) - 1] == 50 - pos);

    CHECK_THROWS_AS(swap_histogram(b, 0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(swap_histogram(b, -0.1, 0.5), std::invalid_argument);

    // RSN swap histogram: symmetric about the centre and centre-heavy.
    const auto w = sample_rsn(200, 2718);
    const auto h = swap_histogram(w, 0.0, 1.0);
    long long left = 0, right = 0, centre = 0, edges = 0;
    for (int pos = 1; pos <= 199; ++pos) {
        const long long c = h[static_cast<std::size_t>(pos) - 1];
        if (pos < 100) left += c;
        if (pos > 100) right += c;
        if (pos > 80 && pos <= 120) centre += c;
        if (pos <= 20 || pos > 180) edges += c;
    }
    const double N = static_cast<double>(w.positions.size());
    CHECK(std::fabs(static_cast<double>(left - right)) / N <= 0.05);
    CHECK(centre > edges);
}
