#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "minfact/perm.hpp"

using namespace minfact;

namespace {

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i + 1;
    std::vector<Permutation> out;
    do out.emplace_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
}

// Independent oracle: BFS distance from the identity in the transposition
// Cayley graph.
std::map<Permutation, int> cayley_distances(int n) {
    std::vector<Permutation> transpositions;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            transpositions.push_back(Permutation::from_cycle(n, {i, j}));
    std::map<Permutation, int> dist;
    std::vector<Permutation> frontier{Permutation::identity(n)};
    dist[frontier[0]] = 0;
    int depth = 0;
    while (!frontier.empty()) {
        ++depth;
        std::vector<Permutation> next;
        for (const auto& s : frontier)
            for (const auto& t : transpositions) {
                Permutation u = compose(s, t);
                if (dist.emplace(u, depth).second) next.push_back(u);
            }
        frontier = std::move(next);
    }
    return dist;
}

}  // namespace

TEST_CASE("long cycle") {
    CHECK(Permutation::long_cycle(1) == Permutation::identity(1));
    CHECK(Permutation::long_cycle(3).images() == std::vector<int>{2, 3, 1});
    CHECK(Permutation::long_cycle(5).images() == std::vector<int>{2, 3, 4, 5, 1});
    CHECK_THROWS_AS(Permutation::long_cycle(0), std::invalid_argument);
}

TEST_CASE("composition convention") {
    const Permutation id3 = Permutation::identity(3);
    const Permutation c3 = Permutation::long_cycle(3);
    CHECK(compose(id3, c3) == c3);
    CHECK(compose(c3, c3.inverse()) == id3);

    // (1,2)(2,3) must equal (1,2,3): this pins the product convention.
    Permutation t12 = Permutation::from_cycle(3, {1, 2});
    Permutation t23 = Permutation::from_cycle(3, {2, 3});
    CHECK(compose(t12, t23) == c3);

    // (1,2)(2,3)...(n-1,n) = the long cycle, for several n.
    for (int n = 2; n <= 6; ++n) {
        Permutation prod = Permutation::identity(n);
        for (int i = n - 1; i >= 1; --i)
            prod = compose(Permutation::from_cycle(n, {i, i + 1}), prod);
        CHECK(prod == Permutation::long_cycle(n));
    }

    CHECK_THROWS_AS(compose(Permutation::identity(2), Permutation::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("length") {
    CHECK(length(Permutation::identity(4)) == 0);
    CHECK(length(Permutation::long_cycle(3)) == 2);
    Permutation p = compose(Permutation::from_cycle(5, {1, 2}), Permutation::from_cycle(5, {3, 4}));
    CHECK(length(p) == 2);
}

TEST_CASE("geodesic triple") {
    const Permutation c3 = Permutation::long_cycle(3);
    CHECK(is_geodesic_triple(Permutation::identity(3), c3, c3));

    // (1,3) followed by (1,2) multiplies to the long cycle with additive lengths.
    Permutation t13 = Permutation::from_cycle(3, {1, 3});
    Permutation t12 = Permutation::from_cycle(3, {1, 2});
    CHECK(compose(t13, t12) == c3);
    CHECK(is_geodesic_triple(t13, t12, c3));

    // A factorization of C whose lengths overshoot.
    Permutation cinv = c3.inverse();
    Permutation rest = compose(cinv.inverse(), c3);
    CHECK(compose(cinv, rest) == c3);
    CHECK_FALSE(is_geodesic_triple(cinv, rest, c3));

    CHECK_THROWS_AS(is_geodesic_triple(t12, t12, c3), std::invalid_argument);
}

TEST_CASE("cycle_of") {
    Permutation z = Permutation::from_cycle(3, {1, 3, 2});
    auto c = cycle_of(z);
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<int>{1, 3, 2});
    CHECK_FALSE(cycle_of(Permutation::identity(3)).has_value());
    Permutation two = compose(Permutation::from_cycle(4, {1, 2}), Permutation::from_cycle(4, {3, 4}));
    CHECK_FALSE(cycle_of(two).has_value());
}

TEST_CASE("length is the Cayley distance, with metric properties") {
    for (int n = 2; n <= 5; ++n) {
        auto dist = cayley_distances(n);
        auto group = symmetric_group(n);
        for (const auto& s : group) {
            CHECK(length(s) == dist.at(s));
            CHECK(length(s) == length(s.inverse()));
        }
        if (n <= 4) {
            for (const auto& s : group)
                for (const auto& t : group)
                    CHECK(length(compose(s, t.inverse())) <= length(s) + length(t));
        }
    }
}

TEST_CASE("cyclic factors of additive factorizations are increasing") {
    for (int n = 3; n <= 5; ++n) {
        const Permutation C = Permutation::long_cycle(n);
        auto group = symmetric_group(n);
        for (const auto& a : group) {
            for (const auto& z : group) {
                auto support = cycle_of(z);
                if (!support) continue;
                Permutation b = compose(z.inverse(), compose(a.inverse(), C));
                if (length(a) + length(z) + length(b) != n - 1) continue;
                auto sorted = *support;
                std::sort(sorted.begin(), sorted.end());
                CHECK(*support == sorted);
            }
        }
    }
}
