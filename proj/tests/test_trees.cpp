#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "minfact/poly.hpp"
#include "minfact/trees.hpp"

using namespace minfact;

namespace {

Polynomial X(int v) { return Polynomial::variable(v); }

AndreTree andre(int n, std::vector<int> parent_of_1_up) {
    AndreTree t;
    t.n = n;
    t.parent.assign(n + 1, 0);
    for (int i = 1; i < n; ++i) t.parent[i] = parent_of_1_up[i - 1];
    return t;
}

}  // namespace

TEST_CASE("decreasing tree counts are the Euler numbers") {
    const long expected[] = {0, 1, 1, 2, 5, 16, 61, 272};
    for (int n = 1; n <= 7; ++n) {
        CHECK(count_andre(n) == expected[n]);
        CHECK(count_andre(n) == alternating_count(n));
    }
}

TEST_CASE("the five trees on four vertices and their weights") {
    std::set<std::vector<int>> parents;
    AndreEnumerator e(4);
    while (e.next()) parents.insert(e.tree().parent);
    CHECK(parents == std::set<std::vector<int>>{
                         {0, 2, 3, 4, 0},
                         {0, 3, 3, 4, 0},
                         {0, 2, 4, 4, 0},
                         {0, 3, 4, 4, 0},
                         {0, 4, 3, 4, 0},
                     });

    auto term = [](int var, int mult) { return Polynomial(Monomial::var(var), mult) + Polynomial(2); };
    // the path 4-3-2-1
    CHECK(andre_weight(andre(4, {2, 3, 4})) == term(3, 3) * term(2, 2) * term(1, 1));
    // 4-3 with 3 covering the two leaves 1, 2
    CHECK(andre_weight(andre(4, {3, 3, 4})) == term(3, 3) * term(2, 2));
    // 4 covering 3 and the path 2-1
    CHECK(andre_weight(andre(4, {2, 4, 4})) == term(3, 3) * term(1, 1));
    // 4 covering 2 and the path 3-1
    CHECK(andre_weight(andre(4, {3, 4, 4})) == term(3, 3) * term(2, 1));
    // 4 covering 1 and the path 3-2
    CHECK(andre_weight(andre(4, {4, 3, 4})) == term(3, 3) * term(2, 1));

    Polynomial total;
    for (auto& p : parents) {
        AndreTree t;
        t.n = 4;
        t.parent = p;
        total += andre_weight(t);
    }
    CHECK(total == hook_rhs(4));
    CHECK(total == (X(1) + Polynomial(4)) * (Polynomial(2) * X(2) + Polynomial(3)) *
                       (Polynomial(3) * X(3) + Polynomial(2)));
}

TEST_CASE("hook lengths") {
    AndreTree path = andre(4, {2, 3, 4});
    CHECK(hook_lengths(path) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(andre_weight(andre(1, {})) == Polynomial(1));

    for (int n = 1; n <= 6; ++n) {
        AndreEnumerator e(n);
        while (e.next()) {
            auto h = hook_lengths(e.tree());
            CHECK(h[n] == n);  // the root sees everything
            int leaves = 0, hooks1 = 0;
            std::vector<bool> has_child(n + 1, false);
            for (int i = 1; i < n; ++i) has_child[e.tree().parent[i]] = true;
            for (int i = 1; i <= n; ++i) {
                if (!has_child[i]) ++leaves;
                if (h[i] == 1) ++hooks1;
            }
            CHECK(leaves == hooks1);
        }
    }
}

TEST_CASE("tree weight sums equal the hook product") {
    for (int n = 1; n <= 6; ++n) CHECK(andre_weighted_sum(n) == hook_rhs(n));
}

TEST_CASE("the dummy variable X_0 never appears") {
    for (int n = 1; n <= 6; ++n) {
        Polynomial sum = andre_weighted_sum(n);
        for (const auto& [m, c] : sum.terms())
            for (const auto& [v, e] : m.exponents()) CHECK(v >= 1);
    }
}

TEST_CASE("Cayley trees: counts, weights, and the product formula") {
    // three rooted trees on {1,2,3}: weights 1, 1, X1
    CayleyEnumerator e3(3);
    std::vector<Monomial> weights;
    while (e3.next()) weights.push_back(cayley_weight(e3.tree()));
    REQUIRE(weights.size() == 3);
    Polynomial sum3;
    for (auto& w : weights) sum3 += Polynomial(w);
    CHECK(sum3 == X(1) + Polynomial(2));

    CHECK(count_cayley(4) == 16);
    for (int n = 2; n <= 6; ++n) {
        CHECK(count_cayley(n) == int_pow(n, n - 2));
        Polynomial direct(1);
        for (int i = 1; i <= n - 2; ++i)
            direct *= Polynomial(Monomial::var(i), i) + Polynomial(n - i);
        CHECK(cayley_weighted_sum(n) == direct);
        std::vector<int> twos(n - 1, 2);
        CHECK(cayley_weighted_sum(n) == type_product_rhs(twos));
    }
}

TEST_CASE("the doubling recursion for the hook polynomials") {
    // n = 2 by hand: both splits of {0} contribute 1, so the right side is
    // ((X1 + 2) / 2) * 2 = X1 + 2 = P_2.
    CHECK(check_hook_recursion(2));
    for (int n = 3; n <= 6; ++n) CHECK(check_hook_recursion(n));
}
