#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "minfact/chains.hpp"
#include "minfact/json_io.hpp"
#include "minfact/ncpart.hpp"
#include "minfact/perm.hpp"
#include "minfact/poly.hpp"

using namespace minfact;

namespace {

Polynomial X(int v) { return Polynomial::variable(v); }

std::vector<Chain> collect(const FactorizationType& a) {
    ChainEnumerator e(a);
    std::vector<Chain> out;
    while (e.next()) out.push_back(e.chain());
    return out;
}

// Independent oracle for M(a): all tuples (z_1..z_{r-1}) of cycles of the
// prescribed lengths, with z_r forced by the group law and kept only when it
// is a cycle of length a_r. Enumerates cycles as (support subset, rotation).
std::vector<std::vector<Permutation>> brute_force_factorizations(const FactorizationType& a) {
    const int n = a.n;
    const Permutation C = Permutation::long_cycle(n);
    std::vector<std::vector<Permutation>> cycles_by_len(n + 1);
    for (int len = 2; len <= n; ++len) {
        std::vector<int> pick(len);
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (depth == len) {
                // all cyclic orders of the chosen support with pick[0] fixed
                std::vector<int> rest(pick.begin() + 1, pick.end());
                std::sort(rest.begin(), rest.end());
                do {
                    std::vector<int> support{pick[0]};
                    support.insert(support.end(), rest.begin(), rest.end());
                    cycles_by_len[len].push_back(Permutation::from_cycle(n, support));
                } while (std::next_permutation(rest.begin(), rest.end()));
                return;
            }
            for (int v = start; v <= n; ++v) {
                pick[depth] = v;
                self(self, v + 1, depth + 1);
            }
        };
        rec(rec, 1, 0);
    }

    std::vector<std::vector<Permutation>> found;
    std::vector<Permutation> tuple;
    auto rec = [&](auto&& self, int i, const Permutation& prefix) -> void {
        if (i == a.r() - 1) {
            Permutation z = compose(prefix.inverse(), C);
            auto support = cycle_of(z);
            if (support && static_cast<int>(support->size()) == a.parts[a.r() - 1]) {
                tuple.push_back(z);
                found.push_back(tuple);
                tuple.pop_back();
            }
            return;
        }
        for (const auto& z : cycles_by_len[a.parts[i]]) {
            tuple.push_back(z);
            self(self, i + 1, compose(prefix, z));
            tuple.pop_back();
        }
    };
    rec(rec, 0, Permutation::identity(n));
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace

TEST_CASE("factorization type validation") {
    CHECK(FactorizationType({2, 2, 2}).n == 4);
    CHECK(FactorizationType({5}).n == 5);
    CHECK(FactorizationType({3, 2}).fuse_last_two().parts == std::vector<int>{4});
    CHECK_THROWS_AS(FactorizationType({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FactorizationType({}), std::invalid_argument);
}

TEST_CASE("chain enumeration basics") {
    auto single = collect(FactorizationType({3}));
    REQUIRE(single.size() == 1);
    CHECK(single[0].partitions.front() == NCPartition::singletons(3));
    CHECK(single[0].partitions.back() == NCPartition::one_block(3));

    auto three = collect(FactorizationType({2, 2}));
    REQUIRE(three.size() == 3);
    std::set<NCPartition> middles;
    for (const auto& c : three) middles.insert(c.partitions[1]);
    CHECK(middles == std::set<NCPartition>{
                         NCPartition({1, 2, 3}, {{1, 2}, {3}}),
                         NCPartition({1, 2, 3}, {{1, 3}, {2}}),
                         NCPartition({1, 2, 3}, {{1}, {2, 3}}),
                     });

    CHECK(collect(FactorizationType({2, 2, 2})).size() == 16);
}

TEST_CASE("chain counts are n^{r-1} and every chain validates") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& a : all_types(n)) {
            BigInt count = 0;
            ChainEnumerator e(a);
            std::string why;
            while (e.next()) {
                ++count;
                Chain c = e.chain();
                CHECK(validate_chain(c, a, &why));
                CHECK(type_of(c).parts == a.parts);
            }
            CHECK(count == int_pow(n, a.r() - 1));
        }
    }
}

TEST_CASE("enumeration is deterministic and duplicate-free") {
    FactorizationType a({3, 2, 2});
    auto first = collect(a);
    auto second = collect(a);
    CHECK(first == second);
    std::set<Chain> uniq(first.begin(), first.end());
    CHECK(uniq.size() == first.size());
}

TEST_CASE("chain_to_factorization on small chains") {
    Chain trivial{{NCPartition::singletons(3), NCPartition::one_block(3)}};
    auto f = chain_to_factorization(trivial);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == Permutation::long_cycle(3));

    Chain two{{NCPartition::singletons(3), NCPartition({1, 2, 3}, {{1, 2}, {3}}),
               NCPartition::one_block(3)}};
    auto g = chain_to_factorization(two);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0] == Permutation::from_cycle(3, {1, 2}));
    CHECK(compose(g.factors[0], g.factors[1]) == Permutation::long_cycle(3));
    CHECK(g.factors[1] == Permutation::from_cycle(3, {2, 3}));
}

TEST_CASE("the chain-factorization bijection matches the brute-force oracle") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& a : all_types(n)) {
            auto expected = brute_force_factorizations(a);
            std::vector<std::vector<Permutation>> got;
            ChainEnumerator e(a);
            while (e.next()) {
                Chain c = e.chain();
                Factorization f = chain_to_factorization(c);
                // each factor is a cycle of the prescribed length
                REQUIRE(f.factors.size() == static_cast<size_t>(a.r()));
                for (int i = 0; i < a.r(); ++i) {
                    auto support = cycle_of(f.factors[i]);
                    REQUIRE(support.has_value());
                    CHECK(static_cast<int>(support->size()) == a.parts[i]);
                }
                // round trip through the inverse map
                CHECK(factorization_to_chain(f) == c);
                got.push_back(f.factors);
            }
            std::sort(got.begin(), got.end());
            CHECK(got == expected);  // bijective onto the brute-force set
        }
    }
}

TEST_CASE("factorization_to_chain on the staircase transpositions") {
    for (int n = 3; n <= 6; ++n) {
        Factorization f;
        for (int i = 1; i <= n - 1; ++i)
            f.factors.push_back(Permutation::from_cycle(n, {i, i + 1}));
        Chain c = factorization_to_chain(f);
        // pi_i merges {1..i+1}, all interval partitions
        for (int i = 0; i <= n - 1; ++i) {
            std::vector<std::vector<int>> blocks;
            std::vector<int> head;
            for (int x = 1; x <= i + 1; ++x) head.push_back(x);
            blocks.push_back(head);
            for (int x = i + 2; x <= n; ++x) blocks.push_back({x});
            CHECK(c.partitions[i] == NCPartition(c.partitions[i].ground(), blocks));
        }
        CHECK(chain_weight(c).is_one());
    }
}

TEST_CASE("factorization_to_chain rejects non-minimal input") {
    // (1,3), (2,4), (1,4,3,2) multiply to the long cycle of S_4 but the
    // second prefix is off every geodesic.
    Factorization f;
    f.factors.push_back(Permutation::from_cycle(4, {1, 3}));
    f.factors.push_back(Permutation::from_cycle(4, {2, 4}));
    Permutation prefix = compose(f.factors[0], f.factors[1]);
    f.factors.push_back(compose(prefix.inverse(), Permutation::long_cycle(4)));
    CHECK(compose(prefix, f.factors[2]) == Permutation::long_cycle(4));
    CHECK_THROWS_AS(factorization_to_chain(f), std::invalid_argument);

    Factorization wrong_product;
    wrong_product.factors.push_back(Permutation::from_cycle(3, {1, 3}));
    wrong_product.factors.push_back(Permutation::from_cycle(3, {2, 3}));
    CHECK_THROWS_AS(factorization_to_chain(wrong_product), std::invalid_argument);
}

TEST_CASE("weights") {
    // the all-interval staircase chain has weight 1 (checked above); the
    // near-interval middle {13|2} carries X_1
    Chain near{{NCPartition::singletons(3), NCPartition({1, 2, 3}, {{1, 3}, {2}}),
                NCPartition::one_block(3)}};
    CHECK(Polynomial(chain_weight(near)) == X(1));

    CHECK(weighted_sum(FactorizationType({5})) == Polynomial(1));
    CHECK(weighted_sum(FactorizationType({2, 2})) == X(1) + Polynomial(2));
    CHECK(weighted_sum(FactorizationType({3, 2})) == Polynomial(2) * X(1) + Polynomial(2));
    CHECK(weighted_sum(FactorizationType({2, 2, 2})) ==
          (X(1) + Polynomial(3)) * (Polynomial(2) * X(2) + Polynomial(2)));

    // enumerator's incremental weight agrees with the from-scratch recompute
    FactorizationType a({2, 3, 2});
    ChainEnumerator e(a);
    while (e.next()) CHECK(e.weight() == chain_weight(e.chain()));
}

TEST_CASE("weighted sums match the product formula") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& a : all_types(n))
            CHECK(weighted_sum(a) == type_product_rhs(a.parts));

    // a 36-chain case with a non-transposition factor, written out
    CHECK(weighted_sum(FactorizationType({2, 3, 3})) ==
          (X(1) + Polynomial(5)) * (Polynomial(3) * X(2) + Polynomial(3)));
}

TEST_CASE("parallel weighted sum returns identical polynomials") {
    FactorizationType a(std::vector<int>(6, 2));  // n = 7 maximal chains
    Polynomial serial = weighted_sum(a, 1);
    CHECK(weighted_sum(a, 2) == serial);
    CHECK(weighted_sum(a, 3) == serial);
    CHECK(weighted_sum(a, 8) == serial);
}

TEST_CASE("final chains") {
    CHECK(count_final_chains(3, 2) == 3);
    CHECK(final_weighted_sum(3, 2) == X(1) + Polynomial(2));
    for (int n = 2; n <= 6; ++n)
        for (int k = 2; k <= n; ++k) {
            CHECK(count_final_chains(n, k) == int_pow(n, k - 2) * binomial(n, k));
            CHECK(final_weighted_sum(n, k) == final_chain_rhs(n, k));
        }
}

TEST_CASE("final chains complete to maximal chains in (n-k)! ways") {
    for (int n = 3; n <= 6; ++n) {
        // group the maximal chains with all-interval prefix by their final k
        // entries; each final chain must appear exactly (n-k)! times
        for (int k = 2; k <= n; ++k) {
            std::map<std::vector<NCPartition>, long> completions;
            ChainEnumerator e(FactorizationType(std::vector<int>(n - 1, 2)));
            while (e.next()) {
                Chain c = e.chain();
                bool prefix_interval = true;
                for (int i = 1; i <= n - k && prefix_interval; ++i)
                    prefix_interval = step_split(c.partitions[i - 1], c.partitions[i]).shape ==
                                      Shape::Interval;
                if (!prefix_interval) continue;
                std::vector<NCPartition> tail(c.partitions.end() - k, c.partitions.end());
                ++completions[tail];
            }
            BigInt expected_count = int_pow(n, k - 2) * binomial(n, k);
            CHECK(BigInt(static_cast<long>(completions.size())) == expected_count);
            for (const auto& [tail, ways] : completions)
                CHECK(BigInt(ways) == factorial(n - k));
        }
    }
}

TEST_CASE("chain json round trip") {
    FactorizationType a({2, 3});
    ChainEnumerator e(a);
    while (e.next()) {
        Chain c = e.chain();
        auto j = to_json(c);
        CHECK(j["n"] == 4);
        CHECK(j["a"] == std::vector<int>{2, 3});
        CHECK(chain_from_json(j) == c);
    }
}
