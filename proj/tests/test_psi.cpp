#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "minfact/chains.hpp"
#include "minfact/json_io.hpp"
#include "minfact/poly.hpp"
#include "minfact/psi.hpp"

using namespace minfact;

namespace {

Polynomial X(int v) { return Polynomial::variable(v); }

NCPartition make(std::vector<int> ground, std::vector<std::vector<int>> blocks) {
    return NCPartition(std::move(ground), std::move(blocks));
}

bool weight_has(const Monomial& m, int var) {
    for (auto& [v, e] : m.exponents())
        if (v == var) return true;
    return false;
}

}  // namespace

TEST_CASE("partition constructors") {
    // shift
    CHECK(shift(NCPartition::singletons(2), 3) == make({4, 5}, {{4}, {5}}));
    auto p = make({1, 2, 3}, {{1, 3}, {2}});
    CHECK(shift(p, 0) == p);
    CHECK(shift(shift(p, 2), 3) == shift(p, 5));

    // oplus
    CHECK(oplus(NCPartition::one_block(2), NCPartition::one_block(3)) ==
          make({1, 2, 3, 4, 5}, {{1, 2}, {3, 4, 5}}));
    auto a = NCPartition::one_block(2);
    auto b = make({1, 2, 3}, {{1, 3}, {2}});
    CHECK(oplus(a, b) == make({1, 2, 3, 4, 5}, {{1, 2}, {3, 5}, {4}}));
    auto c = NCPartition::one_block(1);
    CHECK(oplus(oplus(a, b), c) == oplus(a, oplus(b, c)));

    // wrap
    CHECK(wrap(1, 1, NCPartition::one_block(1)) == make({1, 2, 3}, {{1, 3}, {2}}));
    CHECK(wrap(2, 1, NCPartition::singletons(2)) ==
          make({1, 2, 3, 4, 5}, {{1, 2, 5}, {3}, {4}}));
    CHECK(classify_shape(wrap(2, 3, oplus(NCPartition::one_block(2), NCPartition::one_block(1)))) ==
          Shape::NearInterval);
}

TEST_CASE("classify_case on basic shapes") {
    // both interval: case 1
    auto upper1 = make({1, 2, 3, 4}, {{1, 2, 3}, {4}});
    auto lower1 = make({1, 2, 3, 4}, {{1}, {2, 3}, {4}});
    CHECK(classify_case(upper1, lower1).case_id == 1);

    // upper near-interval, lower interval: case 2
    auto upper2 = make({1, 2, 3, 4}, {{1, 4}, {2, 3}});
    auto lower2 = make({1, 2, 3, 4}, {{1}, {2, 3}, {4}});
    CHECK(classify_case(upper2, lower2).case_id == 2);

    // near-interval split of an interval block: case 5
    auto upper5 = make({1, 2, 3, 4}, {{1, 2, 3}, {4}});
    auto lower5 = make({1, 2, 3, 4}, {{1, 3}, {2}, {4}});
    auto m5 = classify_case(upper5, lower5);
    CHECK(m5.case_id == 5);
    CHECK(m5.bar == 1);  // I is empty
}

TEST_CASE("the three chains of N((2,2)) land on distinct bars") {
    FactorizationType a({2, 2});
    ChainEnumerator e(a);
    std::set<int> bars;
    while (e.next()) {
        PsiResult out = psi(e.chain());
        CHECK(out.gamma.partitions.size() == 2);
        CHECK(out.gamma.partitions[0] == NCPartition::singletons(3));
        CHECK(out.gamma.partitions[1] == NCPartition::one_block(3));
        bars.insert(out.bar);
    }
    CHECK(bars == std::set<int>{1, 2, 3});
}

TEST_CASE("psi is a bijection onto N(a') x {1..n}") {
    for (int n = 3; n <= 6; ++n) {
        for (const auto& a : all_types(n)) {
            if (a.r() < 2) continue;
            FactorizationType ap = a.fuse_last_two();
            std::set<std::pair<Chain, int>> image;
            long long total = 0;
            ChainEnumerator e(a);
            std::string why;
            while (e.next()) {
                Chain chain = e.chain();
                ++total;
                PsiResult out = psi(chain);
                CHECK(validate_chain(out.gamma, ap, &why));
                CHECK((out.bar >= 1 && out.bar <= n));
                CHECK(image.emplace(out.gamma, out.bar).second);
                CHECK(psi_inverse(out.gamma, out.bar, a) == chain);
            }
            // surjectivity: psi_inverse is total and sections psi
            ChainEnumerator g(ap);
            long long pairs = 0;
            while (g.next()) {
                Chain gamma = g.chain();
                for (int bar = 1; bar <= n; ++bar) {
                    ++pairs;
                    Chain back = psi_inverse(gamma, bar, a);
                    CHECK(validate_chain(back, a, &why));
                    PsiResult fwd = psi(back);
                    CHECK(fwd.gamma == gamma);
                    CHECK(fwd.bar == bar);
                }
            }
            CHECK(total == pairs);
        }
    }
}

TEST_CASE("exactly one case template matches every top step") {
    for (int n = 3; n <= 6; ++n) {
        for (const auto& a : all_types(n)) {
            if (a.r() < 2) continue;
            std::map<int, long> histogram;
            ChainEnumerator e(a);
            while (e.next()) {
                const Chain c = e.chain();
                auto ms = match_cases(c.partitions[a.r() - 1], c.partitions[a.r() - 2]);
                REQUIRE(ms.size() == 1);
                ++histogram[ms[0].case_id];
            }
            (void)histogram;
        }
    }
    // all ten cases are actually exercised somewhere at n = 6
    std::map<int, long> seen;
    for (const auto& a : all_types(6)) {
        if (a.r() < 2) continue;
        ChainEnumerator e(a);
        while (e.next()) {
            const Chain c = e.chain();
            ++seen[classify_case(c.partitions[a.r() - 1], c.partitions[a.r() - 2]).case_id];
        }
    }
    for (int id = 1; id <= 10; ++id) CHECK(seen[id] > 0);
}

TEST_CASE("weight bookkeeping across psi") {
    for (int n = 3; n <= 6; ++n) {
        for (const auto& a : all_types(n)) {
            if (a.r() < 2) continue;
            const int r = a.r();
            ChainEnumerator e(a);
            while (e.next()) {
                Chain chain = e.chain();
                PsiResult out = psi(chain);
                Monomial w = chain_weight(chain), wg = chain_weight(out.gamma);
                // below the top, variables are preserved
                for (int i = 1; i <= r - 3; ++i)
                    CHECK(weight_has(w, i) == weight_has(wg, i));
                // X_{r-2} tracks whether the image's second-to-top is interval
                if (r >= 2) {
                    bool img_interval =
                        classify_shape(out.gamma.partitions[r - 2]) == Shape::Interval;
                    if (r >= 3) CHECK(weight_has(w, r - 2) == !img_interval);
                    CHECK((out.case_id <= 4) == img_interval);
                }
                // the weight changes by at most the factor X_{r-1}
                Polynomial pw(w), pwg(wg);
                CHECK((pw == pwg || pw == pwg * X(r - 1)));
            }
        }
    }
}

TEST_CASE("each fiber sums to wt(gamma) times the split factor") {
    for (int n = 3; n <= 6; ++n) {
        for (const auto& a : all_types(n)) {
            if (a.r() < 2) continue;
            const int r = a.r();
            const int a_r = a.parts[r - 1];
            std::map<Chain, Polynomial> fibers;
            ChainEnumerator e(a);
            while (e.next()) {
                PsiResult out = psi(e.chain());
                fibers[out.gamma] += Polynomial(e.weight());
            }
            const Polynomial factor = Polynomial(Monomial::var(r - 1), n - a_r) + Polynomial(a_r);
            for (const auto& [gamma, sum] : fibers)
                CHECK(sum == Polynomial(chain_weight(gamma)) * factor);
        }
    }
}

TEST_CASE("for each image, exactly a_r bars make the reconstructed top interval") {
    for (int n = 3; n <= 6; ++n) {
        for (const auto& a : all_types(n)) {
            if (a.r() < 2) continue;
            const int r = a.r();
            ChainEnumerator g(a.fuse_last_two());
            while (g.next()) {
                Chain gamma = g.chain();
                int interval_tops = 0;
                for (int bar = 1; bar <= n; ++bar) {
                    Chain back = psi_inverse(gamma, bar, a);
                    if (classify_shape(back.partitions[r - 1]) == Shape::Interval)
                        ++interval_tops;
                }
                CHECK(interval_tops == a.parts[r - 1]);
            }
        }
    }
}

TEST_CASE("the recursion P_a = P_a' ((n - a_r) X_{r-1} + a_r) closes the product formula") {
    for (int n = 3; n <= 6; ++n) {
        for (const auto& a : all_types(n)) {
            if (a.r() < 2) continue;
            const int r = a.r();
            const int a_r = a.parts[r - 1];
            Polynomial lhs = weighted_sum(a);
            Polynomial rhs = weighted_sum(a.fuse_last_two()) *
                             (Polynomial(Monomial::var(r - 1), n - a_r) + Polynomial(a_r));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("psi rejects malformed input") {
    Chain not_enough{{NCPartition::singletons(3), NCPartition::one_block(3)}};
    CHECK_THROWS_AS(psi(not_enough), std::invalid_argument);  // r = 1

    FactorizationType a({2, 2});
    Chain gamma{{NCPartition::singletons(3), NCPartition::one_block(3)}};
    CHECK_THROWS_AS(psi_inverse(gamma, 0, a), std::invalid_argument);
    CHECK_THROWS_AS(psi_inverse(gamma, 4, a), std::invalid_argument);
    CHECK_THROWS_AS(psi_inverse(gamma, 1, FactorizationType({4})), std::invalid_argument);
}
