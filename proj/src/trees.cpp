#include "minfact/trees.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace minfact {

AndreEnumerator::AndreEnumerator(int n) {
    if (n < 1) throw std::invalid_argument("tree size must be positive");
    tree_.n = n;
    tree_.parent.assign(n + 1, 0);
}

bool AndreEnumerator::valid() const {
    const int n = tree_.n;
    std::vector<int> kids(n + 1, 0);
    for (int i = 1; i < n; ++i)
        if (++kids[tree_.parent[i]] > 2) return false;
    return true;
}

bool AndreEnumerator::next() {
    const int n = tree_.n;
    if (!init_) {
        init_ = true;
        for (int i = 1; i < n; ++i) tree_.parent[i] = i + 1;
        if (valid()) return true;
    }
    if (n == 1 || tree_.parent.empty()) {
        tree_.parent.clear();
        return false;
    }
    while (true) {
        // Odometer over parent[i] in {i+1..n}, most significant at i = n-1.
        int i = 1;
        while (i < n && tree_.parent[i] == n) {
            tree_.parent[i] = i + 1;
            ++i;
        }
        if (i == n) {
            tree_.parent.clear();
            return false;
        }
        ++tree_.parent[i];
        if (valid()) return true;
    }
}

CayleyEnumerator::CayleyEnumerator(int n) {
    if (n < 2) throw std::invalid_argument("Cayley trees require n >= 2");
    tree_.n = n;
    tree_.parent.assign(n + 1, 0);
}

bool CayleyEnumerator::is_tree() const {
    const int n = tree_.n;
    // Every vertex must reach the root without revisiting.
    for (int s = 1; s < n; ++s) {
        int x = s, steps = 0;
        while (x != n) {
            x = tree_.parent[x];
            if (++steps > n) return false;
        }
    }
    return true;
}

bool CayleyEnumerator::next() {
    const int n = tree_.n;
    if (!init_) {
        init_ = true;
        for (int i = 1; i < n; ++i) tree_.parent[i] = 1;
        if (is_tree()) return true;
    }
    if (tree_.parent.empty()) return false;
    while (true) {
        int i = 1;
        while (i < n && tree_.parent[i] == n) {
            tree_.parent[i] = 1;
            ++i;
        }
        if (i == n) {
            tree_.parent.clear();
            return false;
        }
        ++tree_.parent[i];
        if (is_tree()) return true;
    }
}

std::vector<int> hook_lengths(const AndreTree& t) {
    std::vector<int> h(t.n + 1, 1);
    h[0] = 0;
    // Children carry smaller labels, so ascending order accumulates bottom-up.
    for (int i = 1; i < t.n; ++i) h[t.parent[i]] += h[i];
    return h;
}

Polynomial andre_weight(const AndreTree& t) {
    auto h = hook_lengths(t);
    Polynomial w(1);
    for (int i = 1; i <= t.n; ++i)
        if (h[i] > 1) w *= Polynomial(Monomial::var(i - 1), h[i] - 1) + Polynomial(2);
    return w;
}

Monomial cayley_weight(const CayleyTree& t) {
    std::vector<std::pair<int, int>> exps;
    for (int j = 1; j < t.n; ++j)
        if (t.parent[j] < j) exps.emplace_back(j - 1, 1);
    return Monomial(std::move(exps));
}

BigInt count_andre(int n) {
    AndreEnumerator e(n);
    BigInt c = 0;
    while (e.next()) ++c;
    return c;
}

Polynomial andre_weighted_sum(int n) {
    AndreEnumerator e(n);
    Polynomial sum;
    while (e.next()) sum += andre_weight(e.tree());
    return sum;
}

BigInt count_cayley(int n) {
    CayleyEnumerator e(n);
    BigInt c = 0;
    while (e.next()) ++c;
    return c;
}

Polynomial cayley_weighted_sum(int n) {
    CayleyEnumerator e(n);
    Polynomial sum;
    while (e.next()) sum += Polynomial(cayley_weight(e.tree()));
    return sum;
}

BigInt alternating_count(int n) {
    if (n <= 1) return 1;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    BigInt c = 0;
    do {
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i)
            ok = i % 2 == 0 ? perm[i] < perm[i + 1] : perm[i] > perm[i + 1];
        if (ok) ++c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return c;
}

bool check_hook_recursion(int n) {
    if (n < 2) throw std::invalid_argument("recursion check requires n >= 2");
    auto P = [](int m) { return m == 0 ? Polynomial(1) : hook_rhs(m); };
    Polynomial sum;
    const int vars = n - 1;  // the ground variables {0..n-2}
    for (unsigned mask = 0; mask < (1u << vars); ++mask) {
        std::vector<int> I, J;
        for (int v = 0; v < vars; ++v) (mask >> v & 1 ? I : J).push_back(v);
        std::map<int, int> remap_i, remap_j;
        for (size_t t = 0; t < I.size(); ++t) remap_i[static_cast<int>(t)] = I[t];
        for (size_t t = 0; t < J.size(); ++t) remap_j[static_cast<int>(t)] = J[t];
        sum += P(static_cast<int>(I.size())).rename_variables(remap_i) *
               P(static_cast<int>(J.size())).rename_variables(remap_j);
    }
    Polynomial lhs = Polynomial(2) * P(n);
    Polynomial rhs = (Polynomial(Monomial::var(n - 1), n - 1) + Polynomial(2)) * sum;
    return lhs == rhs;
}

}  // namespace minfact
