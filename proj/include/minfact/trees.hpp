#pragma once

#include <vector>

#include "minfact/poly.hpp"

namespace minfact {

/// Decreasingly labelled tree: root n, every child label smaller than its
/// parent, at most two (unordered) children per vertex. parent[i] is the
/// parent of label i for 1 <= i < n; parent[n] = 0.
struct AndreTree {
    int n = 0;
    std::vector<int> parent;  // size n+1, index 0 unused

    bool operator==(const AndreTree& o) const { return n == o.n && parent == o.parent; }
};

/// Rooted labelled tree on {1..n}, root n, edges oriented to the root.
struct CayleyTree {
    int n = 0;
    std::vector<int> parent;  // size n+1, index 0 unused; parent[n] = 0

    bool operator==(const CayleyTree& o) const { return n == o.n && parent == o.parent; }
};

/// Streams the decreasingly labelled trees on n vertices in lexicographic
/// parent-vector order; their count is the Euler number E_n.
class AndreEnumerator {
public:
    explicit AndreEnumerator(int n);
    bool next();
    const AndreTree& tree() const { return tree_; }

private:
    bool valid() const;
    AndreTree tree_;
    bool init_ = false;
};

/// Streams all n^{n-2} rooted trees via parent-vector iteration with cycle
/// rejection, lexicographic order.
class CayleyEnumerator {
public:
    explicit CayleyEnumerator(int n);
    bool next();
    const CayleyTree& tree() const { return tree_; }

private:
    bool is_tree() const;
    CayleyTree tree_;
    bool init_ = false;
};

/// Subtree sizes: hooks[i] counts the vertices below label i, including it.
std::vector<int> hook_lengths(const AndreTree& t);

/// Product over vertices with hook length > 1 of (X_{i-1}(h_i - 1) + 2).
Polynomial andre_weight(const AndreTree& t);

/// Square-free monomial with a factor X_{j-1} for every decreasing edge
/// j -> parent(j), parent(j) < j.
Monomial cayley_weight(const CayleyTree& t);

BigInt count_andre(int n);
Polynomial andre_weighted_sum(int n);
BigInt count_cayley(int n);
Polynomial cayley_weighted_sum(int n);

/// Independent Euler-number oracle: the number of up-down alternating
/// permutations of {1..n}, by brute force.
BigInt alternating_count(int n);

/// Verifies the doubling recursion for P_n = hook-product polynomials:
/// 2 P_n = ((n-1)X_{n-1} + 2) * sum over {0..n-2} = I ⊎ J of the products
/// of P_{|I|}, P_{|J|} with variables renamed along I and J. Exact.
bool check_hook_recursion(int n);

}  // namespace minfact
