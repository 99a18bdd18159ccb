#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace minfact {

/// Permutation of {1..n}, stored as the image table under 1-based labels.
/// Immutable value type; all operations return fresh values.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    /// The long cycle (1,2,...,n): i -> i+1, n -> 1. Requires n >= 1.
    static Permutation long_cycle(int n);

    /// Cycle through the given support, each element mapped to the next
    /// (last -> first); everything else in {1..n} fixed.
    static Permutation from_cycle(int n, const std::vector<int>& support);

    int size() const { return static_cast<int>(images_.size()); }
    int apply(int x) const { return images_[x - 1]; }
    int operator()(int x) const { return apply(x); }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

    /// Orbits sorted by minimum element; within an orbit, elements in
    /// visiting order starting from the minimum.
    std::vector<std::vector<int>> cycles() const;

    int cycle_count() const;

private:
    std::vector<int> images_;
};

/// Product under standard function composition: compose(a,b)(x) = a(b(x)),
/// so in a product z_1 z_2 ... z_r the rightmost factor acts first.
/// This is the convention under which (1,2)(2,3)...(n-1,n) equals the
/// long cycle. Requires equal ground sizes.
Permutation compose(const Permutation& a, const Permutation& b);

/// Cayley-graph length: n minus the number of orbits (fixed points count).
int length(const Permutation& sigma);

/// True iff length is additive across total = compose(prefix, mid).
/// Requires that the factorization actually holds.
bool is_geodesic_triple(const Permutation& prefix, const Permutation& mid,
                        const Permutation& total);

/// If sigma has exactly one non-singleton orbit, its elements in visiting
/// order from the minimum; otherwise nullopt.
std::optional<std::vector<int>> cycle_of(const Permutation& sigma);

}  // namespace minfact
