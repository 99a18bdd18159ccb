#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "minfact/ncpart.hpp"
#include "minfact/perm.hpp"
#include "minfact/poly.hpp"

namespace minfact {

/// A factorization type a = (a_1..a_r), a_i >= 2, with implied ground size
/// n = 1 + sum (a_i - 1) (the minimality condition).
struct FactorizationType {
    std::vector<int> parts;
    int n = 0;

    explicit FactorizationType(std::vector<int> p);
    int r() const { return static_cast<int>(parts.size()); }

    /// (a_1..a_{r-2}, a_{r-1}+a_r-1): the type with the last two parts fused.
    FactorizationType fuse_last_two() const;
};

/// Element of N(a): partitions pi_0 = 0-hat up to pi_r = 1-hat, where
/// pi_{i-1} arises from pi_i by splitting one block into a_i parts forming
/// an interval or near-interval partition of that block.
struct Chain {
    std::vector<NCPartition> partitions;
    bool operator==(const Chain& o) const { return partitions == o.partitions; }
    bool operator<(const Chain& o) const { return partitions < o.partitions; }
};

/// Minimal factorization of the long cycle: cycles z_1..z_r with
/// z_1 z_2 ... z_r = C (rightmost factor acting first).
struct Factorization {
    std::vector<Permutation> factors;
    bool operator==(const Factorization& o) const { return factors == o.factors; }
};

/// For a step lower <- upper (upper with one block split), the split block
/// and the shape its parts form as a partition of it.
struct StepSplit {
    std::vector<int> block;
    std::vector<std::vector<int>> parts;
    Shape shape = Shape::Other;
};
StepSplit step_split(const NCPartition& lower, const NCPartition& upper);

/// Membership test for N(a); on failure, *why names the offending step.
bool validate_chain(const Chain& chain, const FactorizationType& a,
                    std::string* why = nullptr);

FactorizationType type_of(const Chain& chain);

/// The weight monomial: X_i for each i in 1..r-1 such that the step
/// pi_i -> pi_{i+1} splits a block of pi_{i+1} into near-interval parts.
Monomial chain_weight(const Chain& chain);

/// Streams N(a) in a fixed order: top-down recursive splitting, candidate
/// blocks by minimum element, splits in lexicographic order of their
/// part-minimum sequences. Usage: while (e.next()) { ... e.chain() ... }.
class ChainEnumerator {
public:
    explicit ChainEnumerator(FactorizationType a);

    /// Restrict the walk to first-level split options [lo, hi); used to
    /// partition the stream deterministically across workers.
    ChainEnumerator(FactorizationType a, size_t first_lo, size_t first_hi);

    bool next();

    const FactorizationType& type() const { return type_; }
    size_t first_option_count();  // number of splits of 1-hat (for sharding)

    // Valid after next() returned true:
    const NCPartition& level(int i) const;  // pi_i
    Chain chain() const;
    uint64_t weight_bits() const;  // bit i set = X_i divides the weight
    Monomial weight() const;

private:
    struct Option {
        NCPartition part;
        bool near;
    };
    struct Frame {
        NCPartition part;  // pi_{r - depth}
        std::vector<Option> options;
        size_t pos = SIZE_MAX;
    };
    void fill_options(Frame& f, int step) const;

    FactorizationType type_;
    std::vector<Frame> frames_;
    bool init_ = false;
    size_t first_lo_ = 0, first_hi_ = SIZE_MAX;
};

/// z_i = sigma_{pi_{i-1}}^{-1} sigma_{pi_i}: the factorization carried by a chain.
Factorization chain_to_factorization(const Chain& chain);

/// Inverse: pi_i = orbit partition of z_1...z_i. Throws if some prefix is
/// not on an id--C geodesic (the factorization was not minimal) or the
/// factors are not cycles multiplying to the long cycle.
Chain factorization_to_chain(const Factorization& f);

BigInt count_chains(const FactorizationType& a);

/// Exact sum of chain weights over N(a). `threads` > 1 shards the stream by
/// first-level split; the result is identical for any thread count.
Polynomial weighted_sum(const FactorizationType& a, int threads = 1);

/// Final chains: cover chains (pi_{n-k} <. ... <. pi_{n-1} = 1-hat) of
/// length k; weight uses X_i for a near-interval cover pi_i <. pi_{i+1}.
class FinalChainEnumerator {
public:
    FinalChainEnumerator(int n, int k);
    bool next();
    const std::vector<NCPartition>& chain() const { return out_; }  // pi_{n-k}..pi_{n-1}
    Monomial weight() const;

private:
    struct Frame {
        NCPartition part;
        std::vector<std::pair<NCPartition, bool>> covers;  // (lower, interval_step)
        size_t pos = SIZE_MAX;
    };
    int n_, k_;
    std::vector<Frame> frames_;
    bool init_ = false;
    mutable std::vector<NCPartition> out_;
};

BigInt count_final_chains(int n, int k);
Polynomial final_weighted_sum(int n, int k);

/// All factorization types with ground size n, i.e. compositions of n-1
/// into parts >= 1 shifted up by one; 2^{n-2} of them for n >= 2.
std::vector<FactorizationType> all_types(int n);

}  // namespace minfact
