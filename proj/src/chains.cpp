#include "minfact/chains.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace minfact {

FactorizationType::FactorizationType(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("factorization type must be nonempty");
    n = 1;
    for (int ai : parts) {
        if (ai < 2) throw std::invalid_argument("factorization type entries must be >= 2");
        n += ai - 1;
    }
}

FactorizationType FactorizationType::fuse_last_two() const {
    if (r() < 2) throw std::invalid_argument("fuse_last_two requires r >= 2");
    std::vector<int> p(parts.begin(), parts.end() - 2);
    p.push_back(parts[r() - 2] + parts[r() - 1] - 1);
    return FactorizationType(std::move(p));
}

StepSplit step_split(const NCPartition& lower, const NCPartition& upper) {
    if (lower.ground() != upper.ground())
        throw std::invalid_argument("step_split: ground mismatch");
    StepSplit s;
    // The split block is the unique block of upper missing from lower.
    const auto& lb = lower.blocks();
    for (const auto& b : upper.blocks()) {
        if (std::find(lb.begin(), lb.end(), b) == lb.end()) {
            if (!s.block.empty())
                throw std::invalid_argument("step_split: more than one block changed");
            s.block = b;
        }
    }
    if (s.block.empty()) throw std::invalid_argument("step_split: partitions are equal");
    for (const auto& b : lb) {
        if (std::includes(s.block.begin(), s.block.end(), b.begin(), b.end()))
            s.parts.push_back(b);
        else if (std::find(upper.blocks().begin(), upper.blocks().end(), b) ==
                 upper.blocks().end())
            throw std::invalid_argument("step_split: lower is not a refinement by one split");
    }
    s.shape = classify_shape(NCPartition(s.block, s.parts));
    return s;
}

bool validate_chain(const Chain& chain, const FactorizationType& a, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int r = a.r();
    if (static_cast<int>(chain.partitions.size()) != r + 1)
        return fail("chain length does not match type");
    for (const auto& p : chain.partitions) {
        if (p.ground() != chain.partitions[0].ground() || p.ground_size() != a.n)
            return fail("ground mismatch");
        if (!is_noncrossing(p)) return fail("crossing partition in chain");
    }
    if (chain.partitions[0].block_count() != a.n) return fail("chain does not start at 0-hat");
    if (chain.partitions[r].block_count() != 1) return fail("chain does not end at 1-hat");
    for (int i = 1; i <= r; ++i) {
        StepSplit s;
        try {
            s = step_split(chain.partitions[i - 1], chain.partitions[i]);
        } catch (const std::exception& e) {
            return fail(std::string("step ") + std::to_string(i) + ": " + e.what());
        }
        if (static_cast<int>(s.parts.size()) != a.parts[i - 1])
            return fail("step " + std::to_string(i) + ": wrong part count");
        if (s.shape == Shape::Other)
            return fail("step " + std::to_string(i) + ": parts are neither interval nor near-interval");
    }
    return true;
}

FactorizationType type_of(const Chain& chain) {
    std::vector<int> parts;
    for (size_t i = 1; i < chain.partitions.size(); ++i)
        parts.push_back(chain.partitions[i - 1].block_count() -
                        chain.partitions[i].block_count() + 1);
    return FactorizationType(std::move(parts));
}

Monomial chain_weight(const Chain& chain) {
    std::vector<std::pair<int, int>> exps;
    const int r = static_cast<int>(chain.partitions.size()) - 1;
    for (int i = 2; i <= r; ++i) {
        StepSplit s = step_split(chain.partitions[i - 1], chain.partitions[i]);
        if (s.shape == Shape::NearInterval) exps.emplace_back(i - 1, 1);
    }
    return Monomial(std::move(exps));
}

ChainEnumerator::ChainEnumerator(FactorizationType a) : type_(std::move(a)) {}

ChainEnumerator::ChainEnumerator(FactorizationType a, size_t first_lo, size_t first_hi)
    : type_(std::move(a)), first_lo_(first_lo), first_hi_(first_hi) {}

void ChainEnumerator::fill_options(Frame& f, int step) const {
    const int k = type_.parts[step - 1];
    for (const auto& block : f.part.blocks()) {
        if (static_cast<int>(block.size()) < k) continue;
        for (const auto& s : block_splits(block, k)) {
            auto blocks = f.part.blocks();
            blocks.erase(std::find(blocks.begin(), blocks.end(), block));
            for (const auto& part : s.parts) blocks.push_back(part);
            f.options.push_back(
                Option{NCPartition(f.part.ground(), std::move(blocks)), s.near});
        }
    }
}

size_t ChainEnumerator::first_option_count() {
    Frame f;
    f.part = NCPartition::one_block(type_.n);
    fill_options(f, type_.r());
    return f.options.size();
}

bool ChainEnumerator::next() {
    const int r = type_.r();
    if (!init_) {
        init_ = true;
        Frame f;
        f.part = NCPartition::one_block(type_.n);
        if (r == 0) return false;
        fill_options(f, r);
        frames_.push_back(std::move(f));
    } else if (frames_.empty()) {
        return false;
    }
    while (!frames_.empty()) {
        Frame& f = frames_.back();
        const int depth = static_cast<int>(frames_.size()) - 1;
        if (depth == r) {  // at a leaf: pop so the parent advances
            frames_.pop_back();
            continue;
        }
        size_t lo = 0, hi = f.options.size();
        if (depth == 0) {
            lo = first_lo_;
            hi = std::min(hi, first_hi_);
        }
        size_t next_pos = f.pos == SIZE_MAX ? lo : f.pos + 1;
        if (next_pos >= hi) {
            frames_.pop_back();
            continue;
        }
        f.pos = next_pos;
        Frame child;
        child.part = f.options[next_pos].part;
        const int child_depth = depth + 1;
        if (child_depth < r) fill_options(child, r - child_depth);
        frames_.push_back(std::move(child));
        if (child_depth == r) return true;
    }
    return false;
}

const NCPartition& ChainEnumerator::level(int i) const {
    return frames_[type_.r() - i].part;
}

Chain ChainEnumerator::chain() const {
    Chain c;
    const int r = type_.r();
    c.partitions.reserve(r + 1);
    for (int i = 0; i <= r; ++i) c.partitions.push_back(frames_[r - i].part);
    return c;
}

uint64_t ChainEnumerator::weight_bits() const {
    uint64_t bits = 0;
    const int r = type_.r();
    for (int d = 0; d <= r - 2; ++d) {
        const Frame& f = frames_[d];
        if (f.options[f.pos].near) bits |= uint64_t(1) << (r - d - 1);
    }
    return bits;
}

Monomial ChainEnumerator::weight() const {
    std::vector<std::pair<int, int>> exps;
    uint64_t bits = weight_bits();
    for (int i = 1; i < 64; ++i)
        if (bits >> i & 1) exps.emplace_back(i, 1);
    return Monomial(std::move(exps));
}

Factorization chain_to_factorization(const Chain& chain) {
    const int n = chain.partitions.front().ground_size();
    Factorization f;
    Permutation prev = Permutation::identity(n);
    for (size_t i = 1; i < chain.partitions.size(); ++i) {
        Permutation cur = to_permutation(chain.partitions[i], n);
        f.factors.push_back(compose(prev.inverse(), cur));
        prev = std::move(cur);
    }
    return f;
}

Chain factorization_to_chain(const Factorization& f) {
    if (f.factors.empty()) throw std::invalid_argument("empty factorization");
    const int n = f.factors.front().size();
    Chain chain;
    Permutation prefix = Permutation::identity(n);
    auto p0 = from_geodesic_permutation(prefix);
    chain.partitions.push_back(*p0);
    for (const auto& z : f.factors) {
        if (!cycle_of(z)) throw std::invalid_argument("factor is not a cycle");
        prefix = compose(prefix, z);
        auto p = from_geodesic_permutation(prefix);
        if (!p)
            throw std::invalid_argument(
                "prefix not on an id--C geodesic: factorization is not minimal");
        chain.partitions.push_back(std::move(*p));
    }
    if (prefix != Permutation::long_cycle(n))
        throw std::invalid_argument("product of factors is not the long cycle");
    return chain;
}

BigInt count_chains(const FactorizationType& a) {
    ChainEnumerator e(a);
    BigInt c = 0;
    while (e.next()) ++c;
    return c;
}

namespace {

Polynomial weight_counts_to_poly(const std::unordered_map<uint64_t, unsigned long>& counts) {
    Polynomial sum;
    for (auto& [bits, count] : counts) {
        std::vector<std::pair<int, int>> exps;
        for (int i = 1; i < 64; ++i)
            if (bits >> i & 1) exps.emplace_back(i, 1);
        sum += Polynomial(Monomial(std::move(exps)), BigInt(count));
    }
    return sum;
}

}  // namespace

Polynomial weighted_sum(const FactorizationType& a, int threads) {
    if (threads < 1) threads = 1;
    size_t nopts = ChainEnumerator(a).first_option_count();
    if (threads == 1 || nopts < 2) {
        std::unordered_map<uint64_t, unsigned long> counts;
        ChainEnumerator e(a);
        while (e.next()) ++counts[e.weight_bits()];
        return weight_counts_to_poly(counts);
    }
    const size_t workers = std::min<size_t>(threads, nopts);
    std::vector<Polynomial> partial(workers);
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            size_t lo = nopts * w / workers, hi = nopts * (w + 1) / workers;
            std::unordered_map<uint64_t, unsigned long> counts;
            ChainEnumerator e(a, lo, hi);
            while (e.next()) ++counts[e.weight_bits()];
            partial[w] = weight_counts_to_poly(counts);
        });
    }
    for (auto& t : pool) t.join();
    Polynomial sum;
    for (auto& p : partial) sum += p;
    return sum;
}

FinalChainEnumerator::FinalChainEnumerator(int n, int k) : n_(n), k_(k) {
    if (k < 2 || k > n) throw std::invalid_argument("final chains require 2 <= k <= n");
}

bool FinalChainEnumerator::next() {
    const int steps = k_ - 1;
    if (!init_) {
        init_ = true;
        Frame f;
        f.part = NCPartition::one_block(n_);
        f.covers = lower_covers(f.part);
        frames_.push_back(std::move(f));
    } else if (frames_.empty()) {
        return false;
    }
    while (!frames_.empty()) {
        Frame& f = frames_.back();
        const int depth = static_cast<int>(frames_.size()) - 1;
        if (depth == steps) {
            frames_.pop_back();
            continue;
        }
        size_t next_pos = f.pos == SIZE_MAX ? 0 : f.pos + 1;
        if (next_pos >= f.covers.size()) {
            frames_.pop_back();
            continue;
        }
        f.pos = next_pos;
        Frame child;
        child.part = f.covers[next_pos].first;
        const int child_depth = depth + 1;
        if (child_depth < steps) child.covers = lower_covers(child.part);
        frames_.push_back(std::move(child));
        if (child_depth == steps) {
            out_.clear();
            for (int d = steps; d >= 0; --d) out_.push_back(frames_[d].part);
            return true;
        }
    }
    return false;
}

Monomial FinalChainEnumerator::weight() const {
    // Down-step t (1-based) goes pi_{n-t} -> pi_{n-1-t}; a near-interval
    // cover contributes X_{n-1-t}.
    std::vector<std::pair<int, int>> exps;
    for (int d = 0; d < static_cast<int>(frames_.size()) - 1; ++d) {
        const Frame& f = frames_[d];
        if (!f.covers[f.pos].second) exps.emplace_back(n_ - 2 - d, 1);
    }
    std::sort(exps.begin(), exps.end());
    return Monomial(std::move(exps));
}

BigInt count_final_chains(int n, int k) {
    FinalChainEnumerator e(n, k);
    BigInt c = 0;
    while (e.next()) ++c;
    return c;
}

Polynomial final_weighted_sum(int n, int k) {
    FinalChainEnumerator e(n, k);
    Polynomial sum;
    while (e.next()) sum += Polynomial(e.weight());
    return sum;
}

std::vector<FactorizationType> all_types(int n) {
    std::vector<FactorizationType> out;
    if (n < 2) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int step = 1; step <= remaining; ++step) {
            cur.push_back(step + 1);  // a_i = step + 1 >= 2
            self(self, remaining - step);
            cur.pop_back();
        }
    };
    rec(rec, n - 1);
    return out;
}

}  // namespace minfact
