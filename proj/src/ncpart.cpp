#include "minfact/ncpart.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace minfact {

namespace {

void canonicalize(std::vector<std::vector<int>>& blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

}  // namespace

NCPartition::NCPartition(std::vector<int> ground, std::vector<std::vector<int>> blocks)
    : ground_(std::move(ground)), blocks_(std::move(blocks)) {
    if (ground_.empty()) throw std::invalid_argument("empty ground set");
    for (size_t i = 0; i + 1 < ground_.size(); ++i)
        if (ground_[i] >= ground_[i + 1])
            throw std::invalid_argument("ground set not strictly increasing");
    if (ground_.front() < 1) throw std::invalid_argument("labels must be positive");
    canonicalize(blocks_);
    std::vector<int> covered;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("empty block");
        covered.insert(covered.end(), b.begin(), b.end());
    }
    std::sort(covered.begin(), covered.end());
    if (covered != ground_) throw std::invalid_argument("blocks do not partition the ground set");
}

NCPartition NCPartition::singletons(std::vector<int> ground) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(ground.size());
    for (int x : ground) blocks.push_back({x});
    return NCPartition(std::move(ground), std::move(blocks));
}

NCPartition NCPartition::one_block(std::vector<int> ground) {
    std::vector<std::vector<int>> blocks{ground};
    return NCPartition(std::move(ground), std::move(blocks));
}

NCPartition NCPartition::singletons(int n) {
    std::vector<int> g(n);
    for (int i = 0; i < n; ++i) g[i] = i + 1;
    return singletons(std::move(g));
}

NCPartition NCPartition::one_block(int n) {
    std::vector<int> g(n);
    for (int i = 0; i < n; ++i) g[i] = i + 1;
    return one_block(std::move(g));
}

int NCPartition::block_index_of(int x) const {
    for (int i = 0; i < block_count(); ++i)
        if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), x)) return i;
    return -1;
}

bool is_noncrossing(const NCPartition& p) {
    // Two blocks cross iff their merged sequence alternates membership
    // at least three times (pattern a b a b).
    const auto& bs = p.blocks();
    for (size_t i = 0; i < bs.size(); ++i) {
        for (size_t j = i + 1; j < bs.size(); ++j) {
            const auto& A = bs[i];
            const auto& B = bs[j];
            size_t ia = 0, ib = 0;
            int switches = 0, last = -1;
            while (ia < A.size() || ib < B.size()) {
                int who;
                if (ib == B.size() || (ia < A.size() && A[ia] < B[ib])) {
                    who = 0;
                    ++ia;
                } else {
                    who = 1;
                    ++ib;
                }
                if (last != -1 && who != last) ++switches;
                last = who;
            }
            if (switches >= 3) return false;
        }
    }
    return true;
}

Shape classify_shape(const NCPartition& p) {
    const auto& g = p.ground();
    std::map<int, int> pos;
    for (int i = 0; i < p.ground_size(); ++i) pos[g[i]] = i;

    // A block is contiguous iff its positions form an interval of the ground.
    auto contiguous = [&](const std::vector<int>& b) {
        return pos.at(b.back()) - pos.at(b.front()) + 1 == static_cast<int>(b.size());
    };

    int bad = -1;
    for (int i = 0; i < p.block_count(); ++i) {
        if (!contiguous(p.blocks()[i])) {
            if (bad != -1) return Shape::Other;
            bad = i;
        }
    }
    if (bad == -1) return Shape::Interval;

    // The single non-contiguous block must be a prefix plus a suffix of the
    // ground, with a nonempty middle covered by the other blocks.
    const auto& b = p.blocks()[bad];
    if (b.front() != g.front() || b.back() != g.back()) return Shape::Other;
    size_t run = 1;
    while (run < b.size() && pos.at(b[run]) == static_cast<int>(run)) ++run;
    // b[0..run) is the prefix; the rest must be the ground's suffix.
    size_t tail = b.size() - run;
    for (size_t t = 0; t < tail; ++t)
        if (pos.at(b[run + t]) != p.ground_size() - static_cast<int>(tail) + static_cast<int>(t))
            return Shape::Other;
    if (tail == 0) return Shape::Other;  // contiguous; unreachable
    return Shape::NearInterval;
}

bool refines(const NCPartition& p, const NCPartition& q) {
    if (p.ground() != q.ground()) throw std::invalid_argument("refines: ground mismatch");
    for (const auto& b : p.blocks()) {
        int where = q.block_index_of(b.front());
        const auto& host = q.blocks()[where];
        for (int x : b)
            if (!std::binary_search(host.begin(), host.end(), x)) return false;
    }
    return true;
}

Permutation to_permutation(const NCPartition& p, int ambient_n) {
    int n = ambient_n == 0 ? p.ground().back() : ambient_n;
    if (p.ground().back() > n)
        throw std::invalid_argument("to_permutation: ground exceeds ambient size");
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i + 1;
    for (const auto& b : p.blocks()) {
        const int k = static_cast<int>(b.size());
        for (int i = 0; i < k; ++i) im[b[i] - 1] = b[(i + 1) % k];
    }
    return Permutation(std::move(im));
}

std::optional<NCPartition> from_geodesic_permutation(const Permutation& sigma) {
    const int n = sigma.size();
    const Permutation C = Permutation::long_cycle(n);
    if (length(sigma) + length(compose(C, sigma.inverse())) != n - 1) return std::nullopt;
    std::vector<int> g(n);
    for (int i = 0; i < n; ++i) g[i] = i + 1;
    return NCPartition(std::move(g), sigma.cycles());
}

NCPartition split_block(const NCPartition& q, const std::vector<int>& block,
                        const std::vector<std::vector<int>>& parts) {
    std::vector<int> sorted_block = block;
    std::sort(sorted_block.begin(), sorted_block.end());
    auto blocks = q.blocks();
    auto it = std::find(blocks.begin(), blocks.end(), sorted_block);
    if (it == blocks.end()) throw std::invalid_argument("split_block: block not in partition");
    blocks.erase(it);
    std::vector<int> covered;
    for (const auto& part : parts) {
        blocks.push_back(part);
        covered.insert(covered.end(), part.begin(), part.end());
    }
    std::sort(covered.begin(), covered.end());
    if (covered != sorted_block)
        throw std::invalid_argument("split_block: parts do not partition the block");
    NCPartition out(q.ground(), std::move(blocks));
    if (!is_noncrossing(out)) throw std::invalid_argument("split_block: crossing result");
    return out;
}

std::vector<BlockSplit> block_splits(const std::vector<int>& elems, int k) {
    const int m = static_cast<int>(elems.size());
    std::vector<BlockSplit> out;
    if (k < 1 || m < k) return out;

    auto chunk = [&](int from, int len) {
        return std::vector<int>(elems.begin() + from, elems.begin() + from + len);
    };

    // Interval splits: compositions of m into k positive parts.
    auto emit_interval = [&](const std::vector<int>& c) {
        BlockSplit s;
        int at = 0;
        for (int ci : c) {
            s.parts.push_back(chunk(at, ci));
            at += ci;
        }
        out.push_back(std::move(s));
    };
    // Near-interval splits: compositions of m into k+1 positive parts, the
    // first and last merged into the wrapping part.
    auto emit_near = [&](const std::vector<int>& c) {
        BlockSplit s;
        s.near = true;
        std::vector<int> wrap = chunk(0, c.front());
        auto tail = chunk(m - c.back(), c.back());
        wrap.insert(wrap.end(), tail.begin(), tail.end());
        s.parts.push_back(std::move(wrap));
        int at = c.front();
        for (size_t i = 1; i + 1 < c.size(); ++i) {
            s.parts.push_back(chunk(at, c[i]));
            at += c[i];
        }
        out.push_back(std::move(s));
    };

    // Compositions in lexicographic order, recursively (k is tiny).
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int parts_left, auto&& emit) -> void {
        if (parts_left == 1) {
            cur.push_back(remaining);
            emit(cur);
            cur.pop_back();
            return;
        }
        for (int first = 1; first <= remaining - (parts_left - 1); ++first) {
            cur.push_back(first);
            self(self, remaining - first, parts_left - 1, emit);
            cur.pop_back();
        }
    };
    rec(rec, m, k, emit_interval);
    if (m >= k + 1 && k >= 2) rec(rec, m, k + 1, emit_near);

    auto min_seq = [](const BlockSplit& s) {
        std::vector<int> mins;
        mins.reserve(s.parts.size());
        for (const auto& p : s.parts) mins.push_back(p.front());
        std::sort(mins.begin(), mins.end());
        return mins;
    };
    std::stable_sort(out.begin(), out.end(), [&](const BlockSplit& a, const BlockSplit& b) {
        auto ma = min_seq(a), mb = min_seq(b);
        if (ma != mb) return ma < mb;
        return a.near < b.near;  // interval before near-interval on ties
    });
    return out;
}

std::vector<std::pair<NCPartition, bool>> lower_covers(const NCPartition& p) {
    std::vector<std::pair<NCPartition, bool>> out;
    for (const auto& b : p.blocks()) {
        if (b.size() < 2) continue;
        for (const auto& s : block_splits(b, 2))
            out.emplace_back(split_block(p, b, s.parts), !s.near);
    }
    return out;
}

std::vector<NCPartition> enumerate_set_partitions(int n) {
    std::vector<NCPartition> out;
    std::vector<int> rgs(n, 0);
    std::vector<int> g(n);
    for (int i = 0; i < n; ++i) g[i] = i + 1;
    auto emit = [&]() {
        int m = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> blocks(m);
        for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i + 1);
        out.emplace_back(g, std::move(blocks));
    };
    auto rec = [&](auto&& self, int i, int maxv) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[i] = v;
            self(self, i + 1, std::max(maxv, v));
        }
    };
    if (n > 0) rec(rec, 1, 0);  // rgs[0] = 0 fixed
    return out;
}

std::vector<NCPartition> enumerate_noncrossing(int n) {
    std::vector<NCPartition> out;
    for (auto& p : enumerate_set_partitions(n))
        if (is_noncrossing(p)) out.push_back(std::move(p));
    return out;
}

}  // namespace minfact
