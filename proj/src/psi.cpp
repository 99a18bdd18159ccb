#include "minfact/psi.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace minfact {

namespace {

std::vector<int> run_of(int from, int len) {
    std::vector<int> v(len);
    std::iota(v.begin(), v.end(), from);
    return v;
}

void require_standard(const NCPartition& p, const char* who) {
    for (int i = 0; i < p.ground_size(); ++i)
        if (p.ground()[i] != i + 1)
            throw std::invalid_argument(std::string(who) + ": partition must be standard");
}

int block_total(const std::vector<std::vector<int>>& blocks) {
    int t = 0;
    for (const auto& b : blocks) t += static_cast<int>(b.size());
    return t;
}

}  // namespace

NCPartition shift(const NCPartition& p, int i) {
    if (i < 0) throw std::invalid_argument("shift: negative offset");
    std::vector<int> g = p.ground();
    for (int& x : g) x += i;
    auto blocks = p.blocks();
    for (auto& b : blocks)
        for (int& x : b) x += i;
    return NCPartition(std::move(g), std::move(blocks));
}

NCPartition oplus(const NCPartition& p, const NCPartition& q) {
    require_standard(p, "oplus");
    require_standard(q, "oplus");
    const int j = p.ground_size();
    NCPartition qs = shift(q, j);
    std::vector<int> g = p.ground();
    g.insert(g.end(), qs.ground().begin(), qs.ground().end());
    auto blocks = p.blocks();
    for (const auto& b : qs.blocks()) blocks.push_back(b);
    return NCPartition(std::move(g), std::move(blocks));
}

NCPartition wrap(int i, int j, const NCPartition& p) {
    require_standard(p, "wrap");
    if (i < 1 || j < 1) throw std::invalid_argument("wrap: arms must be positive");
    const int n = i + j + p.ground_size();
    auto blocks = shift(p, i).blocks();
    std::vector<int> wrapping = run_of(1, i);
    auto tail = run_of(n - j + 1, j);
    wrapping.insert(wrapping.end(), tail.begin(), tail.end());
    blocks.push_back(std::move(wrapping));
    return NCPartition(run_of(1, n), std::move(blocks));
}

NCPartition apply_permutation(const Permutation& s, const NCPartition& p) {
    if (p.ground_size() != s.size() || p.ground().back() != s.size())
        throw std::invalid_argument("apply_permutation: ground must be {1..n}");
    auto blocks = p.blocks();
    for (auto& b : blocks)
        for (int& x : b) x = s(x);
    return NCPartition(p.ground(), std::move(blocks));
}

namespace {

// Everything about the top step (pi_{r-1}, pi_{r-2}) the templates inspect.
struct TopStep {
    int n = 0;
    std::vector<int> B;               // the block of upper that splits
    std::vector<std::vector<int>> S;  // its parts in lower, by minimum
    Shape s_shape = Shape::Other;
    Shape upper_shape = Shape::Other;
    std::vector<int> W;  // upper's wrapping block when near-interval
    int wa = 0, wb = 0;  // its arms: W = {1..wa} u {n-wb+1..n}
    bool B_is_W = false;
    std::vector<std::vector<int>> upper_mids;  // upper's blocks except W, by min
    std::vector<int> P;  // wrapping part of S when S is near-interval
    int p = 0, q = 0;    // P = first p + last q positions of B
    std::vector<std::vector<int>> s_mids;  // S's parts except P, by min
};

// Longest common prefix length of part and whole (both sorted, part subset).
int leading_run(const std::vector<int>& part, const std::vector<int>& whole) {
    int t = 0;
    while (t < static_cast<int>(part.size()) && part[t] == whole[t]) ++t;
    return t;
}

TopStep analyze(const NCPartition& upper, const NCPartition& lower) {
    TopStep t;
    t.n = upper.ground_size();
    require_standard(upper, "psi");
    require_standard(lower, "psi");
    StepSplit sp = step_split(lower, upper);
    t.B = std::move(sp.block);
    t.S = std::move(sp.parts);
    t.s_shape = sp.shape;
    if (t.s_shape == Shape::Other)
        throw std::invalid_argument("top step is neither an interval nor a near-interval split");
    t.upper_shape = classify_shape(upper);
    if (t.upper_shape == Shape::Other)
        throw std::invalid_argument("pi_{r-1} is neither interval nor near-interval");
    if (t.upper_shape == Shape::NearInterval) {
        for (const auto& b : upper.blocks()) {
            if (b.back() - b.front() + 1 != static_cast<int>(b.size())) {
                t.W = b;
                break;
            }
        }
        t.wa = leading_run(t.W, run_of(1, t.n));
        t.wb = static_cast<int>(t.W.size()) - t.wa;
        t.B_is_W = t.B == t.W;
        for (const auto& b : upper.blocks())
            if (b != t.W) t.upper_mids.push_back(b);
    }
    if (t.s_shape == Shape::NearInterval) {
        for (const auto& part : t.S)
            if (part.front() == t.B.front()) {
                t.P = part;
                break;
            }
        t.p = leading_run(t.P, t.B);
        t.q = static_cast<int>(t.P.size()) - t.p;
        for (const auto& part : t.S)
            if (part != t.P) t.s_mids.push_back(part);
    }
    return t;
}

// A part straddles the wrapping block's arms if it has elements on both
// sides of position wa.
const std::vector<int>* find_straddler(const std::vector<std::vector<int>>& parts, int wa) {
    for (const auto& part : parts)
        if (part.front() <= wa && part.back() > wa) return &part;
    return nullptr;
}

// Image layout: an optional wrapping entry {1..wl} u {n-wr+1..n} plus
// consecutive middle entries. Returns (source, target) pairs in layout order.
struct Layout {
    bool has_wrap = false;
    std::vector<int> wrap_src;
    int wl = 0, wr = 0;
    std::vector<std::vector<int>> mids;
};

std::vector<std::pair<std::vector<int>, std::vector<int>>> assign_targets(const Layout& L,
                                                                          int n) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    if (L.has_wrap) {
        std::vector<int> tgt = run_of(1, L.wl);
        auto tail = run_of(n - L.wr + 1, L.wr);
        tgt.insert(tgt.end(), tail.begin(), tail.end());
        if (tgt.size() != L.wrap_src.size()) throw std::logic_error("psi layout: wrap size");
        out.emplace_back(L.wrap_src, std::move(tgt));
    }
    int pos = L.wl + 1;
    for (const auto& m : L.mids) {
        out.emplace_back(m, run_of(pos, static_cast<int>(m.size())));
        pos += static_cast<int>(m.size());
    }
    if (pos != n - L.wr + 1) throw std::logic_error("psi layout: ground not covered");
    return out;
}

void identity_pairs(CaseMatch& m, const NCPartition& lower) {
    for (const auto& b : lower.blocks()) m.pairs.emplace_back(b, b);
}

// Splits `mids` into the blocks before B and after B (B itself excluded).
void split_around(const std::vector<std::vector<int>>& mids, const std::vector<int>& B,
                  std::vector<std::vector<int>>& before, std::vector<std::vector<int>>& after) {
    for (const auto& b : mids) {
        if (b == B) continue;
        (b.front() < B.front() ? before : after).push_back(b);
    }
}

std::optional<CaseMatch> match_case(int id, const TopStep& t, const NCPartition& upper,
                                    const NCPartition& lower) {
    const int n = t.n;
    CaseMatch m;
    m.case_id = id;
    switch (id) {
        case 1: {
            if (t.upper_shape != Shape::Interval || t.s_shape != Shape::Interval)
                return std::nullopt;
            identity_pairs(m, lower);
            m.bar = t.B.front();
            m.params = {{"minB", t.B.front()}};
            return m;
        }
        case 2: {
            if (t.upper_shape != Shape::NearInterval) return std::nullopt;
            if (classify_shape(lower) != Shape::Interval) return std::nullopt;
            identity_pairs(m, lower);
            m.bar = n - t.wb + 1;
            m.params = {{"a", t.wa}, {"b", t.wb}};
            return m;
        }
        case 3: {
            if (t.upper_shape != Shape::NearInterval || t.B_is_W ||
                t.s_shape != Shape::Interval)
                return std::nullopt;
            std::vector<std::vector<int>> I, J;
            split_around(t.upper_mids, t.B, I, J);
            Layout L;
            for (const auto& b : I) L.mids.push_back(b);
            L.mids.push_back(t.W);
            for (const auto& b : t.S) L.mids.push_back(b);
            for (const auto& b : J) L.mids.push_back(b);
            m.pairs = assign_targets(L, n);
            m.bar = t.B.front();
            m.params = {{"a", t.wa}, {"b", t.wb}, {"c", static_cast<int>(t.B.size())}};
            return m;
        }
        case 4: {
            if (t.upper_shape != Shape::NearInterval || !t.B_is_W ||
                t.s_shape != Shape::Interval)
                return std::nullopt;
            const auto* Q = find_straddler(t.S, t.wa);
            if (!Q) return std::nullopt;
            const int ap = static_cast<int>(
                std::count_if(Q->begin(), Q->end(), [&](int x) { return x <= t.wa; }));
            const int bp = static_cast<int>(Q->size()) - ap;
            Layout L;
            int q_index = -1;
            for (const auto& part : t.S)
                if (part.back() <= t.wa) L.mids.push_back(part);  // J parts
            for (const auto& b : t.upper_mids) L.mids.push_back(b);
            q_index = static_cast<int>(L.mids.size());
            L.mids.push_back(*Q);
            for (const auto& part : t.S)
                if (part.front() > t.wa) L.mids.push_back(part);  // K parts
            m.pairs = assign_targets(L, n);
            m.bar = m.pairs[q_index].second.front() + ap;
            m.params = {{"a", t.wa}, {"b", t.wb}, {"a'", ap}, {"b'", bp}};
            return m;
        }
        case 5: {
            if (t.upper_shape != Shape::Interval || t.s_shape != Shape::NearInterval)
                return std::nullopt;
            std::vector<std::vector<int>> I, J;
            split_around(upper.blocks(), t.B, I, J);
            Layout L;
            L.has_wrap = true;
            L.wrap_src = t.P;
            L.wl = t.p;
            L.wr = t.q;
            for (const auto& b : I) L.mids.push_back(b);
            for (const auto& b : t.s_mids) L.mids.push_back(b);
            for (const auto& b : J) L.mids.push_back(b);
            m.pairs = assign_targets(L, n);
            // pairs[0] is the wrap; I's last image block sits at index |I|.
            m.bar = I.empty() ? 1 : m.pairs[I.size()].second.front();
            m.params = {{"b", t.p}, {"c", t.q}};
            return m;
        }
        case 6: {
            if (t.upper_shape != Shape::NearInterval || !t.B_is_W ||
                t.s_shape != Shape::NearInterval)
                return std::nullopt;
            if (t.p > t.wa || t.q > t.wb) return std::nullopt;
            if (find_straddler(t.s_mids, t.wa)) return std::nullopt;
            identity_pairs(m, lower);
            m.bar = n - t.wb + 1;
            m.params = {{"a", t.wa}, {"b", t.wb}, {"a'", t.p}, {"b'", t.q}};
            return m;
        }
        case 7: {
            if (t.upper_shape != Shape::NearInterval || t.B_is_W ||
                t.s_shape != Shape::NearInterval)
                return std::nullopt;
            std::vector<std::vector<int>> I, J;
            split_around(t.upper_mids, t.B, I, J);
            Layout L;
            L.has_wrap = true;
            L.wrap_src = t.W;
            L.wl = t.wa;
            L.wr = t.wb;
            for (const auto& b : I) L.mids.push_back(b);
            const int p_index = static_cast<int>(L.mids.size()) + 1;  // +1 for wrap
            L.mids.push_back(t.P);
            for (const auto& b : J) L.mids.push_back(b);
            for (const auto& b : t.s_mids) L.mids.push_back(b);
            m.pairs = assign_targets(L, n);
            m.bar = m.pairs[p_index].second.front() + t.p;
            m.params = {{"a", t.wa}, {"b", t.wb}, {"d", t.p}, {"e", t.q}};
            return m;
        }
        case 8: {
            if (t.upper_shape != Shape::NearInterval || !t.B_is_W ||
                t.s_shape != Shape::NearInterval)
                return std::nullopt;
            if (t.p > t.wa || t.q > t.wb) return std::nullopt;
            const auto* Q = find_straddler(t.s_mids, t.wa);
            if (!Q) return std::nullopt;
            const int d = static_cast<int>(
                std::count_if(Q->begin(), Q->end(), [&](int x) { return x <= t.wa; }));
            const int e = static_cast<int>(Q->size()) - d;
            Layout L;
            L.has_wrap = true;
            L.wrap_src = t.P;
            L.wl = t.p;
            L.wr = t.q;
            for (const auto& part : t.s_mids)
                if (part.back() <= t.wa) L.mids.push_back(part);  // J parts
            for (const auto& b : t.upper_mids) L.mids.push_back(b);
            const int q_index = static_cast<int>(L.mids.size()) + 1;
            L.mids.push_back(*Q);
            for (const auto& part : t.s_mids)
                if (part.front() > t.wa) L.mids.push_back(part);  // K parts
            m.pairs = assign_targets(L, n);
            m.bar = m.pairs[q_index].second.front() + d;
            m.params = {{"a'", t.p}, {"b'", t.q}, {"d", d}, {"e", e}};
            return m;
        }
        case 9: {
            if (t.upper_shape != Shape::NearInterval || !t.B_is_W ||
                t.s_shape != Shape::NearInterval)
                return std::nullopt;
            if (t.q <= t.wb) return std::nullopt;
            const int alpha = t.p, betal = t.q - t.wb, gamma = t.wb;
            Layout L;
            L.has_wrap = true;
            L.wrap_src = t.P;
            L.wl = alpha + betal;
            L.wr = gamma;
            for (const auto& b : t.s_mids) L.mids.push_back(b);
            for (const auto& b : t.upper_mids) L.mids.push_back(b);
            m.pairs = assign_targets(L, n);
            m.bar = alpha + 1;
            m.params = {{"a", alpha}, {"b", betal}, {"c", gamma}};
            return m;
        }
        case 10: {
            if (t.upper_shape != Shape::NearInterval || !t.B_is_W ||
                t.s_shape != Shape::NearInterval)
                return std::nullopt;
            if (t.p <= t.wa) return std::nullopt;
            const int alpha = t.wa, betal = t.p - t.wa, gamma = t.q;
            Layout L;
            L.has_wrap = true;
            L.wrap_src = t.P;
            L.wl = alpha;
            L.wr = betal + gamma;
            for (const auto& b : t.upper_mids) L.mids.push_back(b);
            for (const auto& b : t.s_mids) L.mids.push_back(b);
            m.pairs = assign_targets(L, n);
            m.bar = n - gamma + 1;
            m.params = {{"a", alpha}, {"b", betal}, {"c", gamma}};
            return m;
        }
        default:
            return std::nullopt;
    }
}

Permutation sigma_from_pairs(
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs, int n) {
    std::vector<int> im(n, 0);
    for (const auto& [src, tgt] : pairs) {
        if (src.size() != tgt.size()) throw std::logic_error("psi: block size mismatch");
        for (size_t i = 0; i < src.size(); ++i) im[src[i] - 1] = tgt[i];
    }
    for (int x : im)
        if (x == 0) throw std::logic_error("psi: correspondence does not cover the ground");
    return Permutation(std::move(im));
}

}  // namespace

std::vector<CaseMatch> match_cases(const NCPartition& upper, const NCPartition& lower) {
    TopStep t = analyze(upper, lower);
    std::vector<CaseMatch> out;
    for (int id = 1; id <= 10; ++id)
        if (auto m = match_case(id, t, upper, lower)) out.push_back(std::move(*m));
    return out;
}

CaseMatch classify_case(const NCPartition& upper, const NCPartition& lower) {
    auto ms = match_cases(upper, lower);
    if (ms.size() != 1)
        throw std::logic_error("case analysis violated: " + std::to_string(ms.size()) +
                               " templates match");
    return ms.front();
}

PsiResult psi(const Chain& chain) {
    FactorizationType a = type_of(chain);
    if (a.r() < 2) throw std::invalid_argument("psi requires r >= 2");
    std::string why;
    if (!validate_chain(chain, a, &why))
        throw std::invalid_argument("psi: input chain not in N(a): " + why);
    const int r = a.r();
    CaseMatch cm = classify_case(chain.partitions[r - 1], chain.partitions[r - 2]);
    PsiResult out;
    out.case_id = cm.case_id;
    out.bar = cm.bar;
    out.sigma = sigma_from_pairs(cm.pairs, a.n);
    out.gamma.partitions.reserve(r);
    for (int i = 0; i <= r - 2; ++i) {
        NCPartition img = apply_permutation(out.sigma, chain.partitions[i]);
        assert(is_noncrossing(img));
        out.gamma.partitions.push_back(std::move(img));
    }
    out.gamma.partitions.push_back(chain.partitions[r]);
    return out;
}

int classify_inverse_case(const NCPartition& image, int bar, int a_rm1, int a_r) {
    const int n = image.ground_size();
    if (bar < 1 || bar > n) throw std::invalid_argument("bar out of range");
    const Shape sh = classify_shape(image);
    if (sh == Shape::Other) throw std::invalid_argument("image is neither interval nor near-interval");
    (void)a_r;
    const bool within =
        bar >= 2 && image.block_index_of(bar - 1) == image.block_index_of(bar);
    int right = 0;
    for (const auto& b : image.blocks())
        if (b.front() >= bar) ++right;
    if (sh == Shape::Interval) {
        if (!within) return right >= a_rm1 ? 1 : 2;
        return right >= a_rm1 ? 3 : 4;
    }
    const std::vector<int>* V = nullptr;
    for (const auto& b : image.blocks())
        if (b.back() - b.front() + 1 != static_cast<int>(b.size())) V = &b;
    const int u = leading_run(*V, run_of(1, n));
    const int v = static_cast<int>(V->size()) - u;
    if (within) {
        if (bar <= u) return 9;
        if (bar >= n - v + 2) return 10;
        return right >= a_rm1 - 1 ? 7 : 8;
    }
    return right >= a_rm1 ? 5 : 6;
}

namespace {

// The reconstructed top of the chain plus the block correspondence.
struct Rebuilt {
    std::vector<std::vector<int>> lower;  // pi_{r-2}
    std::vector<std::vector<int>> upper;  // pi_{r-1}
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
};

Rebuilt rebuild(int cid, const NCPartition& G, int bar, int a_rm1, int a_r) {
    const int n = G.ground_size();
    const auto& gb = G.blocks();
    const int m = G.block_count();
    Rebuilt R;
    auto need = [](bool ok, const char* msg) {
        if (!ok) throw std::invalid_argument(std::string("psi_inverse: ") + msg);
    };

    // Source runs for a list of target blocks, advancing pos.
    auto sources_for = [&](const std::vector<std::vector<int>>& targets, int& pos) {
        std::vector<std::vector<int>> srcs;
        for (const auto& tgt : targets) {
            srcs.push_back(run_of(pos, static_cast<int>(tgt.size())));
            pos += static_cast<int>(tgt.size());
        }
        return srcs;
    };
    auto pair_up = [&](const std::vector<std::vector<int>>& srcs,
                       const std::vector<std::vector<int>>& tgts) {
        for (size_t i = 0; i < srcs.size(); ++i) R.pairs.emplace_back(srcs[i], tgts[i]);
    };
    auto slice = [&](const std::vector<std::vector<int>>& v, int from, int count) {
        return std::vector<std::vector<int>>(v.begin() + from, v.begin() + from + count);
    };
    auto append = [](std::vector<std::vector<int>>& to,
                     const std::vector<std::vector<int>>& from) {
        to.insert(to.end(), from.begin(), from.end());
    };
    auto join = [](std::vector<int> x, const std::vector<int>& y) {
        x.insert(x.end(), y.begin(), y.end());
        return x;
    };

    // Near-interval data of G (cases 5..10).
    std::vector<int> V;
    int u = 0, v = 0;
    std::vector<std::vector<int>> mids;
    if (cid >= 5) {
        for (const auto& b : gb)
            if (b.back() - b.front() + 1 != static_cast<int>(b.size())) V = b;
        need(!V.empty(), "image is not near-interval");
        u = leading_run(V, run_of(1, n));
        v = static_cast<int>(V.size()) - u;
        for (const auto& b : gb)
            if (b != V) mids.push_back(b);
    }
    const int mm = static_cast<int>(mids.size());

    switch (cid) {
        case 1: {
            int tf = -1;
            for (int i = 0; i < m; ++i)
                if (gb[i].front() == bar) tf = i;
            need(tf >= 0, "bar is not at a block minimum");
            need(m - tf >= a_rm1, "not enough blocks right of the bar");
            R.lower = gb;
            for (const auto& b : gb) R.pairs.emplace_back(b, b);
            std::vector<int> B;
            for (int i = tf; i < tf + a_rm1; ++i) B = join(std::move(B), gb[i]);
            R.upper = slice(gb, 0, tf);
            R.upper.push_back(B);
            append(R.upper, slice(gb, tf + a_rm1, m - tf - a_rm1));
            return R;
        }
        case 2: {
            int tf = -1;
            for (int i = 0; i < m; ++i)
                if (gb[i].front() == bar) tf = i;
            need(tf >= 0, "bar is not at a block minimum");
            const int s = m - tf;
            const int left = a_rm1 - s;
            need(s >= 1 && left >= 1, "bar inconsistent with the part counts");
            need(tf == left + a_r - 1, "block counts inconsistent");
            R.lower = gb;
            for (const auto& b : gb) R.pairs.emplace_back(b, b);
            std::vector<int> W;
            for (int i = 0; i < left; ++i) W = join(std::move(W), gb[i]);
            for (int i = tf; i < m; ++i) W = join(std::move(W), gb[i]);
            R.upper.push_back(W);
            append(R.upper, slice(gb, left, tf - left));
            return R;
        }
        case 3: {
            const int tD = G.block_index_of(bar);
            const auto& D = gb[tD];
            const int aL = bar - D.front(), bR = static_cast<int>(D.size()) - aL;
            need(m - 1 - tD >= a_rm1, "not enough blocks right of the bar");
            auto I = slice(gb, 0, tD);
            auto K = slice(gb, tD + 1, a_rm1);
            auto J = slice(gb, tD + 1 + a_rm1, m - tD - 1 - a_rm1);
            std::vector<int> Wsrc = join(run_of(1, aL), run_of(n - bR + 1, bR));
            R.pairs.emplace_back(Wsrc, D);
            int pos = aL + 1;
            auto Isrc = sources_for(I, pos);
            const int kstart = pos;
            auto Ksrc = sources_for(K, pos);
            auto Jsrc = sources_for(J, pos);
            need(pos == n - bR + 1, "layout does not close");
            pair_up(Isrc, I);
            pair_up(Ksrc, K);
            pair_up(Jsrc, J);
            R.lower.push_back(Wsrc);
            append(R.lower, Isrc);
            append(R.lower, Ksrc);
            append(R.lower, Jsrc);
            R.upper.push_back(Wsrc);
            append(R.upper, Isrc);
            R.upper.push_back(run_of(kstart, block_total(K)));
            append(R.upper, Jsrc);
            return R;
        }
        case 4: {
            const int tD = G.block_index_of(bar);
            const auto& D = gb[tD];
            const int ap = bar - D.front(), bp = static_cast<int>(D.size()) - ap;
            const int k0 = m - 1 - tD;
            const int nJ = a_rm1 - 1 - k0, nI = a_r - 1;
            need(nJ >= 0, "too many blocks right of the bar");
            need(nJ + nI == tD, "block counts inconsistent");
            auto J = slice(gb, 0, nJ);
            auto I = slice(gb, nJ, nI);
            auto K = slice(gb, tD + 1, k0);
            int pos = 1;
            auto Jsrc = sources_for(J, pos);
            auto Dleft = run_of(pos, ap);
            pos += ap;
            auto Isrc = sources_for(I, pos);
            auto Dright = run_of(pos, bp);
            pos += bp;
            auto Ksrc = sources_for(K, pos);
            need(pos == n + 1, "layout does not close");
            auto Dsrc = join(Dleft, Dright);
            pair_up(Jsrc, J);
            R.pairs.emplace_back(Dsrc, D);
            pair_up(Isrc, I);
            pair_up(Ksrc, K);
            append(R.lower, Jsrc);
            R.lower.push_back(Dsrc);
            append(R.lower, Isrc);
            append(R.lower, Ksrc);
            const int aW = block_total(J) + ap, bW = bp + block_total(K);
            R.upper.push_back(join(run_of(1, aW), run_of(n - bW + 1, bW)));
            append(R.upper, Isrc);
            return R;
        }
        case 5: {
            int nI = 0;
            if (bar > 1) {
                int tI = -1;
                for (int i = 0; i < mm; ++i)
                    if (mids[i].front() == bar) tI = i;
                need(tI >= 0, "bar is not at a middle block minimum");
                nI = tI + 1;
            }
            need(mm - nI >= a_rm1 - 1, "not enough blocks for the split");
            auto I = slice(mids, 0, nI);
            auto K = slice(mids, nI, a_rm1 - 1);
            auto J = slice(mids, nI + a_rm1 - 1, mm - nI - (a_rm1 - 1));
            int pos = 1;
            auto Isrc = sources_for(I, pos);
            const int span = u + v + block_total(K);
            const int bstart = pos;
            auto Psrc = join(run_of(pos, u), run_of(pos + span - v, v));
            pos += u;
            auto Ksrc = sources_for(K, pos);
            pos += v;
            auto Jsrc = sources_for(J, pos);
            need(pos == n + 1, "layout does not close");
            pair_up(Isrc, I);
            R.pairs.emplace_back(Psrc, V);
            pair_up(Ksrc, K);
            pair_up(Jsrc, J);
            append(R.lower, Isrc);
            R.lower.push_back(Psrc);
            append(R.lower, Ksrc);
            append(R.lower, Jsrc);
            append(R.upper, Isrc);
            R.upper.push_back(run_of(bstart, span));
            append(R.upper, Jsrc);
            return R;
        }
        case 6: {
            need(bar > u && bar <= n - v + 1, "bar inconsistent with case 6");
            int k1 = 0;
            for (const auto& b : mids)
                if (b.front() >= bar) ++k1;
            const int nJ = a_rm1 - 1 - k1, nI = a_r - 1;
            need(nJ >= 0, "too many blocks right of the bar");
            need(nJ + nI + k1 == mm, "block counts inconsistent");
            R.lower = gb;
            for (const auto& b : gb) R.pairs.emplace_back(b, b);
            auto J = slice(mids, 0, nJ);
            std::vector<int> W = join(run_of(1, u + block_total(J)), run_of(bar, n - bar + 1));
            R.upper.push_back(W);
            append(R.upper, slice(mids, nJ, nI));
            return R;
        }
        case 7: {
            const int tG = G.block_index_of(bar);
            need(gb[tG] != V, "bar inside the wrapping block");
            int tD = -1;
            for (int i = 0; i < mm; ++i)
                if (mids[i] == gb[tG]) tD = i;
            const auto& D = mids[tD];
            const int d = bar - D.front(), e = static_cast<int>(D.size()) - d;
            need(mm - 1 - tD >= a_rm1 - 1, "not enough blocks right of the bar");
            auto I = slice(mids, 0, tD);
            auto J = slice(mids, tD + 1, mm - tD - 1 - (a_rm1 - 1));
            auto K = slice(mids, mm - (a_rm1 - 1), a_rm1 - 1);
            R.pairs.emplace_back(V, V);
            int pos = u + 1;
            auto Isrc = sources_for(I, pos);
            const int span = d + e + block_total(K);
            const int bstart = pos;
            auto Psrc = join(run_of(pos, d), run_of(pos + span - e, e));
            pos += d;
            auto Ksrc = sources_for(K, pos);
            pos += e;
            auto Jsrc = sources_for(J, pos);
            need(pos == n - v + 1, "layout does not close");
            pair_up(Isrc, I);
            R.pairs.emplace_back(Psrc, D);
            pair_up(Ksrc, K);
            pair_up(Jsrc, J);
            R.lower.push_back(V);
            append(R.lower, Isrc);
            R.lower.push_back(Psrc);
            append(R.lower, Ksrc);
            append(R.lower, Jsrc);
            R.upper.push_back(V);
            append(R.upper, Isrc);
            R.upper.push_back(run_of(bstart, span));
            append(R.upper, Jsrc);
            return R;
        }
        case 8: {
            const int tG = G.block_index_of(bar);
            need(gb[tG] != V, "bar inside the wrapping block");
            int tD = -1;
            for (int i = 0; i < mm; ++i)
                if (mids[i] == gb[tG]) tD = i;
            const auto& D = mids[tD];
            const int d = bar - D.front(), e = static_cast<int>(D.size()) - d;
            const int k0 = mm - 1 - tD;
            const int nJ = a_rm1 - 2 - k0, nI = a_r - 1;
            need(nJ >= 0, "too many blocks right of the bar");
            need(nJ + nI == tD, "block counts inconsistent");
            auto J = slice(mids, 0, nJ);
            auto I = slice(mids, nJ, nI);
            auto K = slice(mids, tD + 1, k0);
            R.pairs.emplace_back(V, V);
            int pos = u + 1;
            auto Jsrc = sources_for(J, pos);
            const int span = d + e + block_total(I);
            auto Qsrc = join(run_of(pos, d), run_of(pos + span - e, e));
            pos += d;
            auto Isrc = sources_for(I, pos);
            pos += e;
            auto Ksrc = sources_for(K, pos);
            need(pos == n - v + 1, "layout does not close");
            pair_up(Jsrc, J);
            R.pairs.emplace_back(Qsrc, D);
            pair_up(Isrc, I);
            pair_up(Ksrc, K);
            R.lower.push_back(V);
            append(R.lower, Jsrc);
            R.lower.push_back(Qsrc);
            append(R.lower, Isrc);
            append(R.lower, Ksrc);
            const int aW = u + block_total(J) + d, bW = e + block_total(K) + v;
            R.upper.push_back(join(run_of(1, aW), run_of(n - bW + 1, bW)));
            append(R.upper, Isrc);
            return R;
        }
        case 9: {
            const int alpha = bar - 1, betal = u - alpha, gamma = v;
            need(alpha >= 1 && betal >= 1, "bar inconsistent with case 9");
            const int nI = a_rm1 - 1;
            need(mm >= nI, "not enough middle blocks");
            auto I = slice(mids, 0, nI);
            auto J = slice(mids, nI, mm - nI);
            int pos = alpha + 1;
            auto Isrc = sources_for(I, pos);
            std::vector<int> Csrc =
                join(join(run_of(1, alpha), run_of(pos, betal)), run_of(n - gamma + 1, gamma));
            pos += betal;
            auto Jsrc = sources_for(J, pos);
            need(pos == n - gamma + 1, "layout does not close");
            R.pairs.emplace_back(Csrc, V);
            pair_up(Isrc, I);
            pair_up(Jsrc, J);
            R.lower.push_back(Csrc);
            append(R.lower, Isrc);
            append(R.lower, Jsrc);
            R.upper.push_back(
                join(run_of(1, alpha + block_total(I) + betal), run_of(n - gamma + 1, gamma)));
            append(R.upper, Jsrc);
            return R;
        }
        case 10: {
            const int gamma = n - bar + 1, betal = v - gamma, alpha = u;
            need(gamma >= 1 && betal >= 1, "bar inconsistent with case 10");
            const int nI = a_r - 1;
            need(mm >= nI, "not enough middle blocks");
            auto I = slice(mids, 0, nI);
            auto J = slice(mids, nI, mm - nI);
            int pos = alpha + 1;
            auto Isrc = sources_for(I, pos);
            std::vector<int> Csrc =
                join(join(run_of(1, alpha), run_of(pos, betal)), run_of(n - gamma + 1, gamma));
            pos += betal;
            auto Jsrc = sources_for(J, pos);
            need(pos == n - gamma + 1, "layout does not close");
            R.pairs.emplace_back(Csrc, V);
            pair_up(Isrc, I);
            pair_up(Jsrc, J);
            R.lower.push_back(Csrc);
            append(R.lower, Isrc);
            append(R.lower, Jsrc);
            R.upper.push_back(join(run_of(1, alpha),
                                   run_of(alpha + block_total(I) + 1, n - alpha - block_total(I))));
            append(R.upper, Isrc);
            return R;
        }
        default:
            throw std::logic_error("unknown case");
    }
}

}  // namespace

Chain psi_inverse(const Chain& gamma, int bar, const FactorizationType& a) {
    if (a.r() < 2) throw std::invalid_argument("psi_inverse requires r >= 2");
    FactorizationType ap = a.fuse_last_two();
    std::string why;
    if (!validate_chain(gamma, ap, &why))
        throw std::invalid_argument("psi_inverse: gamma not in N(a'): " + why);
    const int n = a.n;
    const int r = a.r();
    const NCPartition& G = gamma.partitions[r - 2];
    const int cid = classify_inverse_case(G, bar, a.parts[r - 2], a.parts[r - 1]);
    Rebuilt R = rebuild(cid, G, bar, a.parts[r - 2], a.parts[r - 1]);
    Permutation sigma = sigma_from_pairs(R.pairs, n);
    Permutation inv = sigma.inverse();
    Chain out;
    out.partitions.reserve(r + 1);
    for (int i = 0; i <= r - 2; ++i)
        out.partitions.push_back(apply_permutation(inv, gamma.partitions[i]));
    NCPartition lower(run_of(1, n), R.lower);
    if (out.partitions[r - 2] != lower)
        throw std::logic_error("psi_inverse: reconstruction mismatch");
    out.partitions.emplace_back(run_of(1, n), R.upper);
    out.partitions.push_back(NCPartition::one_block(n));
    if (!validate_chain(out, a, &why))
        throw std::invalid_argument("psi_inverse: pair not in the image: " + why);
    return out;
}

}  // namespace minfact
