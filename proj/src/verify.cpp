#include "minfact/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "minfact/chains.hpp"
#include "minfact/json_io.hpp"
#include "minfact/ncpart.hpp"
#include "minfact/perm.hpp"
#include "minfact/poly.hpp"
#include "minfact/psi.hpp"
#include "minfact/trees.hpp"

namespace minfact {

namespace {

std::string type_key(const FactorizationType& a) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < a.r(); ++i) os << (i ? "," : "") << a.parts[i];
    os << ")";
    return os.str();
}

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point t0 = Clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    }
};

void fail_with(CheckReport& r, const std::string& witness) {
    r.pass = false;
    if (r.witness.empty()) r.witness = witness;
}

// ---- product_formula: weighted_sum(a) equals the product formula exactly ----

CheckReport check_product_formula(const FactorizationType& a) {
    Timer t;
    CheckReport r;
    r.check = "product_formula";
    r.params = {{"n", std::to_string(a.n)}, {"a", type_key(a)}};
    Polynomial lhs = weighted_sum(a);
    Polynomial rhs = type_product_rhs(a.parts);
    r.count = count_chains(a).get_si();
    if (lhs != rhs)
        fail_with(r, "sum " + lhs.text() + " != product " + rhs.text());
    r.millis = t.ms();
    return r;
}

// ---- counting: |N(a)| = n^{r-1}; the X:=0 slice counts interval chains ----

CheckReport check_counting(const FactorizationType& a) {
    Timer t;
    CheckReport r;
    r.check = "counting";
    r.params = {{"n", std::to_string(a.n)}, {"a", type_key(a)}};
    BigInt total = 0, interval_only = 0;
    ChainEnumerator e(a);
    while (e.next()) {
        ++total;
        if (chain_weight(e.chain()).is_one()) ++interval_only;
    }
    r.count = total.get_si();
    BigInt expected = int_pow(a.n, a.r() - 1);
    if (total != expected)
        fail_with(r, "|N(a)| = " + total.get_str() + ", expected " + expected.get_str());
    Polynomial sum = weighted_sum(a);
    std::map<int, BigInt> zeros, ones;
    for (int i = 1; i < a.r(); ++i) zeros[i] = 0, ones[i] = 1;
    Polynomial at0 = sum.specialize(zeros), at1 = sum.specialize(ones);
    if (at1 != Polynomial(expected))
        fail_with(r, "X:=1 specialization " + at1.text() + " != n^{r-1}");
    if (at0 != Polynomial(interval_only))
        fail_with(r, "X:=0 specialization " + at0.text() + " != interval-chain count " +
                         interval_only.get_str());
    if (std::all_of(a.parts.begin(), a.parts.end(), [](int x) { return x == 2; }) &&
        at0 != Polynomial(factorial(a.n - 1)))
        fail_with(r, "interval-chain count != (n-1)!");
    r.millis = t.ms();
    return r;
}

// ---- psi_bijection: (Psi, beta) bijects N(a) with N(a') x {1..n} ----

CheckReport check_psi_bijection(const FactorizationType& a) {
    Timer t;
    CheckReport r;
    r.check = "psi_bijection";
    r.params = {{"n", std::to_string(a.n)}, {"a", type_key(a)}};
    const int n = a.n, rr = a.r();
    FactorizationType ap = a.fuse_last_two();
    std::set<std::pair<std::string, int>> seen;
    std::map<int, long long> case_histogram;
    long long total = 0;
    ChainEnumerator e(a);
    while (e.next() && r.pass) {
        Chain chain = e.chain();
        ++total;
        auto matches = match_cases(chain.partitions[rr - 1], chain.partitions[rr - 2]);
        if (matches.size() != 1) {
            fail_with(r, std::to_string(matches.size()) + " case templates match chain " +
                             text_of(chain));
            break;
        }
        PsiResult out = psi(chain);
        ++case_histogram[out.case_id];
        std::string why;
        if (!validate_chain(out.gamma, ap, &why)) {
            fail_with(r, "image not in N(a'): " + why + " for chain " + text_of(chain));
            break;
        }
        if (out.bar < 1 || out.bar > n) {
            fail_with(r, "bar out of range for chain " + text_of(chain));
            break;
        }
        if (!seen.emplace(text_of(out.gamma), out.bar).second) {
            fail_with(r, "collision at (" + text_of(out.gamma) + ", bar " +
                             std::to_string(out.bar) + ")");
            break;
        }
        Chain back = psi_inverse(out.gamma, out.bar, a);
        if (!(back == chain)) {
            fail_with(r, "round trip failed for chain " + text_of(chain));
            break;
        }
    }
    r.count = total;
    if (r.pass) {
        // Surjectivity plus the other round trip over the full codomain.
        ChainEnumerator g(ap);
        long long pairs = 0;
        while (g.next() && r.pass) {
            Chain gamma = g.chain();
            for (int bar = 1; bar <= n; ++bar) {
                ++pairs;
                Chain back = psi_inverse(gamma, bar, a);
                PsiResult fwd = psi(back);
                if (!(fwd.gamma == gamma) || fwd.bar != bar) {
                    fail_with(r, "psi(psi_inverse) != id at (" + text_of(gamma) + ", bar " +
                                     std::to_string(bar) + ")");
                    break;
                }
            }
        }
        if (r.pass && static_cast<long long>(seen.size()) != pairs)
            fail_with(r, "image size " + std::to_string(seen.size()) + " != |N(a')| * n = " +
                             std::to_string(pairs));
    }
    std::ostringstream hist;
    for (auto& [cid, cnt] : case_histogram) hist << (hist.tellp() > 0 ? " " : "") << cid << ":" << cnt;
    r.params["cases"] = hist.str();
    r.millis = t.ms();
    return r;
}

// ---- fiber_weights: each fiber's weight sum factors through the image ----

CheckReport check_fiber_weights(const FactorizationType& a) {
    Timer t;
    CheckReport r;
    r.check = "fiber_weights";
    r.params = {{"n", std::to_string(a.n)}, {"a", type_key(a)}};
    const int rr = a.r();
    const int a_r = a.parts[rr - 1];
    std::map<std::string, Polynomial> fiber_sum;
    std::map<std::string, Chain> gamma_of;
    long long total = 0;
    ChainEnumerator e(a);
    while (e.next()) {
        ++total;
        PsiResult out = psi(e.chain());
        std::string key = text_of(out.gamma);
        fiber_sum[key] += Polynomial(e.weight());
        gamma_of.emplace(key, out.gamma);
    }
    r.count = total;
    const Polynomial factor =
        Polynomial(Monomial::var(rr - 1), a.n - a_r) + Polynomial(a_r);
    for (auto& [key, sum] : fiber_sum) {
        Polynomial expected = Polynomial(chain_weight(gamma_of.at(key))) * factor;
        if (sum != expected) {
            fail_with(r, "fiber over " + key + ": " + sum.text() + " != " + expected.text());
            break;
        }
    }
    if (r.pass) {
        ChainEnumerator g(a.fuse_last_two());
        long long images = 0;
        while (g.next()) ++images;
        if (static_cast<long long>(fiber_sum.size()) != images)
            fail_with(r, "fiber count != |N(a')|");
    }
    r.millis = t.ms();
    return r;
}

// ---- hook: tree weight sum equals the displayed product ----

CheckReport check_hook(int n) {
    Timer t;
    CheckReport r;
    r.check = "hook";
    r.params = {{"n", std::to_string(n)}};
    Polynomial lhs = andre_weighted_sum(n);
    Polynomial rhs = hook_rhs(n);
    r.count = count_andre(n).get_si();
    if (lhs != rhs) fail_with(r, "tree sum " + lhs.text() + " != " + rhs.text());
    r.millis = t.ms();
    return r;
}

CheckReport check_andre_counts(int n) {
    Timer t;
    CheckReport r;
    r.check = "andre_counts";
    r.params = {{"n", std::to_string(n)}};
    BigInt trees = count_andre(n);
    BigInt perms = alternating_count(n);
    r.count = trees.get_si();
    if (trees != perms)
        fail_with(r, "tree count " + trees.get_str() + " != alternating permutations " +
                         perms.get_str());
    r.millis = t.ms();
    return r;
}

CheckReport check_recursion(int n) {
    Timer t;
    CheckReport r;
    r.check = "recursion";
    r.params = {{"n", std::to_string(n)}};
    r.count = 1LL << (n - 1);
    if (!check_hook_recursion(n)) fail_with(r, "doubling recursion fails at n = " + std::to_string(n));
    r.millis = t.ms();
    return r;
}

// ---- final_chains: count and weight sum per the corollary ----

CheckReport check_final_chains(int n, int k) {
    Timer t;
    CheckReport r;
    r.check = "final_chains";
    r.params = {{"n", std::to_string(n)}, {"k", std::to_string(k)}};
    BigInt cnt = count_final_chains(n, k);
    r.count = cnt.get_si();
    BigInt expected = int_pow(n, k - 2) * binomial(n, k);
    if (cnt != expected)
        fail_with(r, "count " + cnt.get_str() + " != n^{k-2} C(n,k) = " + expected.get_str());
    Polynomial lhs = final_weighted_sum(n, k);
    Polynomial rhs = final_chain_rhs(n, k);  // throws if the /n were inexact
    if (lhs != rhs) fail_with(r, "weight sum " + lhs.text() + " != " + rhs.text());
    r.millis = t.ms();
    return r;
}

CheckReport check_interval_covers(int n) {
    Timer t;
    CheckReport r;
    r.check = "interval_covers";
    r.params = {{"n", std::to_string(n)}};
    auto all = enumerate_noncrossing(n);
    r.count = static_cast<long long>(all.size());
    for (const auto& pi : all) {
        int interval_covers = 0;
        for (const auto& [rho, interval] : lower_covers(pi))
            if (interval) ++interval_covers;
        if (interval_covers != pi.rank()) {
            fail_with(r, "partition " + text_of(pi) + " has " +
                             std::to_string(interval_covers) + " interval covers, rank " +
                             std::to_string(pi.rank()));
            break;
        }
    }
    r.millis = t.ms();
    return r;
}

CheckReport check_cayley(int n) {
    Timer t;
    CheckReport r;
    r.check = "cayley";
    r.params = {{"n", std::to_string(n)}};
    Polynomial lhs = cayley_weighted_sum(n);
    Polynomial direct(1);
    for (int i = 1; i <= n - 2; ++i)
        direct *= Polynomial(Monomial::var(i), i) + Polynomial(n - i);
    r.count = count_cayley(n).get_si();
    if (lhs != direct) fail_with(r, "tree sum " + lhs.text() + " != " + direct.text());
    if (r.pass) {
        std::vector<int> twos(n - 1, 2);
        if (lhs != type_product_rhs(twos))
            fail_with(r, "tree sum differs from the chain polynomial for a = (2,..,2)");
    }
    BigInt expect_count = int_pow(n, n - 2);
    if (BigInt(static_cast<long>(r.count)) != expect_count)
        fail_with(r, "tree count != n^{n-2}");
    r.millis = t.ms();
    return r;
}

// ---- geodesic: the length function and its factorization properties ----

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i + 1;
    std::vector<Permutation> out;
    do out.emplace_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
}

CheckReport check_geodesic(int n) {
    Timer t;
    CheckReport r;
    r.check = "geodesic";
    r.params = {{"n", std::to_string(n)}};
    auto group = symmetric_group(n);
    r.count = static_cast<long long>(group.size());
    const Permutation C = Permutation::long_cycle(n);

    // BFS in the transposition Cayley graph from the identity.
    std::vector<Permutation> transpositions;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            transpositions.push_back(Permutation::from_cycle(n, {i, j}));
    std::map<Permutation, int> dist;
    std::vector<Permutation> frontier{Permutation::identity(n)};
    dist[frontier[0]] = 0;
    int depth = 0;
    while (!frontier.empty()) {
        ++depth;
        std::vector<Permutation> next;
        for (const auto& s : frontier)
            for (const auto& tr : transpositions) {
                Permutation u = compose(tr, s);
                if (dist.emplace(u, depth).second) next.push_back(u);
            }
        frontier = std::move(next);
    }
    for (const auto& s : group) {
        if (length(s) != dist.at(s)) {
            fail_with(r, "length != Cayley distance at " + to_json(s).dump());
            break;
        }
        if (length(s) != length(s.inverse()))
            fail_with(r, "length not symmetric under inverse");
    }
    if (r.pass) {  // triangle inequality
        for (const auto& s : group) {
            for (const auto& u : group)
                if (length(compose(s, u.inverse())) > length(s) + length(u)) {
                    fail_with(r, "triangle inequality fails");
                    break;
                }
            if (!r.pass) break;
        }
    }
    if (r.pass) {  // cyclic factors of additive factorizations are increasing
        for (const auto& a : group) {
            for (const auto& z : group) {
                auto support = cycle_of(z);
                if (!support) continue;
                Permutation b = compose(z.inverse(), compose(a.inverse(), C));
                if (length(a) + length(z) + length(b) != n - 1) continue;
                auto sorted = *support;
                std::sort(sorted.begin(), sorted.end());
                if (*support != sorted) {
                    fail_with(r, "increasing-cycle property fails: cycle " + to_json(z).dump() +
                                     " not increasing in factorization");
                    break;
                }
            }
            if (!r.pass) break;
        }
    }
    if (r.pass) {  // C = y z minimal with z a cycle forces y's shape
        for (const auto& y : group) {
            Permutation z = compose(y.inverse(), C);
            if (!cycle_of(z)) continue;
            if (length(y) + length(z) != n - 1) continue;
            auto pi = from_geodesic_permutation(y);
            if (!pi || classify_shape(*pi) == Shape::Other) {
                fail_with(r, "two-factor shape property fails at y = " + to_json(y).dump());
                break;
            }
        }
    }
    if (r.pass) {  // geodesic set = noncrossing partitions, and order compatibility
        auto nc = enumerate_noncrossing(n);
        long long geodesics = 0;
        for (const auto& s : group) {
            if (length(s) + length(compose(C, s.inverse())) != n - 1) continue;
            ++geodesics;
            auto pi = from_geodesic_permutation(s);
            if (!pi || to_permutation(*pi, n) != s) {
                fail_with(r, "geodesic embedding round trip fails");
                break;
            }
        }
        if (r.pass && BigInt(static_cast<long>(geodesics)) != catalan(n))
            fail_with(r, "geodesic count " + std::to_string(geodesics) + " != Catalan(n)");
        if (r.pass) {
            for (const auto& p : nc) {
                for (const auto& q : nc) {
                    Permutation sp = to_permutation(p, n), sq = to_permutation(q, n);
                    bool additive =
                        length(sq) == length(sp) + length(compose(sp.inverse(), sq));
                    if (refines(p, q) != additive) {
                        fail_with(r, "order characterization fails at " + text_of(p) +
                                         " <= " + text_of(q));
                        break;
                    }
                }
                if (!r.pass) break;
            }
        }
    }
    r.millis = t.ms();
    return r;
}

}  // namespace

std::vector<std::string> check_names() {
    return {"product_formula",   "counting",  "psi_bijection", "fiber_weights",
            "hook",       "andre_counts", "recursion",  "final_chains",
            "interval_covers",  "cayley",    "geodesic"};
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& names,
                                    const BatteryOptions& opt) {
    const int N = opt.max_n;
    std::vector<std::function<CheckReport()>> tasks;
    for (const auto& name : names) {
        if (name == "product_formula" || name == "counting" || name == "psi_bijection" ||
            name == "fiber_weights") {
            for (int n = 2; n <= N; ++n)
                for (const auto& a : all_types(n)) {
                    if ((name == "psi_bijection" || name == "fiber_weights") && a.r() < 2)
                        continue;
                    if (name == "product_formula")
                        tasks.emplace_back([a] { return check_product_formula(a); });
                    else if (name == "counting")
                        tasks.emplace_back([a] { return check_counting(a); });
                    else if (name == "psi_bijection")
                        tasks.emplace_back([a] { return check_psi_bijection(a); });
                    else
                        tasks.emplace_back([a] { return check_fiber_weights(a); });
                }
        } else if (name == "hook") {
            for (int n = 1; n <= N; ++n) tasks.emplace_back([n] { return check_hook(n); });
        } else if (name == "andre_counts") {
            for (int n = 1; n <= N; ++n)
                tasks.emplace_back([n] { return check_andre_counts(n); });
        } else if (name == "recursion") {
            for (int n = 2; n <= N - 1; ++n)
                tasks.emplace_back([n] { return check_recursion(n); });
        } else if (name == "final_chains") {
            for (int n = 2; n <= N; ++n)
                for (int k = 2; k <= n; ++k)
                    tasks.emplace_back([n, k] { return check_final_chains(n, k); });
        } else if (name == "interval_covers") {
            for (int n = 1; n <= N + 1; ++n)
                tasks.emplace_back([n] { return check_interval_covers(n); });
        } else if (name == "cayley") {
            for (int n = 2; n <= N; ++n) tasks.emplace_back([n] { return check_cayley(n); });
        } else if (name == "geodesic") {
            for (int n = 2; n <= N - 2; ++n)
                tasks.emplace_back([n] { return check_geodesic(n); });
        } else {
            throw std::invalid_argument("unknown check: " + name);
        }
    }

    std::vector<CheckReport> reports(tasks.size());
    const int workers = std::max(1, std::min<int>(opt.threads, static_cast<int>(tasks.size())));
    if (workers == 1) {
        for (size_t i = 0; i < tasks.size(); ++i) reports[i] = tasks[i]();
    } else {
        std::atomic<size_t> cursor{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                while (true) {
                    size_t i = cursor.fetch_add(1);
                    if (i >= tasks.size()) return;
                    reports[i] = tasks[i]();
                }
            });
        for (auto& th : pool) th.join();
    }
    return reports;
}

std::vector<CheckReport> run_all(const BatteryOptions& opt) {
    return run_checks(check_names(), opt);
}

std::string report_json(const CheckReport& r, bool with_timing) {
    nlohmann::json j{{"check", r.check},
                     {"params", r.params},
                     {"status", r.pass ? "pass" : "fail"},
                     {"count", r.count}};
    if (!r.pass) j["witness"] = r.witness;
    if (with_timing) j["millis"] = r.millis;
    return j.dump();
}

}  // namespace minfact
