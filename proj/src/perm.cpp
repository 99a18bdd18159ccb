#include "minfact/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace minfact {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<char> seen(n, 0);
    for (int v : images_) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("not a bijection of {1..n}");
        seen[v - 1] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("negative size");
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i + 1;
    return Permutation(std::move(im));
}

Permutation Permutation::long_cycle(int n) {
    if (n < 1) throw std::invalid_argument("long_cycle requires n >= 1");
    std::vector<int> im(n);
    for (int i = 0; i < n - 1; ++i) im[i] = i + 2;
    im[n - 1] = 1;
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycle(int n, const std::vector<int>& support) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i + 1;
    const int k = static_cast<int>(support.size());
    for (int i = 0; i < k; ++i) {
        int x = support[i], y = support[(i + 1) % k];
        if (x < 1 || x > n) throw std::invalid_argument("cycle support out of range");
        im[x - 1] = y;
    }
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < static_cast<int>(images_.size()); ++i)
        im[images_[i] - 1] = i + 1;
    return Permutation(std::move(im));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    const int n = size();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= n; ++s) {
        if (seen[s - 1]) continue;
        std::vector<int> orbit;
        int x = s;
        do {
            seen[x - 1] = 1;
            orbit.push_back(x);
            x = apply(x);
        } while (x != s);
        out.push_back(std::move(orbit));
    }
    return out;
}

int Permutation::cycle_count() const {
    const int n = size();
    std::vector<char> seen(n, 0);
    int count = 0;
    for (int s = 1; s <= n; ++s) {
        if (seen[s - 1]) continue;
        ++count;
        int x = s;
        do {
            seen[x - 1] = 1;
            x = apply(x);
        } while (x != s);
    }
    return count;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("compose: ground-set size mismatch");
    std::vector<int> im(a.size());
    for (int x = 1; x <= a.size(); ++x) im[x - 1] = a.apply(b.apply(x));
    return Permutation(std::move(im));
}

int length(const Permutation& sigma) { return sigma.size() - sigma.cycle_count(); }

bool is_geodesic_triple(const Permutation& prefix, const Permutation& mid,
                        const Permutation& total) {
    if (compose(prefix, mid) != total)
        throw std::invalid_argument("is_geodesic_triple: factorization mismatch");
    return length(total) == length(prefix) + length(mid);
}

std::optional<std::vector<int>> cycle_of(const Permutation& sigma) {
    std::optional<std::vector<int>> found;
    for (auto& orbit : sigma.cycles()) {
        if (orbit.size() < 2) continue;
        if (found) return std::nullopt;  // two non-singleton orbits
        found = orbit;
    }
    return found;
}

}  // namespace minfact
