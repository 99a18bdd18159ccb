#include "minfact/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace minfact {

Monomial::Monomial(std::vector<std::pair<int, int>> exps) : exps_(std::move(exps)) {
    std::sort(exps_.begin(), exps_.end());
    for (size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i].first < 0 || exps_[i].second <= 0)
            throw std::invalid_argument("bad monomial exponent");
        if (i > 0 && exps_[i].first == exps_[i - 1].first)
            throw std::invalid_argument("duplicate variable in monomial");
    }
}

Monomial Monomial::var(int v, int e) { return Monomial({{v, e}}); }

int Monomial::degree() const {
    int d = 0;
    for (auto& [v, e] : exps_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<std::pair<int, int>> out;
    size_t i = 0, j = 0;
    while (i < exps_.size() || j < o.exps_.size()) {
        if (j == o.exps_.size() || (i < exps_.size() && exps_[i].first < o.exps_[j].first))
            out.push_back(exps_[i++]);
        else if (i == exps_.size() || o.exps_[j].first < exps_[i].first)
            out.push_back(o.exps_[j++]);
        else {
            out.emplace_back(exps_[i].first, exps_[i].second + o.exps_[j].second);
            ++i, ++j;
        }
    }
    Monomial m;
    m.exps_ = std::move(out);
    return m;
}

bool Monomial::operator<(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    size_t i = 0, j = 0;
    while (i < exps_.size() || j < o.exps_.size()) {
        int va = i < exps_.size() ? exps_[i].first : INT32_MAX;
        int vb = j < o.exps_.size() ? o.exps_[j].first : INT32_MAX;
        int v = std::min(va, vb);
        int ea = va == v ? exps_[i].second : 0;
        int eb = vb == v ? o.exps_[j].second : 0;
        if (ea != eb) return ea < eb;
        if (va == v) ++i;
        if (vb == v) ++j;
    }
    return false;
}

Polynomial::Polynomial(long c) {
    if (c != 0) terms_[Monomial()] = c;
}

Polynomial::Polynomial(const BigInt& c) {
    if (c != 0) terms_[Monomial()] = c;
}

Polynomial::Polynomial(const Monomial& m, BigInt c) {
    if (c != 0) terms_[m] = std::move(c);
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    out += o;
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
    return out;
}

BigInt Polynomial::evaluate(const std::vector<BigInt>& point) const {
    BigInt total = 0;
    for (auto& [m, c] : terms_) {
        BigInt v = c;
        for (auto& [var, e] : m.exponents()) {
            BigInt x = var < static_cast<int>(point.size()) ? point[var] : BigInt(0);
            for (int t = 0; t < e; ++t) v *= x;
        }
        total += v;
    }
    return total;
}

Polynomial Polynomial::specialize(const std::map<int, BigInt>& values) const {
    Polynomial out;
    for (auto& [m, c] : terms_) {
        BigInt coeff = c;
        std::vector<std::pair<int, int>> kept;
        for (auto& [var, e] : m.exponents()) {
            auto it = values.find(var);
            if (it == values.end()) {
                kept.emplace_back(var, e);
            } else {
                for (int t = 0; t < e; ++t) coeff *= it->second;
            }
        }
        if (coeff != 0) out.add_term(Monomial(std::move(kept)), coeff);
    }
    return out;
}

Polynomial Polynomial::rename_variables(const std::map<int, int>& remap) const {
    Polynomial out;
    for (auto& [m, c] : terms_) {
        std::vector<std::pair<int, int>> exps;
        for (auto& [var, e] : m.exponents()) exps.emplace_back(remap.at(var), e);
        out.add_term(Monomial(std::move(exps)), c);
    }
    return out;
}

Polynomial Polynomial::divide_exact(const BigInt& d) const {
    if (d == 0) throw std::invalid_argument("division by zero");
    Polynomial out;
    for (auto& [m, c] : terms_) {
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        if (r != 0) throw std::logic_error("divide_exact: non-integral coefficient");
        out.terms_[m] = q;
    }
    return out;
}

std::string Polynomial::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        BigInt a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool print_coeff = a != 1 || m.is_one();
        if (print_coeff) os << a.get_str();
        bool need_star = print_coeff;
        for (auto& [var, e] : m.exponents()) {
            if (need_star) os << "*";
            os << "X" << var;
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

Polynomial type_product_rhs(const std::vector<int>& a) {
    if (a.empty()) throw std::invalid_argument("empty factorization type");
    int n = 1;
    for (int ai : a) {
        if (ai < 2) throw std::invalid_argument("factorization type entries must be >= 2");
        n += ai - 1;
    }
    const int r = static_cast<int>(a.size());
    Polynomial out(1);
    int b = 0;
    for (int i = 1; i <= r - 1; ++i) {
        b += a[i - 1] - 1;
        out *= Polynomial(Monomial::var(i), b) + Polynomial(n - b);
    }
    return out;
}

Polynomial hook_rhs(int n) {
    if (n < 1) throw std::invalid_argument("hook_rhs requires n >= 1");
    Polynomial out(1);
    for (int i = 1; i <= n - 1; ++i)
        out *= Polynomial(Monomial::var(i), i) + Polynomial(n + 1 - i);
    return out;
}

Polynomial final_chain_rhs(int n, int k) {
    if (k < 2 || k > n) throw std::invalid_argument("final_chain_rhs requires 2 <= k <= n");
    Polynomial out(binomial(n, k));
    for (int i = n - k; i <= n - 2; ++i) {
        if (i == 0)
            out *= Polynomial(n);
        else
            out *= Polynomial(Monomial::var(i), i) + Polynomial(n - i);
    }
    return out.divide_exact(n);
}

BigInt binomial(int n, int k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(int n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt int_pow(const BigInt& base, int e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace minfact
