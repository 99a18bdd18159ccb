#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace minfact {

using BigInt = mpz_class;

/// Product of variables X_v^e, v >= 0, e >= 1; sparse, sorted by variable.
class Monomial {
public:
    Monomial() = default;  // the empty product, 1
    explicit Monomial(std::vector<std::pair<int, int>> exps);

    static Monomial var(int v, int e = 1);

    const std::vector<std::pair<int, int>>& exponents() const { return exps_; }
    int degree() const;
    bool is_one() const { return exps_.empty(); }

    Monomial operator*(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

    /// Graded lexicographic order, ascending: lower total degree first; on
    /// ties the monomial with the smaller exponent on the smallest differing
    /// variable comes first (so at equal degree X2 < X1, and reverse
    /// iteration prints X1 before X2).
    bool operator<(const Monomial& o) const;

private:
    std::vector<std::pair<int, int>> exps_;
};

/// Exact sparse multivariate polynomial over the integers in X_0, X_1, ...
/// No zero coefficients are stored; equality is structural.
class Polynomial {
public:
    Polynomial() = default;  // zero
    Polynomial(long c);      // constant
    Polynomial(const BigInt& c);
    explicit Polynomial(const Monomial& m, BigInt c = 1);

    static Polynomial variable(int v) { return Polynomial(Monomial::var(v)); }

    const std::map<Monomial, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Value at X_v = point[v]; variables beyond the vector evaluate at 0.
    BigInt evaluate(const std::vector<BigInt>& point) const;

    /// Substitute X_v := value for every v with remap[v] present, keeping
    /// other variables. Used for the X_i := 0 / 1 specializations.
    Polynomial specialize(const std::map<int, BigInt>& values) const;

    /// Rename variables: X_v -> X_{remap[v]}. Every variable occurring in
    /// the polynomial must be mapped.
    Polynomial rename_variables(const std::map<int, int>& remap) const;

    /// Divide every coefficient by d, throwing if any division is inexact.
    Polynomial divide_exact(const BigInt& d) const;

    /// Terms in descending graded-lex order, e.g. "2*X1*X2 + 2*X1 + 6".
    std::string text() const;

private:
    void add_term(const Monomial& m, const BigInt& c);
    std::map<Monomial, BigInt> terms_;
};

/// Right-hand side of the main product formula: for a factorization type
/// a = (a_1..a_r) with a_i >= 2 and sum (a_i - 1) = n - 1, the product
/// over i = 1..r-1 of (b_i X_i + (n - b_i)) with b_i = sum_{j<=i} (a_j - 1).
Polynomial type_product_rhs(const std::vector<int>& a);

/// Product over i = 1..n-1 of (i X_i + (n+1-i)); the hook-weight sum over
/// the decreasingly labelled trees on n vertices.
Polynomial hook_rhs(int n);

/// (1/n) C(n,k) * product over i = n-k..n-2 of (i X_i + (n - i)); the
/// division by n is exact and asserted. Requires 2 <= k <= n.
Polynomial final_chain_rhs(int n, int k);

BigInt binomial(int n, int k);
BigInt factorial(int n);
BigInt int_pow(const BigInt& base, int e);

}  // namespace minfact
