#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eg/perm.hpp"

namespace eg {

using Int = boost::multiprecision::cpp_int;

/// A monomial in the x_i / y_i alphabets (i ranges over Z). Exponent lists
/// are sorted by variable index and carry no zero exponents.
struct Monomial {
    std::vector<std::pair<int, int>> xe, ye;

    static Monomial one() { return {}; }
    static Monomial x(int i, int e = 1);
    static Monomial y(int i, int e = 1);

    Monomial operator*(const Monomial& rhs) const;
    long degree() const;
    bool is_one() const { return xe.empty() && ye.empty(); }

    /// Canonical serialization order: lexicographic on the sorted
    /// (index, exponent) pair lists, x-part first.
    bool operator<(const Monomial& rhs) const {
        if (xe != rhs.xe) return xe < rhs.xe;
        return ye < rhs.ye;
    }
    bool operator==(const Monomial&) const = default;
};

/// Sparse exact polynomial over Z in the x_i, y_i.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Int c) {
        if (c != 0) terms_.emplace(Monomial::one(), std::move(c));
    }
    Polynomial(Monomial m, Int c) {
        if (c != 0) terms_.emplace(std::move(m), std::move(c));
    }

    static Polynomial x(int i) { return Polynomial(Monomial::x(i), 1); }
    static Polynomial y(int i) { return Polynomial(Monomial::y(i), 1); }
    static Polynomial constant(long c) { return Polynomial(Int(c)); }

    bool is_zero() const { return terms_.empty(); }
    long total_degree() const;
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    Int coefficient(const Monomial& m) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;

    bool operator==(const Polynomial&) const = default;

    /// Exact quotient; throws NotDivisible when no polynomial quotient exists.
    friend Polynomial exact_divide(const Polynomial& p, const Polynomial& q);

    /// Substitute every x_i by y_i.
    friend Polynomial specialize_x_to_y(const Polynomial& p);

    /// The involution x_i -> -x_{1-i}, y_i -> -y_{1-i}.
    friend Polynomial omega1(const Polynomial& p);

    /// Simultaneous reindexing of the x-variables (missing indices fixed).
    friend Polynomial substitute_x_indices(const Polynomial& p,
                                           const std::map<int, int>& repl);

    /// Every monomial containing any x-variable is dropped after setting the
    /// given x-indices to zero; y-variables untouched.
    friend Polynomial set_x_to_zero(const Polynomial& p, const std::vector<int>& idx);
    friend Polynomial set_all_y_to_zero(const Polynomial& p);

    std::string to_string() const;

private:
    std::map<Monomial, Int> terms_;
    void add_term(const Monomial& m, const Int& c);
};

Polynomial x_minus_y(int i, int j);  // x_i - y_j

/// Form classification under the order 1 < 2 < ... < -1 < 0.
enum class FormType { Type1, Type2, Type3 };

/// The linear form (y_i - y_j) with i before j in ZOrder.
struct LinearForm {
    int i, j;
    LinearForm(int i_, int j_);
    FormType classify() const;
    Polynomial expand() const;  // y_i - y_j
    auto operator<=>(const LinearForm&) const = default;
};

/// Image of the form under omega1: the form on the pair (1-j, 1-i).
LinearForm omega1_form(const LinearForm& f);

/// A product of linear forms (y_i - y_j); the empty product is 1.
struct FactorProduct {
    std::vector<LinearForm> factors;  // kept sorted (multiset)

    FactorProduct() = default;
    explicit FactorProduct(std::vector<LinearForm> fs);
    Polynomial expand() const;
    FactorProduct operator*(const FactorProduct& rhs) const;  // multiset union
    auto operator<=>(const FactorProduct&) const = default;
};

/// A positivity certificate: a list of factor products whose expansions sum
/// to the certified polynomial.
struct Certificate {
    std::vector<FactorProduct> summands;

    Polynomial expand() const;
    Certificate operator+(const Certificate& rhs) const;  // concatenation
    Certificate operator*(const Certificate& rhs) const;  // summand-wise products
    long empty_summand_count() const;
    bool operator==(const Certificate&) const = default;
};

struct AndersonReport {
    bool ok = true;
    std::string violation;  // empty when ok
};

/// Degree constraints per summand: type 1 and 2 multiplicities at most 1,
/// type 3 at most 2.
AndersonReport anderson_check(const Certificate& c);

std::string to_string(const Certificate& c);

}  // namespace eg
