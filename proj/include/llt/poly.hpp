#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "llt/errors.hpp"

namespace llt {

using Int = boost::multiprecision::cpp_int;

// t^{t_exp} * x1^{e1} * ... * xn^{en}.  Only t is Laurent; x exponents are
// nonnegative.  The vector length is the alphabet size of the owning
// polynomial.
struct Monomial {
  long t_exp = 0;
  std::vector<int> x_exps;

  long x_degree() const;
  bool operator==(const Monomial&) const = default;
};

// Canonical term order: degree-lex on x_exps, then t_exp ascending.
bool monomial_less(const Monomial& a, const Monomial& b);

// Exact polynomial in x1..xn with integer Laurent exponents in t and
// arbitrary-precision integer coefficients.  Immutable after construction;
// terms are kept in canonical order with no zero coefficients, so equality
// is term-list equality.  The zero polynomial is an empty term list that
// still remembers n.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Int>;

  explicit Polynomial(int n = 0) : n_(n) {}
  // Canonicalizes: sorts, merges duplicates, strips zeros.
  Polynomial(int n, std::vector<Term> terms);

  static Polynomial zero(int n) { return Polynomial(n); }
  static Polynomial constant(int n, Int c);
  static Polynomial one(int n) { return constant(n, 1); }
  static Polynomial monomial(int n, long t_exp, std::vector<int> x_exps, Int c = 1);
  // x_i as a polynomial (i is 1-based).
  static Polynomial variable(int n, int i);
  static Polynomial t_power(int n, long k);

  int alphabet_size() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool operator==(const Polynomial&) const = default;

  long min_t_exp() const;  // precondition: nonzero
  long max_t_exp() const;  // precondition: nonzero

  // Coefficient of the given x-monomial as a univariate Laurent polynomial in
  // t, returned as (t_exp, coeff) pairs in ascending t order.
  std::vector<std::pair<long, Int>> x_coefficient(const std::vector<int>& x_exps) const;

  // Specialization t = 1.
  Polynomial at_t_one() const;

  std::string to_string() const;

 private:
  int n_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial neg(const Polynomial& p);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

// Multiplies every term by t^k.
Polynomial scale_t(const Polynomial& p, long k);

// t -> t^{-1}.
Polynomial substitute_t_inverse(const Polynomial& p);

// The unique k with p == scale_t(q, k), if any.  Both zero gives 0; exactly
// one zero gives nullopt.
std::optional<long> equivalence_shift(const Polynomial& p, const Polynomial& q);

// Invariance under every adjacent transposition of the x positions (hence
// under all of S_n).
bool is_symmetric(const Polynomial& p);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }

}  // namespace llt
