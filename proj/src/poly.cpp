#include "llt/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace llt {

long Monomial::x_degree() const {
  long d = 0;
  for (int e : x_exps) d += e;
  return d;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
  long da = a.x_degree(), db = b.x_degree();
  if (da != db) return da < db;
  // within a degree, x1-major: x1^2*x2 precedes x1*x2^2
  if (a.x_exps != b.x_exps) return a.x_exps > b.x_exps;
  return a.t_exp < b.t_exp;
}

Polynomial::Polynomial(int n, std::vector<Term> terms) : n_(n) {
  for (const auto& [m, c] : terms) {
    if (static_cast<int>(m.x_exps.size()) != n)
      throw precondition_error("monomial length does not match alphabet size");
    for (int e : m.x_exps)
      if (e < 0) throw precondition_error("negative x exponent");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return monomial_less(a.first, b.first); });
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().first == t.first)
      terms_.back().second += t.second;
    else
      terms_.push_back(std::move(t));
    if (!terms_.empty() && terms_.back().second == 0) terms_.pop_back();
  }
}

Polynomial Polynomial::constant(int n, Int c) {
  if (c == 0) return zero(n);
  return Polynomial(n, {{Monomial{0, std::vector<int>(n, 0)}, std::move(c)}});
}

Polynomial Polynomial::monomial(int n, long t_exp, std::vector<int> x_exps, Int c) {
  if (c == 0) return zero(n);
  return Polynomial(n, {{Monomial{t_exp, std::move(x_exps)}, std::move(c)}});
}

Polynomial Polynomial::variable(int n, int i) {
  if (i < 1 || i > n) throw precondition_error("variable index out of range");
  std::vector<int> e(n, 0);
  e[i - 1] = 1;
  return monomial(n, 0, std::move(e));
}

Polynomial Polynomial::t_power(int n, long k) { return monomial(n, k, std::vector<int>(n, 0)); }

long Polynomial::min_t_exp() const {
  if (terms_.empty()) throw precondition_error("min_t_exp of zero polynomial");
  long m = terms_.front().first.t_exp;
  for (const auto& [mon, c] : terms_) m = std::min(m, mon.t_exp);
  return m;
}

long Polynomial::max_t_exp() const {
  if (terms_.empty()) throw precondition_error("max_t_exp of zero polynomial");
  long m = terms_.front().first.t_exp;
  for (const auto& [mon, c] : terms_) m = std::max(m, mon.t_exp);
  return m;
}

std::vector<std::pair<long, Int>> Polynomial::x_coefficient(const std::vector<int>& x_exps) const {
  std::vector<std::pair<long, Int>> out;
  for (const auto& [m, c] : terms_)
    if (m.x_exps == x_exps) out.emplace_back(m.t_exp, c);
  return out;
}

Polynomial Polynomial::at_t_one() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back({Monomial{0, m.x_exps}, c});
  return Polynomial(n_, std::move(out));
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
  if (p.alphabet_size() != q.alphabet_size())
    throw precondition_error("alphabet-size mismatch in add");
  std::vector<Polynomial::Term> out;
  out.reserve(p.terms().size() + q.terms().size());
  auto a = p.terms().begin(), ae = p.terms().end();
  auto b = q.terms().begin(), be = q.terms().end();
  while (a != ae && b != be) {
    if (a->first == b->first) {
      Int c = a->second + b->second;
      if (c != 0) out.push_back({a->first, std::move(c)});
      ++a, ++b;
    } else if (monomial_less(a->first, b->first)) {
      out.push_back(*a++);
    } else {
      out.push_back(*b++);
    }
  }
  out.insert(out.end(), a, ae);
  out.insert(out.end(), b, be);
  return Polynomial(p.alphabet_size(), std::move(out));
}

Polynomial neg(const Polynomial& p) {
  std::vector<Polynomial::Term> out;
  out.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) out.push_back({m, -c});
  return Polynomial(p.alphabet_size(), std::move(out));
}

Polynomial sub(const Polynomial& p, const Polynomial& q) { return add(p, neg(q)); }

Polynomial mul(const Polynomial& p, const Polynomial& q) {
  if (p.alphabet_size() != q.alphabet_size())
    throw precondition_error("alphabet-size mismatch in mul");
  const int n = p.alphabet_size();
  std::map<Monomial, Int, bool (*)(const Monomial&, const Monomial&)> acc(monomial_less);
  for (const auto& [ma, ca] : p.terms()) {
    for (const auto& [mb, cb] : q.terms()) {
      Monomial m;
      m.t_exp = ma.t_exp + mb.t_exp;
      m.x_exps.resize(n);
      for (int i = 0; i < n; ++i) m.x_exps[i] = ma.x_exps[i] + mb.x_exps[i];
      acc[std::move(m)] += ca * cb;
    }
  }
  std::vector<Polynomial::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  return Polynomial(n, std::move(out));
}

Polynomial scale_t(const Polynomial& p, long k) {
  std::vector<Polynomial::Term> out;
  out.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) out.push_back({Monomial{m.t_exp + k, m.x_exps}, c});
  return Polynomial(p.alphabet_size(), std::move(out));
}

Polynomial substitute_t_inverse(const Polynomial& p) {
  std::vector<Polynomial::Term> out;
  out.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) out.push_back({Monomial{-m.t_exp, m.x_exps}, c});
  return Polynomial(p.alphabet_size(), std::move(out));
}

std::optional<long> equivalence_shift(const Polynomial& p, const Polynomial& q) {
  if (p.alphabet_size() != q.alphabet_size())
    throw precondition_error("alphabet-size mismatch in equivalence_shift");
  if (p.is_zero() && q.is_zero()) return 0;
  if (p.is_zero() || q.is_zero()) return std::nullopt;
  long k = p.terms().front().first.t_exp - q.terms().front().first.t_exp;
  if (p == scale_t(q, k)) return k;
  return std::nullopt;
}

bool is_symmetric(const Polynomial& p) {
  const auto& terms = p.terms();
  const int n = p.alphabet_size();
  for (int i = 0; i + 1 < n; ++i) {
    for (const auto& [m, c] : terms) {
      if (m.x_exps[i] == m.x_exps[i + 1]) continue;
      Monomial s = m;
      std::swap(s.x_exps[i], s.x_exps[i + 1]);
      auto it = std::lower_bound(terms.begin(), terms.end(), s,
                                 [](const Polynomial::Term& t, const Monomial& key) {
                                   return monomial_less(t.first, key);
                                 });
      if (it == terms.end() || !(it->first == s) || it->second != c) return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    if (m.t_exp == 1)
      factors.push_back("t");
    else if (m.t_exp != 0)
      factors.push_back("t^" + std::to_string(m.t_exp));
    for (int i = 0; i < n_; ++i) {
      if (m.x_exps[i] == 0) continue;
      std::string f = "x" + std::to_string(i + 1);
      if (m.x_exps[i] != 1) f += "^" + std::to_string(m.x_exps[i]);
      factors.push_back(std::move(f));
    }
    bool coeff_shown = (a != 1 || factors.empty());
    if (coeff_shown) os << a.str();
    for (size_t i = 0; i < factors.size(); ++i) {
      if (coeff_shown || i > 0) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

}  // namespace llt
