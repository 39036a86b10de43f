#include "treelie/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace treelie {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw std::invalid_argument("variable index out of range");
  Monomial m(nvars, 0);
  m[index] = 1;
  return monomial(nvars, std::move(m), Rational(1));
}

Polynomial Polynomial::monomial(int nvars, Monomial m, const Rational& c) {
  if (static_cast<int>(m.size()) != nvars)
    throw std::invalid_argument("monomial length mismatch");
  Polynomial p(nvars);
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
  return coefficient(Monomial(nvars_, 0));
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Monomial(nvars_, 0));
}

int Polynomial::total_degree() const {
  int deg = 0;
  for (const auto& [m, c] : terms_) {
    const int d = std::accumulate(m.begin(), m.end(), 0);
    deg = std::max(deg, d);
  }
  return deg;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != nvars_)
    throw std::invalid_argument("monomial length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same(const Polynomial& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("polynomial variable count mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  Polynomial out(a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= nvars_)
    throw std::invalid_argument("derivative variable out of range");
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    out.add_term(d, c * m[var]);
  }
  return out;
}

Rational Polynomial::operator()(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluation point dimension mismatch");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) term *= point[i];
    total += term;
  }
  return total;
}

}  // namespace treelie
