#include "aristotle/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace aristotle {

namespace {

// Binomial coefficient for small arguments.
long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void enumerate(std::size_t var, std::size_t remaining, Polynomial::Monomial& cur,
               std::vector<Polynomial::Monomial>& out) {
  if (var == cur.size()) {
    out.push_back(cur);
    return;
  }
  for (std::size_t e = 0; e <= remaining; ++e) {
    cur[var] = static_cast<std::uint8_t>(e);
    enumerate(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

// All beta with beta <= alpha componentwise.
void sub_lattice(const Polynomial::Monomial& alpha, std::size_t var, Polynomial::Monomial& cur,
                 std::vector<Polynomial::Monomial>& out) {
  if (var == alpha.size()) {
    out.push_back(cur);
    return;
  }
  for (std::uint8_t e = 0; e <= alpha[var]; ++e) {
    cur[var] = e;
    sub_lattice(alpha, var + 1, cur, out);
  }
  cur[var] = 0;
}

// binom(x_i, n) = x_i (x_i - 1) ... (x_i - n + 1) / n!
Polynomial binomial_poly(std::size_t nvars, std::size_t i, std::size_t n) {
  Polynomial out = Polynomial::constant(nvars, Rational(1));
  for (std::size_t j = 0; j < n; ++j) {
    out = out * (Polynomial::variable(nvars, i) -
                 Polynomial::constant(nvars, Rational(static_cast<long>(j))));
  }
  long factorial = 1;
  for (std::size_t j = 2; j <= n; ++j) factorial *= static_cast<long>(j);
  out *= Rational(1, factorial);
  return out;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Polynomial p(nvars);
  Monomial m(nvars, 0);
  m.at(i) = 1;
  p.add_term(m, Rational(1));
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t Polynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("point dimension mismatch");
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint8_t e = 0; e < m[i]; ++e) term *= point[i];
    sum += term;
  }
  return sum;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw std::invalid_argument("monomial dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial dimension mismatch");
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Polynomial::Monomial m(a.nvars_);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
      out.add_term(m, ca * cb);
    }
  return out;
}

std::size_t total_degree(const Polynomial::Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::size_t{0});
}

std::string monomial_name(const Polynomial::Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<Polynomial::Monomial> monomials_up_to(std::size_t nvars, std::size_t degree) {
  std::vector<Polynomial::Monomial> all;
  Polynomial::Monomial cur(nvars, 0);
  enumerate(0, degree, cur, all);
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
  });
  return all;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& m : monomials_up_to(nvars_, degree())) {
    const auto it = terms_.find(m);
    if (it == terms_.end()) continue;
    const Rational& c = it->second;
    const bool constant = total_degree(m) == 0;
    std::string body;
    if (constant) {
      body = abs(c).str();
    } else if (abs(c) == Rational(1)) {
      body = monomial_name(m, names);
    } else {
      body = abs(c).str() + "*" + monomial_name(m, names);
    }
    if (out.empty()) {
      out = (c.sign() < 0 ? "-" : "") + body;
    } else {
      out += (c.sign() < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

Polynomial interpolate(std::size_t nvars, std::size_t degree,
                       const std::function<Rational(std::span<const Rational>)>& f) {
  const auto nodes = monomials_up_to(nvars, degree);
  std::map<Polynomial::Monomial, Rational> values;
  std::vector<Rational> point(nvars);
  for (const auto& node : nodes) {
    for (std::size_t i = 0; i < nvars; ++i) point[i] = Rational(static_cast<long>(node[i]));
    values.emplace(node, f(point));
  }

  Polynomial result(nvars);
  std::vector<Polynomial::Monomial> betas;
  Polynomial::Monomial scratch(nvars, 0);
  for (const auto& alpha : nodes) {
    // Forward difference Delta^alpha f(0).
    betas.clear();
    sub_lattice(alpha, 0, scratch, betas);
    Rational diff(0);
    for (const auto& beta : betas) {
      long weight = 1;
      for (std::size_t i = 0; i < nvars; ++i) weight *= binomial(alpha[i], beta[i]);
      const bool odd = (total_degree(alpha) - total_degree(beta)) % 2 == 1;
      const Rational term = Rational(weight) * values.at(beta);
      diff += odd ? -term : term;
    }
    if (diff.is_zero()) continue;

    Polynomial basis = Polynomial::constant(nvars, diff);
    for (std::size_t i = 0; i < nvars; ++i) {
      if (alpha[i] > 0) basis = basis * binomial_poly(nvars, i, alpha[i]);
    }
    result += basis;
  }
  return result;
}

}  // namespace aristotle
