#pragma once

// Dense univariate integer polynomials: characteristic polynomials and exact
// factorization over the rationals (rational roots, then Kronecker's method
// for the remaining factors). Degrees here are bounded by lattice ranks, so
// the exponential search in Kronecker's method stays small.

#include "hyperc/matrix.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

namespace hyperc {

/// Coefficients from the constant term upwards; no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(const Integer& coeff, std::size_t degree) {
    std::vector<Integer> c(degree + 1, Integer(0));
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Integer& coeff(std::size_t i) const {
    static const Integer zero = 0;
    return i < c_.size() ? c_[i] : zero;
  }
  const Integer& leading() const { return c_.back(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer constant_term() const { return coeff(0); }

  Integer operator()(const Integer& x) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Exact division by a monic divisor; nullopt if the remainder is nonzero.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return Polynomial{};
    std::vector<Integer> rem = c_;
    if (degree() < d.degree()) return std::nullopt;
    std::vector<Integer> q(static_cast<std::size_t>(degree() - d.degree() + 1), Integer(0));
    for (int k = degree() - d.degree(); k >= 0; --k) {
      const Integer& top = rem[static_cast<std::size_t>(k + d.degree())];
      if (top % d.leading() != 0) return std::nullopt;
      Integer f = top / d.leading();
      q[static_cast<std::size_t>(k)] = f;
      for (int j = 0; j <= d.degree(); ++j)
        rem[static_cast<std::size_t>(k + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    }
    for (const auto& x : rem)
      if (x != 0) return std::nullopt;
    return Polynomial(std::move(q));
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Integer& a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      const bool neg = a < 0;
      const Integer mag = neg ? Integer(-a) : a;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (mag != 1 || i == 0) out += mag.str();
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

/// det(xI - A) for a square rational matrix with integral characteristic
/// polynomial (Faddeev-LeVerrier).
inline Polynomial characteristic_polynomial(const QMatrix& a) {
  assert(a.rows() == a.cols());
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  QMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix am = a * m;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k + 1];
    m = std::move(am);
    QMatrix prod = a * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += prod(i, i);
    c[n - k] = -tr / Rational(static_cast<long long>(k));
  }
  std::vector<Integer> ic(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (!is_integral(c[i])) throw std::domain_error("characteristic polynomial is not integral");
    ic[i] = numerator(c[i]);
  }
  return Polynomial(std::move(ic));
}

inline QMatrix evaluate(const Polynomial& p, const QMatrix& a) {
  const std::size_t n = a.rows();
  QMatrix acc(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * a;
    for (std::size_t k = 0; k < n; ++k) acc(k, k) += Rational(p.coeff(static_cast<std::size_t>(i)));
  }
  return acc;
}

namespace detail {

inline std::vector<Integer> positive_divisors(Integer v) {
  v = abs(v);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.push_back(d);
    if (d * d != v) large.push_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Lagrange interpolation through integer nodes; nullopt unless integral.
inline std::optional<Polynomial> interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> acc(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * Rational(xs[j]);
      }
      basis = std::move(next);
      denom *= Rational(xs[i] - xs[j]);
    }
    const Rational scale = Rational(ys[i]) / denom;
    for (std::size_t k = 0; k < n; ++k) acc[k] += basis[k] * scale;
  }
  std::vector<Integer> c(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!is_integral(acc[k])) return std::nullopt;
    c[k] = numerator(acc[k]);
  }
  return Polynomial(std::move(c));
}

// Smallest-degree monic factor of a monic p, found by exhaustive search.
inline std::optional<Polynomial> smallest_monic_factor(const Polynomial& p) {
  const int n = p.degree();
  if (n <= 1) return std::nullopt;
  if (p.constant_term() == 0) return Polynomial({Integer(0), Integer(1)});
  for (const auto& d : positive_divisors(p.constant_term()))
    for (const Integer& root : {d, Integer(-d)})
      if (p(root) == 0) return Polynomial({Integer(-root), Integer(1)});

  for (int k = 2; k <= n / 2; ++k) {
    // k+1 nodes where p does not vanish (no rational roots remain)
    std::vector<Integer> xs;
    for (int t = 0; static_cast<int>(xs.size()) < k + 1; ++t) xs.push_back(t % 2 ? Integer(-(t + 1) / 2) : Integer(t / 2));
    std::vector<std::vector<Integer>> choices;
    for (const auto& x : xs) {
      std::vector<Integer> signed_divs;
      for (const auto& d : positive_divisors(p(x))) {
        signed_divs.push_back(d);
        signed_divs.push_back(-d);
      }
      choices.push_back(std::move(signed_divs));
    }
    std::vector<std::size_t> idx(xs.size(), 0);
    for (;;) {
      std::vector<Integer> ys(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = choices[i][idx[i]];
      if (auto g = interpolate(xs, ys); g && g->degree() == k && g->leading() == 1 && p.divide_exact(*g))
        return g;
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
  }
  return std::nullopt;
}

}  // namespace detail

struct Factor {
  Polynomial factor;  ///< monic irreducible over Q
  int multiplicity = 0;
};

/// Irreducible factorization of a monic integer polynomial over Q.
inline std::vector<Factor> factor_monic(Polynomial p) {
  if (p.is_zero() || p.leading() != 1) throw std::invalid_argument("factor_monic expects a monic polynomial");
  std::vector<Factor> out;
  auto add = [&](const Polynomial& f) {
    for (auto& e : out)
      if (e.factor == f) {
        ++e.multiplicity;
        return;
      }
    out.push_back({f, 1});
  };
  while (p.degree() > 0) {
    auto f = detail::smallest_monic_factor(p);
    if (!f) {
      add(p);
      break;
    }
    add(*f);
    p = *p.divide_exact(*f);
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.coeffs() < b.factor.coeffs();
  });
  return out;
}

}  // namespace hyperc
