// Copyright 2026 The adelic-volumes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Univariate polynomials over Q in the variable t, with an exact
// irreducibility test for small degree.

#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adelic/error.hpp"
#include "adelic/rational.hpp"

namespace adelic {

class Polynomial {
 public:
  Polynomial() = default;
  // Coefficients from the constant term upwards.
  explicit Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

  static Polynomial t() { return Polynomial({Rational(0), Rational(1)}); }
  static Polynomial constant(const Rational& a) { return Polynomial({a}); }

  // Parses sums of terms "a", "a*t", "a*t^n", "t^n" with rational a, e.g.
  // "t^2+1", "2*t^3 - t + 1/2", "-t".
  static Polynomial parse(std::string_view text) {
    std::string s;
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) throw Error(ErrorCode::kParse, "empty polynomial");
    std::vector<Rational> coeffs;
    std::size_t i = 0;
    while (i < s.size()) {
      int sgn = 1;
      if (s[i] == '+' || s[i] == '-') {
        sgn = s[i] == '-' ? -1 : 1;
        ++i;
      } else if (i != 0) {
        throw Error(ErrorCode::kParse, "expected '+' or '-' in '" + s + "'");
      }
      std::size_t j = i;
      while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
      std::string term = s.substr(i, j - i);
      if (term.empty()) throw Error(ErrorCode::kParse, "empty term in '" + s + "'");
      Rational coef(1);
      std::size_t exponent = 0;
      auto tpos = term.find('t');
      if (tpos == std::string::npos) {
        coef = Rational::parse(term);
      } else {
        std::string head = term.substr(0, tpos);
        std::string tail = term.substr(tpos + 1);
        if (!head.empty()) {
          if (head.back() != '*') throw Error(ErrorCode::kParse, "expected '*' before t in '" + term + "'");
          head.pop_back();
          coef = Rational::parse(head);
        }
        exponent = 1;
        if (!tail.empty()) {
          if (tail[0] != '^' || tail.size() < 2) throw Error(ErrorCode::kParse, "bad exponent in '" + term + "'");
          for (std::size_t k = 1; k < tail.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(tail[k]))) {
              throw Error(ErrorCode::kParse, "bad exponent in '" + term + "'");
            }
          }
          exponent = std::stoul(tail.substr(1));
          if (exponent > 64) throw Error(ErrorCode::kDegreeBound, "exponent too large in '" + term + "'");
        }
      }
      if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
      coeffs[exponent] += coef * Rational(sgn);
      i = j;
    }
    return Polynomial(std::move(coeffs));
  }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

  Polynomial monic() const {
    if (is_zero()) throw Error(ErrorCode::kInvalidPolynomial, "zero polynomial has no monic form");
    return scaled(Rational(1) / leading());
  }
  Polynomial scaled(const Rational& a) const {
    std::vector<Rational> out = c_;
    for (auto& x : out) x *= a;
    return Polynomial(std::move(out));
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Rational> out;
    for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k] * Rational(static_cast<long>(k)));
    return Polynomial(std::move(out));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b.scaled(Rational(-1)); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }

  // Euclidean division: returns (quotient, remainder).
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::kInvalidArgument, "polynomial division by zero");
    std::vector<Rational> r = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<Rational> q(a.degree() - db + 1);
    for (int k = a.degree(); k >= db; --k) {
      Rational f = r[k] / b.leading();
      q[k - db] = f;
      if (f.is_zero()) continue;
      for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
    }
    r.resize(db);
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  // Monic greatest common divisor (zero when both are zero).
  static Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
  }

  // Canonical text, highest degree first: "t^2+1", "t-1/2", "3/4*t".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Rational& a = c_[k];
      if (a.is_zero()) continue;
      Rational mag = abs(a);
      std::string body;
      if (k == 0) {
        body = mag.to_string();
      } else {
        body = (mag == Rational(1) ? std::string() : mag.to_string() + "*") + "t" +
               (k == 1 ? std::string() : "^" + std::to_string(k));
      }
      if (out.empty()) {
        out = (a.sign() < 0 ? "-" : "") + body;
      } else {
        out += (a.sign() < 0 ? "-" : "+") + body;
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
    if (auto c = a.c_.size() <=> b.c_.size(); c != 0) return c;
    for (std::size_t k = a.c_.size(); k-- > 0;) {
      if (auto c = a.c_[k] <=> b.c_[k]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

namespace internal {

// Polynomials over F_p with p small, coefficients in [0, p).
using ModPoly = std::vector<std::int64_t>;

inline void mod_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1;
  std::int64_t e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline ModPoly mod_rem(ModPoly a, const ModPoly& b, std::int64_t p) {
  mod_trim(a);
  std::int64_t inv = mod_inverse(b.back(), p);
  while (a.size() >= b.size()) {
    std::int64_t f = a.back() * inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = ((a[shift + j] - f * b[j]) % p + p) % p;
    }
    mod_trim(a);
  }
  return a;
}

inline ModPoly mod_quot(ModPoly a, const ModPoly& b, std::int64_t p) {
  mod_trim(a);
  if (a.size() < b.size()) return {};
  std::int64_t inv = mod_inverse(b.back(), p);
  ModPoly q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    std::int64_t f = a.back() * inv % p;
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = ((a[shift + j] - f * b[j]) % p + p) % p;
    }
    mod_trim(a);
  }
  return q;
}

inline ModPoly mod_mulrem(const ModPoly& a, const ModPoly& b, const ModPoly& f, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return mod_rem(std::move(out), f, p);
}

inline ModPoly mod_gcd(ModPoly a, ModPoly b, std::int64_t p) {
  mod_trim(a);
  mod_trim(b);
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^e mod f.
inline ModPoly mod_pow_x(std::uint64_t e, const ModPoly& f, std::int64_t p) {
  ModPoly result{1};
  ModPoly base = mod_rem(ModPoly{0, 1}, f, p);
  while (e > 0) {
    if (e & 1U) result = mod_mulrem(result, base, f, p);
    base = mod_mulrem(base, base, f, p);
    e >>= 1U;
  }
  return result;
}

// Degrees of the irreducible factors of a squarefree f over F_p (distinct
// degree factorization followed by counting).
inline std::vector<int> mod_factor_degrees(ModPoly f, std::int64_t p) {
  std::vector<int> degrees;
  ModPoly h{0, 1};  // x^(p^i) mod f
  for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
    // h <- h^p mod f
    ModPoly acc{1};
    ModPoly base = mod_rem(h, f, p);
    std::uint64_t e = static_cast<std::uint64_t>(p);
    while (e > 0) {
      if (e & 1U) acc = mod_mulrem(acc, base, f, p);
      base = mod_mulrem(base, base, f, p);
      e >>= 1U;
    }
    h = acc;
    ModPoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = ((hx[1] - 1) % p + p) % p;
    mod_trim(hx);
    ModPoly g = mod_gcd(f, hx, p);
    int dg = static_cast<int>(g.size()) - 1;
    if (dg > 0) {
      for (int k = 0; k < dg / i; ++k) degrees.push_back(i);
      f = mod_quot(f, g, p);
      h = mod_rem(h, f, p);
    }
  }
  int rest = static_cast<int>(f.size()) - 1;
  if (rest > 0) degrees.push_back(rest);
  return degrees;
}

// Primitive integer multiple of a rational polynomial, positive leading term.
inline std::vector<BigInt> primitive_integer(const Polynomial& f) {
  BigInt l = 1;
  for (const auto& a : f.coefficients()) {
    BigInt d = a.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& a : f.coefficients()) {
    Rational scaled = a * Rational(l);
    out.push_back(scaled.numerator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (out.back() < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

inline std::vector<BigInt> divisors_of(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> out;
  std::vector<std::pair<BigInt, int>> factors;
  BigInt m = n;
  for (BigInt q = 2; q * q <= m; ++q) {
    int e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    if (e > 0) factors.emplace_back(q, e);
  }
  if (m > 1) factors.emplace_back(m, 1);
  out.push_back(1);
  for (const auto& [q, e] : factors) {
    std::size_t base = out.size();
    BigInt pw = 1;
    for (int k = 1; k <= e; ++k) {
      pw *= q;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
    }
  }
  return out;
}

// Lagrange interpolation through (x_i, y_i).
inline Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  Polynomial out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial basis = Polynomial::constant(ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      basis = basis * Polynomial({-xs[j] / (xs[i] - xs[j]), Rational(1) / (xs[i] - xs[j])});
    }
    out = out + basis;
  }
  return out;
}

constexpr std::uint64_t kMaxKroneckerCandidates = 4000000;

// Kronecker search for a factor of exact degree d.
inline bool has_factor_of_degree(const Polynomial& rational_f, int d) {
  std::vector<Rational> zc;
  for (const auto& c : primitive_integer(rational_f)) zc.push_back(Rational(c));
  const Polynomial f(std::move(zc));
  // Pick d + 1 integer nodes with nonzero values and few divisors.
  std::vector<std::pair<std::size_t, Rational>> nodes;
  for (int a = -12; a <= 12; ++a) {
    Rational v = f.eval(Rational(a));
    if (v.is_zero()) return true;  // rational root, degree-1 factor exists
    nodes.emplace_back(divisors_of(v.numerator()).size(), Rational(a));
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.resize(d + 1);
  std::vector<Rational> xs;
  std::vector<std::vector<BigInt>> choices;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    xs.push_back(nodes[i].second);
    auto divs = divisors_of(f.eval(nodes[i].second).numerator());
    std::vector<BigInt> signed_divs;
    for (const auto& q : divs) {
      signed_divs.push_back(q);
      if (i > 0) signed_divs.push_back(-q);  // sign of the factor fixed at the first node
    }
    total *= signed_divs.size();
    if (total > kMaxKroneckerCandidates) {
      throw Error(ErrorCode::kDegreeBound, "irreducibility search too large for " + f.to_string());
    }
    choices.push_back(std::move(signed_divs));
  }
  std::vector<std::size_t> idx(choices.size(), 0);
  std::vector<Rational> ys(choices.size());
  while (true) {
    for (std::size_t i = 0; i < choices.size(); ++i) ys[i] = Rational(choices[i][idx[i]]);
    Polynomial g = interpolate(xs, ys);
    if (g.degree() == d) {
      bool integral = std::all_of(g.coefficients().begin(), g.coefficients().end(),
                                  [](const Rational& a) { return a.is_integer(); });
      if (integral && Polynomial::divmod(f, g).second.is_zero()) return true;
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) {
      idx[k] = 0;
      ++k;
    }
    if (k == idx.size()) break;
  }
  return false;
}

}  // namespace internal

constexpr int kDefaultIrreducibilityDegreeBound = 8;

// Exact irreducibility over Q. Throws DegreeBound above the configured degree.
inline bool is_irreducible(const Polynomial& f, int degree_bound = kDefaultIrreducibilityDegreeBound) {
  int n = f.degree();
  if (n < 1) return false;
  if (n > degree_bound) {
    throw Error(ErrorCode::kDegreeBound,
                "degree " + std::to_string(n) + " exceeds the bound " + std::to_string(degree_bound));
  }
  if (n == 1) return true;
  // Repeated factors.
  if (Polynomial::gcd(f, f.derivative()).degree() > 0) return false;

  std::vector<BigInt> z = internal::primitive_integer(f);
  // Factor degrees that survive every modular obstruction.
  std::set<int> possible;
  for (int d = 1; 2 * d <= n; ++d) possible.insert(d);
  static constexpr std::int64_t kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                             41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83};
  int used = 0;
  for (std::int64_t p : kPrimes) {
    if (possible.empty() || used >= 12) break;
    BigInt bp(static_cast<long>(p));
    BigInt lead = z.back() % bp;
    if (lead == 0) continue;
    internal::ModPoly fp;
    for (const auto& c : z) {
      BigInt r = c % bp;
      if (r < 0) r += bp;
      fp.push_back(r.get_si());
    }
    internal::ModPoly dfp;
    for (std::size_t k = 1; k < fp.size(); ++k) dfp.push_back(fp[k] * static_cast<std::int64_t>(k) % p);
    internal::mod_trim(dfp);
    if (dfp.empty() || internal::mod_gcd(fp, dfp, p).size() > 1) continue;
    std::vector<int> degs = internal::mod_factor_degrees(fp, p);
    std::set<int> sums{0};
    for (int d : degs) {
      std::set<int> next = sums;
      for (int s : sums) next.insert(s + d);
      sums = std::move(next);
    }
    std::set<int> kept;
    for (int d : possible) {
      if (sums.count(d) != 0U) kept.insert(d);
    }
    possible = std::move(kept);
    ++used;
  }
  for (int d : possible) {
    if (internal::has_factor_of_degree(f, d)) return false;
  }
  return true;
}

}  // namespace adelic
