#ifndef FROBTFT_CYCLOTOMIC_HPP
#define FROBTFT_CYCLOTOMIC_HPP

// Exact arithmetic in cyclotomic fields Q(zeta_N).  Elements are stored in
// the power basis 1, z, ..., z^(phi(N)-1) modulo the N-th cyclotomic
// polynomial, with arbitrary-precision rational coefficients.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "frobtft/error.hpp"

namespace frobtft {

using Rational = mpq_class;

inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw Error("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

inline std::string rational_str(const Rational& q) { return q.get_str(); }

namespace detail {

// Dense univariate polynomials over Q, coefficient vectors low-to-high.
using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

// Euclidean division, returns quotient and leaves remainder in a.
inline Poly poly_divmod(Poly& a, const Poly& b) {
  poly_trim(a);
  Poly q;
  if (a.size() < b.size()) return q;
  q.assign(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    poly_trim(a);
  }
  return q;
}

}  // namespace detail

// Shared per-conductor data: the cyclotomic polynomial and reduction tables.
class CycloField {
 public:
  static const CycloField& get(long conductor) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<CycloField>> cache;
    if (conductor < 1) throw Error("conductor must be positive");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(conductor);
    if (it == cache.end())
      it = cache.emplace(conductor, std::unique_ptr<CycloField>(new CycloField(conductor))).first;
    return *it->second;
  }

  long conductor() const { return n_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }

  // x^k mod Phi_N for any k >= 0, as a coefficient vector of length degree().
  const std::vector<Rational>& power_mod(long k) const {
    return powers_[static_cast<size_t>(k % n_)];
  }

 private:
  explicit CycloField(long n) : n_(n) {
    phi_ = cyclotomic_poly(n);
    int d = degree();
    powers_.resize(static_cast<size_t>(n));
    std::vector<Rational> cur(static_cast<size_t>(d), Rational(0));
    cur[0] = 1;
    powers_[0] = cur;
    for (long k = 1; k < n_; ++k) {
      // multiply by x and reduce by the monic Phi_N
      Rational top = cur[static_cast<size_t>(d - 1)];
      for (int i = d - 1; i > 0; --i) cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
      cur[0] = 0;
      if (top != 0)
        for (int i = 0; i < d; ++i) cur[static_cast<size_t>(i)] -= top * phi_[static_cast<size_t>(i)];
      powers_[static_cast<size_t>(k)] = cur;
    }
  }

  static detail::Poly cyclotomic_poly(long n) {
    // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
    detail::Poly num(static_cast<size_t>(n) + 1, Rational(0));
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      detail::Poly phi_d = cyclotomic_poly(d);
      detail::Poly rem = num;
      num = detail::poly_divmod(rem, phi_d);
      if (!rem.empty()) throw Error("cyclotomic polynomial division left a remainder");
    }
    return num;
  }

  long n_;
  detail::Poly phi_;  // monic, degree phi(n)
  std::vector<std::vector<Rational>> powers_;
};

class Scalar {
 public:
  Scalar() : conductor_(1), coeffs_(1, Rational(0)) {}

  Scalar(long conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {
    const CycloField& f = CycloField::get(conductor_);
    if (static_cast<int>(coeffs_.size()) != f.degree())
      throw Error("scalar coefficient vector has wrong length for conductor " +
                  std::to_string(conductor_));
    for (auto& c : coeffs_) c.canonicalize();
  }

  static Scalar zero(long conductor) {
    return Scalar(conductor, std::vector<Rational>(
                                 static_cast<size_t>(CycloField::get(conductor).degree()), Rational(0)));
  }

  static Scalar from_rational(const Rational& q, long conductor) {
    Scalar s = zero(conductor);
    s.coeffs_[0] = q;
    return s;
  }

  static Scalar integer(long v, long conductor = 1) { return from_rational(Rational(v), conductor); }

  // zeta_N^k as an element of Q(zeta_N)
  static Scalar zeta(long conductor, long power = 1) {
    const CycloField& f = CycloField::get(conductor);
    long k = power % conductor;
    if (k < 0) k += conductor;
    return Scalar(conductor, f.power_mod(k));
  }

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  // Only valid when is_rational()
  Rational rational_part() const {
    if (!is_rational()) throw Error("scalar is not rational");
    return coeffs_[0];
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    Scalar r = a;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    Scalar r = a;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    return r;
  }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    const CycloField& f = CycloField::get(a.conductor_);
    int d = f.degree();
    std::vector<Rational> prod(static_cast<size_t>(2 * d - 1), Rational(0));
    for (int i = 0; i < d; ++i) {
      if (a.coeffs_[static_cast<size_t>(i)] == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (b.coeffs_[static_cast<size_t>(j)] == 0) continue;
        prod[static_cast<size_t>(i + j)] +=
            a.coeffs_[static_cast<size_t>(i)] * b.coeffs_[static_cast<size_t>(j)];
      }
    }
    std::vector<Rational> out(static_cast<size_t>(d), Rational(0));
    for (int k = 0; k < 2 * d - 1; ++k) {
      if (prod[static_cast<size_t>(k)] == 0) continue;
      if (k < d) {
        out[static_cast<size_t>(k)] += prod[static_cast<size_t>(k)];
      } else {
        const auto& rep = f.power_mod(k);
        for (int i = 0; i < d; ++i)
          out[static_cast<size_t>(i)] += prod[static_cast<size_t>(k)] * rep[static_cast<size_t>(i)];
      }
    }
    return Scalar(a.conductor_, std::move(out));
  }

  Scalar inverse() const {
    if (is_zero()) throw Error("division by zero");
    // extended euclid against Phi_N in Q[x]
    const CycloField& f = CycloField::get(conductor_);
    detail::Poly r0;  // Phi_N
    {
      // reconstruct Phi from the reduction of x^degree: x^d mod Phi = x^d - Phi
      r0.assign(static_cast<size_t>(f.degree()) + 1, Rational(0));
      r0[static_cast<size_t>(f.degree())] = 1;
      const auto& xd = f.power_mod(f.degree());
      for (int i = 0; i < f.degree(); ++i) r0[static_cast<size_t>(i)] = -xd[static_cast<size_t>(i)];
    }
    detail::Poly r1(coeffs_.begin(), coeffs_.end());
    detail::poly_trim(r1);
    detail::Poly s0{}, s1{Rational(1)};
    while (true) {
      detail::Poly rem = r0;
      detail::Poly q = detail::poly_divmod(rem, r1);
      if (rem.empty()) break;
      detail::Poly qs1 = detail::poly_mul(q, s1);
      detail::Poly s2 = s0;
      if (s2.size() < qs1.size()) s2.resize(qs1.size(), Rational(0));
      for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
      detail::poly_trim(s2);
      r0 = r1;
      r1 = rem;
      s0 = s1;
      s1 = s2;
    }
    if (r1.size() != 1) throw Error("inverse failed: gcd with cyclotomic polynomial not constant");
    std::vector<Rational> out(static_cast<size_t>(f.degree()), Rational(0));
    Rational c = r1[0];
    for (size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = s1[i] / c;
    // s1 may have degree >= degree() in principle; reduce defensively
    if (s1.size() > out.size()) {
      for (size_t k = out.size(); k < s1.size(); ++k) {
        const auto& rep = f.power_mod(static_cast<long>(k));
        for (size_t i = 0; i < out.size(); ++i) out[i] += (s1[k] / c) * rep[i];
      }
    }
    return Scalar(conductor_, std::move(out));
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  // Galois conjugation zeta -> zeta^{-1} (complex conjugation on the standard embedding)
  Scalar conj() const {
    const CycloField& f = CycloField::get(conductor_);
    Scalar out = zero(conductor_);
    for (size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      long e = (conductor_ - static_cast<long>(k)) % conductor_;
      const auto& rep = f.power_mod(e);
      for (size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += coeffs_[k] * rep[i];
    }
    return out;
  }

  Scalar pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = from_rational(1, conductor_);
    Scalar base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // total order for use as map key
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_;
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      int c = cmp(a.coeffs_[i], b.coeffs_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) os << ",";
      os << coeffs_[i].get_str();
    }
    os << "]@" << conductor_;
    return os.str();
  }

 private:
  static void check_same(const Scalar& a, const Scalar& b) {
    if (a.conductor_ != b.conductor_)
      throw Error("conductor mismatch: " + std::to_string(a.conductor_) + " vs " +
                  std::to_string(b.conductor_));
  }

  long conductor_;
  std::vector<Rational> coeffs_;
};

// Default ambient conductor, large enough for sqrt(2), i and the golden ratio.
inline constexpr long kDefaultConductor = 120;

// Registry of declared square roots.  The first declaration for a radicand
// wins; later declarations and lookups return the recorded choice.
class SqrtRegistry {
 public:
  Scalar declare(const Scalar& x, const Scalar& witness) {
    if (witness * witness != x) throw Error("sqrt witness fails the square check");
    auto it = choices_.find(x);
    if (it != choices_.end()) return it->second;
    choices_.emplace(x, witness);
    return witness;
  }

  bool has(const Scalar& x) const { return choices_.count(x) != 0; }

  const Scalar& sqrt(const Scalar& x) const {
    auto it = choices_.find(x);
    if (it == choices_.end()) throw Error("missing sqrt witness for " + x.str());
    return it->second;
  }

  size_t size() const { return choices_.size(); }

 private:
  std::map<Scalar, Scalar> choices_;
};

}  // namespace frobtft

#endif
