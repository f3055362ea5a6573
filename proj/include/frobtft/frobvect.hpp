#ifndef FROBTFT_FROBVECT_HPP
#define FROBTFT_FROBVECT_HPP

// Finite-dimensional algebras over the scalar field, given by structure
// constants.  The comultiplication is never an independent input: it is
// derived from the counit through the invariant pairing.

#include <optional>
#include <string>
#include <vector>

#include "frobtft/json_io.hpp"
#include "frobtft/matrix.hpp"
#include "frobtft/tensor.hpp"

namespace frobtft {

class VectAlgebra {
 public:
  std::string name;
  long conductor = 1;
  size_t n = 0;
  std::vector<Scalar> mult;  // m[a][b][c]: e_a e_b = sum_c m_abc e_c
  std::vector<Scalar> unit;
  std::vector<Scalar> counit;

  const Scalar& m(size_t a, size_t b, size_t c) const { return mult[(a * n + b) * n + c]; }
  Scalar& m(size_t a, size_t b, size_t c) { return mult[(a * n + b) * n + c]; }

  std::vector<Scalar> zero_vec() const { return std::vector<Scalar>(n, Scalar::zero(conductor)); }

  std::vector<Scalar> mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    std::vector<Scalar> out = zero_vec();
    for (size_t a = 0; a < n; ++a) {
      if (x[a].is_zero()) continue;
      for (size_t b = 0; b < n; ++b) {
        if (y[b].is_zero()) continue;
        Scalar f = x[a] * y[b];
        for (size_t c = 0; c < n; ++c) out[c] = out[c] + f * m(a, b, c);
      }
    }
    return out;
  }

  Scalar eps(const std::vector<Scalar>& x) const {
    Scalar acc = Scalar::zero(conductor);
    for (size_t a = 0; a < n; ++a) acc = acc + counit[a] * x[a];
    return acc;
  }

  std::vector<Scalar> basis_vec(size_t a) const {
    auto v = zero_vec();
    v[a] = Scalar::from_rational(1, conductor);
    return v;
  }

  // kappa(a,b) = eps(m(a,b))
  Matrix kappa() const {
    Matrix k(n, n, conductor);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        Scalar acc = Scalar::zero(conductor);
        for (size_t c = 0; c < n; ++c) acc = acc + m(a, b, c) * counit[c];
        k.at(a, b) = acc;
      }
    return k;
  }

  // columns are the kappa-dual basis: kappa(e_i, dual_j) = delta_ij
  Matrix dual_basis() const { return kappa().inverse(); }

  // left/right multiplication operators as matrices
  Matrix left_mult(const std::vector<Scalar>& x) const {
    Matrix L(n, n, conductor);
    for (size_t b = 0; b < n; ++b) {
      auto col = mul(x, basis_vec(b));
      for (size_t c = 0; c < n; ++c) L.at(c, b) = col[c];
    }
    return L;
  }

  Matrix right_mult(const std::vector<Scalar>& x) const {
    Matrix R(n, n, conductor);
    for (size_t b = 0; b < n; ++b) {
      auto col = mul(basis_vec(b), x);
      for (size_t c = 0; c < n; ++c) R.at(c, b) = col[c];
    }
    return R;
  }

  // Delta(e_c) = sum_i m(e_c, e_i) (x) dual_i, as an n^2 x n matrix with
  // row index a*n+b for the e_a (x) e_b component
  Matrix comult() const {
    Matrix D(n * n, n, conductor);
    Matrix duals = dual_basis();
    for (size_t c = 0; c < n; ++c)
      for (size_t i = 0; i < n; ++i) {
        std::vector<Scalar> dual_i(n, Scalar::zero(conductor));
        for (size_t k = 0; k < n; ++k) dual_i[k] = duals.at(k, i);
        auto prod = mul(basis_vec(c), basis_vec(i));
        for (size_t a = 0; a < n; ++a) {
          if (prod[a].is_zero()) continue;
          for (size_t b = 0; b < n; ++b)
            D.at(a * n + b, c) = D.at(a * n + b, c) + prod[a] * dual_i[b];
        }
      }
    return D;
  }

  // m as an n x n^2 matrix, column index a*n+b
  Matrix mult_matrix() const {
    Matrix M(n, n * n, conductor);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        for (size_t c = 0; c < n; ++c) M.at(c, a * n + b) = m(a, b, c);
    return M;
  }

  Tensor mult_tensor() const {
    Tensor t({n, n, n}, conductor);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        for (size_t c = 0; c < n; ++c) t[{a, b, c}] = m(a, b, c);
    return t;
  }
};

struct AxiomFlags {
  bool associative = false;
  bool unital = false;
  bool frobenius = false;   // pairing nondegenerate
  bool symmetric = false;
  bool special = false;
  bool commutative = false;
  Scalar gamma;             // eps(unit)
  Scalar gamma_prime;       // m o Delta = gamma' id, when proportional
  std::optional<std::vector<Scalar>> radical_witness;
};

inline AxiomFlags check_axioms(const VectAlgebra& alg) {
  size_t n = alg.n;
  long cond = alg.conductor;
  AxiomFlags flags;
  flags.gamma = Scalar::zero(cond);
  flags.gamma_prime = Scalar::zero(cond);

  flags.associative = true;
  for (size_t a = 0; a < n && flags.associative; ++a)
    for (size_t b = 0; b < n && flags.associative; ++b)
      for (size_t c = 0; c < n && flags.associative; ++c) {
        auto lhs = alg.mul(alg.mul(alg.basis_vec(a), alg.basis_vec(b)), alg.basis_vec(c));
        auto rhs = alg.mul(alg.basis_vec(a), alg.mul(alg.basis_vec(b), alg.basis_vec(c)));
        if (lhs != rhs) flags.associative = false;
      }

  flags.unital = true;
  for (size_t a = 0; a < n && flags.unital; ++a) {
    auto ea = alg.basis_vec(a);
    if (alg.mul(alg.unit, ea) != ea || alg.mul(ea, alg.unit) != ea) flags.unital = false;
  }

  flags.commutative = true;
  for (size_t a = 0; a < n && flags.commutative; ++a)
    for (size_t b = 0; b < n && flags.commutative; ++b)
      if (alg.mul(alg.basis_vec(a), alg.basis_vec(b)) !=
          alg.mul(alg.basis_vec(b), alg.basis_vec(a)))
        flags.commutative = false;

  Matrix kap = alg.kappa();
  flags.frobenius = kap.rank() == n;
  if (!flags.frobenius) {
    Matrix ker = kap.kernel();
    if (ker.cols() > 0) {
      std::vector<Scalar> w(n, Scalar::zero(cond));
      for (size_t i = 0; i < n; ++i) w[i] = ker.at(i, 0);
      flags.radical_witness = w;
    }
    return flags;
  }

  flags.symmetric = kap == kap.transpose();
  flags.gamma = alg.eps(alg.unit);

  // m o Delta proportional to the identity
  Matrix md = alg.mult_matrix() * alg.comult();
  bool proportional = true;
  Scalar ratio = Scalar::zero(cond);
  bool ratio_set = false;
  for (size_t i = 0; i < n && proportional; ++i)
    for (size_t j = 0; j < n && proportional; ++j) {
      if (i == j) {
        if (!ratio_set) {
          ratio = md.at(i, i);
          ratio_set = true;
        } else if (!(md.at(i, i) == ratio)) {
          proportional = false;
        }
      } else if (!md.at(i, j).is_zero()) {
        proportional = false;
      }
    }
  if (proportional && !ratio.is_zero() && !flags.gamma.is_zero()) {
    flags.special = true;
    flags.gamma_prime = ratio;
  } else if (proportional) {
    flags.gamma_prime = ratio;
  }
  return flags;
}

// Verifies the coassociativity and Frobenius compatibility of the derived
// comultiplication; used by tests of the derivation itself.
inline bool frobenius_compatibility_holds(const VectAlgebra& alg) {
  size_t n = alg.n;
  Matrix D = alg.comult();   // n^2 x n
  Matrix M = alg.mult_matrix();  // n x n^2
  long cond = alg.conductor;
  // (Delta (x) id) o Delta = (id (x) Delta) o Delta as maps A -> A^3
  Matrix lhs(n * n * n, n, cond), rhs(n * n * n, n, cond);
  for (size_t c = 0; c < n; ++c)
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        Scalar d_ab = D.at(a * n + b, c);
        if (d_ab.is_zero()) continue;
        for (size_t x = 0; x < n; ++x)
          for (size_t y = 0; y < n; ++y) {
            lhs.at((x * n + y) * n + b, c) = lhs.at((x * n + y) * n + b, c) + D.at(x * n + y, a) * d_ab;
            rhs.at((a * n + x) * n + y, c) = rhs.at((a * n + x) * n + y, c) + D.at(x * n + y, b) * d_ab;
          }
      }
  if (!(lhs == rhs)) return false;
  // (id (x) m) o (Delta (x) id) = Delta o m = (m (x) id) o (id (x) Delta)
  Matrix mid = D * M;  // n^2 x n^2, Delta o m
  Matrix left(n * n, n * n, cond), right(n * n, n * n, cond);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
          // left: Delta(e_a) = sum e_x (x) e_u, then m(e_u, e_b) contributes to (x, y)
          for (size_t u = 0; u < n; ++u) {
            left.at(x * n + y, a * n + b) =
                left.at(x * n + y, a * n + b) + D.at(x * n + u, a) * alg.m(u, b, y);
            right.at(x * n + y, a * n + b) =
                right.at(x * n + y, a * n + b) + alg.m(a, u, x) * D.at(u * n + y, b);
          }
        }
  return left == mid && right == mid;
}

inline VectAlgebra normalize_special(const VectAlgebra& alg) {
  AxiomFlags flags = check_axioms(alg);
  if (!flags.associative || !flags.unital) throw Error("normalize_special: not an algebra");
  if (!flags.frobenius) throw Error("normalize_special: pairing degenerate");
  if (!flags.symmetric) throw Error("normalize_special: not symmetric");
  if (!flags.special) throw Error("normalize_special: not special");
  VectAlgebra out = alg;
  for (auto& c : out.counit) c = flags.gamma_prime * c;
  return out;
}

// basis of the center {z : zx = xz for all x}, as matrix columns
inline Matrix center(const VectAlgebra& alg) {
  size_t n = alg.n;
  Matrix sys(n * n, n, alg.conductor);
  for (size_t b = 0; b < n; ++b) {
    Matrix comm = alg.left_mult(alg.basis_vec(b)) - alg.right_mult(alg.basis_vec(b));
    // comm acts on z: rows (b, component)
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) sys.at(b * n + r, c) = comm.at(r, c);
  }
  // z with x z - z x = 0: note left_mult(x).z = x z; we need commutation with
  // every basis element, i.e. (L_b - R_b) z = 0 for all b
  return sys.kernel();
}

// pi(a) = sum_i m(e_i, m(a, dual_i)); for a normalized symmetric special
// algebra this is the projector onto the center
inline Matrix center_projector(const VectAlgebra& alg) {
  AxiomFlags flags = check_axioms(alg);
  if (!flags.symmetric || !flags.special) throw Error("center_projector: not symmetric special");
  if (!(flags.gamma_prime == Scalar::from_rational(1, alg.conductor)))
    throw Error("center_projector: algebra not normalized");
  size_t n = alg.n;
  Matrix duals = alg.dual_basis();
  Matrix pi(n, n, alg.conductor);
  for (size_t a = 0; a < n; ++a) {
    auto acc = alg.zero_vec();
    for (size_t i = 0; i < n; ++i) {
      std::vector<Scalar> dual_i(n, Scalar::zero(alg.conductor));
      for (size_t k = 0; k < n; ++k) dual_i[k] = duals.at(k, i);
      auto term = alg.mul(alg.basis_vec(i), alg.mul(alg.basis_vec(a), dual_i));
      for (size_t k = 0; k < n; ++k) acc[k] = acc[k] + term[k];
    }
    for (size_t k = 0; k < n; ++k) pi.at(k, a) = acc[k];
  }
  return pi;
}

inline VectAlgebra tensor_algebra(const VectAlgebra& a, const VectAlgebra& b) {
  if (a.conductor != b.conductor) throw Error("tensor_algebra: conductor mismatch");
  VectAlgebra t;
  t.name = a.name + "_x_" + b.name;
  t.conductor = a.conductor;
  t.n = a.n * b.n;
  t.mult.assign(t.n * t.n * t.n, Scalar::zero(t.conductor));
  t.unit.assign(t.n, Scalar::zero(t.conductor));
  t.counit.assign(t.n, Scalar::zero(t.conductor));
  auto idx = [&b](size_t x, size_t y) { return x * b.n + y; };
  for (size_t x1 = 0; x1 < a.n; ++x1)
    for (size_t y1 = 0; y1 < b.n; ++y1) {
      t.unit[idx(x1, y1)] = a.unit[x1] * b.unit[y1];
      t.counit[idx(x1, y1)] = a.counit[x1] * b.counit[y1];
      for (size_t x2 = 0; x2 < a.n; ++x2)
        for (size_t y2 = 0; y2 < b.n; ++y2)
          for (size_t x3 = 0; x3 < a.n; ++x3)
            for (size_t y3 = 0; y3 < b.n; ++y3)
              t.m(idx(x1, y1), idx(x2, y2), idx(x3, y3)) = a.m(x1, x2, x3) * b.m(y1, y2, y3);
    }
  return t;
}

inline VectAlgebra algebra_from_json(const Json& j) {
  VectAlgebra alg;
  alg.name = j.value("name", std::string("unnamed"));
  alg.conductor = j.value("conductor", 1L);
  alg.n = j.at("dim").get<size_t>();
  alg.mult.assign(alg.n * alg.n * alg.n, Scalar::zero(alg.conductor));
  for (const auto& entry : j.at("mult")) {
    size_t a = entry[0].get<size_t>(), b = entry[1].get<size_t>(), c = entry[2].get<size_t>();
    if (a >= alg.n || b >= alg.n || c >= alg.n) throw Error("mult index out of range");
    alg.m(a, b, c) = scalar_from_json(entry[3], alg.conductor);
  }
  alg.unit = alg.zero_vec();
  alg.counit = alg.zero_vec();
  const auto& u = j.at("unit");
  const auto& e = j.at("counit");
  if (u.size() != alg.n || e.size() != alg.n) throw Error("unit/counit length mismatch");
  for (size_t i = 0; i < alg.n; ++i) {
    alg.unit[i] = scalar_from_json(u[i], alg.conductor);
    alg.counit[i] = scalar_from_json(e[i], alg.conductor);
  }
  return alg;
}

inline VectAlgebra load_algebra(const std::string& path) {
  return algebra_from_json(load_json_file(path));
}

}  // namespace frobtft

#endif
