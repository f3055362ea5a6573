#ifndef FROBTFT_FUSIONCAT_HPP
#define FROBTFT_FUSIONCAT_HPP

// Skeletal braided fusion category data and its consistency verifiers.
//
// Conventions.  For each admissible triple (a,b;c) a basis of the fusion
// space Hom(a (x) b, c) is fixed; the splitting basis of Hom(c, a (x) b) is
// its dual under composition.  All stored matrices are transports of
// splitting trees:
//   F^{abc}_d: expands a ((ab)c)-tree in the (a(bc))-tree basis,
//     rows indexed by (e, alpha in V_ab^e, beta in V_ec^d),
//     cols indexed by (f, mu in V_bc^f, nu in V_af^d).
//   R^{ab}_c: post-composition with the braiding c_{a,b},
//     rows indexed by V_ab^c, cols by V_ba^c.
// Unit-involving F and R components are identities (strict skeleton).

#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "frobtft/json_io.hpp"
#include "frobtft/matrix.hpp"

namespace frobtft {

struct ResidualReport {
  bool passed = true;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    passed = false;
    failures.push_back(what);
  }
};

class CategoryData {
 public:
  std::string name;
  long conductor = 1;
  std::vector<std::string> labels;
  size_t unit = 0;
  std::vector<size_t> dual;
  std::vector<int> fusion;  // N_ij^k, flattened i*n*n + j*n + k
  std::map<std::array<size_t, 4>, Matrix> F;
  std::map<std::array<size_t, 3>, Matrix> R;
  std::vector<Scalar> qdim;
  std::vector<Scalar> twist;
  std::vector<Scalar> ev;    // ev_i: dual(i) (x) i -> 1, scalar vs the chosen basis
  std::vector<Scalar> coev;  // coev_i: 1 -> i (x) dual(i)
  SqrtRegistry sqrts;

  size_t nlabels() const { return labels.size(); }

  int N(size_t i, size_t j, size_t k) const {
    size_t n = nlabels();
    return fusion[(i * n + j) * n + k];
  }

  size_t label_index(const std::string& s) const {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == s) return i;
    throw Error("unknown label '" + s + "' in category " + name);
  }

  Scalar one() const { return Scalar::from_rational(1, conductor); }

  // right-duality scalars fixed by sphericality
  Scalar ev_r(size_t i) const { return qdim[i] / coev[i]; }    // i (x) dual(i) -> 1
  Scalar coev_r(size_t i) const { return qdim[i] / ev[i]; }    // 1 -> dual(i) (x) i

  // ---- tree bases ----------------------------------------------------

  struct Chan3 {
    size_t e;        // intermediate label
    int alpha, beta; // multiplicity indices of the two vertices
  };

  // ((a b) c) -> d: intermediate e = fuse(a,b), vertices V_ab^e and V_ec^d
  std::vector<Chan3> tree_left(size_t a, size_t b, size_t c, size_t d) const {
    std::vector<Chan3> basis;
    for (size_t e = 0; e < nlabels(); ++e)
      for (int x = 0; x < N(a, b, e); ++x)
        for (int y = 0; y < N(e, c, d); ++y) basis.push_back({e, x, y});
    return basis;
  }

  // (a (b c)) -> d: intermediate f = fuse(b,c), vertices V_bc^f and V_af^d
  std::vector<Chan3> tree_right(size_t a, size_t b, size_t c, size_t d) const {
    std::vector<Chan3> basis;
    for (size_t f = 0; f < nlabels(); ++f)
      for (int x = 0; x < N(b, c, f); ++x)
        for (int y = 0; y < N(a, f, d); ++y) basis.push_back({f, x, y});
    return basis;
  }

  static std::optional<size_t> find_chan(const std::vector<Chan3>& basis, size_t e, int x, int y) {
    for (size_t i = 0; i < basis.size(); ++i)
      if (basis[i].e == e && basis[i].alpha == x && basis[i].beta == y) return i;
    return std::nullopt;
  }

  bool f_admissible(size_t a, size_t b, size_t c, size_t d) const {
    return !tree_left(a, b, c, d).empty();
  }

  const Matrix& fmat(size_t a, size_t b, size_t c, size_t d) const {
    auto it = F.find({a, b, c, d});
    if (it == F.end())
      throw Error("missing F component (" + labels[a] + "," + labels[b] + "," + labels[c] + ";" +
                  labels[d] + ") in category " + name);
    return it->second;
  }

  Matrix fmat_inv(size_t a, size_t b, size_t c, size_t d) const { return fmat(a, b, c, d).inverse(); }

  const Matrix& rmat(size_t a, size_t b, size_t c) const {
    auto it = R.find({a, b, c});
    if (it == R.end())
      throw Error("missing R component (" + labels[a] + "," + labels[b] + ";" + labels[c] +
                  ") in category " + name);
    return it->second;
  }

  // transport of the inverse braiding acting on V_ab^c -> V_ba^c
  Matrix rmat_neg(size_t a, size_t b, size_t c) const { return rmat(b, a, c).inverse(); }

  // S-matrix entry data: s_tilde_{ij} = sum_c d_c tr(R^{ij}_c R^{ji}_c)
  Matrix s_tilde() const {
    size_t n = nlabels();
    Matrix s(n, n, conductor);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Scalar acc = Scalar::zero(conductor);
        for (size_t c = 0; c < n; ++c) {
          if (N(i, j, c) == 0) continue;
          Matrix dbl = rmat(i, j, c) * rmat(j, i, c);
          acc = acc + qdim[c] * dbl.trace();
        }
        s.at(i, j) = acc;
      }
    return s;
  }

  Matrix t_diag() const {
    Matrix t(nlabels(), nlabels(), conductor);
    for (size_t i = 0; i < nlabels(); ++i) t.at(i, i) = twist[i];
    return t;
  }

  Scalar global_dim() const {
    Scalar acc = Scalar::zero(conductor);
    for (size_t i = 0; i < nlabels(); ++i) acc = acc + qdim[i] * qdim[i];
    return acc;
  }
};

// ---- fixture loading --------------------------------------------------

inline CategoryData category_from_json(const Json& j) {
  CategoryData cat;
  cat.name = j.value("name", std::string("unnamed"));
  cat.conductor = j.at("conductor").get<long>();
  for (const auto& l : j.at("labels")) cat.labels.push_back(l.get<std::string>());
  size_t n = cat.labels.size();
  cat.unit = cat.label_index(j.at("unit").get<std::string>());
  cat.dual.resize(n);
  for (auto& [k, v] : j.at("dual").items()) cat.dual[cat.label_index(k)] = cat.label_index(v);
  cat.fusion.assign(n * n * n, 0);
  for (const auto& entry : j.at("fusion")) {
    size_t a = cat.label_index(entry[0].get<std::string>());
    size_t b = cat.label_index(entry[1].get<std::string>());
    size_t c = cat.label_index(entry[2].get<std::string>());
    int mult = entry.size() > 3 ? entry[3].get<int>() : 1;
    cat.fusion[(a * n + b) * n + c] = mult;
  }
  cat.qdim.assign(n, Scalar::zero(cat.conductor));
  for (auto& [k, v] : j.at("qdim").items())
    cat.qdim[cat.label_index(k)] = scalar_from_json(v, cat.conductor);
  cat.twist.assign(n, Scalar::zero(cat.conductor));
  for (auto& [k, v] : j.at("twist").items())
    cat.twist[cat.label_index(k)] = scalar_from_json(v, cat.conductor);

  cat.ev.assign(n, cat.one());
  cat.coev.assign(n, cat.one());
  if (j.contains("duality")) {
    for (auto& [k, v] : j.at("duality").items()) {
      size_t i = cat.label_index(k);
      if (v.contains("ev")) cat.ev[i] = scalar_from_json(v.at("ev"), cat.conductor);
      if (v.contains("coev")) cat.coev[i] = scalar_from_json(v.at("coev"), cat.conductor);
    }
  }

  auto parse_key = [&cat](const std::string& key) {
    std::vector<size_t> out;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(cat.label_index(part));
    return out;
  };

  // channel list entries are either "label" or ["label", alpha, beta]
  auto parse_chan = [&cat](const Json& cj) -> std::array<size_t, 3> {
    if (cj.is_string()) return {cat.label_index(cj.get<std::string>()), 0, 0};
    return {cat.label_index(cj[0].get<std::string>()), cj[1].get<size_t>(), cj[2].get<size_t>()};
  };

  if (j.contains("F")) {
    for (auto& [key, val] : j.at("F").items()) {
      auto ix = parse_key(key);
      if (ix.size() != 4) throw Error("F key must have four labels: " + key);
      size_t a = ix[0], b = ix[1], c = ix[2], d = ix[3];
      auto rows = cat.tree_left(a, b, c, d);
      auto cols = cat.tree_right(a, b, c, d);
      Matrix m = matrix_from_json(val.at("m"), cat.conductor);
      if (m.rows() != rows.size() || m.cols() != cols.size())
        throw Error("F matrix shape mismatch at " + key);
      // remap fixture row/col channel order onto the canonical enumeration
      Matrix canon(rows.size(), cols.size(), cat.conductor);
      std::vector<size_t> rmap(rows.size()), cmap(cols.size());
      for (size_t r = 0; r < rows.size(); ++r) {
        auto ch = parse_chan(val.at("rows")[r]);
        auto pos = CategoryData::find_chan(rows, ch[0], static_cast<int>(ch[1]), static_cast<int>(ch[2]));
        if (!pos) throw Error("bad F row channel in " + key);
        rmap[r] = *pos;
      }
      for (size_t c2 = 0; c2 < cols.size(); ++c2) {
        auto ch = parse_chan(val.at("cols")[c2]);
        auto pos = CategoryData::find_chan(cols, ch[0], static_cast<int>(ch[1]), static_cast<int>(ch[2]));
        if (!pos) throw Error("bad F col channel in " + key);
        cmap[c2] = *pos;
      }
      for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c2 = 0; c2 < cols.size(); ++c2) canon.at(rmap[r], cmap[c2]) = m.at(r, c2);
      cat.F[{a, b, c, d}] = canon;
    }
  }

  if (j.contains("R")) {
    for (auto& [key, val] : j.at("R").items()) {
      auto ix = parse_key(key);
      if (ix.size() != 3) throw Error("R key must have three labels: " + key);
      Matrix m = matrix_from_json(val, cat.conductor);
      cat.R[{ix[0], ix[1], ix[2]}] = m;
    }
  }

  // unit-involving components are identities in the strict skeleton
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) {
        for (size_t d = 0; d < n; ++d) {
          if (a != cat.unit && b != cat.unit && c != cat.unit) continue;
          if (!cat.f_admissible(a, b, c, d)) continue;
          std::array<size_t, 4> key{a, b, c, d};
          if (!cat.F.count(key))
            cat.F[key] = Matrix::identity(cat.tree_left(a, b, c, d).size(), cat.conductor);
        }
        if ((a == cat.unit || b == cat.unit) && cat.N(a, b, c) > 0) {
          std::array<size_t, 3> key{a, b, c};
          if (!cat.R.count(key))
            cat.R[key] = Matrix::identity(static_cast<size_t>(cat.N(a, b, c)), cat.conductor);
        }
      }

  if (j.contains("sqrt_witnesses")) {
    for (const auto& w : j.at("sqrt_witnesses")) {
      Scalar of = scalar_from_json(w.at("of"), cat.conductor);
      Scalar is = scalar_from_json(w.at("is"), cat.conductor);
      cat.sqrts.declare(of, is);
    }
  }
  return cat;
}

inline CategoryData load_category(const std::string& path) {
  return category_from_json(load_json_file(path));
}

// ---- structural checks --------------------------------------------------

inline ResidualReport verify_structure(const CategoryData& cat) {
  ResidualReport rep;
  size_t n = cat.nlabels();
  Scalar one = cat.one();
  if (cat.unit >= n) rep.fail("unit label out of range");
  for (size_t i = 0; i < n; ++i)
    if (cat.dual[cat.dual[i]] != i) rep.fail("dual map is not an involution at " + cat.labels[i]);
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) {
      int expect = (j == k) ? 1 : 0;
      if (cat.N(cat.unit, j, k) != expect || cat.N(j, cat.unit, k) != expect)
        rep.fail("unit fusion constraint fails at (" + cat.labels[j] + "," + cat.labels[k] + ")");
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      int expect = (cat.dual[i] == j) ? 1 : 0;
      if (cat.N(i, j, cat.unit) != expect)
        rep.fail("duality fusion constraint fails at (" + cat.labels[i] + "," + cat.labels[j] + ")");
    }
  if (!(cat.qdim[cat.unit] == one)) rep.fail("qdim of unit is not 1");
  if (!(cat.twist[cat.unit] == one)) rep.fail("twist of unit is not 1");
  // fusion-tree dimension consistency & F invertibility
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c)
        for (size_t d = 0; d < n; ++d) {
          size_t dl = cat.tree_left(a, b, c, d).size();
          size_t dr = cat.tree_right(a, b, c, d).size();
          if (dl != dr)
            rep.fail("fusion multiplicities are not associative at (" + cat.labels[a] + "," +
                     cat.labels[b] + "," + cat.labels[c] + ";" + cat.labels[d] + ")");
          auto it = cat.F.find({a, b, c, d});
          if (it != cat.F.end()) {
            if (it->second.rows() != dl || it->second.cols() != dr) {
              rep.fail("F shape mismatch at (" + cat.labels[a] + "," + cat.labels[b] + "," +
                       cat.labels[c] + ";" + cat.labels[d] + ")");
            } else if (dl > 0 && it->second.rank() != dl) {
              rep.fail("F matrix singular at (" + cat.labels[a] + "," + cat.labels[b] + "," +
                       cat.labels[c] + ";" + cat.labels[d] + ")");
            }
          }
        }
  return rep;
}

inline ResidualReport verify_qdim(const CategoryData& cat) {
  ResidualReport rep;
  size_t n = cat.nlabels();
  for (size_t i = 0; i < n; ++i)
    if (!(cat.qdim[cat.dual[i]] == cat.qdim[i]))
      rep.fail("qdim not dual-invariant at " + cat.labels[i]);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Scalar lhs = cat.qdim[i] * cat.qdim[j];
      Scalar rhs = Scalar::zero(cat.conductor);
      for (size_t k = 0; k < n; ++k)
        rhs = rhs + Scalar::integer(cat.N(i, j, k), cat.conductor) * cat.qdim[k];
      if (!(lhs == rhs))
        rep.fail("qdim product rule fails at (" + cat.labels[i] + "," + cat.labels[j] + ")");
    }
  return rep;
}

// Pentagon: equality of the two splitting-tree transports
// (((ab)c)d) -> (a(b(cd))) for all labels.
inline ResidualReport verify_pentagon(const CategoryData& cat) {
  ResidualReport rep;
  size_t n = cat.nlabels();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c)
        for (size_t d = 0; d < n; ++d)
          for (size_t e = 0; e < n; ++e) {
            // rows: (f, x: V_ab^f, g, y: V_fc^g, z: V_gd^e)
            struct Row {
              size_t f, g;
              int x, y, z;
            };
            struct Col {
              size_t l, m;
              int dl, tm, sm;
            };
            std::vector<Row> rows;
            for (size_t f = 0; f < n; ++f)
              for (int x = 0; x < cat.N(a, b, f); ++x)
                for (size_t g = 0; g < n; ++g)
                  for (int y = 0; y < cat.N(f, c, g); ++y)
                    for (int z = 0; z < cat.N(g, d, e); ++z) rows.push_back({f, g, x, y, z});
            if (rows.empty()) continue;
            std::vector<Col> cols;
            for (size_t l = 0; l < n; ++l)
              for (int dl = 0; dl < cat.N(c, d, l); ++dl)
                for (size_t m = 0; m < n; ++m)
                  for (int tm = 0; tm < cat.N(b, l, m); ++tm)
                    for (int sm = 0; sm < cat.N(a, m, e); ++sm) cols.push_back({l, m, dl, tm, sm});

            bool bad = false;
            for (const Row& r : rows) {
              for (const Col& q : cols) {
                // path A: F^{fcd}_e then F^{abl}_e
                Scalar A = Scalar::zero(cat.conductor);
                {
                  const Matrix& F1 = cat.fmat(r.f, c, d, e);
                  const Matrix& F2 = cat.fmat(a, b, q.l, e);
                  auto F1rows = cat.tree_left(r.f, c, d, e);
                  auto F1cols = cat.tree_right(r.f, c, d, e);
                  auto F2rows = cat.tree_left(a, b, q.l, e);
                  auto F2cols = cat.tree_right(a, b, q.l, e);
                  auto r1 = CategoryData::find_chan(F1rows, r.g, r.y, r.z);
                  auto c2 = CategoryData::find_chan(F2cols, q.m, q.tm, q.sm);
                  if (r1 && c2) {
                    for (int eps = 0; eps < cat.N(r.f, q.l, e); ++eps) {
                      auto c1 = CategoryData::find_chan(F1cols, q.l, q.dl, eps);
                      auto r2 = CategoryData::find_chan(F2rows, r.f, r.x, eps);
                      if (c1 && r2) A = A + F1.at(*r1, *c1) * F2.at(*r2, *c2);
                    }
                  }
                }
                // path B: F^{abc}_g, F^{ahd}_e, F^{bcd}_m
                Scalar B = Scalar::zero(cat.conductor);
                for (size_t h = 0; h < n; ++h) {
                  if (cat.N(b, c, h) == 0) continue;
                  const Matrix& F1 = cat.fmat(a, b, c, r.g);
                  auto F1rows = cat.tree_left(a, b, c, r.g);
                  auto F1cols = cat.tree_right(a, b, c, r.g);
                  auto r1 = CategoryData::find_chan(F1rows, r.f, r.x, r.y);
                  if (!r1) continue;
                  for (int mu = 0; mu < cat.N(b, c, h); ++mu)
                    for (int nu = 0; nu < cat.N(a, h, r.g); ++nu) {
                      auto c1 = CategoryData::find_chan(F1cols, h, mu, nu);
                      if (!c1) continue;
                      Scalar f1 = F1.at(*r1, *c1);
                      if (f1.is_zero()) continue;
                      const Matrix& F2 = cat.fmat(a, h, d, e);
                      auto F2rows = cat.tree_left(a, h, d, e);
                      auto F2cols = cat.tree_right(a, h, d, e);
                      auto r2 = CategoryData::find_chan(F2rows, r.g, nu, r.z);
                      if (!r2) continue;
                      const Matrix& F3 = cat.fmat(b, c, d, q.m);
                      auto F3rows = cat.tree_left(b, c, d, q.m);
                      auto F3cols = cat.tree_right(b, c, d, q.m);
                      auto c3 = CategoryData::find_chan(F3cols, q.l, q.dl, q.tm);
                      if (!c3) continue;
                      for (int rho = 0; rho < cat.N(h, d, q.m); ++rho) {
                        auto c2 = CategoryData::find_chan(F2cols, q.m, rho, q.sm);
                        auto r3 = CategoryData::find_chan(F3rows, h, mu, rho);
                        if (c2 && r3) B = B + f1 * F2.at(*r2, *c2) * F3.at(*r3, *c3);
                      }
                    }
                }
                if (!(A == B)) {
                  bad = true;
                  break;
                }
              }
              if (bad) break;
            }
            if (bad)
              rep.fail("pentagon(" + cat.labels[a] + "," + cat.labels[b] + "," + cat.labels[c] +
                       "," + cat.labels[d] + ";" + cat.labels[e] + ")");
          }
  return rep;
}

// Hexagon: braiding a through b, c one strand at a time versus through the
// fused (bc).  Checked for the braiding and for the inverse braiding.
inline ResidualReport verify_hexagon(const CategoryData& cat) {
  ResidualReport rep;
  size_t n = cat.nlabels();
  for (int sign = 0; sign < 2; ++sign) {
    auto braidmat = [&cat, sign](size_t x, size_t y, size_t c) {
      return sign == 0 ? cat.rmat(x, y, c) : cat.rmat_neg(x, y, c);
    };
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        for (size_t c = 0; c < n; ++c)
          for (size_t d = 0; d < n; ++d) {
            auto src = cat.tree_left(a, b, c, d);   // comb(a,b,c)
            auto dst = cat.tree_left(b, c, a, d);   // comb(b,c,a)
            if (src.empty()) continue;
            Matrix M1(src.size(), dst.size(), cat.conductor);
            Matrix M2(src.size(), dst.size(), cat.conductor);

            // route 2: F^{abc}_d then braid a past the fused (bc)
            auto mid = cat.tree_right(a, b, c, d);  // (g, u: V_bc^g, z: V_ag^d)
            const Matrix& Fabc = cat.fmat(a, b, c, d);
            for (size_t si = 0; si < src.size(); ++si)
              for (size_t mi = 0; mi < mid.size(); ++mi) {
                Scalar f = Fabc.at(si, mi);
                if (f.is_zero()) continue;
                size_t g = mid[mi].e;
                Matrix Rg = braidmat(a, g, d);
                for (int w = 0; w < cat.N(g, a, d); ++w) {
                  auto di = CategoryData::find_chan(dst, g, mid[mi].alpha, w);
                  if (di) M2.at(si, *di) = M2.at(si, *di) + f * Rg.at(mid[mi].beta, w);
                }
              }

            // route 1: braid(1), F^{bac}_d, braid on the (ac) slot, then back
            // through (F^{bca}_d)^{-1}
            for (size_t si = 0; si < src.size(); ++si) {
              size_t e = src[si].e;
              Matrix Rab = braidmat(a, b, e);
              auto ba_src = cat.tree_left(b, a, c, d);
              for (int xp = 0; xp < cat.N(b, a, e); ++xp) {
                Scalar w1 = Rab.at(src[si].alpha, xp);
                if (w1.is_zero()) continue;
                auto bi = CategoryData::find_chan(ba_src, e, xp, src[si].beta);
                if (!bi) continue;
                const Matrix& Fbac = cat.fmat(b, a, c, d);
                auto bac_cols = cat.tree_right(b, a, c, d);  // (f, p: V_ac^f, q: V_bf^d)
                for (size_t ci = 0; ci < bac_cols.size(); ++ci) {
                  Scalar w2 = Fbac.at(*bi, ci);
                  if (w2.is_zero()) continue;
                  size_t f = bac_cols[ci].e;
                  Matrix Rac = braidmat(a, c, f);
                  Matrix Fbca_inv = cat.fmat_inv(b, c, a, d);
                  auto bca_cols = cat.tree_right(b, c, a, d);  // (f, p': V_ca^f, q)
                  for (int pp = 0; pp < cat.N(c, a, f); ++pp) {
                    Scalar w3 = Rac.at(bac_cols[ci].alpha, pp);
                    if (w3.is_zero()) continue;
                    auto ri = CategoryData::find_chan(bca_cols, f, pp, bac_cols[ci].beta);
                    if (!ri) continue;
                    for (size_t di = 0; di < dst.size(); ++di) {
                      Scalar w4 = Fbca_inv.at(*ri, di);
                      if (w4.is_zero()) continue;
                      M1.at(si, di) = M1.at(si, di) + w1 * w2 * w3 * w4;
                    }
                  }
                }
              }
            }

            if (!(M1 == M2))
              rep.fail(std::string(sign == 0 ? "hexagon" : "hexagon-inv") + "(" + cat.labels[a] +
                       "," + cat.labels[b] + "," + cat.labels[c] + ";" + cat.labels[d] + ")");
          }
  }
  return rep;
}

// Duality: zigzag identities for the fixture ev/coev scalars and the
// sphericality of the derived right-duality pair.
inline ResidualReport verify_duality(const CategoryData& cat) {
  ResidualReport rep;
  Scalar one = cat.one();
  for (size_t i = 0; i < cat.nlabels(); ++i) {
    size_t ib = cat.dual[i];
    auto rowsA = cat.tree_left(i, ib, i, i);
    auto colsA = cat.tree_right(i, ib, i, i);
    auto rA = CategoryData::find_chan(rowsA, cat.unit, 0, 0);
    auto cA = CategoryData::find_chan(colsA, cat.unit, 0, 0);
    if (!rA || !cA) {
      rep.fail("duality channels missing at " + cat.labels[i]);
      continue;
    }
    // (id_i (x) ev_i) o (coev_i (x) id_i) = id_i
    Scalar zigA = cat.ev[i] * cat.coev[i] * cat.fmat(i, ib, i, i).at(*rA, *cA);
    if (!(zigA == one)) rep.fail("zigzag A fails at " + cat.labels[i]);
    // (ev_i (x) id_ib) o (id_ib (x) coev_i) = id_ib
    auto rowsB = cat.tree_left(ib, i, ib, ib);
    auto colsB = cat.tree_right(ib, i, ib, ib);
    auto rB = CategoryData::find_chan(rowsB, cat.unit, 0, 0);
    auto cB = CategoryData::find_chan(colsB, cat.unit, 0, 0);
    Scalar zigB = cat.ev[i] * cat.coev[i] * cat.fmat_inv(ib, i, ib, ib).at(*cB, *rB);
    if (!(zigB == one)) rep.fail("zigzag B fails at " + cat.labels[i]);
    // right-duality pair: same zigzags with the roles of i and dual(i) swapped
    Scalar zigC = cat.ev_r(i) * cat.coev_r(i) * cat.fmat(ib, i, ib, ib).at(*rB, *cB);
    if (!(zigC == one)) rep.fail("right-duality zigzag fails at " + cat.labels[i]);
    Scalar zigD = cat.ev_r(i) * cat.coev_r(i) * cat.fmat_inv(i, ib, i, i).at(*cA, *rA);
    if (!(zigD == one)) rep.fail("right-duality inverse zigzag fails at " + cat.labels[i]);
  }
  return rep;
}

// Twist: the double braiding on each fusion channel equals
// theta_c / (theta_a theta_b) times the identity (balancing).
inline ResidualReport verify_twist(const CategoryData& cat) {
  ResidualReport rep;
  size_t n = cat.nlabels();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) {
        int m = cat.N(a, b, c);
        if (m == 0) continue;
        Matrix dbl = cat.rmat(a, b, c) * cat.rmat(b, a, c);
        Scalar phase = cat.twist[c] / (cat.twist[a] * cat.twist[b]);
        Matrix want = phase * Matrix::identity(static_cast<size_t>(m), cat.conductor);
        if (!(dbl == want))
          rep.fail("balancing fails at (" + cat.labels[a] + "," + cat.labels[b] + ";" +
                   cat.labels[c] + ")");
      }
  return rep;
}

struct ModularData {
  Matrix S;        // normalized, S = s00 * s_tilde
  Matrix s_tilde;
  Matrix T;        // diag(theta_i); the anomaly scalar is recorded separately
  Scalar s00;
  Scalar p_plus, p_minus;  // Gauss sums, recorded but unused downstream
};

inline ModularData modular_data(const CategoryData& cat) {
  ModularData md;
  md.s_tilde = cat.s_tilde();
  if (md.s_tilde.rank() != cat.nlabels()) throw Error("category not modular: S matrix singular");
  Scalar dim = cat.global_dim();
  md.s00 = cat.sqrts.sqrt(dim.inverse());
  md.S = md.s00 * md.s_tilde;
  md.T = cat.t_diag();
  md.p_plus = Scalar::zero(cat.conductor);
  md.p_minus = Scalar::zero(cat.conductor);
  for (size_t i = 0; i < cat.nlabels(); ++i) {
    Scalar d2 = cat.qdim[i] * cat.qdim[i];
    md.p_plus = md.p_plus + d2 * cat.twist[i];
    md.p_minus = md.p_minus + d2 * cat.twist[i].inverse();
  }
  return md;
}

// omega weights: ((s00 d_i)^{1/2})_{i in I} via declared square roots
inline std::vector<Scalar> omega_weights(const CategoryData& cat) {
  ModularData md = modular_data(cat);
  std::vector<Scalar> w;
  for (size_t i = 0; i < cat.nlabels(); ++i) {
    Scalar radicand = md.s00 * cat.qdim[i];
    if (!cat.sqrts.has(radicand))
      throw Error("missing sqrt witness for omega weight of label " + cat.labels[i]);
    w.push_back(cat.sqrts.sqrt(radicand));
  }
  return w;
}

// ---- product category C (x) C-bar ----------------------------------------

inline CategoryData product_category(const CategoryData& cat) {
  CategoryData p;
  size_t n = cat.nlabels();
  p.name = cat.name + "_x_bar";
  p.conductor = cat.conductor;
  auto pair_index = [n](size_t i, size_t j) { return i * n + j; };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) p.labels.push_back(cat.labels[i] + "|" + cat.labels[j]);
  p.unit = pair_index(cat.unit, cat.unit);
  p.dual.resize(n * n);
  p.qdim.assign(n * n, Scalar::zero(p.conductor));
  p.twist.assign(n * n, Scalar::zero(p.conductor));
  p.ev.assign(n * n, p.one());
  p.coev.assign(n * n, p.one());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      size_t ij = pair_index(i, j);
      p.dual[ij] = pair_index(cat.dual[i], cat.dual[j]);
      p.qdim[ij] = cat.qdim[i] * cat.qdim[j];
      p.twist[ij] = cat.twist[i] / cat.twist[j];
      p.ev[ij] = cat.ev[i] * cat.ev[j];
      p.coev[ij] = cat.coev[i] * cat.coev[j];
    }
  size_t np = n * n;
  p.fusion.assign(np * np * np, 0);
  for (size_t a1 = 0; a1 < n; ++a1)
    for (size_t a2 = 0; a2 < n; ++a2)
      for (size_t b1 = 0; b1 < n; ++b1)
        for (size_t b2 = 0; b2 < n; ++b2)
          for (size_t c1 = 0; c1 < n; ++c1)
            for (size_t c2 = 0; c2 < n; ++c2)
              p.fusion[(pair_index(a1, a2) * np + pair_index(b1, b2)) * np + pair_index(c1, c2)] =
                  cat.N(a1, b1, c1) * cat.N(a2, b2, c2);

  // F of the product is the entrywise tensor product of the factor F's
  // (the braided structure of the second factor does not enter F).
  auto pack = [](int a, int b, int nb) { return a * nb + b; };
  for (size_t a1 = 0; a1 < n; ++a1)
    for (size_t a2 = 0; a2 < n; ++a2)
      for (size_t b1 = 0; b1 < n; ++b1)
        for (size_t b2 = 0; b2 < n; ++b2)
          for (size_t c1 = 0; c1 < n; ++c1)
            for (size_t c2 = 0; c2 < n; ++c2)
              for (size_t d1 = 0; d1 < n; ++d1)
                for (size_t d2 = 0; d2 < n; ++d2) {
                  if (!cat.f_admissible(a1, b1, c1, d1) || !cat.f_admissible(a2, b2, c2, d2))
                    continue;
                  size_t A = pair_index(a1, a2), B = pair_index(b1, b2), C = pair_index(c1, c2),
                         D = pair_index(d1, d2);
                  auto rows = p.tree_left(A, B, C, D);
                  auto cols = p.tree_right(A, B, C, D);
                  Matrix m(rows.size(), cols.size(), p.conductor);
                  const Matrix& F1 = cat.fmat(a1, b1, c1, d1);
                  const Matrix& F2 = cat.fmat(a2, b2, c2, d2);
                  auto rows1 = cat.tree_left(a1, b1, c1, d1);
                  auto cols1 = cat.tree_right(a1, b1, c1, d1);
                  auto rows2 = cat.tree_left(a2, b2, c2, d2);
                  auto cols2 = cat.tree_right(a2, b2, c2, d2);
                  for (size_t r1 = 0; r1 < rows1.size(); ++r1)
                    for (size_t r2 = 0; r2 < rows2.size(); ++r2) {
                      size_t e = pair_index(rows1[r1].e, rows2[r2].e);
                      int alpha = pack(rows1[r1].alpha, rows2[r2].alpha,
                                       cat.N(a2, b2, rows2[r2].e));
                      int beta = pack(rows1[r1].beta, rows2[r2].beta,
                                      cat.N(rows2[r2].e, c2, d2));
                      auto ri = CategoryData::find_chan(rows, e, alpha, beta);
                      if (!ri) throw Error("product category row channel lookup failed");
                      for (size_t q1 = 0; q1 < cols1.size(); ++q1)
                        for (size_t q2 = 0; q2 < cols2.size(); ++q2) {
                          size_t f = pair_index(cols1[q1].e, cols2[q2].e);
                          int mu = pack(cols1[q1].alpha, cols2[q2].alpha,
                                        cat.N(b2, c2, cols2[q2].e));
                          int nu = pack(cols1[q1].beta, cols2[q2].beta,
                                        cat.N(a2, cols2[q2].e, d2));
                          auto ci = CategoryData::find_chan(cols, f, mu, nu);
                          if (!ci) throw Error("product category col channel lookup failed");
                          m.at(*ri, *ci) = F1.at(r1, q1) * F2.at(r2, q2);
                        }
                    }
                  p.F[{A, B, C, D}] = m;
                }

  // R of the product braids the first factor and inverse-braids the second.
  for (size_t a1 = 0; a1 < n; ++a1)
    for (size_t a2 = 0; a2 < n; ++a2)
      for (size_t b1 = 0; b1 < n; ++b1)
        for (size_t b2 = 0; b2 < n; ++b2)
          for (size_t c1 = 0; c1 < n; ++c1)
            for (size_t c2 = 0; c2 < n; ++c2) {
              if (cat.N(a1, b1, c1) == 0 || cat.N(a2, b2, c2) == 0) continue;
              size_t A = pair_index(a1, a2), B = pair_index(b1, b2), C = pair_index(c1, c2);
              const Matrix R1 = cat.rmat(a1, b1, c1);
              const Matrix R2 = cat.rmat_neg(a2, b2, c2);
              size_t rows = R1.rows() * R2.rows();
              size_t cols = R1.cols() * R2.cols();
              Matrix m(rows, cols, p.conductor);
              for (size_t i1 = 0; i1 < R1.rows(); ++i1)
                for (size_t i2 = 0; i2 < R2.rows(); ++i2)
                  for (size_t j1 = 0; j1 < R1.cols(); ++j1)
                    for (size_t j2 = 0; j2 < R2.cols(); ++j2)
                      m.at(i1 * R2.rows() + i2, j1 * R2.cols() + j2) = R1.at(i1, j1) * R2.at(i2, j2);
              p.R[{A, B, C}] = m;
            }
  return p;
}

// T_C = (+)_i U_i x U_i-bar as a multiplicity vector over the product labels
inline std::vector<int> t_object(const CategoryData& cat) {
  size_t n = cat.nlabels();
  std::vector<int> mult(n * n, 0);
  for (size_t i = 0; i < n; ++i) mult[i * n + i] = 1;
  return mult;
}

struct CategoryCheck {
  std::string name;
  ResidualReport report;
};

inline std::vector<CategoryCheck> verify_category(const CategoryData& cat) {
  std::vector<CategoryCheck> checks;
  checks.push_back({"structure", verify_structure(cat)});
  checks.push_back({"qdim", verify_qdim(cat)});
  checks.push_back({"pentagon", verify_pentagon(cat)});
  checks.push_back({"hexagon", verify_hexagon(cat)});
  checks.push_back({"duality", verify_duality(cat)});
  checks.push_back({"twist", verify_twist(cat)});
  return checks;
}

}  // namespace frobtft

#endif
