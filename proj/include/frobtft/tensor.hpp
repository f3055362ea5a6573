#ifndef FROBTFT_TENSOR_HPP
#define FROBTFT_TENSOR_HPP

// Dense multilinear arrays over a cyclotomic field, entries in lexicographic
// index order (last axis fastest).

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "frobtft/cyclotomic.hpp"

namespace frobtft {

class Tensor {
 public:
  Tensor() : conductor_(1) { entries_.push_back(Scalar::zero(1)); }

  Tensor(std::vector<size_t> shape, long conductor)
      : shape_(std::move(shape)), conductor_(conductor) {
    size_t total = 1;
    for (size_t d : shape_) total *= d;
    entries_.assign(total, Scalar::zero(conductor));
  }

  static Tensor scalar(const Scalar& v) {
    Tensor t({}, v.conductor());
    t.entries_[0] = v;
    return t;
  }

  const std::vector<size_t>& shape() const { return shape_; }
  size_t order() const { return shape_.size(); }
  long conductor() const { return conductor_; }
  size_t size() const { return entries_.size(); }

  std::vector<std::string>& slot_labels() { return slot_labels_; }
  const std::vector<std::string>& slot_labels() const { return slot_labels_; }

  Scalar& operator[](const std::vector<size_t>& idx) { return entries_[offset(idx)]; }
  const Scalar& operator[](const std::vector<size_t>& idx) const { return entries_[offset(idx)]; }

  Scalar& flat(size_t i) { return entries_[i]; }
  const Scalar& flat(size_t i) const { return entries_[i]; }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

  friend Tensor operator+(const Tensor& a, const Tensor& b) {
    if (a.shape_ != b.shape_) throw Error("tensor shape mismatch in +");
    Tensor r = a;
    for (size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] = r.entries_[i] + b.entries_[i];
    return r;
  }

  friend Tensor operator*(const Scalar& s, const Tensor& a) {
    Tensor r = a;
    for (auto& e : r.entries_) e = s * e;
    return r;
  }

  size_t offset(const std::vector<size_t>& idx) const {
    if (idx.size() != shape_.size()) throw Error("tensor index arity mismatch");
    size_t off = 0;
    for (size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] >= shape_[k]) throw Error("tensor index out of range");
      off = off * shape_[k] + idx[k];
    }
    return off;
  }

  std::vector<size_t> unravel(size_t off) const {
    std::vector<size_t> idx(shape_.size());
    for (size_t k = shape_.size(); k-- > 0;) {
      idx[k] = off % shape_[k];
      off /= shape_[k];
    }
    return idx;
  }

  Tensor permute(const std::vector<size_t>& perm) const {
    if (perm.size() != shape_.size()) throw Error("permute arity mismatch");
    std::vector<size_t> new_shape(perm.size());
    for (size_t k = 0; k < perm.size(); ++k) new_shape[k] = shape_[perm[k]];
    Tensor r(new_shape, conductor_);
    std::vector<size_t> idx(perm.size());
    for (size_t off = 0; off < entries_.size(); ++off) {
      std::vector<size_t> src = unravel(off);
      for (size_t k = 0; k < perm.size(); ++k) idx[k] = src[perm[k]];
      r[idx] = entries_[off];
    }
    return r;
  }

 private:
  std::vector<size_t> shape_;
  long conductor_;
  std::vector<Scalar> entries_;
  std::vector<std::string> slot_labels_;
};

// Contraction of t1 and t2 over the given axis pairs (axis of t1, axis of t2).
// Result shape: remaining axes of t1 then remaining axes of t2, in order.
inline Tensor contract(const Tensor& t1, const Tensor& t2,
                       const std::vector<std::pair<size_t, size_t>>& pairs) {
  if (t1.conductor() != t2.conductor()) throw Error("conductor mismatch in contract");
  std::vector<bool> used1(t1.order(), false), used2(t2.order(), false);
  for (auto [a1, a2] : pairs) {
    if (a1 >= t1.order() || a2 >= t2.order()) throw Error("contract: axis out of range");
    if (used1[a1] || used2[a2]) throw Error("contract: repeated axis");
    if (t1.shape()[a1] != t2.shape()[a2])
      throw Error("contract: paired axes have different dimensions");
    used1[a1] = used2[a2] = true;
  }
  std::vector<size_t> free1, free2;
  for (size_t k = 0; k < t1.order(); ++k)
    if (!used1[k]) free1.push_back(k);
  for (size_t k = 0; k < t2.order(); ++k)
    if (!used2[k]) free2.push_back(k);

  std::vector<size_t> out_shape;
  for (size_t k : free1) out_shape.push_back(t1.shape()[k]);
  for (size_t k : free2) out_shape.push_back(t2.shape()[k]);
  Tensor out(out_shape, t1.conductor());

  size_t contracted = 1;
  for (auto [a1, a2] : pairs) contracted *= t1.shape()[a1];

  std::vector<size_t> i1(t1.order()), i2(t2.order()), io(out_shape.size());
  size_t n_out = out.size();
  for (size_t off = 0; off < n_out; ++off) {
    std::vector<size_t> oidx = out.unravel(off);
    Scalar acc = Scalar::zero(t1.conductor());
    for (size_t s = 0; s < contracted; ++s) {
      size_t rem = s;
      for (size_t p = pairs.size(); p-- > 0;) {
        size_t dim = t1.shape()[pairs[p].first];
        size_t v = rem % dim;
        rem /= dim;
        i1[pairs[p].first] = v;
        i2[pairs[p].second] = v;
      }
      for (size_t k = 0; k < free1.size(); ++k) i1[free1[k]] = oidx[k];
      for (size_t k = 0; k < free2.size(); ++k) i2[free2[k]] = oidx[free1.size() + k];
      acc = acc + t1[i1] * t2[i2];
    }
    out.flat(off) = acc;
  }
  return out;
}

// Trace over two axes of the same tensor.
inline Tensor trace_axes(const Tensor& t, size_t a, size_t b) {
  if (a == b || a >= t.order() || b >= t.order()) throw Error("trace_axes: bad axes");
  if (t.shape()[a] != t.shape()[b]) throw Error("trace_axes: dimension mismatch");
  if (a > b) std::swap(a, b);
  std::vector<size_t> out_shape;
  for (size_t k = 0; k < t.order(); ++k)
    if (k != a && k != b) out_shape.push_back(t.shape()[k]);
  Tensor out(out_shape, t.conductor());
  size_t n_out = out.size();
  for (size_t off = 0; off < n_out; ++off) {
    std::vector<size_t> oidx = out.unravel(off);
    std::vector<size_t> idx(t.order());
    size_t q = 0;
    for (size_t k = 0; k < t.order(); ++k)
      if (k != a && k != b) idx[k] = oidx[q++];
    Scalar acc = Scalar::zero(t.conductor());
    for (size_t d = 0; d < t.shape()[a]; ++d) {
      idx[a] = idx[b] = d;
      acc = acc + t[idx];
    }
    out.flat(off) = acc;
  }
  return out;
}

}  // namespace frobtft

#endif
