#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "liouville/scalar.hpp"

namespace liouville {

constexpr int kMaxCoframeDim = 16;

using Blade = std::uint32_t;

class Coframe {
 public:
  explicit Coframe(std::vector<std::string> names);
  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  int index_of(const std::string& n) const;
  bool operator==(const Coframe& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

using CoframePtr = std::shared_ptr<const Coframe>;

inline CoframePtr make_coframe(std::vector<std::string> names) {
  return std::make_shared<const Coframe>(std::move(names));
}

inline bool same_coframe(const CoframePtr& a, const CoframePtr& b) {
  return a == b || *a == *b;
}

inline int blade_degree(Blade b) { return std::popcount(b); }

inline std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  for (int i = 0; b; ++i, b >>= 1)
    if (b & 1u) out.push_back(i);
  return out;
}

Blade blade_from_indices(const std::vector<int>& idx, int dim);

// Sign of e^a ^ e^b relative to the sorted blade a|b; 0 if they overlap.
inline int wedge_sign(Blade a, Blade b) {
  if (a & b) return 0;
  int swaps = 0;
  for (Blade rest = b; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    Blade above = (j >= 31) ? 0u : (a & ~((Blade(2) << j) - 1u));
    swaps += std::popcount(above);
  }
  return (swaps & 1) ? -1 : 1;
}

template <class S>
using DenseMatrix = std::vector<std::vector<S>>;

template <class S>
class Form {
 public:
  Form(CoframePtr cf, int degree) : cf_(std::move(cf)), degree_(degree) {
    // degrees above dim are allowed and hold only the zero form
    if (degree_ < 0) throw InputError("form degree out of range");
  }

  static Form scalar(CoframePtr cf, const S& c) {
    Form f(std::move(cf), 0);
    f.add_term(0u, c);
    return f;
  }
  static Form basis(CoframePtr cf, int i, const S& c = S(1)) {
    if (i < 0 || i >= cf->dim()) throw InputError("basis index out of range");
    Form f(std::move(cf), 1);
    f.add_term(Blade(1) << i, c);
    return f;
  }
  static Form volume(CoframePtr cf) {
    int d = cf->dim();
    Form f(std::move(cf), d);
    f.add_term(d == 32 ? ~0u : ((Blade(1) << d) - 1u), S(1));
    return f;
  }

  const CoframePtr& coframe() const { return cf_; }
  int dim() const { return cf_->dim(); }
  int degree() const { return degree_; }
  const std::map<Blade, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? S(0) : it->second;
  }

  void add_term(Blade b, const S& c) {
    if (blade_degree(b) != degree_) throw InputError("blade degree mismatch");
    if (b >> cf_->dim()) throw InputError("blade index beyond coframe");
    if (Scalar<S>::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(b, c);
    if (!fresh) {
      it->second += c;
      if (Scalar<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

  // Signed insertion from an arbitrary index list (repeats give zero).
  void add_indices(const std::vector<int>& idx, const S& c) {
    Blade b = 0;
    int sign = 1;
    for (int i : idx) {
      Blade e = Blade(1) << i;
      int sg = wedge_sign(b, e);
      if (sg == 0) return;
      sign *= sg;
      b |= e;
    }
    add_term(b, sign > 0 ? c : S(-c));
  }

  Form& operator+=(const Form& o) {
    check_compatible(o);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  Form& operator-=(const Form& o) {
    check_compatible(o);
    for (const auto& [b, c] : o.terms_) add_term(b, S(-c));
    return *this;
  }
  Form& operator*=(const S& s) {
    if (Scalar<S>::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= s;
    return *this;
  }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const S& s) { return a *= s; }
  friend Form operator*(const S& s, Form a) { return a *= s; }
  Form operator-() const { return (*this) * S(-1); }

  bool operator==(const Form& o) const {
    return same_coframe(cf_, o.cf_) && degree_ == o.degree_ && terms_ == o.terms_;
  }

  double max_abs() const {
    double m = 0;
    for (const auto& kv : terms_) m = std::max(m, std::abs(Scalar<S>::to_double(kv.second)));
    return m;
  }

  Form<double> to_double() const {
    Form<double> out(cf_, degree_);
    for (const auto& [b, c] : terms_) out.add_term(b, Scalar<S>::to_double(c));
    return out;
  }

  void check_compatible(const Form& o) const {
    if (!same_coframe(cf_, o.cf_)) throw InputError("coframe mismatch");
    if (degree_ != o.degree_) throw InputError("degree mismatch in sum");
  }

 private:
  CoframePtr cf_;
  int degree_;
  std::map<Blade, S> terms_;
};

template <class S>
struct VectorElem {
  CoframePtr coframe;
  std::vector<S> coords;

  VectorElem(CoframePtr cf, std::vector<S> c) : coframe(std::move(cf)), coords(std::move(c)) {
    if (static_cast<int>(coords.size()) != coframe->dim()) throw InputError("vector length mismatch");
  }
};

template <class S>
Form<S> wedge(const Form<S>& a, const Form<S>& b) {
  if (!same_coframe(a.coframe(), b.coframe())) throw InputError("coframe mismatch in wedge");
  if (a.degree() + b.degree() > a.dim()) throw InputError("wedge degree overflow");
  Form<S> out(a.coframe(), a.degree() + b.degree());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      int sg = wedge_sign(ba, bb);
      if (sg == 0) continue;
      S c = ca * cb;
      if (sg < 0) c = -c;
      out.add_term(ba | bb, c);
    }
  }
  return out;
}

template <class S>
Form<S> power(const Form<S>& a, int k) {
  if (a.degree() % 2 != 0) throw InputError("power of an odd-degree form");
  if (k < 0) throw InputError("negative exponent");
  if (static_cast<long>(k) * a.degree() > a.dim()) throw InputError("power degree overflow");
  Form<S> out = Form<S>::scalar(a.coframe(), S(1));
  for (int i = 0; i < k; ++i) out = wedge(out, a);
  return out;
}

template <class S>
Form<S> interior_product(const VectorElem<S>& v, const Form<S>& a) {
  if (!same_coframe(v.coframe, a.coframe())) throw InputError("coframe mismatch in interior product");
  if (a.degree() < 1) throw InputError("interior product of a 0-form");
  Form<S> out(a.coframe(), a.degree() - 1);
  for (const auto& [b, c] : a.terms()) {
    int m = 0;
    for (Blade rest = b; rest; rest &= rest - 1, ++m) {
      int i = std::countr_zero(rest);
      const S& vi = v.coords[i];
      if (Scalar<S>::is_zero(vi)) continue;
      S term = c * vi;
      if (m & 1) term = -term;
      out.add_term(b & ~(Blade(1) << i), term);
    }
  }
  return out;
}

template <class S>
S top_coefficient(const Form<S>& a) {
  if (a.degree() != a.dim()) throw InputError("top_coefficient needs a top-degree form");
  Blade full = a.dim() == 0 ? 0u : ((Blade(1) << a.dim()) - 1u);
  return a.coefficient(full);
}

// L^* e^i = sum_j L[i][j] e^j
template <class S>
Form<S> pullback(const DenseMatrix<S>& L, const Form<S>& a) {
  int n = a.dim();
  if (static_cast<int>(L.size()) != n) throw InputError("pullback dimension mismatch");
  for (const auto& row : L)
    if (static_cast<int>(row.size()) != n) throw InputError("pullback matrix not square");
  std::vector<Form<S>> pulled;
  pulled.reserve(n);
  for (int i = 0; i < n; ++i) {
    Form<S> f(a.coframe(), 1);
    for (int j = 0; j < n; ++j) f.add_term(Blade(1) << j, L[i][j]);
    pulled.push_back(std::move(f));
  }
  Form<S> out(a.coframe(), a.degree());
  for (const auto& [b, c] : a.terms()) {
    Form<S> t = Form<S>::scalar(a.coframe(), c);
    for (int i : blade_indices(b)) t = wedge(t, pulled[i]);
    out += t;
  }
  return out;
}

// 2-form sum_{i<j} A_ij e^i ^ e^j, so that omega(v,w) = v^T A w.
template <class S>
Form<S> two_form_from_matrix(const CoframePtr& cf, const DenseMatrix<S>& A) {
  int n = cf->dim();
  if (static_cast<int>(A.size()) != n) throw InputError("matrix/coframe size mismatch");
  Form<S> f(cf, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) f.add_term((Blade(1) << i) | (Blade(1) << j), A[i][j]);
  return f;
}

template <class S>
DenseMatrix<S> matrix_from_two_form(const Form<S>& f) {
  if (f.degree() != 2) throw InputError("expected a 2-form");
  int n = f.dim();
  DenseMatrix<S> A(n, std::vector<S>(n, S(0)));
  for (const auto& [b, c] : f.terms()) {
    auto idx = blade_indices(b);
    A[idx[0]][idx[1]] = c;
    A[idx[1]][idx[0]] = -c;
  }
  return A;
}

// value of a 1-form on a vector
template <class S>
S evaluate(const Form<S>& a, const std::vector<S>& v) {
  if (a.degree() != 1) throw InputError("evaluate expects a 1-form");
  S out(0);
  for (const auto& [b, c] : a.terms()) out += c * v[std::countr_zero(b)];
  return out;
}

}  // namespace liouville
