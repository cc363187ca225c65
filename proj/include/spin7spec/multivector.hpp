#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "spin7spec/rational.hpp"

namespace spin7spec {

// Index masks: bit i of a mask stands for e^i. R^8 uses bits 0..7 with e^0
// the radial/cone direction, R^7 uses bits 1..7 so that the R^7 <= R^8
// embedding is the identity on masks and all index labels match.
using Mask = unsigned;

inline int mask_grade(Mask m) { return __builtin_popcount(m); }

// Sign of sorting e^I ^ e^J into e^{I|J} for disjoint I, J:
// (-1)^{#{(i,j) : i in I, j in J, i > j}}.
inline int wedge_sign(Mask I, Mask J) {
  int inv = 0;
  for (int i = 1; i < 8; ++i)
    if ((I >> i) & 1u) inv += __builtin_popcount(J & ((1u << i) - 1u));
  return (inv & 1) ? -1 : 1;
}

class Multivector {
 public:
  explicit Multivector(int dim) : dim_(dim) { check_dim(dim); }

  static Multivector zero(int dim) { return Multivector(dim); }

  static Multivector scalar(int dim, const Rational& c) {
    Multivector m(dim);
    m.set(0u, c);
    return m;
  }

  // e.g. basis(7, {1,2,7}) = e^{127}. Indices must be strictly increasing.
  static Multivector basis(int dim, std::initializer_list<int> idx) {
    Multivector m(dim);
    Mask mask = 0;
    int prev = -1;
    for (int i : idx) {
      if (i <= prev) throw std::invalid_argument("basis: indices must increase");
      if (i < (dim == 8 ? 0 : 1) || i > 7)
        throw std::invalid_argument("basis: index out of range");
      mask |= 1u << i;
      prev = i;
    }
    m.set(mask, rat(1));
    return m;
  }

  static Multivector from_mask(int dim, Mask mask, const Rational& c) {
    Multivector m(dim);
    m.set(mask, c);
    return m;
  }

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mask, Rational>& terms() const { return terms_; }

  Rational coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void set(Mask m, const Rational& c) {
    validate_mask(m);
    if (c == 0)
      terms_.erase(m);
    else
      terms_[m] = c;
  }

  void add_term(Mask m, const Rational& c) {
    validate_mask(m);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // -1 for 0 or inhomogeneous elements.
  int grade() const {
    int g = -1;
    for (auto& [m, c] : terms_) {
      int gm = mask_grade(m);
      if (g == -1)
        g = gm;
      else if (g != gm)
        return -1;
    }
    return g;
  }

  bool is_homogeneous(int k) const {
    for (auto& [m, c] : terms_)
      if (mask_grade(m) != k) return false;
    return true;
  }

  Multivector grade_part(int k) const {
    Multivector r(dim_);
    for (auto& [m, c] : terms_)
      if (mask_grade(m) == k) r.set(m, c);
    return r;
  }

  Multivector operator-() const {
    Multivector r(dim_);
    for (auto& [m, c] : terms_) r.set(m, -c);
    return r;
  }

  Multivector& operator+=(const Multivector& o) {
    require_same_dim(o);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Multivector& operator-=(const Multivector& o) {
    require_same_dim(o);
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  Multivector& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const Rational& c, Multivector a) { return a *= c; }
  friend Multivector operator*(Multivector a, const Rational& c) { return a *= c; }

  bool operator==(const Multivector& o) const {
    return dim_ == o.dim_ && terms_ == o.terms_;
  }

  // Reinterprets an R^7 element as an R^8 element (masks are unchanged).
  Multivector embed8() const {
    if (dim_ == 8) return *this;
    Multivector r(8);
    r.terms_ = terms_;
    return r;
  }

  // Drops any term touching e^0 and reinterprets over R^7.
  Multivector restrict7() const {
    Multivector r(7);
    for (auto& [m, c] : terms_)
      if (!(m & 1u)) r.set(m, c);
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += rat_str(c);
      if (m != 0) {
        s += "*e";
        for (int i = 0; i < 8; ++i)
          if ((m >> i) & 1u) s += static_cast<char>('0' + i);
      }
    }
    return s;
  }

 private:
  static void check_dim(int dim) {
    if (dim != 7 && dim != 8) throw std::invalid_argument("dim must be 7 or 8");
  }
  void validate_mask(Mask m) const {
    if (m > 0xFFu || (dim_ == 7 && (m & 1u)))
      throw std::invalid_argument("mask out of range for dimension");
  }
  void require_same_dim(const Multivector& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  }

  int dim_;
  std::map<Mask, Rational> terms_;
};

inline Multivector wedge(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  Multivector r(a.dim());
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      r.add_term(ma | mb, ca * cb * wedge_sign(ma, mb));
    }
  return r;
}

// Interior product, the adjoint of wedging: <a . b, c> = <b, a ^ c>.
// On monomials e^I . e^J = sign * e^{J\I} when I <= J, with the sign making
// e^I ^ e^{J\I} = sign * e^J. Note (u ^ v) . w = v . (u . w).
inline Multivector contract(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("contract: dimension mismatch");
  int ga = a.grade(), gb = b.grade();
  if (ga >= 0 && gb >= 0 && ga > gb)
    throw std::invalid_argument("contract: grade(a) > grade(b)");
  Multivector r(a.dim());
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) {
      if ((ma & mb) != ma) continue;
      Mask rest = mb & ~ma;
      r.add_term(rest, ca * cb * wedge_sign(ma, rest));
    }
  return r;
}

inline Rational inner(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
  Rational s = 0;
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& big = a.terms().size() <= b.terms().size() ? b : a;
  for (auto& [m, c] : small.terms()) s += c * big.coeff(m);
  return s;
}

inline Mask volume_mask(int dim) { return dim == 8 ? 0xFFu : 0xFEu; }

// Euclidean Hodge star with orientation e^{1...7} resp. e^{0...7}.
inline Multivector hodge(const Multivector& a) {
  Mask vol = volume_mask(a.dim());
  Multivector r(a.dim());
  for (auto& [m, c] : a.terms()) {
    Mask comp = vol & ~m;
    r.add_term(comp, c * wedge_sign(m, comp));
  }
  return r;
}

// The canonical G2 3-form, Spin(7) 4-form and friends. Construct-once caches;
// values are immutable after construction.
inline const Multivector& phi7() {
  static const Multivector phi = [] {
    Multivector p(7);
    p += Multivector::basis(7, {1, 2, 7});
    p += Multivector::basis(7, {3, 4, 7});
    p += Multivector::basis(7, {5, 6, 7});
    p += Multivector::basis(7, {1, 4, 5});
    p += Multivector::basis(7, {1, 3, 6});
    p += Multivector::basis(7, {2, 3, 5});
    p -= Multivector::basis(7, {2, 4, 6});
    return p;
  }();
  return phi;
}

inline const Multivector& psi7() {
  static const Multivector psi = hodge(phi7());
  return psi;
}

inline const Multivector& vol7() {
  static const Multivector v = Multivector::from_mask(7, volume_mask(7), rat(1));
  return v;
}

inline const Multivector& vol8() {
  static const Multivector v = Multivector::from_mask(8, volume_mask(8), rat(1));
  return v;
}

inline const Multivector& e0() {
  static const Multivector e = Multivector::basis(8, {0});
  return e;
}

// Phi = e^0 ^ phi + psi, the Spin(7) 4-form on R^8.
inline const Multivector& Phi8() {
  static const Multivector P = wedge(e0(), phi7().embed8()) + psi7().embed8();
  return P;
}

// Totally antisymmetric structure constants of phi and psi, indices 1..7.
struct StructureConstants {
  std::array<std::array<std::array<Rational, 8>, 8>, 8> phi{};
  std::array<std::array<std::array<std::array<Rational, 8>, 8>, 8>, 8> psi{};
};

inline const StructureConstants& structure_constants() {
  static const StructureConstants sc = [] {
    StructureConstants s;
    for (int a = 1; a <= 7; ++a)
      for (int b = 1; b <= 7; ++b)
        for (int c = 1; c <= 7; ++c) {
          if (a == b || b == c || a == c) continue;
          Multivector m = wedge(wedge(Multivector::basis(7, {a}), Multivector::basis(7, {b})),
                                Multivector::basis(7, {c}));
          s.phi[a][b][c] = inner(m, phi7());
        }
    for (int a = 1; a <= 7; ++a)
      for (int b = 1; b <= 7; ++b)
        for (int c = 1; c <= 7; ++c)
          for (int d = 1; d <= 7; ++d) {
            if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
            Multivector m = wedge(
                wedge(Multivector::basis(7, {a}), Multivector::basis(7, {b})),
                wedge(Multivector::basis(7, {c}), Multivector::basis(7, {d})));
            s.psi[a][b][c][d] = inner(m, psi7());
          }
    return s;
  }();
  return sc;
}

inline Rational phi_abc(int a, int b, int c) { return structure_constants().phi[a][b][c]; }
inline Rational psi_abcd(int a, int b, int c, int d) {
  return structure_constants().psi[a][b][c][d];
}

}  // namespace spin7spec
