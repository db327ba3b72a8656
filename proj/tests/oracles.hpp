#pragma once

// Brute-force reference implementations, written against the raw tables only.

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace oracle {

using Mask = std::vector<bool>;

struct Tables {
  std::size_t n;
  std::vector<std::uint32_t> add, mul;
  std::uint32_t zero, one;

  explicit Tables(const ringlab::FiniteRing& R)
      : n(R.order()),
        add(R.add_table().begin(), R.add_table().end()),
        mul(R.mul_table().begin(), R.mul_table().end()),
        zero(R.zero().value),
        one(R.one().value) {}

  std::uint32_t plus(std::uint32_t a, std::uint32_t b) const { return add[a * n + b]; }
  std::uint32_t times(std::uint32_t a, std::uint32_t b) const { return mul[a * n + b]; }
  std::uint32_t neg(std::uint32_t a) const {
    for (std::uint32_t b = 0; b < n; ++b)
      if (plus(a, b) == zero) return b;
    return zero;
  }
  std::uint32_t minus(std::uint32_t a, std::uint32_t b) const { return plus(a, neg(b)); }
};

inline Mask from(const ringlab::ElementSet& s) {
  Mask m(s.ring_order());
  for (auto a : s.members()) m[a.index()] = true;
  return m;
}

/// Presets of order at most 16, small enough for subset enumeration.
inline const std::vector<std::string>& small_presets() {
  static const std::vector<std::string> v{
      "zmod:1", "zmod:2", "zmod:3", "zmod:4", "zmod:5", "zmod:6", "zmod:8", "zmod:9", "zmod:12",
      "product:[zmod:2,zmod:2]", "product:[zmod:2,zmod:3]", "product:[zmod:2,zmod:2,zmod:2]",
      "product:[zmod:2,zmod:4]", "mat:2:zmod:2", "tri:2:zmod:2", "cdtri:2:zmod:2", "cdtri:2:zmod:3",
      "cdtri:3:zmod:2", "dorroh:[zmod:2]", "dorroh:[zmod:4]", "dorroh:[zmod:4,zmod:2]",
      "dorroh:[zmod:3,zmod:3]", "quot:[tri:2:zmod:2,delta]", "quot:[zmod:8,{0,4}]"};
  return v;
}

inline bool is_unit(const Tables& T, std::uint32_t a) {
  for (std::uint32_t b = 0; b < T.n; ++b)
    if (T.times(a, b) == T.one && T.times(b, a) == T.one) return true;
  return false;
}

inline Mask units(const Tables& T) {
  Mask m(T.n);
  for (std::uint32_t a = 0; a < T.n; ++a) m[a] = is_unit(T, a);
  return m;
}

inline Mask idempotents(const Tables& T) {
  Mask m(T.n);
  for (std::uint32_t a = 0; a < T.n; ++a) m[a] = T.times(a, a) == a;
  return m;
}

inline Mask nilpotents(const Tables& T) {
  Mask m(T.n);
  for (std::uint32_t a = 0; a < T.n; ++a) {
    std::uint32_t p = a;
    for (std::size_t k = 0; k <= T.n && p != T.zero; ++k) p = T.times(p, a);
    m[a] = p == T.zero;
  }
  return m;
}

inline Mask comm(const Tables& T, std::uint32_t a) {
  Mask m(T.n);
  for (std::uint32_t x = 0; x < T.n; ++x) m[x] = T.times(a, x) == T.times(x, a);
  return m;
}

inline Mask comm2(const Tables& T, std::uint32_t a) {
  const Mask c = comm(T, a);
  Mask m(T.n);
  for (std::uint32_t y = 0; y < T.n; ++y) {
    bool ok = true;
    for (std::uint32_t x = 0; x < T.n && ok; ++x)
      if (c[x] && T.times(x, y) != T.times(y, x)) ok = false;
    m[y] = ok;
  }
  return m;
}

inline std::size_t count(const Mask& m) {
  std::size_t c = 0;
  for (bool b : m) c += b;
  return c;
}

inline bool subset(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

inline Mask meet(const Mask& a, const Mask& b) {
  Mask m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] && b[i];
  return m;
}

inline std::vector<std::uint32_t> indices(const Mask& m) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

inline bool closed_right(const Tables& T, const Mask& s) {
  if (!s[T.zero]) return false;
  for (std::uint32_t a = 0; a < T.n; ++a) {
    if (!s[a]) continue;
    for (std::uint32_t b = 0; b < T.n; ++b) {
      if (s[b] && !s[T.plus(a, b)]) return false;
      if (!s[T.times(a, b)]) return false;
    }
  }
  return true;
}

inline bool closed_two_sided(const Tables& T, const Mask& s) {
  if (!closed_right(T, s)) return false;
  for (std::uint32_t a = 0; a < T.n; ++a)
    if (s[a])
      for (std::uint32_t r = 0; r < T.n; ++r)
        if (!s[T.times(r, a)]) return false;
  return true;
}

/// Every subset, tested directly. Only for n <= 16.
inline std::vector<Mask> right_ideals(const Tables& T, bool two_sided = false) {
  std::vector<Mask> out;
  for (std::uint32_t bits = 0; bits < (1u << T.n); ++bits) {
    if (!(bits >> T.zero & 1u)) continue;
    Mask s(T.n);
    for (std::uint32_t i = 0; i < T.n; ++i) s[i] = bits >> i & 1u;
    if (two_sided ? closed_two_sided(T, s) : closed_right(T, s)) out.push_back(s);
  }
  return out;
}

inline bool essential(const std::vector<Mask>& ideals, const Mask& K) {
  for (const auto& I : ideals)
    if (count(I) > 1 && count(meet(I, K)) == 1) return false;
  return true;
}

inline std::vector<Mask> maximal(const std::vector<Mask>& ideals) {
  std::vector<Mask> out;
  const std::size_t n = ideals.front().size();
  for (const auto& M : ideals) {
    if (count(M) == n) continue;
    bool top = true;
    for (const auto& N : ideals)
      if (count(N) != n && count(N) > count(M) && subset(M, N)) top = false;
    if (top) out.push_back(M);
  }
  return out;
}

inline Mask intersection(std::size_t n, const std::vector<Mask>& family) {
  Mask m(n, true);
  for (const auto& s : family) m = meet(m, s);
  return m;
}

inline Mask jacobson(const std::vector<Mask>& ideals) {
  return intersection(ideals.front().size(), maximal(ideals));
}

/// Intersection of the essential maximal right ideals (R when there are none).
inline Mask delta(const std::vector<Mask>& ideals) {
  std::vector<Mask> ess;
  for (const auto& M : maximal(ideals))
    if (essential(ideals, M)) ess.push_back(M);
  return intersection(ideals.front().size(), ess);
}

/// Smallest right ideal containing every minimal nonzero right ideal.
inline Mask socle(const std::vector<Mask>& ideals) {
  const std::size_t n = ideals.front().size();
  std::vector<Mask> minimal;
  for (const auto& I : ideals) {
    if (count(I) == 1) continue;
    bool bottom = true;
    for (const auto& J : ideals)
      if (count(J) > 1 && count(J) < count(I) && subset(J, I)) bottom = false;
    if (bottom) minimal.push_back(I);
  }
  Mask best(n, true);
  for (const auto& I : ideals) {
    bool covers = true;
    for (const auto& m : minimal) covers = covers && subset(m, I);
    if (covers && count(I) < count(best)) best = I;
  }
  return best;
}

/// a is delta-quasipolar: some idempotent p in comm^2(a) with a+p in delta.
inline bool delta_quasipolar(const Tables& T, const Mask& delta_mask, std::uint32_t a) {
  const Mask c2 = comm2(T, a);
  for (std::uint32_t p = 0; p < T.n; ++p)
    if (c2[p] && T.times(p, p) == p && delta_mask[T.plus(a, p)]) return true;
  return false;
}

inline bool local(const Tables& T) {
  const Mask u = units(T);
  for (std::uint32_t a = 0; a < T.n; ++a)
    for (std::uint32_t b = 0; b < T.n; ++b)
      if (!u[a] && !u[b] && u[T.plus(a, b)]) return false;
  return T.n > 1;
}

}  // namespace oracle
