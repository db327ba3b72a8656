#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Mixed-radix codec. Digit 0 is the most significant; the last digit varies fastest.
class MixedRadix {
 public:
  explicit MixedRadix(std::vector<std::size_t> radices) : radices_(std::move(radices)) {}

  std::size_t size() const {
    std::size_t n = 1;
    for (auto r : radices_) n *= r;
    return n;
  }

  std::size_t encode(const std::vector<std::uint32_t>& digits) const {
    std::size_t code = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) code = code * radices_[i] + digits[i];
    return code;
  }

  std::vector<std::uint32_t> decode(std::size_t code) const {
    std::vector<std::uint32_t> digits(radices_.size());
    for (std::size_t i = radices_.size(); i-- > 0;) {
      digits[i] = static_cast<std::uint32_t>(code % radices_[i]);
      code /= radices_[i];
    }
    return digits;
  }

 private:
  std::vector<std::size_t> radices_;
};

namespace detail {

/// base^exponent, or nullopt if the result would exceed `cap`.
inline std::optional<std::size_t> capped_power(std::size_t base, std::size_t exponent, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > cap / base) return std::nullopt;
    r *= base;
  }
  return r > cap ? std::nullopt : std::optional<std::size_t>(r);
}

inline void require_within_cap(std::optional<std::size_t> order, const std::string& what) {
  if (!order) {
    std::ostringstream msg;
    msg << what << " exceeds the size cap of " << size_cap() << " elements";
    throw SizeCapError(msg.str());
  }
}

/// Builds a ring over a list of decoded element representations.
template <typename Add, typename Mul>
FiniteRing tabulate(std::string name, std::size_t order, Add&& add, Mul&& mul, ElementId zero, ElementId one,
                    std::vector<std::string> labels) {
  FiniteRing::Table at(order * order), mt(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      at[a * order + b] = static_cast<std::uint32_t>(add(a, b));
      mt[a * order + b] = static_cast<std::uint32_t>(mul(a, b));
    }
  return FiniteRing(std::move(name), order, std::move(at), std::move(mt), zero, one, std::move(labels));
}

inline std::string join_labels(const FiniteRing& base, const std::vector<std::uint32_t>& digits) {
  std::string s = "(";
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) s += ",";
    s += base.label(ElementId(digits[i]));
  }
  return s + ")";
}

/// Square matrices over `base` given as full k*k row-major entry vectors.
inline std::vector<std::uint32_t> matmul(const FiniteRing& base, std::size_t k, const std::vector<std::uint32_t>& x,
                                         const std::vector<std::uint32_t>& y) {
  std::vector<std::uint32_t> out(k * k, base.zero().value);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      ElementId acc = base.zero();
      for (std::size_t t = 0; t < k; ++t)
        acc = base.add(acc, base.mul(ElementId(x[i * k + t]), ElementId(y[t * k + j])));
      out[i * k + j] = acc.value;
    }
  return out;
}

inline std::vector<std::uint32_t> matadd(const FiniteRing& base, const std::vector<std::uint32_t>& x,
                                         const std::vector<std::uint32_t>& y) {
  std::vector<std::uint32_t> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = base.add(ElementId(x[i]), ElementId(y[i])).value;
  return out;
}

inline std::string matrix_label(const FiniteRing& base, std::size_t k, const std::vector<std::uint32_t>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < k; ++i) {
    if (i) s += ";";
    for (std::size_t j = 0; j < k; ++j) {
      if (j) s += ",";
      s += base.label(ElementId(m[i * k + j]));
    }
  }
  return s + "]";
}

/// Ring of k x k matrices over `base` restricted to the entry slots listed in
/// `slots` (row-major full-matrix positions). `expand` maps stored digits to a
/// full matrix; `compress` maps a full matrix back to digits.
template <typename Expand, typename Compress>
FiniteRing structured_matrix_ring(std::string name, const FiniteRing& base, std::size_t k, std::size_t digits,
                                  Expand&& expand, Compress&& compress) {
  const auto order = capped_power(base.order(), digits, size_cap());
  require_within_cap(order, name);
  MixedRadix codec(std::vector<std::size_t>(digits, base.order()));
  std::vector<std::vector<std::uint32_t>> full(*order);
  std::vector<std::string> labels(*order);
  for (std::size_t c = 0; c < *order; ++c) {
    full[c] = expand(codec.decode(c));
    labels[c] = matrix_label(base, k, full[c]);
  }
  auto encode = [&](const std::vector<std::uint32_t>& m) { return codec.encode(compress(m)); };
  std::vector<std::uint32_t> zero(k * k, base.zero().value), one = zero;
  for (std::size_t i = 0; i < k; ++i) one[i * k + i] = base.one().value;
  return tabulate(
      std::move(name), *order, [&](std::size_t a, std::size_t b) { return encode(matadd(base, full[a], full[b])); },
      [&](std::size_t a, std::size_t b) { return encode(matmul(base, k, full[a], full[b])); },
      ElementId(encode(zero)), ElementId(encode(one)), std::move(labels));
}

}  // namespace detail

/// The integers modulo n; element i is the residue i.
inline FiniteRing build_zmod(std::size_t n) {
  if (n == 0) throw UsageError("zmod: modulus must be positive");
  if (n > size_cap()) detail::require_within_cap(std::nullopt, "Z" + std::to_string(n));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return detail::tabulate(
      "Z" + std::to_string(n), n, [n](std::size_t a, std::size_t b) { return (a + b) % n; },
      [n](std::size_t a, std::size_t b) { return (a * b) % n; }, ElementId(0), ElementId(1 % n), std::move(labels));
}

/// Direct product; element index is the mixed-radix code of the component indices.
inline FiniteRing build_product(const std::vector<FiniteRing>& factors) {
  if (factors.empty()) throw UsageError("product: need at least one factor");
  std::vector<std::size_t> radices;
  std::string name;
  std::size_t order = 1;
  for (const auto& f : factors) {
    if (f.order() > size_cap() / order) detail::require_within_cap(std::nullopt, "product");
    order *= f.order();
    radices.push_back(f.order());
    if (!name.empty()) name += " x ";
    name += f.name();
  }
  if (factors.size() == 1) {
    const auto& f = factors.front();
    return FiniteRing(f.name(), f.order(), f.add_table(), f.mul_table(), f.zero(), f.one(), f.labels());
  }
  MixedRadix codec(radices);
  std::vector<std::vector<std::uint32_t>> digits(order);
  std::vector<std::string> labels(order);
  for (std::size_t c = 0; c < order; ++c) {
    digits[c] = codec.decode(c);
    std::string s = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += ",";
      s += factors[i].label(ElementId(digits[c][i]));
    }
    labels[c] = s + ")";
  }
  auto componentwise = [&](bool multiply) {
    return [&, multiply](std::size_t a, std::size_t b) {
      std::vector<std::uint32_t> d(factors.size());
      for (std::size_t i = 0; i < factors.size(); ++i) {
        ElementId x(digits[a][i]), y(digits[b][i]);
        d[i] = (multiply ? factors[i].mul(x, y) : factors[i].add(x, y)).value;
      }
      return codec.encode(d);
    };
  };
  std::vector<std::uint32_t> zero, one;
  for (const auto& f : factors) {
    zero.push_back(f.zero().value);
    one.push_back(f.one().value);
  }
  return detail::tabulate(name, order, componentwise(false), componentwise(true), ElementId(codec.encode(zero)),
                          ElementId(codec.encode(one)), std::move(labels));
}

/// Full k x k matrix ring; entries row-major, base |R|.
inline FiniteRing build_matrix_ring(const FiniteRing& R, std::size_t k) {
  if (k == 0) throw UsageError("matrix ring: size must be positive");
  const std::string name = "Mat" + std::to_string(k) + "(" + R.name() + ")";
  if (k == 1)
    return FiniteRing(name, R.order(), R.add_table(), R.mul_table(), R.zero(), R.one(), R.labels());
  return detail::structured_matrix_ring(
      name, R, k, k * k, [](const std::vector<std::uint32_t>& d) { return d; },
      [](const std::vector<std::uint32_t>& m) { return m; });
}

/// Upper triangular k x k matrices; stored entries (i <= j) row-major.
inline FiniteRing build_upper_triangular(const FiniteRing& R, std::size_t k) {
  if (k == 0) throw UsageError("triangular ring: size must be positive");
  const std::string name = "T" + std::to_string(k) + "(" + R.name() + ")";
  if (k == 1)
    return FiniteRing(name, R.order(), R.add_table(), R.mul_table(), R.zero(), R.one(), R.labels());
  const auto zero = R.zero().value;
  return detail::structured_matrix_ring(
      name, R, k, k * (k + 1) / 2,
      [k, zero](const std::vector<std::uint32_t>& d) {
        std::vector<std::uint32_t> m(k * k, zero);
        std::size_t t = 0;
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = i; j < k; ++j) m[i * k + j] = d[t++];
        return m;
      },
      [k](const std::vector<std::uint32_t>& m) {
        std::vector<std::uint32_t> d;
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = i; j < k; ++j) d.push_back(m[i * k + j]);
        return d;
      });
}

/// Upper triangular matrices with a constant diagonal; digits are the diagonal
/// value followed by the strictly upper entries row-major.
inline FiniteRing build_constant_diagonal_triangular(const FiniteRing& R, std::size_t k) {
  if (k == 0) throw UsageError("constant-diagonal ring: size must be positive");
  const std::string name = "CT" + std::to_string(k) + "(" + R.name() + ")";
  if (k == 1)
    return FiniteRing(name, R.order(), R.add_table(), R.mul_table(), R.zero(), R.one(), R.labels());
  const auto zero = R.zero().value;
  return detail::structured_matrix_ring(
      name, R, k, 1 + k * (k - 1) / 2,
      [k, zero](const std::vector<std::uint32_t>& d) {
        std::vector<std::uint32_t> m(k * k, zero);
        for (std::size_t i = 0; i < k; ++i) m[i * k + i] = d[0];
        std::size_t t = 1;
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = i + 1; j < k; ++j) m[i * k + j] = d[t++];
        return m;
      },
      [k](const std::vector<std::uint32_t>& m) {
        std::vector<std::uint32_t> d{m[0]};
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = i + 1; j < k; ++j) d.push_back(m[i * k + j]);
        return d;
      });
}

/// Input to the Dorroh extension: a base ring, a ring V and the two actions of
/// the base on V. Action tables are indexed r*|V|+v (left) and v*|R|+r (right).
struct DorrohData {
  FiniteRing base;
  FiniteRing bimodule;
  FiniteRing::Table left_action;
  FiniteRing::Table right_action;

  ElementId left(ElementId r, ElementId v) const { return ElementId(left_action[r.index() * bimodule.order() + v.index()]); }
  ElementId right(ElementId v, ElementId r) const { return ElementId(right_action[v.index() * base.order() + r.index()]); }
};

/// V = R acting on itself by multiplication.
inline DorrohData regular_dorroh_data(const FiniteRing& R) {
  return {R, R, R.mul_table(), R.mul_table()};
}

/// V a ring of characteristic dividing n, acted on by Z_n through integer multiples.
inline DorrohData zmod_scalar_dorroh_data(std::size_t n, const FiniteRing& V) {
  FiniteRing base = build_zmod(n);
  FiniteRing::Table left(n * V.order()), right(V.order() * n);
  for (auto v : V.elements()) {
    ElementId acc = V.zero();
    for (std::size_t r = 0; r < n; ++r) {
      left[r * V.order() + v.index()] = acc.value;
      right[v.index() * n + r] = acc.value;
      acc = V.add(acc, v);
    }
    if (acc != V.zero()) throw UsageError("dorroh: characteristic of " + V.name() + " does not divide " + std::to_string(n));
  }
  return {base, V, std::move(left), std::move(right)};
}

/// Every bimodule and compatibility law violated by `data`, first witness per law.
inline std::vector<AxiomViolation> dorroh_violations(const DorrohData& data) {
  const FiniteRing& R = data.base;
  const FiniteRing& V = data.bimodule;
  std::vector<AxiomViolation> out;
  if (data.left_action.size() != R.order() * V.order() || data.right_action.size() != V.order() * R.order()) {
    out.push_back({"action table shape", {}});
    return out;
  }
  for (auto v : data.left_action)
    if (v >= V.order()) {
      out.push_back({"action table entry out of range", {}});
      return out;
    }
  for (auto v : data.right_action)
    if (v >= V.order()) {
      out.push_back({"action table entry out of range", {}});
      return out;
    }
  for (auto& v : verify_axioms(V, AxiomScope::without_identity)) out.push_back({"bimodule ring: " + v.axiom, v.witnesses});

  // Triples are reported as (r, s, v) or (v, w, r) in the order the law names them.
  auto scan_rrv = [&](const std::string& law, auto&& ok) {
    for (auto r : R.elements())
      for (auto s : R.elements())
        for (auto v : V.elements())
          if (!ok(r, s, v)) {
            out.push_back({law, {r, s, v}});
            return;
          }
  };
  auto scan_vvr = [&](const std::string& law, auto&& ok) {
    for (auto v : V.elements())
      for (auto w : V.elements())
        for (auto r : R.elements())
          if (!ok(v, w, r)) {
            out.push_back({law, {v, w, r}});
            return;
          }
  };
  for (auto v : V.elements())
    if (data.left(R.one(), v) != v || data.right(v, R.one()) != v) {
      out.push_back({"unital action 1v = v = v1", {v}});
      break;
    }
  scan_rrv("(r+s)v = rv+sv", [&](auto r, auto s, auto v) {
    return data.left(R.add(r, s), v) == V.add(data.left(r, v), data.left(s, v));
  });
  scan_rrv("v(r+s) = vr+vs", [&](auto r, auto s, auto v) {
    return data.right(v, R.add(r, s)) == V.add(data.right(v, r), data.right(v, s));
  });
  scan_rrv("(rs)v = r(sv)", [&](auto r, auto s, auto v) {
    return data.left(R.mul(r, s), v) == data.left(r, data.left(s, v));
  });
  scan_rrv("v(rs) = (vr)s", [&](auto r, auto s, auto v) {
    return data.right(v, R.mul(r, s)) == data.right(data.right(v, r), s);
  });
  scan_rrv("(rv)s = r(vs)", [&](auto r, auto s, auto v) {
    return data.right(data.left(r, v), s) == data.left(r, data.right(v, s));
  });
  scan_vvr("r(v+w) = rv+rw", [&](auto v, auto w, auto r) {
    return data.left(r, V.add(v, w)) == V.add(data.left(r, v), data.left(r, w));
  });
  scan_vvr("(v+w)r = vr+wr", [&](auto v, auto w, auto r) {
    return data.right(V.add(v, w), r) == V.add(data.right(v, r), data.right(w, r));
  });
  scan_vvr("(vw)r = v(wr)", [&](auto v, auto w, auto r) {
    return data.right(V.mul(v, w), r) == V.mul(v, data.right(w, r));
  });
  scan_vvr("(vr)w = v(rw)", [&](auto v, auto w, auto r) {
    return V.mul(data.right(v, r), w) == V.mul(v, data.left(r, w));
  });
  scan_vvr("(rv)w = r(vw)", [&](auto v, auto w, auto r) {
    return V.mul(data.left(r, v), w) == data.left(r, V.mul(v, w));
  });
  return out;
}

/// Ring on pairs (r, v) with (r,v)(s,w) = (rs, rw + vs + vw); index r*|V| + v.
inline FiniteRing build_dorroh(const DorrohData& data) {
  auto violations = dorroh_violations(data);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "dorroh: " << violations.front().axiom << " fails";
    if (!violations.front().witnesses.empty()) {
      msg << " at (";
      for (std::size_t i = 0; i < violations.front().witnesses.size(); ++i)
        msg << (i ? "," : "") << violations.front().witnesses[i].value;
      msg << ")";
    }
    throw RingError(msg.str());
  }
  const FiniteRing& R = data.base;
  const FiniteRing& V = data.bimodule;
  const std::size_t nv = V.order();
  if (R.order() > size_cap() / nv) detail::require_within_cap(std::nullopt, "dorroh extension");
  const std::size_t order = R.order() * nv;
  std::vector<std::string> labels(order);
  for (std::size_t c = 0; c < order; ++c)
    labels[c] = "(" + R.label(ElementId(c / nv)) + "," + V.label(ElementId(c % nv)) + ")";
  const std::string name = "D(" + R.name() + "," + V.name() + ")";
  if (nv == 1)
    return FiniteRing(name, R.order(), R.add_table(), R.mul_table(), R.zero(), R.one(), std::move(labels));
  return detail::tabulate(
      name, order,
      [&](std::size_t a, std::size_t b) {
        ElementId r(a / nv), v(a % nv), s(b / nv), w(b % nv);
        return R.add(r, s).index() * nv + V.add(v, w).index();
      },
      [&](std::size_t a, std::size_t b) {
        ElementId r(a / nv), v(a % nv), s(b / nv), w(b % nv);
        ElementId second = V.add(V.add(data.left(r, w), data.right(v, s)), V.mul(v, w));
        return R.mul(r, s).index() * nv + second.index();
      },
      ElementId(R.zero().index() * nv + V.zero().index()), ElementId(R.one().index() * nv + V.zero().index()),
      std::move(labels));
}

struct QuotientRing {
  FiniteRing ring;
  /// projection[a] is the coset of element a.
  std::vector<ElementId> projection;

  ElementId project(ElementId a) const { return projection[a.index()]; }
};

/// R/I; cosets are ordered by their least member index.
inline QuotientRing build_quotient(const FiniteRing& R, const ElementSet& I, std::string name = {}) {
  if (I.ring_order() != R.order() || !is_two_sided_ideal(R, I))
    throw UsageError("quotient: subset is not a two-sided ideal");
  const std::size_t n = R.order();
  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> coset_of(n, kUnset);
  std::vector<ElementId> reps;
  const auto members = I.members();
  for (auto a : R.elements()) {
    if (coset_of[a.index()] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(a);
    for (auto i : members) coset_of[R.add(a, i).index()] = id;
  }
  const std::size_t m = reps.size();
  std::vector<std::string> labels(m);
  for (std::size_t c = 0; c < m; ++c) labels[c] = R.label(reps[c]) + "+I";
  if (name.empty()) name = R.name() + "/I";
  FiniteRing Q = detail::tabulate(
      std::move(name), m, [&](std::size_t a, std::size_t b) { return coset_of[R.add(reps[a], reps[b]).index()]; },
      [&](std::size_t a, std::size_t b) { return coset_of[R.mul(reps[a], reps[b]).index()]; },
      ElementId(coset_of[R.zero().index()]), ElementId(coset_of[R.one().index()]), std::move(labels));
  std::vector<ElementId> projection(n);
  for (std::size_t a = 0; a < n; ++a) projection[a] = ElementId(coset_of[a]);
  return {std::move(Q), std::move(projection)};
}

/// Image of a subset under a quotient projection, as a subset of the quotient.
inline ElementSet image(const QuotientRing& q, const ElementSet& S) {
  ElementSet out(q.ring.order());
  for (auto a : S.members()) out.insert(q.project(a));
  return out;
}

}  // namespace ringlab
