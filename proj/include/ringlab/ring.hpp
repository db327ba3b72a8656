#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ranges>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/element_set.hpp"

namespace ringlab {

/// Base class for every error raised by the library.
class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor would produce a ring larger than the configured cap.
class SizeCapError : public RingError {
 public:
  using RingError::RingError;
};

/// Caller passed an argument outside an operation's contract.
class UsageError : public RingError {
 public:
  using RingError::RingError;
};

/// Two routes that must agree produced different answers.
class ComputationFault : public RingError {
 public:
  using RingError::RingError;
};

inline constexpr std::size_t kDefaultSizeCap = 4096;

/// Largest ring order constructors will build. RINGLAB_SIZE_CAP overrides.
inline std::size_t size_cap() {
  if (const char* env = std::getenv("RINGLAB_SIZE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultSizeCap;
}

/// A finite unital ring given by complete addition and multiplication tables.
///
/// Elements are the indices 0..order-1. The object is immutable once built.
/// The constructor only checks table shape and index ranges; use
/// verify_axioms() for the ring laws.
class FiniteRing {
 public:
  using Table = std::vector<std::uint32_t>;

  FiniteRing(std::string name, std::size_t order, Table add, Table mul, ElementId zero, ElementId one,
             std::vector<std::string> labels = {})
      : name_(std::move(name)),
        order_(order),
        add_(std::move(add)),
        mul_(std::move(mul)),
        zero_(zero),
        one_(one),
        labels_(std::move(labels)) {
    if (order_ == 0) throw RingError("ring order must be positive");
    if (add_.size() != order_ * order_ || mul_.size() != order_ * order_)
      throw RingError("operation tables must be order x order");
    if (zero_.index() >= order_ || one_.index() >= order_) throw RingError("zero/one index out of range");
    for (auto v : add_)
      if (v >= order_) throw RingError("addition table entry out of range");
    for (auto v : mul_)
      if (v >= order_) throw RingError("multiplication table entry out of range");
    if (!labels_.empty() && labels_.size() != order_) throw RingError("labels must cover every element");
    build_derived_tables();
  }

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  ElementId zero() const { return zero_; }
  ElementId one() const { return one_; }
  bool is_trivial() const { return order_ == 1; }

  const Table& add_table() const { return add_; }
  const Table& mul_table() const { return mul_; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::string label(ElementId a) const {
    return labels_.empty() ? std::to_string(a.value) : labels_[a.index()];
  }

  auto elements() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(order_)) |
           std::views::transform([](std::uint32_t i) { return ElementId(i); });
  }

  ElementId add(ElementId a, ElementId b) const { return ElementId(add_[a.index() * order_ + b.index()]); }
  ElementId mul(ElementId a, ElementId b) const { return ElementId(mul_[a.index() * order_ + b.index()]); }

  /// Additive inverse. Rings that fail the group axioms map unsolvable entries to zero.
  ElementId neg(ElementId a) const { return ElementId(neg_[a.index()]); }
  ElementId sub(ElementId a, ElementId b) const { return add(a, neg(b)); }

  ElementId pow(ElementId a, std::size_t k) const {
    ElementId r = one_;
    for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  bool is_unit(ElementId a) const { return inv_[a.index()] != kNone; }

  std::optional<ElementId> inverse(ElementId a) const {
    if (!is_unit(a)) return std::nullopt;
    return ElementId(inv_[a.index()]);
  }

  bool is_idempotent(ElementId a) const { return mul(a, a) == a; }

  bool commute(ElementId a, ElementId b) const { return mul(a, b) == mul(b, a); }

  /// 1 + 1.
  ElementId two() const { return add(one_, one_); }

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.order_ == b.order_ && a.zero_ == b.zero_ && a.one_ == b.one_ && a.add_ == b.add_ && a.mul_ == b.mul_;
  }

  /// Same tables, ignoring names and labels.
  bool same_tables(const FiniteRing& other) const { return *this == other; }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  void build_derived_tables() {
    neg_.assign(order_, zero_.value);
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b)
        if (add_[a * order_ + b] == zero_.value) {
          neg_[a] = static_cast<std::uint32_t>(b);
          break;
        }
    inv_.assign(order_, kNone);
    for (std::size_t a = 0; a < order_; ++a) {
      if (inv_[a] != kNone) continue;
      for (std::size_t b = 0; b < order_; ++b) {
        if (mul_[a * order_ + b] == one_.value && mul_[b * order_ + a] == one_.value) {
          inv_[a] = static_cast<std::uint32_t>(b);
          inv_[b] = static_cast<std::uint32_t>(a);
          break;
        }
      }
    }
  }

  std::string name_;
  std::size_t order_;
  Table add_;
  Table mul_;
  ElementId zero_;
  ElementId one_;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
};

struct AxiomViolation {
  std::string axiom;
  std::vector<ElementId> witnesses;
};

enum class AxiomScope { with_identity, without_identity };

/// Checks every ring law by exhaustion. Reports the first witness per law;
/// an empty result means the tables define a ring.
inline std::vector<AxiomViolation> verify_axioms(const FiniteRing& R,
                                                 AxiomScope scope = AxiomScope::with_identity) {
  std::vector<AxiomViolation> out;
  const auto n = static_cast<std::uint32_t>(R.order());
  auto first = [&](const std::string& axiom, auto&& pred) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c)
          if (!pred(ElementId(a), ElementId(b), ElementId(c))) {
            out.push_back({axiom, {ElementId(a), ElementId(b), ElementId(c)}});
            return;
          }
  };
  auto first2 = [&](const std::string& axiom, auto&& pred) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        if (!pred(ElementId(a), ElementId(b))) {
          out.push_back({axiom, {ElementId(a), ElementId(b)}});
          return;
        }
  };
  auto first1 = [&](const std::string& axiom, auto&& pred) {
    for (std::uint32_t a = 0; a < n; ++a)
      if (!pred(ElementId(a))) {
        out.push_back({axiom, {ElementId(a)}});
        return;
      }
  };

  const ElementId z = R.zero();
  first1("additive identity", [&](ElementId a) { return R.add(a, z) == a && R.add(z, a) == a; });
  first1("additive inverse", [&](ElementId a) {
    for (std::uint32_t b = 0; b < n; ++b)
      if (R.add(a, ElementId(b)) == z) return true;
    return false;
  });
  first2("additive commutativity", [&](ElementId a, ElementId b) { return R.add(a, b) == R.add(b, a); });
  first("additive associativity",
        [&](ElementId a, ElementId b, ElementId c) { return R.add(R.add(a, b), c) == R.add(a, R.add(b, c)); });
  first("multiplicative associativity",
        [&](ElementId a, ElementId b, ElementId c) { return R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)); });
  first("left distributivity", [&](ElementId a, ElementId b, ElementId c) {
    return R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c));
  });
  first("right distributivity", [&](ElementId a, ElementId b, ElementId c) {
    return R.mul(R.add(a, b), c) == R.add(R.mul(a, c), R.mul(b, c));
  });
  if (scope == AxiomScope::with_identity)
    first1("multiplicative identity",
           [&](ElementId a) { return R.mul(a, R.one()) == a && R.mul(R.one(), a) == a; });
  return out;
}

struct BasicSets {
  ElementSet units;
  ElementSet idempotents;
  ElementSet nilpotents;
};

inline ElementSet units(const FiniteRing& R) {
  ElementSet s(R.order());
  for (auto a : R.elements())
    if (R.is_unit(a)) s.insert(a);
  return s;
}

inline ElementSet idempotents(const FiniteRing& R) {
  ElementSet s(R.order());
  for (auto a : R.elements())
    if (R.is_idempotent(a)) s.insert(a);
  return s;
}

inline bool is_nilpotent(const FiniteRing& R, ElementId a) {
  ElementId p = a;
  for (std::size_t m = 1; m <= R.order(); ++m) {
    if (p == R.zero()) return true;
    p = R.mul(p, a);
  }
  return p == R.zero();
}

inline ElementSet nilpotents(const FiniteRing& R) {
  ElementSet s(R.order());
  for (auto a : R.elements())
    if (is_nilpotent(R, a)) s.insert(a);
  return s;
}

inline BasicSets element_sets(const FiniteRing& R) { return {units(R), idempotents(R), nilpotents(R)}; }

/// Any unital ring with two elements and 0 != 1 is the field with two elements.
inline bool is_zmod2(const FiniteRing& R) { return R.order() == 2 && R.zero() != R.one(); }

/// Contains zero and is closed under addition and additive inverses.
inline bool is_additive_subgroup(const FiniteRing& R, const ElementSet& S) {
  if (S.ring_order() != R.order() || !S.contains(R.zero())) return false;
  const auto members = S.members();
  for (auto a : members) {
    if (!S.contains(R.neg(a))) return false;
    for (auto b : members)
      if (!S.contains(R.add(a, b))) return false;
  }
  return true;
}

inline bool is_right_ideal(const FiniteRing& R, const ElementSet& S) {
  if (!is_additive_subgroup(R, S)) return false;
  for (auto a : S.members())
    for (auto r : R.elements())
      if (!S.contains(R.mul(a, r))) return false;
  return true;
}

inline bool is_two_sided_ideal(const FiniteRing& R, const ElementSet& S) {
  if (!is_right_ideal(R, S)) return false;
  for (auto a : S.members())
    for (auto r : R.elements())
      if (!S.contains(R.mul(r, a))) return false;
  return true;
}

}  // namespace ringlab
