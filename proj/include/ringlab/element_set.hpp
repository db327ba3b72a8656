#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace ringlab {

/// Index of an element inside a FiniteRing's operation tables.
struct ElementId {
  std::uint32_t value = 0;

  constexpr ElementId() = default;
  constexpr explicit ElementId(std::uint32_t v) : value(v) {}
  constexpr explicit ElementId(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}
  constexpr explicit ElementId(int v) : value(static_cast<std::uint32_t>(v)) {}

  constexpr std::size_t index() const { return value; }

  friend constexpr bool operator==(ElementId, ElementId) = default;
  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

/// A subset of a finite ring, stored as a membership mask.
///
/// Used for ideals, radicals, the socle, commutants and every other
/// element-indexed set the library produces.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t ring_order) : mask_(ring_order, false) {}

  static ElementSet full(std::size_t ring_order) {
    ElementSet s(ring_order);
    s.mask_.assign(ring_order, true);
    s.count_ = ring_order;
    return s;
  }

  static ElementSet of(std::size_t ring_order, std::initializer_list<int> members) {
    ElementSet s(ring_order);
    for (int m : members) s.insert(ElementId(m));
    return s;
  }

  static ElementSet of(std::size_t ring_order, const std::vector<ElementId>& members) {
    ElementSet s(ring_order);
    for (auto m : members) s.insert(m);
    return s;
  }

  std::size_t ring_order() const { return mask_.size(); }
  std::size_t count() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool is_full() const { return count_ == mask_.size(); }

  bool contains(ElementId a) const { return a.index() < mask_.size() && mask_[a.index()]; }

  void insert(ElementId a) {
    check_index(a);
    if (!mask_[a.index()]) {
      mask_[a.index()] = true;
      ++count_;
    }
  }

  void erase(ElementId a) {
    check_index(a);
    if (mask_[a.index()]) {
      mask_[a.index()] = false;
      --count_;
    }
  }

  std::vector<ElementId> members() const {
    std::vector<ElementId> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < mask_.size(); ++i)
      if (mask_[i]) out.emplace_back(i);
    return out;
  }

  std::vector<std::uint32_t> indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < mask_.size(); ++i)
      if (mask_[i]) out.push_back(static_cast<std::uint32_t>(i));
    return out;
  }

  bool is_subset_of(const ElementSet& other) const {
    check_same(other);
    if (count_ > other.count_) return false;
    for (std::size_t i = 0; i < mask_.size(); ++i)
      if (mask_[i] && !other.mask_[i]) return false;
    return true;
  }

  ElementSet complement() const {
    ElementSet out(mask_.size());
    for (std::size_t i = 0; i < mask_.size(); ++i)
      if (!mask_[i]) out.insert(ElementId(i));
    return out;
  }

  const std::vector<bool>& mask() const { return mask_; }

  friend ElementSet operator|(const ElementSet& a, const ElementSet& b) {
    a.check_same(b);
    ElementSet out = a;
    for (std::size_t i = 0; i < b.mask_.size(); ++i)
      if (b.mask_[i]) out.insert(ElementId(i));
    return out;
  }

  friend ElementSet operator&(const ElementSet& a, const ElementSet& b) {
    a.check_same(b);
    ElementSet out(a.mask_.size());
    for (std::size_t i = 0; i < a.mask_.size(); ++i)
      if (a.mask_[i] && b.mask_[i]) out.insert(ElementId(i));
    return out;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.mask_ == b.mask_; }

  /// Canonical lattice order: by cardinality, then lexicographically by mask.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b) {
    if (a.count_ != b.count_) return a.count_ < b.count_;
    return a.mask_ < b.mask_;
  }

 private:
  void check_index(ElementId a) const {
    if (a.index() >= mask_.size()) throw std::out_of_range("element index outside ring");
  }
  void check_same(const ElementSet& other) const {
    if (other.mask_.size() != mask_.size())
      throw std::invalid_argument("element sets belong to rings of different order");
  }

  std::vector<bool> mask_;
  std::size_t count_ = 0;
};

}  // namespace ringlab
