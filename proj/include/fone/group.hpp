#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fone/base.hpp"

namespace fone {

// A group element is a residue vector, one entry per cyclic factor.
using GroupElement = std::vector<uint32_t>;

// Finite abelian group G = Z/m1 x ... x Z/mk, written multiplicatively.
// The empty product is the trivial group (scalars over F1). The pointed
// scalar system adjoins an absorbing zero, which the matrix layer encodes
// as an absent entry rather than as a group element.
class PointedGroup {
 public:
  PointedGroup() = default;
  explicit PointedGroup(std::vector<uint32_t> orders);

  const std::vector<uint32_t>& cyclic_orders() const { return orders_; }
  size_t factor_count() const { return orders_.size(); }
  uint64_t order() const { return order_; }
  bool trivial() const { return order_ == 1; }

  GroupElement one() const { return GroupElement(orders_.size(), 0); }
  bool is_one(const GroupElement& g) const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  GroupElement pow(const GroupElement& a, uint64_t k) const;

  // Mixed-radix index, used for canonical element orderings.
  uint64_t index_of(const GroupElement& g) const;
  GroupElement element_at(uint64_t index) const;
  std::vector<GroupElement> elements() const;

  bool valid_element(const GroupElement& g) const;
  void check_element(const GroupElement& g) const;

  std::string show(const GroupElement& g) const;

  bool operator==(const PointedGroup& other) const {
    return orders_ == other.orders_;
  }
  bool operator!=(const PointedGroup& other) const { return !(*this == other); }

 private:
  std::vector<uint32_t> orders_;
  uint64_t order_ = 1;
};

}  // namespace fone
