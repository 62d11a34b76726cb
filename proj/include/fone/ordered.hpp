#pragma once

#include "fone/rep.hpp"

namespace fone {

// The natural partial order: B extends A as a partial map.
bool natural_leq(const SubmonomialMatrix& a, const SubmonomialMatrix& b);

// Union of compatible column assignments, when it is submonomial.
std::optional<SubmonomialMatrix> join_matrices(
    const std::vector<SubmonomialMatrix>& mats);
// Columns on which all arguments agree. Total on nonempty input.
SubmonomialMatrix meet_matrices(const std::vector<SubmonomialMatrix>& mats);

// A monoid with a compatible partial order on its elements. For symmetric
// inverse monoids the order is computed from the matrix model; otherwise it
// is supplied as a relation and closed reflexively and transitively.
class OrderedMonoid {
 public:
  static OrderedMonoid natural(const GLinearMonoid& m);
  static OrderedMonoid from_pairs(
      const GLinearMonoid& m,
      const std::vector<std::pair<MonoidElement, MonoidElement>>& pairs);

  const GLinearMonoid& monoid() const { return *m_; }
  const std::shared_ptr<const GLinearMonoid>& monoid_ptr() const { return m_; }

  bool leq(const MonoidElement& a, const MonoidElement& b) const;
  // Least upper / greatest lower bound in the poset, when they exist.
  std::optional<MonoidElement> join(const std::vector<MonoidElement>& xs) const;
  std::optional<MonoidElement> meet(const std::vector<MonoidElement>& xs) const;

  struct JoinableEnum {
    // Nonempty subsets together with their joins.
    std::vector<std::pair<std::vector<MonoidElement>, MonoidElement>> subsets;
    bool complete = true;
  };
  JoinableEnum joinable_subsets(size_t down_cap = 20) const;

 private:
  std::shared_ptr<const GLinearMonoid> m_;
  std::vector<std::vector<bool>> leq_;  // indexed by element encodings
};

struct OrderedVerdict {
  bool ok = true;
  bool complete = true;
  std::string witness;
};
// Checks the minimality of zero and distributivity of multiplication over
// the joins and meets within the enumeration caps.
OrderedVerdict validate_ordered(const OrderedMonoid& om, const Caps& caps = {});

// All sets of nonzero pairwise-orthogonal elements whose join is 1.
std::vector<std::vector<MonoidElement>> complete_orthogonal_systems(
    const OrderedMonoid& om);

struct JoinCheck {
  bool holds = true;
  bool complete = true;
  std::string witness;
};
// Whether the representation carries joins of elements to joins of matrices.
JoinCheck respects_joins(const Representation& v, const OrderedMonoid& om,
                         const Caps& caps = {});

}  // namespace fone
