#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "fone/monoid.hpp"

namespace fone {

// A G^-linear representation: one matrix per basis orbit, scalars implicit.
// Functoriality against the monoid table is checked once at construction.
class Representation {
 public:
  Representation() = default;

  static Representation validate(std::shared_ptr<const GLinearMonoid> monoid,
                                 std::vector<SubmonomialMatrix> action);
  static Representation validate(const GLinearMonoid& monoid,
                                 std::vector<SubmonomialMatrix> action);

  const GLinearMonoid& monoid() const { return *monoid_; }
  const std::shared_ptr<const GLinearMonoid>& monoid_ptr() const {
    return monoid_;
  }
  // Scalar group of the action matrices. Coincides with the monoid's group
  // except for monoids over the trivial group, whose representations may take
  // values over any scalars.
  const PointedGroup& matrix_group() const { return mat_group_; }
  uint32_t dim() const { return dim_; }
  const SubmonomialMatrix& matrix(uint32_t basis) const {
    return action_[basis];
  }
  const std::vector<SubmonomialMatrix>& action() const { return action_; }
  SubmonomialMatrix matrix_of(const MonoidElement& x) const;

  bool same_monoid(const Representation& other) const;

 private:
  std::shared_ptr<const GLinearMonoid> monoid_;
  PointedGroup mat_group_;
  uint32_t dim_ = 0;
  std::vector<SubmonomialMatrix> action_;
};

// Smallest action-closed coordinate set containing `coords` (0-based).
std::vector<uint32_t> sub_generated(const Representation& v,
                                    const std::vector<uint32_t>& coords);
bool is_action_closed(const Representation& v,
                      const std::vector<uint32_t>& coords);

// Every action-closed subset, in binary-counter order. 2^dim scan.
std::vector<std::vector<uint32_t>> all_subreps(const Representation& v,
                                               const Caps& caps = {});

// Restriction to an action-closed set, reindexed over it.
Representation subrepresentation(const Representation& v,
                                 const std::vector<uint32_t>& coords);
// Quotient by an action-closed set: complementary coordinates, entries into
// the set zeroed.
Representation quotient(const Representation& v,
                        const std::vector<uint32_t>& coords);

bool is_simple(const Representation& v);
bool is_indecomposable(const Representation& v);

std::vector<SubmonomialMatrix> endomorphisms(const Representation& v,
                                             const Caps& caps = {});

// Canonical isomorphism-class key: the least serialized action over all
// monomial changes of basis when that enumeration fits the work limit,
// otherwise an invariant tuple marked as inexact.
struct IsoKey {
  bool exact = true;
  std::vector<int64_t> data;

  bool operator==(const IsoKey& o) const {
    return exact == o.exact && data == o.data;
  }
  bool operator<(const IsoKey& o) const {
    if (exact != o.exact) return exact > o.exact;
    return data < o.data;
  }
};
IsoKey iso_key(const Representation& v, const Caps& caps = {});

struct Summand {
  std::vector<uint32_t> coords;
  IsoKey key;
};
// Indecomposable direct summands (finest coordinate partition into
// action-closed blocks), listed by least coordinate.
std::vector<Summand> krull_schmidt(const Representation& v,
                                   const Caps& caps = {});

struct CompositionStep {
  std::vector<uint32_t> subspace;  // chain member V_k (coordinates in v)
  IsoKey factor;                   // iso key of V_k / V_{k-1}
};
// A maximal chain with simple quotients. `greedy_large` flips the
// tie-breaking so tests can compare two distinct chains.
std::vector<CompositionStep> jordan_holder(const Representation& v,
                                           bool greedy_large = false,
                                           const Caps& caps = {});

std::vector<uint32_t> annihilator(const Representation& v);
// J-class id (in j_classes order) of the apex, when one exists.
std::optional<uint32_t> apex_class(const Representation& v);

std::optional<SubmonomialMatrix> are_isomorphic(const Representation& v,
                                                const Representation& w,
                                                const Caps& caps = {});

Representation direct_sum_rep(const Representation& v,
                              const Representation& w);
// Conjugation rho' = P rho P^-1 by an invertible monomial matrix.
Representation conjugate(const Representation& v, const SubmonomialMatrix& p);

enum class Side { Left, Right };
// The translation representation on a regular principal factor. For the
// right side the result is a representation of the opposite monoid.
Representation rep_from_principal_factor(const GLinearMonoid& m,
                                         const MonoidElement& e, Side side);

// The left-translation embedding of an inverse monoid into the endomorphisms
// of its own underlying space.
Representation wagner_preston(const GLinearMonoid& m);

// Visit every representation of exact dimension `dim`, including
// decomposables, via generator assignment with table propagation.
void enumerate_reps(const GLinearMonoid& m, uint32_t dim,
                    const std::function<void(const Representation&)>& fn);
// All representations of dimension <= max_dim up to isomorphism.
std::vector<Representation> all_reps_upto_iso(const GLinearMonoid& m,
                                              uint32_t max_dim,
                                              const Caps& caps = {});

}  // namespace fone
