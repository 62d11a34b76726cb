#pragma once

#include "fone/rep.hpp"

namespace fone {

// Restriction along an idempotent: the action of G^_J on the image of
// rho(e), as a representation of the maximal subgroup monoid.
struct RestrictedRep {
  MaximalSubgroup gj;
  Representation rep;              // over gj.monoid
  std::vector<uint32_t> carrier;   // coordinates of the ambient rep kept
};
RestrictedRep restrict_rep(const Representation& v, const MonoidElement& e);

// A simple representation of a pointed group: the coset space of a subgroup
// meeting the central scalars trivially.
struct GroupSimple {
  std::vector<MonoidElement> subgroup;  // elements of the G^_J monoid
  Representation carrier;               // coset-space rep over the G^_J monoid
};
GroupSimple coset_simple(const MaximalSubgroup& gj,
                         std::vector<MonoidElement> subgroup);
// All of them, one per conjugacy class of admissible subgroups.
std::vector<GroupSimple> group_simples(const MaximalSubgroup& gj,
                                       const Caps& caps = {});

// Induction along an idempotent: P(e)e tensored with a G^_J-representation.
struct InducedRep {
  Representation rep;   // over the ambient monoid
  Representation base;  // the G^_J-representation that was induced
  MonoidElement e;
  MaximalSubgroup gj;
  struct Tensor {        // least class member labelling each coordinate
    MonoidElement x;     // element of P(e)e, as an ambient element
    GroupElement wg;     // scalar on the base side
    uint32_t wc;         // base coordinate
  };
  std::vector<Tensor> coord_labels;
};
InducedRep induce(const GLinearMonoid& m, const MonoidElement& e,
                  const Representation& w_over_gj);

// Coordinates killed by eM; the unique maximal subrepresentation when the
// base is simple.
std::vector<uint32_t> radical(const InducedRep& iv);

// Q(W) = W^e / N(W^e); asserts simplicity and the apex.
Representation cmp_simple(const GLinearMonoid& m, const MonoidElement& e,
                          const Representation& w_over_gj,
                          const Caps& caps = {});

struct SimpleRep {
  Representation rep;
  uint32_t apex;  // J-class id in j_classes order
};
// One representative per isomorphism class of simple representations.
std::vector<SimpleRep> all_simples(const GLinearMonoid& m,
                                   const Caps& caps = {});

// V_{S,H} for a symmetric inverse monoid: the rank-|S| column space with
// columns identified along a subgroup H of its stabilizer group. S is
// 0-based; H elements are submonomial matrices with support and image S.
Representation v_sh(const GLinearMonoid& in_monoid,
                    const std::vector<uint32_t>& s,
                    const std::vector<SubmonomialMatrix>& h);
// The relabeling-isomorphism criterion between V_{S,H} and V_{T,K}.
bool vsh_isomorphic(const PointedGroup& group, const std::vector<uint32_t>& s,
                    const std::vector<SubmonomialMatrix>& h,
                    const std::vector<uint32_t>& t,
                    const std::vector<SubmonomialMatrix>& k);

enum class Semisimplicity { Semisimple, NotSemisimple, Unknown };

struct SemisimpleReport {
  Semisimplicity verdict = Semisimplicity::Unknown;
  // For the negative verdict: a representation with a complement-free
  // subrepresentation.
  std::optional<Representation> witness_rep;
  std::vector<uint32_t> witness_sub;
};
SemisimpleReport is_semisimple(const GLinearMonoid& m, const Caps& caps = {});

// The unique candidate internal complement (the coordinate complement) if it
// is action-closed.
std::optional<std::vector<uint32_t>> complement(
    const Representation& v, const std::vector<uint32_t>& w);

// The coset-permutation representation of the scalar-folded I_n(G^) indexed
// by a normal subgroup of S_n: units act by their permutation part on the
// cosets, scaled by the product of their labels; lower ranks act by zero.
// Permutations are 0-based images.
Representation phi_h_rep(uint32_t n, const PointedGroup& group,
                         const std::vector<std::vector<uint32_t>>& h_perms);

}  // namespace fone
