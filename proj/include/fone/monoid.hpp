#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fone/matrix.hpp"

namespace fone {

// An element of a G-linear monoid: zero, or a scalar attached to a basis
// orbit representative.
struct MonoidElement {
  bool zero = true;
  GroupElement g;
  uint32_t b = 0;

  static MonoidElement zero_elem() { return {}; }
  static MonoidElement of(GroupElement g, uint32_t b) {
    return {false, std::move(g), b};
  }
  bool operator==(const MonoidElement& other) const {
    if (zero != other.zero) return false;
    return zero || (g == other.g && b == other.b);
  }
};

// Finite monoid with absorbing zero whose nonzero part is a free central
// G-set, encoded by a basis multiplication table with scalar twists. The
// encoding makes centrality and freeness structural; validation checks
// associativity and the marked identity.
class GLinearMonoid {
 public:
  using TableEntry = std::optional<std::pair<GroupElement, uint32_t>>;

  GLinearMonoid() = default;

  // Validates and builds. `table` is row-major over basis pairs (i, j).
  static GLinearMonoid validate(PointedGroup group,
                                std::vector<std::string> names, uint32_t one,
                                std::vector<TableEntry> table);

  const PointedGroup& group() const { return group_; }
  uint32_t dim() const { return static_cast<uint32_t>(names_.size()); }
  uint64_t size() const { return 1 + dim() * group_.order(); }
  uint32_t one_index() const { return one_; }
  MonoidElement one_elem() const { return MonoidElement::of(group_.one(), one_); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(uint32_t b) const { return names_[b]; }
  std::optional<uint32_t> basis_index(const std::string& name) const;

  const TableEntry& table(uint32_t i, uint32_t j) const {
    return table_[static_cast<size_t>(i) * names_.size() + j];
  }

  MonoidElement product(const MonoidElement& x, const MonoidElement& y) const;
  MonoidElement product(const MonoidElement& x, const MonoidElement& y,
                        const MonoidElement& z) const {
    return product(product(x, y), z);
  }

  // Dense element encoding: 0 is zero, otherwise 1 + b*|G| + index(g).
  uint64_t encode(const MonoidElement& x) const;
  MonoidElement decode(uint64_t code) const;
  std::vector<MonoidElement> elements() const;  // all, zero first
  std::string show(const MonoidElement& x) const;

  // Present when the basis carries a concrete submonomial-matrix model
  // (symmetric inverse monoids and friends); used by the ordered layer.
  const std::vector<SubmonomialMatrix>* matrix_model() const {
    return model_.empty() ? nullptr : &model_;
  }
  MonoidElement element_of_matrix(const SubmonomialMatrix& m) const;
  SubmonomialMatrix matrix_of(const MonoidElement& x) const;

  bool same_structure(const GLinearMonoid& other) const {
    return group_ == other.group_ && names_ == other.names_ &&
           one_ == other.one_ && table_ == other.table_;
  }

 private:
  PointedGroup group_;
  std::vector<std::string> names_;
  uint32_t one_ = 0;
  std::vector<TableEntry> table_;
  std::vector<SubmonomialMatrix> model_;

  struct Cache;
  std::shared_ptr<Cache> cache_;

  friend struct JClassAccess;
  friend GLinearMonoid symmetric_inverse_monoid(uint32_t n,
                                                const PointedGroup& group);
  friend GLinearMonoid flat_symmetric_inverse_monoid(uint32_t n,
                                                     const PointedGroup& group);
};

// ---- Constructors ----

// I_n(G^): basis = nonzero submonomial matrices up to scaling, normalized so
// the label on the least occupied column is 1.
GLinearMonoid symmetric_inverse_monoid(uint32_t n, const PointedGroup& group);

// I_n(G^) with the scalar action folded into the basis: a monoid over the
// trivial group whose basis is every nonzero submonomial matrix. This is the
// home for representations that are monoid homomorphisms without the scalar
// compatibility constraint.
GLinearMonoid flat_symmetric_inverse_monoid(uint32_t n,
                                            const PointedGroup& group);

// Basis {x_1..x_n, 1} with x_i x_j = 0.
GLinearMonoid null_monoid(uint32_t n, const PointedGroup& group);

struct Quiver {
  struct Arrow {
    std::string name, src, tgt;
  };
  struct Relation {
    enum class Kind { Path, Vertex, Zero };
    std::vector<std::string> lhs;  // arrow names, nonempty
    Kind kind = Kind::Zero;
    std::vector<std::string> rhs_path;
    std::string rhs_vertex;
  };
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
};

// Paths modulo the relations, multiplied by concatenation (left to right:
// s(pq) = s(p), t(pq) = t(q)). Relation sets whose rewrite closure breaks
// associativity are rejected with a witness triple.
GLinearMonoid path_monoid(const Quiver& quiver, const PointedGroup& group);

// Opposite monoid (transposed table).
GLinearMonoid opposite(const GLinearMonoid& m);

// Submonoid on a basis subset that contains the identity and is closed under
// products; basis order is the order of `sub_basis`.
GLinearMonoid submonoid(const GLinearMonoid& m,
                        const std::vector<uint32_t>& sub_basis);

// ---- Green's J-theory ----

struct JClass {
  std::vector<uint32_t> basis;  // sorted basis indices in this class
  std::vector<uint32_t> ideal;  // sorted basis content of M a M
  bool regular = false;
  std::vector<MonoidElement> idempotents;  // nonzero idempotents in the class
};

struct JClassReport {
  std::vector<JClass> classes;     // sorted by (ideal size, least member)
  std::vector<uint32_t> class_of;  // basis index -> class id
  // leq[i][j]: class i lies below class j in the ideal order.
  std::vector<std::vector<bool>> leq;
};

// Computed once per monoid and cached.
const JClassReport& j_classes(const GLinearMonoid& m);

// All idempotents, zero included.
std::vector<MonoidElement> idempotents(const GLinearMonoid& m);
bool is_regular(const GLinearMonoid& m);
bool is_inverse(const GLinearMonoid& m);
MonoidElement star_inverse(const GLinearMonoid& m, const MonoidElement& x);

struct PrincipalFactor {
  std::vector<uint32_t> carrier;  // basis indices of the J-class, sorted
  bool zero_simple = false;       // otherwise null
  // Action tables over carrier slots: left_action[a][k] is the image of
  // carrier slot k under left translation by basis element a (inside the
  // factor), right_action likewise for translation on the right.
  std::vector<std::vector<std::optional<std::pair<GroupElement, uint32_t>>>>
      left_action, right_action;
};

PrincipalFactor principal_factor(const GLinearMonoid& m,
                                 const MonoidElement& a);

bool is_left_inductive(const GLinearMonoid& m);
bool is_right_inductive(const GLinearMonoid& m);

struct MaximalSubgroup {
  GLinearMonoid monoid;    // the pointed group G^_J as a monoid
  MonoidElement e;         // its identity, as a parent element
  std::vector<uint32_t> parent_basis;     // parent basis index per sub slot
  std::vector<MonoidElement> basis_reps;  // parent element per sub slot
  // Parent element of a subgroup-monoid element, and the inverse direction.
  MonoidElement to_parent(const MonoidElement& x) const;
  std::optional<MonoidElement> from_parent(const MonoidElement& x) const;
};

MaximalSubgroup maximal_subgroup(const GLinearMonoid& m,
                                 const MonoidElement& e);

}  // namespace fone
