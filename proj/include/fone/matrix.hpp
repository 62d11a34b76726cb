#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fone/group.hpp"

namespace fone {

// An object of the scalar category: a free pointed G-set with `dim`
// non-trivial orbits.
struct Space {
  PointedGroup group;
  uint32_t dim = 0;

  bool operator==(const Space& other) const {
    return group == other.group && dim == other.dim;
  }
};

// A nonzero vector is a scalar together with a basis slot; absence encodes
// the base point.
struct Vector {
  std::optional<std::pair<GroupElement, uint32_t>> value;  // (g, 0-based index)

  static Vector zero() { return {}; }
  static Vector unit(GroupElement g, uint32_t index) {
    return {std::make_pair(std::move(g), index)};
  }
  bool is_zero() const { return !value.has_value(); }
  bool operator==(const Vector& other) const { return value == other.value; }
};

struct MatrixEntry {
  uint32_t row;  // 0-based
  GroupElement label;

  bool operator==(const MatrixEntry& other) const {
    return row == other.row && label == other.label;
  }
};

// Matrix over the pointed group with at most one nonzero entry per row and
// per column, stored column-major. Row injectivity is checked once at
// construction; the arithmetic below preserves it.
class SubmonomialMatrix {
 public:
  SubmonomialMatrix() = default;

  static SubmonomialMatrix zero(const PointedGroup& group, uint32_t rows,
                                uint32_t cols);
  static SubmonomialMatrix identity(const PointedGroup& group, uint32_t n);

  // Checked constructor from per-column entries. Throws NonInjective when a
  // row repeats.
  static SubmonomialMatrix from_columns(
      const PointedGroup& group, uint32_t rows,
      std::vector<std::optional<MatrixEntry>> cols);

  // The triple (S, f, c): support columns, an injection into the rows, and
  // row labels defined exactly on the image. Indices are 0-based here; the
  // JSON layer speaks 1-based.
  static SubmonomialMatrix from_partial_injection(
      const PointedGroup& group, uint32_t rows, uint32_t cols,
      const std::vector<uint32_t>& support,
      const std::vector<uint32_t>& image_row,
      const std::vector<std::pair<uint32_t, GroupElement>>& labels);

  const PointedGroup& group() const { return group_; }
  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return cols_; }
  const std::optional<MatrixEntry>& column(uint32_t j) const { return col_[j]; }
  const std::vector<std::optional<MatrixEntry>>& columns() const { return col_; }

  bool is_zero_matrix() const;
  bool is_identity() const;

  Vector apply(const Vector& v) const;

  uint32_t rank() const;
  std::vector<uint32_t> support() const;       // occupied columns
  std::vector<uint32_t> image_rows() const;    // occupied rows, ascending

  bool operator==(const SubmonomialMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           group_ == other.group_ && col_ == other.col_;
  }
  bool operator!=(const SubmonomialMatrix& other) const {
    return !(*this == other);
  }

  // Canonical token stream, usable as an ordering / hashing key.
  std::vector<int64_t> encode() const;
  std::string show() const;

 private:
  PointedGroup group_;
  uint32_t rows_ = 0, cols_ = 0;
  std::vector<std::optional<MatrixEntry>> col_;

  struct Unchecked {};
  SubmonomialMatrix(Unchecked, PointedGroup group, uint32_t rows, uint32_t cols,
                    std::vector<std::optional<MatrixEntry>> cols_data);
  friend SubmonomialMatrix compose(const SubmonomialMatrix&,
                                   const SubmonomialMatrix&);
  friend SubmonomialMatrix star(const SubmonomialMatrix&);
  friend SubmonomialMatrix scalar_mul(const GroupElement&,
                                      const SubmonomialMatrix&);
  friend SubmonomialMatrix direct_sum(const SubmonomialMatrix&,
                                      const SubmonomialMatrix&);
};

// compose(A, B) applies B first, then A; it equals the matrix product A*B.
SubmonomialMatrix compose(const SubmonomialMatrix& a,
                          const SubmonomialMatrix& b);

// The generalized inverse M_{f(S), f^-1, 1/(c o f)}: star(A) satisfies
// A * star(A) * A = A and star(A) * A * star(A) = star(A).
SubmonomialMatrix star(const SubmonomialMatrix& a);

SubmonomialMatrix scalar_mul(const GroupElement& g, const SubmonomialMatrix& a);
SubmonomialMatrix direct_sum(const SubmonomialMatrix& a,
                             const SubmonomialMatrix& b);

uint32_t rank(const SubmonomialMatrix& a);
bool is_injective(const SubmonomialMatrix& a);   // every column occupied
bool is_surjective(const SubmonomialMatrix& a);  // every row occupied
bool is_idempotent(const SubmonomialMatrix& a);

// A subspace or quotient together with its structure map.
struct SpaceMap {
  Space space;
  SubmonomialMatrix map;
};

SpaceMap kernel(const SubmonomialMatrix& a);    // inclusion into the domain
SpaceMap image(const SubmonomialMatrix& a);     // inclusion into the codomain
SpaceMap cokernel(const SubmonomialMatrix& a);  // projection from the codomain

// Scalar extension of an F1 matrix (all labels become 1 in `group`) and the
// orbit functor that forgets labels.
SubmonomialMatrix scalar_extend(const PointedGroup& group,
                                const SubmonomialMatrix& a);
SubmonomialMatrix orbit_space(const SubmonomialMatrix& a);

// Visit every rows x cols submonomial matrix over the group, in a fixed
// deterministic order. Returns the number visited.
uint64_t for_each_matrix(const PointedGroup& group, uint32_t rows,
                         uint32_t cols,
                         const std::function<void(const SubmonomialMatrix&)>& fn);
std::vector<SubmonomialMatrix> all_matrices(const PointedGroup& group,
                                            uint32_t rows, uint32_t cols);
uint64_t count_matrices(const PointedGroup& group, uint32_t rows,
                        uint32_t cols);

}  // namespace fone
