#include "fone/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace fone {

namespace {

void check_rows_distinct(const std::vector<std::optional<MatrixEntry>>& cols,
                         uint32_t rows) {
  std::vector<int32_t> seen(rows, -1);
  for (size_t j = 0; j < cols.size(); ++j) {
    if (!cols[j]) continue;
    uint32_t r = cols[j]->row;
    if (r >= rows) fail(Errc::BadInput, "row index out of range");
    if (seen[r] >= 0)
      fail(Errc::NonInjective, "row " + std::to_string(r + 1) +
                                   " occupied by columns " +
                                   std::to_string(seen[r] + 1) + " and " +
                                   std::to_string(j + 1));
    seen[r] = static_cast<int32_t>(j);
  }
}

}  // namespace

SubmonomialMatrix::SubmonomialMatrix(
    Unchecked, PointedGroup group, uint32_t rows, uint32_t cols,
    std::vector<std::optional<MatrixEntry>> cols_data)
    : group_(std::move(group)), rows_(rows), cols_(cols),
      col_(std::move(cols_data)) {}

SubmonomialMatrix SubmonomialMatrix::zero(const PointedGroup& group,
                                          uint32_t rows, uint32_t cols) {
  return SubmonomialMatrix(Unchecked{}, group, rows, cols,
                           std::vector<std::optional<MatrixEntry>>(cols));
}

SubmonomialMatrix SubmonomialMatrix::identity(const PointedGroup& group,
                                              uint32_t n) {
  std::vector<std::optional<MatrixEntry>> cols(n);
  for (uint32_t j = 0; j < n; ++j) cols[j] = MatrixEntry{j, group.one()};
  return SubmonomialMatrix(Unchecked{}, group, n, n, std::move(cols));
}

SubmonomialMatrix SubmonomialMatrix::from_columns(
    const PointedGroup& group, uint32_t rows,
    std::vector<std::optional<MatrixEntry>> cols) {
  for (const auto& c : cols)
    if (c) group.check_element(c->label);
  check_rows_distinct(cols, rows);
  const uint32_t n = static_cast<uint32_t>(cols.size());
  return SubmonomialMatrix(Unchecked{}, group, rows, n, std::move(cols));
}

SubmonomialMatrix SubmonomialMatrix::from_partial_injection(
    const PointedGroup& group, uint32_t rows, uint32_t cols,
    const std::vector<uint32_t>& support,
    const std::vector<uint32_t>& image_row,
    const std::vector<std::pair<uint32_t, GroupElement>>& labels) {
  if (support.size() != image_row.size())
    fail(Errc::BadInput, "support and image sizes differ");
  std::vector<std::optional<MatrixEntry>> data(cols);
  std::vector<bool> image(rows, false);
  for (size_t k = 0; k < support.size(); ++k) {
    uint32_t j = support[k], r = image_row[k];
    if (j >= cols || r >= rows) fail(Errc::BadInput, "index out of range");
    if (data[j]) fail(Errc::BadInput, "support column repeated");
    if (image[r])
      fail(Errc::NonInjective,
           "injection repeats row " + std::to_string(r + 1));
    image[r] = true;
    data[j] = MatrixEntry{r, group.one()};
  }
  std::vector<bool> labeled(rows, false);
  for (const auto& [r, g] : labels) {
    if (r >= rows || !image[r])
      fail(Errc::BadDomain, "label on row " + std::to_string(r + 1) +
                                " outside the image of the injection");
    if (labeled[r]) fail(Errc::BadDomain, "row labeled twice");
    labeled[r] = true;
    group.check_element(g);
  }
  for (uint32_t r = 0; r < rows; ++r)
    if (image[r] && !labeled[r])
      fail(Errc::BadDomain,
           "image row " + std::to_string(r + 1) + " has no label");
  for (const auto& [r, g] : labels)
    for (auto& c : data)
      if (c && c->row == r) c->label = g;
  return SubmonomialMatrix(Unchecked{}, group, rows, cols, std::move(data));
}

bool SubmonomialMatrix::is_zero_matrix() const {
  for (const auto& c : col_)
    if (c) return false;
  return true;
}

bool SubmonomialMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (uint32_t j = 0; j < cols_; ++j)
    if (!col_[j] || col_[j]->row != j || !group_.is_one(col_[j]->label))
      return false;
  return true;
}

Vector SubmonomialMatrix::apply(const Vector& v) const {
  if (v.is_zero()) return Vector::zero();
  const auto& [g, j] = *v.value;
  if (j >= cols_) fail(Errc::DimMismatch, "vector index out of range");
  if (!col_[j]) return Vector::zero();
  return Vector::unit(group_.mul(col_[j]->label, g), col_[j]->row);
}

uint32_t SubmonomialMatrix::rank() const {
  uint32_t n = 0;
  for (const auto& c : col_)
    if (c) ++n;
  return n;
}

std::vector<uint32_t> SubmonomialMatrix::support() const {
  std::vector<uint32_t> out;
  for (uint32_t j = 0; j < cols_; ++j)
    if (col_[j]) out.push_back(j);
  return out;
}

std::vector<uint32_t> SubmonomialMatrix::image_rows() const {
  std::vector<uint32_t> out;
  for (const auto& c : col_)
    if (c) out.push_back(c->row);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int64_t> SubmonomialMatrix::encode() const {
  std::vector<int64_t> out;
  out.reserve(2 + cols_);
  out.push_back(rows_);
  out.push_back(cols_);
  for (const auto& c : col_) {
    if (!c) {
      out.push_back(-1);
    } else {
      out.push_back(static_cast<int64_t>(c->row) * group_.order() +
                    group_.index_of(c->label));
    }
  }
  return out;
}

std::string SubmonomialMatrix::show() const {
  std::ostringstream os;
  os << rows_ << 'x' << cols_ << '[';
  bool first = true;
  for (uint32_t j = 0; j < cols_; ++j) {
    if (!col_[j]) continue;
    if (!first) os << ' ';
    first = false;
    os << (j + 1) << "->" << (col_[j]->row + 1);
    if (!group_.is_one(col_[j]->label)) os << group_.show(col_[j]->label);
  }
  os << ']';
  return os.str();
}

SubmonomialMatrix compose(const SubmonomialMatrix& a,
                          const SubmonomialMatrix& b) {
  if (a.group() != b.group()) fail(Errc::GroupMismatch, "compose");
  if (a.cols() != b.rows())
    fail(Errc::DimMismatch, "compose: " + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()));
  std::vector<std::optional<MatrixEntry>> cols(b.cols());
  for (uint32_t j = 0; j < b.cols(); ++j) {
    const auto& bc = b.column(j);
    if (!bc) continue;
    const auto& ac = a.column(bc->row);
    if (!ac) continue;
    cols[j] = MatrixEntry{ac->row, a.group().mul(ac->label, bc->label)};
  }
  return SubmonomialMatrix(SubmonomialMatrix::Unchecked{}, a.group(), a.rows(),
                           b.cols(), std::move(cols));
}

SubmonomialMatrix star(const SubmonomialMatrix& a) {
  std::vector<std::optional<MatrixEntry>> cols(a.rows());
  for (uint32_t j = 0; j < a.cols(); ++j) {
    const auto& c = a.column(j);
    if (!c) continue;
    cols[c->row] = MatrixEntry{j, a.group().inv(c->label)};
  }
  return SubmonomialMatrix(SubmonomialMatrix::Unchecked{}, a.group(), a.cols(),
                           a.rows(), std::move(cols));
}

SubmonomialMatrix scalar_mul(const GroupElement& g,
                             const SubmonomialMatrix& a) {
  std::vector<std::optional<MatrixEntry>> cols = a.columns();
  for (auto& c : cols)
    if (c) c->label = a.group().mul(g, c->label);
  return SubmonomialMatrix(SubmonomialMatrix::Unchecked{}, a.group(), a.rows(),
                           a.cols(), std::move(cols));
}

SubmonomialMatrix direct_sum(const SubmonomialMatrix& a,
                             const SubmonomialMatrix& b) {
  if (a.group() != b.group()) fail(Errc::GroupMismatch, "direct_sum");
  std::vector<std::optional<MatrixEntry>> cols(a.cols() + b.cols());
  for (uint32_t j = 0; j < a.cols(); ++j) cols[j] = a.column(j);
  for (uint32_t j = 0; j < b.cols(); ++j) {
    const auto& c = b.column(j);
    if (c) cols[a.cols() + j] = MatrixEntry{c->row + a.rows(), c->label};
  }
  return SubmonomialMatrix(SubmonomialMatrix::Unchecked{}, a.group(),
                           a.rows() + b.rows(), a.cols() + b.cols(),
                           std::move(cols));
}

uint32_t rank(const SubmonomialMatrix& a) { return a.rank(); }

bool is_injective(const SubmonomialMatrix& a) { return a.rank() == a.cols(); }

bool is_surjective(const SubmonomialMatrix& a) { return a.rank() == a.rows(); }

bool is_idempotent(const SubmonomialMatrix& a) {
  return a.rows() == a.cols() && compose(a, a) == a;
}

SpaceMap kernel(const SubmonomialMatrix& a) {
  std::vector<uint32_t> ker;
  for (uint32_t j = 0; j < a.cols(); ++j)
    if (!a.column(j)) ker.push_back(j);
  std::vector<std::optional<MatrixEntry>> cols(ker.size());
  for (size_t k = 0; k < ker.size(); ++k)
    cols[k] = MatrixEntry{ker[k], a.group().one()};
  auto incl = SubmonomialMatrix::from_columns(a.group(), a.cols(), cols);
  return {Space{a.group(), static_cast<uint32_t>(ker.size())}, incl};
}

SpaceMap image(const SubmonomialMatrix& a) {
  std::vector<uint32_t> img = a.image_rows();
  std::vector<std::optional<MatrixEntry>> cols(img.size());
  for (size_t k = 0; k < img.size(); ++k)
    cols[k] = MatrixEntry{img[k], a.group().one()};
  auto incl = SubmonomialMatrix::from_columns(a.group(), a.rows(), cols);
  return {Space{a.group(), static_cast<uint32_t>(img.size())}, incl};
}

SpaceMap cokernel(const SubmonomialMatrix& a) {
  std::vector<bool> hit(a.rows(), false);
  for (uint32_t j = 0; j < a.cols(); ++j)
    if (a.column(j)) hit[a.column(j)->row] = true;
  std::vector<std::optional<MatrixEntry>> cols(a.rows());
  uint32_t next = 0;
  for (uint32_t r = 0; r < a.rows(); ++r)
    if (!hit[r]) cols[r] = MatrixEntry{next++, a.group().one()};
  auto proj = SubmonomialMatrix::from_columns(a.group(), next, cols);
  return {Space{a.group(), next}, proj};
}

SubmonomialMatrix scalar_extend(const PointedGroup& group,
                                const SubmonomialMatrix& a) {
  if (!a.group().trivial())
    fail(Errc::GroupMismatch, "scalar_extend expects a matrix over F1");
  std::vector<std::optional<MatrixEntry>> cols(a.cols());
  for (uint32_t j = 0; j < a.cols(); ++j)
    if (a.column(j)) cols[j] = MatrixEntry{a.column(j)->row, group.one()};
  return SubmonomialMatrix::from_columns(group, a.rows(), std::move(cols));
}

SubmonomialMatrix orbit_space(const SubmonomialMatrix& a) {
  PointedGroup f1{std::vector<uint32_t>{}};
  std::vector<std::optional<MatrixEntry>> cols(a.cols());
  for (uint32_t j = 0; j < a.cols(); ++j)
    if (a.column(j)) cols[j] = MatrixEntry{a.column(j)->row, f1.one()};
  return SubmonomialMatrix::from_columns(f1, a.rows(), std::move(cols));
}

namespace {

void enumerate_rec(const PointedGroup& group, uint32_t rows, uint32_t cols,
                   uint32_t j, std::vector<std::optional<MatrixEntry>>& acc,
                   std::vector<bool>& used, uint64_t& count,
                   const std::function<void(const SubmonomialMatrix&)>& fn) {
  if (j == cols) {
    ++count;
    fn(SubmonomialMatrix::from_columns(group, rows, acc));
    return;
  }
  acc[j] = std::nullopt;
  enumerate_rec(group, rows, cols, j + 1, acc, used, count, fn);
  for (uint32_t r = 0; r < rows; ++r) {
    if (used[r]) continue;
    used[r] = true;
    for (uint64_t gi = 0; gi < group.order(); ++gi) {
      acc[j] = MatrixEntry{r, group.element_at(gi)};
      enumerate_rec(group, rows, cols, j + 1, acc, used, count, fn);
    }
    used[r] = false;
  }
  acc[j] = std::nullopt;
}

}  // namespace

uint64_t for_each_matrix(
    const PointedGroup& group, uint32_t rows, uint32_t cols,
    const std::function<void(const SubmonomialMatrix&)>& fn) {
  std::vector<std::optional<MatrixEntry>> acc(cols);
  std::vector<bool> used(rows, false);
  uint64_t count = 0;
  enumerate_rec(group, rows, cols, 0, acc, used, count, fn);
  return count;
}

std::vector<SubmonomialMatrix> all_matrices(const PointedGroup& group,
                                            uint32_t rows, uint32_t cols) {
  std::vector<SubmonomialMatrix> out;
  for_each_matrix(group, rows, cols,
                  [&](const SubmonomialMatrix& m) { out.push_back(m); });
  return out;
}

uint64_t count_matrices(const PointedGroup& group, uint32_t rows,
                        uint32_t cols) {
  std::vector<std::optional<MatrixEntry>> acc(cols);
  std::vector<bool> used(rows, false);
  uint64_t count = 0;
  enumerate_rec(group, rows, cols, 0, acc, used, count,
                [](const SubmonomialMatrix&) {});
  return count;
}

}  // namespace fone
