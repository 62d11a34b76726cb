#include "fone/fvect.hpp"

namespace fone {

PushoutResult pushout(const SubmonomialMatrix& i, const SubmonomialMatrix& p) {
  if (i.group() != p.group()) fail(Errc::GroupMismatch, "pushout");
  if (i.cols() != p.cols()) fail(Errc::DimMismatch, "pushout: domains differ");
  if (!is_injective(i)) fail(Errc::NotMono, "pushout: i is not injective");
  if (!is_surjective(p)) fail(Errc::NotEpi, "pushout: p is not surjective");
  const PointedGroup& G = i.group();
  const uint32_t dim_a = i.cols(), dim_b = i.rows(), dim_c = p.rows();

  // Which A-slot lands on each B-row, if any.
  std::vector<int32_t> from_a(dim_b, -1);
  for (uint32_t j = 0; j < dim_a; ++j) from_a[i.column(j)->row] = j;

  std::vector<int32_t> b_coord(dim_b, -1);
  uint32_t next = 0;
  for (uint32_t r = 0; r < dim_b; ++r)
    if (from_a[r] < 0) b_coord[r] = static_cast<int32_t>(next++);
  const uint32_t c_offset = next;
  const uint32_t dim_d = c_offset + dim_c;

  std::vector<std::optional<MatrixEntry>> pb(dim_b);
  for (uint32_t r = 0; r < dim_b; ++r) {
    if (from_a[r] < 0) {
      pb[r] = MatrixEntry{static_cast<uint32_t>(b_coord[r]), G.one()};
      continue;
    }
    uint32_t j = static_cast<uint32_t>(from_a[r]);
    const auto& pc = p.column(j);
    if (!pc) continue;  // i(a) identified with 0
    GroupElement g = G.mul(pc->label, G.inv(i.column(j)->label));
    pb[r] = MatrixEntry{c_offset + pc->row, g};
  }

  std::vector<std::optional<MatrixEntry>> ic(dim_c);
  for (uint32_t r = 0; r < dim_c; ++r)
    ic[r] = MatrixEntry{c_offset + r, G.one()};

  return {Space{G, dim_d}, SubmonomialMatrix::from_columns(G, dim_d, pb),
          SubmonomialMatrix::from_columns(G, dim_d, ic)};
}

PullbackResult pullback(const SubmonomialMatrix& p2,
                        const SubmonomialMatrix& i2) {
  if (p2.group() != i2.group()) fail(Errc::GroupMismatch, "pullback");
  if (p2.rows() != i2.rows())
    fail(Errc::DimMismatch, "pullback: codomains differ");
  if (!is_surjective(p2)) fail(Errc::NotEpi, "pullback: p' is not surjective");
  if (!is_injective(i2)) fail(Errc::NotMono, "pullback: i' is not injective");
  const PointedGroup& G = p2.group();
  const uint32_t dim_b = p2.cols(), dim_c = i2.cols(), dim_d = p2.rows();

  // Which C-slot lands on each D-row, if any.
  std::vector<int32_t> c_at(dim_d, -1);
  for (uint32_t j = 0; j < dim_c; ++j) c_at[i2.column(j)->row] = j;

  struct Coord {
    uint32_t b;
    int32_t c;             // -1 when the pair is (b, 0)
    GroupElement c_label;  // scalar on the C side for matched pairs
  };
  std::vector<Coord> coords;
  for (uint32_t b = 0; b < dim_b; ++b) {
    const auto& pc = p2.column(b);
    if (!pc) {
      coords.push_back({b, -1, G.one()});
      continue;
    }
    int32_t c = c_at[pc->row];
    if (c < 0) continue;
    GroupElement h = i2.column(c)->label;
    coords.push_back({b, c, G.mul(G.inv(h), pc->label)});
  }

  const uint32_t dim_a = static_cast<uint32_t>(coords.size());
  std::vector<std::optional<MatrixEntry>> to_b(dim_a), to_c(dim_a);
  for (uint32_t k = 0; k < dim_a; ++k) {
    to_b[k] = MatrixEntry{coords[k].b, G.one()};
    if (coords[k].c >= 0)
      to_c[k] =
          MatrixEntry{static_cast<uint32_t>(coords[k].c), coords[k].c_label};
  }
  return {Space{G, dim_a}, SubmonomialMatrix::from_columns(G, dim_b, to_b),
          SubmonomialMatrix::from_columns(G, dim_c, to_c)};
}

}  // namespace fone
