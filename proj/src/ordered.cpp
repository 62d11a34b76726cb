#include "fone/ordered.hpp"

#include <algorithm>
#include <set>

namespace fone {

bool natural_leq(const SubmonomialMatrix& a, const SubmonomialMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::DimMismatch, "order compares equal shapes only");
  if (a.group() != b.group()) fail(Errc::GroupMismatch, "order");
  for (uint32_t j = 0; j < a.cols(); ++j) {
    const auto& ca = a.column(j);
    if (!ca) continue;
    const auto& cb = b.column(j);
    if (!cb || !(*cb == *ca)) return false;
  }
  return true;
}

std::optional<SubmonomialMatrix> join_matrices(
    const std::vector<SubmonomialMatrix>& mats) {
  if (mats.empty()) fail(Errc::BadInput, "join of an empty family");
  const SubmonomialMatrix& first = mats.front();
  std::vector<std::optional<MatrixEntry>> cols(first.cols());
  for (const auto& m : mats) {
    if (m.rows() != first.rows() || m.cols() != first.cols() ||
        m.group() != first.group())
      fail(Errc::DimMismatch, "join of mismatched shapes");
    for (uint32_t j = 0; j < m.cols(); ++j) {
      const auto& c = m.column(j);
      if (!c) continue;
      if (cols[j] && !(*cols[j] == *c)) return std::nullopt;
      cols[j] = c;
    }
  }
  try {
    return SubmonomialMatrix::from_columns(first.group(), first.rows(), cols);
  } catch (const Error& e) {
    if (e.code() == Errc::NonInjective) return std::nullopt;
    throw;
  }
}

SubmonomialMatrix meet_matrices(const std::vector<SubmonomialMatrix>& mats) {
  if (mats.empty()) fail(Errc::BadInput, "meet of an empty family");
  const SubmonomialMatrix& first = mats.front();
  std::vector<std::optional<MatrixEntry>> cols = first.columns();
  for (const auto& m : mats) {
    if (m.rows() != first.rows() || m.cols() != first.cols() ||
        m.group() != first.group())
      fail(Errc::DimMismatch, "meet of mismatched shapes");
    for (uint32_t j = 0; j < m.cols(); ++j) {
      if (!cols[j]) continue;
      const auto& c = m.column(j);
      if (!c || !(*c == *cols[j])) cols[j] = std::nullopt;
    }
  }
  return SubmonomialMatrix::from_columns(first.group(), first.rows(), cols);
}

OrderedMonoid OrderedMonoid::natural(const GLinearMonoid& m) {
  if (!m.matrix_model())
    fail(Errc::BadInput, "natural order needs a matrix-model monoid");
  OrderedMonoid om;
  om.m_ = std::make_shared<GLinearMonoid>(m);
  const uint64_t total = m.size();
  om.leq_.assign(total, std::vector<bool>(total, false));
  std::vector<SubmonomialMatrix> mats;
  mats.reserve(total);
  for (uint64_t c = 0; c < total; ++c)
    mats.push_back(m.matrix_of(m.decode(c)));
  for (uint64_t a = 0; a < total; ++a)
    for (uint64_t b = 0; b < total; ++b)
      om.leq_[a][b] = natural_leq(mats[a], mats[b]);
  return om;
}

OrderedMonoid OrderedMonoid::from_pairs(
    const GLinearMonoid& m,
    const std::vector<std::pair<MonoidElement, MonoidElement>>& pairs) {
  OrderedMonoid om;
  om.m_ = std::make_shared<GLinearMonoid>(m);
  const uint64_t total = m.size();
  om.leq_.assign(total, std::vector<bool>(total, false));
  for (uint64_t a = 0; a < total; ++a) {
    om.leq_[a][a] = true;
    om.leq_[0][a] = true;  // zero sits below everything
  }
  for (const auto& [a, b] : pairs) om.leq_[m.encode(a)][m.encode(b)] = true;
  for (uint64_t k = 0; k < total; ++k)
    for (uint64_t i = 0; i < total; ++i) {
      if (!om.leq_[i][k]) continue;
      for (uint64_t j = 0; j < total; ++j)
        if (om.leq_[k][j]) om.leq_[i][j] = true;
    }
  for (uint64_t a = 0; a < total; ++a)
    for (uint64_t b = a + 1; b < total; ++b)
      if (om.leq_[a][b] && om.leq_[b][a])
        fail(Errc::AxiomViolated,
             "order relation has a cycle through " + m.show(m.decode(a)) +
                 " and " + m.show(m.decode(b)));
  return om;
}

bool OrderedMonoid::leq(const MonoidElement& a, const MonoidElement& b) const {
  return leq_[m_->encode(a)][m_->encode(b)];
}

std::optional<MonoidElement> OrderedMonoid::join(
    const std::vector<MonoidElement>& xs) const {
  if (xs.empty()) fail(Errc::BadInput, "join of an empty family");
  const uint64_t total = m_->size();
  std::vector<uint64_t> ubs;
  for (uint64_t u = 0; u < total; ++u) {
    bool ok = true;
    for (const auto& x : xs)
      if (!leq_[m_->encode(x)][u]) ok = false;
    if (ok) ubs.push_back(u);
  }
  for (uint64_t u : ubs) {
    bool minimum = true;
    for (uint64_t v : ubs)
      if (!leq_[u][v]) minimum = false;
    if (minimum) return m_->decode(u);
  }
  return std::nullopt;
}

std::optional<MonoidElement> OrderedMonoid::meet(
    const std::vector<MonoidElement>& xs) const {
  if (xs.empty()) fail(Errc::BadInput, "meet of an empty family");
  const uint64_t total = m_->size();
  std::vector<uint64_t> lbs;
  for (uint64_t u = 0; u < total; ++u) {
    bool ok = true;
    for (const auto& x : xs)
      if (!leq_[u][m_->encode(x)]) ok = false;
    if (ok) lbs.push_back(u);
  }
  for (uint64_t u : lbs) {
    bool maximum = true;
    for (uint64_t v : lbs)
      if (!leq_[v][u]) maximum = false;
    if (maximum) return m_->decode(u);
  }
  return std::nullopt;
}

OrderedMonoid::JoinableEnum OrderedMonoid::joinable_subsets(
    size_t down_cap) const {
  JoinableEnum out;
  const uint64_t total = m_->size();
  std::set<std::vector<uint64_t>> seen;
  for (uint64_t u = 0; u < total; ++u) {
    std::vector<uint64_t> down;
    for (uint64_t x = 0; x < total; ++x)
      if (leq_[x][u]) down.push_back(x);
    if (down.size() > down_cap) {
      out.complete = false;
      continue;
    }
    for (uint64_t mask = 1; mask < (uint64_t{1} << down.size()); ++mask) {
      std::vector<uint64_t> subset;
      std::vector<MonoidElement> elems;
      for (size_t i = 0; i < down.size(); ++i)
        if ((mask >> i) & 1) subset.push_back(down[i]);
      if (!seen.insert(subset).second) continue;
      for (uint64_t c : subset) elems.push_back(m_->decode(c));
      auto j = join(elems);
      if (j) out.subsets.emplace_back(std::move(elems), *j);
    }
  }
  return out;
}

OrderedVerdict validate_ordered(const OrderedMonoid& om, const Caps& caps) {
  (void)caps;
  OrderedVerdict out;
  const GLinearMonoid& m = om.monoid();
  const uint64_t total = m.size();
  MonoidElement zero = MonoidElement::zero_elem();

  for (uint64_t c = 1; c < total; ++c) {
    MonoidElement x = m.decode(c);
    if (!om.leq(zero, x)) {
      out.ok = false;
      out.witness = "zero is not below " + m.show(x);
      return out;
    }
    if (om.leq(x, zero)) {
      out.ok = false;
      out.witness = m.show(x) + " lies below zero";
      return out;
    }
  }

  auto check_join_family = [&](const std::vector<MonoidElement>& fam,
                               const MonoidElement& u) -> bool {
    for (uint64_t xc = 0; xc < total; ++xc) {
      MonoidElement x = m.decode(xc);
      for (bool left : {true, false}) {
        std::vector<MonoidElement> translated;
        for (const auto& a : fam)
          translated.push_back(left ? m.product(x, a) : m.product(a, x));
        auto j = om.join(translated);
        MonoidElement expect = left ? m.product(x, u) : m.product(u, x);
        if (!j || !(*j == expect)) {
          out.ok = false;
          out.witness = "multiplication by " + m.show(x) +
                        " does not distribute over a join with value " +
                        m.show(u);
          return false;
        }
      }
    }
    return true;
  };
  auto check_meet_family = [&](const std::vector<MonoidElement>& fam) -> bool {
    auto g = om.meet(fam);
    if (!g) return true;
    for (uint64_t xc = 0; xc < total; ++xc) {
      MonoidElement x = m.decode(xc);
      for (bool left : {true, false}) {
        std::vector<MonoidElement> translated;
        for (const auto& a : fam)
          translated.push_back(left ? m.product(x, a) : m.product(a, x));
        auto j = om.meet(translated);
        MonoidElement expect = left ? m.product(x, *g) : m.product(*g, x);
        if (!j || !(*j == expect)) {
          out.ok = false;
          out.witness = "multiplication by " + m.show(x) +
                        " does not distribute over a meet";
          return false;
        }
      }
    }
    return true;
  };

  // Pairs and triples; every element when the monoid is small, basis
  // representatives otherwise.
  std::vector<MonoidElement> pool;
  if (total <= 60) {
    for (uint64_t c = 0; c < total; ++c) pool.push_back(m.decode(c));
  } else {
    out.complete = false;
    pool.push_back(zero);
    for (uint32_t b = 0; b < m.dim(); ++b)
      pool.push_back(MonoidElement::of(m.group().one(), b));
  }
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i + 1; j < pool.size(); ++j) {
      std::vector<MonoidElement> fam{pool[i], pool[j]};
      auto u = om.join(fam);
      if (u && !check_join_family(fam, *u)) return out;
      if (!check_meet_family(fam)) return out;
    }
  if (pool.size() <= 40) {
    for (size_t i = 0; i < pool.size(); ++i)
      for (size_t j = i + 1; j < pool.size(); ++j)
        for (size_t k = j + 1; k < pool.size(); ++k) {
          std::vector<MonoidElement> fam{pool[i], pool[j], pool[k]};
          auto u = om.join(fam);
          if (u && !check_join_family(fam, *u)) return out;
          if (!check_meet_family(fam)) return out;
        }
  }

  if (total <= 60) {
    auto joinable = om.joinable_subsets();
    if (!joinable.complete) out.complete = false;
    for (const auto& [fam, u] : joinable.subsets)
      if (!check_join_family(fam, u)) return out;
  } else {
    out.complete = false;
  }
  return out;
}

std::vector<std::vector<MonoidElement>> complete_orthogonal_systems(
    const OrderedMonoid& om) {
  const GLinearMonoid& m = om.monoid();
  MonoidElement one = m.one_elem();
  std::vector<MonoidElement> candidates;
  for (uint64_t c = 1; c < m.size(); ++c) {
    MonoidElement x = m.decode(c);
    if (om.leq(x, one)) candidates.push_back(x);
  }
  std::vector<std::vector<MonoidElement>> out;
  std::vector<MonoidElement> current;
  MonoidElement zero = MonoidElement::zero_elem();
  std::function<void(size_t)> rec = [&](size_t start) {
    if (!current.empty()) {
      auto j = om.join(current);
      if (j && *j == one) {
        bool idem = true;
        for (const auto& e : current)
          if (!(m.product(e, e) == e)) idem = false;
        if (idem) out.push_back(current);
      }
    }
    for (size_t i = start; i < candidates.size(); ++i) {
      bool orth = true;
      for (const auto& e : current) {
        if (!(m.product(e, candidates[i]) == zero) ||
            !(m.product(candidates[i], e) == zero)) {
          orth = false;
          break;
        }
      }
      if (!orth) continue;
      current.push_back(candidates[i]);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [&](const std::vector<MonoidElement>& a,
                const std::vector<MonoidElement>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              std::vector<uint64_t> ea, eb;
              for (const auto& x : a) ea.push_back(m.encode(x));
              for (const auto& x : b) eb.push_back(m.encode(x));
              return ea < eb;
            });
  return out;
}

JoinCheck respects_joins(const Representation& v, const OrderedMonoid& om,
                         const Caps& caps) {
  (void)caps;
  if (!v.monoid().same_structure(om.monoid()))
    fail(Errc::BadInput, "representation is not over the ordered monoid");
  JoinCheck out;
  auto joinable = om.joinable_subsets();
  out.complete = joinable.complete;
  for (const auto& [fam, u] : joinable.subsets) {
    std::vector<SubmonomialMatrix> mats;
    mats.reserve(fam.size());
    for (const auto& a : fam) mats.push_back(v.matrix_of(a));
    auto j = join_matrices(mats);
    if (!j || !(*j == v.matrix_of(u))) {
      out.holds = false;
      out.witness =
          "join with value " + om.monoid().show(u) + " is not preserved";
      return out;
    }
  }
  return out;
}

}  // namespace fone
