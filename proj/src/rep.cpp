#include "fone/rep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace fone {

Representation Representation::validate(
    std::shared_ptr<const GLinearMonoid> monoid,
    std::vector<SubmonomialMatrix> action) {
  const GLinearMonoid& m = *monoid;
  if (action.size() != m.dim())
    fail(Errc::BadInput, "action must cover every basis element");
  uint32_t d = action.empty() ? 0 : action[0].cols();
  PointedGroup mat_group = action.empty() ? m.group() : action[0].group();
  for (const auto& mat : action) {
    if (mat.rows() != d || mat.cols() != d)
      fail(Errc::DimMismatch, "action matrices must be square of equal size");
    if (mat.group() != mat_group)
      fail(Errc::GroupMismatch, "action matrices over mixed scalar groups");
  }
  // Representations of a monoid over the trivial group may take values over
  // richer scalars; otherwise the groups must match.
  if (!m.group().trivial() && mat_group != m.group())
    fail(Errc::GroupMismatch, "matrix over the wrong scalar group");
  if (!action[m.one_index()].is_identity())
    fail(Errc::BadIdentity, "identity basis element must act as the identity");
  const bool twist = !m.group().trivial();
  for (uint32_t i = 0; i < m.dim(); ++i) {
    for (uint32_t j = 0; j < m.dim(); ++j) {
      SubmonomialMatrix prod = compose(action[i], action[j]);
      const auto& t = m.table(i, j);
      SubmonomialMatrix expect =
          t ? (twist ? scalar_mul(t->first, action[t->second])
                     : action[t->second])
            : SubmonomialMatrix::zero(mat_group, d, d);
      if (!(prod == expect))
        fail(Errc::NotFunctorial,
             "(" + m.name(i) + ", " + m.name(j) + "): got " + prod.show() +
                 ", expected " + expect.show());
    }
  }
  Representation r;
  r.monoid_ = std::move(monoid);
  r.mat_group_ = std::move(mat_group);
  r.dim_ = d;
  r.action_ = std::move(action);
  return r;
}

Representation Representation::validate(const GLinearMonoid& monoid,
                                        std::vector<SubmonomialMatrix> action) {
  return validate(std::make_shared<GLinearMonoid>(monoid), std::move(action));
}

SubmonomialMatrix Representation::matrix_of(const MonoidElement& x) const {
  if (x.zero) return SubmonomialMatrix::zero(mat_group_, dim_, dim_);
  if (monoid_->group().trivial()) return action_[x.b];
  return scalar_mul(x.g, action_[x.b]);
}

bool Representation::same_monoid(const Representation& other) const {
  return monoid_ == other.monoid_ || monoid_->same_structure(*other.monoid_);
}

std::vector<uint32_t> sub_generated(const Representation& v,
                                    const std::vector<uint32_t>& coords) {
  std::vector<bool> in(v.dim(), false);
  std::vector<uint32_t> queue;
  for (uint32_t c : coords) {
    if (c >= v.dim()) fail(Errc::BadInput, "coordinate out of range");
    if (!in[c]) {
      in[c] = true;
      queue.push_back(c);
    }
  }
  while (!queue.empty()) {
    uint32_t c = queue.back();
    queue.pop_back();
    for (uint32_t b = 0; b < v.monoid().dim(); ++b) {
      const auto& col = v.matrix(b).column(c);
      if (col && !in[col->row]) {
        in[col->row] = true;
        queue.push_back(col->row);
      }
    }
  }
  std::vector<uint32_t> out;
  for (uint32_t c = 0; c < v.dim(); ++c)
    if (in[c]) out.push_back(c);
  return out;
}

bool is_action_closed(const Representation& v,
                      const std::vector<uint32_t>& coords) {
  std::vector<bool> in(v.dim(), false);
  for (uint32_t c : coords) in[c] = true;
  for (uint32_t c : coords)
    for (uint32_t b = 0; b < v.monoid().dim(); ++b) {
      const auto& col = v.matrix(b).column(c);
      if (col && !in[col->row]) return false;
    }
  return true;
}

std::vector<std::vector<uint32_t>> all_subreps(const Representation& v,
                                               const Caps& caps) {
  if (v.dim() > caps.all_subreps_max_dim)
    fail(Errc::DimTooLarge, "all_subreps beyond the configured cap");
  // One-step images per coordinate, so each mask test is cheap.
  std::vector<uint64_t> step(v.dim(), 0);
  for (uint32_t c = 0; c < v.dim(); ++c)
    for (uint32_t b = 0; b < v.monoid().dim(); ++b) {
      const auto& col = v.matrix(b).column(c);
      if (col) step[c] |= (uint64_t{1} << col->row);
    }
  std::vector<std::vector<uint32_t>> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << v.dim()); ++mask) {
    bool closed = true;
    for (uint32_t c = 0; c < v.dim() && closed; ++c)
      if ((mask >> c) & 1)
        if ((step[c] & ~mask) != 0) closed = false;
    if (!closed) continue;
    std::vector<uint32_t> coords;
    for (uint32_t c = 0; c < v.dim(); ++c)
      if ((mask >> c) & 1) coords.push_back(c);
    out.push_back(std::move(coords));
  }
  return out;
}

Representation subrepresentation(const Representation& v,
                                 const std::vector<uint32_t>& coords) {
  if (!is_action_closed(v, coords))
    fail(Errc::BadInput, "coordinate set is not action-closed");
  std::vector<int32_t> pos(v.dim(), -1);
  for (uint32_t i = 0; i < coords.size(); ++i)
    pos[coords[i]] = static_cast<int32_t>(i);
  const uint32_t d = static_cast<uint32_t>(coords.size());
  std::vector<SubmonomialMatrix> action;
  for (uint32_t b = 0; b < v.monoid().dim(); ++b) {
    std::vector<std::optional<MatrixEntry>> cols(d);
    for (uint32_t i = 0; i < d; ++i) {
      const auto& col = v.matrix(b).column(coords[i]);
      if (col)
        cols[i] = MatrixEntry{static_cast<uint32_t>(pos[col->row]),
                              col->label};
    }
    action.push_back(
        SubmonomialMatrix::from_columns(v.matrix_group(), d, cols));
  }
  return Representation::validate(v.monoid_ptr(), std::move(action));
}

Representation quotient(const Representation& v,
                        const std::vector<uint32_t>& coords) {
  if (!is_action_closed(v, coords))
    fail(Errc::BadInput, "coordinate set is not action-closed");
  std::vector<bool> in(v.dim(), false);
  for (uint32_t c : coords) in[c] = true;
  std::vector<uint32_t> rest;
  for (uint32_t c = 0; c < v.dim(); ++c)
    if (!in[c]) rest.push_back(c);
  std::vector<int32_t> pos(v.dim(), -1);
  for (uint32_t i = 0; i < rest.size(); ++i)
    pos[rest[i]] = static_cast<int32_t>(i);
  const uint32_t d = static_cast<uint32_t>(rest.size());
  std::vector<SubmonomialMatrix> action;
  for (uint32_t b = 0; b < v.monoid().dim(); ++b) {
    std::vector<std::optional<MatrixEntry>> cols(d);
    for (uint32_t i = 0; i < d; ++i) {
      const auto& col = v.matrix(b).column(rest[i]);
      if (col && pos[col->row] >= 0)
        cols[i] = MatrixEntry{static_cast<uint32_t>(pos[col->row]),
                              col->label};
    }
    action.push_back(
        SubmonomialMatrix::from_columns(v.matrix_group(), d, cols));
  }
  return Representation::validate(v.monoid_ptr(), std::move(action));
}

bool is_simple(const Representation& v) {
  if (v.dim() == 0) return false;
  for (uint32_t c = 0; c < v.dim(); ++c)
    if (sub_generated(v, {c}).size() != v.dim()) return false;
  return true;
}

namespace {

// Finest partition of the coordinates into action-closed blocks.
std::vector<std::vector<uint32_t>> components(const Representation& v) {
  std::vector<uint32_t> parent(v.dim());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<uint32_t(uint32_t)> find = [&](uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (uint32_t b = 0; b < v.monoid().dim(); ++b)
    for (uint32_t c = 0; c < v.dim(); ++c) {
      const auto& col = v.matrix(b).column(c);
      if (col) parent[find(c)] = find(col->row);
    }
  std::map<uint32_t, std::vector<uint32_t>> blocks;
  for (uint32_t c = 0; c < v.dim(); ++c) blocks[find(c)].push_back(c);
  std::vector<std::vector<uint32_t>> out;
  for (auto& [root, coords] : blocks) out.push_back(std::move(coords));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_indecomposable(const Representation& v) {
  return v.dim() > 0 && components(v).size() == 1;
}

std::vector<SubmonomialMatrix> endomorphisms(const Representation& v,
                                             const Caps& caps) {
  if (v.dim() > caps.iso_max_dim)
    fail(Errc::DimTooLarge, "endomorphisms beyond the configured cap");
  std::vector<SubmonomialMatrix> out;
  for_each_matrix(v.matrix_group(), v.dim(), v.dim(),
                  [&](const SubmonomialMatrix& p) {
                    for (uint32_t b = 0; b < v.monoid().dim(); ++b)
                      if (!(compose(p, v.matrix(b)) == compose(v.matrix(b), p)))
                        return;
                    out.push_back(p);
                  });
  return out;
}

namespace {

std::vector<int64_t> serialize_action(
    const std::vector<SubmonomialMatrix>& action, uint32_t d,
    uint64_t group_order) {
  std::vector<int64_t> out;
  out.reserve(1 + action.size() * d);
  out.push_back(d);
  for (const auto& m : action)
    for (uint32_t j = 0; j < d; ++j) {
      const auto& col = m.column(j);
      if (!col)
        out.push_back(-1);
      else
        out.push_back(static_cast<int64_t>(col->row) * group_order +
                      // labels enter by index
                      static_cast<int64_t>(m.group().index_of(col->label)));
    }
  return out;
}

uint64_t monomial_work(uint32_t d, uint64_t group_order, uint64_t limit) {
  uint64_t work = 1;
  for (uint32_t i = 1; i <= d; ++i) {
    work *= i;
    if (work > limit) return limit + 1;
    work *= group_order;
    if (work > limit) return limit + 1;
  }
  return work;
}

template <typename Fn>
void for_each_monomial(const PointedGroup& group, uint32_t d, Fn&& fn) {
  std::vector<uint32_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  const uint64_t go = group.order();
  do {
    uint64_t total = 1;
    for (uint32_t i = 0; i < d; ++i) total *= go;
    for (uint64_t code = 0; code < total; ++code) {
      uint64_t c = code;
      std::vector<std::optional<MatrixEntry>> cols(d);
      for (uint32_t i = 0; i < d; ++i) {
        cols[i] = MatrixEntry{perm[i], group.element_at(c % go)};
        c /= go;
      }
      fn(SubmonomialMatrix::from_columns(group, d, cols));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

IsoKey iso_key(const Representation& v, const Caps& caps) {
  const PointedGroup& G = v.matrix_group();
  const uint32_t d = v.dim();
  if (monomial_work(d, G.order(), caps.key_work_limit) <=
      caps.key_work_limit) {
    std::optional<std::vector<int64_t>> best;
    for_each_monomial(G, d, [&](const SubmonomialMatrix& p) {
      SubmonomialMatrix pinv = star(p);
      std::vector<SubmonomialMatrix> conj;
      conj.reserve(v.monoid().dim());
      for (uint32_t b = 0; b < v.monoid().dim(); ++b)
        conj.push_back(compose(compose(p, v.matrix(b)), pinv));
      std::vector<int64_t> ser = serialize_action(conj, d, G.order());
      if (!best || ser < *best) best = std::move(ser);
    });
    if (!best) best = serialize_action(v.action(), d, G.order());  // d == 0
    return IsoKey{true, std::move(*best)};
  }
  std::vector<int64_t> data{d, -2};
  for (uint32_t b : annihilator(v)) data.push_back(b);
  data.push_back(-3);
  auto apex = apex_class(v);
  data.push_back(apex ? static_cast<int64_t>(*apex) : -1);
  return IsoKey{false, std::move(data)};
}

std::vector<Summand> krull_schmidt(const Representation& v, const Caps& caps) {
  std::vector<Summand> out;
  for (auto& coords : components(v)) {
    Representation sub = subrepresentation(v, coords);
    out.push_back(Summand{std::move(coords), iso_key(sub, caps)});
  }
  return out;
}

std::vector<CompositionStep> jordan_holder(const Representation& v,
                                           bool greedy_large,
                                           const Caps& caps) {
  std::vector<CompositionStep> out;
  std::vector<uint32_t> current;  // sorted
  while (current.size() < v.dim()) {
    std::optional<std::vector<uint32_t>> next;
    std::vector<bool> in(v.dim(), false);
    for (uint32_t c : current) in[c] = true;
    for (uint32_t j = 0; j < v.dim(); ++j) {
      if (in[j]) continue;
      std::vector<uint32_t> seed = current;
      seed.push_back(j);
      std::vector<uint32_t> cand = sub_generated(v, seed);
      if (!next || cand.size() < next->size() ||
          (cand.size() == next->size() &&
           (greedy_large ? cand > *next : cand < *next)))
        next = std::move(cand);
    }
    Representation step = subrepresentation(v, *next);
    std::vector<uint32_t> inner;
    {
      std::vector<int32_t> pos(v.dim(), -1);
      for (uint32_t i = 0; i < next->size(); ++i)
        pos[(*next)[i]] = static_cast<int32_t>(i);
      for (uint32_t c : current) inner.push_back(pos[c]);
      std::sort(inner.begin(), inner.end());
    }
    Representation factor = quotient(step, inner);
    out.push_back(CompositionStep{*next, iso_key(factor, caps)});
    current = std::move(*next);
  }
  return out;
}

std::vector<uint32_t> annihilator(const Representation& v) {
  std::vector<uint32_t> out;
  for (uint32_t b = 0; b < v.monoid().dim(); ++b)
    if (v.matrix(b).is_zero_matrix()) out.push_back(b);
  return out;
}

std::optional<uint32_t> apex_class(const Representation& v) {
  const JClassReport& report = j_classes(v.monoid());
  std::vector<uint32_t> ann = annihilator(v);
  for (uint32_t jc = 0; jc < report.classes.size(); ++jc) {
    if (!report.classes[jc].regular) continue;
    std::vector<uint32_t> ij;
    for (uint32_t b = 0; b < v.monoid().dim(); ++b)
      if (!report.leq[jc][report.class_of[b]]) ij.push_back(b);
    if (ij == ann) return jc;
  }
  return std::nullopt;
}

namespace {

struct IsoSearch {
  const Representation* v;
  const Representation* w;
  uint32_t d;
  const PointedGroup* G;
  std::vector<int32_t> to;            // coordinate map, -1 unassigned
  std::vector<GroupElement> label;
  std::vector<bool> used;
  uint64_t nodes = 0;
  uint64_t node_budget = 0;

  bool propagate(uint32_t i, std::vector<uint32_t>& trail) {
    std::vector<uint32_t> queue{i};
    while (!queue.empty()) {
      uint32_t a = queue.back();
      queue.pop_back();
      for (uint32_t b = 0; b < v->monoid().dim(); ++b) {
        const auto& cv = v->matrix(b).column(a);
        const auto& cw = w->matrix(b).column(to[a]);
        if (!cv != !cw) return false;
        if (!cv) continue;
        // P(rho_v e_a) = (label[r] * gv, to[r]) must match
        // rho_w(P e_a) = (label[a] * gw, rw).
        GroupElement need = G->mul(label[a], cw->label);
        if (to[cv->row] >= 0) {
          if (static_cast<uint32_t>(to[cv->row]) != cw->row) return false;
          if (!(G->mul(label[cv->row], cv->label) == need)) return false;
        } else {
          if (used[cw->row]) return false;
          to[cv->row] = static_cast<int32_t>(cw->row);
          label[cv->row] = G->mul(need, G->inv(cv->label));
          used[cw->row] = true;
          trail.push_back(cv->row);
          queue.push_back(cv->row);
        }
      }
    }
    return true;
  }

  void unwind(const std::vector<uint32_t>& trail) {
    for (uint32_t r : trail) {
      used[to[r]] = false;
      to[r] = -1;
    }
  }

  bool search() {
    uint32_t i = d;
    for (uint32_t c = 0; c < d; ++c)
      if (to[c] < 0) {
        i = c;
        break;
      }
    if (i == d) return true;
    for (uint32_t r = 0; r < d; ++r) {
      if (used[r]) continue;
      for (uint64_t gi = 0; gi < G->order(); ++gi) {
        if (++nodes > node_budget)
          fail(Errc::DimTooLarge, "isomorphism search budget exceeded");
        std::vector<uint32_t> trail{i};
        to[i] = static_cast<int32_t>(r);
        label[i] = G->element_at(gi);
        used[r] = true;
        if (propagate(i, trail) && search()) return true;
        unwind(trail);
      }
    }
    return false;
  }
};

}  // namespace

std::optional<SubmonomialMatrix> are_isomorphic(const Representation& v,
                                                const Representation& w,
                                                const Caps& caps) {
  if (!v.same_monoid(w)) fail(Errc::BadInput, "representations over different monoids");
  if (v.dim() != w.dim()) return std::nullopt;
  if (v.dim() > caps.iso_max_dim)
    fail(Errc::DimTooLarge, "isomorphism search beyond the configured cap");
  if (annihilator(v) != annihilator(w)) return std::nullopt;
  const uint32_t d = v.dim();
  if (d == 0) return SubmonomialMatrix::zero(v.matrix_group(), 0, 0);

  IsoSearch s;
  s.v = &v;
  s.w = &w;
  s.d = d;
  s.G = &v.matrix_group();
  s.to.assign(d, -1);
  s.label.assign(d, s.G->one());
  s.used.assign(d, false);
  s.node_budget = 50'000'000;
  if (!s.search()) return std::nullopt;
  std::vector<std::optional<MatrixEntry>> cols(d);
  for (uint32_t c = 0; c < d; ++c)
    cols[c] = MatrixEntry{static_cast<uint32_t>(s.to[c]), s.label[c]};
  return SubmonomialMatrix::from_columns(v.matrix_group(), d, cols);
}

Representation direct_sum_rep(const Representation& v,
                              const Representation& w) {
  if (!v.same_monoid(w)) fail(Errc::BadInput, "direct sum over different monoids");
  std::vector<SubmonomialMatrix> action;
  for (uint32_t b = 0; b < v.monoid().dim(); ++b)
    action.push_back(direct_sum(v.matrix(b), w.matrix(b)));
  return Representation::validate(v.monoid_ptr(), std::move(action));
}

Representation conjugate(const Representation& v, const SubmonomialMatrix& p) {
  if (p.rank() != v.dim() || p.rows() != v.dim() || p.cols() != v.dim())
    fail(Errc::BadInput, "change of basis must be invertible of matching size");
  SubmonomialMatrix pinv = star(p);
  std::vector<SubmonomialMatrix> action;
  for (uint32_t b = 0; b < v.monoid().dim(); ++b)
    action.push_back(compose(compose(p, v.matrix(b)), pinv));
  return Representation::validate(v.monoid_ptr(), std::move(action));
}

Representation rep_from_principal_factor(const GLinearMonoid& m,
                                         const MonoidElement& e, Side side) {
  if (e.zero) fail(Errc::ZeroElement, "principal factor of 0");
  if (!(m.product(e, e) == e))
    fail(Errc::NotIdempotent, m.show(e) + " is not idempotent");
  PrincipalFactor pf = principal_factor(m, e);
  const auto& table =
      side == Side::Left ? pf.left_action : pf.right_action;
  const uint32_t d = static_cast<uint32_t>(pf.carrier.size());
  std::shared_ptr<const GLinearMonoid> host =
      std::make_shared<GLinearMonoid>(side == Side::Left ? m : opposite(m));
  std::vector<SubmonomialMatrix> action;
  for (uint32_t b = 0; b < m.dim(); ++b) {
    std::vector<std::optional<MatrixEntry>> cols(d);
    for (uint32_t i = 0; i < d; ++i) {
      const auto& t = table[b][i];
      if (t) cols[i] = MatrixEntry{t->second, t->first};
    }
    // Row injectivity fails exactly when the factor is not linear on this
    // side.
    try {
      action.push_back(SubmonomialMatrix::from_columns(m.group(), d, cols));
    } catch (const Error& err) {
      if (err.code() == Errc::NonInjective)
        fail(Errc::NotInductiveHere,
             "translation by " + m.name(b) + " is not linear");
      throw;
    }
  }
  try {
    return Representation::validate(host, std::move(action));
  } catch (const Error& err) {
    if (err.code() == Errc::NotFunctorial)
      fail(Errc::NotInductiveHere, err.what());
    throw;
  }
}

Representation wagner_preston(const GLinearMonoid& m) {
  if (!is_inverse(m)) fail(Errc::NotInverse, "Wagner-Preston needs an inverse monoid");
  const uint32_t d = m.dim();
  std::vector<SubmonomialMatrix> action;
  for (uint32_t a = 0; a < d; ++a) {
    MonoidElement ea = MonoidElement::of(m.group().one(), a);
    MonoidElement astar = star_inverse(m, ea);
    MonoidElement dom = m.product(astar, ea);  // idempotent a* a
    std::vector<std::optional<MatrixEntry>> cols(d);
    for (uint32_t x = 0; x < d; ++x) {
      MonoidElement ex = MonoidElement::of(m.group().one(), x);
      if (!(m.product(dom, ex) == ex)) continue;
      MonoidElement ax = m.product(ea, ex);
      cols[x] = MatrixEntry{ax.b, ax.g};
    }
    action.push_back(SubmonomialMatrix::from_columns(m.group(), d, cols));
  }
  return Representation::validate(m, std::move(action));
}

namespace {

// Greedy generating sequence: basis elements whose closure reaches the whole
// basis, preferring units (their relations prune the search hardest).
std::vector<uint32_t> generator_sequence(const GLinearMonoid& m) {
  const uint32_t k = m.dim();
  auto closure = [&](std::vector<bool> in) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (uint32_t a = 0; a < k; ++a) {
        if (!in[a]) continue;
        for (uint32_t b = 0; b < k; ++b) {
          if (!in[b]) continue;
          const auto& t = m.table(a, b);
          if (t && !in[t->second]) {
            in[t->second] = true;
            grew = true;
          }
        }
      }
    }
    return in;
  };
  std::vector<bool> unit(k, false);
  for (uint32_t a = 0; a < k; ++a)
    for (uint32_t b = 0; b < k; ++b) {
      const auto& t = m.table(a, b);
      if (t && t->second == m.one_index()) unit[a] = true;
    }

  std::vector<uint32_t> gens;
  std::vector<bool> have(k, false);
  have[m.one_index()] = true;
  have = closure(have);
  while (true) {
    uint32_t missing = 0;
    for (uint32_t b = 0; b < k; ++b)
      if (!have[b]) ++missing;
    if (missing == 0) break;
    uint32_t best = k;
    size_t best_gain = 0;
    bool best_unit = false;
    std::vector<bool> best_have;
    for (uint32_t b = 0; b < k; ++b) {
      if (have[b]) continue;
      std::vector<bool> trial = have;
      trial[b] = true;
      trial = closure(trial);
      size_t gain = 0;
      for (uint32_t c = 0; c < k; ++c)
        if (trial[c]) ++gain;
      bool better = best == k || (unit[b] && !best_unit) ||
                    (unit[b] == best_unit && gain > best_gain);
      if (better) {
        best = b;
        best_gain = gain;
        best_unit = unit[b];
        best_have = std::move(trial);
      }
    }
    gens.push_back(best);
    have = std::move(best_have);
  }
  return gens;
}

struct RepSearch {
  const GLinearMonoid* m;
  uint32_t k, d;
  std::vector<SubmonomialMatrix> candidates;
  std::vector<std::optional<SubmonomialMatrix>> assigned;
  std::vector<uint32_t> gens;
  const std::function<void(const Representation&)>* emit;

  bool propagate(uint32_t seed, std::vector<uint32_t>& trail) {
    std::vector<uint32_t> queue{seed};
    while (!queue.empty()) {
      uint32_t a = queue.back();
      queue.pop_back();
      for (uint32_t b = 0; b < k; ++b) {
        if (!assigned[b]) continue;
        for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
          if (!assigned[p] || !assigned[q]) continue;
          SubmonomialMatrix prod = compose(*assigned[p], *assigned[q]);
          const auto& t = m->table(p, q);
          if (!t) {
            if (!prod.is_zero_matrix()) return false;
            continue;
          }
          SubmonomialMatrix value =
              scalar_mul(m->group().inv(t->first), prod);
          if (assigned[t->second]) {
            if (!(*assigned[t->second] == value)) return false;
          } else {
            assigned[t->second] = std::move(value);
            trail.push_back(t->second);
            queue.push_back(t->second);
          }
        }
      }
    }
    return true;
  }

  void unwind(const std::vector<uint32_t>& trail) {
    for (uint32_t b : trail) assigned[b].reset();
  }

  void search(size_t gi) {
    while (gi < gens.size() && assigned[gens[gi]]) ++gi;
    if (gi == gens.size()) {
      for (uint32_t b = 0; b < k; ++b)
        if (!assigned[b]) throw std::logic_error("generators do not span");
      std::vector<SubmonomialMatrix> action;
      action.reserve(k);
      for (uint32_t b = 0; b < k; ++b) action.push_back(*assigned[b]);
      emit->operator()(
          Representation::validate(*m, std::move(action)));
      return;
    }
    uint32_t g = gens[gi];
    for (const auto& cand : candidates) {
      std::vector<uint32_t> trail{g};
      assigned[g] = cand;
      if (propagate(g, trail)) search(gi + 1);
      unwind(trail);
    }
  }
};

}  // namespace

void enumerate_reps(const GLinearMonoid& m, uint32_t dim,
                    const std::function<void(const Representation&)>& fn) {
  RepSearch s;
  s.m = &m;
  s.k = m.dim();
  s.d = dim;
  s.candidates = all_matrices(m.group(), dim, dim);
  s.assigned.assign(s.k, std::nullopt);
  s.assigned[m.one_index()] = SubmonomialMatrix::identity(m.group(), dim);
  s.gens = generator_sequence(m);
  s.emit = &fn;
  std::vector<uint32_t> trail;
  if (!s.propagate(m.one_index(), trail)) return;
  s.search(0);
}

std::vector<Representation> all_reps_upto_iso(const GLinearMonoid& m,
                                              uint32_t max_dim,
                                              const Caps& caps) {
  std::vector<Representation> out;
  std::set<std::vector<int64_t>> seen_keys;
  for (uint32_t d = 0; d <= max_dim; ++d) {
    enumerate_reps(m, d, [&](const Representation& r) {
      IsoKey key = iso_key(r, caps);
      if (key.exact) {
        if (seen_keys.insert(key.data).second) out.push_back(r);
        return;
      }
      for (const auto& prev : out)
        if (prev.dim() == r.dim() && are_isomorphic(prev, r, caps)) return;
      out.push_back(r);
    });
  }
  return out;
}

}  // namespace fone
