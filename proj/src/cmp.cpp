#include "fone/cmp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace fone {

namespace {

MonoidElement invert_in(const GLinearMonoid& m, const MonoidElement& x) {
  for (uint32_t b = 0; b < m.dim(); ++b) {
    MonoidElement p = m.product(x, MonoidElement::of(m.group().one(), b));
    if (!p.zero && p.b == m.one_index()) {
      MonoidElement y = MonoidElement::of(m.group().inv(p.g), b);
      if (m.product(x, y) == m.one_elem() && m.product(y, x) == m.one_elem())
        return y;
    }
  }
  fail(Errc::BadInput, "element " + m.show(x) + " is not invertible");
}

}  // namespace

RestrictedRep restrict_rep(const Representation& v, const MonoidElement& e) {
  const GLinearMonoid& m = v.monoid();
  if (e.zero || !(m.product(e, e) == e))
    fail(Errc::NotIdempotent, "restriction needs a nonzero idempotent");
  RestrictedRep out;
  out.gj = maximal_subgroup(m, e);
  SubmonomialMatrix me = v.matrix_of(e);
  out.carrier = me.support();
  const uint32_t d = static_cast<uint32_t>(out.carrier.size());
  std::vector<int32_t> pos(v.dim(), -1);
  for (uint32_t i = 0; i < d; ++i)
    pos[out.carrier[i]] = static_cast<int32_t>(i);
  std::vector<SubmonomialMatrix> action;
  for (uint32_t i = 0; i < out.gj.monoid.dim(); ++i) {
    SubmonomialMatrix full = v.matrix_of(out.gj.basis_reps[i]);
    std::vector<std::optional<MatrixEntry>> cols(d);
    for (uint32_t jj = 0; jj < d; ++jj) {
      const auto& col = full.column(out.carrier[jj]);
      if (!col) continue;
      if (pos[col->row] < 0)
        throw std::logic_error("restricted action leaves the carrier");
      cols[jj] = MatrixEntry{static_cast<uint32_t>(pos[col->row]), col->label};
    }
    action.push_back(SubmonomialMatrix::from_columns(m.group(), d, cols));
  }
  out.rep = Representation::validate(out.gj.monoid, std::move(action));
  return out;
}

GroupSimple coset_simple(const MaximalSubgroup& gj,
                         std::vector<MonoidElement> subgroup) {
  const GLinearMonoid& g = gj.monoid;
  const PointedGroup& G = g.group();
  std::set<uint64_t> h;
  for (const auto& x : subgroup) {
    if (x.zero) fail(Errc::BadInput, "subgroup contains zero");
    h.insert(g.encode(x));
  }
  if (!h.count(g.encode(g.one_elem())))
    fail(Errc::BadInput, "subgroup misses the identity");
  for (uint64_t a : h)
    for (uint64_t b : h)
      if (!h.count(g.encode(g.product(g.decode(a), g.decode(b)))))
        fail(Errc::BadInput, "subgroup is not closed");
  for (uint64_t a : h) {
    MonoidElement x = g.decode(a);
    if (x.b == g.one_index() && !G.is_one(x.g))
      fail(Errc::FreenessViolated,
           "subgroup meets the central scalars at " + g.show(x));
  }

  // Left cosets, keyed by their least member.
  const uint64_t total = g.size();
  std::vector<uint64_t> coset_of(total, 0);
  std::vector<uint64_t> coset_reps;
  {
    std::vector<bool> seen(total, false);
    for (uint64_t a = 1; a < total; ++a) {
      if (seen[a]) continue;
      uint64_t least = a;
      std::vector<uint64_t> members;
      for (uint64_t hh : h) {
        uint64_t c = g.encode(g.product(g.decode(a), g.decode(hh)));
        members.push_back(c);
        least = std::min(least, c);
      }
      for (uint64_t c : members) {
        seen[c] = true;
        coset_of[c] = least;
      }
      coset_reps.push_back(least);
    }
    std::sort(coset_reps.begin(), coset_reps.end());
  }

  // Group the cosets into scalar orbits.
  std::map<uint64_t, std::pair<uint32_t, GroupElement>> locate;
  std::vector<uint64_t> orbit_reps;
  for (uint64_t c : coset_reps) {
    if (locate.count(c)) continue;
    uint32_t coord = static_cast<uint32_t>(orbit_reps.size());
    orbit_reps.push_back(c);
    MonoidElement a0 = g.decode(c);
    for (const GroupElement& s : G.elements()) {
      MonoidElement sa = a0;
      sa.g = G.mul(s, sa.g);
      uint64_t target = coset_of[g.encode(sa)];
      if (locate.count(target))
        fail(Errc::FreenessViolated, "scalars do not act freely on cosets");
      locate[target] = {coord, s};
    }
  }

  const uint32_t d = static_cast<uint32_t>(orbit_reps.size());
  std::vector<SubmonomialMatrix> action;
  for (uint32_t b = 0; b < g.dim(); ++b) {
    MonoidElement beta = MonoidElement::of(G.one(), b);
    std::vector<std::optional<MatrixEntry>> cols(d);
    for (uint32_t c = 0; c < d; ++c) {
      MonoidElement a0 = g.decode(orbit_reps[c]);
      uint64_t target = coset_of[g.encode(g.product(beta, a0))];
      const auto& [coord, s] = locate.at(target);
      cols[c] = MatrixEntry{coord, s};
    }
    action.push_back(SubmonomialMatrix::from_columns(G, d, cols));
  }

  GroupSimple out;
  std::sort(subgroup.begin(), subgroup.end(),
            [&](const MonoidElement& a, const MonoidElement& b) {
              return g.encode(a) < g.encode(b);
            });
  out.subgroup = std::move(subgroup);
  out.carrier = Representation::validate(g, std::move(action));
  return out;
}

std::vector<GroupSimple> group_simples(const MaximalSubgroup& gj,
                                       const Caps& caps) {
  const GLinearMonoid& g = gj.monoid;
  const uint64_t order = g.size() - 1;
  if (order > caps.max_subgroup_order)
    fail(Errc::GroupTooLarge, "group of order " + std::to_string(order));

  std::vector<uint64_t> all;
  for (uint64_t c = 1; c < g.size(); ++c) all.push_back(c);

  auto closure = [&](std::set<uint64_t> s) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<uint64_t> cur(s.begin(), s.end());
      for (uint64_t a : cur)
        for (uint64_t b : cur) {
          uint64_t p = g.encode(g.product(g.decode(a), g.decode(b)));
          if (s.insert(p).second) grew = true;
        }
    }
    return std::vector<uint64_t>(s.begin(), s.end());
  };

  std::set<std::vector<uint64_t>> subgroups;
  std::vector<std::vector<uint64_t>> queue;
  std::vector<uint64_t> trivial = closure({g.encode(g.one_elem())});
  subgroups.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    std::vector<uint64_t> s = queue.back();
    queue.pop_back();
    for (uint64_t x : all) {
      if (std::binary_search(s.begin(), s.end(), x)) continue;
      std::set<uint64_t> seed(s.begin(), s.end());
      seed.insert(x);
      std::vector<uint64_t> t = closure(std::move(seed));
      if (subgroups.insert(t).second) queue.push_back(t);
    }
  }

  // Keep the admissible ones, one per conjugacy class.
  std::set<std::vector<uint64_t>> canonical;
  std::vector<std::vector<uint64_t>> picked;
  for (const auto& s : subgroups) {
    bool free = true;
    for (uint64_t c : s) {
      MonoidElement x = g.decode(c);
      if (x.b == g.one_index() && !g.group().is_one(x.g)) free = false;
    }
    if (!free) continue;
    std::vector<uint64_t> best = s;
    for (uint64_t u : all) {
      MonoidElement eu = g.decode(u);
      MonoidElement inv = invert_in(g, eu);
      std::vector<uint64_t> conj;
      conj.reserve(s.size());
      for (uint64_t c : s)
        conj.push_back(g.encode(g.product(eu, g.decode(c), inv)));
      std::sort(conj.begin(), conj.end());
      if (conj < best) best = std::move(conj);
    }
    if (canonical.insert(best).second) picked.push_back(std::move(best));
  }
  std::sort(picked.begin(), picked.end(),
            [](const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  std::vector<GroupSimple> out;
  for (const auto& s : picked) {
    std::vector<MonoidElement> members;
    members.reserve(s.size());
    for (uint64_t c : s) members.push_back(g.decode(c));
    out.push_back(coset_simple(gj, std::move(members)));
  }
  return out;
}

InducedRep induce(const GLinearMonoid& m, const MonoidElement& e,
                  const Representation& w) {
  if (!is_left_inductive(m))
    fail(Errc::NotLeftInductive, "induction needs a left inductive monoid");
  if (e.zero || !(m.product(e, e) == e))
    fail(Errc::NotIdempotent, "induction needs a nonzero idempotent");
  MaximalSubgroup gj = maximal_subgroup(m, e);
  if (!w.monoid().same_structure(gj.monoid))
    fail(Errc::GroupMismatch,
         "base representation is not over the maximal subgroup of the "
         "idempotent");
  const PointedGroup& G = m.group();
  const JClassReport& report = j_classes(m);
  const uint32_t jc = report.class_of[e.b];

  // P(e)e: the class members fixed by e on the right.
  std::vector<uint32_t> x_basis;
  for (uint32_t c : report.classes[jc].basis)
    if (m.product(MonoidElement::of(G.one(), c), e) ==
        MonoidElement::of(G.one(), c))
      x_basis.push_back(c);

  // Local encodings for tensors (x, w).
  const uint64_t wn = static_cast<uint64_t>(w.dim()) * G.order();
  auto wenc = [&](const GroupElement& h, uint32_t wc) {
    return static_cast<uint64_t>(wc) * G.order() + G.index_of(h);
  };
  auto pair_enc = [&](uint64_t xenc, uint64_t we) { return xenc * wn + we; };

  std::vector<std::pair<MonoidElement, MonoidElement>> gj_pairs;  // (alpha, alpha^-1)
  for (uint64_t c = 1; c < gj.monoid.size(); ++c) {
    MonoidElement alpha = gj.monoid.decode(c);
    gj_pairs.emplace_back(alpha, invert_in(gj.monoid, alpha));
  }

  std::set<uint32_t> x_set(x_basis.begin(), x_basis.end());
  std::map<uint64_t, uint64_t> class_of;  // pair encode -> least member
  std::vector<uint64_t> class_reps;
  for (uint32_t c : x_basis) {
    for (const GroupElement& xg : G.elements()) {
      MonoidElement x = MonoidElement::of(xg, c);
      for (uint32_t wc = 0; wc < w.dim(); ++wc) {
        for (const GroupElement& h : G.elements()) {
          uint64_t pe = pair_enc(m.encode(x), wenc(h, wc));
          if (class_of.count(pe)) continue;
          uint64_t least = pe;
          std::vector<uint64_t> members;
          for (const auto& [alpha, alpha_inv] : gj_pairs) {
            MonoidElement xa = m.product(x, gj.to_parent(alpha));
            if (xa.zero || !x_set.count(xa.b))
              throw std::logic_error("P(e)e is not closed on the right");
            Vector wv = w.matrix_of(alpha_inv).apply(
                Vector::unit(h, wc));
            if (wv.is_zero())
              throw std::logic_error("group element kills a base vector");
            uint64_t pe2 = pair_enc(m.encode(xa),
                                    wenc(wv.value->first, wv.value->second));
            members.push_back(pe2);
            least = std::min(least, pe2);
          }
          for (uint64_t p : members) class_of[p] = least;
          class_reps.push_back(least);
        }
      }
    }
  }
  std::sort(class_reps.begin(), class_reps.end());
  class_reps.erase(std::unique(class_reps.begin(), class_reps.end()),
                   class_reps.end());

  auto decode_pair = [&](uint64_t pe) {
    uint64_t xenc = pe / wn, we = pe % wn;
    MonoidElement x = m.decode(xenc);
    GroupElement h = G.element_at(we % G.order());
    uint32_t wc = static_cast<uint32_t>(we / G.order());
    return std::tuple<MonoidElement, GroupElement, uint32_t>{x, h, wc};
  };

  // Scalar orbits of classes.
  std::map<uint64_t, std::pair<uint32_t, GroupElement>> locate;
  InducedRep out;
  out.e = e;
  for (uint64_t c : class_reps) {
    if (locate.count(c)) continue;
    uint32_t coord = static_cast<uint32_t>(out.coord_labels.size());
    auto [x0, h0, wc0] = decode_pair(c);
    out.coord_labels.push_back(InducedRep::Tensor{x0, h0, wc0});
    for (const GroupElement& s : G.elements()) {
      MonoidElement sx = x0;
      sx.g = G.mul(s, sx.g);
      uint64_t target = class_of.at(pair_enc(m.encode(sx), wenc(h0, wc0)));
      if (locate.count(target))
        throw std::logic_error("scalars do not act freely on tensors");
      locate[target] = {coord, s};
    }
  }

  const uint32_t d = static_cast<uint32_t>(out.coord_labels.size());
  std::vector<SubmonomialMatrix> action;
  for (uint32_t a = 0; a < m.dim(); ++a) {
    MonoidElement ea = MonoidElement::of(G.one(), a);
    std::vector<std::optional<MatrixEntry>> cols(d);
    for (uint32_t c = 0; c < d; ++c) {
      const auto& t = out.coord_labels[c];
      MonoidElement ax = m.product(ea, t.x);
      if (ax.zero || report.class_of[ax.b] != jc) continue;
      uint64_t target = class_of.at(pair_enc(m.encode(ax), wenc(t.wg, t.wc)));
      const auto& [coord, s] = locate.at(target);
      cols[c] = MatrixEntry{coord, s};
    }
    action.push_back(SubmonomialMatrix::from_columns(G, d, cols));
  }
  out.rep = Representation::validate(m, std::move(action));
  out.base = w;
  out.gj = std::move(gj);
  return out;
}

std::vector<uint32_t> radical(const InducedRep& iv) {
  if (!is_simple(iv.base))
    fail(Errc::BaseNotSimple, "radical is defined for simple bases");
  const Representation& r = iv.rep;
  SubmonomialMatrix me = r.matrix_of(iv.e);
  std::vector<uint32_t> out;
  for (uint32_t c = 0; c < r.dim(); ++c) {
    bool dead = true;
    for (uint32_t a = 0; a < r.monoid().dim() && dead; ++a) {
      const auto& col = r.matrix(a).column(c);
      if (col && me.column(col->row)) dead = false;
    }
    if (dead) out.push_back(c);
  }
  if (!is_action_closed(r, out))
    throw std::logic_error("radical is not action-closed");
  return out;
}

Representation cmp_simple(const GLinearMonoid& m, const MonoidElement& e,
                          const Representation& w, const Caps& caps) {
  (void)caps;
  InducedRep iv = induce(m, e, w);
  std::vector<uint32_t> n = radical(iv);
  Representation q = quotient(iv.rep, n);
  if (!is_simple(q)) throw std::logic_error("induced quotient is not simple");
  auto apex = apex_class(q);
  if (!apex || *apex != j_classes(m).class_of[e.b])
    throw std::logic_error("induced quotient has the wrong apex");
  return q;
}

std::vector<SimpleRep> all_simples(const GLinearMonoid& m, const Caps& caps) {
  if (!is_left_inductive(m))
    fail(Errc::NotLeftInductive, "classification needs a left inductive monoid");
  const JClassReport& report = j_classes(m);
  std::vector<SimpleRep> out;
  for (uint32_t jc = 0; jc < report.classes.size(); ++jc) {
    const JClass& cls = report.classes[jc];
    if (!cls.regular) continue;
    MonoidElement e = cls.idempotents.front();
    MaximalSubgroup gj = maximal_subgroup(m, e);
    for (GroupSimple& gs : group_simples(gj, caps)) {
      Representation q = cmp_simple(m, e, gs.carrier, caps);
      bool fresh = true;
      for (const auto& prev : out) {
        if (prev.apex != jc || prev.rep.dim() != q.dim()) continue;
        bool iso = false;
        try {
          iso = are_isomorphic(prev.rep, q, caps).has_value();
        } catch (const Error& err) {
          if (err.code() != Errc::DimTooLarge) throw;
        }
        if (iso) {
          fresh = false;
          break;
        }
      }
      if (fresh) out.push_back(SimpleRep{std::move(q), jc});
    }
  }
  return out;
}

Representation v_sh(const GLinearMonoid& in_monoid,
                    const std::vector<uint32_t>& s,
                    const std::vector<SubmonomialMatrix>& h) {
  const auto* model = in_monoid.matrix_model();
  if (!model) fail(Errc::BadInput, "v_sh needs a matrix-model monoid");
  const PointedGroup& G = in_monoid.group();
  const uint32_t n = (*model)[0].rows();
  if (s.empty()) fail(Errc::BadInput, "v_sh needs a nonempty support");
  for (uint32_t j : s)
    if (j >= n) fail(Errc::BadInput, "support index out of range");

  // Validate H: support and image S, closed, contains E_S, meets the
  // diagonal scalars trivially.
  std::set<uint32_t> s_set(s.begin(), s.end());
  if (s_set.size() != s.size()) fail(Errc::BadInput, "support repeats");
  std::set<std::vector<int64_t>> h_set;
  for (const auto& mat : h) {
    if (mat.rows() != n || mat.cols() != n || mat.group() != G)
      fail(Errc::BadInput, "subgroup matrix of the wrong shape");
    auto sup = mat.support();
    auto img = mat.image_rows();
    if (std::set<uint32_t>(sup.begin(), sup.end()) != s_set ||
        std::set<uint32_t>(img.begin(), img.end()) != s_set)
      fail(Errc::BadInput, "subgroup matrix must stabilize the support");
    h_set.insert(mat.encode());
  }
  {
    std::vector<std::optional<MatrixEntry>> cols(n);
    for (uint32_t j : s) cols[j] = MatrixEntry{j, G.one()};
    SubmonomialMatrix es = SubmonomialMatrix::from_columns(G, n, cols);
    if (!h_set.count(es.encode()))
      fail(Errc::BadInput, "subgroup misses the identity E_S");
  }
  for (const auto& a : h)
    for (const auto& b : h)
      if (!h_set.count(compose(a, b).encode()))
        fail(Errc::BadInput, "subgroup is not closed");
  for (const auto& mat : h) {
    bool diagonal = true;
    GroupElement val = G.one();
    bool first = true;
    for (uint32_t j : s) {
      const auto& col = mat.column(j);
      if (col->row != j) diagonal = false;
      if (first) {
        val = col->label;
        first = false;
      } else if (!(col->label == val)) {
        diagonal = false;
      }
    }
    if (diagonal && !G.is_one(val))
      fail(Errc::FreenessViolated, "subgroup meets the diagonal scalars");
  }

  // Carrier: matrices with support exactly S, modulo right cosets of H.
  std::vector<SubmonomialMatrix> carrier;
  {
    std::vector<uint32_t> rows;
    std::vector<bool> used(n, false);
    std::function<void()> rec = [&]() {
      if (rows.size() == s.size()) {
        uint64_t total = 1;
        for (size_t i = 0; i < s.size(); ++i) total *= G.order();
        for (uint64_t code = 0; code < total; ++code) {
          uint64_t cc = code;
          std::vector<std::optional<MatrixEntry>> cols(n);
          for (size_t i = 0; i < s.size(); ++i) {
            cols[s[i]] = MatrixEntry{rows[i], G.element_at(cc % G.order())};
            cc /= G.order();
          }
          carrier.push_back(SubmonomialMatrix::from_columns(G, n, cols));
        }
        return;
      }
      for (uint32_t r = 0; r < n; ++r) {
        if (used[r]) continue;
        used[r] = true;
        rows.push_back(r);
        rec();
        rows.pop_back();
        used[r] = false;
      }
    };
    rec();
  }

  std::map<std::vector<int64_t>, std::vector<int64_t>> coset_of;
  std::vector<std::vector<int64_t>> coset_reps;
  for (const auto& a : carrier) {
    auto akey = a.encode();
    if (coset_of.count(akey)) continue;
    std::vector<std::vector<int64_t>> members;
    std::vector<int64_t> least = akey;
    for (const auto& hh : h) {
      auto key = compose(a, hh).encode();
      least = std::min(least, key);
      members.push_back(std::move(key));
    }
    for (auto& key : members) coset_of[std::move(key)] = least;
    coset_reps.push_back(least);
  }
  std::sort(coset_reps.begin(), coset_reps.end());
  coset_reps.erase(std::unique(coset_reps.begin(), coset_reps.end()),
                   coset_reps.end());

  std::map<std::vector<int64_t>, SubmonomialMatrix> by_key;
  for (const auto& a : carrier) by_key.emplace(a.encode(), a);

  std::map<std::vector<int64_t>, std::pair<uint32_t, GroupElement>> locate;
  std::vector<SubmonomialMatrix> coord_reps;
  for (const auto& c : coset_reps) {
    if (locate.count(c)) continue;
    uint32_t coord = static_cast<uint32_t>(coord_reps.size());
    SubmonomialMatrix a0 = by_key.at(c);
    coord_reps.push_back(a0);
    for (const GroupElement& g : G.elements()) {
      auto target = coset_of.at(scalar_mul(g, a0).encode());
      if (locate.count(target))
        fail(Errc::FreenessViolated, "scalars do not act freely on cosets");
      locate[target] = {coord, g};
    }
  }

  const uint32_t d = static_cast<uint32_t>(coord_reps.size());
  std::vector<SubmonomialMatrix> action;
  for (uint32_t b = 0; b < in_monoid.dim(); ++b) {
    const SubmonomialMatrix& r = (*model)[b];
    std::vector<std::optional<MatrixEntry>> cols(d);
    for (uint32_t c = 0; c < d; ++c) {
      SubmonomialMatrix p = compose(r, coord_reps[c]);
      if (p.rank() != s.size()) continue;
      const auto& [coord, g] = locate.at(coset_of.at(p.encode()));
      cols[c] = MatrixEntry{coord, g};
    }
    action.push_back(SubmonomialMatrix::from_columns(G, d, cols));
  }
  return Representation::validate(in_monoid, std::move(action));
}

namespace {

struct SymmPair {
  std::vector<uint32_t> perm;        // position map on S
  std::vector<GroupElement> labels;  // label per column position
  bool operator<(const SymmPair& o) const {
    return std::tie(perm, labels) < std::tie(o.perm, o.labels);
  }
  bool operator==(const SymmPair& o) const {
    return perm == o.perm && labels == o.labels;
  }
};

SymmPair extract_pair(const PointedGroup& G, const std::vector<uint32_t>& s,
                      const SubmonomialMatrix& mat) {
  std::vector<uint32_t> pos(mat.rows(), 0);
  for (uint32_t i = 0; i < s.size(); ++i) pos[s[i]] = i;
  SymmPair out;
  out.perm.resize(s.size());
  out.labels.resize(s.size());
  for (uint32_t i = 0; i < s.size(); ++i) {
    const auto& col = mat.column(s[i]);
    out.perm[i] = pos[col->row];
    out.labels[i] = col->label;
  }
  (void)G;
  return out;
}

}  // namespace

bool vsh_isomorphic(const PointedGroup& G, const std::vector<uint32_t>& s,
                    const std::vector<SubmonomialMatrix>& h,
                    const std::vector<uint32_t>& t,
                    const std::vector<SubmonomialMatrix>& k) {
  if (s.size() != t.size()) return false;
  const uint32_t d = static_cast<uint32_t>(s.size());
  std::set<SymmPair> hp, kp;
  for (const auto& mat : h) hp.insert(extract_pair(G, s, mat));
  for (const auto& mat : k) kp.insert(extract_pair(G, t, mat));

  std::vector<uint32_t> psi(d);  // position map: T slot -> S slot
  std::iota(psi.begin(), psi.end(), 0);
  do {
    uint64_t total = 1;
    for (uint32_t i = 0; i < d; ++i) total *= G.order();
    for (uint64_t code = 0; code < total; ++code) {
      std::vector<GroupElement> tw(d);
      uint64_t cc = code;
      for (uint32_t i = 0; i < d; ++i) {
        tw[i] = G.element_at(cc % G.order());
        cc /= G.order();
      }
      std::vector<uint32_t> psi_inv(d);
      for (uint32_t i = 0; i < d; ++i) psi_inv[psi[i]] = i;
      std::set<SymmPair> image;
      for (const auto& pair : hp) {
        SymmPair img;
        img.perm.resize(d);
        img.labels.resize(d);
        for (uint32_t x = 0; x < d; ++x) {
          uint32_t fs = pair.perm[psi[x]];  // f(psi x) as an S position
          img.perm[x] = psi_inv[fs];
          img.labels[x] = G.mul(G.mul(tw[psi[x]], G.inv(tw[fs])),
                                pair.labels[psi[x]]);
        }
        image.insert(std::move(img));
      }
      if (image == kp) return true;
    }
  } while (std::next_permutation(psi.begin(), psi.end()));
  return false;
}

std::optional<std::vector<uint32_t>> complement(
    const Representation& v, const std::vector<uint32_t>& w) {
  std::vector<bool> in(v.dim(), false);
  for (uint32_t c : w) in[c] = true;
  std::vector<uint32_t> rest;
  for (uint32_t c = 0; c < v.dim(); ++c)
    if (!in[c]) rest.push_back(c);
  if (is_action_closed(v, rest)) return rest;
  return std::nullopt;
}

namespace {

// Left translation on the group of units, extended by zero.
Representation units_rep(const GLinearMonoid& m) {
  const JClassReport& report = j_classes(m);
  uint32_t uc = report.class_of[m.one_index()];
  const std::vector<uint32_t>& units = report.classes[uc].basis;
  std::vector<int32_t> pos(m.dim(), -1);
  for (uint32_t i = 0; i < units.size(); ++i)
    pos[units[i]] = static_cast<int32_t>(i);
  const uint32_t d = static_cast<uint32_t>(units.size());
  std::vector<SubmonomialMatrix> action;
  for (uint32_t a = 0; a < m.dim(); ++a) {
    std::vector<std::optional<MatrixEntry>> cols(d);
    for (uint32_t i = 0; i < d; ++i) {
      MonoidElement p = m.product(MonoidElement::of(m.group().one(), a),
                                  MonoidElement::of(m.group().one(), units[i]));
      if (!p.zero && pos[p.b] >= 0)
        cols[i] = MatrixEntry{static_cast<uint32_t>(pos[p.b]), p.g};
    }
    action.push_back(SubmonomialMatrix::from_columns(m.group(), d, cols));
  }
  return Representation::validate(m, std::move(action));
}

// The obstruction module over a square-zero ideal: (K tensor V) + V with the
// ideal part absorbing the action of K.
std::pair<Representation, std::vector<uint32_t>> nil_ideal_witness(
    const GLinearMonoid& m, const std::vector<uint32_t>& k_basis) {
  Representation v = units_rep(m);
  const uint32_t dv = v.dim();
  const uint32_t nk = static_cast<uint32_t>(k_basis.size());
  std::vector<int32_t> kpos(m.dim(), -1);
  for (uint32_t i = 0; i < nk; ++i)
    kpos[k_basis[i]] = static_cast<int32_t>(i);
  const uint32_t d = nk * dv + dv;
  std::vector<SubmonomialMatrix> action;
  for (uint32_t a = 0; a < m.dim(); ++a) {
    bool a_in_k = kpos[a] >= 0;
    std::vector<std::optional<MatrixEntry>> cols(d);
    for (uint32_t ki = 0; ki < nk && !a_in_k; ++ki)
      for (uint32_t vc = 0; vc < dv; ++vc) {
        const auto& col = v.matrix(a).column(vc);
        if (col)
          cols[ki * dv + vc] = MatrixEntry{ki * dv + col->row, col->label};
      }
    for (uint32_t vc = 0; vc < dv; ++vc) {
      if (!a_in_k) {
        const auto& col = v.matrix(a).column(vc);
        if (col) cols[nk * dv + vc] = MatrixEntry{nk * dv + col->row, col->label};
      } else {
        cols[nk * dv + vc] = MatrixEntry{
            static_cast<uint32_t>(kpos[a]) * dv + vc, m.group().one()};
      }
    }
    action.push_back(SubmonomialMatrix::from_columns(m.group(), d, cols));
  }
  Representation big = Representation::validate(m, std::move(action));
  std::vector<uint32_t> sub(nk * dv);
  std::iota(sub.begin(), sub.end(), 0);
  return {std::move(big), std::move(sub)};
}

// Witness for a monoid whose every nonzero ideal carries an idempotent: embed
// by the principal-factor sum and exhibit a generated subrepresentation of a
// rank layer without a complement.
std::pair<Representation, std::vector<uint32_t>> star_closure_witness(
    const GLinearMonoid& m) {
  std::vector<MonoidElement> idems = idempotents(m);
  std::optional<Representation> phi;
  for (const auto& e : idems) {
    if (e.zero) continue;
    Representation p = rep_from_principal_factor(m, e, Side::Left);
    phi = phi ? direct_sum_rep(*phi, p) : p;
  }
  if (!phi) throw std::logic_error("no nonzero idempotents");

  std::set<std::vector<int64_t>> image;
  for (uint32_t b = 0; b < m.dim(); ++b)
    image.insert(phi->matrix(b).encode());

  std::optional<uint32_t> bad;
  for (uint32_t b = 0; b < m.dim(); ++b) {
    if (!image.count(star(phi->matrix(b)).encode())) {
      bad = b;
      break;
    }
  }
  if (!bad)
    throw std::logic_error(
        "embedded monoid is star-closed although it is not regular");

  SubmonomialMatrix x = phi->matrix(*bad);
  const uint32_t rk = x.rank();
  const PointedGroup& G = m.group();
  auto normalize = [&](const SubmonomialMatrix& mat)
      -> std::pair<SubmonomialMatrix, GroupElement> {
    uint32_t j0 = mat.support().front();
    GroupElement l = mat.column(j0)->label;
    return {scalar_mul(G.inv(l), mat), l};
  };

  std::vector<SubmonomialMatrix> coords;
  std::map<std::vector<int64_t>, uint32_t> index;
  std::vector<uint32_t> queue;
  auto add = [&](const SubmonomialMatrix& mat) {
    auto [rep, l] = normalize(mat);
    auto key = rep.encode();
    auto it = index.find(key);
    if (it == index.end()) {
      index[key] = static_cast<uint32_t>(coords.size());
      queue.push_back(static_cast<uint32_t>(coords.size()));
      coords.push_back(rep);
    }
  };
  add(x);
  add(compose(star(x), x));
  while (!queue.empty()) {
    uint32_t c = queue.back();
    queue.pop_back();
    for (uint32_t a = 0; a < m.dim(); ++a) {
      SubmonomialMatrix p = compose(phi->matrix(a), coords[c]);
      if (p.rank() == rk) add(p);
    }
  }

  const uint32_t d = static_cast<uint32_t>(coords.size());
  std::vector<SubmonomialMatrix> action;
  for (uint32_t a = 0; a < m.dim(); ++a) {
    std::vector<std::optional<MatrixEntry>> cols(d);
    for (uint32_t c = 0; c < d; ++c) {
      SubmonomialMatrix p = compose(phi->matrix(a), coords[c]);
      if (p.rank() != rk) continue;
      auto [rep, l] = normalize(p);
      cols[c] = MatrixEntry{index.at(rep.encode()), l};
    }
    action.push_back(SubmonomialMatrix::from_columns(G, d, cols));
  }
  Representation big = Representation::validate(m, std::move(action));
  auto [xrep, xl] = normalize(x);
  std::vector<uint32_t> sub = sub_generated(big, {index.at(xrep.encode())});
  return {std::move(big), std::move(sub)};
}

}  // namespace

SemisimpleReport is_semisimple(const GLinearMonoid& m, const Caps& caps) {
  SemisimpleReport out;
  if (is_left_inductive(m)) {
    if (is_inverse(m)) {
      out.verdict = Semisimplicity::Semisimple;
      return out;
    }
    out.verdict = Semisimplicity::NotSemisimple;
    const JClassReport& report = j_classes(m);
    // An idempotent-free nonzero ideal yields a square-zero obstruction
    // module. The construction is only a monoid action for some monoids, so
    // it is validated and skipped on failure.
    bool found_nil_ideal = false;
    for (uint32_t jc = 0; jc < report.classes.size(); ++jc) {
      if (report.classes[jc].regular) continue;
      bool all_irregular = true;
      for (uint32_t lower = 0; lower < report.classes.size(); ++lower)
        if (report.leq[lower][jc] && report.classes[lower].regular)
          all_irregular = false;
      if (!all_irregular) continue;
      found_nil_ideal = true;

      // Last nonzero power of the ideal.
      std::vector<uint32_t> ideal = report.classes[jc].ideal;
      std::vector<uint32_t> cur = ideal;
      while (true) {
        std::set<uint32_t> next;
        for (uint32_t x : cur)
          for (uint32_t y : ideal) {
            MonoidElement p =
                m.product(MonoidElement::of(m.group().one(), x),
                          MonoidElement::of(m.group().one(), y));
            if (!p.zero) next.insert(p.b);
          }
        if (next.empty()) break;
        cur.assign(next.begin(), next.end());
      }
      try {
        auto [big, sub] = nil_ideal_witness(m, cur);
        if (!complement(big, sub)) {
          out.witness_rep = std::move(big);
          out.witness_sub = std::move(sub);
          return out;
        }
      } catch (const Error& err) {
        if (err.code() != Errc::NotFunctorial) throw;
      }
    }
    if (!found_nil_ideal) {
      // Every nonzero ideal carries an idempotent: the embedding route
      // applies.
      auto [big, sub] = star_closure_witness(m);
      out.witness_rep = std::move(big);
      out.witness_sub = std::move(sub);
      return out;
    }
    // Bounded search for a complement-free pair among the small
    // representations.
    for (const Representation& r :
         all_reps_upto_iso(m, caps.oracle_max_dim, caps)) {
      for (const auto& w : all_subreps(r, caps)) {
        if (w.empty() || w.size() == r.dim()) continue;
        if (!complement(r, w)) {
          out.witness_rep = r;
          out.witness_sub = w;
          return out;
        }
      }
    }
    // Verdict stands on the structure theorem even without a materialized
    // witness.
    return out;
  }

  // No structural theorem: bounded search for a complement-free pair.
  for (const Representation& r :
       all_reps_upto_iso(m, caps.oracle_max_dim, caps)) {
    for (const auto& w : all_subreps(r, caps)) {
      if (w.empty() || w.size() == r.dim()) continue;
      if (!complement(r, w)) {
        out.verdict = Semisimplicity::NotSemisimple;
        out.witness_rep = r;
        out.witness_sub = w;
        return out;
      }
    }
  }
  out.verdict = Semisimplicity::Unknown;
  return out;
}

Representation phi_h_rep(uint32_t n, const PointedGroup& group,
                         const std::vector<std::vector<uint32_t>>& h_perms) {
  if (n < 1) fail(Errc::BadInput, "phi_h needs n >= 1");
  // All of S_n, as 0-based image vectors in lexicographic order.
  std::vector<std::vector<uint32_t>> sn;
  {
    std::vector<uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      sn.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  auto compose_perm = [&](const std::vector<uint32_t>& a,
                          const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(n);
    for (uint32_t i = 0; i < n; ++i) out[i] = a[b[i]];
    return out;
  };
  auto invert_perm = [&](const std::vector<uint32_t>& a) {
    std::vector<uint32_t> out(n);
    for (uint32_t i = 0; i < n; ++i) out[a[i]] = i;
    return out;
  };

  std::set<std::vector<uint32_t>> h(h_perms.begin(), h_perms.end());
  for (const auto& p : h_perms) {
    if (p.size() != n) fail(Errc::BadInput, "permutation of the wrong size");
    std::vector<bool> seen(n, false);
    for (uint32_t i : p) {
      if (i >= n || seen[i]) fail(Errc::BadInput, "not a permutation");
      seen[i] = true;
    }
  }
  {
    std::vector<uint32_t> id(n);
    std::iota(id.begin(), id.end(), 0);
    if (!h.count(id)) fail(Errc::BadInput, "subgroup misses the identity");
  }
  for (const auto& a : h)
    for (const auto& b : h)
      if (!h.count(compose_perm(a, b)))
        fail(Errc::BadInput, "subgroup is not closed");
  for (const auto& s : sn)
    for (const auto& x : h)
      if (!h.count(compose_perm(compose_perm(s, x), invert_perm(s))))
        fail(Errc::NotNormal, "subgroup is not normal in the symmetric group");

  // Cosets keyed by their least member.
  std::map<std::vector<uint32_t>, std::vector<uint32_t>> coset_of;
  std::vector<std::vector<uint32_t>> coset_reps;
  for (const auto& a : sn) {
    if (coset_of.count(a)) continue;
    std::vector<uint32_t> least = a;
    std::vector<std::vector<uint32_t>> members;
    for (const auto& x : h) {
      auto c = compose_perm(a, x);
      least = std::min(least, c);
      members.push_back(std::move(c));
    }
    for (auto& c : members) coset_of[std::move(c)] = least;
    coset_reps.push_back(least);
  }
  std::sort(coset_reps.begin(), coset_reps.end());
  std::map<std::vector<uint32_t>, uint32_t> coset_index;
  for (uint32_t i = 0; i < coset_reps.size(); ++i)
    coset_index[coset_reps[i]] = i;
  const uint32_t d = static_cast<uint32_t>(coset_reps.size());

  GLinearMonoid flat = flat_symmetric_inverse_monoid(n, group);
  std::vector<SubmonomialMatrix> action;
  for (uint32_t b = 0; b < flat.dim(); ++b) {
    SubmonomialMatrix a = flat.matrix_of(MonoidElement::of(
        flat.group().one(), b));
    if (a.rank() != n) {
      action.push_back(SubmonomialMatrix::zero(group, d, d));
      continue;
    }
    std::vector<uint32_t> pi(n);
    GroupElement lambda = group.one();
    for (uint32_t j = 0; j < n; ++j) {
      pi[j] = a.column(j)->row;
      lambda = group.mul(lambda, a.column(j)->label);
    }
    std::vector<std::optional<MatrixEntry>> cols(d);
    for (uint32_t cb = 0; cb < d; ++cb) {
      auto target = coset_of.at(compose_perm(pi, coset_reps[cb]));
      cols[cb] = MatrixEntry{coset_index.at(target), lambda};
    }
    action.push_back(SubmonomialMatrix::from_columns(group, d, cols));
  }
  return Representation::validate(flat, std::move(action));
}

}  // namespace fone
