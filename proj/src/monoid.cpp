#include "fone/monoid.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace fone {

struct GLinearMonoid::Cache {
  std::once_flag jflag;
  std::unique_ptr<JClassReport> jreport;
  std::once_flag model_flag;
  std::map<std::vector<int64_t>, uint32_t> model_index;
};

std::optional<uint32_t> GLinearMonoid::basis_index(
    const std::string& name) const {
  for (uint32_t b = 0; b < names_.size(); ++b)
    if (names_[b] == name) return b;
  return std::nullopt;
}

MonoidElement GLinearMonoid::product(const MonoidElement& x,
                                     const MonoidElement& y) const {
  if (x.zero || y.zero) return MonoidElement::zero_elem();
  const TableEntry& t = table(x.b, y.b);
  if (!t) return MonoidElement::zero_elem();
  return MonoidElement::of(group_.mul(group_.mul(x.g, y.g), t->first),
                           t->second);
}

uint64_t GLinearMonoid::encode(const MonoidElement& x) const {
  if (x.zero) return 0;
  return 1 + static_cast<uint64_t>(x.b) * group_.order() + group_.index_of(x.g);
}

MonoidElement GLinearMonoid::decode(uint64_t code) const {
  if (code == 0) return MonoidElement::zero_elem();
  --code;
  return MonoidElement::of(group_.element_at(code % group_.order()),
                           static_cast<uint32_t>(code / group_.order()));
}

std::vector<MonoidElement> GLinearMonoid::elements() const {
  std::vector<MonoidElement> out;
  out.reserve(size());
  for (uint64_t c = 0; c < size(); ++c) out.push_back(decode(c));
  return out;
}

std::string GLinearMonoid::show(const MonoidElement& x) const {
  if (x.zero) return "0";
  if (group_.is_one(x.g)) return names_[x.b];
  return names_[x.b] + "@" + group_.show(x.g);
}

GLinearMonoid GLinearMonoid::validate(PointedGroup group,
                                      std::vector<std::string> names,
                                      uint32_t one,
                                      std::vector<TableEntry> table) {
  const size_t k = names.size();
  if (k == 0) fail(Errc::NoIdentity, "empty basis");
  if (one >= k) fail(Errc::NoIdentity, "identity index out of range");
  if (table.size() != k * k)
    fail(Errc::IncompleteTable, "expected " + std::to_string(k * k) +
                                    " products, got " +
                                    std::to_string(table.size()));
  {
    std::set<std::string> seen;
    for (const auto& n : names) {
      if (n.empty()) fail(Errc::BadInput, "empty basis name");
      if (!seen.insert(n).second)
        fail(Errc::BadInput, "duplicate basis name " + n);
    }
  }
  for (const auto& t : table) {
    if (!t) continue;
    if (t->second >= k) fail(Errc::BadInput, "table target out of range");
    group.check_element(t->first);
  }

  GLinearMonoid m;
  m.group_ = std::move(group);
  m.names_ = std::move(names);
  m.one_ = one;
  m.table_ = std::move(table);
  m.cache_ = std::make_shared<Cache>();

  for (uint32_t b = 0; b < k; ++b) {
    const TableEntry& l = m.table(one, b);
    const TableEntry& r = m.table(b, one);
    if (!l || l->second != b || !m.group_.is_one(l->first) || !r ||
        r->second != b || !m.group_.is_one(r->first))
      fail(Errc::NoIdentity,
           "marked identity does not fix basis element " + m.names_[b]);
  }

  for (uint32_t a = 0; a < k; ++a) {
    MonoidElement ea = MonoidElement::of(m.group_.one(), a);
    for (uint32_t b = 0; b < k; ++b) {
      MonoidElement eb = MonoidElement::of(m.group_.one(), b);
      MonoidElement ab = m.product(ea, eb);
      for (uint32_t c = 0; c < k; ++c) {
        MonoidElement ec = MonoidElement::of(m.group_.one(), c);
        if (!(m.product(ab, ec) == m.product(ea, m.product(eb, ec))))
          fail(Errc::NotAssociative, "witness (" + m.names_[a] + ", " +
                                         m.names_[b] + ", " + m.names_[c] +
                                         ")");
      }
    }
  }
  return m;
}

MonoidElement GLinearMonoid::element_of_matrix(
    const SubmonomialMatrix& m) const {
  if (model_.empty()) fail(Errc::BadInput, "monoid has no matrix model");
  if (m.is_zero_matrix()) return MonoidElement::zero_elem();
  std::call_once(cache_->model_flag, [&] {
    for (uint32_t b = 0; b < model_.size(); ++b)
      cache_->model_index[model_[b].encode()] = b;
  });
  GroupElement scalar = group_.one();
  SubmonomialMatrix rep = m;
  if (m.group() == group_) {
    // Scalars live outside the basis: normalize the orbit representative.
    uint32_t j0 = m.support().front();
    scalar = m.column(j0)->label;
    rep = scalar_mul(group_.inv(scalar), m);
  }
  auto it = cache_->model_index.find(rep.encode());
  if (it == cache_->model_index.end())
    fail(Errc::BadInput, "matrix not in the monoid model");
  return MonoidElement::of(scalar, it->second);
}

SubmonomialMatrix GLinearMonoid::matrix_of(const MonoidElement& x) const {
  if (model_.empty()) fail(Errc::BadInput, "monoid has no matrix model");
  if (x.zero)
    return SubmonomialMatrix::zero(model_[0].group(), model_[0].rows(),
                                   model_[0].cols());
  if (model_[0].group() != group_) return model_[x.b];
  return scalar_mul(x.g, model_[x.b]);
}

namespace {

std::string matrix_basis_name(const PointedGroup& group,
                              const SubmonomialMatrix& m) {
  if (m.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (uint32_t j : m.support()) {
    if (!first) os << '_';
    first = false;
    os << (j + 1) << '-' << (m.column(j)->row + 1);
    const GroupElement& g = m.column(j)->label;
    if (!group.is_one(g)) {
      os << '.';
      for (size_t i = 0; i < g.size(); ++i) {
        if (i) os << ',';
        os << g[i];
      }
    }
  }
  return os.str();
}

}  // namespace

GLinearMonoid symmetric_inverse_monoid(uint32_t n, const PointedGroup& group) {
  // Orbit representatives: label of the least occupied column normalized to 1.
  std::vector<SubmonomialMatrix> reps;
  std::map<std::vector<int64_t>, uint32_t> index;
  for_each_matrix(group, n, n, [&](const SubmonomialMatrix& m) {
    if (m.is_zero_matrix()) return;
    uint32_t j0 = m.support().front();
    if (!group.is_one(m.column(j0)->label)) return;
    reps.push_back(m);
  });
  // Identity first, then lexicographic by encoding.
  std::sort(reps.begin(), reps.end(),
            [](const SubmonomialMatrix& a, const SubmonomialMatrix& b) {
              if (a.is_identity() != b.is_identity()) return a.is_identity();
              return a.encode() < b.encode();
            });
  for (uint32_t i = 0; i < reps.size(); ++i) index[reps[i].encode()] = i;

  auto name_of = [&](const SubmonomialMatrix& m) {
    return matrix_basis_name(group, m);
  };

  const uint32_t k = static_cast<uint32_t>(reps.size());
  std::vector<std::string> names(k);
  for (uint32_t i = 0; i < k; ++i) names[i] = name_of(reps[i]);
  std::vector<GLinearMonoid::TableEntry> table(static_cast<size_t>(k) * k);
  for (uint32_t i = 0; i < k; ++i) {
    for (uint32_t j = 0; j < k; ++j) {
      SubmonomialMatrix prod = compose(reps[i], reps[j]);
      if (prod.is_zero_matrix()) continue;
      uint32_t j0 = prod.support().front();
      GroupElement l = prod.column(j0)->label;
      SubmonomialMatrix rep = scalar_mul(group.inv(l), prod);
      table[static_cast<size_t>(i) * k + j] =
          std::make_pair(l, index.at(rep.encode()));
    }
  }
  GLinearMonoid m = GLinearMonoid::validate(group, std::move(names), 0,
                                            std::move(table));
  m.model_ = std::move(reps);
  return m;
}

GLinearMonoid flat_symmetric_inverse_monoid(uint32_t n,
                                            const PointedGroup& group) {
  std::vector<SubmonomialMatrix> reps;
  for_each_matrix(group, n, n, [&](const SubmonomialMatrix& m) {
    if (!m.is_zero_matrix()) reps.push_back(m);
  });
  std::sort(reps.begin(), reps.end(),
            [](const SubmonomialMatrix& a, const SubmonomialMatrix& b) {
              if (a.is_identity() != b.is_identity()) return a.is_identity();
              return a.encode() < b.encode();
            });
  std::map<std::vector<int64_t>, uint32_t> index;
  for (uint32_t i = 0; i < reps.size(); ++i) index[reps[i].encode()] = i;

  const uint32_t k = static_cast<uint32_t>(reps.size());
  PointedGroup trivial{std::vector<uint32_t>{}};
  std::vector<std::string> names(k);
  for (uint32_t i = 0; i < k; ++i) names[i] = matrix_basis_name(group, reps[i]);
  std::vector<GLinearMonoid::TableEntry> table(static_cast<size_t>(k) * k);
  for (uint32_t i = 0; i < k; ++i) {
    for (uint32_t j = 0; j < k; ++j) {
      SubmonomialMatrix prod = compose(reps[i], reps[j]);
      if (prod.is_zero_matrix()) continue;
      table[static_cast<size_t>(i) * k + j] =
          std::make_pair(trivial.one(), index.at(prod.encode()));
    }
  }
  GLinearMonoid m = GLinearMonoid::validate(trivial, std::move(names), 0,
                                            std::move(table));
  m.model_ = std::move(reps);
  return m;
}

GLinearMonoid null_monoid(uint32_t n, const PointedGroup& group) {
  if (n < 1) fail(Errc::BadInput, "null_monoid needs n >= 1");
  const uint32_t k = n + 1;
  std::vector<std::string> names;
  for (uint32_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("1");
  std::vector<GLinearMonoid::TableEntry> table(static_cast<size_t>(k) * k);
  auto at = [&](uint32_t i, uint32_t j) -> GLinearMonoid::TableEntry& {
    return table[static_cast<size_t>(i) * k + j];
  };
  for (uint32_t i = 0; i < k; ++i) {
    at(i, n) = std::make_pair(group.one(), i);
    at(n, i) = std::make_pair(group.one(), i);
  }
  return GLinearMonoid::validate(group, std::move(names), n, std::move(table));
}

namespace {

struct PathWord {
  bool zero = false;
  uint32_t src = 0, tgt = 0;          // valid when !zero
  std::vector<uint32_t> arrows;       // empty = trivial path at src == tgt
  bool operator==(const PathWord& o) const {
    if (zero != o.zero) return false;
    return zero || (src == o.src && tgt == o.tgt && arrows == o.arrows);
  }
  bool operator<(const PathWord& o) const {
    return std::tie(zero, src, tgt, arrows) <
           std::tie(o.zero, o.src, o.tgt, o.arrows);
  }
};

}  // namespace

GLinearMonoid path_monoid(const Quiver& quiver, const PointedGroup& group) {
  const uint32_t nv = static_cast<uint32_t>(quiver.vertices.size());
  if (nv == 0) fail(Errc::BadInput, "quiver needs at least one vertex");
  std::map<std::string, uint32_t> vid, aid;
  for (uint32_t v = 0; v < nv; ++v) {
    if (!vid.emplace(quiver.vertices[v], v).second)
      fail(Errc::BadInput, "duplicate vertex " + quiver.vertices[v]);
  }
  std::vector<uint32_t> asrc, atgt;
  for (const auto& a : quiver.arrows) {
    if (!vid.count(a.src) || !vid.count(a.tgt))
      fail(Errc::BadInput, "arrow " + a.name + " references unknown vertex");
    if (vid.count(a.name) || !aid.emplace(a.name, (uint32_t)asrc.size()).second)
      fail(Errc::BadInput, "duplicate name " + a.name);
    asrc.push_back(vid[a.src]);
    atgt.push_back(vid[a.tgt]);
  }

  auto word_of = [&](const std::vector<std::string>& path) -> PathWord {
    if (path.empty()) fail(Errc::BadInput, "empty path in relation");
    PathWord w;
    for (size_t i = 0; i < path.size(); ++i) {
      auto it = aid.find(path[i]);
      if (it == aid.end()) fail(Errc::BadInput, "unknown arrow " + path[i]);
      uint32_t a = it->second;
      if (i == 0)
        w.src = asrc[a];
      else if (asrc[a] != w.tgt)
        fail(Errc::BadInput, "path is not composable at " + path[i]);
      w.tgt = atgt[a];
      w.arrows.push_back(a);
    }
    return w;
  };

  struct Rule {
    std::vector<uint32_t> lhs;
    PathWord rhs;
  };
  std::vector<Rule> rules;
  for (const auto& rel : quiver.relations) {
    PathWord lhs = word_of(rel.lhs);
    PathWord rhs;
    switch (rel.kind) {
      case Quiver::Relation::Kind::Zero:
        rhs.zero = true;
        break;
      case Quiver::Relation::Kind::Vertex: {
        auto it = vid.find(rel.rhs_vertex);
        if (it == vid.end())
          fail(Errc::BadInput, "unknown vertex " + rel.rhs_vertex);
        if (lhs.src != it->second || lhs.tgt != it->second)
          fail(Errc::BadInput,
               "relation identifies a path with a vertex of mismatched "
               "endpoints");
        rhs.src = rhs.tgt = it->second;
        break;
      }
      case Quiver::Relation::Kind::Path: {
        rhs = word_of(rel.rhs_path);
        if (rhs.src != lhs.src || rhs.tgt != lhs.tgt)
          fail(Errc::BadInput, "relation endpoints do not match");
        break;
      }
    }
    rules.push_back({lhs.arrows, rhs});
  }

  // Leftmost, first-rule rewriting to a fixed normal form.
  auto normalize = [&](PathWord w) -> PathWord {
    if (w.zero) return w;
    for (int steps = 0; steps < 10000; ++steps) {
      bool changed = false;
      for (const auto& rule : rules) {
        const auto& l = rule.lhs;
        if (w.arrows.size() < l.size()) continue;
        for (size_t pos = 0; pos + l.size() <= w.arrows.size(); ++pos) {
          if (!std::equal(l.begin(), l.end(), w.arrows.begin() + pos))
            continue;
          if (rule.rhs.zero) return PathWord{true, 0, 0, {}};
          std::vector<uint32_t> next(w.arrows.begin(),
                                     w.arrows.begin() + pos);
          next.insert(next.end(), rule.rhs.arrows.begin(),
                      rule.rhs.arrows.end());
          next.insert(next.end(), w.arrows.begin() + pos + l.size(),
                      w.arrows.end());
          w.arrows = std::move(next);
          changed = true;
          break;
        }
        if (changed) break;
      }
      if (!changed) return w;
    }
    fail(Errc::RelationInconsistent, "rewriting does not terminate");
  };

  if (rules.empty()) {
    // Plain path monoid: reject oriented cycles up front.
    std::vector<int> state(nv, 0);
    std::vector<std::vector<uint32_t>> out(nv);
    for (uint32_t a = 0; a < asrc.size(); ++a) out[asrc[a]].push_back(a);
    std::function<void(uint32_t)> dfs = [&](uint32_t v) {
      state[v] = 1;
      for (uint32_t a : out[v]) {
        if (atgt[a] == v || state[atgt[a]] == 1)
          fail(Errc::CyclicQuiver,
               "oriented cycle through " + quiver.vertices[v]);
        if (state[atgt[a]] == 0) dfs(atgt[a]);
      }
      state[v] = 2;
    };
    for (uint32_t v = 0; v < nv; ++v)
      if (state[v] == 0) dfs(v);
  }

  // Closure of normal forms under extension by arrows. Diverging closures
  // indicate an unbounded (cyclic) path set.
  std::set<PathWord> forms;
  std::vector<PathWord> queue;
  for (uint32_t v = 0; v < nv; ++v) {
    PathWord w{false, v, v, {}};
    forms.insert(w);
    queue.push_back(w);
  }
  const size_t kMaxForms = 20000;
  while (!queue.empty()) {
    PathWord w = queue.back();
    queue.pop_back();
    for (uint32_t a = 0; a < asrc.size(); ++a) {
      if (asrc[a] != w.tgt) continue;
      PathWord ext = w;
      ext.arrows.push_back(a);
      ext.tgt = atgt[a];
      PathWord nf = normalize(ext);
      if (nf.zero) continue;
      if (forms.insert(nf).second) {
        if (forms.size() > kMaxForms)
          fail(Errc::CyclicQuiver, "path closure does not terminate");
        queue.push_back(nf);
      }
      // Even when ext normalizes to a known form, the raw extension was
      // explored through its normal form only; nothing more to do.
    }
  }

  std::vector<PathWord> basis_words(forms.begin(), forms.end());
  std::sort(basis_words.begin(), basis_words.end(),
            [](const PathWord& a, const PathWord& b) {
              if (a.arrows.size() != b.arrows.size())
                return a.arrows.size() < b.arrows.size();
              return a < b;
            });

  auto path_name = [&](const PathWord& w) -> std::string {
    if (w.arrows.empty()) return quiver.vertices[w.src];
    std::string s;
    for (size_t i = 0; i < w.arrows.size(); ++i) {
      if (i) s += '*';
      s += quiver.arrows[w.arrows[i]].name;
    }
    return s;
  };

  std::map<PathWord, uint32_t> word_index;
  std::vector<std::string> names{"1"};
  for (const auto& w : basis_words) {
    word_index[w] = static_cast<uint32_t>(names.size());
    names.push_back(path_name(w));
  }
  const uint32_t k = static_cast<uint32_t>(names.size());

  std::vector<GLinearMonoid::TableEntry> table(static_cast<size_t>(k) * k);
  auto at = [&](uint32_t i, uint32_t j) -> GLinearMonoid::TableEntry& {
    return table[static_cast<size_t>(i) * k + j];
  };
  for (uint32_t i = 0; i < k; ++i) {
    at(0, i) = std::make_pair(group.one(), i);
    at(i, 0) = std::make_pair(group.one(), i);
  }
  for (uint32_t i = 1; i < k; ++i) {
    const PathWord& p = basis_words[i - 1];
    for (uint32_t j = 1; j < k; ++j) {
      const PathWord& q = basis_words[j - 1];
      if (p.tgt != q.src) continue;
      PathWord w{false, p.src, q.tgt, p.arrows};
      w.arrows.insert(w.arrows.end(), q.arrows.begin(), q.arrows.end());
      PathWord nf = normalize(w);
      if (nf.zero) continue;
      auto it = word_index.find(nf);
      if (it == word_index.end())
        fail(Errc::RelationInconsistent,
             "product " + path_name(p) + " * " + path_name(q) +
                 " normalizes outside the closure");
      at(i, j) = std::make_pair(group.one(), it->second);
    }
  }

  try {
    return GLinearMonoid::validate(group, std::move(names), 0,
                                   std::move(table));
  } catch (const Error& e) {
    if (e.code() == Errc::NotAssociative)
      fail(Errc::RelationInconsistent, e.what());
    throw;
  }
}

GLinearMonoid opposite(const GLinearMonoid& m) {
  const uint32_t k = m.dim();
  std::vector<GLinearMonoid::TableEntry> table(static_cast<size_t>(k) * k);
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t j = 0; j < k; ++j)
      table[static_cast<size_t>(i) * k + j] = m.table(j, i);
  return GLinearMonoid::validate(m.group(), m.names(), m.one_index(),
                                 std::move(table));
}

GLinearMonoid submonoid(const GLinearMonoid& m,
                        const std::vector<uint32_t>& sub_basis) {
  const uint32_t k = static_cast<uint32_t>(sub_basis.size());
  std::vector<int32_t> pos(m.dim(), -1);
  for (uint32_t i = 0; i < k; ++i) pos[sub_basis[i]] = static_cast<int32_t>(i);
  if (pos[m.one_index()] < 0)
    fail(Errc::BadInput, "submonoid basis must contain the identity");
  std::vector<std::string> names(k);
  for (uint32_t i = 0; i < k; ++i) names[i] = m.name(sub_basis[i]);
  std::vector<GLinearMonoid::TableEntry> table(static_cast<size_t>(k) * k);
  for (uint32_t i = 0; i < k; ++i) {
    for (uint32_t j = 0; j < k; ++j) {
      const auto& t = m.table(sub_basis[i], sub_basis[j]);
      if (!t) continue;
      if (pos[t->second] < 0)
        fail(Errc::BadInput, "basis subset is not closed under products");
      table[static_cast<size_t>(i) * k + j] =
          std::make_pair(t->first, static_cast<uint32_t>(pos[t->second]));
    }
  }
  return GLinearMonoid::validate(
      m.group(), std::move(names),
      static_cast<uint32_t>(pos[m.one_index()]), std::move(table));
}

struct JClassAccess {
  static GLinearMonoid::Cache& cache(const GLinearMonoid& m) {
    return *m.cache_;
  }
};

namespace {

JClassReport compute_j_classes(const GLinearMonoid& m) {
  const uint32_t k = m.dim();
  std::vector<std::vector<uint32_t>> ideals(k);
  for (uint32_t a = 0; a < k; ++a) {
    std::vector<bool> hit(k, false);
    MonoidElement ea = MonoidElement::of(m.group().one(), a);
    for (uint32_t l = 0; l < k; ++l) {
      MonoidElement la =
          m.product(MonoidElement::of(m.group().one(), l), ea);
      if (la.zero) continue;
      for (uint32_t r = 0; r < k; ++r) {
        MonoidElement lar =
            m.product(la, MonoidElement::of(m.group().one(), r));
        if (!lar.zero) hit[lar.b] = true;
      }
    }
    for (uint32_t b = 0; b < k; ++b)
      if (hit[b]) ideals[a].push_back(b);
  }

  JClassReport report;
  report.class_of.assign(k, 0);
  std::map<std::vector<uint32_t>, uint32_t> by_ideal;
  for (uint32_t a = 0; a < k; ++a) {
    auto [it, fresh] = by_ideal.emplace(ideals[a], 0);
    if (fresh) {
      it->second = static_cast<uint32_t>(report.classes.size());
      report.classes.push_back(JClass{{}, ideals[a], false, {}});
    }
    report.classes[it->second].basis.push_back(a);
  }
  std::vector<uint32_t> order(report.classes.size());
  for (uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](uint32_t x, uint32_t y) {
    const auto& cx = report.classes[x];
    const auto& cy = report.classes[y];
    if (cx.ideal.size() != cy.ideal.size())
      return cx.ideal.size() < cy.ideal.size();
    return cx.basis.front() < cy.basis.front();
  });
  std::vector<JClass> sorted;
  sorted.reserve(order.size());
  std::vector<uint32_t> newid(order.size());
  for (uint32_t i = 0; i < order.size(); ++i) {
    newid[order[i]] = i;
    sorted.push_back(std::move(report.classes[order[i]]));
  }
  report.classes = std::move(sorted);
  for (uint32_t a = 0; a < k; ++a) {
    auto it = by_ideal.find(ideals[a]);
    report.class_of[a] = newid[it->second];
  }

  const size_t nc = report.classes.size();
  report.leq.assign(nc, std::vector<bool>(nc, false));
  for (size_t i = 0; i < nc; ++i) {
    for (size_t j = 0; j < nc; ++j) {
      report.leq[i][j] = std::includes(
          report.classes[j].ideal.begin(), report.classes[j].ideal.end(),
          report.classes[i].ideal.begin(), report.classes[i].ideal.end());
    }
  }

  // Regularity: the four classical characterizations must agree.
  for (auto& cls : report.classes) {
    bool has_idem = false;
    for (uint32_t b : cls.basis) {
      const auto& t = m.table(b, b);
      if (t && t->second == b) {
        has_idem = true;
        cls.idempotents.push_back(
            MonoidElement::of(m.group().inv(t->first), b));
      }
    }
    auto elem_regular = [&](uint32_t x) {
      MonoidElement ex = MonoidElement::of(m.group().one(), x);
      for (uint32_t y = 0; y < k; ++y) {
        MonoidElement p =
            m.product(ex, MonoidElement::of(m.group().one(), y), ex);
        if (!p.zero && p.b == x) return true;
      }
      return false;
    };
    bool some_regular = false, all_regular = true;
    for (uint32_t b : cls.basis) {
      if (elem_regular(b))
        some_regular = true;
      else
        all_regular = false;
    }
    bool square_meets = false;
    for (uint32_t x : cls.basis) {
      for (uint32_t y : cls.basis) {
        MonoidElement p = m.product(MonoidElement::of(m.group().one(), x),
                                    MonoidElement::of(m.group().one(), y));
        if (!p.zero && report.class_of[p.b] == report.class_of[x]) {
          square_meets = true;
          break;
        }
      }
      if (square_meets) break;
    }
    if (has_idem != some_regular || some_regular != all_regular ||
        all_regular != square_meets)
      throw std::logic_error("regularity characterizations disagree");
    cls.regular = has_idem;
  }
  return report;
}

}  // namespace

const JClassReport& j_classes(const GLinearMonoid& m) {
  auto& cache = JClassAccess::cache(m);
  std::call_once(cache.jflag, [&] {
    cache.jreport = std::make_unique<JClassReport>(compute_j_classes(m));
  });
  return *cache.jreport;
}

std::vector<MonoidElement> idempotents(const GLinearMonoid& m) {
  std::vector<MonoidElement> out{MonoidElement::zero_elem()};
  for (uint32_t b = 0; b < m.dim(); ++b) {
    const auto& t = m.table(b, b);
    if (t && t->second == b)
      out.push_back(MonoidElement::of(m.group().inv(t->first), b));
  }
  return out;
}

bool is_regular(const GLinearMonoid& m) {
  const JClassReport& report = j_classes(m);
  for (const auto& cls : report.classes)
    if (!cls.regular) return false;
  return true;
}

bool is_inverse(const GLinearMonoid& m) {
  if (!is_regular(m)) return false;
  std::vector<MonoidElement> idems = idempotents(m);
  for (size_t i = 1; i < idems.size(); ++i)
    for (size_t j = i + 1; j < idems.size(); ++j)
      if (!(m.product(idems[i], idems[j]) == m.product(idems[j], idems[i])))
        return false;
  return true;
}

MonoidElement star_inverse(const GLinearMonoid& m, const MonoidElement& x) {
  if (!is_inverse(m)) fail(Errc::NotInverse, "monoid is not inverse");
  if (x.zero) return x;
  std::optional<MonoidElement> found;
  for (uint32_t b = 0; b < m.dim(); ++b) {
    // Solve at the basis level, then match the scalar.
    MonoidElement y1 = MonoidElement::of(m.group().one(), b);
    MonoidElement xyx = m.product(x, y1, x);
    if (xyx.zero || xyx.b != x.b) continue;
    GroupElement s = m.group().mul(m.group().inv(xyx.g), x.g);
    MonoidElement y = MonoidElement::of(s, b);
    if (m.product(x, y, x) == x && m.product(y, x, y) == y) {
      if (found) throw std::logic_error("star inverse is not unique");
      found = y;
    }
  }
  if (!found) throw std::logic_error("inverse monoid misses a star inverse");
  return *found;
}

PrincipalFactor principal_factor(const GLinearMonoid& m,
                                 const MonoidElement& a) {
  if (a.zero) fail(Errc::ZeroElement, "principal factor of 0");
  const JClassReport& report = j_classes(m);
  const JClass& cls = report.classes[report.class_of[a.b]];
  PrincipalFactor pf;
  pf.carrier = cls.basis;
  std::vector<int32_t> slot(m.dim(), -1);
  for (uint32_t i = 0; i < pf.carrier.size(); ++i)
    slot[pf.carrier[i]] = static_cast<int32_t>(i);

  pf.zero_simple = false;
  for (uint32_t x : cls.basis) {
    for (uint32_t y : cls.basis) {
      MonoidElement p = m.product(MonoidElement::of(m.group().one(), x),
                                  MonoidElement::of(m.group().one(), y));
      if (!p.zero && slot[p.b] >= 0) pf.zero_simple = true;
    }
  }

  const uint32_t k = m.dim(), c = static_cast<uint32_t>(pf.carrier.size());
  pf.left_action.assign(k, {});
  pf.right_action.assign(k, {});
  for (uint32_t b = 0; b < k; ++b) {
    pf.left_action[b].assign(c, std::nullopt);
    pf.right_action[b].assign(c, std::nullopt);
    MonoidElement eb = MonoidElement::of(m.group().one(), b);
    for (uint32_t i = 0; i < c; ++i) {
      MonoidElement ec = MonoidElement::of(m.group().one(), pf.carrier[i]);
      MonoidElement l = m.product(eb, ec);
      if (!l.zero && slot[l.b] >= 0)
        pf.left_action[b][i] =
            std::make_pair(l.g, static_cast<uint32_t>(slot[l.b]));
      MonoidElement r = m.product(ec, eb);
      if (!r.zero && slot[r.b] >= 0)
        pf.right_action[b][i] =
            std::make_pair(r.g, static_cast<uint32_t>(slot[r.b]));
    }
  }
  return pf;
}

namespace {

bool inductive_side(const GLinearMonoid& m, bool left) {
  const JClassReport& report = j_classes(m);
  for (const auto& cls : report.classes) {
    if (!cls.regular) continue;
    std::vector<int32_t> slot(m.dim(), -1);
    for (uint32_t i = 0; i < cls.basis.size(); ++i)
      slot[cls.basis[i]] = static_cast<int32_t>(i);
    for (uint32_t a = 0; a < m.dim(); ++a) {
      MonoidElement ea = MonoidElement::of(m.group().one(), a);
      std::vector<bool> hit(cls.basis.size(), false);
      for (uint32_t x : cls.basis) {
        MonoidElement ex = MonoidElement::of(m.group().one(), x);
        MonoidElement p = left ? m.product(ea, ex) : m.product(ex, ea);
        if (p.zero || slot[p.b] < 0) continue;
        if (hit[slot[p.b]]) return false;  // two orbits collide
        hit[slot[p.b]] = true;
      }
    }
  }
  return true;
}

}  // namespace

bool is_left_inductive(const GLinearMonoid& m) {
  return inductive_side(m, true);
}

bool is_right_inductive(const GLinearMonoid& m) {
  return inductive_side(m, false);
}

MonoidElement MaximalSubgroup::to_parent(const MonoidElement& x) const {
  if (x.zero) return x;
  MonoidElement rep = basis_reps[x.b];
  rep.g = monoid.group().mul(x.g, rep.g);
  return rep;
}

std::optional<MonoidElement> MaximalSubgroup::from_parent(
    const MonoidElement& x) const {
  if (x.zero) return MonoidElement::zero_elem();
  for (uint32_t i = 0; i < parent_basis.size(); ++i) {
    if (parent_basis[i] != x.b) continue;
    GroupElement s =
        monoid.group().mul(x.g, monoid.group().inv(basis_reps[i].g));
    return MonoidElement::of(s, i);
  }
  return std::nullopt;
}

MaximalSubgroup maximal_subgroup(const GLinearMonoid& m,
                                 const MonoidElement& e) {
  if (e.zero) fail(Errc::NotIdempotent, "zero element");
  if (!(m.product(e, e) == e))
    fail(Errc::NotIdempotent, m.show(e) + " is not idempotent");
  const JClassReport& report = j_classes(m);
  uint32_t jc = report.class_of[e.b];

  std::vector<uint32_t> sub;
  for (uint32_t c : report.classes[jc].basis) {
    MonoidElement ec = MonoidElement::of(m.group().one(), c);
    if (m.product(e, ec, e) == ec) sub.push_back(c);
  }

  MaximalSubgroup out;
  out.e = e;
  out.parent_basis = sub;
  const uint32_t k = static_cast<uint32_t>(sub.size());
  std::vector<int32_t> pos(m.dim(), -1);
  for (uint32_t i = 0; i < k; ++i) pos[sub[i]] = static_cast<int32_t>(i);
  uint32_t one_slot = static_cast<uint32_t>(pos[e.b]);

  out.basis_reps.resize(k);
  for (uint32_t i = 0; i < k; ++i)
    out.basis_reps[i] = (sub[i] == e.b)
                            ? e
                            : MonoidElement::of(m.group().one(), sub[i]);

  std::vector<std::string> names(k);
  for (uint32_t i = 0; i < k; ++i) names[i] = m.name(sub[i]);
  std::vector<GLinearMonoid::TableEntry> table(static_cast<size_t>(k) * k);
  for (uint32_t i = 0; i < k; ++i) {
    for (uint32_t j = 0; j < k; ++j) {
      MonoidElement p = m.product(out.basis_reps[i], out.basis_reps[j]);
      if (p.zero || pos[p.b] < 0)
        throw std::logic_error("maximal subgroup is not closed");
      uint32_t slot = static_cast<uint32_t>(pos[p.b]);
      GroupElement s =
          m.group().mul(p.g, m.group().inv(out.basis_reps[slot].g));
      table[static_cast<size_t>(i) * k + j] = std::make_pair(s, slot);
    }
  }
  out.monoid =
      GLinearMonoid::validate(m.group(), std::move(names), one_slot,
                              std::move(table));
  return out;
}

}  // namespace fone
