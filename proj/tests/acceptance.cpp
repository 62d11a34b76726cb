// Acceptance suite: one line per criterion, exit 0 only if all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "fone/cmp.hpp"
#include "fone/fvect.hpp"
#include "fone/ordered.hpp"

using namespace fone;

namespace {

const PointedGroup kF1{std::vector<uint32_t>{}};
const PointedGroup kZ2{std::vector<uint32_t>{2}};
const PointedGroup kZ3{std::vector<uint32_t>{3}};

int g_failures = 0;

void run_criterion(int number, const std::string& label,
                   const std::function<bool(std::string&)>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cout << "criterion " << number << " [" << label << "]: "
            << (ok ? "PASS" : "FAIL") << " (" << ms << " ms)";
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

uint64_t binom(uint64_t n, uint64_t k) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

Representation defining_rep(const GLinearMonoid& m) {
  std::vector<SubmonomialMatrix> action;
  for (uint32_t b = 0; b < m.dim(); ++b)
    action.push_back(m.matrix_of(MonoidElement::of(m.group().one(), b)));
  return Representation::validate(m, std::move(action));
}

Quiver a2_quiver() {
  Quiver q;
  q.vertices = {"e", "f"};
  q.arrows = {{"a", "e", "f"}};
  return q;
}

Quiver vertex_quiver() {
  Quiver q;
  q.vertices = {"e"};
  return q;
}

// ---- criterion 1 ----

bool criterion_counts(std::string& detail) {
  for (const PointedGroup& g : {kF1, kZ2, kZ3}) {
    for (uint32_t n = 1; n <= 4; ++n) {
      uint64_t expect = 0, fact = 1;
      for (uint64_t d = 0; d <= n; ++d) {
        if (d) fact *= d;
        uint64_t pw = 1;
        for (uint64_t i = 0; i < d; ++i) pw *= g.order();
        expect += binom(n, d) * binom(n, d) * fact * pw;
      }
      uint64_t got = count_matrices(g, n, n);
      if (got != expect) {
        detail = "n=" + std::to_string(n) + " |G|=" +
                 std::to_string(g.order()) + ": " + std::to_string(got) +
                 " != " + std::to_string(expect);
        return false;
      }
    }
  }
  if (count_matrices(kF1, 2, 2) != 7 || count_matrices(kZ2, 2, 2) != 17 ||
      count_matrices(kF1, 3, 3) != 34) {
    detail = "pinned counts disagree";
    return false;
  }
  return true;
}

// ---- criterion 2 ----

bool criterion_universal(std::string& detail) {
  for (const PointedGroup& g : {kF1, kZ2}) {
    const uint32_t max_dim = 2;
    // Pushouts.
    for (uint32_t da = 0; da <= max_dim; ++da)
      for (uint32_t db = da; db <= max_dim; ++db)
        for (uint32_t dc = 0; dc <= da; ++dc)
          for (const auto& i : all_matrices(g, db, da)) {
            if (!is_injective(i)) continue;
            for (const auto& p : all_matrices(g, dc, da)) {
              if (!is_surjective(p)) continue;
              auto po = pushout(i, p);
              if (!(compose(po.from_b, i) == compose(po.from_c, p))) {
                detail = "pushout square does not commute";
                return false;
              }
              for (uint32_t dx = 0; dx <= max_dim; ++dx)
                for (const auto& alpha : all_matrices(g, dx, db))
                  for (const auto& beta : all_matrices(g, dx, dc)) {
                    if (!(compose(alpha, i) == compose(beta, p))) continue;
                    uint32_t count = 0;
                    for (const auto& h :
                         all_matrices(g, dx, po.space.dim))
                      if (compose(h, po.from_b) == alpha &&
                          compose(h, po.from_c) == beta)
                        ++count;
                    if (count != 1) {
                      detail = "pushout mediating maps: " +
                               std::to_string(count);
                      return false;
                    }
                  }
            }
          }
    // Pullbacks.
    for (uint32_t dd = 0; dd <= max_dim; ++dd)
      for (uint32_t db = dd; db <= max_dim; ++db)
        for (uint32_t dc = 0; dc <= dd; ++dc)
          for (const auto& p2 : all_matrices(g, dd, db)) {
            if (!is_surjective(p2)) continue;
            for (const auto& i2 : all_matrices(g, dd, dc)) {
              if (!is_injective(i2)) continue;
              auto pb = pullback(p2, i2);
              if (!(compose(p2, pb.to_b) == compose(i2, pb.to_c))) {
                detail = "pullback square does not commute";
                return false;
              }
              for (uint32_t dy = 0; dy <= max_dim; ++dy)
                for (const auto& alpha : all_matrices(g, db, dy))
                  for (const auto& beta : all_matrices(g, dc, dy)) {
                    if (!(compose(p2, alpha) == compose(i2, beta))) continue;
                    uint32_t count = 0;
                    for (const auto& h :
                         all_matrices(g, pb.space.dim, dy))
                      if (compose(pb.to_b, h) == alpha &&
                          compose(pb.to_c, h) == beta)
                        ++count;
                    if (count != 1) {
                      detail = "pullback mediating maps: " +
                               std::to_string(count);
                      return false;
                    }
                  }
            }
          }
  }
  return true;
}

// ---- criterion 3 ----

GLinearMonoid star_closed_submonoid(const GLinearMonoid& m,
                                    std::vector<uint32_t> seed) {
  std::set<uint32_t> basis(seed.begin(), seed.end());
  basis.insert(m.one_index());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<uint32_t> cur(basis.begin(), basis.end());
    for (uint32_t a : cur) {
      MonoidElement sa =
          star_inverse(m, MonoidElement::of(m.group().one(), a));
      if (basis.insert(sa.b).second) grew = true;
      for (uint32_t b : cur) {
        MonoidElement p = m.product(MonoidElement::of(m.group().one(), a),
                                    MonoidElement::of(m.group().one(), b));
        if (!p.zero && basis.insert(p.b).second) grew = true;
      }
    }
  }
  return submonoid(m, std::vector<uint32_t>(basis.begin(), basis.end()));
}

bool wagner_preston_checks(const GLinearMonoid& m, std::string& detail) {
  Representation wp = wagner_preston(m);
  std::set<std::vector<int64_t>> images;
  for (uint64_t c = 0; c < m.size(); ++c) {
    MonoidElement x = m.decode(c);
    if (!images.insert(wp.matrix_of(x).encode()).second) {
      detail = "embedding is not injective";
      return false;
    }
    if (!(star(wp.matrix_of(x)) == wp.matrix_of(star_inverse(m, x)))) {
      detail = "embedding does not preserve star";
      return false;
    }
    // Scalar equivariance.
    for (const GroupElement& g : m.group().elements()) {
      MonoidElement gx = x;
      if (!gx.zero) gx.g = m.group().mul(g, gx.g);
      if (!(wp.matrix_of(gx) == scalar_mul(g, wp.matrix_of(x)))) {
        detail = "embedding is not scalar equivariant";
        return false;
      }
    }
  }
  for (uint64_t a = 0; a < m.size(); ++a)
    for (uint64_t b = 0; b < m.size(); ++b) {
      MonoidElement x = m.decode(a), y = m.decode(b);
      if (!(wp.matrix_of(m.product(x, y)) ==
            compose(wp.matrix_of(x), wp.matrix_of(y)))) {
        detail = "embedding is not multiplicative";
        return false;
      }
    }
  return true;
}

bool criterion_wagner_preston(std::string& detail) {
  GLinearMonoid i2 = symmetric_inverse_monoid(2, kF1);
  GLinearMonoid i2z2 = symmetric_inverse_monoid(2, kZ2);

  // Units of I_2(F1); diagonal idempotents of I_2(F1); a mixed submonoid of
  // I_2(Z2^) generated by the swap and a rank-1 idempotent.
  std::vector<uint32_t> units;
  for (uint32_t b = 0; b < i2.dim(); ++b)
    if (i2.matrix_of(MonoidElement::of(kF1.one(), b)).rank() == 2)
      units.push_back(b);
  std::vector<uint32_t> diag;
  for (uint32_t b = 0; b < i2.dim(); ++b)
    if (is_idempotent(i2.matrix_of(MonoidElement::of(kF1.one(), b))))
      diag.push_back(b);
  std::vector<uint32_t> mixed;
  for (uint32_t b = 0; b < i2z2.dim(); ++b) {
    SubmonomialMatrix mat = i2z2.matrix_of(MonoidElement::of(kZ2.one(), b));
    if (mat.rank() == 2 && !mat.is_identity()) mixed.push_back(b);
    if (mat.rank() == 1 && is_idempotent(mat)) mixed.push_back(b);
  }

  std::vector<GLinearMonoid> fixtures{
      i2, i2z2, star_closed_submonoid(i2, units),
      star_closed_submonoid(i2, diag),
      star_closed_submonoid(i2z2, {mixed.begin(), mixed.begin() + 2})};
  for (const GLinearMonoid& m : fixtures) {
    if (!is_inverse(m)) {
      detail = "fixture is not inverse";
      return false;
    }
    if (!wagner_preston_checks(m, detail)) return false;
  }
  return true;
}

// ---- criterion 4 ----

bool cmp_round_trips(const GLinearMonoid& m, const Caps& caps,
                     std::string& detail) {
  const JClassReport& report = j_classes(m);
  std::vector<SimpleRep> simples = all_simples(m, caps);

  // Forward: restrict(cmp_simple(W, e), e) is W, for every group simple W.
  for (uint32_t jc = 0; jc < report.classes.size(); ++jc) {
    if (!report.classes[jc].regular) continue;
    MonoidElement e = report.classes[jc].idempotents.front();
    MaximalSubgroup gj = maximal_subgroup(m, e);
    for (const GroupSimple& gs : group_simples(gj, caps)) {
      Representation q = cmp_simple(m, e, gs.carrier, caps);
      RestrictedRep back = restrict_rep(q, e);
      if (!are_isomorphic(back.rep, gs.carrier, caps)) {
        detail = "restriction does not recover the base simple";
        return false;
      }
    }
  }
  // Backward: cmp_simple(restrict(V, e), e) is V for apex-J simples V.
  for (const SimpleRep& s : simples) {
    MonoidElement e = report.classes[s.apex].idempotents.front();
    RestrictedRep down = restrict_rep(s.rep, e);
    if (!is_simple(down.rep)) {
      detail = "restriction of a simple is not simple";
      return false;
    }
    Representation q = cmp_simple(m, e, down.rep, caps);
    if (!are_isomorphic(q, s.rep, caps)) {
      detail = "induction does not recover the simple";
      return false;
    }
  }
  return true;
}

bool simples_match_oracle(const GLinearMonoid& m, const Caps& caps,
                          std::string& detail) {
  std::vector<SimpleRep> classified = all_simples(m, caps);
  std::vector<Representation> expected;
  for (const SimpleRep& s : classified)
    if (s.rep.dim() <= caps.oracle_max_dim) expected.push_back(s.rep);

  std::vector<Representation> found;
  for (const Representation& r :
       all_reps_upto_iso(m, caps.oracle_max_dim, caps))
    if (is_simple(r)) found.push_back(r);

  if (found.size() != expected.size()) {
    detail = "oracle finds " + std::to_string(found.size()) +
             " simples, classification gives " +
             std::to_string(expected.size());
    return false;
  }
  for (const Representation& f : found) {
    bool matched = false;
    for (const Representation& e : expected)
      if (f.dim() == e.dim() && are_isomorphic(f, e, caps)) matched = true;
    if (!matched) {
      detail = "oracle simple missing from the classification";
      return false;
    }
  }
  return true;
}

bool criterion_cmp(std::string& detail) {
  Caps caps;
  caps.iso_max_dim = 12;
  std::vector<GLinearMonoid> fixtures{
      symmetric_inverse_monoid(2, kF1), symmetric_inverse_monoid(2, kZ2),
      symmetric_inverse_monoid(3, kF1), path_monoid(a2_quiver(), kF1),
      path_monoid(vertex_quiver(), kF1)};
  for (const GLinearMonoid& m : fixtures) {
    if (!cmp_round_trips(m, caps, detail)) return false;
    if (!simples_match_oracle(m, caps, detail)) return false;
  }
  // Pinned classification for I_2(F1).
  auto simples = all_simples(fixtures[0], caps);
  std::multiset<uint32_t> dims;
  for (const auto& s : simples) dims.insert(s.rep.dim());
  if (dims != std::multiset<uint32_t>{1, 2, 2}) {
    detail = "I_2(F1) simple dimensions are off";
    return false;
  }
  return true;
}

// ---- criterion 5 ----

std::vector<Representation> fixture_reps(const GLinearMonoid& m,
                                         uint32_t max_dim, const Caps& caps) {
  std::vector<Representation> blocks;
  if (m.matrix_model()) blocks.push_back(defining_rep(m));
  const JClassReport& report = j_classes(m);
  for (const auto& cls : report.classes)
    if (cls.regular)
      blocks.push_back(
          rep_from_principal_factor(m, cls.idempotents.front(), Side::Left));
  if (is_left_inductive(m))
    for (const SimpleRep& s : all_simples(m, caps)) blocks.push_back(s.rep);
  std::vector<Representation> out;
  for (const Representation& b : blocks) {
    if (b.dim() > max_dim) continue;
    out.push_back(b);
    for (const Representation& c : blocks)
      if (b.dim() + c.dim() <= max_dim && c.dim() > 0)
        out.push_back(direct_sum_rep(b, c));
  }
  return out;
}

bool criterion_trichotomy(std::string& detail) {
  Caps caps;
  caps.iso_max_dim = 12;
  std::vector<GLinearMonoid> fixtures{
      symmetric_inverse_monoid(1, kF1),  symmetric_inverse_monoid(1, kZ2),
      symmetric_inverse_monoid(2, kF1),  symmetric_inverse_monoid(2, kZ2),
      symmetric_inverse_monoid(3, kF1),  null_monoid(1, kF1),
      null_monoid(2, kF1),               null_monoid(2, kZ2),
      path_monoid(a2_quiver(), kF1),     path_monoid(vertex_quiver(), kF1)};
  for (const GLinearMonoid& m : fixtures) {
    if (!is_left_inductive(m)) {
      detail = "fixture unexpectedly fails left inductivity";
      return false;
    }
    bool inv = is_inverse(m), reg = is_regular(m);
    SemisimpleReport ss = is_semisimple(m, caps);
    bool semi = ss.verdict == Semisimplicity::Semisimple;
    if (inv != reg || reg != semi) {
      detail = "trichotomy flags disagree";
      return false;
    }
    if (!semi) {
      if (ss.verdict != Semisimplicity::NotSemisimple ||
          !ss.witness_rep.has_value() || ss.witness_sub.empty()) {
        detail = "negative case lacks a witness";
        return false;
      }
      if (!is_action_closed(*ss.witness_rep, ss.witness_sub) ||
          complement(*ss.witness_rep, ss.witness_sub).has_value()) {
        detail = "witness subrepresentation has a complement";
        return false;
      }
    }
  }
  // Positive cases: fixture representations decompose into simples.
  for (const GLinearMonoid& m :
       {symmetric_inverse_monoid(2, kF1), symmetric_inverse_monoid(2, kZ2),
        symmetric_inverse_monoid(3, kF1)}) {
    for (const Representation& v : fixture_reps(m, 4, caps)) {
      for (const Summand& s : krull_schmidt(v, caps)) {
        if (!is_simple(subrepresentation(v, s.coords))) {
          detail = "a summand of a semisimple fixture is not simple";
          return false;
        }
      }
    }
  }
  return true;
}

// ---- criterion 6 ----

SubmonomialMatrix random_monomial(const PointedGroup& g, uint32_t d,
                                  std::mt19937& rng) {
  std::vector<uint32_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::optional<MatrixEntry>> cols(d);
  for (uint32_t i = 0; i < d; ++i)
    cols[i] = MatrixEntry{perm[i], g.element_at(rng() % g.order())};
  return SubmonomialMatrix::from_columns(g, d, cols);
}

bool criterion_uniqueness(std::string& detail) {
  Caps caps;
  std::mt19937 rng(2024);
  std::vector<GLinearMonoid> monoids{
      symmetric_inverse_monoid(2, kF1), symmetric_inverse_monoid(2, kZ2),
      null_monoid(2, kF1), path_monoid(a2_quiver(), kF1)};
  std::vector<std::vector<Representation>> blocks(monoids.size());
  for (size_t i = 0; i < monoids.size(); ++i) {
    const GLinearMonoid& m = monoids[i];
    if (is_left_inductive(m))
      for (const SimpleRep& s : all_simples(m, caps))
        if (s.rep.dim() <= 4) blocks[i].push_back(s.rep);
    SemisimpleReport ss = is_semisimple(m, caps);
    if (ss.verdict == Semisimplicity::NotSemisimple &&
        ss.witness_rep->dim() <= 5)
      blocks[i].push_back(*ss.witness_rep);
    const JClassReport& report = j_classes(m);
    for (const auto& cls : report.classes)
      if (cls.regular) {
        Representation p =
            rep_from_principal_factor(m, cls.idempotents.front(), Side::Left);
        if (p.dim() <= 4) blocks[i].push_back(p);
      }
  }

  int built = 0;
  for (int trial = 0; built < 200; ++trial) {
    size_t mi = trial % monoids.size();
    if (blocks[mi].empty()) continue;
    // Random sum of blocks within the dimension budget.
    Representation v = blocks[mi][rng() % blocks[mi].size()];
    for (int extra = 0; extra < 3; ++extra) {
      const Representation& b = blocks[mi][rng() % blocks[mi].size()];
      if (v.dim() + b.dim() <= 5) v = direct_sum_rep(v, b);
    }
    if (v.dim() > 5 || v.dim() == 0) continue;
    ++built;

    Representation w =
        conjugate(v, random_monomial(v.matrix_group(), v.dim(), rng));
    std::multiset<std::vector<int64_t>> kv, kw;
    for (const Summand& s : krull_schmidt(v, caps)) kv.insert(s.key.data);
    for (const Summand& s : krull_schmidt(w, caps)) kw.insert(s.key.data);
    if (kv != kw) {
      detail = "Krull-Schmidt keys moved under change of basis";
      return false;
    }
    std::multiset<std::vector<int64_t>> ja, jb;
    for (const CompositionStep& s : jordan_holder(v, false, caps))
      ja.insert(s.factor.data);
    for (const CompositionStep& s : jordan_holder(v, true, caps))
      jb.insert(s.factor.data);
    if (ja != jb) {
      detail = "Jordan-Holder factors depend on the chain";
      return false;
    }
  }
  return built == 200;
}

// ---- criterion 7 ----

struct VshInstance {
  std::vector<uint32_t> support;
  std::vector<SubmonomialMatrix> subgroup;
  Representation rep;
};

std::vector<std::vector<SubmonomialMatrix>> stabilizer_subgroups(
    const PointedGroup& g, uint32_t n, const std::vector<uint32_t>& s) {
  // The full stabilizer group: support and image S, as matrices.
  std::vector<SubmonomialMatrix> all;
  std::vector<uint32_t> perm(s.begin(), s.end());
  std::sort(perm.begin(), perm.end());
  do {
    uint64_t total = 1;
    for (size_t i = 0; i < s.size(); ++i) total *= g.order();
    for (uint64_t code = 0; code < total; ++code) {
      uint64_t cc = code;
      std::vector<std::optional<MatrixEntry>> cols(n);
      for (size_t i = 0; i < s.size(); ++i) {
        cols[s[i]] = MatrixEntry{perm[i], g.element_at(cc % g.order())};
        cc /= g.order();
      }
      all.push_back(SubmonomialMatrix::from_columns(g, n, cols));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Index-level multiplication table so closures run on plain integers.
  std::map<std::vector<int64_t>, uint32_t> index;
  for (uint32_t i = 0; i < all.size(); ++i) index[all[i].encode()] = i;
  const uint32_t order = static_cast<uint32_t>(all.size());
  std::vector<uint32_t> mul(static_cast<size_t>(order) * order);
  for (uint32_t a = 0; a < order; ++a)
    for (uint32_t b = 0; b < order; ++b)
      mul[static_cast<size_t>(a) * order + b] =
          index.at(compose(all[a], all[b]).encode());
  auto closure = [&](std::set<uint32_t> seed) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<uint32_t> cur(seed.begin(), seed.end());
      for (uint32_t a : cur)
        for (uint32_t b : cur)
          if (seed.insert(mul[static_cast<size_t>(a) * order + b]).second)
            grew = true;
    }
    return std::vector<uint32_t>(seed.begin(), seed.end());
  };

  uint32_t id = 0;
  for (uint32_t i = 0; i < order; ++i)
    if (is_idempotent(all[i])) {
      id = i;
      break;
    }
  std::set<std::vector<uint32_t>> seen;
  std::vector<std::vector<uint32_t>> queue{closure({id})};
  seen.insert(queue[0]);
  while (!queue.empty()) {
    auto sgrp = queue.back();
    queue.pop_back();
    for (uint32_t x = 0; x < order; ++x) {
      if (std::binary_search(sgrp.begin(), sgrp.end(), x)) continue;
      std::set<uint32_t> seed(sgrp.begin(), sgrp.end());
      seed.insert(x);
      auto t = closure(std::move(seed));
      if (seen.insert(t).second) queue.push_back(t);
    }
  }

  std::vector<std::vector<SubmonomialMatrix>> out;
  for (const auto& sgrp : seen) {
    bool free = true;
    for (uint32_t i : sgrp) {
      bool diagonal = true;
      GroupElement val = g.one();
      bool first = true;
      for (uint32_t j : s) {
        const auto& col = all[i].column(j);
        if (col->row != j) diagonal = false;
        if (first) {
          val = col->label;
          first = false;
        } else if (!(col->label == val)) {
          diagonal = false;
        }
      }
      if (diagonal && !g.is_one(val)) free = false;
    }
    if (!free) continue;
    std::vector<SubmonomialMatrix> members;
    for (uint32_t i : sgrp) members.push_back(all[i]);
    out.push_back(std::move(members));
  }
  return out;
}

bool criterion_vsh(std::string& detail) {
  Caps caps;
  caps.iso_max_dim = 24;
  for (const PointedGroup& g : {kF1, kZ2}) {
    for (uint32_t n = 1; n <= 3; ++n) {
      GLinearMonoid m = symmetric_inverse_monoid(n, g);
      std::vector<VshInstance> instances;
      std::vector<std::vector<uint32_t>> supports;
      for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
        std::vector<uint32_t> s;
        for (uint32_t i = 0; i < n; ++i)
          if ((mask >> i) & 1) s.push_back(i);
        supports.push_back(s);
      }
      for (const auto& s : supports)
        for (auto& h : stabilizer_subgroups(g, n, s))
          instances.push_back(VshInstance{s, h, v_sh(m, s, h)});

      for (const auto& a : instances)
        for (const auto& b : instances) {
          bool via_criterion = vsh_isomorphic(g, a.support, a.subgroup,
                                              b.support, b.subgroup);
          bool via_search =
              a.rep.dim() == b.rep.dim() &&
              are_isomorphic(a.rep, b.rep, caps).has_value();
          if (via_criterion != via_search) {
            detail = "criterion and search disagree at n=" +
                     std::to_string(n) + " |G|=" + std::to_string(g.order());
            return false;
          }
        }
    }
  }
  return true;
}

// ---- criterion 8 ----

std::vector<std::vector<std::vector<uint32_t>>> normal_subgroups(uint32_t n) {
  std::vector<std::vector<uint32_t>> sn;
  std::vector<uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    sn.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
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
  // All subgroups by closure, filtered to the normal ones.
  std::map<std::vector<uint32_t>, uint32_t> index;
  for (uint32_t i = 0; i < sn.size(); ++i) index[sn[i]] = i;
  auto closure = [&](std::set<uint32_t> seed) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<uint32_t> cur(seed.begin(), seed.end());
      for (uint32_t a : cur)
        for (uint32_t b : cur)
          if (seed.insert(index.at(compose_perm(sn[a], sn[b]))).second)
            grew = true;
    }
    return std::vector<uint32_t>(seed.begin(), seed.end());
  };
  std::set<std::vector<uint32_t>> seen;
  std::vector<std::vector<uint32_t>> queue{closure({0})};
  seen.insert(queue[0]);
  while (!queue.empty()) {
    auto s = queue.back();
    queue.pop_back();
    for (uint32_t x = 0; x < sn.size(); ++x) {
      if (std::binary_search(s.begin(), s.end(), x)) continue;
      std::set<uint32_t> seed(s.begin(), s.end());
      seed.insert(x);
      auto t = closure(std::move(seed));
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  std::vector<std::vector<std::vector<uint32_t>>> out;
  for (const auto& s : seen) {
    bool normal = true;
    for (const auto& sigma : sn)
      for (uint32_t x : s) {
        auto conj = compose_perm(compose_perm(sigma, sn[x]),
                                 invert_perm(sigma));
        if (!std::binary_search(s.begin(), s.end(), index.at(conj)))
          normal = false;
      }
    if (!normal) continue;
    std::vector<std::vector<uint32_t>> members;
    for (uint32_t x : s) members.push_back(sn[x]);
    out.push_back(std::move(members));
  }
  return out;
}

bool criterion_phi_h(std::string& detail) {
  for (const PointedGroup& g : {kF1, kZ2, kZ3}) {
    for (uint32_t n = 1; n <= 3; ++n) {
      uint64_t fact = 1;
      for (uint32_t i = 2; i <= n; ++i) fact *= i;
      for (const auto& h : normal_subgroups(n)) {
        Representation r = phi_h_rep(n, g, h);
        if (r.dim() != fact / h.size()) {
          detail = "dimension is not the subgroup index";
          return false;
        }
        // Direct evaluation of the entry polynomials on every element.
        std::set<std::vector<uint32_t>> hset(h.begin(), h.end());
        std::vector<std::vector<uint32_t>> reps;  // coset representatives
        {
          std::set<std::vector<uint32_t>> used;
          std::vector<uint32_t> p(n);
          std::iota(p.begin(), p.end(), 0);
          do {
            if (used.count(p)) continue;
            reps.push_back(p);
            for (const auto& x : h) {
              std::vector<uint32_t> px(n);
              for (uint32_t i = 0; i < n; ++i) px[i] = p[x[i]];
              used.insert(px);
            }
          } while (std::next_permutation(p.begin(), p.end()));
        }
        const GLinearMonoid& flat = r.monoid();
        for (uint32_t b = 0; b < flat.dim(); ++b) {
          SubmonomialMatrix a =
              flat.matrix_of(MonoidElement::of(flat.group().one(), b));
          for (uint32_t ca = 0; ca < reps.size(); ++ca) {
            for (uint32_t cb = 0; cb < reps.size(); ++cb) {
              // sum over sigma in rep_a rep_b^-1 H of prod_k A_{sigma(k),k}
              std::optional<GroupElement> value;
              uint32_t nonzero_terms = 0;
              std::vector<uint32_t> binv(n);
              for (uint32_t i = 0; i < n; ++i) binv[reps[cb][i]] = i;
              for (const auto& x : h) {
                // sigma ranges over the coset rep_a rep_b^{-1} H.
                std::vector<uint32_t> sigma(n);
                for (uint32_t i = 0; i < n; ++i)
                  sigma[i] = reps[ca][binv[x[i]]];
                GroupElement term = g.one();
                bool alive = true;
                for (uint32_t k = 0; k < n && alive; ++k) {
                  const auto& col = a.column(k);
                  if (!col || col->row != sigma[k])
                    alive = false;
                  else
                    term = g.mul(term, col->label);
                }
                if (alive) {
                  ++nonzero_terms;
                  value = term;
                }
              }
              if (nonzero_terms > 1) {
                detail = "entry polynomial has two surviving terms";
                return false;
              }
              const auto& col = r.matrix(b).column(cb);
              bool have = col && col->row == ca;
              if (have != (nonzero_terms == 1)) {
                detail = "closed form support differs from the polynomial";
                return false;
              }
              if (have && !(col->label == *value)) {
                detail = "closed form label differs from the polynomial";
                return false;
              }
            }
          }
        }
      }
    }
  }
  return true;
}

// ---- criterion 9 ----

bool criterion_ordered(std::string& detail) {
  Caps caps;
  for (const PointedGroup& g : {kF1, kZ2}) {
    GLinearMonoid m = symmetric_inverse_monoid(2, g);
    OrderedMonoid om = OrderedMonoid::natural(m);
    OrderedVerdict valid = validate_ordered(om, caps);
    if (!valid.ok || !valid.complete) {
      detail = "natural order fails validation";
      return false;
    }
    Representation def = defining_rep(m);
    for (const Representation& v : all_reps_upto_iso(m, 4, caps)) {
      JoinCheck check = respects_joins(v, om, caps);
      if (!check.complete) {
        detail = "join enumeration incomplete";
        return false;
      }
      bool all_defining = true;
      for (const Summand& s : krull_schmidt(v, caps)) {
        Representation sub = subrepresentation(v, s.coords);
        if (sub.dim() != 2 || !are_isomorphic(sub, def, caps))
          all_defining = false;
      }
      if (check.holds != all_defining) {
        detail = "join preservation does not match the summand condition";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  run_criterion(1, "element counts", criterion_counts);
  run_criterion(2, "pushout/pullback universal properties",
                criterion_universal);
  run_criterion(3, "Wagner-Preston embeddings", criterion_wagner_preston);
  run_criterion(4, "CMP round trips and simple classification",
                criterion_cmp);
  run_criterion(5, "semisimplicity trichotomy", criterion_trichotomy);
  run_criterion(6, "decomposition uniqueness", criterion_uniqueness);
  run_criterion(7, "V_{S,H} isomorphism criterion", criterion_vsh);
  run_criterion(8, "coset representations of normal subgroups",
                criterion_phi_h);
  run_criterion(9, "ordered monoid join preservation", criterion_ordered);
  if (g_failures == 0) {
    std::cout << "all criteria passed" << std::endl;
    return 0;
  }
  std::cout << g_failures << " criteria failed" << std::endl;
  return 1;
}
