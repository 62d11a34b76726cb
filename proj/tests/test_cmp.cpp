#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fone/cmp.hpp"

using namespace fone;

namespace {

const PointedGroup kF1{std::vector<uint32_t>{}};
const PointedGroup kZ2{std::vector<uint32_t>{2}};

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

MonoidElement rank_idempotent(const GLinearMonoid& m, uint32_t jc) {
  return j_classes(m).classes[jc].idempotents.front();
}

}  // namespace

TEST_CASE("restriction to the top idempotent is the unit action") {
  GLinearMonoid m = symmetric_inverse_monoid(2, kF1);
  Representation v = defining_rep(m);
  RestrictedRep r = restrict_rep(v, m.one_elem());
  CHECK(r.rep.dim() == 2);
  CHECK(r.carrier == std::vector<uint32_t>{0, 1});
  CHECK(r.gj.monoid.size() - 1 == 2);  // S_2

  // Restricting along an annihilated idempotent gives the zero rep.
  const JClassReport& report = j_classes(m);
  MonoidElement e1 = rank_idempotent(m, 0);
  Representation top = rep_from_principal_factor(m, m.one_elem(), Side::Left);
  RestrictedRep zero = restrict_rep(top, e1);
  CHECK(zero.rep.dim() == 0);
  CHECK(report.class_of[e1.b] == 0);
}

TEST_CASE("P(e)e is a free module over the maximal subgroup") {
  for (const GLinearMonoid& m :
       {symmetric_inverse_monoid(2, kF1), symmetric_inverse_monoid(2, kZ2),
        symmetric_inverse_monoid(3, kF1)}) {
    const JClassReport& report = j_classes(m);
    for (const auto& cls : report.classes) {
      if (!cls.regular) continue;
      MonoidElement e = cls.idempotents.front();
      MaximalSubgroup gj = maximal_subgroup(m, e);
      // Collect P(e)e and verify the right action of G_J is free and
      // transitive on fibers: |P(e)e| is a multiple of |G_J|.
      uint64_t count = 0;
      for (uint32_t c : cls.basis) {
        MonoidElement ec = MonoidElement::of(m.group().one(), c);
        if (m.product(ec, e) == ec) ++count;
      }
      count *= m.group().order();
      uint64_t order = gj.monoid.size() - 1;
      CHECK(count % order == 0);

      // Freeness: x alpha = x forces alpha = e.
      for (uint32_t c : cls.basis) {
        MonoidElement x = MonoidElement::of(m.group().one(), c);
        if (!(m.product(x, e) == x)) continue;
        for (uint64_t a = 1; a < gj.monoid.size(); ++a) {
          MonoidElement alpha = gj.to_parent(gj.monoid.decode(a));
          if (m.product(x, alpha) == x) CHECK(alpha == e);
        }
      }
    }
  }
}

TEST_CASE("group simples of the stock maximal subgroups") {
  GLinearMonoid i2 = symmetric_inverse_monoid(2, kF1);
  // S_2 with zero: subgroups 1 and S_2.
  MaximalSubgroup top = maximal_subgroup(i2, i2.one_elem());
  auto simples = group_simples(top);
  CHECK(simples.size() == 2);
  CHECK(simples[0].carrier.dim() == 2);  // regular orbit
  CHECK(simples[1].carrier.dim() == 1);  // trivial orbit

  // Z2-hat: only the trivial subgroup misses the scalars.
  GLinearMonoid i1 = symmetric_inverse_monoid(1, kZ2);
  MaximalSubgroup z2 = maximal_subgroup(i1, i1.one_elem());
  auto zsimples = group_simples(z2);
  CHECK(zsimples.size() == 1);
  CHECK(zsimples[0].carrier.dim() == 1);

  // G^2 x| S_2 = D_4 with central scalars: trivial + two reflection classes;
  // coset spaces of sizes 8, 4, 4 with two scalar orbits per coset pair.
  GLinearMonoid i2z2 = symmetric_inverse_monoid(2, kZ2);
  MaximalSubgroup d4 = maximal_subgroup(i2z2, i2z2.one_elem());
  auto dsimples = group_simples(d4);
  CHECK(dsimples.size() == 3);
  std::multiset<uint32_t> dims;
  for (const auto& s : dsimples) dims.insert(s.carrier.dim());
  CHECK(dims == std::multiset<uint32_t>{2, 2, 4});
}

TEST_CASE("coset simple rejects subgroups meeting the scalars") {
  GLinearMonoid i1 = symmetric_inverse_monoid(1, kZ2);
  MaximalSubgroup gj = maximal_subgroup(i1, i1.one_elem());
  std::vector<MonoidElement> full;
  for (uint64_t c = 1; c < gj.monoid.size(); ++c)
    full.push_back(gj.monoid.decode(c));
  CHECK_THROWS_WITH_AS(coset_simple(gj, full),
                       doctest::Contains("FreenessViolated"), Error);
}

TEST_CASE("induction from the regular base collapses to P(e)e") {
  GLinearMonoid m = symmetric_inverse_monoid(2, kF1);
  MonoidElement e = rank_idempotent(m, 0);
  MaximalSubgroup gj = maximal_subgroup(m, e);
  // W = G^_J itself acting on itself: the tensor collapses onto P(e)e,
  // which is the defining representation here.
  GroupSimple regular = coset_simple(gj, {gj.monoid.one_elem()});
  InducedRep iv = induce(m, e, regular.carrier);
  CHECK(iv.rep.dim() == 2);
  CHECK(are_isomorphic(iv.rep, defining_rep(m)).has_value());

  // At the top idempotent the same collapse gives the unit translation.
  MaximalSubgroup top = maximal_subgroup(m, m.one_elem());
  GroupSimple reg_top = coset_simple(top, {top.monoid.one_elem()});
  InducedRep iv_top = induce(m, m.one_elem(), reg_top.carrier);
  CHECK(iv_top.rep.dim() == 2);
  Representation pee =
      rep_from_principal_factor(m, m.one_elem(), Side::Left);
  CHECK(are_isomorphic(iv_top.rep, pee).has_value());
}

TEST_CASE("induction at the top from the trivial S_2 orbit is 1-dimensional") {
  GLinearMonoid m = symmetric_inverse_monoid(2, kF1);
  MaximalSubgroup gj = maximal_subgroup(m, m.one_elem());
  auto simples = group_simples(gj);
  // simples[1] is the one-dimensional (H = S_2) orbit space.
  InducedRep iv = induce(m, m.one_elem(), simples[1].carrier);
  CHECK(iv.rep.dim() == 1);
  CHECK(radical(iv).empty());
  Representation q = cmp_simple(m, m.one_elem(), simples[1].carrier);
  CHECK(q.dim() == 1);
}

TEST_CASE("radical is the unique maximal subrepresentation") {
  GLinearMonoid pm = path_monoid(a2_quiver(), kF1);
  const JClassReport& report = j_classes(pm);
  for (const auto& cls : report.classes) {
    if (!cls.regular) continue;
    MonoidElement e = cls.idempotents.front();
    MaximalSubgroup gj = maximal_subgroup(pm, e);
    for (const GroupSimple& gs : group_simples(gj)) {
      InducedRep iv = induce(pm, e, gs.carrier);
      std::vector<uint32_t> rad = radical(iv);
      // Every proper subrepresentation sits inside the radical.
      std::set<uint32_t> radset(rad.begin(), rad.end());
      for (const auto& w : all_subreps(iv.rep)) {
        if (w.size() == iv.rep.dim()) continue;
        for (uint32_t c : w) CHECK(radset.count(c));
      }
    }
  }
}

TEST_CASE("radical requires a simple base") {
  GLinearMonoid m = symmetric_inverse_monoid(2, kF1);
  MaximalSubgroup gj = maximal_subgroup(m, m.one_elem());
  // Coset spaces are transitive, hence simple; a direct sum is not.
  GroupSimple reg = coset_simple(gj, {gj.monoid.one_elem()});
  CHECK(is_simple(reg.carrier));
  Representation doubled = direct_sum_rep(reg.carrier, reg.carrier);
  InducedRep iv = induce(m, m.one_elem(), doubled);
  CHECK_THROWS_WITH_AS(radical(iv), doctest::Contains("BaseNotSimple"), Error);
}

TEST_CASE("cmp round trip on I_2") {
  GLinearMonoid m = symmetric_inverse_monoid(2, kZ2);
  const JClassReport& report = j_classes(m);
  for (uint32_t jc = 0; jc < report.classes.size(); ++jc) {
    if (!report.classes[jc].regular) continue;
    MonoidElement e = report.classes[jc].idempotents.front();
    MaximalSubgroup gj = maximal_subgroup(m, e);
    for (const GroupSimple& gs : group_simples(gj)) {
      Representation q = cmp_simple(m, e, gs.carrier);
      CHECK(is_simple(q));
      CHECK(apex_class(q) == jc);
      RestrictedRep back = restrict_rep(q, e);
      CHECK(are_isomorphic(back.rep, gs.carrier).has_value());
    }
  }
}

TEST_CASE("all simples of I_2(F1)") {
  GLinearMonoid m = symmetric_inverse_monoid(2, kF1);
  auto simples = all_simples(m);
  REQUIRE(simples.size() == 3);
  std::multiset<uint32_t> dims;
  for (const auto& s : simples) dims.insert(s.rep.dim());
  CHECK(dims == std::multiset<uint32_t>{1, 2, 2});
}

TEST_CASE("all simples of the trivial and null monoids") {
  GLinearMonoid i1 = symmetric_inverse_monoid(1, kF1);
  auto s1 = all_simples(i1);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].rep.dim() == 1);

  GLinearMonoid nm = null_monoid(2, kF1);
  auto sn = all_simples(nm);
  REQUIRE(sn.size() == 1);
  CHECK(sn[0].rep.dim() == 1);
}

TEST_CASE("v_sh realizes the defining representation") {
  GLinearMonoid m = symmetric_inverse_monoid(2, kF1);
  // H trivial on S = {0}: the identity E_S only.
  std::vector<std::optional<MatrixEntry>> escol(2);
  escol[0] = MatrixEntry{0, kF1.one()};
  SubmonomialMatrix es = SubmonomialMatrix::from_columns(kF1, 2, escol);
  Representation v = v_sh(m, {0}, {es});
  CHECK(v.dim() == 2);
  CHECK(are_isomorphic(v, defining_rep(m)).has_value());

  // S = [2], H = S_2: one-dimensional.
  std::vector<std::optional<MatrixEntry>> swapcol(2);
  swapcol[0] = MatrixEntry{1, kF1.one()};
  swapcol[1] = MatrixEntry{0, kF1.one()};
  SubmonomialMatrix sw = SubmonomialMatrix::from_columns(kF1, 2, swapcol);
  Representation w =
      v_sh(m, {0, 1}, {SubmonomialMatrix::identity(kF1, 2), sw});
  CHECK(w.dim() == 1);
  CHECK(is_simple(w));
}

TEST_CASE("vsh isomorphism criterion matches the search") {
  GLinearMonoid m = symmetric_inverse_monoid(2, kF1);
  std::vector<std::optional<MatrixEntry>> c0(2), c1(2);
  c0[0] = MatrixEntry{0, kF1.one()};
  c1[1] = MatrixEntry{1, kF1.one()};
  SubmonomialMatrix e0 = SubmonomialMatrix::from_columns(kF1, 2, c0);
  SubmonomialMatrix e1 = SubmonomialMatrix::from_columns(kF1, 2, c1);
  CHECK(vsh_isomorphic(kF1, {0}, {e0}, {1}, {e1}));
  Representation v0 = v_sh(m, {0}, {e0});
  Representation v1 = v_sh(m, {1}, {e1});
  CHECK(are_isomorphic(v0, v1).has_value());
  CHECK(!vsh_isomorphic(kF1, {0}, {e0}, {0, 1},
                        {SubmonomialMatrix::identity(kF1, 2)}));
}

TEST_CASE("semisimplicity of the stock fixtures") {
  CHECK(is_semisimple(symmetric_inverse_monoid(1, kF1)).verdict ==
        Semisimplicity::Semisimple);
  CHECK(is_semisimple(symmetric_inverse_monoid(2, kZ2)).verdict ==
        Semisimplicity::Semisimple);

  SemisimpleReport nn = is_semisimple(null_monoid(2, kF1));
  REQUIRE(nn.verdict == Semisimplicity::NotSemisimple);
  REQUIRE(nn.witness_rep.has_value());
  CHECK(!nn.witness_sub.empty());
  CHECK(is_action_closed(*nn.witness_rep, nn.witness_sub));
  CHECK(!complement(*nn.witness_rep, nn.witness_sub).has_value());

  SemisimpleReport pa = is_semisimple(path_monoid(a2_quiver(), kF1));
  REQUIRE(pa.verdict == Semisimplicity::NotSemisimple);
  CHECK(!complement(*pa.witness_rep, pa.witness_sub).has_value());
}

TEST_CASE("complement in the semisimple world always exists") {
  GLinearMonoid m = symmetric_inverse_monoid(2, kF1);
  const JClassReport& report = j_classes(m);
  Representation layer =
      rep_from_principal_factor(m, report.classes[0].idempotents[0], Side::Left);
  for (const auto& w : all_subreps(layer)) {
    auto c = complement(layer, w);
    REQUIRE(c.has_value());
    CHECK(c->size() + w.size() == layer.dim());
  }
  Representation v = defining_rep(m);
  CHECK(complement(v, {}) == std::vector<uint32_t>{0, 1});
}

TEST_CASE("phi_h for the full symmetric group is one-dimensional") {
  Representation r = phi_h_rep(2, kZ2, {{0, 1}, {1, 0}});
  CHECK(r.dim() == 1);
  const GLinearMonoid& flat = r.monoid();
  // Units act by their label product; singular elements act by zero.
  for (uint32_t b = 0; b < flat.dim(); ++b) {
    SubmonomialMatrix a =
        flat.matrix_of(MonoidElement::of(flat.group().one(), b));
    if (a.rank() < 2) {
      CHECK(r.matrix(b).is_zero_matrix());
    } else {
      GroupElement prod = kZ2.mul(a.column(0)->label, a.column(1)->label);
      CHECK(r.matrix(b).column(0)->label == prod);
    }
  }
}

TEST_CASE("phi_h for the alternating group swaps sign cosets") {
  Representation r = phi_h_rep(3, kF1, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(r.dim() == 2);
  const GLinearMonoid& flat = r.monoid();
  for (uint32_t b = 0; b < flat.dim(); ++b) {
    SubmonomialMatrix a =
        flat.matrix_of(MonoidElement::of(flat.group().one(), b));
    if (a.rank() < 3) {
      CHECK(r.matrix(b).is_zero_matrix());
      continue;
    }
    // Transpositions swap the two cosets, even permutations fix them.
    uint32_t inversions = 0;
    for (uint32_t i = 0; i < 3; ++i)
      for (uint32_t j = i + 1; j < 3; ++j)
        if (a.column(i)->row > a.column(j)->row) ++inversions;
    bool even = inversions % 2 == 0;
    CHECK((r.matrix(b).column(0)->row == 0) == even);
  }
}

TEST_CASE("phi_h with the trivial subgroup restricts to the regular rep") {
  Representation r = phi_h_rep(2, kF1, {{0, 1}});
  CHECK(r.dim() == 2);
  // The unit part acts as the regular representation of S_2.
  const GLinearMonoid& flat = r.monoid();
  uint32_t units = 0, faithful = 0;
  std::set<std::vector<int64_t>> images;
  for (uint32_t b = 0; b < flat.dim(); ++b) {
    SubmonomialMatrix a =
        flat.matrix_of(MonoidElement::of(flat.group().one(), b));
    if (a.rank() == 2) {
      ++units;
      if (images.insert(r.matrix(b).encode()).second) ++faithful;
    }
  }
  CHECK(units == 2);
  CHECK(faithful == 2);
}

TEST_CASE("phi_h rejects non-normal subgroups") {
  CHECK_THROWS_WITH_AS(phi_h_rep(3, kF1, {{0, 1, 2}, {1, 0, 2}}),
                       doctest::Contains("NotNormal"), Error);
}
