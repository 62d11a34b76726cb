#include "fone/cli.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include <CLI11.hpp>

#include "fone/cmp.hpp"
#include "fone/json_io.hpp"
#include "fone/ordered.hpp"

namespace fone {

namespace {

std::string key_string(const IsoKey& key) {
  uint64_t h = 1469598103934665603ull;
  for (int64_t v : key.data) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<uint64_t>(v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%016llx", key.exact ? "x" : "f",
                static_cast<unsigned long long>(h));
  return buf;
}

Json jclass_json(const GLinearMonoid& m, const JClassReport& report) {
  Json classes = Json::array();
  classes.push_back(Json{{"id", 0},
                         {"zero", true},
                         {"basis", Json::array()},
                         {"regular", true},
                         {"idempotents", Json::array({nullptr})}});
  for (uint32_t i = 0; i < report.classes.size(); ++i) {
    const JClass& c = report.classes[i];
    Json basis = Json::array(), idems = Json::array();
    for (uint32_t b : c.basis) basis.push_back(m.name(b));
    for (const auto& e : c.idempotents) idems.push_back(melem_to_json(m, e));
    Json below = Json::array();
    for (uint32_t j = 0; j < report.classes.size(); ++j)
      if (j != i && report.leq[j][i]) below.push_back(j + 1);
    Json entry{{"id", i + 1},
               {"zero", false},
               {"basis", basis},
               {"regular", c.regular},
               {"idempotents", idems},
               {"below", below}};
    if (c.regular) {
      MaximalSubgroup gj = maximal_subgroup(m, c.idempotents.front());
      entry["max_subgroup_order"] = gj.monoid.size() - 1;
    }
    classes.push_back(std::move(entry));
  }
  return classes;
}

Json witness_json(const SemisimpleReport& report) {
  if (report.verdict != Semisimplicity::NotSemisimple) return nullptr;
  return Json{{"rep", rep_to_json(*report.witness_rep)},
              {"subrep", report.witness_sub}};
}

int cmd_analyze(const std::string& path, const Caps& caps, std::ostream& out) {
  GLinearMonoid m = monoid_from_json(parse_json_file(path));
  const JClassReport& report = j_classes(m);
  bool regular = is_regular(m), inverse = is_inverse(m);
  bool li = is_left_inductive(m), ri = is_right_inductive(m);
  SemisimpleReport ss = is_semisimple(m, caps);
  Json result{{"group", group_to_json(m.group())},
              {"dim", m.dim()},
              {"size", m.size()},
              {"j_classes", jclass_json(m, report)},
              {"flags",
               Json{{"regular", regular},
                    {"inverse", inverse},
                    {"left_inductive", li},
                    {"right_inductive", ri}}}};
  const char* verdict = ss.verdict == Semisimplicity::Semisimple
                            ? "Semisimple"
                            : ss.verdict == Semisimplicity::NotSemisimple
                                  ? "NotSemisimple"
                                  : "Unknown";
  result["semisimple"] = Json{{"verdict", verdict}, {"witness", witness_json(ss)}};
  if (li) {
    Json simples = Json::array();
    for (const SimpleRep& s : all_simples(m, caps))
      simples.push_back(Json{{"apex", s.apex + 1},
                             {"dim", s.rep.dim()},
                             {"key", key_string(iso_key(s.rep, caps))}});
    result["simples"] = simples;
  } else {
    result["simples"] = nullptr;
  }
  out << canonical_dump(result);
  return 0;
}

int cmd_make(const std::string& kind, uint32_t n, const std::string& group_arg,
             const std::string& quiver_path, std::ostream& out) {
  PointedGroup group = group_from_json(parse_json_text(group_arg));
  Json j;
  if (kind == "in") {
    j = monoid_to_json(symmetric_inverse_monoid(n, group));
    j["model"] = Json{{"kind", "in"}, {"n", n}};
  } else if (kind == "null") {
    j = monoid_to_json(null_monoid(n, group));
  } else if (kind == "path") {
    j = monoid_to_json(
        path_monoid(quiver_from_json(parse_json_file(quiver_path)), group));
  } else {
    fail(Errc::BadInput, "unknown kind " + kind);
  }
  out << canonical_dump(j);
  return 0;
}

int cmd_check_rep(const std::string& mpath, const std::string& rpath,
                  std::ostream& out) {
  GLinearMonoid m = monoid_from_json(parse_json_file(mpath));
  Representation r = rep_from_json(m, parse_json_file(rpath));
  out << canonical_dump(Json{{"ok", true}, {"dim", r.dim()}});
  return 0;
}

int cmd_decompose(const std::string& mpath, const std::string& rpath,
                  const Caps& caps, std::ostream& out) {
  GLinearMonoid m = monoid_from_json(parse_json_file(mpath));
  Representation r = rep_from_json(m, parse_json_file(rpath));
  Json summands = Json::array();
  for (const Summand& s : krull_schmidt(r, caps)) {
    Json coords = Json::array();
    for (uint32_t c : s.coords) coords.push_back(c + 1);
    summands.push_back(Json{{"coords", coords},
                            {"dim", s.coords.size()},
                            {"key", key_string(s.key)}});
  }
  Json jh = Json::array();
  for (const CompositionStep& step : jordan_holder(r, false, caps))
    jh.push_back(key_string(step.factor));
  std::sort(jh.begin(), jh.end());
  out << canonical_dump(
      Json{{"krull_schmidt", summands}, {"jordan_holder", jh}});
  return 0;
}

int cmd_simples(const std::string& mpath, const Caps& caps,
                std::ostream& out) {
  GLinearMonoid m = monoid_from_json(parse_json_file(mpath));
  Json simples = Json::array();
  for (const SimpleRep& s : all_simples(m, caps))
    simples.push_back(Json{{"apex", s.apex + 1},
                           {"dim", s.rep.dim()},
                           {"key", key_string(iso_key(s.rep, caps))},
                           {"rep", rep_to_json(s.rep)}});
  out << canonical_dump(simples);
  return 0;
}

int cmd_semisimple(const std::string& mpath, const Caps& caps,
                   std::ostream& out) {
  GLinearMonoid m = monoid_from_json(parse_json_file(mpath));
  SemisimpleReport ss = is_semisimple(m, caps);
  const char* verdict = ss.verdict == Semisimplicity::Semisimple
                            ? "Semisimple"
                            : ss.verdict == Semisimplicity::NotSemisimple
                                  ? "NotSemisimple"
                                  : "Unknown";
  out << canonical_dump(
      Json{{"verdict", verdict}, {"witness", witness_json(ss)}});
  return 0;
}

int cmd_induce(const std::string& mpath, const std::string& idem,
               const std::string& hpath, const Caps& caps, std::ostream& out) {
  GLinearMonoid m = monoid_from_json(parse_json_file(mpath));
  MonoidElement e = melem_from_name(m, idem);
  MaximalSubgroup gj = maximal_subgroup(m, e);
  Json hj = parse_json_file(hpath);
  std::vector<MonoidElement> members;
  for (const auto& ej : hj.at("elements")) {
    MonoidElement parent = melem_from_json(m, ej);
    auto local = gj.from_parent(parent);
    if (!local)
      fail(Errc::BadInput,
           "subgroup element " + m.show(parent) +
               " lies outside the maximal subgroup");
    members.push_back(*local);
  }
  GroupSimple gs = coset_simple(gj, std::move(members));
  InducedRep iv = induce(m, e, gs.carrier);
  std::vector<uint32_t> rad = radical(iv);
  Representation q = quotient(iv.rep, rad);
  Json radj = Json::array();
  for (uint32_t c : rad) radj.push_back(c + 1);
  out << canonical_dump(Json{{"base_dim", gs.carrier.dim()},
                             {"induced", rep_to_json(iv.rep)},
                             {"radical", radj},
                             {"simple", rep_to_json(q)},
                             {"apex", j_classes(m).class_of[e.b] + 1},
                             {"key", key_string(iso_key(q, caps))}});
  return 0;
}

std::vector<std::vector<uint32_t>> named_subgroup(uint32_t n,
                                                  const std::string& name) {
  std::vector<std::vector<uint32_t>> sn;
  std::vector<uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    sn.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto parity = [&](const std::vector<uint32_t>& q) {
    uint32_t inv = 0;
    for (uint32_t i = 0; i < q.size(); ++i)
      for (uint32_t j = i + 1; j < q.size(); ++j)
        if (q[i] > q[j]) ++inv;
    return inv % 2;
  };
  if (name == "1" || name == "trivial") {
    std::vector<uint32_t> id(n);
    std::iota(id.begin(), id.end(), 0);
    return {id};
  }
  if (name == "S" + std::to_string(n) || name == "Sn") return sn;
  if (name == "A" + std::to_string(n) || name == "An") {
    std::vector<std::vector<uint32_t>> out;
    for (const auto& q : sn)
      if (parity(q) == 0) out.push_back(q);
    return out;
  }
  if (name == "V4" && n == 4)
    return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  fail(Errc::BadInput, "unknown subgroup name " + name);
}

int cmd_phi_h(uint32_t n, const std::string& group_arg,
              const std::string& subgroup, bool emit_monoid,
              std::ostream& out) {
  PointedGroup group = group_from_json(parse_json_text(group_arg));
  Representation r = phi_h_rep(n, group, named_subgroup(n, subgroup));
  Json result{{"dim", r.dim()}, {"rep", rep_to_json(r)}};
  if (emit_monoid) result["monoid"] = monoid_to_json(r.monoid());
  out << canonical_dump(result);
  return 0;
}

OrderedMonoid load_order(const GLinearMonoid& m, const std::string& opath) {
  if (opath.empty()) {
    if (!m.matrix_model())
      fail(Errc::BadInput,
           "monoid has no computed order; supply an order file");
    return OrderedMonoid::natural(m);
  }
  return OrderedMonoid::from_pairs(
      m, order_from_json(m, parse_json_file(opath)));
}

int cmd_ordered_check(const std::string& mpath, const std::string& opath,
                      const Caps& caps, std::ostream& out) {
  GLinearMonoid m = monoid_from_json(parse_json_file(mpath));
  OrderedMonoid om = load_order(m, opath);
  OrderedVerdict verdict = validate_ordered(om, caps);
  Json systems = Json::array();
  if (verdict.ok) {
    for (const auto& sys : complete_orthogonal_systems(om)) {
      Json s = Json::array();
      for (const auto& e : sys) s.push_back(m.show(e));
      systems.push_back(std::move(s));
    }
  }
  out << canonical_dump(Json{{"ok", verdict.ok},
                             {"complete", verdict.complete},
                             {"witness", verdict.witness},
                             {"orthogonal_systems", systems}});
  return verdict.ok ? 0 : 2;
}

int cmd_respects_joins(const std::string& mpath, const std::string& rpath,
                       const std::string& opath, const Caps& caps,
                       std::ostream& out) {
  GLinearMonoid m = monoid_from_json(parse_json_file(mpath));
  Representation r = rep_from_json(m, parse_json_file(rpath));
  OrderedMonoid om = load_order(m, opath);
  JoinCheck check = respects_joins(r, om, caps);
  out << canonical_dump(Json{{"holds", check.holds},
                             {"complete", check.complete},
                             {"witness", check.witness}});
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"structure and representation theory of finite pointed-group "
               "linear monoids"};
  app.require_subcommand(1);
  Caps caps;
  app.add_option("--max-dim", caps.iso_max_dim,
                 "cap for isomorphism searches and bounded enumerations");
  app.add_option("--max-subgroup-order", caps.max_subgroup_order,
                 "cap for subgroup enumeration");

  std::string mpath, rpath, opath, hpath, idem, kind, group_arg = "[]";
  std::string quiver_path, subgroup;
  uint32_t n = 1;
  bool emit_monoid = false;

  auto* analyze = app.add_subcommand("analyze", "full structural report");
  analyze->add_option("monoid", mpath)->required();

  auto* make = app.add_subcommand("make", "emit a fixture monoid");
  make->add_option("kind", kind, "in | null | path")->required();
  make->add_option("--n", n);
  make->add_option("--group", group_arg, "JSON list of cyclic orders");
  make->add_option("--quiver", quiver_path);

  auto* check = app.add_subcommand("check-rep", "validate a representation");
  check->add_option("monoid", mpath)->required();
  check->add_option("rep", rpath)->required();

  auto* dec = app.add_subcommand("decompose", "Krull-Schmidt and composition factors");
  dec->add_option("monoid", mpath)->required();
  dec->add_option("rep", rpath)->required();

  auto* simples = app.add_subcommand("simples", "classify the simple representations");
  simples->add_option("monoid", mpath)->required();

  auto* ss = app.add_subcommand("semisimple", "decide semisimplicity");
  ss->add_option("monoid", mpath)->required();

  auto* ind = app.add_subcommand("induce", "induce from a subgroup of a maximal subgroup");
  ind->add_option("monoid", mpath)->required();
  ind->add_option("--idempotent", idem)->required();
  ind->add_option("--subgroup", hpath)->required();

  auto* phi = app.add_subcommand("phi-h", "coset-permutation representation of a normal subgroup");
  phi->add_option("--n", n)->required();
  phi->add_option("--group", group_arg);
  phi->add_option("--subgroup", subgroup)->required();
  phi->add_flag("--emit-monoid", emit_monoid);

  auto* oc = app.add_subcommand("ordered-check", "validate an ordered monoid");
  oc->add_option("monoid", mpath)->required();
  oc->add_option("order", opath);

  auto* rj = app.add_subcommand("respects-joins", "join preservation of a representation");
  rj->add_option("monoid", mpath)->required();
  rj->add_option("rep", rpath)->required();
  rj->add_option("order", opath);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << Json{{"error", "Usage"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(mpath, caps, out);
    if (app.got_subcommand(make))
      return cmd_make(kind, n, group_arg, quiver_path, out);
    if (app.got_subcommand(check)) return cmd_check_rep(mpath, rpath, out);
    if (app.got_subcommand(dec)) return cmd_decompose(mpath, rpath, caps, out);
    if (app.got_subcommand(simples)) return cmd_simples(mpath, caps, out);
    if (app.got_subcommand(ss)) return cmd_semisimple(mpath, caps, out);
    if (app.got_subcommand(ind))
      return cmd_induce(mpath, idem, hpath, caps, out);
    if (app.got_subcommand(phi))
      return cmd_phi_h(n, group_arg, subgroup, emit_monoid, out);
    if (app.got_subcommand(oc))
      return cmd_ordered_check(mpath, opath, caps, out);
    if (app.got_subcommand(rj))
      return cmd_respects_joins(mpath, rpath, opath, caps, out);
  } catch (const Error& e) {
    err << Json{{"error", errc_name(e.code())}, {"detail", e.what()}}.dump()
        << "\n";
    switch (e.code()) {
      case Errc::DimTooLarge:
      case Errc::GroupTooLarge:
      case Errc::CapExceeded:
        return 3;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    err << Json{{"error", "Internal"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace fone
