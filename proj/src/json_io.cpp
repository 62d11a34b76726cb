#include "fone/json_io.hpp"

#include <fstream>
#include <sstream>

namespace fone {

namespace {

GroupElement gelem_from_json(const PointedGroup& g, const Json& j) {
  if (!j.is_array()) fail(Errc::BadInput, "group element must be a list");
  GroupElement out;
  for (const auto& r : j) out.push_back(r.get<uint32_t>());
  if (!g.valid_element(out))
    fail(Errc::BadInput, "residue vector does not match the group");
  return out;
}

}  // namespace

Json group_to_json(const PointedGroup& g) {
  return Json(g.cyclic_orders());
}

PointedGroup group_from_json(const Json& j) {
  if (!j.is_array()) fail(Errc::BadInput, "group must be a list of orders");
  std::vector<uint32_t> orders;
  for (const auto& o : j) orders.push_back(o.get<uint32_t>());
  return PointedGroup(orders);
}

Json matrix_to_json(const SubmonomialMatrix& m) {
  Json entries = Json::array();
  for (uint32_t j = 0; j < m.cols(); ++j) {
    const auto& c = m.column(j);
    if (!c)
      entries.push_back(nullptr);
    else
      entries.push_back(Json{{"row", c->row + 1}, {"g", c->label}});
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

SubmonomialMatrix matrix_from_json(const PointedGroup& group, const Json& j) {
  uint32_t rows = j.at("rows").get<uint32_t>();
  uint32_t cols = j.at("cols").get<uint32_t>();
  const Json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != cols)
    fail(Errc::BadInput, "entries must list one item per column");
  std::vector<std::optional<MatrixEntry>> data(cols);
  for (uint32_t c = 0; c < cols; ++c) {
    const Json& e = entries[c];
    if (e.is_null()) continue;
    uint32_t row = e.at("row").get<uint32_t>();
    if (row < 1 || row > rows) fail(Errc::BadInput, "row index out of range");
    data[c] = MatrixEntry{row - 1, gelem_from_json(group, e.at("g"))};
  }
  return SubmonomialMatrix::from_columns(group, rows, std::move(data));
}

Json monoid_to_json(const GLinearMonoid& m) {
  Json mult = Json::array();
  for (uint32_t i = 0; i < m.dim(); ++i) {
    for (uint32_t j = 0; j < m.dim(); ++j) {
      const auto& t = m.table(i, j);
      Json res = nullptr;
      if (t) res = Json{{"g", t->first}, {"b", m.name(t->second)}};
      mult.push_back(Json{{"l", m.name(i)}, {"r", m.name(j)}, {"res", res}});
    }
  }
  return Json{{"group", group_to_json(m.group())},
              {"basis", m.names()},
              {"one", m.name(m.one_index())},
              {"mult", mult}};
}

GLinearMonoid monoid_from_json(const Json& j) {
  PointedGroup group = group_from_json(j.at("group"));
  std::vector<std::string> names;
  for (const auto& n : j.at("basis")) names.push_back(n.get<std::string>());
  std::string one = j.at("one").get<std::string>();
  std::map<std::string, uint32_t> index;
  for (uint32_t i = 0; i < names.size(); ++i) {
    if (index.count(names[i]))
      fail(Errc::BadInput, "duplicate basis name " + names[i]);
    index[names[i]] = i;
  }
  if (!index.count(one)) fail(Errc::NoIdentity, "unknown identity " + one);
  const uint32_t k = static_cast<uint32_t>(names.size());
  std::vector<GLinearMonoid::TableEntry> table(static_cast<size_t>(k) * k);
  std::vector<bool> seen(static_cast<size_t>(k) * k, false);
  for (const auto& row : j.at("mult")) {
    std::string l = row.at("l").get<std::string>();
    std::string r = row.at("r").get<std::string>();
    if (!index.count(l) || !index.count(r))
      fail(Errc::BadInput, "mult references unknown basis element");
    size_t slot = static_cast<size_t>(index[l]) * k + index[r];
    if (seen[slot])
      fail(Errc::BadInput, "duplicate product (" + l + ", " + r + ")");
    seen[slot] = true;
    const Json& res = row.at("res");
    if (!res.is_null())
      table[slot] = std::make_pair(gelem_from_json(group, res.at("g")),
                                   index.at(res.at("b").get<std::string>()));
  }
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t jj = 0; jj < k; ++jj)
      if (!seen[static_cast<size_t>(i) * k + jj])
        fail(Errc::IncompleteTable,
             "missing product (" + names[i] + ", " + names[jj] + ")");

  GLinearMonoid out =
      GLinearMonoid::validate(group, names, index[one], std::move(table));
  if (j.contains("model") && j["model"].is_object() &&
      j["model"].value("kind", "") == "in") {
    GLinearMonoid modeled =
        symmetric_inverse_monoid(j["model"].at("n").get<uint32_t>(), group);
    if (!modeled.same_structure(out))
      fail(Errc::BadInput, "model annotation does not match the table");
    return modeled;
  }
  return out;
}

Json rep_to_json(const Representation& r) {
  Json action = Json::object();
  for (uint32_t b = 0; b < r.monoid().dim(); ++b)
    action[r.monoid().name(b)] = matrix_to_json(r.matrix(b)).at("entries");
  Json out{{"dim", r.dim()}, {"action", action}};
  if (!(r.matrix_group() == r.monoid().group()))
    out["matrix_group"] = group_to_json(r.matrix_group());
  return out;
}

Representation rep_from_json(const GLinearMonoid& m, const Json& j) {
  uint32_t d = j.at("dim").get<uint32_t>();
  PointedGroup mat_group = m.group();
  if (j.contains("matrix_group"))
    mat_group = group_from_json(j.at("matrix_group"));
  const Json& action = j.at("action");
  std::vector<SubmonomialMatrix> mats;
  for (uint32_t b = 0; b < m.dim(); ++b) {
    if (!action.contains(m.name(b)))
      fail(Errc::BadInput, "action misses basis element " + m.name(b));
    Json wrapped{{"rows", d}, {"cols", d}, {"entries", action.at(m.name(b))}};
    mats.push_back(matrix_from_json(mat_group, wrapped));
  }
  return Representation::validate(m, std::move(mats));
}

Json melem_to_json(const GLinearMonoid& m, const MonoidElement& x) {
  if (x.zero) return nullptr;
  return Json{{"g", x.g}, {"b", m.name(x.b)}};
}

MonoidElement melem_from_json(const GLinearMonoid& m, const Json& j) {
  if (j.is_null()) return MonoidElement::zero_elem();
  if (j.is_string()) return melem_from_name(m, j.get<std::string>());
  auto b = m.basis_index(j.at("b").get<std::string>());
  if (!b) fail(Errc::BadInput, "unknown basis element");
  return MonoidElement::of(gelem_from_json(m.group(), j.at("g")), *b);
}

MonoidElement melem_from_name(const GLinearMonoid& m, const std::string& name) {
  if (name == "0") return MonoidElement::zero_elem();
  std::string base = name;
  GroupElement g = m.group().one();
  auto at = name.find('@');
  if (at != std::string::npos) {
    base = name.substr(0, at);
    std::string rest = name.substr(at + 1);
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
      fail(Errc::BadInput, "malformed scalar suffix in " + name);
    rest = rest.substr(1, rest.size() - 2);
    g.clear();
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) g.push_back(static_cast<uint32_t>(std::stoul(tok)));
    if (!m.group().valid_element(g))
      fail(Errc::BadInput, "scalar suffix does not match the group");
  }
  auto b = m.basis_index(base);
  if (!b) fail(Errc::BadInput, "unknown element " + name);
  return MonoidElement::of(g, *b);
}

Quiver quiver_from_json(const Json& j) {
  Quiver q;
  for (const auto& v : j.at("vertices")) q.vertices.push_back(v.get<std::string>());
  if (j.contains("arrows"))
    for (const auto& a : j.at("arrows"))
      q.arrows.push_back(Quiver::Arrow{a.at("name").get<std::string>(),
                                       a.at("src").get<std::string>(),
                                       a.at("tgt").get<std::string>()});
  if (j.contains("relations")) {
    for (const auto& r : j.at("relations")) {
      Quiver::Relation rel;
      for (const auto& s : r.at("lhs")) rel.lhs.push_back(s.get<std::string>());
      const Json& rhs = r.at("rhs");
      if (rhs.is_null()) {
        rel.kind = Quiver::Relation::Kind::Zero;
      } else if (rhs.is_object()) {
        rel.kind = Quiver::Relation::Kind::Vertex;
        rel.rhs_vertex = rhs.at("vertex").get<std::string>();
      } else {
        rel.kind = Quiver::Relation::Kind::Path;
        for (const auto& s : rhs) rel.rhs_path.push_back(s.get<std::string>());
      }
      q.relations.push_back(std::move(rel));
    }
  }
  return q;
}

std::vector<std::pair<MonoidElement, MonoidElement>> order_from_json(
    const GLinearMonoid& m, const Json& j) {
  std::vector<std::pair<MonoidElement, MonoidElement>> out;
  if (!j.is_array()) fail(Errc::BadInput, "order must be a list of pairs");
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2)
      fail(Errc::BadInput, "order pairs must have two entries");
    out.emplace_back(melem_from_json(m, p[0]), melem_from_json(m, p[1]));
  }
  return out;
}

std::string canonical_dump(const Json& j) { return j.dump(1) + "\n"; }

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::BadInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::BadInput, "malformed JSON");
  return j;
}

}  // namespace fone
