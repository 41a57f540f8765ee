#include "mutwb/io/json.hpp"

#include "mutwb/error.hpp"

namespace mutwb::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) bad(std::string("expected an object with '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field '") + name + "'");
  return *it;
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    bad(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

LatticeVector vector_from_json(const Json& j) {
  LatticeVector v;
  for (const auto& x : array(j, "vector")) v.push_back(integer_from_json(x));
  return v;
}

Json vector_to_json(const LatticeVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

IntMatrix int_matrix_from_json(const Json& j) {
  IntMatrix m;
  for (const auto& row : array(j, "matrix")) m.push_back(vector_from_json(row));
  return m;
}

Json int_matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(vector_to_json(row));
  return out;
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return Json(v.get_si());
  return Json(to_string(v));
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_integer(j.get<std::string>());
  bad("expected an integer");
}

Json rational_to_json(const Rational& v) { return Json(to_string(v)); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(static_cast<long>(j.get<std::int64_t>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("expected a rational string such as \"3/4\"");
}

Json seed_to_json(const Seed& s) {
  Json out;
  out["rank"] = s.rank();
  out["form"] = int_matrix_to_json(s.lattice().form());
  Json vs = Json::array();
  for (const auto& v : s.vectors()) vs.push_back(vector_to_json(v));
  out["vectors"] = vs;
  out["signing"] = s.signing();
  if (s.degenerate_vectors()) out["degenerate_vectors"] = true;
  return out;
}

Seed seed_from_json(const Json& j) {
  const std::size_t m = size_from_json(field(j, "rank"), "rank");
  IntMatrix form = int_matrix_from_json(field(j, "form"));
  if (form.size() != m) bad("form must be rank-by-rank");
  for (const auto& row : form) {
    if (row.size() != m) bad("form must be rank-by-rank");
  }
  std::vector<LatticeVector> vectors;
  for (const auto& v : array(field(j, "vectors"), "vectors")) {
    vectors.push_back(vector_from_json(v));
    if (vectors.back().size() != m) bad("vectors must have rank entries");
  }
  std::vector<int> signing(vectors.size(), 0);
  if (j.contains("signing")) {
    const Json& sg = array(j["signing"], "signing");
    if (sg.size() != vectors.size()) bad("signing must have one entry per vector");
    for (std::size_t i = 0; i < sg.size(); ++i) {
      if (!sg[i].is_number_integer()) bad("signing entries must be 0 or 1");
      signing[i] = sg[i].get<int>();
    }
  }
  const bool flag = j.value("degenerate_vectors", false);
  return Seed(SkewLattice(std::move(form)), std::move(vectors), std::move(signing),
              flag ? Duplicates::Flag : Duplicates::Reject);
}

Json quiver_to_json(const Quiver& q) {
  Json out;
  out["vertices"] = q.vertex_count();
  out["arrows"] = int_matrix_to_json(q.arrows());
  out["loops"] = vector_to_json(q.loops());
  return out;
}

Quiver quiver_from_json(const Json& j) {
  return Quiver(int_matrix_from_json(field(j, "arrows")), vector_from_json(field(j, "loops")));
}

Json config_to_json(const GeodesicConfig& c) {
  Json cls = Json::array();
  for (const auto& v : c.classes()) cls.push_back(vector_to_json(v));
  Json out;
  out["classes"] = cls;
  return out;
}

GeodesicConfig config_from_json(const Json& j) {
  std::vector<LatticeVector> cls;
  for (const auto& v : array(field(j, "classes"), "classes")) cls.push_back(vector_from_json(v));
  return GeodesicConfig(std::move(cls));
}

Json ledger_to_json(const IntersectionLedger& l) {
  Json out;
  out["P"] = int_matrix_to_json(l.positive());
  out["s"] = vector_to_json(l.self());
  return out;
}

IntersectionLedger ledger_from_json(const Json& j) {
  return IntersectionLedger(int_matrix_from_json(field(j, "P")), vector_from_json(field(j, "s")));
}

Json character_to_json(const Character& c) {
  Json out;
  out["a"] = rational_to_json(c.a());
  out["b"] = rational_to_json(c.b());
  return out;
}

Character character_from_json(const Json& j) {
  return Character(rational_from_json(field(j, "a")), rational_from_json(field(j, "b")));
}

Json matrix_to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(i, c)));
    out.push_back(row);
  }
  return out;
}

RationalMatrix matrix_from_json(const Json& j) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : array(j, "matrix")) {
    rows.emplace_back();
    for (const auto& x : array(row, "matrix row")) rows.back().push_back(rational_from_json(x));
  }
  return RationalMatrix(rows);
}

Json pair_to_json(const CommutingPair& p) {
  Json out;
  out["A"] = matrix_to_json(p.a());
  out["B"] = matrix_to_json(p.b());
  return out;
}

CommutingPair pair_from_json(const Json& j) {
  return CommutingPair(matrix_from_json(field(j, "A")), matrix_from_json(field(j, "B")));
}

Json q0_to_json(const Q0Rep& r) {
  Json out;
  out["a"] = r.dim_a();
  out["b"] = r.dim_b();
  out["x"] = matrix_to_json(r.x());
  out["y"] = matrix_to_json(r.y());
  return out;
}

Q0Rep q0_from_json(const Json& j) {
  const std::size_t a = size_from_json(field(j, "a"), "a");
  const std::size_t b = size_from_json(field(j, "b"), "b");
  // empty matrices lose their shape in JSON, so rebuild it from the dimensions
  auto read = [](const Json& m, std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) return RationalMatrix(rows, cols);
    return matrix_from_json(m);
  };
  return Q0Rep(a, b, read(field(j, "x"), b, a), read(field(j, "y"), a, b));
}

Json map_to_json(const RationalMap& m) {
  Json out = Json::array();
  for (const auto& e : m.images()) out.push_back(e.render());
  return out;
}

RationalMap map_from_json(const Json& j, std::size_t rank) {
  std::vector<RationalExpr> images;
  for (const auto& e : array(j, "map")) {
    if (!e.is_string()) bad("map images must be strings");
    images.push_back(parse_rational_expr(e.get<std::string>(), rank));
  }
  if (images.size() != rank) bad("map must have one image per coordinate");
  return RationalMap(std::move(images));
}

Json graph_to_json(const ExchangeGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices) {
    Json vj;
    vj["key"] = v.key;
    vj["depth"] = v.depth;
    Json vs = Json::array();
    for (const auto& e : v.state.seed.vectors()) vs.push_back(vector_to_json(e));
    vj["vectors"] = vs;
    vj["xvars"] = v.labels;
    Json word = Json::array();
    for (auto k : v.state.word) word.push_back(k + 1);
    vj["word"] = word;
    vertices.push_back(vj);
  }
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    edges.push_back(Json::array({g.vertices[e.from].key, e.index + 1, g.vertices[e.to].key}));
  }
  Json out;
  out["vertices"] = vertices;
  out["edges"] = edges;
  out["level_sizes"] = g.level_sizes;
  out["closed"] = g.closed;
  return out;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace mutwb::io
