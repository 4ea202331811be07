#include "preproj/json_io.hpp"

#include <cctype>

namespace preproj::io {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError("schema: " + what);
}

const json& field(const json& j, const char* key) {
  require(j.is_object(), std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  require(it != j.end(), std::string("missing field '") + key + "'");
  return *it;
}

json to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    require(s.size() > start, "empty integer string");
    for (std::size_t k = start; k < s.size(); ++k) require(std::isdigit(static_cast<unsigned char>(s[k])), "bad integer '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    return mpz_class(s);
  }
  throw ValidationError("schema: expected an integer");
}

std::int64_t int_from_json(const json& j, const char* what) {
  require(j.is_number_integer(), std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

Tuple tuple_from_json(const json& j) {
  require(j.is_array(), "tuple must be an array");
  Tuple t;
  for (const auto& x : j) t.push_back(int_from_json(x, "tuple entry"));
  return t;
}

}  // namespace

json to_json(const Rational& r) {
  if (r.get_den() == 1) return to_json(mpz_class(r.get_num()));
  return r.get_str();
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  require(j.is_string(), "expected a rational");
  return parse_rational(j.get<std::string>());
}

json to_json(const Scalar& s) {
  return json::array({to_json(mpz_class(s.re().get_num())), to_json(mpz_class(s.re().get_den())),
                      to_json(mpz_class(s.im().get_num())), to_json(mpz_class(s.im().get_den()))});
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(Rational(integer_from_json(j)));
  require(j.is_array() && j.size() == 4, "scalar must be [re_num, re_den, im_num, im_den]");
  mpz_class rd = integer_from_json(j[1]), id = integer_from_json(j[3]);
  require(rd != 0 && id != 0, "zero denominator in scalar");
  return Scalar(Rational(integer_from_json(j[0]), rd), Rational(integer_from_json(j[2]), id));
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"shape", {m.rows(), m.cols()}}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
  const json& shape = field(j, "shape");
  require(shape.is_array() && shape.size() == 2, "matrix shape must be [rows, cols]");
  std::int64_t r = int_from_json(shape[0], "rows"), c = int_from_json(shape[1], "cols");
  require(r >= 0 && c >= 0, "matrix shape must be nonnegative");
  Matrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  auto it = j.find("entries");
  if (it == j.end()) return m;
  require(it->is_array() && it->size() == m.rows(), "matrix entries must have one array per row");
  for (std::size_t row = 0; row < m.rows(); ++row) {
    const json& jr = (*it)[row];
    require(jr.is_array() && jr.size() == m.cols(), "matrix row has the wrong length");
    for (std::size_t col = 0; col < m.cols(); ++col) m(row, col) = scalar_from_json(jr[col]);
  }
  return m;
}

json to_json(const Quiver& q) {
  json j = {{"family", family_name(q.kind())}};
  if (q.kind() == Family::Explicit) {
    j["vertices"] = q.explicit_vertices();
    json arrows = json::array();
    for (const auto& a : q.explicit_arrows()) arrows.push_back({a.tail, a.head});
    j["arrows"] = std::move(arrows);
  }
  return j;
}

Quiver quiver_from_json(const json& j) {
  if (j.is_string()) return Quiver::family(parse_family(j.get<std::string>()));
  const Family f = parse_family(field(j, "family").get<std::string>());
  if (f != Family::Explicit) return Quiver::family(f);
  std::vector<Vertex> vertices;
  for (const auto& v : field(j, "vertices")) vertices.push_back(int_from_json(v, "vertex"));
  std::vector<std::pair<Vertex, Vertex>> arrows;
  for (const auto& a : field(j, "arrows")) {
    if (a.is_object()) {
      arrows.emplace_back(int_from_json(field(a, "tail"), "tail"), int_from_json(field(a, "head"), "head"));
      continue;
    }
    require(a.is_array() && a.size() == 2, "arrow must be [tail, head] or {\"tail\", \"head\"}");
    arrows.emplace_back(int_from_json(a[0], "tail"), int_from_json(a[1], "head"));
  }
  return Quiver::explicit_quiver(std::move(vertices), arrows);
}

json to_json(const DimVector& d) {
  json out = json::array();
  for (const auto& [v, x] : d.entries()) out.push_back({v, x});
  return out;
}

DimVector dimvector_from_json(const json& j) {
  require(j.is_array(), "dimension vector must be a list of [vertex, value] pairs");
  DimVector d;
  for (const auto& e : j) {
    require(e.is_array() && e.size() == 2, "dimension vector entry must be [vertex, value]");
    d.add(int_from_json(e[0], "vertex"), int_from_json(e[1], "dimension"));
  }
  return d;
}

json to_json(const Weight& w) {
  json j;
  switch (w.base()) {
    case Weight::Base::Zero: j["base"] = "zero"; break;
    case Weight::Base::Explicit: {
      j["base"] = "explicit";
      j["start"] = w.explicit_start();
      json values = json::array();
      for (const auto& s : w.explicit_base_values()) values.push_back(to_json(s));
      j["values"] = std::move(values);
      break;
    }
    case Weight::Base::Khare: {
      j["base"] = "khare";
      json f = json::array();
      for (const auto& c : w.khare_polynomial().coefficients()) f.push_back(to_json(c));
      j["f"] = std::move(f);
      break;
    }
  }
  if (!w.patch().empty()) {
    json patch = json::array();
    for (const auto& [v, s] : w.patch()) patch.push_back({v, to_json(s)});
    j["patch"] = std::move(patch);
  }
  return j;
}

Weight weight_from_json(const json& j) {
  // {"base": {"kind": ..., fields}} is read like {"base": kind, fields}
  const json& b = field(j, "base");
  const json& src = b.is_object() ? b : j;
  const std::string base = b.is_object() ? field(b, "kind").get<std::string>() : b.get<std::string>();
  Weight w;
  if (base == "zero") {
    w = Weight::zero();
  } else if (base == "explicit") {
    std::vector<Scalar> values;
    for (const auto& s : field(src, "values")) values.push_back(scalar_from_json(s));
    Vertex start = src.contains("start") ? int_from_json(src["start"], "start") : 0;
    w = Weight::explicit_values(std::move(values), start);
  } else if (base == "khare") {
    std::vector<Rational> coeffs;
    for (const auto& c : field(src, "f")) coeffs.push_back(rational_from_json(c));
    w = Weight::khare(CasimirPolynomial(std::move(coeffs)));
  } else {
    throw ValidationError("schema: unknown weight base '" + base + "'");
  }
  if (auto it = j.find("patch"); it != j.end() && it->is_object()) {
    for (const auto& [key, value] : it->items()) {
      Vertex v = 0;
      try {
        std::size_t used = 0;
        v = std::stoll(key, &used);
        require(used == key.size(), "weight patch key must be a vertex");
      } catch (const std::logic_error&) {
        throw ValidationError("schema: weight patch key '" + key + "' is not a vertex");
      }
      w = w.with(v, scalar_from_json(value));
    }
  } else if (it != j.end()) {
    require(it->is_array(), "weight patch must be a list or an object");
    for (const auto& e : *it) {
      require(e.is_array() && e.size() == 2, "weight patch entry must be [vertex, scalar]");
      w = w.with(int_from_json(e[0], "vertex"), scalar_from_json(e[1]));
    }
  }
  return w;
}

json to_json(const WreathRep& v, const std::optional<Weight>& weight, const std::optional<Scalar>& nu) {
  json j = {{"quiver", to_json(v.quiver())}, {"rank", v.rank()}};
  if (weight) j["weight"] = to_json(*weight);
  if (nu) j["nu"] = to_json(*nu);
  json comps = json::array();
  for (const auto& [t, d] : v.components()) comps.push_back({{"tuple", t}, {"dim", d}});
  j["components"] = std::move(comps);
  json arrows = json::array();
  for (const auto& [key, m] : v.arrows())
    arrows.push_back(
        {{"tuple", key.tuple}, {"position", key.position + 1}, {"arrow", key.arrow.name()}, {"matrix", to_json(m)}});
  j["arrows"] = std::move(arrows);
  json sigma = json::array();
  for (const auto& [key, m] : v.sigmas()) sigma.push_back({{"tuple", key.tuple}, {"k", key.k + 1}, {"matrix", to_json(m)}});
  j["transpositions"] = std::move(sigma);
  return j;
}

ModuleDocument module_from_json(const json& j) {
  Quiver q = quiver_from_json(field(j, "quiver"));
  const std::int64_t n = j.contains("rank") ? int_from_json(j["rank"], "rank") : 1;
  require(n >= 1 && n <= 16, "rank must be between 1 and 16");
  std::map<Tuple, std::size_t> dims;
  for (const auto& c : field(j, "components")) {
    Tuple t = tuple_from_json(field(c, "tuple"));
    require(static_cast<std::int64_t>(t.size()) == n, "component tuple length must equal the rank");
    std::int64_t d = int_from_json(field(c, "dim"), "dim");
    require(d >= 0, "component dimension must be nonnegative");
    require(dims.emplace(t, static_cast<std::size_t>(d)).second, "duplicate component " + tuple_string(t));
  }
  std::map<ArrowKey, Matrix> arrows;
  if (auto it = j.find("arrows"); it != j.end()) {
    for (const auto& a : *it) {
      ArrowKey key{tuple_from_json(field(a, "tuple")),
                   static_cast<int>(int_from_json(field(a, "position"), "position") - 1),
                   DoubleArrow::parse(field(a, "arrow").get<std::string>())};
      require(arrows.emplace(key, matrix_from_json(field(a, "matrix"))).second, "duplicate arrow entry");
    }
  }
  std::map<SigmaKey, Matrix> sigma;
  if (auto it = j.find("transpositions"); it != j.end()) {
    for (const auto& s : *it) {
      SigmaKey key{tuple_from_json(field(s, "tuple")), static_cast<int>(int_from_json(field(s, "k"), "k") - 1)};
      require(sigma.emplace(key, matrix_from_json(field(s, "matrix"))).second, "duplicate transposition entry");
    }
  }
  ModuleDocument doc{WreathRep(std::move(q), static_cast<int>(n), std::move(dims), std::move(arrows), std::move(sigma)),
                     std::nullopt, std::nullopt};
  if (auto it = j.find("weight"); it != j.end()) doc.weight = weight_from_json(*it);
  if (auto it = j.find("nu"); it != j.end()) doc.nu = scalar_from_json(*it);
  return doc;
}

json to_json(const CheckReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    json e = {{"relation", v.relation}, {"location", v.location}};
    if (!v.residual.empty()) e["residual"] = to_json(v.residual);
    violations.push_back(std::move(e));
  }
  return {{"pass", r.pass()}, {"violations", std::move(violations)}};
}

json to_json(const SimpleCertificate& c) {
  json j = {{"alpha", to_json(c.alpha)},
            {"window", c.window},
            {"exists", c.exists},
            {"reason", reason_name(c.reason)},
            {"pairing", to_json(c.pairing)}};
  if (!c.decomposition.empty()) {
    json parts = json::array();
    for (const auto& b : c.decomposition) parts.push_back(to_json(b));
    j["decomposition"] = std::move(parts);
  }
  if (!c.edge_scalars.empty()) {
    json edges = json::array();
    for (const auto& e : c.edge_scalars) edges.push_back({{"arrow", e.arrow.name()}, {"value", to_json(e.value)}});
    j["edge_scalars"] = std::move(edges);
  }
  return j;
}

json to_json(const InductionVerdict& v) {
  json shapes = json::array();
  for (const auto& s : v.shapes) shapes.push_back(s ? json::array({s->first, s->second}) : json());
  json j = {{"pass", v.pass()},
            {"rectangular", v.rectangular},
            {"orthogonal", v.orthogonal},
            {"orthogonality_checked", v.orthogonality_checked},
            {"weight_equation", v.weight_equation},
            {"shapes", std::move(shapes)}};
  j["relation_check"] = v.relation_check ? json(*v.relation_check) : json();
  return j;
}

json to_json(const VrsModule& m) { return {{"s", m.s}, {"r", m.r}, {"dimension", m.dimension()}}; }

}  // namespace preproj::io
