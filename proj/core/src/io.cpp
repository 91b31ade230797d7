#include "bvkit/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "bvkit/error.hpp"

namespace bvkit::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

const json& field_of(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

Field field_from_json(const json& j) {
  if (j.is_string()) return parse_field(j.get<std::string>());
  if (j.is_object() && j.contains("Fp") && j.at("Fp").is_number_integer()) return Field::prime(j.at("Fp").get<std::int64_t>());
  throw InvalidInput("field must be \"Q\" or {\"Fp\": p}");
}

json field_to_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return json{{"Fp", f.characteristic()}};
}

Scalar scalar_from_json(const Field& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  if (j.is_string()) return f.parse(j.get<std::string>());
  throw InvalidInput("coefficient must be an integer or a string like \"1/2\"");
}

json scalar_to_json(const Scalar& s) {
  std::string t = s.to_string();
  if (t.find('/') == std::string::npos) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(t, &used);
      if (used == t.size()) return v;
    } catch (const std::exception&) {
    }
  }
  return t;
}

Vec vec_from_json(const Field& f, const json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) throw InvalidInput(what + " must be an array of length " + std::to_string(n));
  Vec v;
  for (const auto& x : j) v.push_back(scalar_from_json(f, x));
  return v;
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

std::size_t index_from_json(const json& j, std::size_t bound, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || static_cast<std::size_t>(j.get<long long>()) >= bound)
    throw InvalidInput(what + " index out of range");
  return j.get<std::size_t>();
}

}  // namespace

Field parse_field(const std::string& text) {
  if (text == "Q" || text == "QQ") return Field::rationals();
  std::string t = text;
  if (t.rfind("Fp:", 0) == 0)
    t = t.substr(3);
  else if (t.size() > 1 && t[0] == 'F')
    t = t.substr(1);
  try {
    std::size_t used = 0;
    long long p = std::stoll(t, &used);
    if (used != t.size()) throw InvalidInput("bad field '" + text + "'");
    return Field::prime(p);
  } catch (const std::invalid_argument&) {
    throw InvalidInput("bad field '" + text + "'");
  } catch (const std::out_of_range&) {
    throw InvalidInput("bad field '" + text + "'");
  }
}

LoadedFixture parse_fixture(const std::string& text, std::optional<Field> override) {
  json j = parse_json(text);
  if (!j.is_object()) throw InvalidInput("fixture must be a JSON object");
  Field f = override ? *override : field_from_json(field_of(j, "field"));
  const json& dj = field_of(j, "dim");
  if (!dj.is_number_integer() || dj.get<long long>() <= 0) throw InvalidInput("dim must be a positive integer");
  const std::size_t d = dj.get<std::size_t>();

  hopf::FinAlgebraData a;
  a.field = f;
  a.dim = d;
  if (j.contains("basis")) {
    const json& b = j.at("basis");
    if (!b.is_array() || b.size() != d) throw InvalidInput("basis must list dim names");
    for (const auto& n : b) a.basis_names.push_back(n.get<std::string>());
  } else {
    for (std::size_t i = 0; i < d; ++i) a.basis_names.push_back("e" + std::to_string(i));
  }
  a.unit = vec_from_json(f, field_of(j, "unit"), d, "unit");
  const json& mj = field_of(j, "mult");
  if (!mj.is_array() || mj.size() != d) throw InvalidInput("mult must be a dim x dim array of vectors");
  a.mult = Mat(f, d, d * d);
  for (std::size_t x = 0; x < d; ++x) {
    if (!mj[x].is_array() || mj[x].size() != d) throw InvalidInput("mult must be a dim x dim array of vectors");
    for (std::size_t y = 0; y < d; ++y) a.mult.set_column(x * d + y, vec_from_json(f, mj[x][y], d, "mult entry"));
  }
  if (j.contains("comult")) {
    const json& cj = j.at("comult");
    if (!cj.is_array() || cj.size() != d) throw InvalidInput("comult must have one list per basis element");
    Mat c(f, d * d, d);
    for (std::size_t x = 0; x < d; ++x)
      for (const auto& t : cj[x]) {
        if (!t.is_array() || t.size() != 3) throw InvalidInput("comult terms are [j, k, coeff]");
        std::size_t p = index_from_json(t[0], d, "comult"), q = index_from_json(t[1], d, "comult");
        c.add_to(p * d + q, x, scalar_from_json(f, t[2]));
      }
    a.comult = c;
  }
  if (j.contains("counit")) a.counit = vec_from_json(f, j.at("counit"), d, "counit");
  if (j.contains("augmentation")) a.augmentation = vec_from_json(f, j.at("augmentation"), d, "augmentation");
  if (j.contains("antipode")) {
    const json& sj = j.at("antipode");
    if (!sj.is_array() || sj.size() != d) throw InvalidInput("antipode must list S(x_i) for every basis element");
    Mat s(f, d, d);
    for (std::size_t x = 0; x < d; ++x) s.set_column(x, vec_from_json(f, sj[x], d, "antipode entry"));
    a.antipode = s;
  }

  LoadedFixture out;
  out.fixture.name = j.value("name", std::string("fixture"));
  out.fixture.notes = j.value("notes", std::string());
  std::string level = j.value("level", std::string(a.antipode ? "hopf" : (a.comult ? "bialgebra" : "algebra")));
  out.fixture.level = hopf::parse_level(level);
  out.certification = hopf::certify(a, out.fixture.level);
  out.fixture.data = std::move(a);
  return out;
}

std::string fixture_to_json(const fixtures::Fixture& fx) {
  const auto& a = fx.data;
  const std::size_t d = a.dim;
  json j;
  j["name"] = fx.name;
  j["field"] = field_to_json(a.field);
  j["dim"] = d;
  j["basis"] = a.basis_names;
  j["unit"] = vec_to_json(a.unit);
  json m = json::array();
  for (std::size_t x = 0; x < d; ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < d; ++y) row.push_back(vec_to_json(a.basis_product(x, y)));
    m.push_back(row);
  }
  j["mult"] = m;
  if (a.comult) {
    json c = json::array();
    for (std::size_t x = 0; x < d; ++x) {
      json terms = json::array();
      for (const auto& [pq, e] : a.comult->column(x)) terms.push_back(json::array({pq / d, pq % d, scalar_to_json(e)}));
      c.push_back(terms);
    }
    j["comult"] = c;
  }
  if (a.counit) j["counit"] = vec_to_json(*a.counit);
  if (a.augmentation) j["augmentation"] = vec_to_json(*a.augmentation);
  if (a.antipode) {
    json s = json::array();
    for (std::size_t x = 0; x < d; ++x) s.push_back(vec_to_json(a.antipode->column_dense(x)));
    j["antipode"] = s;
  }
  j["level"] = hopf::level_name(fx.level);
  if (!fx.notes.empty()) j["notes"] = fx.notes;
  return j.dump(2);
}

charmap::ActionData parse_action(const std::string& text, const hopf::FinAlgebraData& h, const hopf::FinAlgebraData& a) {
  json j = parse_json(text);
  std::string kind = field_of(j, "kind").get<std::string>();
  charmap::ActionData act;
  std::size_t rows = 0, cols = 0;
  if (kind == "module") {
    act.kind = charmap::ActionKind::module;
    rows = a.dim;
    cols = h.dim * a.dim;
  } else if (kind == "comodule") {
    act.kind = charmap::ActionKind::comodule;
    rows = a.dim * h.dim;
    cols = a.dim;
  } else {
    throw InvalidInput("action kind must be \"module\" or \"comodule\"");
  }
  act.map = Mat(a.field, rows, cols);
  const json& mj = field_of(j, "map");
  if (!mj.is_array()) throw InvalidInput("map must be a list of [row, col, coeff]");
  for (const auto& t : mj) {
    if (!t.is_array() || t.size() != 3) throw InvalidInput("map entries are [row, col, coeff]");
    act.map.add_to(index_from_json(t[0], rows, "map row"), index_from_json(t[1], cols, "map column"),
                   scalar_from_json(a.field, t[2]));
  }
  return act;
}

schouten::LieData parse_lie(const std::string& text, std::optional<Field> override) {
  json j = parse_json(text);
  Field f = override ? *override : field_from_json(j.value("field", json("Q")));
  const json& dj = field_of(j, "dim");
  if (!dj.is_number_integer() || dj.get<long long>() < 0) throw InvalidInput("dim must be a nonnegative integer");
  const std::size_t d = dj.get<std::size_t>();
  schouten::LieData l = schouten::abelian(f, d);
  if (j.contains("basis")) {
    const json& b = j.at("basis");
    if (!b.is_array() || b.size() != d) throw InvalidInput("basis must list dim names");
    l.names.clear();
    for (const auto& n : b) l.names.push_back(n.get<std::string>());
  }
  if (j.contains("brackets"))
    for (const auto& t : j.at("brackets")) {
      if (!t.is_array() || t.size() != 3) throw InvalidInput("brackets are [i, j, [coeffs]]");
      std::size_t x = index_from_json(t[0], d, "bracket"), y = index_from_json(t[1], d, "bracket");
      Vec v = vec_from_json(f, t[2], d, "bracket value");
      l.brackets[x * d + y] = v;
      l.brackets[y * d + x] = scale(-f.one(), v);
    }
  if (j.contains("character")) l.delta = vec_from_json(f, j.at("character"), d, "character");
  return l;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace bvkit::io
