#include "skelefib/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace skelefib {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw ParseError(path + ": " + msg); }

const json& field(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

bool valid_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  return i < s.size() && std::all_of(s.begin() + static_cast<long>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Integer as_integer(const json& v, const std::string& path) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (valid_integer_text(s)) return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  fail(path, "expected an integer");
}

long as_id(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer id");
  return v.get<long>();
}

std::vector<long> as_id_list(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of ids");
  std::vector<long> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_id(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  return v;
}

std::pair<long, long> as_id_pair(const json& v, const std::string& path) {
  const std::vector<long> ids = as_id_list(v, path);
  if (ids.size() != 2) fail(path, "expected exactly two ids");
  return {ids[0], ids[1]};
}

std::string line_of(std::string_view text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(end), '\n');
  const std::size_t last_nl = text.rfind('\n', end == 0 ? 0 : end - 1);
  const std::size_t col = last_nl == std::string_view::npos ? end : end - last_nl - 1;
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

DegenerationModel parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_of(text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed JSON");
  }
  if (!doc.is_object()) fail("$", "expected a model object");

  DegenerationModel m;
  if (const auto it = doc.find("version"); it != doc.end()) {
    if (!it->is_string() || it->get<std::string>() != kModelFormatVersion)
      fail("$.version", "unsupported version (expected \"" + std::string(kModelFormatVersion) + "\")");
  }
  const json& n = field(doc, "$", "n");
  if (!n.is_number_integer() || n.get<long>() < 0) fail("$.n", "expected a nonnegative integer");
  m.n = n.get<int>();
  if (const auto it = doc.find("lc_centers_are_strata"); it != doc.end()) {
    if (!it->is_boolean()) fail("$.lc_centers_are_strata", "expected a boolean");
    m.lc_centers_are_strata = it->get<bool>();
  }

  const json& divisors = as_array(field(doc, "$", "divisors"), "$.divisors");
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    const std::string path = "$.divisors[" + std::to_string(i) + "]";
    const json& d = divisors[i];
    DivisorRecord rec;
    rec.id = as_id(field(d, path, "id"), path + ".id");
    rec.N = as_integer(field(d, path, "N"), path + ".N");
    if (const auto it = d.find("nu"); it != d.end()) rec.nu = as_integer(*it, path + ".nu");
    if (const auto it = d.find("label"); it != d.end()) {
      if (!it->is_string()) fail(path + ".label", "expected a string");
      rec.label = it->get<std::string>();
    }
    if (!m.divisors.emplace(rec.id, rec).second) fail(path + ".id", "duplicate divisor id " + std::to_string(rec.id));
  }

  const json& faces = as_array(field(doc, "$", "faces"), "$.faces");
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const std::string path = "$.faces[" + std::to_string(i) + "]";
    const json& f = faces[i];
    Face face;
    face.id = as_id(field(f, path, "id"), path + ".id");
    face.vertices = as_id_list(field(f, path, "vertices"), path + ".vertices");
    if (const auto it = f.find("subfaces"); it != f.end()) face.subfaces = as_id_list(*it, path + ".subfaces");
    if (!m.faces.emplace(face.id, face).second) fail(path + ".id", "duplicate face id " + std::to_string(face.id));
  }

  if (const auto cit = doc.find("curves"); cit != doc.end()) {
    const json& curves = as_array(*cit, "$.curves");
    for (std::size_t i = 0; i < curves.size(); ++i) {
      const std::string path = "$.curves[" + std::to_string(i) + "]";
      const json& c = curves[i];
      StratumCurveData cd;
      cd.face = as_id(field(c, path, "face"), path + ".face");
      const json& b = field(c, path, "b");
      if (!b.is_object()) fail(path + ".b", "expected an object keyed by divisor id");
      for (const auto& [key, value] : b.items()) {
        if (!valid_integer_text(key)) fail(path + ".b", "key \"" + key + "\" is not a divisor id");
        cd.b.emplace(std::stol(key), as_integer(value, path + ".b." + key));
      }
      const json& ends = field(c, path, "endpoints");
      cd.endpoint_faces = as_id_pair(field(ends, path + ".endpoints", "faces"), path + ".endpoints.faces");
      cd.endpoint_divisors = as_id_pair(field(ends, path + ".endpoints", "divisors"), path + ".endpoints.divisors");
      if (!m.curves.emplace(cd.face, cd).second) fail(path + ".face", "duplicate curve data for face " + std::to_string(cd.face));
    }
  }
  return m;
}

DegenerationModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json rational_json(const Rational& x) { return json(x.get_str()); }

Rational parse_rational(std::string_view s) {
  const std::string text(s);
  const std::size_t slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("\"" + text + "\" is not a rational number p/q");
  const Integer d(den);
  if (d == 0) throw ParseError("\"" + text + "\" has a zero denominator");
  return make_rational(Integer(num[0] == '+' ? num.substr(1) : num), d);
}

json model_to_json(const DegenerationModel& m) {
  json doc;
  doc["version"] = std::string(kModelFormatVersion);
  doc["n"] = m.n;
  if (!m.lc_centers_are_strata) doc["lc_centers_are_strata"] = false;
  json divisors = json::array();
  for (const auto& [id, d] : m.divisors)
    divisors.push_back(json{{"id", d.id}, {"N", integer_json(d.N)}, {"nu", integer_json(d.nu)}, {"label", d.label}});
  doc["divisors"] = std::move(divisors);
  json faces = json::array();
  for (const auto& [id, f] : m.faces) faces.push_back(json{{"id", f.id}, {"vertices", f.vertices}, {"subfaces", f.subfaces}});
  doc["faces"] = std::move(faces);
  json curves = json::array();
  for (const auto& [id, c] : m.curves) {
    json b = json::object();
    for (const auto& [j, bj] : c.b) b[std::to_string(j)] = integer_json(bj);
    curves.push_back(json{{"face", c.face},
                          {"b", std::move(b)},
                          {"endpoints",
                           {{"faces", {c.endpoint_faces.first, c.endpoint_faces.second}},
                            {"divisors", {c.endpoint_divisors.first, c.endpoint_divisors.second}}}}});
  }
  doc["curves"] = std::move(curves);
  return doc;
}

std::string serialize_model(const DegenerationModel& m, bool compact) {
  return compact ? model_to_json(m).dump() : model_to_json(m).dump(2) + "\n";
}

}  // namespace skelefib
