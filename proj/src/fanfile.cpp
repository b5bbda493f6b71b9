#include "qtoric/fanfile.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qtoric/errors.hpp"

namespace qtoric {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, "fan file " + where + ": " + what);
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

long as_long(const json& v, const std::string& where) {
  if (!v.is_number_integer())
    schema_error(where, "expected an integer");
  return v.get<long>();
}

BigRat as_rational(const json& v, const std::string& where) {
  if (v.is_number_integer())
    return BigRat(v.get<long>());
  if (v.is_string())
    return parse_rational(v.get<std::string>());
  schema_error(where, "expected an integer or a rational string such as \"1/3\"");
}

const json& member(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end())
    schema_error("/", std::string("missing key \"") + key + "\"");
  return *it;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos)
    return "";
  std::size_t b = s.find_last_not_of(" \t\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(std::string text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']')
      throw Error(ErrorCode::ParseError, "unbalanced bracket in '" + text + "'");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(trim(item));
  if (out.empty() || (out.size() == 1 && out[0].empty()))
    throw Error(ErrorCode::ParseError, "empty vector");
  return out;
}

} // namespace

Fan FanFile::to_fan() const { return Fan::make(dimension, rays, cones, labels); }

FanFile parse_fan_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                "malformed JSON at " + line_column(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object())
    schema_error("/", "top level must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "dimension" && key != "rays" && key != "cones" && key != "omega" &&
        key != "labels")
      schema_error("/" + key, "unknown key");

  FanFile f;
  f.dimension = int(as_long(member(doc, "dimension"), "/dimension"));
  const json& rays = member(doc, "rays");
  if (!rays.is_array())
    schema_error("/rays", "expected an array");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    std::string where = "/rays/" + std::to_string(i);
    if (!rays[i].is_array())
      schema_error(where, "expected an integer vector");
    std::vector<long> r;
    for (std::size_t k = 0; k < rays[i].size(); ++k)
      r.push_back(as_long(rays[i][k], where + "/" + std::to_string(k)));
    f.rays.push_back(std::move(r));
  }
  const json& cones = member(doc, "cones");
  if (!cones.is_array())
    schema_error("/cones", "expected an array");
  for (std::size_t i = 0; i < cones.size(); ++i) {
    std::string where = "/cones/" + std::to_string(i);
    if (!cones[i].is_array())
      schema_error(where, "expected a list of ray indices");
    std::vector<int> c;
    for (std::size_t k = 0; k < cones[i].size(); ++k) {
      long idx = as_long(cones[i][k], where + "/" + std::to_string(k));
      if (idx < 1 || idx > long(f.rays.size()))
        schema_error(where + "/" + std::to_string(k),
                     "ray index " + std::to_string(idx) + " out of range (indices are 1-based)");
      c.push_back(int(idx - 1));
    }
    f.cones.push_back(std::move(c));
  }
  if (auto it = doc.find("omega"); it != doc.end()) {
    if (!it->is_array())
      schema_error("/omega", "expected an array");
    std::vector<BigRat> w;
    for (std::size_t i = 0; i < it->size(); ++i)
      w.push_back(as_rational((*it)[i], "/omega/" + std::to_string(i)));
    f.omega = std::move(w);
  }
  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array())
      schema_error("/labels", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string())
        schema_error("/labels/" + std::to_string(i), "expected a string");
      f.labels.push_back((*it)[i].get<std::string>());
    }
  }
  return f;
}

FanFile read_fan_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot read fan file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fan_file(ss.str());
}

std::string write_fan_file(const FanFile& f) {
  json doc;
  doc["dimension"] = f.dimension;
  doc["rays"] = f.rays;
  json cones = json::array();
  for (const auto& c : f.cones) {
    json row = json::array();
    for (int i : c)
      row.push_back(i + 1);
    cones.push_back(row);
  }
  doc["cones"] = cones;
  if (f.omega) {
    json w = json::array();
    for (const auto& q : *f.omega)
      w.push_back(to_string(q));
    doc["omega"] = w;
  }
  if (!f.labels.empty())
    doc["labels"] = f.labels;
  return doc.dump(2) + "\n";
}

FanFile fan_file_from(const Fan& fan, std::optional<std::vector<BigRat>> omega) {
  FanFile f;
  f.dimension = fan.dim();
  f.rays = fan.rays();
  f.cones = fan.cones();
  f.labels = fan.labels();
  f.omega = std::move(omega);
  return f;
}

std::vector<BigRat> parse_rational_vector(const std::string& text) {
  std::vector<BigRat> out;
  for (const auto& s : split_list(text))
    out.push_back(parse_rational(s));
  return out;
}

std::vector<long> parse_integer_vector(const std::string& text) {
  std::vector<long> out;
  for (const auto& s : split_list(text)) {
    BigRat q = parse_rational(s);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p())
      throw Error(ErrorCode::ParseError, "not an integer: '" + s + "'");
    out.push_back(q.get_num().get_si());
  }
  return out;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream hex;
  hex << std::hex;
  hex.width(16);
  hex.fill('0');
  hex << h;
  return hex.str();
}

std::string fan_hash(const Fan& fan) {
  std::ostringstream canon;
  canon << "dim " << fan.dim() << ";rays";
  for (const auto& r : fan.rays()) {
    canon << " (";
    for (long v : r)
      canon << v << ',';
    canon << ')';
  }
  canon << ";cones";
  for (const auto& c : fan.cones()) {
    canon << " {";
    for (int i : c)
      canon << i << ',';
    canon << '}';
  }
  canon << ";labels";
  for (const auto& l : fan.labels())
    canon << ' ' << l.size() << ':' << l;
  return fnv1a_hex(canon.str());
}

} // namespace qtoric
