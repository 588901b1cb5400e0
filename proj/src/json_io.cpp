#include "corner/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace corner {

JsonValue JsonValue::boolean(bool b) {
  JsonValue v;
  v.data_ = b;
  return v;
}

JsonValue JsonValue::integer(std::int64_t n) {
  JsonValue v;
  v.data_ = n;
  return v;
}

JsonValue JsonValue::real(double x) {
  JsonValue v;
  v.data_ = x;
  return v;
}

JsonValue JsonValue::str(std::string s) {
  JsonValue v;
  v.data_ = std::move(s);
  return v;
}

JsonValue JsonValue::array() {
  JsonValue v;
  v.data_ = std::make_shared<Arr>();
  return v;
}

JsonValue JsonValue::object() {
  JsonValue v;
  v.data_ = std::make_shared<Obj>();
  return v;
}

void JsonValue::push(JsonValue v) {
  auto* arr = std::get_if<std::shared_ptr<Arr>>(&data_);
  if (!arr) throw std::logic_error("push on a non-array JSON value");
  (*arr)->items.push_back(std::move(v));
}

void JsonValue::set(const std::string& key, JsonValue v) {
  auto* obj = std::get_if<std::shared_ptr<Obj>>(&data_);
  if (!obj) throw std::logic_error("set on a non-object JSON value");
  (*obj)->entries.emplace_back(key, std::move(v));
}

std::string format17(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void newline_indent(std::string& out, int indent, int depth) {
  if (indent < 0) return;
  out += '\n';
  out.append(static_cast<size_t>(indent) * depth, ' ');
}

}  // namespace

void JsonValue::write(std::string& out, int indent, int depth) const {
  if (std::holds_alternative<std::nullptr_t>(data_)) {
    out += "null";
  } else if (const auto* b = std::get_if<bool>(&data_)) {
    out += *b ? "true" : "false";
  } else if (const auto* n = std::get_if<std::int64_t>(&data_)) {
    out += std::to_string(*n);
  } else if (const auto* x = std::get_if<double>(&data_)) {
    out += format17(*x);
  } else if (const auto* s = std::get_if<std::string>(&data_)) {
    write_escaped(out, *s);
  } else if (const auto* arr = std::get_if<std::shared_ptr<Arr>>(&data_)) {
    const auto& items = (*arr)->items;
    if (items.empty()) {
      out += "[]";
      return;
    }
    out += '[';
    for (size_t i = 0; i < items.size(); ++i) {
      if (i) out += ',';
      newline_indent(out, indent, depth + 1);
      items[i].write(out, indent, depth + 1);
    }
    newline_indent(out, indent, depth);
    out += ']';
  } else if (const auto* obj = std::get_if<std::shared_ptr<Obj>>(&data_)) {
    const auto& entries = (*obj)->entries;
    if (entries.empty()) {
      out += "{}";
      return;
    }
    out += '{';
    for (size_t i = 0; i < entries.size(); ++i) {
      if (i) out += ',';
      newline_indent(out, indent, depth + 1);
      write_escaped(out, entries[i].first);
      out += indent < 0 ? ":" : ": ";
      entries[i].second.write(out, indent, depth + 1);
    }
    newline_indent(out, indent, depth);
    out += '}';
  }
}

std::string JsonValue::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  return out;
}

nlohmann::json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    size_t line = 1, col = 1;
    const size_t stop = std::min(text.size(), e.byte == 0 ? size_t{0} : e.byte - 1);
    for (size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream msg;
    msg << origin << ":" << line << ":" << col << ": malformed JSON: " << e.what();
    throw InputError(msg.str());
  }
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path);
}

Rat rat_from_json(const nlohmann::json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Rat(j.get<std::uint64_t>());
  if (j.is_number_float())
    throw InputError("non-integer numeric literals must be strings to stay exact");
  throw InputError("expected a rational (string or integer)");
}

RatVec rat_vec_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  RatVec v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

Subspace subspace_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ambient"))
    throw InputError("subspace needs an \"ambient\" field");
  const int ambient = j.at("ambient").get<int>();
  RatMat rows;
  if (j.contains("basis")) {
    if (!j.at("basis").is_array()) throw InputError("\"basis\" must be an array");
    for (const auto& row : j.at("basis")) rows.push_back(rat_vec_from_json(row));
  }
  return Subspace::from_span(ambient, rows);
}

JsonValue subspace_to_json(const Subspace& s) {
  JsonValue out = JsonValue::object();
  out.set("ambient", JsonValue::integer(s.ambient_dim()));
  JsonValue basis = JsonValue::array();
  for (const auto& row : s.basis()) {
    JsonValue r = JsonValue::array();
    for (const auto& x : row) r.push(JsonValue::str(rat_to_string(x)));
    basis.push(std::move(r));
  }
  out.set("basis", std::move(basis));
  return out;
}

Semilattice semilattice_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("members"))
    throw InputError("semilattice needs \"ambient\" and \"members\"");
  const int ambient = j.at("ambient").get<int>();
  std::vector<Subspace> members;
  for (const auto& m : j.at("members")) {
    if (m.is_object() && m.contains("ambient")) {
      members.push_back(subspace_from_json(m));
    } else {
      RatMat rows;
      for (const auto& row : m) rows.push_back(rat_vec_from_json(row));
      members.push_back(Subspace::from_span(ambient, rows));
    }
  }
  try {
    return Semilattice::from_members(ambient, std::move(members));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid semilattice: ") + e.what());
  }
}

JsonValue semilattice_to_json(const Semilattice& s) {
  JsonValue out = JsonValue::object();
  out.set("ambient", JsonValue::integer(s.ambient_dim()));
  JsonValue members = JsonValue::array();
  for (const auto& m : s.members()) members.push(subspace_to_json(m));
  out.set("members", std::move(members));
  return out;
}

std::pair<int, std::vector<Subspace>> generators_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ambient"))
    throw InputError("generator list needs an \"ambient\" field");
  const int ambient = j.at("ambient").get<int>();
  const char* key = j.contains("generators") ? "generators" : "members";
  if (!j.contains(key)) throw InputError("generator list needs \"generators\"");
  std::vector<Subspace> gens;
  for (const auto& g : j.at(key)) {
    if (g.is_object() && g.contains("ambient")) {
      gens.push_back(subspace_from_json(g));
    } else {
      RatMat rows;
      for (const auto& row : g) rows.push_back(rat_vec_from_json(row));
      gens.push_back(Subspace::from_span(ambient, rows));
    }
  }
  return {ambient, std::move(gens)};
}

PolyCurve curve_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs"))
    throw InputError("curve needs a \"coeffs\" field (lowest degree first)");
  RatMat coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rat_vec_from_json(c));
  try {
    return PolyCurve(std::move(coeffs));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid curve: ") + e.what());
  }
}

JsonValue curve_to_json(const PolyCurve& c) {
  JsonValue out = JsonValue::object();
  JsonValue coeffs = JsonValue::array();
  for (const auto& coeff : c.coeffs()) {
    JsonValue row = JsonValue::array();
    for (const auto& x : coeff) row.push(JsonValue::str(rat_to_string(x)));
    coeffs.push(std::move(row));
  }
  out.set("coeffs", std::move(coeffs));
  return out;
}

RadialPoint radial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("vec"))
    throw InputError("radial point needs \"kind\" and \"vec\"");
  std::vector<double> vec;
  for (const auto& x : j.at("vec")) {
    if (x.is_string())
      vec.push_back(rat_to_double(rat_from_string(x.get<std::string>())));
    else
      vec.push_back(x.get<double>());
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "interior") return RadialPoint::interior(std::move(vec));
  if (kind == "direction") return RadialPoint::direction(std::move(vec));
  throw InputError("radial point kind must be \"interior\" or \"direction\"");
}

JsonValue radial_to_json(const RadialPoint& p) {
  JsonValue out = JsonValue::object();
  out.set("kind", JsonValue::str(p.is_interior() ? "interior" : "direction"));
  out.set("vec", vector_to_json(p.vec()));
  return out;
}

JsonValue vector_to_json(const std::vector<double>& v) {
  JsonValue arr = JsonValue::array();
  for (double x : v) arr.push(JsonValue::real(x));
  return arr;
}

}  // namespace corner
