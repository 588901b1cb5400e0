#pragma once

#include "corner/compactify.hpp"
#include "corner/georgescu.hpp"
#include "corner/semilattice.hpp"
#include "corner/subspace.hpp"

#include <json.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace corner {

/// Insertion-ordered JSON document with floats always printed as numbers
/// with 17 significant digits, so equal values give byte-equal reports.
class JsonValue {
 public:
  JsonValue() : data_(nullptr) {}

  static JsonValue boolean(bool b);
  static JsonValue integer(std::int64_t v);
  static JsonValue real(double v);
  static JsonValue str(std::string s);
  static JsonValue array();
  static JsonValue object();

  void push(JsonValue v);                      // arrays only
  void set(const std::string& key, JsonValue v);  // objects only

  std::string dump(int indent = 2) const;

 private:
  struct Arr;
  struct Obj;
  using Data = std::variant<std::nullptr_t, bool, std::int64_t, double, std::string,
                            std::shared_ptr<Arr>, std::shared_ptr<Obj>>;
  struct Arr {
    std::vector<JsonValue> items;
  };
  struct Obj {
    std::vector<std::pair<std::string, JsonValue>> entries;
  };

  void write(std::string& out, int indent, int depth) const;

  Data data_;
};

std::string format17(double x);

/// Thrown on malformed or ill-typed input; message carries line/column for
/// syntax errors.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

nlohmann::json parse_json_text(const std::string& text, const std::string& origin);
nlohmann::json load_json_file(const std::string& path);

Rat rat_from_json(const nlohmann::json& j);
RatVec rat_vec_from_json(const nlohmann::json& j);

Subspace subspace_from_json(const nlohmann::json& j);
JsonValue subspace_to_json(const Subspace& s);

Semilattice semilattice_from_json(const nlohmann::json& j);
JsonValue semilattice_to_json(const Semilattice& s);

/// Accepts {"ambient": n, "generators": [...]} (or "members" as generators).
std::pair<int, std::vector<Subspace>> generators_from_json(const nlohmann::json& j);

PolyCurve curve_from_json(const nlohmann::json& j);
JsonValue curve_to_json(const PolyCurve& c);

RadialPoint radial_from_json(const nlohmann::json& j);
JsonValue radial_to_json(const RadialPoint& p);

JsonValue vector_to_json(const std::vector<double>& v);

}  // namespace corner
