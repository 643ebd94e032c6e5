#include "toml_io.hpp"

#define TOML_EXCEPTIONS 1
#include <toml.hpp>

#include <sstream>

#include "bundlezeta/error.hpp"

namespace bz::io {

namespace {

std::string path_of(const std::string& parent, const std::string& key) { return parent.empty() ? key : parent + "." + key; }

nlohmann::json convert(const toml::node& n, const std::string& where) {
  if (auto t = n.as_table()) {
    nlohmann::json j = nlohmann::json::object();
    for (auto&& [k, v] : *t) j[std::string(k.str())] = convert(v, path_of(where, std::string(k.str())));
    return j;
  }
  if (auto a = n.as_array()) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < a->size(); ++i) j.push_back(convert(*a->get(i), where + "[" + std::to_string(i) + "]"));
    return j;
  }
  if (auto s = n.as_string()) return s->get();
  if (auto i = n.as_integer()) return i->get();
  if (auto b = n.as_boolean()) return b->get();
  if (n.is_floating_point()) throw SchemaError(where, "floating point values are not accepted; use integers or \"p/q\" strings");
  throw SchemaError(where, "date and time values are not accepted");
}

}  // namespace

nlohmann::json toml_to_json(const std::string& text) {
  toml::table t;
  try {
    t = toml::parse(text);
  } catch (const toml::parse_error& e) {
    std::ostringstream where;
    where << "line " << e.source().begin.line << ", column " << e.source().begin.column;
    throw SchemaError(where.str(), std::string(e.description()));
  }
  return convert(t, "");
}

}  // namespace bz::io
