#include "format.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace gmalie::cli {

AnyField make_field(const FieldSpec& spec) {
  if (spec.kind == FieldKind::Rationals) return Rationals{};
  return PrimeField(spec.p);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path dir = target.has_parent_path() ? target.parent_path() : fs::path(".");
  fs::path tmp = dir / ("." + target.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(tmp.string() + ": cannot open for writing");
    out << text;
    out.flush();
    if (!out) throw Error(tmp.string() + ": write failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(path + ": " + ec.message());
  }
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

FieldSpec field_of(const json& doc, const std::string& source) {
  if (!doc.is_object() || !doc.contains("field") || !doc["field"].is_string())
    throw ParseError(source + ": missing string field \"field\"");
  try {
    auto spec = FieldSpec::parse(doc["field"].get<std::string>());
    if (spec.kind == FieldKind::PrimeField) PrimeField check(spec.p);
    return spec;
  } catch (const Error& e) {
    throw ParseError(source + ": field: " + e.what());
  }
}

namespace detail {

const json& member(const json& obj, const char* key, const std::string& path) {
  const std::string where = path.empty() ? std::string(key) : path + "." + key;
  if (!obj.is_object()) throw ParseError((path.empty() ? std::string("document") : path) + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing");
  return *it;
}

std::size_t index_value(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError(path + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace detail

json check_json(const Check& c) {
  return json{{"name", c.name}, {"status", std::string(to_string(c.status))}, {"witness", c.witness}};
}

json checks_json(const CheckReport& r) {
  json out = json::array();
  for (const auto& c : r.checks()) out.push_back(check_json(c));
  return out;
}

}  // namespace gmalie::cli
