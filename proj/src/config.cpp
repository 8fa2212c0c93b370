#include "drivenq/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "json.hpp"

namespace drivenq {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      throw ConfigError("unknown key \"" + where + key + "\"");
  }
}

double read_number(const json& obj, const char* key, double fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number()) throw ConfigError("key \"" + where + key + "\" must be a number");
  return v.get<double>();
}

std::size_t read_count(const json& obj, const char* key, std::size_t fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ConfigError("key \"" + where + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

const json& read_object(const json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_object()) throw ConfigError(std::string("key \"") + key + "\" must be an object");
  return v;
}

}  // namespace

const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::hamiltonian:
      return "hamiltonian";
    case Scheme::s1:
      return "S1";
    case Scheme::s2:
      return "S2";
    case Scheme::s3:
      return "S3";
  }
  return "?";
}

Scheme scheme_from_string(std::string_view name) {
  if (name == "hamiltonian") return Scheme::hamiltonian;
  if (name == "S1") return Scheme::s1;
  if (name == "S2") return Scheme::s2;
  if (name == "S3") return Scheme::s3;
  throw ConfigError("unknown scheme \"" + std::string(name) + "\" in key \"schemes\" (expected hamiltonian, S1, S2, S3)");
}

bool ScenarioConfig::has(Scheme s) const { return std::find(schemes.begin(), schemes.end(), s) != schemes.end(); }

void validate(const ScenarioConfig& c) {
  auto fail = [](const std::string& key, const std::string& why) { throw ConfigError("key \"" + key + "\": " + why); };
  if (!(c.params.m > 0.0)) fail("params.m", "must be positive");
  if (!(c.params.hbar > 0.0)) fail("params.hbar", "must be positive");
  if (c.params.omega == 0.0 || !std::isfinite(c.params.omega)) fail("params.omega", "must be finite and nonzero");
  if (!std::isfinite(c.params.A)) fail("params.A", "must be finite");
  if (!(c.packet.sigma_k > 0.0)) fail("packet.sigma_k", "must be positive");
  if (!std::isfinite(c.packet.k0)) fail("packet.k0", "must be finite");
  if (!std::isfinite(c.packet.x0)) fail("packet.x0", "must be finite");
  if (!(c.grid.k_min < c.grid.k_max)) fail("grid.k_min", "must be below grid.k_max");
  if (c.grid.n < 16) fail("grid.n", "must be at least 16");
  if (c.schemes.empty()) fail("schemes", "select at least one scheme");
  if (std::set<Scheme>(c.schemes.begin(), c.schemes.end()).size() != c.schemes.size())
    fail("schemes", "duplicate scheme");
  if (!c.derived && !c.published) fail("variants", "select at least one variant");
  if (!(c.t_end > 0.0) || !std::isfinite(c.t_end)) fail("t_end", "must be positive");
  if (c.samples < 2) fail("samples", "must be at least 2");
  if (!(c.dt > 0.0)) fail("dt", "must be positive");
}

ScenarioConfig parse_config(std::string_view document) {
  ScenarioConfig c;
  json doc;
  const bool blank = std::all_of(document.begin(), document.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
  if (!blank) {
    try {
      doc = json::parse(document);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
  } else {
    doc = json::object();
  }
  if (!doc.is_object()) throw ConfigError("config document must be a JSON object");
  reject_unknown(doc, {"params", "packet", "grid", "schemes", "variants", "t_end", "samples", "dt", "steps", "strict"},
                 "");

  if (doc.contains("params")) {
    const auto& p = read_object(doc, "params");
    reject_unknown(p, {"m", "A", "omega", "hbar"}, "params.");
    c.params.m = read_number(p, "m", c.params.m, "params.");
    c.params.A = read_number(p, "A", c.params.A, "params.");
    c.params.omega = read_number(p, "omega", c.params.omega, "params.");
    c.params.hbar = read_number(p, "hbar", c.params.hbar, "params.");
  }
  if (doc.contains("packet")) {
    const auto& p = read_object(doc, "packet");
    reject_unknown(p, {"k0", "sigma_k", "x0"}, "packet.");
    c.packet.k0 = read_number(p, "k0", c.packet.k0, "packet.");
    c.packet.sigma_k = read_number(p, "sigma_k", c.packet.sigma_k, "packet.");
    c.packet.x0 = read_number(p, "x0", c.packet.x0, "packet.");
  }
  if (doc.contains("grid")) {
    const auto& g = read_object(doc, "grid");
    reject_unknown(g, {"k_min", "k_max", "n"}, "grid.");
    c.grid.k_min = read_number(g, "k_min", c.grid.k_min, "grid.");
    c.grid.k_max = read_number(g, "k_max", c.grid.k_max, "grid.");
    c.grid.n = read_count(g, "n", c.grid.n, "grid.");
  }
  if (doc.contains("schemes")) {
    const auto& s = doc.at("schemes");
    if (!s.is_array()) throw ConfigError("key \"schemes\" must be an array of names");
    c.schemes.clear();
    for (const auto& item : s) {
      if (!item.is_string()) throw ConfigError("key \"schemes\" must contain strings");
      c.schemes.push_back(scheme_from_string(item.get<std::string>()));
    }
  }
  if (doc.contains("variants")) {
    const auto& v = doc.at("variants");
    if (!v.is_array()) throw ConfigError("key \"variants\" must be an array");
    c.derived = false;
    c.published = false;
    for (const auto& item : v) {
      const std::string name = item.is_string() ? item.get<std::string>() : item.dump();
      if (name == "derived")
        c.derived = true;
      else if (name == "paper_printed")
        c.published = true;
      else
        throw ConfigError("unknown variant \"" + name + "\" in key \"variants\" (expected derived, paper_printed)");
    }
  }
  c.t_end = read_number(doc, "t_end", c.t_end, "");
  c.samples = read_count(doc, "samples", c.samples, "");
  c.dt = read_number(doc, "dt", c.dt, "");
  c.steps = read_count(doc, "steps", c.steps, "");
  if (doc.contains("strict")) {
    if (!doc.at("strict").is_boolean()) throw ConfigError("key \"strict\" must be true or false");
    c.strict = doc.at("strict").get<bool>();
  }
  validate(c);
  return c;
}

std::string serialize_config(const ScenarioConfig& c) {
  json doc;
  doc["params"] = {{"m", c.params.m}, {"A", c.params.A}, {"omega", c.params.omega}, {"hbar", c.params.hbar}};
  doc["packet"] = {{"k0", c.packet.k0}, {"sigma_k", c.packet.sigma_k}, {"x0", c.packet.x0}};
  doc["grid"] = {{"k_min", c.grid.k_min}, {"k_max", c.grid.k_max}, {"n", c.grid.n}};
  json schemes = json::array();
  for (auto s : c.schemes) schemes.push_back(to_string(s));
  doc["schemes"] = schemes;
  json variants = json::array();
  if (c.derived) variants.push_back("derived");
  if (c.published) variants.push_back("paper_printed");
  doc["variants"] = variants;
  doc["t_end"] = c.t_end;
  doc["samples"] = c.samples;
  doc["dt"] = c.dt;
  doc["steps"] = c.steps;
  doc["strict"] = c.strict;
  return doc.dump(2);
}

}  // namespace drivenq
