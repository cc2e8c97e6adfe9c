#include "goldfish/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace goldfish {

namespace {

using nlohmann::json;

Complex decode_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ValidationError(path, "expected [re, im] pair of numbers");
  const Complex z(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ValidationError(path, "non-finite value");
  return z;
}

ComplexVector decode_complex_list(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ValidationError(key, "missing");
  const json& list = doc.at(key);
  if (!list.is_array()) throw ValidationError(key, "expected an array of [re, im] pairs");
  ComplexVector out;
  out.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i)
    out.push_back(decode_complex(list[i], std::string(key) + "[" + std::to_string(i) + "]"));
  return out;
}

json encode_complex_list(const ComplexVector& values) {
  json list = json::array();
  for (const Complex& z : values) list.push_back(json::array({z.real(), z.imag()}));
  return list;
}

}  // namespace

void validate(const SystemConfig& c) {
  if (c.n < 2) throw ValidationError("n", "n must be >= 2");
  if (!std::isfinite(c.omega) || c.omega <= 0.0) throw ValidationError("omega", "omega must be finite and > 0");
  if (static_cast<int>(c.z0.size()) != c.n)
    throw ValidationError("z0", "expected " + std::to_string(c.n) + " entries, got " + std::to_string(c.z0.size()));
  if (static_cast<int>(c.v0.size()) != c.n)
    throw ValidationError("v0", "expected " + std::to_string(c.n) + " entries, got " + std::to_string(c.v0.size()));
  for (int i = 0; i < c.n; ++i) {
    if (!std::isfinite(c.z0[i].real()) || !std::isfinite(c.z0[i].imag()))
      throw ValidationError("z0[" + std::to_string(i) + "]", "non-finite value");
    if (!std::isfinite(c.v0[i].real()) || !std::isfinite(c.v0[i].imag()))
      throw ValidationError("v0[" + std::to_string(i) + "]", "non-finite value");
  }
  for (int i = 0; i < c.n; ++i)
    for (int j = i + 1; j < c.n; ++j)
      if (max_norm_difference(c.z0[i], c.z0[j]) < kCollisionTolerance)
        throw ValidationError("z0", "coincident initial positions (entries " + std::to_string(i) + " and " +
                                        std::to_string(j) + ")");
  if (!std::isfinite(c.t_end) || c.t_end <= 0.0) throw ValidationError("t_end", "t_end must be finite and > 0");
  if (c.samples < 1) throw ValidationError("samples", "samples must be >= 1");
}

SystemConfig load_config(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed configuration document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("configuration document must be a JSON object");

  SystemConfig c;
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ValidationError("n", "missing or not an integer");
  c.n = doc["n"].get<int>();
  if (c.n < 2) throw ValidationError("n", "n must be >= 2");
  if (!doc.contains("omega") || !doc["omega"].is_number()) throw ValidationError("omega", "missing or not a number");
  c.omega = doc["omega"].get<double>();
  if (!std::isfinite(c.omega) || c.omega <= 0.0) throw ValidationError("omega", "omega must be finite and > 0");
  c.z0 = decode_complex_list(doc, "z0");
  c.v0 = decode_complex_list(doc, "v0");
  c.t_end = period(c.omega);
  if (doc.contains("t_end")) {
    if (!doc["t_end"].is_number()) throw ValidationError("t_end", "not a number");
    c.t_end = doc["t_end"].get<double>();
  }
  if (doc.contains("samples")) {
    if (!doc["samples"].is_number_integer()) throw ValidationError("samples", "not an integer");
    c.samples = doc["samples"].get<int>();
  }
  validate(c);
  return c;
}

SystemConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open configuration file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_config(buffer.str());
}

std::string serialize_config(const SystemConfig& c) {
  json doc = json::object();
  doc["n"] = c.n;
  doc["omega"] = c.omega;
  doc["z0"] = encode_complex_list(c.z0);
  doc["v0"] = encode_complex_list(c.v0);
  doc["t_end"] = c.t_end;
  doc["samples"] = c.samples;
  return doc.dump();
}

double period(double omega) {
  require_finite(omega, "omega");
  if (omega <= 0.0) throw InvalidArgument("omega must be > 0");
  return kTwoPi / omega;
}

double period(const SystemConfig& config) { return period(config.omega); }

std::vector<double> uniform_times(double t_end, int samples) {
  require_finite(t_end, "t_end");
  if (samples < 1) throw InvalidArgument("samples must be >= 1");
  std::vector<double> times(static_cast<std::size_t>(samples) + 1);
  for (int k = 0; k <= samples; ++k) times[k] = t_end * static_cast<double>(k) / samples;
  times.back() = t_end;
  return times;
}

}  // namespace goldfish
