#include "g2t/curve_io.hpp"

#include <json.hpp>

#include "g2t/errors.hpp"

namespace g2t {

using nlohmann::json;

namespace {

uint64_t get_uint(const json& j, const char* key, uint64_t lo, uint64_t hi) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    fail(Err::ParseError, std::string("missing or invalid \"") + key + "\"");
  uint64_t v = j[key].get<uint64_t>();
  if (v < lo || v > hi)
    fail(Err::ParseError, std::string("\"") + key + "\" out of range");
  return v;
}

}  // namespace

Curve curve_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    fail(Err::ParseError, "input is not a JSON object");

  uint64_t p = get_uint(j, "p", 2, (uint64_t(1) << 31) - 1);
  uint32_t a = uint32_t(get_uint(j, "a", 1, kMaxFieldDeg));
  Field k = FieldCtx::get(p, a);  // validates primality and size caps

  if (j.contains("modulus")) {
    const json& m = j["modulus"];
    bool ok = m.is_array() && m.size() == size_t(a) + 1;
    if (ok)
      for (size_t i = 0; i < m.size(); ++i)
        ok = ok && m[i].is_number_unsigned() &&
             m[i].get<uint64_t>() == k->modulus()[i];
    if (!ok)
      fail(Err::ParseError, "\"modulus\" does not match the canonical modulus");
  }

  if (!j.contains("model") || !j["model"].is_string())
    fail(Err::ParseError, "missing \"model\"");
  std::string model = j["model"].get<std::string>();
  int degree;
  if (model == "quintic")
    degree = 5;
  else if (model == "sextic")
    degree = 6;
  else
    fail(Err::ParseError, "\"model\" must be \"quintic\" or \"sextic\"");

  if (!j.contains("f") || !j["f"].is_array() || j["f"].size() != size_t(degree) + 1)
    fail(Err::ParseError, "\"f\" must list exactly deg+1 coefficients");
  std::vector<Fe> coeffs;
  for (const json& c : j["f"]) {
    if (!c.is_array() || c.size() != size_t(a))
      fail(Err::ParseError, "every coefficient must be a length-a vector");
    std::vector<uint32_t> v;
    for (const json& e : c) {
      if (!e.is_number_unsigned() || e.get<uint64_t>() >= p)
        fail(Err::ParseError, "coefficient entries must satisfy 0 <= v < p");
      v.push_back(uint32_t(e.get<uint64_t>()));
    }
    coeffs.push_back(k->from_coeffs(v));
  }
  Poly f(k, coeffs);
  if (f.deg() != degree)
    fail(Err::ParseError, "leading coefficient vanishes for the declared model");
  return curve_make(k, f);
}

std::string curve_to_json(const Curve& c) {
  json j;
  j["p"] = c.k->p();
  j["a"] = c.k->a();
  j["modulus"] = c.k->modulus();
  j["model"] = (c.model == Curve::Model::quintic) ? "quintic" : "sextic";
  json fs = json::array();
  for (int i = 0; i <= c.f.deg(); ++i) {
    json cv = json::array();
    for (uint32_t t = 0; t < c.k->a(); ++t) cv.push_back(c.f.coeff(i).coeff(t));
    fs.push_back(cv);
  }
  j["f"] = fs;
  return j.dump();
}

}  // namespace g2t
