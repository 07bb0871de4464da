#include "aptcli/json_io.hpp"

#include <stdexcept>

namespace aptcli {

using apt::Int;

Json int_json(const Int& x) {
  if (apt::fits_i64(x)) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer string");
    return x;
  }
  throw std::invalid_argument("expected an integer");
}

Json form_json(const apt::QuadForm& f) { return Json::array({int_json(f.a), int_json(f.b), int_json(f.c)}); }

apt::QuadForm form_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected [A,B,C]");
  return {int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2])};
}

Json triple_json(const apt::Triple& t) { return Json::array({int_json(t.a()), int_json(t.b()), int_json(t.c())}); }

Json element_json(const apt::BasisElement& e) {
  Json exps = Json::array();
  for (const auto& x : e.exps) exps.push_back({{"j", x.pillar + 1}, {"a", x.exponent}, {"conj", x.conj}});
  Json shape = Json::array();
  for (const auto& [q, k] : e.third_shape) shape.push_back(Json::array({q, k}));
  return {{"p", e.p},
          {"triple", triple_json(e.triple)},
          {"category", apt::to_string(e.category)},
          {"exps", exps},
          {"shape", shape}};
}

Json pillar_json(const apt::Pillar& p) {
  return {{"p", p.prime.p}, {"root", p.prime.root.value_or(0)}, {"conj", p.conj}, {"h", p.order}};
}

Json decomposition_json(const apt::Modulus& mod, const apt::Triple& input, const apt::Decomposition& d) {
  Json terms = Json::array();
  for (const auto& [p, s] : d.terms) terms.push_back({{"p", p}, {"coeff", int_json(s)}});
  return {{"m", mod.value()},
          {"input", triple_json(input)},
          {"terms", terms},
          {"special", int_json(d.special_coeff)},
          {"verified", d.verified}};
}

std::string canonical(const Json& j) { return j.dump(); }

}  // namespace aptcli
