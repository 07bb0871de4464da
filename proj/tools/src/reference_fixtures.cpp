#include "aptcli/reference_fixtures.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "apt/basis.hpp"
#include "apt/decompose.hpp"
#include "aptcli/cache.hpp"

namespace aptcli {

namespace {

using apt::Int;
using Primes = std::vector<std::int64_t>;
using TripleMap = std::map<std::int64_t, std::string>;

std::string show(const Primes& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

std::string show(const apt::Triple& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

// beta(p) rendered as "[a,b,c]", read from a (possibly cached) document.
TripleMap basis_table(std::int64_t m, const Primes& pillars, std::int64_t bound, const std::filesystem::path& dir) {
  const apt::Modulus mod(m);
  const apt::BasisBuilder basis(mod, apt::PillarConfig{pillars, apt::FactorStyle::InvariantFactors});
  const Json doc = obtain_document(basis, bound, dir).document;
  TripleMap out;
  for (const auto& el : doc.at("basis")) {
    const auto& t = el.at("triple");
    std::ostringstream os;
    os << '[' << int_from_json(t[0]) << ',' << int_from_json(t[1]) << ',' << int_from_json(t[2]) << ']';
    out[el.at("p").get<std::int64_t>()] = os.str();
  }
  return out;
}

// Empty on success, otherwise a description of the mismatch.
std::string expect_table(const TripleMap& got, const TripleMap& want) {
  std::string bad;
  for (const auto& [p, t] : want) {
    auto it = got.find(p);
    const std::string g = it == got.end() ? "missing" : it->second;
    if (g != t) bad += "beta(" + std::to_string(p) + ")=" + g + " ";
  }
  return bad;
}

std::vector<std::size_t> orders(const apt::ClassGroup& cg) {
  std::vector<std::size_t> out;
  for (const auto& f : cg.structure()) out.push_back(f.order);
  return out;
}

struct Fixture {
  std::int64_t m;
  std::string name;
  std::function<std::string(const std::filesystem::path&)> check;
};

std::string show_sizes(const std::vector<std::size_t>& v) {
  Primes w(v.begin(), v.end());
  return show(w);
}

std::vector<Fixture> fixtures() {
  std::vector<Fixture> f;
  const auto sizes = [](const std::vector<std::size_t>& got, const std::vector<std::size_t>& want) {
    return got == want ? std::string{} : "got " + show_sizes(got);
  };
  const auto primes = [](const Primes& got, const Primes& want) {
    return got == want ? std::string{} : "got " + show(got);
  };

  // m = 35
  f.push_back({35, "class group C2", [=](auto&) { return sizes(orders(apt::ClassGroup(apt::Modulus(35))), {2}); }});
  f.push_back({35, "kronecker(-35/71) = 1",
               [](auto&) { return apt::kronecker(apt::Modulus(35), 71) == 1 ? "" : "got != 1"; }});
  f.push_back({35, "L up to 151", [=](auto&) {
                 return primes(apt::compute_L(apt::Modulus(35), 151),
                               {3, 11, 13, 17, 29, 47, 71, 73, 79, 83, 97, 103, 109, 149, 151});
               }});
  f.push_back({35, "L0 = L up to 151", [=](auto&) {
                 const apt::ClassGroup cg{apt::Modulus(35)};
                 return primes(apt::compute_L0(cg, 151), apt::compute_L(cg.modulus(), 151));
               }});
  f.push_back({35, "generating triples", [](const auto& dir) {
                 return expect_table(basis_table(35, {}, 151, dir),
                                     {{71, "[1,12,71]"},
                                      {73, "[17,12,73]"},
                                      {83, "[43,12,83]"},
                                      {149, "[131,12,149]"},
                                      {3, "[1,1,6]"},
                                      {11, "[13,3,22]"},
                                      {13, "[19,3,26]"},
                                      {17, "[29,3,34]"},
                                      {29, "[23,9,58]"},
                                      {47, "[31,15,94]"},
                                      {79, "[157,3,158]"}});
               }});

  // m = 23
  f.push_back({23, "class group C3", [=](auto&) { return sizes(orders(apt::ClassGroup(apt::Modulus(23))), {3}); }});
  f.push_back({23, "2 splits", [](auto&) { return apt::kronecker(apt::Modulus(23), 2) == 1 ? "" : "got != 1"; }});
  f.push_back({23, "sqrt_mod(-23, 3) = 1", [](auto&) {
                 const auto r = apt::sqrt_mod(-23, 3);
                 return r && *r == 1 ? "" : "wrong root";
               }});
  f.push_back({23, "L up to 197", [=](auto&) {
                 return primes(apt::compute_L(apt::Modulus(23), 197), {2,   3,   13,  29,  31,  41,  47,
                                                                       59,  71,  73,  101, 127, 131, 139,
                                                                       151, 163, 167, 173, 179, 193, 197});
               }});
  f.push_back({23, "L0 up to 180", [=](auto&) {
                 return primes(apt::compute_L0(apt::ClassGroup(apt::Modulus(23)), 180), {59, 101, 167, 173});
               }});
  f.push_back({23, "L0 triples", [](const auto& dir) {
                 return expect_table(basis_table(23, {2}, 173, dir),
                                     {{59, "[13,12,59]"}, {101, "[83,12,101]"}, {167, "[121,24,167]"}, {173, "[11,36,173]"}});
               }});
  f.push_back({23, "pillar over 2", [](const auto& dir) {
                 return expect_table(basis_table(23, {2}, 29, dir),
                                     {{2, "[7,3,16]"}, {3, "[11,1,12]"}, {13, "[29,9,52]"}, {29, "[91,15,116]"}});
               }});
  f.push_back({23, "pillar over 3", [](const auto& dir) {
                 return expect_table(basis_table(23, {3}, 29, dir),
                                     {{3, "[19,4,27]"}, {2, "[11,1,12]"}, {13, "[7,8,39]"}, {29, "[41,16,87]"}});
               }});
  f.push_back({23, "2 not in L0", [](auto&) {
                 return apt::special_four_element(apt::Modulus(23)) ? "special element present" : "";
               }});

  // m = 974
  f.push_back({974, "class group C12 x C3",
               [=](auto&) { return sizes(orders(apt::ClassGroup(apt::Modulus(974))), {12, 3}); }});
  f.push_back({974, "Cl/E = C6 x C3 over pillars 5, 41", [=](auto&) {
                 const apt::ClassGroup cg{apt::Modulus(974)};
                 const apt::QuotientBasis q(cg, {{5, 41}, apt::FactorStyle::InvariantFactors});
                 if (auto s = sizes(q.structure(), {6, 3}); !s.empty()) return s;
                 return sizes(q.pillar_orders(), {6, 3});
               }});
  f.push_back({974, "roots over 5 and 41", [](auto&) {
                 const apt::Modulus mod(974);
                 const auto a = apt::splitting_type(mod, 5), b = apt::splitting_type(mod, 41);
                 return a.root == 1 && b.root == 16 ? "" : "wrong roots";
               }});
  f.push_back({974, "L up to 163", [=](auto&) {
                 return primes(apt::compute_L(apt::Modulus(974), 163), {3,  5,  11, 13,  31,  37,  41,  43,  59,  71, 73,
                                                                        89, 97, 101, 103, 109, 127, 131, 137, 149, 163});
               }});
  f.push_back({974, "L0 up to 983", [=](auto&) {
                 return primes(apt::compute_L0(apt::ClassGroup(apt::Modulus(974)), 983), {937, 983});
               }});
  f.push_back({974, "triples over pillars 5, 41", [](const auto& dir) {
                 return expect_table(basis_table(974, {5, 41}, 41, dir), {{5, "[14651,174,15625]"},
                                                                           {41, "[61129,1020,68921]"},
                                                                           {3, "[359,16,615]"},
                                                                           {37, "[3167,108,4625]"}});
               }});
  f.push_back({974, "L0 triples", [](auto&) {
                 const apt::BasisBuilder b(apt::Modulus(974), {{5, 41}, apt::FactorStyle::InvariantFactors});
                 const std::string got = show(b.beta(937).triple) + show(b.beta(983).triple);
                 return got == "[37,30,937][965,6,983]" ? "" : "got " + got;
               }});
  f.push_back({974, "exponents of 3 and 37", [](auto&) {
                 const apt::BasisBuilder b(apt::Modulus(974), {{5, 41}, apt::FactorStyle::InvariantFactors});
                 std::string got;
                 for (std::int64_t p : {3, 37}) {
                   for (const auto& e : b.exponent_vector(p)) got += std::to_string(e.pillar + 1) + ":" + std::to_string(e.exponent) + " ";
                   got += "| ";
                 }
                 return got == "1:1 2:1 | 1:3 | " ? "" : "got " + got;
               }});
  f.push_back({974, "sum identity", [](auto&) {
                 const apt::Modulus mod(974);
                 const auto s = apt::add(mod, apt::normalize(mod, 4141, 66, 4625), apt::normalize(mod, 14651, 174, 15625));
                 return s == apt::normalize(mod, 3167, 108, 4625) ? "" : "got " + show(s);
               }});
  f.push_back({974, "decompose [4141,66,4625]", [](auto&) {
                 const apt::Modulus mod(974);
                 const apt::BasisBuilder b(mod, {{5, 41}, apt::FactorStyle::InvariantFactors});
                 const auto d = apt::Decomposer(b).decompose(apt::normalize(mod, 4141, 66, 4625));
                 const bool ok = d.verified && d.terms.size() == 2 && d.terms[0] == std::pair<std::int64_t, Int>{5, -1} &&
                                 d.terms[1] == std::pair<std::int64_t, Int>{37, 1};
                 return ok ? "" : "unexpected coefficients";
               }});

  // Small fields with a [q,r,4] element.
  f.push_back({7, "special element [3,1,4]", [](auto&) {
                 const auto s = apt::special_four_element(apt::Modulus(7));
                 return s && show(*s) == "[3,1,4]" ? "" : "missing or wrong";
               }});
  f.push_back({7, "norm of (-3+sqrt(-7))/2 is 4", [](auto&) {
                 const apt::Modulus mod(7);
                 return apt::qi_norm(mod, apt::QuadInt::halves(mod, -3, 1)) == 4 ? "" : "wrong norm";
               }});
  f.push_back({15, "special element [1,1,4]", [](auto&) {
                 const auto s = apt::special_four_element(apt::Modulus(15));
                 return s && show(*s) == "[1,1,4]" ? "" : "missing or wrong";
               }});
  return f;
}

}  // namespace

std::vector<FixtureResult> run_reference_fixtures(std::optional<std::int64_t> only_m, const std::filesystem::path& cache_dir) {
  std::vector<FixtureResult> out;
  for (const Fixture& fx : fixtures()) {
    if (only_m && *only_m != fx.m) continue;
    FixtureResult r{fx.name, fx.m, false, {}};
    try {
      r.detail = fx.check(cache_dir);
      r.pass = r.detail.empty();
    } catch (const std::exception& ex) {
      r.detail = std::string("threw: ") + ex.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace aptcli
