#include "aptcli/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace aptcli {

namespace fs = std::filesystem;
using apt::Int;

namespace {

std::string style_name(apt::FactorStyle s) {
  return s == apt::FactorStyle::Primary ? "primary" : "invariant";
}

Json pillar_override_json(const apt::PillarConfig& config) {
  Json out = Json::array();
  for (auto p : config.primes) out.push_back(p);
  return out;
}

bool is_ambiguous(const apt::QuadForm& f) { return sgn(f.b) == 0 || f.a == f.b || f.a == f.c; }

Json structure_json(const apt::ClassGroup& cg, apt::FactorStyle style) {
  Json out = Json::array();
  for (const auto& f : cg.structure(style)) out.push_back({{"gen", form_json(cg.form(f.generator))}, {"order", f.order}});
  return out;
}

}  // namespace

fs::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag) return fs::path(*flag);
  if (const char* d = std::getenv("APTRIPLES_CACHE_DIR"); d && *d) return fs::path(d);
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "aptriples";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "aptriples";
  return {};
}

Json build_document(const apt::BasisBuilder& basis, std::int64_t bound) {
  const apt::ClassGroup& cg = basis.class_group();
  const apt::QuotientBasis& q = basis.quotient();
  const apt::Modulus& mod = basis.modulus();
  const apt::FactorStyle style = basis.config().style;
  Json forms = Json::array();
  for (const auto& f : cg.forms()) forms.push_back(form_json(f));
  Json e = Json::array();
  for (auto id : cg.two_torsion()) e.push_back(form_json(cg.form(id)));
  Json pillars = Json::array();
  for (const auto& p : q.pillars()) pillars.push_back(pillar_json(p));
  Json elements = Json::array();
  for (const auto& el : basis.enumerate(bound)) elements.push_back(element_json(el));
  Json doc{{"version", kCacheVersion},
           {"m", mod.value()},
           {"disc", mod.disc()},
           {"style", style_name(style)},
           {"pillar_override", pillar_override_json(basis.config())},
           {"forms", forms},
           {"structure", structure_json(cg, style)},
           {"two_torsion", e},
           {"quotient", q.structure(style)},
           {"pillars", pillars},
           {"bound", bound},
           {"basis", elements},
           {"special", basis.special() ? triple_json(*basis.special()) : Json(nullptr)}};
  return doc;
}

std::string check_document(const Json& doc, const apt::Modulus& mod, const apt::PillarConfig& config,
                           std::int64_t bound) {
  try {
    if (!doc.is_object()) return "not an object";
    if (doc.at("version") != kCacheVersion) return "version mismatch";
    if (doc.at("m").get<std::int64_t>() != mod.value()) return "m mismatch";
    if (doc.at("disc").get<std::int64_t>() != mod.disc()) return "disc mismatch";
    if (doc.at("style") != style_name(config.style)) return "style mismatch";
    if (doc.at("pillar_override") != pillar_override_json(config)) return "pillar configuration mismatch";
    if (doc.at("bound").get<std::int64_t>() < bound) return "bound too small";

    const Int disc(static_cast<long>(mod.disc()));
    std::vector<apt::QuadForm> forms;
    for (const auto& f : doc.at("forms")) forms.push_back(form_from_json(f));
    const auto expected = apt::enumerate_reduced_forms(mod.disc());
    if (forms != expected) return "forms differ from the reduced forms of the discriminant";

    const auto h = forms.size();
    std::size_t product = 1;
    for (const auto& s : doc.at("structure")) {
      const auto g = form_from_json(s.at("gen"));
      if (std::find(forms.begin(), forms.end(), g) == forms.end()) return "structure generator is not a form";
      product *= s.at("order").get<std::size_t>();
    }
    if (product != h) return "structure orders do not multiply to h";

    const auto ambiguous = static_cast<std::size_t>(std::count_if(forms.begin(), forms.end(), is_ambiguous));
    if (doc.at("two_torsion").size() != ambiguous) return "|E| differs from the ambiguous form count";
    std::size_t ph = 1;
    for (const auto& p : doc.at("pillars")) {
      const auto prime = p.at("p").get<std::int64_t>();
      if (apt::kronecker(mod, prime) != 1) return "pillar prime not in L";
      ph *= p.at("h").get<std::size_t>();
    }
    if (ph * ambiguous != h) return "pillar orders do not multiply to |Cl/E|";

    std::int64_t last = 0;
    for (const auto& el : doc.at("basis")) {
      const auto p = el.at("p").get<std::int64_t>();
      if (p <= last || apt::kronecker(mod, p) != 1 || !apt::is_prime(static_cast<std::uint64_t>(p))) {
        return "basis prime out of order or not in L";
      }
      last = p;
      const auto& t = el.at("triple");
      const Int a = int_from_json(t.at(0)), b = int_from_json(t.at(1)), c = int_from_json(t.at(2));
      if (a * a + mod.value() * b * b != c * c) return "basis triple does not solve the equation";
      if (sgn(a) <= 0 || sgn(b) <= 0 || sgn(c) <= 0 || apt::gcd(apt::gcd(a, b), c) != 1) {
        return "basis triple is not a positive primitive representative";
      }
      const auto cat = el.at("category").get<std::string>();
      if (cat != "L0" && cat != "pillar" && cat != "composite") return "unknown category";
      if (mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(p)) == 0) return "p does not divide c";
    }
    if (last > doc.at("bound").get<std::int64_t>()) return "basis exceeds its bound";
  } catch (const std::exception& ex) {
    return std::string("malformed: ") + ex.what();
  }
  return {};
}

fs::path document_path(const fs::path& dir, const apt::Modulus& mod, const apt::PillarConfig& config) {
  std::ostringstream name;
  name << "m" << mod.value() << '_' << style_name(config.style);
  if (config.primes.empty()) {
    name << "_auto";
  } else {
    name << "_p";
    for (std::size_t i = 0; i < config.primes.size(); ++i) name << (i ? "-" : "") << config.primes[i];
  }
  name << ".json";
  return dir / name.str();
}

CacheOutcome obtain_document(const apt::BasisBuilder& basis, std::int64_t bound, const fs::path& dir) {
  CacheOutcome out;
  const apt::Modulus& mod = basis.modulus();
  const apt::PillarConfig& config = basis.config();
  fs::path path;
  if (!dir.empty()) {
    path = document_path(dir, mod, config);
    std::ifstream in(path);
    if (in) {
      try {
        Json doc = Json::parse(in);
        out.rejected = check_document(doc, mod, config, bound);
        if (out.rejected.empty()) {
          out.document = std::move(doc);
          out.from_cache = true;
          return out;
        }
      } catch (const std::exception& ex) {
        out.rejected = std::string("unreadable: ") + ex.what();
      }
    }
  }
  out.document = build_document(basis, bound);
  if (!path.empty()) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path tmp = path.string() + ".tmp";
    std::ofstream os(tmp, std::ios::trunc);
    if (os << canonical(out.document) << '\n' && os.flush()) {
      os.close();
      fs::rename(tmp, path, ec);
    }
  }
  return out;
}

}  // namespace aptcli
