#include "aptcli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "apt/basis.hpp"
#include "apt/decompose.hpp"
#include "apt/errors.hpp"
#include "aptcli/cache.hpp"
#include "aptcli/json_io.hpp"
#include "aptcli/reference_fixtures.hpp"

namespace aptcli {

namespace {

using apt::Int;

struct Options {
  std::int64_t m = 0;
  std::optional<std::int64_t> bound;
  std::vector<std::string> pillars;
  bool json = false;
  bool primary = false;
  std::optional<std::string> cache_dir;
  std::vector<std::string> positional;
};

apt::PillarConfig pillar_config(const Options& o) {
  return {parse_pillars(o.pillars), o.primary ? apt::FactorStyle::Primary : apt::FactorStyle::InvariantFactors};
}

std::string cyclic(const std::vector<std::size_t>& orders) {
  if (orders.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < orders.size(); ++i) s += (i ? " x C" : "C") + std::to_string(orders[i]);
  return s;
}

std::vector<std::size_t> orders_of(const Json& arr, const char* key) {
  std::vector<std::size_t> out;
  for (const auto& x : arr) out.push_back(key ? x.at(key).get<std::size_t>() : x.get<std::size_t>());
  return out;
}

std::string form_text(const Json& f) {
  std::ostringstream os;
  os << '(' << f[0] << ", " << f[1] << ", " << f[2] << ')';
  return os.str();
}

std::string triple_text(const Json& t) {
  std::ostringstream os;
  os << '[' << int_from_json(t[0]) << ',' << int_from_json(t[1]) << ',' << int_from_json(t[2]) << ']';
  return os.str();
}

std::string exps_text(const Json& el) {
  std::string s;
  for (const auto& e : el.at("exps")) {
    if (!s.empty()) s += ' ';
    s += "P" + std::to_string(e.at("j").get<int>()) + (e.at("conj").get<bool>() ? "'" : "") + "^" +
         std::to_string(e.at("a").get<int>());
  }
  return s;
}

std::string shape_text(const Json& el) {
  std::string s;
  for (const auto& f : el.at("shape")) {
    if (!s.empty()) s += " * ";
    s += std::to_string(f[0].get<std::int64_t>());
    if (f[1].get<int>() > 1) s += "^" + std::to_string(f[1].get<int>());
  }
  return s;
}

void print_element(std::ostream& out, const Json& el) {
  std::ostringstream line;
  line << std::left << std::setw(12) << ("beta(" + std::to_string(el.at("p").get<std::int64_t>()) + ")") << "= "
       << std::setw(26) << triple_text(el.at("triple")) << ' ' << std::setw(10) << el.at("category").get<std::string>()
       << ' ' << exps_text(el);
  std::string s = line.str();
  s.erase(s.find_last_not_of(' ') + 1);
  out << s << '\n';
}

int cmd_classgroup(const Options& o, std::ostream& out, std::ostream& err) {
  const apt::Modulus mod(o.m);
  const apt::BasisBuilder basis(mod, pillar_config(o));
  const CacheOutcome c = obtain_document(basis, 0, resolve_cache_dir(o.cache_dir));
  if (!c.rejected.empty()) err << "cache: recomputed (" << c.rejected << ")\n";
  const Json& d = c.document;
  if (o.json) {
    Json r{{"m", d["m"]},
           {"disc", d["disc"]},
           {"h", d["forms"].size()},
           {"structure", d["structure"]},
           {"two_torsion", d["two_torsion"]},
           {"quotient", d["quotient"]},
           {"pillars", d["pillars"]}};
    out << canonical(r) << '\n';
    return kOk;
  }
  out << "m = " << d["m"] << "\ndisc = " << d["disc"] << "\nh = " << d["forms"].size() << '\n';
  out << "Cl(K) = " << cyclic(orders_of(d["structure"], "order")) << '\n';
  for (const auto& s : d["structure"]) out << "  generator " << form_text(s["gen"]) << " of order " << s["order"] << '\n';
  out << "|E| = " << d["two_torsion"].size() << '\n';
  out << "Cl(K)/E = " << cyclic(orders_of(d["quotient"], nullptr)) << '\n';
  out << "pillars:";
  if (d["pillars"].empty()) out << " none";
  for (const auto& p : d["pillars"]) out << ' ' << p["p"] << " (h=" << p["h"] << ')';
  out << '\n';
  return kOk;
}

int cmd_generators(const Options& o, std::ostream& out, std::ostream& err) {
  const apt::Modulus mod(o.m);
  const std::int64_t bound = o.bound.value_or(100);
  if (bound < 2) throw std::invalid_argument("--bound must be at least 2");
  const apt::BasisBuilder basis(mod, pillar_config(o));
  const CacheOutcome c = obtain_document(basis, bound, resolve_cache_dir(o.cache_dir));
  if (!c.rejected.empty()) err << "cache: recomputed (" << c.rejected << ")\n";
  Json elements = Json::array();
  for (const auto& el : c.document["basis"]) {
    if (el["p"].get<std::int64_t>() <= bound) elements.push_back(el);
  }
  if (o.json) {
    Json r{{"m", o.m}, {"bound", bound}, {"pillars", c.document["pillars"]}, {"basis", elements}, {"special", c.document["special"]}};
    out << canonical(r) << '\n';
    return kOk;
  }
  out << "m = " << o.m << ", bound = " << bound << ", pillars:";
  if (c.document["pillars"].empty()) out << " none";
  for (const auto& p : c.document["pillars"]) out << ' ' << p["p"] << " (h=" << p["h"] << ')';
  out << '\n';
  if (!c.document["special"].is_null()) out << "special = " << triple_text(c.document["special"]) << '\n';
  for (const auto& el : elements) print_element(out, el);
  return kOk;
}

int cmd_beta(const Options& o, std::ostream& out, std::ostream&) {
  const apt::Modulus mod(o.m);
  const apt::BasisBuilder basis(mod, pillar_config(o));
  if (o.positional.size() != 1) throw std::invalid_argument("beta takes exactly one prime");
  const std::int64_t p = std::stoll(o.positional[0]);
  const Json el = element_json(basis.beta(p));
  if (o.json) {
    out << canonical(el) << '\n';
    return kOk;
  }
  print_element(out, el);
  out << "c = " << shape_text(el) << '\n';
  return kOk;
}

Int parse_int(const std::string& s) {
  Int x;
  if (s.empty() || x.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: '" + s + "'");
  return x;
}

apt::Triple parse_triple(const apt::Modulus& mod, const std::vector<std::string>& args) {
  std::vector<std::string> parts;
  for (const auto& a : args) {
    std::stringstream ss(a);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      if (!piece.empty()) parts.push_back(piece);
    }
  }
  if (parts.size() != 3) throw std::invalid_argument("expected a triple a b c or a,b,c");
  return apt::normalize(mod, parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]));
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream&) {
  const apt::Modulus mod(o.m);
  const apt::Triple t = parse_triple(mod, o.positional);
  if (o.bound && *o.bound < 2) throw std::invalid_argument("--bound must be at least 2");
  const apt::BasisBuilder basis(mod, pillar_config(o));
  const apt::Decomposition d = apt::Decomposer(basis).decompose(t, o.bound);
  out << canonical(decomposition_json(mod, t, d)) << '\n';
  return kOk;
}

int cmd_verify_paper(const Options& o, std::ostream& out, std::ostream&) {
  std::optional<std::int64_t> only;
  if (o.m != 0) only = o.m;
  const auto results = run_reference_fixtures(only, resolve_cache_dir(o.cache_dir));
  std::size_t passed = 0;
  Json arr = Json::array();
  for (const auto& r : results) {
    passed += r.pass ? 1 : 0;
    if (o.json) {
      arr.push_back({{"m", r.m}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    } else {
      out << (r.pass ? "PASS " : "FAIL ") << "m=" << r.m << ' ' << r.name;
      if (!r.pass) out << ": " << r.detail;
      out << '\n';
    }
  }
  if (o.json) {
    out << canonical(Json{{"fixtures", arr}, {"passed", passed}, {"total", results.size()}}) << '\n';
  } else {
    out << passed << '/' << results.size() << " fixtures passed\n";
  }
  return passed == results.size() ? kOk : kVerificationFailed;
}

}  // namespace

std::vector<std::int64_t> parse_pillars(const std::vector<std::string>& specs) {
  std::vector<std::int64_t> out;
  for (const auto& spec : specs) {
    std::stringstream ss(spec);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      if (piece.rfind("p=", 0) == 0) piece = piece.substr(2);
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(piece, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (piece.empty() || used != piece.size()) throw std::invalid_argument("bad --pillar value '" + spec + "'");
      out.push_back(v);
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Almost Pythagorean triples: class groups, free bases, decompositions", "aptriples"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub, bool needs_m) {
    auto* mopt = sub->add_option("-m,--m", o.m, "square-free modulus m > 3");
    if (needs_m) mopt->required();
    sub->add_option("--pillar", o.pillars, "pillar primes, e.g. 5,41 or p=2 (repeatable)")
        ->allow_extra_args(false)
        ->expected(1)
        ->take_all();
    sub->add_flag("--primary", o.primary, "primary (prime power) cyclic factors instead of invariant factors");
    sub->add_option("--cache-dir", o.cache_dir, "cache directory");
  };

  auto* classgroup = app.add_subcommand("classgroup", "class group, E, Cl/E and pillars");
  common(classgroup, true);
  classgroup->add_flag("--json", o.json, "machine output");

  auto* generators = app.add_subcommand("generators", "beta(p) for p in L up to the bound");
  common(generators, true);
  generators->add_option("--bound", o.bound, "largest prime (default 100)");
  generators->add_flag("--json", o.json, "machine output");

  auto* beta = app.add_subcommand("beta", "beta(p) for one prime");
  common(beta, true);
  beta->add_option("p", o.positional, "prime in L")->required();
  beta->add_flag("--json", o.json, "machine output");

  auto* decompose = app.add_subcommand("decompose", "coefficients of a triple over the basis (JSON)");
  common(decompose, true);
  decompose->add_option("--bound", o.bound, "largest basis prime to use");
  decompose->add_option("triple", o.positional, "a b c, or a,b,c")->required();
  decompose->add_flag("--json", o.json, "accepted for symmetry; output is always JSON");

  auto* verify = app.add_subcommand("verify-paper", "check the built-in reference fixtures");
  common(verify, false);
  verify->add_flag("--json", o.json, "machine output");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*classgroup) return cmd_classgroup(o, out, err);
    if (*generators) return cmd_generators(o, out, err);
    if (*beta) return cmd_beta(o, out, err);
    if (*decompose) return cmd_decompose(o, out, err);
    if (*verify) return cmd_verify_paper(o, out, err);
  } catch (const apt::InvalidModulus& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const apt::NotASolution& e) {
    err << "error: " << e.what() << '\n';
    return kNotASolution;
  } catch (const apt::VerificationFailure& e) {
    err << "error: verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const apt::DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace aptcli
