#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "wright/errors.hpp"
#include "wright/grading.hpp"
#include "wright/integrality.hpp"
#include "wright/linear_map.hpp"
#include "wright/poly_io.hpp"
#include "wright/search.hpp"
#include "wright/surface.hpp"
#include "wright/wright_algebra.hpp"

namespace wright::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> kConfigKeys{"m",     "alphas",     "alpha",  "bound",
                                           "dmax",  "cmax",       "coeffs", "max_degree",
                                           "threads", "output",   "checkpoint"};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw ParseError("empty list: '" + text + "'");
  return out;
}

long parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError("invalid integer for " + what + ": '" + text + "'");
  }
}

unsigned parse_positive(const std::string& text, const std::string& what) {
  const long v = parse_int(text, what);
  if (v < 1) throw InvalidArgument(what + " must be positive");
  return static_cast<unsigned>(v);
}

std::string class_text(const HirzebruchClass& c) {
  std::string out;
  auto term = [&out](std::int64_t k, const std::string& name) {
    if (k == 0) return;
    if (out.empty()) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    const auto mag = k < 0 ? -k : k;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += name;
  };
  term(c.a, "C0");
  term(c.b, "F");
  return out.empty() ? "0" : out;
}

// A value that may come from a flag, the config file, or a default.
struct Setting {
  std::string key;
  std::string value;
  CLI::Option* option = nullptr;

  std::optional<std::string> resolve(const Config& cfg) const {
    if (option != nullptr && option->count() > 0) return value;
    return cfg.get(key);
  }
};

class Session {
 public:
  Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  Setting& setting(CLI::App* app, const std::string& flag, const std::string& key,
                   const std::string& help) {
    settings_.push_back(std::make_unique<Setting>());
    Setting& s = *settings_.back();
    s.key = key;
    s.option = app->add_option(flag, s.value, help);
    return s;
  }

  std::string require(const Setting& s, const std::string& fallback = {}) const {
    if (auto v = s.resolve(config_)) return *v;
    if (!fallback.empty()) return fallback;
    throw ParseError("missing value for --" + s.key);
  }

  WrightAlgebra algebra(const Setting& m, const Setting& alphas) const {
    const long mv = parse_int(require(m), "m");
    return WrightAlgebra(static_cast<int>(mv), parse_rational_list(require(alphas)));
  }

  void emit(const json& j, const std::string& text) {
    if (json_) {
      out_ << j.dump() << '\n';
    } else {
      out_ << text << '\n';
    }
  }

  int cmd_member();
  int cmd_express();
  int cmd_decompose();
  int cmd_factor_neg();
  int cmd_regularize();
  int cmd_jacobian();
  int cmd_search();
  int cmd_verify_lemma();
  int cmd_cert();
  int cmd_surface(CLI::App* which);

  std::ostream& out_;
  std::ostream& err_;
  bool json_ = false;
  Config config_;
  std::vector<std::unique_ptr<Setting>> settings_;

  // Positional inputs and subcommand settings.
  std::string poly_;
  std::string poly2_;
  Setting* m_ = nullptr;
  Setting* alphas_ = nullptr;
  Setting* alpha_ = nullptr;
  Setting* bound_ = nullptr;
  Setting* wx_ = nullptr;
  Setting* wy_ = nullptr;
  Setting* coeffs_ = nullptr;
  Setting* threads_ = nullptr;
  Setting* checkpoint_ = nullptr;
  std::string resume_;
  Setting* max_degree_ = nullptr;
  Setting* h_ = nullptr;
  Setting* p_ = nullptr;
  Setting* q_ = nullptr;
  Setting* dmax_ = nullptr;
  Setting* cmax_ = nullptr;
  long n_ = 0, s2_ = 0, a1_ = 0, b1_ = 0, a2_ = 0, b2_ = 0;
};

int Session::cmd_member() {
  const WrightAlgebra w = algebra(*m_, *alphas_);
  const LaurentPoly p = parse_poly(poly_);
  const bool member = is_member(w, p);
  LaurentPoly witness;
  if (!member) {
    if (p.is_polynomial()) {
      witness = chart_obstruction(w, p);
    } else {
      for (const auto& [e, c] : p.terms()) {
        if (e.x < 0) witness.add_term(e, c);
      }
    }
  }
  json j{{"command", "member"}, {"member", member}};
  std::string text = member ? "true" : "false";
  if (!member) {
    // In chart coordinates, written with x = x' and y = y'.
    j["chart_witness"] = format_poly(witness);
    text += "\nwitness (x', y' chart): " + format_poly(witness);
  }
  emit(j, text);
  return kSuccess;
}

int Session::cmd_express() {
  const WrightAlgebra w = algebra(*m_, *alphas_);
  const LaurentPoly p = parse_poly(poly_);
  const unsigned bound =
      bound_->resolve(config_)
          ? static_cast<unsigned>(parse_int(*bound_->resolve(config_), "bound"))
          : default_expression_bound(p);
  const auto expr = express_in_generators(w, p, bound);
  if (!expr) {
    emit({{"command", "express"}, {"result", "NotFound"}, {"bound", bound}},
         "NotFound (no representation with T-degree <= " + std::to_string(bound) + ")");
    return kInconclusive;
  }
  const std::string text = format_symbolic(*expr, t_symbol_names(w.generator_count()));
  emit({{"command", "express"}, {"result", "found"}, {"bound", bound}, {"expression", text}},
       text);
  return kSuccess;
}

int Session::cmd_decompose() {
  const WeightVector w(parse_int(require(*wx_, "-1"), "wx"), parse_int(require(*wy_, "2"), "wy"));
  const auto parts = weighted_components(parse_poly(poly_), w);
  json comps = json::object();
  std::string text;
  for (const auto& [d, c] : parts) {
    comps[std::to_string(d)] = format_poly(c);
    if (!text.empty()) text += '\n';
    text += std::to_string(d) + ": " + format_poly(c);
  }
  emit({{"command", "decompose"}, {"weights", {w.wx(), w.wy()}}, {"components", comps}},
       text.empty() ? "(zero polynomial)" : text);
  return kSuccess;
}

int Session::cmd_factor_neg() {
  const CanonicalIndex3Algebra c(parse_rational(require(*alpha_)));
  const auto f = negative_degree_factor(c, parse_poly(poly_));
  emit({{"command", "factor-neg"}, {"m", f.m}, {"g", format_poly(f.g, kZ)}},
       "m = " + std::to_string(f.m) + "\ng = " + format_poly(f.g, kZ));
  return kSuccess;
}

int Session::cmd_regularize() {
  const LaurentPoly p = parse_poly(poly_);
  const LinearMap map = regularizing_transform(p);
  const LaurentPoly r = linear_substitute(p, map);
  const json entries{{"a", to_string(map.a())},
                     {"b", to_string(map.b())},
                     {"c", to_string(map.c())},
                     {"d", to_string(map.d())}};
  emit({{"command", "regularize"}, {"map", entries}, {"transformed", format_poly(r, kVW)}},
       "x = " + format_poly(LaurentPoly::monomial(map.a(), 1, 0) +
                                LaurentPoly::monomial(map.b(), 0, 1),
                            kVW) +
           "\ny = " +
           format_poly(LaurentPoly::monomial(map.c(), 1, 0) + LaurentPoly::monomial(map.d(), 0, 1),
                       kVW) +
           "\nresult: " + format_poly(r, kVW));
  return kSuccess;
}

int Session::cmd_jacobian() {
  const auto check = etale_pair_check(parse_poly(poly_), parse_poly(poly2_));
  const std::string flag = check.constant_nonzero ? "true" : "false";
  emit({{"command", "jacobian"},
        {"jacobian", format_poly(check.jacobian)},
        {"constant_nonzero", check.constant_nonzero}},
       format_poly(check.jacobian) + "\nconstant_nonzero=" + flag);
  return kSuccess;
}

int Session::cmd_search() {
  const WrightAlgebra w = algebra(*m_, *alphas_);
  const SearchSpace space(w, parse_positive(require(*bound_), "bound"),
                          parse_rational_list(require(*coeffs_)));
  SearchOptions options;
  options.threads = parse_positive(require(*threads_, "1"), "threads");
  if (!resume_.empty()) {
    options.checkpoint = resume_;
  } else if (auto cp = checkpoint_->resolve(config_)) {
    options.checkpoint = *cp;
  }
  const auto names = t_symbol_names(w.generator_count());
  options.on_candidate = [&](const EtaleCandidate& c) {
    auto j = candidate_to_json(c, w.generator_count());
    emit(j, "candidate: p = " + j["p"].get<std::string>() + " | q = " +
                j["q"].get<std::string>() + " | J = " + j["jacobian"].get<std::string>());
  };
  const SearchReport report = search_etale_pairs(space, options);

  json violations = json::array();
  for (const auto& v : report.filter_violations) violations.push_back(format_symbolic(v, names));
  json summary{{"command", "search"},
               {"space", space.describe()},
               {"expressions", report.expression_count},
               {"members_enumerated", report.members_enumerated},
               {"candidates", report.candidates.size()},
               {"complete", report.complete},
               {"regularity_screen", report.filter_applied},
               {"screen_violations", violations},
               {"counterexample", report.counterexample}};
  std::string text = "searched " + std::to_string(report.members_enumerated) + " of " +
                     std::to_string(report.expression_count) + " expressions; " +
                     std::to_string(report.candidates.size()) + " constant-Jacobian pairs";
  if (report.filter_applied) {
    text += "\nregularity screen: " + std::to_string(report.filter_violations.size()) +
            " members regular in both variables";
  }
  if (!report.complete) text += "\nincomplete: resume from the checkpoint to continue";
  emit(summary, text);
  if (report.counterexample) {
    err_ << "!!! constant-Jacobian pair found in C[y, xy, x^2y, x^3y + a*x]: this would be a "
            "counterexample to the open case of Wright's conjecture. Re-verify it. !!!\n";
  }
  if (!report.filter_violations.empty()) {
    err_ << "!!! members regular in both variables were found; this contradicts the "
            "non-regularity of the index-3 algebra. !!!\n";
  }
  return kSuccess;
}

int Session::cmd_verify_lemma() {
  const CanonicalIndex3Algebra c(parse_rational(require(*alpha_)));
  const LemmaReport report =
      verify_no_regular_elements(c, parse_positive(require(*max_degree_), "max-degree"));
  json levels = json::array();
  std::string text;
  for (const auto& level : report.levels) {
    const bool found = level.regular_element_found();
    levels.push_back({{"bound", level.bound},
                      {"products", level.products},
                      {"dimension", level.dimension},
                      {"verdict", found ? "found" : "none found"}});
    text += "degree <= " + std::to_string(level.bound) + ": products " +
            std::to_string(level.products) + ", dimension " + std::to_string(level.dimension) +
            ", " + (found ? "regular element found" : "none found") + "\n";
  }
  const std::string verdict = report.none_found() ? "none found" : "found";
  json j{{"command", "verify-lemma"},
         {"alpha", to_string(report.alpha)},
         {"max_degree", report.max_degree},
         {"levels", levels},
         {"verdict", verdict}};
  text += "verdict: " + verdict;
  if (report.witness) {
    j["witness"] = format_poly(*report.witness);
    text += "\nwitness: " + format_poly(*report.witness);
  }
  emit(j, text);
  return kSuccess;
}

int Session::cmd_cert() {
  const LaurentPoly h = parse_poly(require(*h_));
  const LaurentPoly p = parse_poly(require(*p_));
  const LaurentPoly q = parse_poly(require(*q_));
  const auto cert = integrality_certificate(h, p, q, parse_positive(require(*dmax_), "dmax"),
                                            static_cast<unsigned>(parse_int(require(*cmax_), "cmax")));
  if (!cert) {
    emit({{"command", "cert"}, {"result", "NoneFound"}},
         "NoneFound (inconclusive: no relation within the given bounds)");
    return kInconclusive;
  }
  json coeffs = json::array();
  std::string text = "d = " + std::to_string(cert->d);
  for (unsigned i = 0; i < cert->d; ++i) {
    const std::string a = format_symbolic(cert->coefficients[i], pq_symbol_names());
    coeffs.push_back(a);
    text += "\na" + std::to_string(i + 1) + " = " + a;
  }
  emit({{"command", "cert"}, {"result", "found"}, {"d", cert->d}, {"coefficients", coeffs}},
       text);
  return kSuccess;
}

int Session::cmd_surface(CLI::App* which) {
  const std::string name = which->get_name();
  if (name == "intersect") {
    const auto v = intersect({n_, a1_, b1_}, {n_, a2_, b2_});
    emit({{"command", "surface intersect"}, {"value", v}}, std::to_string(v));
  } else if (name == "canonical") {
    const auto k = canonical_class(n_);
    emit({{"command", "surface canonical"}, {"class", k}}, class_text(k));
  } else if (name == "section") {
    const auto s = section_class(SectionData(n_, s2_));
    emit({{"command", "surface section"}, {"class", s}}, class_text(s));
  } else if (name == "restrict") {
    const auto v = restrict_to_complement(SectionData(n_, s2_), {n_, a1_, b1_});
    emit({{"command", "surface restrict"}, {"value", v}}, std::to_string(v));
  } else {
    const auto r = dg_index_report();
    emit({{"command", "dg-index"},
          {"index", r.index},
          {"admissible_n", r.admissible_n},
          {"excluded_s2", r.excluded_s2},
          {"exclusion_holds", r.exclusion_holds},
          {"n_max", r.n_max},
          {"generator_count", r.generator_count}},
         std::to_string(r.index));
  }
  return kSuccess;
}

int Session::run(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations for Wright algebras, the index-3 algebra and "
               "Hirzebruch surfaces"};
  app.require_subcommand(1);
  std::string config_path;
  bool json_flag = false;
  app.add_flag("--json", json_flag, "emit JSON lines");
  app.add_option("--config", config_path, "flat key=value config file");

  using AlgebraSettings = std::pair<Setting*, Setting*>;
  auto add_algebra = [this](CLI::App* sub) {
    return AlgebraSettings{&setting(sub, "--m", "m", "Wright algebra parameter m"),
                           &setting(sub, "--alphas", "alphas", "comma-separated a1,...,a_{m-1}")};
  };
  auto use_algebra = [this](const AlgebraSettings& s) {
    m_ = s.first;
    alphas_ = s.second;
  };

  auto* member = app.add_subcommand("member", "membership in C[t0..tm]");
  const auto member_algebra = add_algebra(member);
  member->add_option("poly", poly_)->required();

  auto* express = app.add_subcommand("express", "write a polynomial in the generators");
  const auto express_algebra = add_algebra(express);
  Setting* express_bound = &setting(express, "--bound", "bound", "T-degree bound");
  express->add_option("poly", poly_)->required();

  auto* decompose = app.add_subcommand("decompose", "weighted homogeneous components");
  wx_ = &setting(decompose, "--wx", "wx", "weight of x (default -1)");
  wy_ = &setting(decompose, "--wy", "wy", "weight of y (default 2)");
  decompose->add_option("poly", poly_)->required();

  auto* factor = app.add_subcommand("factor-neg", "factor a negative-degree homogeneous element");
  Setting* factor_alpha = &setting(factor, "--alpha", "alpha", "nonzero alpha");
  factor->add_option("poly", poly_)->required();

  auto* regularize = app.add_subcommand("regularize", "find a regularizing linear map");
  regularize->add_option("poly", poly_)->required();

  auto* jacobian = app.add_subcommand("jacobian", "Jacobian determinant of a pair");
  jacobian->add_option("p", poly_)->required();
  jacobian->add_option("q", poly2_)->required();

  auto* search = app.add_subcommand("search", "bounded constant-Jacobian pair search");
  CLI::App* search_app = search;
  const auto search_algebra = add_algebra(search);
  Setting* search_bound = &setting(search_app, "--bound", "bound", "T-degree bound");
  coeffs_ = &setting(search_app, "--coeffs", "coeffs", "coefficient set, must contain 0");
  threads_ = &setting(search_app, "--threads", "threads", "worker threads");
  checkpoint_ = &setting(search_app, "--checkpoint", "checkpoint", "progress file");
  search->add_option("--resume", resume_, "resume from (and keep updating) this checkpoint");

  auto* lemma = app.add_subcommand("verify-lemma", "check for elements regular in x and y");
  Setting* lemma_alpha = &setting(lemma, "--alpha", "alpha", "nonzero alpha");
  max_degree_ = &setting(lemma, "--max-degree", "max_degree", "largest total degree");

  auto* cert = app.add_subcommand("cert", "integrality certificate over C[p, q]");
  cert->set_help_flag("--help", "print this help message and exit");  // frees --h
  h_ = &setting(cert, "--h", "h", "element to certify");
  p_ = &setting(cert, "--p", "p", "first generator of A");
  q_ = &setting(cert, "--q", "q", "second generator of A");
  dmax_ = &setting(cert, "--dmax", "dmax", "largest relation degree");
  cmax_ = &setting(cert, "--cmax", "cmax", "largest coefficient degree in P, Q");

  auto* surface = app.add_subcommand("surface", "Hirzebruch surface arithmetic");
  surface->require_subcommand(1);
  auto* s_int = surface->add_subcommand("intersect", "intersection number");
  s_int->add_option("--n", n_)->required();
  s_int->add_option("--a1", a1_)->required();
  s_int->add_option("--b1", b1_)->required();
  s_int->add_option("--a2", a2_)->required();
  s_int->add_option("--b2", b2_)->required();
  auto* s_can = surface->add_subcommand("canonical", "canonical class of F_n");
  s_can->add_option("--n", n_)->required();
  auto* s_sec = surface->add_subcommand("section", "class of an ample section");
  s_sec->add_option("--n", n_)->required();
  s_sec->add_option("--s2", s2_)->required();
  auto* s_res = surface->add_subcommand("restrict", "restriction to F_n minus S");
  s_res->add_option("--n", n_)->required();
  s_res->add_option("--s2", s2_)->required();
  s_res->add_option("--a", a1_)->required();
  s_res->add_option("--b", b1_)->required();
  auto* s_dg = surface->add_subcommand("dg-index", "index forced by the generator condition");
  auto* dg = app.add_subcommand("dg-index", "index forced by the generator condition");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (!config_path.empty()) {
      config_ = load_config(config_path);
    } else if (const char* env = std::getenv(kConfigEnv); env != nullptr && *env != '\0') {
      config_ = load_config(env);
    }
    json_ = json_flag || config_.get("output").value_or("text") == "json";

    if (member->parsed()) {
      use_algebra(member_algebra);
      return cmd_member();
    }
    if (express->parsed()) {
      use_algebra(express_algebra);
      bound_ = express_bound;
      return cmd_express();
    }
    if (decompose->parsed()) return cmd_decompose();
    if (factor->parsed()) {
      alpha_ = factor_alpha;
      return cmd_factor_neg();
    }
    if (regularize->parsed()) return cmd_regularize();
    if (jacobian->parsed()) return cmd_jacobian();
    if (search->parsed()) {
      use_algebra(search_algebra);
      bound_ = search_bound;
      return cmd_search();
    }
    if (lemma->parsed()) {
      alpha_ = lemma_alpha;
      return cmd_verify_lemma();
    }
    if (cert->parsed()) return cmd_cert();
    if (dg->parsed()) return cmd_surface(s_dg);
    for (auto* sub : {s_int, s_can, s_sec, s_res, s_dg}) {
      if (sub->parsed()) return cmd_surface(sub);
    }
    return kUsage;
  } catch (const ParseError& e) {
    err_ << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err_ << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidAlgebra& e) {
    err_ << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const MathError& e) {
    emit({{"error", e.name()}, {"message", e.what()}}, e.name());
    err_ << "error: " << e.what() << '\n';
    return kMathError;
  } catch (const std::exception& e) {
    err_ << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace

std::optional<std::string> Config::get(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) return std::nullopt;
  return it->second;
}

Config parse_config(std::string_view text) {
  Config cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config line " + std::to_string(number) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string value = trim(std::string_view(t).substr(eq + 1));
    if (std::find(kConfigKeys.begin(), kConfigKeys.end(), key) == kConfigKeys.end()) {
      throw ParseError("config line " + std::to_string(number) + ": unknown key '" + key + "'");
    }
    cfg.values[key] = value;
  }
  if (auto out = cfg.get("output"); out && *out != "text" && *out != "json") {
    throw ParseError("config: output must be text or json");
  }
  return cfg;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session session(out, err);
  return session.run(args);
}

}  // namespace wright::cli
