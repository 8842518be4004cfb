#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qbruhat/qbruhat.hpp"

using json = nlohmann::ordered_json;
using namespace qbruhat;

namespace {

constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string type = "A2";
  std::string format = "json";
  std::string w = "e", y = "e", z = "e", anchor, along, sign = "+";
  std::string lambda, nu;
  int depth = 6;
  int bound = 3;
  std::vector<std::string> suites;
};

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Weight parse_weight(const std::string& text, int rank) {
  std::vector<int> c;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stoi(part, &used));
      if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw usage_error("cannot parse weight '" + text + "'");
    }
  }
  if (static_cast<int>(c.size()) != rank)
    throw usage_error("weight '" + text + "' needs " + std::to_string(rank) + " coordinates");
  return Weight(c);
}

WeylElem parse_word(const WeylGroup& W, const std::string& text) {
  try {
    return W.parse(text);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

json weight_json(const Weight& w) {
  json a = json::array();
  for (int i = 0; i < w.rank(); ++i) a.push_back(w[i]);
  return a;
}

json header(const std::string& kind, const RunConfig& cfg) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  j["type"] = cfg.type;
  return j;
}

std::string dot_quote(const std::string& s) { return "\"" + s + "\""; }

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw usage_error("format '" + cfg.format + "' is not available for this command");
}

void cmd_weyl(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv", "dot", "text"});
  WeylGroup W(build_cartan(cfg.type));
  std::vector<std::pair<int, int>> covers;
  for (WeylElem y : W.elements())
    for (WeylElem z : W.elements())
      if (W.bruhat_lt(y, z) && W.length(z) == W.length(y) + 1) covers.emplace_back(y.id, z.id);
  if (cfg.format == "json") {
    json j = header("weyl", cfg);
    j["order"] = W.order();
    j["longest"] = W.word_str(W.longest());
    j["theta"] = W.theta();
    json els = json::array();
    for (WeylElem w : W.elements()) els.push_back({{"word", W.word_str(w)}, {"length", W.length(w)}});
    j["elements"] = els;
    j["bruhat_covers"] = covers;
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "word,length,fixed_rank\n";
    for (WeylElem w : W.elements()) std::cout << W.word_str(w) << "," << W.length(w) << "," << W.fixed_rank(w) << "\n";
  } else if (cfg.format == "dot") {
    std::cout << "digraph bruhat {\n  rankdir=BT;\n";
    for (WeylElem w : W.elements()) std::cout << "  n" << w.id << " [label=" << dot_quote(W.word_str(w)) << "];\n";
    for (auto [a, b] : covers) std::cout << "  n" << a << " -> n" << b << ";\n";
    std::cout << "}\n";
  } else {
    std::cout << cfg.type << ": |W| = " << W.order() << ", w0 = " << W.word_str(W.longest()) << "\n";
    for (WeylElem w : W.elements()) std::cout << "  " << W.length(w) << "  " << W.word_str(w) << "\n";
  }
}

void cmd_strata(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv", "dot", "text"});
  WeylGroup W(build_cartan(cfg.type));
  std::optional<WeylElem> anchor;
  if (!cfg.anchor.empty()) anchor = parse_word(W, cfg.anchor);
  DiamondPoset P(W, anchor);
  const auto edges = P.hasse();
  if (cfg.format == "json") {
    json j = header("strata", cfg);
    j["anchor"] = anchor ? json(W.word_str(*anchor)) : json(nullptr);
    json pairs = json::array();
    for (const StratPair& p : P.pairs())
      pairs.push_back({{"y", W.word_str(p.y)}, {"z", W.word_str(p.z)}, {"rank", P.rank(p)}});
    j["pairs"] = pairs;
    j["edges"] = edges;
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "index,y,z,rank\n";
    for (int i = 0; i < P.size(); ++i)
      std::cout << i << "," << W.word_str(P.pair(i).y) << "," << W.word_str(P.pair(i).z) << "," << P.rank(P.pair(i))
                << "\n";
  } else if (cfg.format == "dot") {
    std::cout << "digraph strata {\n  rankdir=TB;\n";
    for (int i = 0; i < P.size(); ++i)
      std::cout << "  p" << i << " [label="
                << dot_quote("(" + W.word_str(P.pair(i).y) + "; " + W.word_str(P.pair(i).z) + ")") << "];\n";
    for (auto [a, b] : edges) std::cout << "  p" << a << " -> p" << b << ";\n";
    std::cout << "}\n";
  } else {
    for (const StratPair& p : P.pairs())
      std::cout << "(" << W.word_str(p.y) << "; " << W.word_str(p.z) << ")  rank " << P.rank(p) << "\n";
  }
}

void cmd_char_sw(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv", "text"});
  if (cfg.depth < 0) throw usage_error("depth must be nonnegative");
  WeylGroup W(build_cartan(cfg.type));
  const WeylElem w = parse_word(W, cfg.w);
  const FormalCharacter ch = char_Sw(W, w, cfg.depth);
  if (cfg.format == "json") {
    json j = header("char_sw", cfg);
    j["w"] = W.word_str(w);
    j["depth"] = cfg.depth;
    json terms = json::array();
    for (const auto& [mu, c] : ch.terms()) terms.push_back({{"weight", weight_json(mu)}, {"coefficient", c}});
    j["terms"] = terms;
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "weight,coefficient\n";
    for (const auto& [mu, c] : ch.terms()) std::cout << "\"" << mu.str() << "\"," << c << "\n";
  } else {
    for (const auto& [mu, c] : ch.terms()) std::cout << c << " e^(" << mu.str() << ")\n";
  }
}

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return Sign::plus;
  if (s == "-" || s == "minus") return Sign::minus;
  throw usage_error("sign must be + or -");
}

void cmd_ideal_demazure(const RunConfig& cfg) {
  require_format(cfg, {"json", "text"});
  RepContext ctx(cfg.type);
  const Weight lambda = parse_weight(cfg.lambda, ctx.datum().rank());
  const WeylElem y = parse_word(ctx.weyl(), cfg.y);
  const Sign sign = parse_sign(cfg.sign);
  RPlus R(ctx);
  auto V = R.V(lambda);
  const GradedSubspace Q = R.q_piece(y, sign, lambda);
  const GradedSubspace D = R.demazure(lambda, y, sign);
  if (cfg.format == "json") {
    json j = header("ideal_demazure", cfg);
    j["lambda"] = weight_json(lambda);
    j["y"] = ctx.weyl().word_str(y);
    j["sign"] = sign == Sign::plus ? "+" : "-";
    j["module_dim"] = V->dim();
    j["demazure_dim"] = D.dim();
    j["piece_dim"] = Q.dim();
    json parts = json::array();
    for (const auto& [mu, sub] : Q.parts) {
      if (sub.dim() == 0) continue;
      json basis = json::array();
      for (int k = 0; k < sub.dim(); ++k) {
        json v = json::array();
        for (const RatFunc& x : sub.vector(k)) v.push_back(x.str());
        basis.push_back(v);
      }
      parts.push_back({{"weight", weight_json(mu)}, {"dim", sub.dim()}, {"basis", basis}});
    }
    j["pieces"] = parts;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Q(" << ctx.weyl().word_str(y) << ")" << cfg.sign << " in V+(" << lambda.str() << "): dim " << Q.dim()
              << " of " << V->dim() << "\n";
    for (const auto& [mu, sub] : Q.parts)
      if (sub.dim() > 0) std::cout << "  weight " << mu.str() << ": " << sub.dim() << "\n";
  }
}

void cmd_ideal_stratum(const RunConfig& cfg) {
  require_format(cfg, {"json", "text"});
  RepContext ctx(cfg.type);
  const WeylGroup& W = ctx.weyl();
  const Weight nu = parse_weight(cfg.nu, ctx.datum().rank());
  if (!nu.is_dominant()) throw usage_error("nu must be dominant");
  const WeylElem y = parse_word(W, cfg.y), z = parse_word(W, cfg.z);
  if (!W.bruhat_leq(y, z)) throw usage_error("need y <= z in the Bruhat order");
  if (cfg.bound < 1) throw usage_error("bound must be at least 1");
  std::optional<WeylElem> along;
  if (!cfg.along.empty()) along = parse_word(W, cfg.along);
  RPlus R(ctx);
  const SaturationResult sat = R.saturate(y, z, nu, cfg.bound, along);
  const ExtremeSets ext = R.extreme_sets(sat.piece, nu);
  json basis_weights = json::array();
  for (const auto& [mu, sub] : sat.piece.parts)
    for (int k = 0; k < sub.dim(); ++k) basis_weights.push_back(weight_json(mu));
  json dm = json::array(), dp = json::array();
  for (const Weight& m : ext.minus) dm.push_back(weight_json(m));
  for (const Weight& m : ext.plus) dp.push_back(weight_json(m));
  if (cfg.format == "json") {
    json j = header("ideal_stratum", cfg);
    j["y"] = W.word_str(y);
    j["z"] = W.word_str(z);
    j["nu"] = weight_json(nu);
    j["bound"] = cfg.bound;
    j["piece_dim"] = sat.piece.dim();
    j["basis_weights"] = basis_weights;
    j["D_minus"] = dm;
    j["D_plus"] = dp;
    j["stabilized"] = sat.stabilized;
    j["dims_by_step"] = sat.dims;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Q(" << W.word_str(y) << "; " << W.word_str(z) << ") in V+(" << nu.str() << "): dim " << sat.piece.dim()
              << (sat.stabilized ? " (stabilized)" : " (not stabilized)") << "\n";
    std::cout << "  D-: " << dm.dump() << "\n  D+: " << dp.dump() << "\n";
  }
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

void cmd_centre_dim(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv", "text"});
  WeylGroup W(build_cartan(cfg.type));
  const NonisomorphismReport scan = nonisomorphism_scan(W);
  if (cfg.format == "json") {
    json j = header("centre_dim", cfg);
    json rows = json::array();
    for (WeylElem w : W.elements()) {
      const CentreData c = centre_of(W, w);
      rows.push_back({{"w", W.word_str(w)}, {"dim", c.dim}, {"generators", c.generators}});
    }
    j["rows"] = rows;
    j["scan_passed"] = scan.passed;
    j["note"] = scan.note;
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "w,dim,generators\n";
    for (WeylElem w : W.elements()) {
      const CentreData c = centre_of(W, w);
      std::cout << W.word_str(w) << "," << c.dim << "," << join(c.generators, " ") << "\n";
    }
  } else {
    for (WeylElem w : W.elements()) {
      const CentreData c = centre_of(W, w);
      std::cout << W.word_str(w) << ": " << c.dim << "  {" << join(c.generators, ", ") << "}\n";
    }
    if (!scan.note.empty()) std::cout << "note: " << scan.note << "\n";
  }
}

int cmd_verify(const RunConfig& cfg) {
  require_format(cfg, {"json", "text"});
  const auto suites = verify_suites();
  if (cfg.suites.empty() || (cfg.suites.size() == 1 && cfg.suites[0].empty())) {
    for (const auto& s : suites) std::cout << s.name << "  " << s.description << "\n";
    return 0;
  }
  std::vector<SuiteReport> reports;
  for (const auto& name : cfg.suites) {
    bool known = false;
    for (const auto& s : suites) known = known || s.name == name;
    if (!known) throw usage_error("unknown suite '" + name + "'");
    reports.push_back(run_suite(name));
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (cfg.format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "verify";
    json arr = json::array();
    for (const auto& r : reports) {
      json checks = json::array();
      for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"anchor", c.anchor}, {"passed", c.passed}, {"detail", c.detail}});
      arr.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}});
    }
    j["suites"] = arr;
    j["passed"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      for (const auto& c : r.checks)
        std::cout << (c.passed ? "PASS " : "FAIL ") << r.suite << " / " << c.name << "  [" << c.anchor << "]"
                  << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
      std::cout << r.suite << ": " << (r.passed() ? "passed" : "FAILED") << "\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat cell strata of quantized coordinate rings"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::vector<std::string> formats = {"json", "csv", "dot", "text"};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Cartan type label, e.g. A2, B2, A1xA1");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
  };

  auto* weyl = app.add_subcommand("weyl", "Weyl group elements and Bruhat covers");
  common(weyl);

  auto* strata = app.add_subcommand("strata", "Stratum poset W<>W");
  strata->require_subcommand(1);
  auto* strata_build = strata->add_subcommand("build", "Build the pair poset and its Hasse diagram");
  common(strata_build);
  strata_build->add_option("--anchor", cfg.anchor, "Restrict to pairs y <= anchor <= z");

  auto* chr = app.add_subcommand("char", "Characters");
  chr->require_subcommand(1);
  auto* sw = chr->add_subcommand("sw", "Truncated character of S^w");
  common(sw);
  sw->add_option("--w", cfg.w, "Weyl word");
  sw->add_option("--depth", cfg.depth, "Truncation depth");

  auto* ideal = app.add_subcommand("ideal", "Graded ideals of R+");
  ideal->require_subcommand(1);
  auto* dem = ideal->add_subcommand("demazure", "Q(y)+- piece in V+(lambda)");
  common(dem);
  dem->add_option("--lambda", cfg.lambda, "Dominant weight, e.g. 1,0")->required();
  dem->add_option("--y", cfg.y, "Weyl word");
  dem->add_option("--sign", cfg.sign, "+ or -");
  auto* strat = ideal->add_subcommand("stratum", "Saturated ideal Q(y,z) piece and its extreme sets");
  common(strat);
  strat->add_option("--y", cfg.y, "Weyl word y");
  strat->add_option("--z", cfg.z, "Weyl word z");
  strat->add_option("--nu", cfg.nu, "Dominant weight, e.g. 0,1")->required();
  strat->add_option("--bound", cfg.bound, "Saturation search bound");
  strat->add_option("--along", cfg.along, "Saturate along c_w for this w (default z)");

  auto* centre = app.add_subcommand("centre", "Centres of the zero-weight rings");
  centre->require_subcommand(1);
  auto* cdim = centre->add_subcommand("dim", "Centre dimension and generators for every w");
  common(cdim);

  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("--suite", cfg.suites, "Suite names; omit to list suites");
  verify->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (weyl->parsed()) cmd_weyl(cfg);
    else if (strata_build->parsed()) cmd_strata(cfg);
    else if (sw->parsed()) cmd_char_sw(cfg);
    else if (dem->parsed()) cmd_ideal_demazure(cfg);
    else if (strat->parsed()) cmd_ideal_stratum(cfg);
    else if (cdim->parsed()) cmd_centre_dim(cfg);
    else if (verify->parsed()) {
      if (verify->count("--format") == 0) cfg.format = "text";
      return cmd_verify(cfg);
    }
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const invariant_violation& e) {
    std::cerr << "invariant violated [" << e.anchor() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
