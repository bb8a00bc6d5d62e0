#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pvcastle/dsl.hpp"
#include "pvcastle/modular.hpp"
#include "pvcastle/pv.hpp"
#include "pvcastle/version.hpp"
#include "report.hpp"

namespace {

using namespace pvcastle;
using cli::Json;

// Exit codes are a stable contract: 0 success/affirmative, 2 usage or parse
// error, 3 not a solution, 4 verification negative, 5 unsupported input.
enum ExitCode {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kNotASolution = 3,
  kNegative = 4,
  kUnsupported = 5,
};

struct CommonOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 32;
  long bound = 5;
  std::uint64_t prime = kDefaultPrime;

  SearchParams search() const {
    SearchParams p;
    p.seed = seed;
    p.trials = trials;
    p.coeff_bound = bound;
    p.prescreen_prime = prime;
    return p;
  }
};

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

int cmd_residual(const std::string& text, const CommonOptions& opts) {
  Solution s = parse_solution(text);
  Int r = residual(s);
  Json report = cli::make_report("residual", render(s), opts.seed);
  report["results"]["residual"] = r.get_str();
  report["results"]["is_solution"] = is_zero(r);
  emit(report);
  return is_zero(r) ? kOk : kNotASolution;
}

struct EnumerateOptions {
  long a = 2;
  std::uint64_t max_part = 200;
  std::size_t max_k = 3;
  bool essential_only = false;
  bool exclude_repetition = false;
  std::string format = "json";
};

int cmd_enumerate(const EnumerateOptions& eo, const CommonOptions& opts) {
  std::vector<Solution> sols =
      enumerate_solutions(Int(eo.a), Int(static_cast<unsigned long>(eo.max_part)),
                          eo.max_k);
  if (eo.essential_only)
    std::erase_if(sols, [](const Solution& s) { return !is_essential(s); });
  if (eo.exclude_repetition) sols = repetition_filter(std::move(sols), Int(eo.a));

  if (eo.format == "csv") {
    std::cout << "solution,k,residual,essential\n";
    for (const Solution& s : sols)
      std::cout << '"' << render(s) << "\"," << s.k() << ','
                << residual(s).get_str() << ','
                << (is_essential(s) ? "true" : "false") << '\n';
    return kOk;
  }

  std::ostringstream input;
  input << "a=" << eo.a << " max_part=" << eo.max_part << " max_k=" << eo.max_k;
  Json report = cli::make_report("enumerate", input.str(), opts.seed);
  report["results"]["a"] = eo.a;
  report["results"]["max_part"] = eo.max_part;
  report["results"]["max_k"] = eo.max_k;
  report["results"]["essential_only"] = eo.essential_only;
  report["results"]["exclude_repetition"] = eo.exclude_repetition;
  report["results"]["count"] = sols.size();
  Json arr = Json::array();
  for (const Solution& s : sols) arr.push_back(cli::solution_json(s));
  report["results"]["solutions"] = std::move(arr);
  emit(report);
  return kOk;
}

int cmd_descend(const std::string& text, const CommonOptions& opts) {
  Solution s = parse_solution(text);
  Descent d = descend(s);
  Json report = cli::make_report("descend", render(s), opts.seed);
  report["results"]["base"] = render(d.base);
  report["results"]["sc_steps"] = d.sc_steps;
  Json path = Json::array();
  for (const PathStep& step : d.forward_path) {
    Json j;
    if (step.add_one) {
      j["op"] = "add1";
    } else {
      j["op"] = "sc";
      j["position"] = step.position;
    }
    path.push_back(std::move(j));
  }
  report["results"]["forward_path"] = std::move(path);
  report["results"]["replay_ok"] = replay(d.base, d.forward_path) == s;
  emit(report);
  return kOk;
}

struct VerifyOptions {
  std::string text;
  std::size_t max_dim = 2048;
};

int cmd_verify(const VerifyOptions& vo, const CommonOptions& opts) {
  const std::size_t first = vo.text.find_first_not_of(" \t\r\n");
  const bool is_solution_input =
      first != std::string::npos && vo.text[first] == '(';

  PvCheckResult res;
  std::string canonical;
  Triplet triplet;
  if (is_solution_input) {
    Solution s = parse_solution(vo.text);
    Int space = 2 * s.a;
    for (const Int& m : s.parts) space *= m;
    if (space > Int(static_cast<unsigned long>(vo.max_dim)))
      throw UnsupportedRep("space dimension " + space.get_str() +
                           " exceeds --max-dim " + std::to_string(vo.max_dim) +
                           "; certification is desk-scale only");
    triplet = tensor_triplet(s);
    canonical = render(s);
    res = is_pv_type_ifps(triplet, s, opts.search());
  } else {
    triplet = parse_triplet(vo.text);
    if (triplet.space_dim() > vo.max_dim)
      throw UnsupportedRep("space dimension " +
                           std::to_string(triplet.space_dim()) +
                           " exceeds --max-dim " + std::to_string(vo.max_dim) +
                           "; certification is desk-scale only");
    canonical = render(triplet);
    res = is_pv_type_ifps(triplet, opts.search());
  }

  Json report = cli::make_report("verify", canonical, opts.seed);
  report["results"]["triplet"] = render(triplet);
  report["results"]["algebra_dim"] = triplet.algebra().dim();
  report["results"]["space_dim"] = triplet.space_dim();
  report["results"]["dims_match"] = res.dims_match;
  report["results"]["is_pv_type_ifps"] = res.is_pv_type_ifps;
  report["results"]["certificate"] = cli::certificate_json(res.certificate);
  emit(report);
  return res.is_pv_type_ifps ? kOk : kNegative;
}

struct CastleCheckOptions {
  std::string text;
  std::size_t n = 1;
};

int cmd_castle_check(const CastleCheckOptions& co, const CommonOptions& opts) {
  Triplet t = parse_triplet(co.text);
  if (co.n < 1 || co.n >= t.space_dim()) {
    std::cerr << "pvcastle: castle-check requires 1 <= n < m (m = "
              << t.space_dim() << ")\n";
    return kUsage;
  }
  CastlingReport rep = castling_check(t.rep, co.n, opts.search());
  Json report = cli::make_report("castle-check", render(t), opts.seed);
  report["results"] = cli::castling_json(rep);
  emit(report);
  const bool ok = rep.side1_generic && rep.side2_generic &&
                  rep.side1_isotropy_dim == rep.side2_isotropy_dim;
  return ok ? kOk : kNegative;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Exact castling-tree and prehomogeneous-vector-space toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CommonOptions common;
  try {
    cli::Defaults defaults = cli::load_defaults_from_env();
    common.trials = defaults.trials;
    common.bound = defaults.bound;
    common.prime = defaults.prime;
  } catch (const Error& e) {
    std::cerr << "pvcastle: " << e.what() << "\n";
    return kUsage;
  }

  app.add_option("--seed", common.seed, "RNG seed for witness search")
      ->capture_default_str();
  app.add_option("--trials", common.trials, "witness search budget")
      ->capture_default_str();
  app.add_option("--bound", common.bound, "witness coefficient bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--prime", common.prime, "modular pre-screen prime")
      ->capture_default_str();

  std::string residual_text;
  auto* residual_cmd =
      app.add_subcommand("residual", "evaluate the dimension-balance residual");
  residual_cmd->fallthrough();
  residual_cmd->add_option("solution", residual_text, "solution text, e.g. \"(2; 3)\"")
      ->required();

  EnumerateOptions eo;
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "expand the castling tree within bounds");
  enumerate_cmd->fallthrough();
  enumerate_cmd->add_option("a", eo.a, "base parameter")
      ->required()
      ->check(CLI::IsMember({2, 3, 5}));
  enumerate_cmd->add_option("--max-part", eo.max_part, "largest allowed part")
      ->capture_default_str();
  enumerate_cmd->add_option("--max-k", eo.max_k, "largest allowed k")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  enumerate_cmd->add_flag("--essential-only", eo.essential_only,
                          "drop solutions containing a part equal to 1");
  enumerate_cmd->add_flag("--exclude-repetition", eo.exclude_repetition,
                          "apply the a=3 repetition filter (m_i != 2)");
  enumerate_cmd->add_option("--format", eo.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::string descend_text;
  auto* descend_cmd =
      app.add_subcommand("descend", "reduce a solution to its base");
  descend_cmd->fallthrough();
  descend_cmd->add_option("solution", descend_text, "solution text")->required();

  VerifyOptions vo;
  auto* verify_cmd = app.add_subcommand(
      "verify", "certify the PV-of-type-IFPS property of a solution or triplet");
  verify_cmd->fallthrough();
  verify_cmd->add_option("input", vo.text, "solution or triplet text")->required();
  verify_cmd->add_option("--max-dim", vo.max_dim, "largest certifiable space dim")
      ->capture_default_str();

  CastleCheckOptions co;
  auto* castle_cmd = app.add_subcommand(
      "castle-check", "cross-check both sides of a c-transformation");
  castle_cmd->fallthrough();
  castle_cmd->add_option("triplet", co.text, "triplet text for f on V(m)")
      ->required();
  castle_cmd->add_option("-n,--n", co.n, "tensor factor size, 1 <= n < m")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (!is_prime_u64(common.prime)) {
    std::cerr << "pvcastle: --prime must be prime\n";
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kInternal;
  std::string name;
  try {
    if (residual_cmd->parsed()) {
      name = "residual";
      code = cmd_residual(residual_text, common);
    } else if (enumerate_cmd->parsed()) {
      name = "enumerate";
      code = cmd_enumerate(eo, common);
    } else if (descend_cmd->parsed()) {
      name = "descend";
      code = cmd_descend(descend_text, common);
    } else if (verify_cmd->parsed()) {
      name = "verify";
      code = cmd_verify(vo, common);
    } else if (castle_cmd->parsed()) {
      name = "castle-check";
      code = cmd_castle_check(co, common);
    }
  } catch (const ParseError& e) {
    std::cerr << "pvcastle: parse error: " << e.what() << " (bytes "
              << e.span.start << ".." << e.span.end << ")\n";
    return kUsage;
  } catch (const ValueError& e) {
    std::cerr << "pvcastle: invalid value: " << e.what() << "\n";
    return kUsage;
  } catch (const ArityMismatch& e) {
    std::cerr << "pvcastle: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedA& e) {
    std::cerr << "pvcastle: unsupported input: " << e.what() << "\n";
    return kUnsupported;
  } catch (const UnsupportedRep& e) {
    std::cerr << "pvcastle: unsupported input: " << e.what() << "\n";
    return kUnsupported;
  } catch (const NotASolution& e) {
    std::cerr << "pvcastle: " << e.what() << "\n";
    return kNotASolution;
  } catch (const Error& e) {
    std::cerr << "pvcastle: error: " << e.what() << "\n";
    return kInternal;
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  // timings stay off stdout so reports are byte-identical for equal seeds
  std::cerr << "pvcastle: " << name << " finished in " << elapsed.count()
            << " ms\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) { return dispatch(argc, argv); }
