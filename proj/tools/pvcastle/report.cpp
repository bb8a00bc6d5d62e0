#include "report.hpp"

#include <cstdlib>
#include <fstream>

#include "pvcastle/dsl.hpp"
#include "pvcastle/modular.hpp"
#include "pvcastle/version.hpp"

namespace pvcastle::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

Defaults load_defaults_from_env() {
  Defaults d;
  const char* path = std::getenv("PVCASTLE_CONFIG");
  if (path == nullptr || *path == '\0') return d;
  std::ifstream in(path);
  if (!in) throw ValueError(std::string("cannot read config file: ") + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ValueError("config line " + std::to_string(lineno) +
                       ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty() ||
        value.find_first_not_of("0123456789") != std::string::npos)
      throw ValueError("config line " + std::to_string(lineno) +
                       ": value for '" + key + "' must be a non-negative integer");
    try {
      if (key == "trials") {
        d.trials = std::stoull(value);
      } else if (key == "bound") {
        d.bound = std::stol(value);
        if (d.bound < 1) throw ValueError("bound must be positive");
      } else if (key == "prime") {
        d.prime = std::stoull(value);
        if (!is_prime_u64(d.prime))
          throw ValueError("config prime is not prime: " + value);
      } else {
        throw ValueError("config line " + std::to_string(lineno) +
                         ": unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw ValueError("config line " + std::to_string(lineno) +
                       ": bad value for '" + key + "'");
    } catch (const std::out_of_range&) {
      throw ValueError("config line " + std::to_string(lineno) +
                       ": value out of range for '" + key + "'");
    }
  }
  return d;
}

Json make_report(const std::string& command, const std::string& input,
                 std::uint64_t seed) {
  Json report;
  report["version"] = std::string(kVersion);
  report["command"] = command;
  report["input"] = input;
  report["seed"] = seed;
  report["results"] = Json::object();
  return report;
}

Json solution_json(const Solution& s) {
  Json j;
  j["text"] = render(s);
  j["k"] = s.k();
  j["residual"] = residual(s).get_str();
  j["essential"] = is_essential(s);
  return j;
}

Json certificate_json(const GenericityCertificate& cert) {
  Json j;
  const bool found = cert.verdict == Verdict::GenericWitnessFound;
  j["verdict"] = found ? "GENERIC_WITNESS_FOUND" : "NO_WITNESS_FOUND";
  if (found) {
    Json witness = Json::array();
    for (const Rat& e : cert.witness) witness.push_back(e.get_str());
    j["witness"] = std::move(witness);
    j["orbit_rank"] = cert.orbit_rank;
    j["isotropy_dim"] = cert.isotropy_dim;
  }
  j["trials_used"] = cert.trials_used;
  j["prescreen_prime"] = std::to_string(cert.prescreen_prime);
  j["seed"] = cert.seed;
  return j;
}

Json castling_json(const CastlingReport& rep) {
  Json j;
  j["m"] = rep.m;
  j["n"] = rep.n;
  auto side = [](bool generic, std::size_t adim, std::size_t sdim,
                 std::size_t iso, const std::vector<Rat>& witness) {
    Json s;
    s["generic"] = generic;
    s["algebra_dim"] = adim;
    s["space_dim"] = sdim;
    if (generic) {
      s["isotropy_dim"] = iso;
      Json w = Json::array();
      for (const Rat& e : witness) w.push_back(e.get_str());
      s["witness"] = std::move(w);
    }
    return s;
  };
  j["side1"] = side(rep.side1_generic, rep.side1_algebra_dim,
                    rep.side1_space_dim, rep.side1_isotropy_dim, rep.witness1);
  j["side2"] = side(rep.side2_generic, rep.side2_algebra_dim,
                    rep.side2_space_dim, rep.side2_isotropy_dim, rep.witness2);
  j["isotropy_dims_equal"] =
      rep.side1_generic && rep.side2_generic &&
      rep.side1_isotropy_dim == rep.side2_isotropy_dim;
  if (rep.side1_generic) j["h_block_kernel_dim"] = rep.h_block_kernel_dim;
  j["trials_used"] = rep.trials_used;
  j["seed"] = rep.seed;
  return j;
}

}  // namespace pvcastle::cli
