#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "pvcastle/castle.hpp"
#include "pvcastle/pv.hpp"

namespace pvcastle::cli {

using Json = nlohmann::ordered_json;

// Search defaults, overridable by a config file (path in $PVCASTLE_CONFIG,
// key=value lines: trials, bound, prime) and then by flags.
struct Defaults {
  std::size_t trials = 32;
  long bound = 5;
  std::uint64_t prime = kDefaultPrime;
};

/// Loads defaults from the file named by $PVCASTLE_CONFIG, if set. Throws
/// ValueError on unreadable files, unknown keys or invalid values.
Defaults load_defaults_from_env();

/// Report skeleton shared by all subcommands; serializes deterministically
/// for identical inputs and seed.
Json make_report(const std::string& command, const std::string& input,
                 std::uint64_t seed);

Json solution_json(const Solution& s);
Json certificate_json(const GenericityCertificate& cert);
Json castling_json(const CastlingReport& rep);

}  // namespace pvcastle::cli
