#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distvar/solver.h"

namespace distvar::cli {

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line tool on args (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version_string();

// [{"U1": [u, v], "U2": [u, v]}, ...]
std::vector<Correspondence> parse_correspondences(std::string_view json);
std::string correspondences_to_json(std::span<const Correspondence> corrs);

std::string candidates_to_json(std::span<const SolutionCandidate> sols);

}  // namespace distvar::cli
