#pragma once

#include <iosfwd>
#include <string>

#include "csn/model.hpp"

namespace csn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Flat JSON config: n, k, L, R, E, alpha, d_I, beta_I, d_C, beta_C, with
// rationals as "p/q" strings or integers. Missing n defaults to L*R + E and
// missing d_I to R - 1.
RawConfig parse_config_json(const std::string& text);
std::string config_to_json(const SystemConfig& cfg);

}  // namespace csn::cli
