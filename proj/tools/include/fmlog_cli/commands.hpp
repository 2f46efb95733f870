#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "fmlog_cli/json_codec.hpp"

namespace fmlog::cli {

/// Bounds of `verify all`. FMLOG_DEFAULT_BOUNDS="key=value,..." overrides
/// them (keys are the field names).
struct VerifyBounds {
  int strata_max_n = 6;
  int fm_max_dim = 4;
  int fm_max_n = 5;
  int fm_trials = 500;
  int framed_max_n = 4;
  int framed_trials = 200;
  int screen_trials = 200;
  int bridge_trials = 100;
  int log_max_arity = 6;
  int kn_samples = 1000;
  int hopf_samples = 10000;
};

VerifyBounds default_bounds(bool quick);
/// Throws InvalidInput on unknown keys or values out of range.
void apply_bounds_override(VerifyBounds& b, const std::string& spec);

/// Runs every campaign in a fixed order; the report depends only on
/// (seed, tol, bounds).
Json verify_all(std::uint64_t seed, double tol, const VerifyBounds& b);

/// SVG scatter of a D = 2 point; tree level k is drawn at scale eps^k.
std::string plot_svg(const FMPoint& x, double eps);

/// Exit status: 0 all checks pass, 1 a check failed, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fmlog::cli
