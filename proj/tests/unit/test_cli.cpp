#include <sstream>

#include "doctest.h"
#include "fmlog/campaigns.hpp"
#include "fmlog/errors.hpp"
#include "fmlog_cli/commands.hpp"
#include "fmlog_cli/json_codec.hpp"

using namespace fmlog;
using namespace fmlog::cli;

namespace {
int run_args(std::vector<std::string> args, std::string& out_text) {
  args.insert(args.begin(), "fmlog");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  out_text = out.str();
  return code;
}
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("rationals and subsets") {
    CHECK(encode(Rational(3)) == "3/1");
    CHECK(decode_rational(Json("-7/21")) == Rational(-1, 3));
    CHECK(decode_rational(Json(4)) == 4);
    CHECK_THROWS_AS(decode_rational(Json("x")), InvalidInput);
    CHECK(encode_subset(0b1011) == Json::array({1, 2, 4}));
    CHECK(bundle_key(BundleId{0, 0b101}) == "1,3");
    CHECK(bundle_key(BundleId{2, 0b1}) == "2:1");
  }

  TEST_CASE("point and screen round trips") {
    Rng rng(8);
    for (int t = 0; t < 20; ++t) {
      const FMPoint x = random_point(rng, 2, 5);
      CHECK(decode_point(parse_json(encode(x).dump(), "test")) == x);
      const FramedFMPoint f = random_framed(rng, 1, 4);
      CHECK(decode_framed(encode(f)) == f);
      const SimpleScreen s = random_screen(rng, 4, 2);
      CHECK(decode_screen(encode(s)) == s);
    }
    const StableTree t = enumerate_stable_trees(4).back();
    CHECK(decode_tree(encode(t), 4) == t);
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_json("{\"D\": 2,", "inline"), InvalidInput);
    CHECK_THROWS_AS(decode_point(parse_json("{\"tree\": {\"leaf\": 1}}", "inline")), InvalidInput);
    VerifyBounds b;
    CHECK_THROWS_AS(apply_bounds_override(b, "fm_trials=abc"), InvalidInput);
    CHECK_THROWS_AS(apply_bounds_override(b, "nope=3"), InvalidInput);
    apply_bounds_override(b, "fm_trials=7,log_max_arity=3");
    CHECK(b.fm_trials == 7);
    CHECK(b.log_max_arity == 3);
  }

  TEST_CASE("exit codes") {
    std::string out;
    CHECK(run_args({"fm", "verify-axioms", "--D", "2", "--n", "3", "--trials", "20", "--seed", "7"}, out) == 0);
    CHECK(Json::parse(out).at("ok").get<bool>());
    CHECK(run_args({"strata", "enumerate", "--n", "4"}, out) == 0);
    CHECK(Json::parse(out).at("count") == 26);
    CHECK(run_args({"logcalc", "gamma", "--q", "1,1,2", "--variant", "vlog"}, out) == 0);
    CHECK(run_args({"strata", "enumerate"}, out) == 2);
    CHECK(run_args({"strata", "enumerate", "--n", "40"}, out) == 2);
    CHECK(run_args({"no-such-command"}, out) == 2);
    CHECK(run_args({"fm", "compose", "--spec", "/nonexistent/file.json"}, out) == 2);
    CHECK(run_args({"logcalc", "gamma", "--q", "1,3"}, out) == 2);
    CHECK(run_args({"fm", "compose", "--spec", FMLOG_TEST_DATA "/malformed.json"}, out) == 2);
    CHECK(run_args({"fm", "compose", "--spec", FMLOG_TEST_DATA "/compose.json"}, out) == 0);
    CHECK(Json::parse(out).at("point").at("arity") == 3);
  }

  TEST_CASE("reports are byte-identical for equal seeds") {
    std::string a, b, c;
    const std::vector<std::string> args{"--seed", "5", "fm", "verify-axioms", "--D", "3", "--n", "4", "--trials", "15"};
    run_args(args, a);
    run_args(args, b);
    CHECK(a == b);
    CHECK(run_args({"--seed", "5", "kn", "hopf", "--m", "1", "--samples", "300"}, c) == 0);
    std::string d;
    run_args({"--seed", "5", "kn", "hopf", "--m", "1", "--samples", "300"}, d);
    CHECK(c == d);
  }

  TEST_CASE("svg plot") {
    const FMPoint x = compose(Surjection({1, 1, 2}, 2), point_from_config(2, {{0, 0}, {1, 0}}),
                              {point_from_config(2, {{0, 0}, {0, 1}}), FMPoint::unit(2)});
    const std::string svg = plot_svg(x, 0.25);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find(">3</text>") != std::string::npos);
  }
}
