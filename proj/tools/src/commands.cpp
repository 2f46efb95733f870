#include "fmlog_cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fmlog/campaigns.hpp"
#include "fmlog/errors.hpp"
#include "fmlog/log_verify.hpp"

namespace fmlog::cli {

namespace {

struct Global {
  std::uint64_t seed = 1;
  double tol = kn::kDefaultTol;
  std::string format = "json";
  std::string out;
};

Json checks_report(const std::string& command, const std::vector<Json>& checks) {
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.at("ok").get<bool>();
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(c);
  return Json{{"command", command}, {"ok", ok}, {"checks", arr}};
}

std::string checks_table(const Json& report) {
  std::ostringstream os;
  for (const auto& c : report.at("checks")) {
    os << (c.at("ok").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>();
    if (c.contains("cases")) os << "  cases=" << c.at("cases").get<long>();
    if (c.contains("checked")) os << "  checked=" << c.at("checked").get<long>();
    if (c.contains("max_error")) os << "  max_error=" << std::setprecision(3) << c.at("max_error").get<double>();
    if (c.contains("detail") && !c.at("detail").get<std::string>().empty())
      os << "  (" << c.at("detail").get<std::string>() << ")";
    if (c.contains("failures"))
      for (const auto& f : c.at("failures")) os << "\n    " << f.get<std::string>();
    os << "\n";
  }
  os << (report.at("ok").get<bool>() ? "all checks passed\n" : "some checks FAILED\n");
  return os.str();
}

void write_text(const Global& g, std::ostream& out, const std::string& text) {
  if (g.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + g.out);
  f << text;
}

// Emits the report in the requested format and maps it to an exit status.
int emit(const Global& g, std::ostream& out, const Json& report, const std::string& table = {}) {
  std::string text;
  if (g.format == "table")
    text = !table.empty() ? table : report.contains("checks") ? checks_table(report) : report.dump(2) + "\n";
  else
    text = report.dump(2) + "\n";
  write_text(g, out, text);
  return report.contains("ok") && !report.at("ok").get<bool>() ? 1 : 0;
}

void require_range(const std::string& what, long v, long lo, long hi) {
  if (v < lo || v > hi)
    throw ResourceLimit(what + " must be in " + std::to_string(lo) + ".." + std::to_string(hi) + ", got " +
                        std::to_string(v));
}

Variant parse_variant(const std::string& s) {
  if (s == "log") return Variant::Log;
  if (s == "vlog") return Variant::VLog;
  throw InvalidInput("variant must be log or vlog");
}

std::string strip_catalog(const std::string& c) { return c.rfind("catalog:", 0) == 0 ? c.substr(8) : c; }


// ---- strata

int cmd_strata_enumerate(const Global& g, std::ostream& out, int n) {
  require_range("--n", n, 1, 8);
  const auto trees = enumerate_stable_trees(n);
  Json strata = Json::array();
  std::ostringstream table;
  int index = 0;
  for (const auto& t : trees) {
    const NestedCollection c = tree_to_nested(t);
    strata.push_back(Json{{"nested", encode(c)}, {"tree", encode(t)}});
    table << index++ << "\t{";
    bool first = true;
    for (Mask m : c.masks()) {
      table << (first ? "" : " ") << "{" << subset_key(m) << "}";
      first = false;
    }
    table << "}\n";
  }
  table << trees.size() << " strata\n";
  return emit(g, out, Json{{"n", n}, {"count", trees.size()}, {"strata", strata}}, table.str());
}

int cmd_strata_poset(const Global& g, std::ostream& out, int n) {
  require_range("--n", n, 1, 6);
  std::vector<NestedCollection> cols;
  for (const auto& t : enumerate_stable_trees(n)) cols.push_back(tree_to_nested(t));
  Json nodes = Json::array(), covers = Json::array();
  std::ostringstream table;
  for (const auto& c : cols) nodes.push_back(encode(c));
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (cols[i].size() == cols[j].size() + 1 && strata_closure_leq(cols[i], cols[j])) {
        covers.push_back(Json::array({i, j}));
        table << i << " < " << j << "\n";
      }
  return emit(g, out,
              Json{{"n", n},
                   {"order", "a <= b iff the collection b is contained in a (stratum a lies in the closure of b)"},
                   {"nodes", nodes},
                   {"covers", covers}},
              table.str());
}

// ---- fm

int cmd_fm_compose(const Global& g, std::ostream& out, const std::string& spec_path) {
  const Json spec = read_json_file(spec_path);
  if (!spec.contains("q") || !spec.contains("outer") || !spec.contains("inner"))
    throw InvalidInput(spec_path + ": expected fields \"q\", \"outer\", \"inner\"");
  const Surjection q = Surjection::parse(spec.at("q").get<std::string>());
  if (!spec.at("inner").is_array()) throw InvalidInput("\"inner\" must be an array");
  const bool framed = spec.at("outer").contains("frames");
  Json result;
  if (framed) {
    std::vector<FramedFMPoint> ys;
    for (const auto& y : spec.at("inner")) ys.push_back(decode_framed(y));
    result = encode(framed_compose(q, decode_framed(spec.at("outer")), ys));
  } else {
    std::vector<FMPoint> ys;
    for (const auto& y : spec.at("inner")) ys.push_back(decode_point(y));
    result = encode(compose(q, decode_point(spec.at("outer")), ys));
  }
  return emit(g, out, Json{{"q", q.to_string()}, {"point", result}});
}

int cmd_fm_verify(const Global& g, std::ostream& out, int dim, int n, int trials, bool framed) {
  require_range("--D", dim, 1, 6);
  require_range("--n", n, 1, 8);
  require_range("--trials", trials, 1, 100000);
  std::vector<Json> checks;
  if (framed) {
    if (dim % 2 != 0) throw InvalidInput("--framed needs an even --D");
    const int d = dim / 2;
    checks.push_back(encode(framed_associativity(d, n, trials, g.seed)));
    checks.push_back(encode(framed_unit(d, n, trials, g.seed)));
    checks.push_back(encode(framed_equivariance(d, n, trials, g.seed)));
  } else {
    checks.push_back(encode(fm_associativity(dim, n, trials, g.seed)));
    checks.push_back(encode(fm_unit(dim, n, trials, g.seed)));
    checks.push_back(encode(fm_equivariance(dim, n, trials, g.seed)));
    checks.push_back(encode(fm_coordinate_law(dim, n, trials, g.seed)));
    if (dim >= 2) checks.push_back(encode(fm_rotation(dim, n, trials, g.seed)));
  }
  Json report = checks_report("fm verify-axioms", checks);
  report["seed"] = g.seed;
  return emit(g, out, report);
}

int cmd_fm_plot(const Global& g, std::ostream& out, const std::string& in, double eps) {
  if (!(eps > 0 && eps < 1)) throw InvalidInput("--eps must lie in (0, 1)");
  const Json j = read_json_file(in);
  FMPoint x = [&] {
    if (!j.contains("q")) return decode_point(j.contains("point") ? j.at("point") : j);
    std::vector<FMPoint> ys;
    for (const auto& y : j.at("inner")) ys.push_back(decode_point(y));
    return compose(Surjection::parse(j.at("q").get<std::string>()), decode_point(j.at("outer")), ys);
  }();
  if (x.dim() != 2) throw InvalidInput("plots are only drawn for D = 2");
  write_text(g, out, plot_svg(x, eps));
  return 0;
}

// ---- screen

Surjection parse_q(const std::string& text) {
  if (text.empty()) throw InvalidInput("--q is required");
  return Surjection::parse(text);
}

int cmd_screen_compose(const Global& g, std::ostream& out, const std::string& in, const std::string& qtext) {
  const Surjection q = parse_q(qtext);
  const Json j = read_json_file(in);
  if (!j.contains("outer") || !j.contains("inner") || !j.at("inner").is_array())
    throw InvalidInput(in + ": expected fields \"outer\" and \"inner\"");
  std::vector<SimpleScreen> inner;
  for (const auto& s : j.at("inner")) inner.push_back(decode_screen(s));
  return emit(g, out, encode(screen_compose(q, decode_screen(j.at("outer")), inner)));
}

int cmd_screen_decompose(const Global& g, std::ostream& out, const std::string& in, const std::string& qtext) {
  const Surjection q = parse_q(qtext);
  const ScreenDecomposition dec = screen_decompose(q, decode_screen(read_json_file(in)));
  Json inner = Json::array();
  for (const auto& s : dec.inner) inner.push_back(encode(s));
  return emit(g, out, Json{{"q", q.to_string()}, {"outer", encode(dec.outer)}, {"inner", inner}});
}

int cmd_screen_validate(const Global& g, std::ostream& out, const std::string& in, const std::string& qtext) {
  const SimpleScreen s = decode_screen(read_json_file(in));
  const ScreenValidation v = screen_validate(s);
  Json report{{"valid", v.valid}};
  report["witness"] = v.witness ? Json::array({subset_key(v.witness->first), subset_key(v.witness->second)}) : Json();
  bool ok = v.valid;
  if (v.valid) {
    Json vanishing = Json::object();
    for (Mask m : proper_multi_subsets(s.arity())) vanishing[subset_key(m)] = vanishing_satisfied(s, m);
    report["vanishing"] = vanishing;
    if (!qtext.empty()) {
      const Surjection q = parse_q(qtext);
      if (q.source_size() != s.arity()) throw InvalidInput("--q has the wrong source size");
      Json fibers = Json::object();
      for (int r = 1; r <= q.target_size(); ++r) {
        const Mask f = q.fiber_mask(r);
        if (popcount(f) < 2 || f == full_mask(s.arity())) continue;
        const bool holds = vanishing_satisfied(s, f);
        fibers[subset_key(f)] = holds;
        ok = ok && holds;
      }
      report["fiber_vanishing"] = fibers;
    }
  }
  report["ok"] = ok;
  return emit(g, out, report);
}

// ---- logcalc

int cmd_log_gamma(const Global& g, std::ostream& out, const std::string& qtext, const std::string& variant_text,
                  bool dump) {
  const Surjection q = parse_q(qtext);
  require_range("|M|", q.source_size(), 1, 8);
  const Variant variant = parse_variant(variant_text);
  const LogMorphism m = gamma(q, variant);
  const Legality df = legality_df(m), virt = legality_virtual(m);
  Json report{{"q", q.to_string()}, {"variant", variant_text}, {"legal_df", df.ok}, {"legal_virtual", virt.ok}};
  report["morphism"] = encode(m, dump);
  if (dump) {
    Json classes = Json::object();
    for (std::size_t i = 0; i < m.rows().size(); ++i)
      classes[bundle_key(m.target().bundles()[i].id)] = encode(row_class(m, m.rows()[i]));
    report["pullback_classes"] = classes;
  }
  report["ok"] = variant == Variant::Log ? df.ok : virt.ok;
  std::ostringstream table;
  for (std::size_t i = 0; i < m.rows().size(); ++i)
    table << bundle_key(m.target().bundles()[i].id) << "\t" << format_row(m.rows()[i]) << "\n";
  table << "DF-legal: " << (df.ok ? "yes" : "no") << ", virtual-legal: " << (virt.ok ? "yes" : "no") << "\n";
  return emit(g, out, report, table.str());
}

int cmd_log_verify(const Global& g, std::ostream& out, int max_arity, const std::string& variant_text) {
  require_range("--max-arity", max_arity, 1, 7);
  std::vector<std::string> variants =
      variant_text == "both" ? std::vector<std::string>{"log", "vlog"} : std::vector<std::string>{variant_text};
  std::vector<Json> checks;
  for (const auto& v : variants) {
    LogVerifyOptions opts;
    opts.max_arity = max_arity;
    opts.variant = parse_variant(v);
    for (const auto& c : verify_log_calculus(opts).checks) {
      Json j = encode(c);
      j["name"] = v + ": " + c.name;
      checks.push_back(j);
    }
  }
  return emit(g, out, checks_report("logcalc verify", checks));
}

// ---- kn

int emit_kn(const Global& g, std::ostream& out, const std::string& command, const std::vector<kn::Report>& reps) {
  std::vector<Json> checks;
  for (const auto& r : reps) checks.push_back(encode(r));
  Json report = checks_report(command, checks);
  report["seed"] = g.seed;
  report["tol"] = g.tol;
  return emit(g, out, report);
}

std::vector<std::string> cases_or_catalog(const std::string& c, const std::vector<std::string>& catalog) {
  if (c.empty() || c == "all" || c == "catalog") return catalog;
  return {strip_catalog(c)};
}

void bounds_kv(VerifyBounds& b, const std::string& key, int value) {
  const std::map<std::string, std::pair<int*, std::pair<int, int>>> fields{
      {"strata_max_n", {&b.strata_max_n, {1, 7}}},   {"fm_max_dim", {&b.fm_max_dim, {1, 6}}},
      {"fm_max_n", {&b.fm_max_n, {1, 7}}},           {"fm_trials", {&b.fm_trials, {1, 100000}}},
      {"framed_max_n", {&b.framed_max_n, {1, 7}}},   {"framed_trials", {&b.framed_trials, {1, 100000}}},
      {"screen_trials", {&b.screen_trials, {1, 100000}}}, {"bridge_trials", {&b.bridge_trials, {1, 100000}}},
      {"log_max_arity", {&b.log_max_arity, {1, 7}}}, {"kn_samples", {&b.kn_samples, {1, 10000000}}},
      {"hopf_samples", {&b.hopf_samples, {1, 10000000}}}};
  auto it = fields.find(key);
  if (it == fields.end()) throw InvalidInput("unknown bound '" + key + "'");
  const auto [lo, hi] = it->second.second;
  if (value < lo || value > hi) throw InvalidInput("bound " + key + " out of range");
  *it->second.first = value;
}

}  // namespace

VerifyBounds default_bounds(bool quick) {
  VerifyBounds b;
  if (quick) {
    b.strata_max_n = 5;
    b.fm_max_n = 4;
    b.fm_trials = 150;
    b.framed_trials = 80;
    b.screen_trials = 100;
    b.bridge_trials = 50;
    b.log_max_arity = 5;
    b.hopf_samples = 2000;
    b.kn_samples = 300;
  }
  return b;
}

void apply_bounds_override(VerifyBounds& b, const std::string& spec) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidInput("bound override '" + item + "' is not key=value");
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InvalidInput("bound override '" + item + "' has a non-integer value");
    }
    bounds_kv(b, item.substr(0, eq), value);
  }
}

Json verify_all(std::uint64_t seed, double tol, const VerifyBounds& b) {
  std::vector<Json> checks;
  auto add = [&](const CheckResult& r) { checks.push_back(encode(r)); };
  auto add_kn = [&](const kn::Report& r) { checks.push_back(encode(r)); };

  add(strata_consistency(b.strata_max_n));
  for (int dim = 1; dim <= b.fm_max_dim; ++dim)
    for (int n = 1; n <= b.fm_max_n; ++n) {
      add(fm_associativity(dim, n, b.fm_trials, seed));
      add(fm_unit(dim, n, b.fm_trials, seed));
      add(fm_equivariance(dim, n, b.fm_trials, seed));
      add(fm_coordinate_law(dim, n, b.fm_trials, seed));
      if (dim >= 2) add(fm_rotation(dim, n, std::max(1, b.fm_trials / 5), seed));
    }
  for (int d = 1; d <= 2; ++d)
    for (int n = 1; n <= b.framed_max_n; ++n) {
      add(framed_associativity(d, n, b.framed_trials, seed));
      add(framed_unit(d, n, b.framed_trials, seed));
      add(framed_equivariance(d, n, b.framed_trials, seed));
    }
  add(screen_bijection(4, 3, b.screen_trials, seed));
  add(screen_fm_bridge(b.bridge_trials, seed));
  for (Variant v : {Variant::Log, Variant::VLog}) {
    LogVerifyOptions opts;
    opts.max_arity = b.log_max_arity;
    opts.variant = v;
    for (auto c : verify_log_calculus(opts).checks) {
      c.name = std::string(v == Variant::Log ? "log: " : "vlog: ") + c.name;
      add(c);
    }
  }
  for (int m = 1; m <= 2; ++m) add_kn(kn::hopf_verify(m, b.hopf_samples, tol, seed));
  for (const auto& c : kn::circle_split_catalog()) add_kn(kn::circle_split_verify(c, b.kn_samples, tol, seed));
  for (int n = 1; n <= 3; ++n) add_kn(kn::s1_action_verify(n, b.kn_samples, tol, seed));
  for (const auto& c : kn::strict_cartesian_catalog()) add_kn(kn::strict_cartesian_verify(c, b.kn_samples, tol, seed));
  add_kn(kn::order_independence_verify(b.kn_samples, tol, seed));
  add_kn(kn::functoriality_verify(b.kn_samples, tol, seed));
  add_kn(kn::sphere_example_verify(b.kn_samples, tol, seed));

  Json report = checks_report("verify all", checks);
  report["seed"] = seed;
  report["tol"] = tol;
  return report;
}

std::string plot_svg(const FMPoint& x, double eps) {
  constexpr double size = 480, margin = 40;
  struct Dot {
    double px, py;
    int leaf;
  };
  struct Ring {
    double px, py, r;
  };
  std::vector<Dot> dots;
  std::vector<Ring> rings;
  std::function<void(const FMNode&, double, double, double)> place = [&](const FMNode& node, double cx, double cy,
                                                                       double scale) {
    if (node.is_leaf()) {
      dots.push_back({cx, cy, node.leaf});
      return;
    }
    if (scale < 1) rings.push_back({cx, cy, scale * 1.15});
    for (std::size_t k = 0; k < node.children.size(); ++k) {
      const double dx = node.positions[k][0].get_d(), dy = node.positions[k][1].get_d();
      place(node.children[k], cx + scale * dx, cy + scale * dy, scale * eps);
    }
  };
  place(x.root(), 0, 0, 1);
  auto sx = [&](double v) { return margin + (v + 1.2) / 2.4 * (size - 2 * margin); };
  auto sy = [&](double v) { return size - sx(v); };
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
     << size << " " << size << "\">\n";
  os << "  <title>FM point, arity " << x.arity() << ", display scale " << eps << "</title>\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& r : rings)
    os << "  <circle cx=\"" << sx(r.px) << "\" cy=\"" << sy(r.py) << "\" r=\"" << r.r / 2.4 * (size - 2 * margin)
       << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"3,3\"/>\n";
  for (const auto& d : dots) {
    os << "  <circle cx=\"" << sx(d.px) << "\" cy=\"" << sy(d.py) << "\" r=\"4\" fill=\"#1f4e99\"/>\n";
    os << "  <text x=\"" << sx(d.px) + 6 << "\" y=\"" << sy(d.py) - 6 << "\" font-size=\"12\">" << d.leaf
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Fulton-MacPherson, screen and log constructions"};
  app.name("fmlog");
  app.fallthrough();
  app.require_subcommand(1);
  Global g;
  app.add_option("--seed", g.seed, "Seed for randomized campaigns")->capture_default_str();
  app.add_option("--tol", g.tol, "Tolerance for floating-point checks")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_option("--out", g.out, "Write the report (or SVG) to this file");

  std::function<int()> action;

  auto* strata = app.add_subcommand("strata", "Boundary strata: stable trees and nested collections");
  strata->require_subcommand(1);
  int strata_n = 3;
  auto* s_enum = strata->add_subcommand("enumerate", "List strata of FM_n");
  s_enum->add_option("--n", strata_n, "Arity")->required();
  s_enum->callback([&] { action = [&] { return cmd_strata_enumerate(g, out, strata_n); }; });
  auto* s_poset = strata->add_subcommand("poset", "Covering relations of the closure order");
  s_poset->add_option("--n", strata_n, "Arity")->required();
  s_poset->callback([&] { action = [&] { return cmd_strata_poset(g, out, strata_n); }; });

  auto* fm = app.add_subcommand("fm", "Fulton-MacPherson points");
  fm->require_subcommand(1);
  std::string fm_spec, fm_in;
  int fm_dim = 2, fm_n = 4, fm_trials = 500;
  bool fm_framed = false;
  double fm_eps = 0.25;
  auto* f_comp = fm->add_subcommand("compose", "Compose points given as JSON {q, outer, inner}");
  f_comp->add_option("--spec", fm_spec, "Input JSON")->required();
  f_comp->callback([&] { action = [&] { return cmd_fm_compose(g, out, fm_spec); }; });
  auto* f_ver = fm->add_subcommand("verify-axioms", "Seeded operad axiom campaign at total arity n");
  f_ver->add_option("--D", fm_dim, "Ambient dimension")->capture_default_str();
  f_ver->add_option("--n", fm_n, "Arity of the composite")->capture_default_str();
  f_ver->add_option("--trials", fm_trials, "Instances per axiom")->capture_default_str();
  f_ver->add_flag("--framed", fm_framed, "Framed operad (D = 2d)");
  f_ver->callback([&] { action = [&] { return cmd_fm_verify(g, out, fm_dim, fm_n, fm_trials, fm_framed); }; });
  auto* f_plot = fm->add_subcommand("plot", "SVG scatter of a D = 2 point");
  f_plot->add_option("--D", fm_dim, "Ambient dimension (must be 2)")->capture_default_str();
  f_plot->add_option("--in", fm_in, "Point JSON or compose spec")->required();
  f_plot->add_option("--eps", fm_eps, "Display scale of each tree level")->capture_default_str();
  f_plot->callback([&] {
    action = [&] {
      if (fm_dim != 2) throw InvalidInput("plots are only drawn for D = 2");
      return cmd_fm_plot(g, out, fm_in, fm_eps);
    };
  });

  auto* screen = app.add_subcommand("screen", "Simple screens");
  screen->require_subcommand(1);
  std::string sc_in, sc_q;
  for (auto [name, help] : {std::pair{"compose", "Compose {outer, inner} along q"},
                            std::pair{"decompose", "Split a screen along q"},
                            std::pair{"validate", "Compatibility and vanishing report"}}) {
    auto* sub = screen->add_subcommand(name, help);
    sub->add_option("--in", sc_in, "Input JSON")->required();
    sub->add_option("--q", sc_q, "Surjection, e.g. 1,1,2");
  }
  screen->get_subcommand("compose")->callback([&] { action = [&] { return cmd_screen_compose(g, out, sc_in, sc_q); }; });
  screen->get_subcommand("decompose")->callback(
      [&] { action = [&] { return cmd_screen_decompose(g, out, sc_in, sc_q); }; });
  screen->get_subcommand("validate")->callback(
      [&] { action = [&] { return cmd_screen_validate(g, out, sc_in, sc_q); }; });

  auto* logcalc = app.add_subcommand("logcalc", "Divisor-lattice log calculus");
  logcalc->require_subcommand(1);
  std::string lc_q, lc_variant = "vlog";
  bool lc_dump = false;
  int lc_arity = 6;
  auto* l_gamma = logcalc->add_subcommand("gamma", "Exponent rows of the composition morphism");
  l_gamma->add_option("--q", lc_q, "Surjection, e.g. 1,1,2")->required();
  l_gamma->add_option("--variant", lc_variant, "log or vlog")->check(CLI::IsMember({"log", "vlog"}))->capture_default_str();
  l_gamma->add_flag("--dump", lc_dump, "Include structures, matrix and pullback classes");
  l_gamma->callback([&] { action = [&] { return cmd_log_gamma(g, out, lc_q, lc_variant, lc_dump); }; });
  auto* l_ver = logcalc->add_subcommand("verify", "Exhaustive checks up to |M| = max-arity");
  l_ver->add_option("--max-arity", lc_arity, "Largest |M|")->capture_default_str();
  l_ver->add_option("--variant", lc_variant, "log, vlog or both")
      ->check(CLI::IsMember({"log", "vlog", "both"}))
      ->capture_default_str();
  l_ver->callback([&] { action = [&] { return cmd_log_verify(g, out, lc_arity, lc_variant); }; });

  auto* knc = app.add_subcommand("kn", "Kato-Nakayama and real blow-up sample checks");
  knc->require_subcommand(1);
  int kn_m = 1, kn_n = 2, kn_samples = 1000;
  std::string kn_case;
  auto* k_hopf = knc->add_subcommand("hopf", "Blow-up of C^{m+1} at 0 versus the Hopf description");
  k_hopf->add_option("--m", kn_m, "m")->capture_default_str();
  k_hopf->add_option("--samples", kn_samples, "Samples")->default_val(10000);
  k_hopf->callback([&] {
    action = [&] {
      require_range("--m", kn_m, 0, 4);
      require_range("--samples", kn_samples, 1, 10000000);
      return emit_kn(g, out, "kn hopf", {kn::hopf_verify(kn_m, kn_samples, g.tol, g.seed)});
    };
  });
  auto* k_split = knc->add_subcommand("split", "Circle-bundle splitting over catalog cases");
  k_split->add_option("--case", kn_case, "Catalog case or 'all'");
  k_split->add_option("--samples", kn_samples, "Samples")->capture_default_str();
  k_split->callback([&] {
    action = [&] {
      require_range("--samples", kn_samples, 1, 10000000);
      std::vector<kn::Report> reps;
      for (const auto& c : cases_or_catalog(kn_case, kn::circle_split_catalog()))
        reps.push_back(kn::circle_split_verify(c, kn_samples, g.tol, g.seed));
      return emit_kn(g, out, "kn split", reps);
    };
  });
  auto* k_s1 = knc->add_subcommand("s1", "S^1 action on the KN space of T_{1,n}-type charts");
  k_s1->add_option("--n", kn_n, "n")->capture_default_str();
  k_s1->add_option("--samples", kn_samples, "Samples")->capture_default_str();
  k_s1->callback([&] {
    action = [&] {
      require_range("--n", kn_n, 1, 4);
      require_range("--samples", kn_samples, 1, 10000000);
      return emit_kn(g, out, "kn s1", {kn::s1_action_verify(kn_n, kn_samples, g.tol, g.seed)});
    };
  });
  auto* k_cart = knc->add_subcommand("cartesian", "Strict cartesian squares over catalog cases");
  k_cart->add_option("--case", kn_case, "Catalog case or 'all'");
  k_cart->add_option("--samples", kn_samples, "Samples")->capture_default_str();
  k_cart->callback([&] {
    action = [&] {
      require_range("--samples", kn_samples, 1, 10000000);
      std::vector<kn::Report> reps;
      for (const auto& c : cases_or_catalog(kn_case, kn::strict_cartesian_catalog()))
        reps.push_back(kn::strict_cartesian_verify(c, kn_samples, g.tol, g.seed));
      return emit_kn(g, out, "kn cartesian", reps);
    };
  });

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->require_subcommand(1);
  bool quick = false;
  auto* v_all = verify->add_subcommand("all", "Every campaign, in a fixed order");
  v_all->add_flag("--quick", quick, "Reduced bounds (under a minute)");
  v_all->callback([&] {
    action = [&] {
      VerifyBounds b = default_bounds(quick);
      if (const char* env = std::getenv("FMLOG_DEFAULT_BOUNDS")) apply_bounds_override(b, env);
      Json report = verify_all(g.seed, g.tol, b);
      report["quick"] = quick;
      return emit(g, out, report);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "fmlog: " << e.what() << "\n";
    if (const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front()) err << sub->help();
    return 2;
  }
  if (!action) {
    err << app.help();
    return 2;
  }
  try {
    return action();
  } catch (const InvalidInput& e) {
    err << "fmlog: invalid input: " << e.what() << "\n";
  } catch (const ResourceLimit& e) {
    err << "fmlog: bound exceeded: " << e.what() << "\n";
  } catch (const DegenerateDirection& e) {
    err << "fmlog: degenerate input: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "fmlog: malformed JSON input: " << e.what() << "\n";
  } catch (const InternalError& e) {
    err << "fmlog: internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace fmlog::cli
