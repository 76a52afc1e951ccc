// Command-line front end. Exit status: 0 success, 1 not realizable within
// scope / not positive real / verification failure, 2 invalid input.
#include "spsynth/spsynth.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace spsynth;

namespace {

struct Config {
  unsigned precision_bits = kDefaultPrecisionBits;
  std::string tol = "1e-20";
  std::string format = "json";
  std::uint64_t seed = 1;
};

// A JSON argument: inline text, "-" for stdin, or a file path.
json load_json(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot read '" + arg + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

// Accepts a bare netlist or a report object carrying one.
json netlist_json(const json& j) {
  if (j.is_object() && j.contains("network") && !j.contains("type")) {
    if (j.at("network").is_null()) throw std::invalid_argument("report carries no network");
    return j.at("network");
  }
  return j;
}

std::string poly_text(const Poly<Rational>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")";
    if (i > 0) out += i == 1 ? "*s" : "*s^" + std::to_string(i);
  }
  return out;
}

void print_network(const Network<Rational>& n, const Config& cfg) {
  if (cfg.format == "spice") std::cout << to_spice(n);
  else if (cfg.format == "text") std::cout << n.key() << "\n";
  else std::cout << network_to_json(n).dump(2) << "\n";
}

int emit_report(const RealizationReport& r, const Config& cfg) {
  if (cfg.format == "spice") {
    if (r.network) std::cout << to_spice(*r.network);
  } else if (cfg.format == "text") {
    std::cout << "class: " << kind_name(r.kind);
    if (r.config) std::cout << " (" << config_name(*r.config) << (r.via ? std::string(" via ") + transform_name(*r.via) : "") << ")";
    std::cout << "\n";
    for (const auto& c : r.conditions)
      std::cout << (c.pass ? "  pass  " : "  fail  ") << c.name << " = " << to_decimal(c.value, 20) << "\n";
    for (const auto& [n, v] : r.elements) std::cout << "  " << n << " = " << to_decimal(v, 30) << "\n";
    if (r.residual) std::cout << "residual: " << to_decimal(*r.residual, 6) << "\n";
  } else {
    std::cout << report_to_json(r, cfg.precision_bits).dump(2) << "\n";
  }
  return (r.kind == RealizationKind::NotPositiveReal || r.kind == RealizationKind::UnknownWithinScope) ? 1 : 0;
}

LabelFilters parse_filters(const std::vector<std::string>& names) {
  LabelFilters f;
  for (const auto& raw : names) {
    std::string n = raw;
    if (n == "cutset") f.cutset_rule = true;
    else if (n == "series-arm") f.no_pure_reactive_series_arm = true;
    else if (n == "irreducible") f.irreducible = true;
    else if (n.rfind("resistors=", 0) == 0) f.min_resistors = std::stoi(n.substr(10));
    else if (n.rfind("reactive=", 0) == 0) f.reactive_count = std::stoi(n.substr(9));
    else throw std::invalid_argument("unknown filter '" + n + "'");
  }
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Series-parallel RLC realization of biquadratic impedances k(s+z)^2/(s+p)^2"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--precision-bits", cfg.precision_bits, "working precision for irrational quantities")
      ->check(CLI::Range(64u, 1u << 16));
  app.add_option("--tol", cfg.tol, "tolerance for numeric verification and irrational loci");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "spice", "text"}));
  app.add_option("--seed", cfg.seed, "seed for the multistart fitter");
  app.fallthrough();

  std::string k, z, p, config, netlist, target, op, poly, lo, hi, width = "1e-30";
  int n = 0, nmax = 0, multistarts = 32, budget = 200;
  std::vector<std::string> filters;
  bool labeled = false;

  auto* classify_cmd = app.add_subcommand("classify", "classify a canonical biquad");
  auto* synth_cmd = app.add_subcommand("synth", "synthesize a seven-element network");
  for (auto* c : {classify_cmd, synth_cmd}) {
    c->add_option("--k", k)->required();
    c->add_option("--z", z)->required();
    c->add_option("--p", p)->required();
  }
  synth_cmd->add_option("--config", config, "fig3a, n4a or n5a");

  auto* impedance_cmd = app.add_subcommand("impedance", "reduced impedance of a netlist");
  impedance_cmd->add_option("netlist", netlist)->required();

  auto* transform_cmd = app.add_subcommand("transform", "apply Inv, Dual or GDu to a netlist");
  transform_cmd->add_option("--op", op)->required()->check(CLI::IsMember({"inv", "dual", "gdu"}));
  transform_cmd->add_option("netlist", netlist)->required();

  auto* verify_cmd = app.add_subcommand("verify", "check a netlist against a target impedance");
  verify_cmd->add_option("netlist", netlist)->required();
  verify_cmd->add_option("--target", target, "target JSON; defaults to the input of a piped report");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate series-parallel shapes");
  enumerate_cmd->add_option("--n", n)->required();
  enumerate_cmd->add_option("--filters", filters, "cutset, series-arm, irreducible, resistors=N, reactive=N")
      ->delimiter(',');
  enumerate_cmd->add_flag("--labeled", labeled, "enumerate R/L/C labelings");

  auto* roots_cmd = app.add_subcommand("roots", "count and isolate real roots in (lo, hi]");
  roots_cmd->add_option("--poly", poly)->required();
  roots_cmd->add_option("--lo", lo)->required();
  roots_cmd->add_option("--hi", hi)->required();
  roots_cmd->add_option("--width", width);

  auto* pr_cmd = app.add_subcommand("pr-check", "positive-realness of a biquad");
  pr_cmd->add_option("--target", target)->required();

  auto* falsify_cmd = app.add_subcommand("falsify", "multistart fits over small labeled networks");
  falsify_cmd->add_option("--target", target)->required();
  falsify_cmd->add_option("--nmax", nmax)->required();
  falsify_cmd->add_option("--multistarts", multistarts);
  falsify_cmd->add_option("--budget", budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    PrecisionScope scope(cfg.precision_bits);
    const Rational tol = parse_rational(cfg.tol);
    if (!(tol > 0)) throw std::invalid_argument("--tol must be positive");
    ClassifyOptions opt;
    opt.tol = tol;
    opt.verify_tol = Real(tol);

    if (*classify_cmd || *synth_cmd) {
      CanonicalBiquad<Rational> b(parse_rational(k), parse_rational(z), parse_rational(p));
      if (*classify_cmd || config.empty()) {
        RealizationReport r = classify(b, opt);
        int code = emit_report(r, cfg);
        return (*synth_cmd && !r.network) ? 1 : code;
      }
      Synthesis syn = synthesize(parse_config(config), b, tol);
      NumericCheck chk = verify_numeric(syn.network, to_rational_fn(b), opt.verify_tol);
      RealizationReport r;
      r.k = to_string(b.k), r.z = to_string(b.z), r.p = to_string(b.p);
      r.kind = RealizationKind::SevenElementCatalog;
      r.config = syn.config;
      r.network = syn.network;
      r.elements = syn.elements;
      r.residual = chk.residual;
      emit_report(r, cfg);
      return chk.ok ? 0 : 1;
    }

    if (*impedance_cmd) {
      auto f = impedance(network_from_json(netlist_json(load_json(netlist))));
      if (cfg.format == "text") std::cout << "(" << poly_text(f.num()) << ") / (" << poly_text(f.den()) << ")\n";
      else std::cout << rational_fn_to_json(f).dump(2) << "\n";
      return 0;
    }

    if (*transform_cmd) {
      print_network(apply_transform(network_from_json(netlist_json(load_json(netlist))), parse_transform(op)), cfg);
      return 0;
    }

    if (*verify_cmd) {
      json input = load_json(netlist);
      Network<Rational> net = network_from_json(netlist_json(input));
      json tj;
      if (!target.empty()) tj = load_json(target);
      else if (input.is_object() && input.contains("input")) tj = input.at("input");
      else throw std::invalid_argument("verify needs --target");
      Target t = target_from_json(tj);
      bool exact = verify_exact(net, t.fn);
      NumericCheck chk = verify_numeric(net, t.fn, opt.verify_tol);
      bool pass = exact || chk.ok;
      if (cfg.format == "text")
        std::cout << (pass ? "pass" : "fail") << " exact=" << exact << " residual=" << to_decimal(chk.residual, 6) << "\n";
      else
        std::cout << json{{"pass", pass}, {"exact", exact}, {"residual", to_decimal(chk.residual, 6)}}.dump(2) << "\n";
      return pass ? 0 : 1;
    }

    if (*enumerate_cmd) {
      if (!labeled && filters.empty()) {
        auto shapes = enumerate_topologies(n);
        if (cfg.format == "text") {
          std::cout << shapes.size() << "\n";
          for (const auto& s : shapes) std::cout << s.key << "\n";
        } else {
          json keys = json::array();
          for (const auto& s : shapes) keys.push_back(s.key);
          std::cout << json{{"n", n}, {"count", shapes.size()}, {"topologies", keys}}.dump(2) << "\n";
        }
        return 0;
      }
      auto nets = enumerate_labeled(n, parse_filters(filters));
      if (cfg.format == "text") {
        std::cout << nets.size() << "\n";
        for (const auto& x : nets) std::cout << x.key() << "\n";
      } else {
        json a = json::array();
        for (const auto& x : nets) a.push_back(network_to_json(x));
        std::cout << json{{"n", n}, {"count", nets.size()}, {"networks", a}}.dump(2) << "\n";
      }
      return 0;
    }

    if (*roots_cmd) {
      Poly<Rational> a = poly_from_json(load_json(poly));
      Rational l = parse_rational(lo), h = parse_rational(hi), w = parse_rational(width);
      auto roots = isolate_roots(a, l, h, w);
      json rs = json::array();
      for (const auto& iv : roots)
        rs.push_back({{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}, {"midpoint", to_decimal(iv.midpoint(), 40)}});
      if (cfg.format == "text") {
        std::cout << roots.size() << "\n";
        for (const auto& iv : roots) std::cout << to_decimal(iv.midpoint(), 40) << "\n";
      } else {
        std::cout << json{{"count", roots.size()}, {"roots", rs}}.dump(2) << "\n";
      }
      return 0;
    }

    if (*pr_cmd) {
      Target t = target_from_json(load_json(target));
      bool pr;
      if (t.canonical) pr = canonical_positive_real(*t.canonical);
      else if (t.general) pr = is_positive_real(*t.general);
      else throw std::invalid_argument("pr-check needs a biquad target (k/z/p or A..F)");
      if (cfg.format == "text") std::cout << (pr ? "positive real" : "not positive real") << "\n";
      else std::cout << json{{"positive_real", pr}}.dump(2) << "\n";
      return pr ? 0 : 1;
    }

    if (*falsify_cmd) {
      FitOptions fo;
      fo.seed = cfg.seed;
      fo.multistarts = multistarts;
      fo.budget = budget;
      FalsifyReport rep = falsify_small(target_from_json(load_json(target)).fn, nmax, fo);
      if (cfg.format == "text") {
        for (int i = 1; i <= nmax; ++i)
          std::cout << "n=" << i << " best_residual=" << rep.best_residual(i) << (rep.any_success(i) ? " fit found" : "") << "\n";
      } else {
        std::cout << falsify_to_json(rep).dump(2) << "\n";
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
