#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eulerfan/io.hpp"

namespace {

using namespace eulerfan;

enum ExitCode {
  kOk = 0,
  kParseError = 2,
  kDomainError = 3,
  kNotFound = 4,
  kVerificationFailed = 5
};

struct Options {
  std::string input;
  std::string output;  // empty: stdout
  double tol_eq = verifier::kDefaultEqTol;
  double tol_cls = riemann1d::kDefaultClassifyTol;
  int samples = 201;
  double h0 = 0.5;
  double delta0 = 0.1;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.output);
    if (!out) throw std::runtime_error("cannot open output file: " + opt.output);
    out << text;
  }
}

void emit(const Options& opt, const io::json& doc) { emit(opt, io::dump(doc)); }

subsolution::SearchConfig search_config(const Options& opt) {
  subsolution::SearchConfig cfg;
  cfg.h0 = opt.h0;
  cfg.tol_eq = opt.tol_eq;
  return cfg;
}

int cmd_classify(const Options& opt) {
  const auto data = io::read_riemann_data(io::load_file(opt.input));
  emit(opt, io::write_pattern(riemann1d::classify(data, opt.tol_cls)));
  return kOk;
}

int cmd_solve1d(const Options& opt) {
  const auto data = io::read_riemann_data(io::load_file(opt.input));
  const auto pattern = riemann1d::classify(data, opt.tol_cls);
  const auto profile = riemann1d::build_profile(data, pattern);
  const double lo = profile.left_edge();
  const double hi = profile.right_edge();
  const double pad = std::max(1.0, 0.5 * (hi - lo));
  std::vector<double> xi(opt.samples);
  for (int i = 0; i < opt.samples; ++i) {
    xi[i] = (lo - pad) +
            (hi + pad - (lo - pad)) * i / double(opt.samples - 1);
  }
  emit(opt, io::write_profile_samples(profile, xi));
  return kOk;
}

int cmd_subsolution_find(const Options& opt) {
  const auto data = io::read_riemann_data(io::load_file(opt.input));
  try {
    const auto result = subsolution::find(data, search_config(opt));
    emit(opt, io::write_subsolution(result));
  } catch (const not_found_error& e) {
    std::cerr << "not found: " << e.what() << "\n";
    // Slack diagnostics at the bottom rung, when the construction applies.
    try {
      const double pivot = subsolution::rho_pivot(data);
      const double h = 0x1p-20;
      const auto sub = subsolution::construct(
          data, {pivot - h * (pivot - data.left.rho), pivot * (1.0 + h)});
      std::cerr << "  slacks near the pivot: eps=(" << sub.eps1 << ", "
                << sub.eps2 << ") eps_tilde=(" << sub.eps_tilde1 << ", "
                << sub.eps_tilde2 << ")\n";
    } catch (const std::exception&) {
    }
    return kNotFound;
  }
  return kOk;
}

int cmd_subsolution_verify(const Options& opt) {
  const auto q = io::read_quintuple(io::load_file(opt.input));
  const auto report = verifier::verify_subsolution(q, opt.tol_eq);
  emit(opt, io::write_report(report));
  if (!report.pass) {
    std::cerr << "verification failed:";
    for (const auto& id : report.violated()) std::cerr << ' ' << id;
    std::cerr << "\n";
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_patch(const Options& opt) {
  const auto data = io::read_riemann_data(io::load_file(opt.input));
  patching::DeltaLadder ladder;
  ladder.delta0_frac = opt.delta0;
  const auto patched = patching::assemble(data, search_config(opt), ladder);
  emit(opt, io::write_patched(patched));
  return kOk;
}

int cmd_threshold(const Options& opt) {
  const auto data = io::read_riemann_data(io::load_file(opt.input));
  const auto window = subsolution::estimate_threshold(
      data.gas, data.left.rho, data.left.p, data.right.p, search_config(opt));
  emit(opt, io::write_window(window));
  return kOk;
}

int cmd_curves(const Options& opt) {
  const auto data = io::read_riemann_data(io::load_file(opt.input));
  emit(opt, io::curves_dsv(data, opt.samples));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riemann-data classifier and fan-subsolution toolkit for the "
               "2D compressible Euler system"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", opt.input, "input JSON document")->required();
    cmd->add_option("--output", opt.output, "output file (default stdout)");
    return cmd;
  };

  auto* classify = add_common(app.add_subcommand("classify",
      "wave-pattern row of the 1D self-similar solution"));
  classify->add_option("--tol-cls", opt.tol_cls, "classification tolerance")
      ->check(CLI::PositiveNumber);

  auto* solve1d = add_common(app.add_subcommand("solve1d",
      "sample the self-similar solution on a xi-grid"));
  solve1d->add_option("--samples", opt.samples, "grid size")
      ->check(CLI::Range(2, 1 << 22));
  solve1d->add_option("--tol-cls", opt.tol_cls, "classification tolerance")
      ->check(CLI::PositiveNumber);

  auto* subs = app.add_subcommand("subsolution",
      "fan subsolution construction and verification");
  subs->require_subcommand(1);
  auto* sfind = add_common(subs->add_subcommand("find",
      "search interior densities for an admissible fan subsolution"));
  sfind->add_option("--tol-eq", opt.tol_eq, "equation tolerance")
      ->check(CLI::PositiveNumber);
  sfind->add_option("--h0", opt.h0, "initial ladder step")
      ->check(CLI::Range(1e-12, 0.999999));
  auto* sverify = add_common(subs->add_subcommand("verify",
      "check a quintuple document against the full certificate"));
  sverify->add_option("--tol-eq", opt.tol_eq, "equation tolerance")
      ->check(CLI::PositiveNumber);

  auto* patch = add_common(app.add_subcommand("patch",
      "compose fan subsolution with the trailing exact 3-wave"));
  patch->add_option("--tol-eq", opt.tol_eq, "equation tolerance")
      ->check(CLI::PositiveNumber);
  patch->add_option("--h0", opt.h0, "initial ladder step")
      ->check(CLI::Range(1e-12, 0.999999));
  patch->add_option("--delta0", opt.delta0,
                    "initial pressure-step fraction of the delta ladder")
      ->check(CLI::Range(1e-12, 0.999999));

  auto* threshold = add_common(app.add_subcommand("threshold",
      "empirical lower edge of the construction window"));
  threshold->add_option("--tol-eq", opt.tol_eq, "equation tolerance")
      ->check(CLI::PositiveNumber);
  threshold->add_option("--h0", opt.h0, "initial ladder step")
      ->check(CLI::Range(1e-12, 0.999999));

  auto* curves = add_common(app.add_subcommand("curves",
      "p-v samples of the 1-wave and 3-wave curves"));
  curves->add_option("--samples", opt.samples, "number of pressure samples")
      ->check(CLI::Range(2, 1 << 22));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kParseError;
  }

  try {
    if (classify->parsed()) return cmd_classify(opt);
    if (solve1d->parsed()) return cmd_solve1d(opt);
    if (subs->parsed()) {
      if (sfind->parsed()) return cmd_subsolution_find(opt);
      if (sverify->parsed()) return cmd_subsolution_verify(opt);
    }
    if (patch->parsed()) return cmd_patch(opt);
    if (threshold->parsed()) return cmd_threshold(opt);
    if (curves->parsed()) return cmd_curves(opt);
  } catch (const io::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const vacuum_error& e) {
    std::cerr << "domain error (vacuum): " << e.what() << "\n";
    return kDomainError;
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const not_found_error& e) {
    std::cerr << "not found: " << e.what() << "\n";
    return kNotFound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}
