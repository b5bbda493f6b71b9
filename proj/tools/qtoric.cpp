// qtoric: command-line front end. See docs/formats.md for the file formats.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qtoric/commands.hpp"

using namespace qtoric;

int main(int argc, char** argv) {
  CLI::App app{"Exact equivariant quantum cohomology of smooth semi-projective toric varieties"};
  app.require_subcommand(1);

  std::string cutoff_text = "6", omega_text, out_path, k_text, l_text;
  bool no_cache = false, timing = false, no_connection = false, serial = false;
  std::string fan_path;

  auto add_common = [&](CLI::App* sub, bool with_cutoff) {
    sub->add_option("fanfile", fan_path, "Fan description (JSON)")->required();
    if (with_cutoff)
      sub->add_option("--cutoff", cutoff_text, "Keep degrees with omega.d <= cutoff (rational)")
          ->capture_default_str();
    sub->add_option("--omega", omega_text, "Grading override, e.g. 1/3,1/3,1/3");
    sub->add_option("--out", out_path, "Write the report here instead of stdout");
    sub->add_flag("--no-cache", no_cache, "Neither read nor write the cache");
    sub->add_flag("--timing", timing, "Add wall-clock timing to the report");
    sub->add_flag("--serial", serial, "Run kernels on one thread");
  };

  add_common(app.add_subcommand("check", "Validate a fan and print its fixed-point data"), false);
  add_common(app.add_subcommand("ifun", "I-function coefficients"), true);
  add_common(app.add_subcommand("flowcheck", "Check D_i I = S_i I for every divisor"), true);
  auto* shift = app.add_subcommand("shift", "Shift operator table and composition law");
  add_common(shift, false);
  shift->add_option("--k", k_text, "Cocharacter k, one integer per ray")->required();
  shift->add_option("--l", l_text, "Second cocharacter; checks S_k S_l = Q^d(k,l) S_{k+l}");
  auto* mirror = app.add_subcommand("mirror", "Birkhoff factorization, mirror map, Seidel check");
  add_common(mirror, true);
  mirror->add_flag("--no-connection", no_connection, "Skip the connection matrices");
  add_common(app.add_subcommand("qcheck", "Quantum relation on projective space"), true);

  CLI11_PARSE(app, argc, argv);

  CommandOptions opts;
  opts.command = app.get_subcommands().front()->get_name();
  opts.fan_path = fan_path;
  opts.use_cache = !no_cache;
  opts.timing = timing;
  opts.connection = !no_connection;
  opts.exec = serial ? Execution::serial : Execution::parallel;
  try {
    opts.cutoff = parse_rational(cutoff_text);
    if (!omega_text.empty())
      opts.omega = parse_rational_vector(omega_text);
    if (!k_text.empty())
      opts.k = parse_integer_vector(k_text);
    if (!l_text.empty())
      opts.l = parse_integer_vector(l_text);
  } catch (const Error& e) {
    std::cerr << "qtoric: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  }

  CommandResult r = run_command(opts);
  for (const auto& w : r.warnings)
    std::cerr << "qtoric: warning: " << w << "\n";
  if (r.report.contains("error"))
    std::cerr << "qtoric: " << r.report["error"]["code"].get<std::string>() << ": "
              << r.report["error"]["message"].get<std::string>() << "\n";

  const std::string text = dump_report(r.report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) {
      std::cerr << "qtoric: cannot write " << out_path << "\n";
      return 2;
    }
  }
  return r.exit_code;
}
