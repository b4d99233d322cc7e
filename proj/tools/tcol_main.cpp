#include <string>

#include <CLI11.hpp>

#include "tcol/cli_commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Meshfree Taylor-collocation toolkit"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format_name = "csv";

  auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "Output file (default: stdout)");
    cmd->add_option("--format", format_name, "csv | json | md")
        ->check(CLI::IsMember({"csv", "json", "md"}));
  };

  std::string samples_path, queries_path, spec_path;
  int order = 1;
  double lo = 0.0, hi = 1.0;
  int modes = 0;
  bool validated = false;
  int table_index = 0;

  CLI::App* derivatives =
      app.add_subcommand("derivatives", "Derivative table at the sample points");
  derivatives->add_option("samples", samples_path, "Samples CSV")->required();
  derivatives->add_option("--order", order, "Maximum total derivative order");
  add_output_flags(derivatives);

  CLI::App* query =
      app.add_subcommand("query", "Evaluate values/derivatives at query points");
  query->add_option("samples", samples_path, "Samples CSV")->required();
  query->add_option("queries", queries_path, "Queries CSV")->required();
  add_output_flags(query);

  CLI::App* extrema =
      app.add_subcommand("extrema", "Locate extrema of 1D value data");
  extrema->add_option("samples", samples_path, "Samples CSV")->required();
  extrema->add_option("--lo", lo, "Interval lower bound")->required();
  extrema->add_option("--hi", hi, "Interval upper bound")->required();
  add_output_flags(extrema);

  CLI::App* bvp = app.add_subcommand("bvp", "Solve a linear two-point BVP");
  bvp->add_option("spec", spec_path, "Problem spec file")->required();
  add_output_flags(bvp);

  CLI::App* eigen = app.add_subcommand("eigen", "Solve a 1D eigenvalue problem");
  eigen->add_option("spec", spec_path, "Problem spec file")->required();
  eigen->add_option("--modes", modes, "Number of modes (overrides the spec)");
  eigen->add_flag("--validated", validated,
                  "Drop modes that do not survive grid refinement");
  add_output_flags(eigen);

  CLI::App* tables =
      app.add_subcommand("paper-tables", "Regenerate a benchmark table");
  tables->add_option("--table", table_index, "Table index 1..5")->required();
  add_output_flags(tables);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tcol::cli::kUsageError;
  }

  const tcol::io::Format format = tcol::io::parse_format(format_name);
  if (derivatives->parsed())
    return tcol::cli::cmd_derivatives(samples_path, order, out_path, format);
  if (query->parsed())
    return tcol::cli::cmd_query(samples_path, queries_path, out_path, format);
  if (extrema->parsed())
    return tcol::cli::cmd_extrema(samples_path, lo, hi, out_path, format);
  if (bvp->parsed()) return tcol::cli::cmd_bvp(spec_path, out_path, format);
  if (eigen->parsed())
    return tcol::cli::cmd_eigen(spec_path, modes, validated, out_path, format);
  if (tables->parsed())
    return tcol::cli::cmd_paper_tables(table_index, out_path, format);
  return tcol::cli::kUsageError;
}
