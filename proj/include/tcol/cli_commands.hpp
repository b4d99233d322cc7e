#pragma once

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "tcol/collocation.hpp"
#include "tcol/fixtures.hpp"
#include "tcol/scattered.hpp"
#include "tcol/spectral.hpp"
#include "tcol/table_io.hpp"

namespace tcol::cli {

// Exit-code contract shared by all subcommands.
constexpr int kOk = 0;
constexpr int kUsageError = 1;
constexpr int kNumericalError = 2;

namespace detail {

inline int write_out(const io::Table& table, const std::string& out_path,
                     io::Format format, std::ostream& fallback) {
  if (out_path.empty()) {
    io::write_table(table, fallback, format);
    return kOk;
  }
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return kUsageError;
  }
  io::write_table(table, file, format);
  return kOk;
}

inline std::vector<Sample> load_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io::ParseError("cannot open samples file: " + path);
  return io::read_samples_csv(in);
}

}  // namespace detail

/// Per-sample derivative table up to total degree `order`.
inline int cmd_derivatives(const std::string& samples_path, int order,
                           const std::string& out_path, io::Format format,
                           std::ostream& out = std::cout,
                           std::ostream& err = std::cerr) {
  try {
    const std::vector<Sample> samples = detail::load_samples(samples_path);
    const std::vector<DerivativeVector> estimates =
        estimate_at_samples(samples, order);

    const int d = estimates.front().ordering.dimension();
    io::Table table;
    for (int i = 0; i < d; ++i) table.columns.push_back("x" + std::to_string(i + 1));
    std::vector<int> kept;
    for (int j = 0; j < estimates.front().ordering.size(); ++j) {
      if (estimates.front().ordering[j].degree() > order) continue;
      kept.push_back(j);
      table.columns.push_back("d" + io::order_to_string(estimates.front().ordering[j]));
    }
    for (std::size_t r = 0; r < estimates.size(); ++r) {
      std::vector<io::Table::Cell> row;
      for (int i = 0; i < d; ++i)
        row.push_back(io::Table::Cell::num(samples[r].point(i)));
      for (int j : kept) row.push_back(io::Table::Cell::num(estimates[r].values(j)));
      table.add_row(std::move(row));
    }
    return detail::write_out(table, out_path, format, out);
  } catch (const io::ParseError& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return kNumericalError;
  }
}

/// Evaluate requested derivative entries at query points.
inline int cmd_query(const std::string& samples_path, const std::string& queries_path,
                     const std::string& out_path, io::Format format,
                     std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    const std::vector<Sample> samples = detail::load_samples(samples_path);
    std::ifstream qin(queries_path);
    if (!qin) throw io::ParseError("cannot open queries file: " + queries_path);
    const std::vector<io::DerivativeRequestRaw> raw = io::read_queries_csv(qin);

    std::vector<DerivativeRequest> requests;
    requests.reserve(raw.size());
    for (const auto& r : raw) requests.push_back(DerivativeRequest{r.target, r.order});
    const std::vector<double> values = query_field(samples, requests);

    io::Table table;
    const int d = raw.empty() ? 0 : static_cast<int>(raw.front().target.size());
    for (int i = 0; i < d; ++i) table.columns.push_back("x" + std::to_string(i + 1));
    table.columns.push_back("order");
    table.columns.push_back("value");
    for (std::size_t r = 0; r < raw.size(); ++r) {
      std::vector<io::Table::Cell> row;
      for (int i = 0; i < d; ++i) row.push_back(io::Table::Cell::num(raw[r].target(i)));
      row.push_back(io::Table::Cell::str(io::order_to_string(raw[r].order)));
      row.push_back(io::Table::Cell::num(values[r]));
      table.add_row(std::move(row));
    }
    if (table.columns.size() < 3) table.columns = {"order", "value"};
    return detail::write_out(table, out_path, format, out);
  } catch (const io::ParseError& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return kNumericalError;
  }
}

/// Locate extrema of 1D value data on [lo, hi].
inline int cmd_extrema(const std::string& samples_path, double lo, double hi,
                       const std::string& out_path, io::Format format,
                       std::ostream& out = std::cout,
                       std::ostream& err = std::cerr) {
  try {
    if (!(lo < hi)) {
      err << "extrema: --lo must be below --hi\n";
      return kUsageError;
    }
    const std::vector<Sample> samples = detail::load_samples(samples_path);
    const std::vector<ExtremumReport> reports = find_extrema(samples, lo, hi);

    io::Table table;
    table.columns = {"location", "kind", "derivative_residual"};
    for (const ExtremumReport& r : reports) {
      table.add_row({io::Table::Cell::num(r.location),
                     io::Table::Cell::str(r.kind == ExtremumKind::Maximum
                                              ? "maximum"
                                              : "minimum"),
                     io::Table::Cell::num(r.derivative_residual)});
    }
    return detail::write_out(table, out_path, format, out);
  } catch (const io::ParseError& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return kNumericalError;
  }
}

namespace detail {

inline LinearBvp bvp_from_spec(const io::ProblemSpec& spec) {
  const double lo = spec.get_number("domain", "lo");
  const double hi = spec.get_number("domain", "hi");
  const int nodes = static_cast<int>(spec.get_number("domain", "nodes"));
  const double left = spec.get_number("domain", "left_value");
  const double right = spec.get_number("domain", "right_value");

  // The solved equation is f''(x) + s(x) = 0.
  const std::string source = spec.get_or("problem", "source", "constant");
  std::function<double(double)> s;
  if (source == "sin3") {
    s = [](double x) { return std::pow(std::sin(x), 3); };
  } else if (source == "constant") {
    const double c = spec.get_number_or("problem", "source_value", 0.0);
    s = [c](double) { return c; };
  } else {
    throw io::ParseError("problem spec: unknown source '" + source + "'");
  }

  LinearBvp bvp{NodeSet::uniform(lo, hi, nodes), {}, {}, left, right};
  bvp.coeff[2] = [](double) { return 1.0; };
  bvp.source = [s](double x) { return -s(x); };
  return bvp;
}

inline EigenProblem eigen_from_spec(const io::ProblemSpec& spec,
                                    const std::string& type) {
  const int nodes = static_cast<int>(spec.get_number_or("domain", "nodes", 14));
  if (type == "builtin:well") {
    return infinite_well_problem(nodes);
  }
  if (type == "builtin:poschl_teller") {
    const double k = spec.get_number("potential", "k");
    const double lam = spec.get_number("potential", "lambda");
    const double alpha =
        spec.get_number_or("potential", "alpha", std::numbers::pi / 2.0);
    return poschl_teller_problem(k, lam, alpha, nodes);
  }
  if (type == "builtin:trig") {
    const double v_a = spec.get_number("potential", "v_a");
    const double alpha = spec.get_number_or("potential", "alpha", 1.0);
    const double a_mass = spec.get_number_or("potential", "a", 1.0);
    return trigonometric_problem(v_a, alpha, a_mass, nodes);
  }
  throw io::ParseError("problem spec: unknown type '" + type + "'");
}

}  // namespace detail

/// Solve the BVP described by a problem-spec file.
inline int cmd_bvp(const std::string& spec_path, const std::string& out_path,
                   io::Format format, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  try {
    std::ifstream in(spec_path);
    if (!in) throw io::ParseError("cannot open problem spec: " + spec_path);
    const io::ProblemSpec spec = io::read_problem_spec(in);
    if (spec.get("problem", "type") != "bvp")
      throw io::ParseError("problem spec: type must be bvp");
    const LinearBvp bvp = detail::bvp_from_spec(spec);
    const Eigen::VectorXd solution = solve_linear_bvp(bvp);

    io::Table table;
    table.columns = {"x", "f"};
    for (int i = 0; i < bvp.nodes.size(); ++i)
      table.add_row({io::Table::Cell::num(bvp.nodes[i]),
                     io::Table::Cell::num(solution(i))});
    const io::Format fmt =
        out_path.empty() && spec.has("output", "format")
            ? io::parse_format(spec.get("output", "format"))
            : format;
    return detail::write_out(table, out_path, fmt, out);
  } catch (const io::ParseError& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return kNumericalError;
  }
}

/// Solve the eigenproblem described by a problem-spec file.
inline int cmd_eigen(const std::string& spec_path, int modes, bool validated,
                     const std::string& out_path, io::Format format,
                     std::ostream& out = std::cout,
                     std::ostream& err = std::cerr) {
  try {
    std::ifstream in(spec_path);
    if (!in) throw io::ParseError("cannot open problem spec: " + spec_path);
    const io::ProblemSpec spec = io::read_problem_spec(in);
    const std::string type = spec.get("problem", "type");
    const EigenProblem problem = detail::eigen_from_spec(spec, type);
    const int k =
        modes > 0 ? modes : static_cast<int>(spec.get_number_or("problem", "modes", 4));
    const Spectrum spectrum = validated ? solve_spectrum_validated(problem, k)
                                        : solve_spectrum(problem, k);

    io::Table table;
    const bool well = type == "builtin:well";
    table.columns = {"n", "eigenvalue"};
    if (well) table.columns.push_back("omega");
    table.columns.push_back("residual");
    for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
      std::vector<io::Table::Cell> row;
      row.push_back(io::Table::Cell::num(static_cast<double>(i + 1)));
      row.push_back(io::Table::Cell::num(spectrum.eigenvalues[i]));
      if (well)
        row.push_back(io::Table::Cell::num(
            std::sqrt(std::max(0.0, spectrum.eigenvalues[i]))));
      row.push_back(io::Table::Cell::num(spectrum.residuals[i]));
      table.add_row(std::move(row));
    }
    return detail::write_out(table, out_path, format, out);
  } catch (const io::ParseError& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return kNumericalError;
  }
}

namespace detail {

inline io::Table paper_table_1() {
  const std::vector<Sample> samples = fixtures::scatter21_samples();
  io::Table table;
  table.columns = {"x",        "y",        "f",        "fx_exact", "fx_calc",
                   "fx_delta", "fy_exact", "fy_calc",  "fy_delta"};
  for (const auto& row : fixtures::scatter21()) {
    Point q(2);
    q << row.x, row.y;
    const DerivativeVector d = solve_derivatives(assemble(q, samples));
    const double fx = d.values(1), fy = d.values(2);
    const double ex = fixtures::fx_sin_xy2(row.x, row.y);
    const double ey = fixtures::fy_sin_xy2(row.x, row.y);
    table.add_row({io::Table::Cell::num(row.x), io::Table::Cell::num(row.y),
                   io::Table::Cell::num(fixtures::f_sin_xy2(row.x, row.y)),
                   io::Table::Cell::num(ex), io::Table::Cell::num(fx),
                   io::Table::Cell::num((fx - ex) / ex), io::Table::Cell::num(ey),
                   io::Table::Cell::num(fy), io::Table::Cell::num((fy - ey) / ey)});
  }
  return table;
}

inline io::Table paper_table_2() {
  const std::vector<Sample> samples = fixtures::scatter21_samples();
  io::Table table;
  table.columns = {"x",      "y",       "f_exact",   "f_calc",  "f_delta",
                   "fxy_exact", "fxy_calc", "fxy_delta"};
  const MultiIndex mixed({1, 1});
  for (double x : {0.25, 0.5, 0.75}) {
    for (double y : {0.25, 0.5, 0.75}) {
      Point q(2);
      q << x, y;
      const DerivativeVector d = solve_derivatives(assemble(q, samples));
      const double f = d.values(0);
      const double fxy = d.entry(mixed);
      const double ef = fixtures::f_sin_xy2(x, y);
      const double exy = fixtures::fxy_sin_xy2(x, y);
      table.add_row({io::Table::Cell::num(x), io::Table::Cell::num(y),
                     io::Table::Cell::num(ef), io::Table::Cell::num(f),
                     io::Table::Cell::num((f - ef) / ef), io::Table::Cell::num(exy),
                     io::Table::Cell::num(fxy),
                     io::Table::Cell::num((fxy - exy) / exy)});
    }
  }
  return table;
}

inline io::Table paper_table_3() {
  LinearBvp bvp{NodeSet::uniform(0.0, 1.0, 14), {}, {}, 3.0, 2.0};
  bvp.coeff[2] = [](double) { return 1.0; };
  bvp.source = [](double x) { return -std::pow(std::sin(x), 3); };
  const Eigen::VectorXd solution = solve_linear_bvp(bvp);

  io::Table table;
  table.columns = {"x", "f_exact", "f_calc", "f_delta"};
  for (int i = 0; i < bvp.nodes.size(); ++i) {
    const double exact = fixtures::bvp_exact(bvp.nodes[i]);
    table.add_row({io::Table::Cell::num(bvp.nodes[i]), io::Table::Cell::num(exact),
                   io::Table::Cell::num(solution(i)),
                   io::Table::Cell::num((solution(i) - exact) / exact)});
  }
  return table;
}

inline io::Table paper_table_4() {
  io::Table table;
  table.columns = {"k",        "lambda",   "E1_exact", "E1_calc",
                   "E2_exact", "E2_calc",  "E3_exact", "E3_calc"};
  const std::vector<std::pair<double, double>> cases = {
      {2, 2}, {3, 2}, {2, 3}, {3, 3}, {10, 10}};
  for (const auto& [k, lam] : cases) {
    const EigenProblem problem =
        poschl_teller_problem(k, lam, std::numbers::pi / 2.0, 14);
    // the table indexes energies from n = 1; the n = 0 ground state is skipped
    const Spectrum spectrum = solve_spectrum(problem, 4);
    std::vector<io::Table::Cell> row = {io::Table::Cell::num(k),
                                        io::Table::Cell::num(lam)};
    for (int n = 1; n <= 3; ++n) {
      row.push_back(io::Table::Cell::num(poschl_teller_energy(k, lam, n)));
      row.push_back(io::Table::Cell::num(
          spectrum.eigenvalues[static_cast<std::size_t>(n)]));
    }
    table.add_row(std::move(row));
  }
  return table;
}

inline io::Table paper_table_5() {
  io::Table table;
  table.columns = {"V_a",      "E1_exact", "E1_calc", "E2_exact", "E2_calc",
                   "E3_exact", "E3_calc",  "E4_exact", "E4_calc"};
  for (double v_a : {1.0, 10.0, 50.0, 100.0, 1000.0}) {
    const EigenProblem problem = trigonometric_problem(v_a, 1.0, 1.0, 14);
    const Spectrum spectrum = solve_spectrum(problem, 4);
    std::vector<io::Table::Cell> row = {io::Table::Cell::num(v_a)};
    for (int n = 1; n <= 4; ++n) {
      row.push_back(io::Table::Cell::num(trigonometric_energy(v_a, 1.0, 1.0, n)));
      row.push_back(io::Table::Cell::num(
          spectrum.eigenvalues[static_cast<std::size_t>(n - 1)]));
    }
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace detail

/// Regenerate one of the five benchmark tables from the bundled fixtures.
inline int cmd_paper_tables(int table_index, const std::string& out_path,
                            io::Format format, std::ostream& out = std::cout,
                            std::ostream& err = std::cerr) {
  try {
    io::Table table;
    switch (table_index) {
      case 1: table = detail::paper_table_1(); break;
      case 2: table = detail::paper_table_2(); break;
      case 3: table = detail::paper_table_3(); break;
      case 4: table = detail::paper_table_4(); break;
      case 5: table = detail::paper_table_5(); break;
      default:
        err << "unknown table index: " << table_index << " (expected 1..5)\n";
        return kUsageError;
    }
    return detail::write_out(table, out_path, format, out);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return kNumericalError;
  }
}

}  // namespace tcol::cli
