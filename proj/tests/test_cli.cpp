#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "tcol/cli_commands.hpp"

using namespace tcol;
namespace fs = std::filesystem;

namespace {

const fs::path kData = TCOL_TEST_DATA_DIR;

fs::path temp_file(const std::string& name, const std::string& contents) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << contents;
  return path;
}

std::string run_to_string(int& code, auto&& fn) {
  std::ostringstream out, err;
  code = fn(out, err);
  return out.str();
}

}  // namespace

TEST_CASE("derivatives command emits the 21-row gradient table") {
  int code = 0;
  const std::string csv = run_to_string(code, [&](auto& out, auto& err) {
    return cli::cmd_derivatives((kData / "table1_samples.csv").string(), 1, "",
                                io::Format::Csv, out, err);
  });
  CHECK(code == cli::kOk);
  CHECK(csv.substr(0, csv.find('\n')) == "x1,x2,d0:0,d1:0,d0:1");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 22);  // header + 21 rows
}

TEST_CASE("derivatives on a single sample with order 0 echoes the value") {
  const fs::path path =
      temp_file("tcol_single.csv", "x1,kind,order,value\n0.5,value,,42.0\n");
  int code = 0;
  const std::string csv = run_to_string(code, [&](auto& out, auto& err) {
    // a single sample cannot seed estimate_at_samples; use query instead
    const fs::path q = temp_file("tcol_single_q.csv", "x1,order\n0.5,0\n");
    return cli::cmd_query(path.string(), q.string(), "", io::Format::Csv, out, err);
  });
  CHECK(code == cli::kOk);
  CHECK(csv.find("42") != std::string::npos);
}

TEST_CASE("derivatives with duplicate points exits 2 and names them") {
  const fs::path path = temp_file(
      "tcol_dup.csv",
      "x1,kind,order,value\n0.5,value,,1.0\n0.5,value,,2.0\n0.7,value,,3.0\n");
  std::ostringstream out, err;
  const int code =
      cli::cmd_derivatives(path.string(), 1, "", io::Format::Csv, out, err);
  CHECK(code == cli::kNumericalError);
  CHECK(err.str().find("0.5") != std::string::npos);
}

TEST_CASE("query command reproduces the benchmark grid") {
  int code = 0;
  const std::string csv = run_to_string(code, [&](auto& out, auto& err) {
    return cli::cmd_query((kData / "table1_samples.csv").string(),
                          (kData / "grid_queries.csv").string(), "",
                          io::Format::Csv, out, err);
  });
  CHECK(code == cli::kOk);
  // value at (0.5, 0.5) ~ 0.124621 appears in the output
  CHECK(csv.find("0.12462") != std::string::npos);
  // mixed derivative at (0.75, 0.75) ~ 1.10065
  CHECK(csv.find("1.1006") != std::string::npos);
}

TEST_CASE("query at a sample point returns its value") {
  const fs::path q = temp_file("tcol_q1.csv", "x1,x2,order\n0.44,0.89,0:0\n");
  int code = 0;
  const std::string csv = run_to_string(code, [&](auto& out, auto& err) {
    return cli::cmd_query((kData / "table1_samples.csv").string(), q.string(),
                          "", io::Format::Csv, out, err);
  });
  CHECK(code == cli::kOk);
  CHECK(csv.find("0.34151092") != std::string::npos);
}

TEST_CASE("empty queries file produces an empty table and exit 0") {
  const fs::path q = temp_file("tcol_q_empty.csv", "x1,x2,order\n");
  std::ostringstream out, err;
  const int code = cli::cmd_query((kData / "table1_samples.csv").string(),
                                  q.string(), "", io::Format::Csv, out, err);
  CHECK(code == cli::kOk);
  CHECK(out.str().find("order,value") != std::string::npos);
}

TEST_CASE("extrema command finds the two elliptic extrema") {
  int code = 0;
  const std::string csv = run_to_string(code, [&](auto& out, auto& err) {
    return cli::cmd_extrema((kData / "sn_samples.csv").string(), 1.0, 7.0, "",
                            io::Format::Csv, out, err);
  });
  CHECK(code == cli::kOk);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + 2 rows
  CHECK(csv.find("maximum") != std::string::npos);
  CHECK(csv.find("minimum") != std::string::npos);
}

TEST_CASE("extrema with an empty interval is a usage error") {
  std::ostringstream out, err;
  const int code = cli::cmd_extrema((kData / "sn_samples.csv").string(), 7.0,
                                    1.0, "", io::Format::Csv, out, err);
  CHECK(code == cli::kUsageError);
}

TEST_CASE("extrema on monotone data emits zero rows") {
  const fs::path path = temp_file(
      "tcol_mono.csv",
      "x1,kind,order,value\n0,value,,0\n0.5,value,,0.5\n1,value,,1\n");
  int code = 0;
  const std::string csv = run_to_string(code, [&](auto& out, auto& err) {
    return cli::cmd_extrema(path.string(), 0.0, 1.0, "", io::Format::Csv, out, err);
  });
  CHECK(code == cli::kOk);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1);  // header only
}

TEST_CASE("bvp command solves the benchmark problem") {
  int code = 0;
  const std::string csv = run_to_string(code, [&](auto& out, auto& err) {
    return cli::cmd_bvp((kData / "bvp_sin3.ini").string(), "", io::Format::Csv,
                        out, err);
  });
  CHECK(code == cli::kOk);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 15);  // header + 14 nodes
  CHECK(csv.find("2.9261") != std::string::npos);
}

TEST_CASE("bvp spec missing boundary data exits 1 naming the field") {
  const fs::path path = temp_file(
      "tcol_bad_bvp.ini",
      "[problem]\ntype = bvp\n[domain]\nlo = 0\nhi = 1\nnodes = 5\nleft_value = 0\n");
  std::ostringstream out, err;
  const int code = cli::cmd_bvp(path.string(), "", io::Format::Csv, out, err);
  CHECK(code == cli::kUsageError);
  CHECK(err.str().find("right_value") != std::string::npos);
}

TEST_CASE("bvp with zero source gives the straight line") {
  const fs::path path = temp_file(
      "tcol_laplace.ini",
      "[problem]\ntype = bvp\nsource = constant\nsource_value = 0\n"
      "[domain]\nlo = 0\nhi = 1\nnodes = 5\nleft_value = 0\nright_value = 1\n");
  int code = 0;
  const std::string csv = run_to_string(code, [&](auto& out, auto& err) {
    return cli::cmd_bvp(path.string(), "", io::Format::Csv, out, err);
  });
  CHECK(code == cli::kOk);
  CHECK(csv.find("0.25,0.25") != std::string::npos);
}

TEST_CASE("eigen command on the well spec") {
  int code = 0;
  const std::string csv = run_to_string(code, [&](auto& out, auto& err) {
    return cli::cmd_eigen((kData / "well.ini").string(), 0, false, "",
                          io::Format::Csv, out, err);
  });
  CHECK(code == cli::kOk);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  CHECK(csv.find("3.1415926") != std::string::npos);
}

TEST_CASE("eigen command on the Poeschl-Teller spec") {
  int code = 0;
  const std::string csv = run_to_string(code, [&](auto& out, auto& err) {
    return cli::cmd_eigen((kData / "poschl_teller_22.ini").string(), 0, false,
                          "", io::Format::Csv, out, err);
  });
  CHECK(code == cli::kOk);
  CHECK(csv.find("18.00") != std::string::npos);
}

TEST_CASE("eigen command on the trigonometric spec") {
  int code = 0;
  const std::string csv = run_to_string(code, [&](auto& out, auto& err) {
    return cli::cmd_eigen((kData / "trig_1000.ini").string(), 2, false, "",
                          io::Format::Csv, out, err);
  });
  CHECK(code == cli::kOk);
  CHECK(csv.find("104.40") != std::string::npos);
}

TEST_CASE("paper-tables command") {
  for (int index = 1; index <= 5; ++index) {
    std::ostringstream out, err;
    const int code =
        cli::cmd_paper_tables(index, "", io::Format::Csv, out, err);
    CHECK(code == cli::kOk);
    CHECK(!out.str().empty());
  }
  std::ostringstream out, err;
  CHECK(cli::cmd_paper_tables(9, "", io::Format::Csv, out, err) ==
        cli::kUsageError);
}

TEST_CASE("markdown format trims to display precision") {
  int code = 0;
  const std::string md = run_to_string(code, [&](auto& out, auto& err) {
    return cli::cmd_paper_tables(3, "", io::Format::Markdown, out, err);
  });
  CHECK(code == cli::kOk);
  CHECK(md.find("| 2.92611 |") != std::string::npos);
}

TEST_CASE("the installed binary wires the subcommands") {
  const std::string cmd = std::string(TCOL_CLI_PATH) + " paper-tables --table 3 > " +
                          (fs::temp_directory_path() / "tcol_t3.csv").string();
  CHECK(std::system(cmd.c_str()) == 0);
  std::ifstream in(fs::temp_directory_path() / "tcol_t3.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,f_exact,f_calc,f_delta");
}
