#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "csv_io.hpp"
#include "report.hpp"
#include "truncvar/truncvar.hpp"

using namespace truncvar;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("truncvar_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "truncvar");
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  double value(const std::string& key) const {
    return cli::parse_double(cli::report_value(cli::parse_report(out_.str()), key));
  }

  std::string p1() const { return write("p1.csv", "time,value\n0,0\n1,1\n2,0.2\n3,1.2\n4,0.2\n"); }
  std::string p3() const { return write("p3.csv", "0,5\n1,5\n"); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

std::vector<double> read_values(const std::string& path) {
  const auto p = cli::read_path_file(path);
  return {p.values().begin(), p.values().end()};
}

void expect_near_all(const std::vector<double>& got, const std::vector<double>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-12) << i;
}

}  // namespace

TEST(CsvIo, FormatRoundTrips) {
  SplitMix64 rng(77);
  for (int i = 0; i < 10000; ++i) {
    const double x = (rng.uniform() - 0.5) * std::pow(10.0, static_cast<int>(rng.next() % 40) - 20);
    EXPECT_EQ(cli::parse_double(cli::format_double(x)), x);
  }
  EXPECT_EQ(cli::format_double(0.1), "0.1");
  EXPECT_THROW(cli::parse_double("1.5x"), cli::CliError);
  EXPECT_THROW(cli::parse_double(""), cli::CliError);
}

TEST(CsvIo, HeaderCrlfAndBlankLines) {
  std::istringstream in("time,value\r\n0,1\r\n\r\n 1 , 2 \r\n");
  const auto p = cli::read_path_csv(in);
  EXPECT_EQ(p, make_path({0, 1}, {1, 2}));
  std::istringstream bare("0,1\n1,2\n");
  EXPECT_EQ(cli::read_path_csv(bare), p);
}

TEST(CsvIo, RejectsMalformedAndUnsorted) {
  for (const char* text : {"0,1\n1\n", "0,1,2\n", "a,b\n0,1\n", "1,0\n0,1\n", "", "time,value\n",
                           "0,nan\n", "0,1\n0,2\n"}) {
    std::istringstream in(text);
    try {
      cli::read_path_csv(in);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const cli::CliError& e) {
      EXPECT_EQ(e.code(), cli::ExitCode::MalformedInput) << text;
    }
  }
}

TEST_F(CliTest, TvGolden) {
  ASSERT_EQ(run({"tv", p1(), "-c", "0.6", "--oracle", "--prefix", file("prefix.csv")}), 0)
      << err_.str();
  EXPECT_NEAR(value("utv"), 0.8, 1e-12);
  EXPECT_NEAR(value("dtv"), 0.6, 1e-12);
  EXPECT_NEAR(value("tv"), 1.4, 1e-12);
  EXPECT_NEAR(value("oracle_tv"), 1.4, 1e-12);
  EXPECT_LE(value("oracle_max_abs_discrepancy"), 1e-9);
  EXPECT_EQ(value("samples"), 5);
  EXPECT_EQ(value("osc_norm"), 1.2);
  EXPECT_NEAR(value("total_variation"), 3.8, 1e-12);

  std::ifstream prefix(file("prefix.csv"));
  std::string header;
  std::getline(prefix, header);
  EXPECT_EQ(header, "time,utv,dtv,tv");
  std::vector<double> tv;
  for (std::string line; std::getline(prefix, line);) {
    tv.push_back(cli::parse_double(line.substr(line.rfind(',') + 1)));
  }
  expect_near_all(tv, {0, 0.4, 0.6, 1.0, 1.4});
}

TEST_F(CliTest, TvConstantPath) {
  ASSERT_EQ(run({"tv", p3(), "--level", "0.1"}), 0);
  EXPECT_EQ(value("utv"), 0.0);
  EXPECT_EQ(value("dtv"), 0.0);
  EXPECT_EQ(value("tv"), 0.0);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({"tv", p1(), "-c", "-1"}), 4);
  EXPECT_EQ(run({"tv", p1(), "-c", "0"}), 4);
  EXPECT_EQ(run({"tv", file("missing.csv"), "-c", "1"}), 5);
  EXPECT_EQ(run({"tv", write("bad.csv", "0,1\n1,x\n"), "-c", "1"}), 3);
  EXPECT_EQ(run({"tv", write("unsorted.csv", "1,1\n0,2\n"), "-c", "1"}), 3);
  EXPECT_EQ(run({}), 2);
  EXPECT_EQ(run({"frobnicate"}), 2);
  EXPECT_EQ(run({"tv", p1()}), 2);
  EXPECT_EQ(run({"gen", "--kind", "brownian", "-o", file("g.csv")}), 2);
  EXPECT_EQ(run({"gen", "--length", "5", "--scale", "-2", "-o", file("g.csv")}), 4);
  EXPECT_EQ(run({"sweep", p1(), "--levels", "0.5-1.5", "-o", file("s.csv")}), 2);
  EXPECT_EQ(run({"sweep", p1(), "--levels", "0:1:0.5", "-o", file("s.csv")}), 4);
  EXPECT_EQ(run({"approx", p1(), "-c", "0.6", "-o", file("no/such/dir/a.csv")}), 5);
  EXPECT_EQ(run({"--help"}), 0);
}

TEST_F(CliTest, ApproxVariants) {
  ASSERT_EQ(run({"approx", p1(), "-c", "0.6", "-o", file("a.csv")}), 0) << err_.str();
  expect_near_all(read_values(file("a.csv")), {0.3, 0.7, 0.5, 0.9, 0.5});
  EXPECT_NEAR(value("achieved_tv"), 1.4, 1e-12);
  EXPECT_NEAR(value("sup_error"), 0.3, 1e-12);

  ASSERT_EQ(run({"approx", p1(), "-c", "0.6", "-o", file("z.csv"), "--zero-start"}), 0);
  expect_near_all(read_values(file("z.csv")), {0, 0.4, 0.2, 0.6, 0.2});

  ASSERT_EQ(run({"approx", p3(), "-c", "0.1", "-o", file("c.csv")}), 0);
  expect_near_all(read_values(file("c.csv")), {5.05, 5.05});
}

TEST_F(CliTest, DecomposeGolden) {
  ASSERT_EQ(run({"decompose", p1(), "-c", "0.6", "--out-up", file("u.csv"), "--out-down",
                 file("d.csv")}),
            0);
  expect_near_all(read_values(file("u.csv")), {0, 0.4, 0.4, 0.8, 0.8});
  expect_near_all(read_values(file("d.csv")), {0, 0, 0.2, 0.2, 0.6});
  EXPECT_EQ(cli::report_value(cli::parse_report(out_.str()), "first_direction"), "up-first");
}

TEST_F(CliTest, SweepRamp) {
  const auto ramp = write("ramp.csv", "0,0\n1,1\n2,2\n");
  ASSERT_EQ(run({"sweep", ramp, "--levels", "0.5:1.5:0.5", "-o", file("s.csv")}), 0);
  std::ifstream in(file("s.csv"));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "c,tv");
  std::vector<double> tv;
  while (std::getline(in, line)) tv.push_back(cli::parse_double(line.substr(line.find(',') + 1)));
  EXPECT_EQ(tv, (std::vector<double>{1.5, 1.0, 0.5}));
}

TEST_F(CliTest, SkeletonAndGen) {
  ASSERT_EQ(run({"gen", "--kind", "ramp", "--length", "3", "-o", file("ramp.csv")}), 0);
  std::ifstream in(file("ramp.csv"));
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), "time,value\n0,0\n1,1\n2,2\n");

  const auto step = write("step.csv", "0,0\n1,0.1\n2,0.2\n3,1.0\n");
  ASSERT_EQ(run({"skeleton", step, "-c", "0.5", "-o", file("k.csv")}), 0);
  EXPECT_EQ(cli::read_path_file(file("k.csv")), make_path({0, 3}, {0, 1.0}));
}

TEST_F(CliTest, GenThenTvIsBitExact) {
  ASSERT_EQ(run({"gen", "--kind", "jump-mixture", "--length", "3000", "--seed", "99", "-o",
                 file("w.csv")}),
            0);
  GeneratorSpec spec{.kind = GeneratorKind::JumpMixture, .length = 3000, .seed = 99};
  const auto in_memory = generate(spec);
  EXPECT_EQ(cli::read_path_file(file("w.csv")), in_memory);

  ASSERT_EQ(run({"tv", file("w.csv"), "-c", "0.37"}), 0);
  const auto t = truncated_variation(in_memory, Level(0.37));
  EXPECT_EQ(value("utv"), t.utv);
  EXPECT_EQ(value("dtv"), t.dtv);
  EXPECT_EQ(value("tv"), t.tv);
}

TEST(RunReport, RendersAndParsesLosslessly) {
  cli::RunReport r;
  r.command = "tv";
  r.digest(make_path({0, 1, 2}, {0.1, 1.0 / 3.0, -2e-300}));
  r.levels = {0.7};
  r.add("utv", 1.0 / 7.0);
  r.add("dtv", 123456789.123456789);
  r.wall_ms = 0.25;
  std::ostringstream out;
  r.render(out);
  const auto parsed = cli::parse_report(out.str());
  EXPECT_EQ(cli::report_value(parsed, "command"), "tv");
  EXPECT_EQ(cli::parse_double(cli::report_value(parsed, "utv")), 1.0 / 7.0);
  EXPECT_EQ(cli::parse_double(cli::report_value(parsed, "dtv")), 123456789.123456789);
  EXPECT_EQ(cli::parse_double(cli::report_value(parsed, "osc_norm")), r.osc_norm);
  EXPECT_EQ(cli::parse_double(cli::report_value(parsed, "total_variation")), r.total_variation);
  EXPECT_EQ(cli::parse_double(cli::report_value(parsed, "level")), 0.7);
}

TEST(Corpus, OracleDiscrepancyOnShippedFiles) {
  std::size_t checked = 0;
  for (const auto& entry : fs::directory_iterator(TRUNCVAR_TEST_DATA_DIR)) {
    if (entry.path().extension() != ".csv") continue;
    const auto path = cli::read_path_file(entry.path());
    const double osc = osc_norm(path);
    for (double frac : {0.05, 0.2, 0.5, 1.0}) {
      const double c = osc > 0 ? frac * osc : 0.1;
      std::ostringstream out;
      std::ostringstream err;
      const std::vector<std::string> args{"truncvar", "tv", entry.path().string(), "-c",
                                          cli::format_double(c), "--oracle"};
      ASSERT_EQ(cli::run(args, out, err), 0) << err.str();
      const double gap = cli::parse_double(
          cli::report_value(cli::parse_report(out.str()), "oracle_max_abs_discrepancy"));
      EXPECT_LE(gap, 1e-9 * std::max(1.0, osc)) << entry.path();
    }
    ++checked;
  }
  EXPECT_GE(checked, 4u);
}
