#include "helpers.hpp"

#include <fstream>

#include "sjgeo/cli.hpp"
#include "sjgeo/json_io.hpp"

using namespace sjgeo;

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "sjgeo");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  testing::internal::CaptureStdout();
  testing::internal::CaptureStderr();
  const int code = run_cli(static_cast<int>(argv.size()), argv.data());
  std::string out = testing::internal::GetCapturedStdout();
  testing::internal::GetCapturedStderr();
  return {code, out};
}

std::string write_file(const std::string& name, const std::string& text) {
  const std::string path = testing::TempDir() + "/" + name;
  std::ofstream(path) << text;
  return path;
}

std::string origin_point() {
  return to_json(DiskPoint{CMatrix(1, 1), CMatrix(1, 1)}).dump();
}

}  // namespace

TEST(Cli, VerifyAllPassesWithSeventeenReports) {
  const Result r = run({"verify", "all", "--n", "1", "--m", "1", "--samples", "50", "--seed", "42"});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 17u);
  for (const auto& rep : j) EXPECT_TRUE(rep["pass"].get<bool>()) << rep["check"];
}

TEST(Cli, VerifySingleCheck) {
  EXPECT_EQ(run({"verify", "cayley-roundtrip", "--n", "2", "--m", "1"}).code, 0);
}

TEST(Cli, FailedCheckExitsOne) {
  EXPECT_EQ(run({"verify", "lb-equivalence-disk", "--samples", "3", "--tol", "1e-30"}).code, 1);
}

TEST(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(run({"verify", "no-such-check"}).code, 2);
  EXPECT_EQ(run({"verify", "group-laws", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "group-laws", "--A", "-1"}).code, 2);
  EXPECT_EQ(run({"verify", "group-laws", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, EvalMetricAtOrigin) {
  const std::string point = write_file("origin.json", origin_point());
  const Tangent t{Model::disk, scalar_matrix(1.0), scalar_matrix(0.0)};
  const std::string tangent = write_file("tangent.json", to_json(t).dump());
  const Result r = run({"eval", "metric", "--point", point, "--tangent", tangent});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4\n");
}

TEST(Cli, EvalLaplacianOfAbsW2AtOrigin) {
  const std::string point = write_file("origin2.json", origin_point());
  const Result r = run({"eval", "laplacian", "--point", point, "--field", "absW2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NEAR(std::stod(r.out), 1.0, 1e-6);
}

TEST(Cli, EvalRejectsBadInput) {
  EXPECT_EQ(run({"eval", "metric", "--point", write_file("bad.json", "{\"model\": \"disk\", ")}).code, 2);
  const std::string outside =
      to_json(DiskPoint{scalar_matrix(1.5), CMatrix(1, 1)}).dump();
  EXPECT_EQ(run({"eval", "laplacian", "--point", write_file("outside.json", outside)}).code, 2);
  EXPECT_EQ(run({"eval", "laplacian", "--point", "/nonexistent/point.json"}).code, 2);
}

TEST(Cli, SampleIsDeterministicAndValid) {
  const Result a = run({"sample", "point", "--model", "disk", "--n", "2", "--m", "2", "--seed", "5"});
  const Result b = run({"sample", "point", "--model", "disk", "--n", "2", "--m", "2", "--seed", "5"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const DiskPoint d = disk_point_from_json(json::parse(a.out));
  EXPECT_GE(disk_margin(d.w), 0.1);

  const Result e = run({"sample", "element", "--model", "upper", "--n", "2", "--m", "1", "--seed", "5"});
  EXPECT_EQ(e.code, 0);
  const json j = json::parse(e.out);
  EXPECT_EQ(j["kind"], "jacobi");
}

TEST(Cli, CsvOutputToFile) {
  const std::string path = testing::TempDir() + "/report.csv";
  EXPECT_EQ(run({"verify", "theta-hom", "--samples", "3", "--format", "csv", "--out", path}).code, 0);
  std::ifstream f(path);
  std::string header, row;
  std::getline(f, header);
  std::getline(f, row);
  EXPECT_EQ(header.substr(0, 6), "check,");
  EXPECT_EQ(row.substr(0, 10), "theta-hom,");
}
