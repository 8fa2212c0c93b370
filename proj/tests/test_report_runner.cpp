#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "drivenq/report.hpp"
#include "drivenq/runner.hpp"
#include "json.hpp"

using namespace drivenq;
namespace fs = std::filesystem;

namespace {

ScenarioConfig short_config() {
  ScenarioConfig c;
  c.t_end = 2.0;
  c.samples = 9;
  return c;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("drivenq_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST(Report, InitialRowHasZeroDistances) {
  const SchemeReport r = build_scheme_report(short_config());
  ASSERT_EQ(r.distances.size(), 6u);
  for (const auto& d : r.distances) EXPECT_EQ(d.values.front(), 0.0);
}

TEST(Report, DefaultSchemesSeparate) {
  ScenarioConfig c;
  c.samples = 17;
  const SchemeReport r = build_scheme_report(c);
  for (Scheme s : {Scheme::s1, Scheme::s2, Scheme::s3}) {
    const auto& d = r.distance(Scheme::hamiltonian, s);
    for (std::size_t j = 1; j + 1 < r.times.size(); ++j) EXPECT_GT(d.values[j], 0.0) << to_string(s) << " t=" << r.times[j];
  }
}

TEST(Report, FreeParticleDegeneracy) {
  ScenarioConfig c = short_config();
  c.params.A = 0.0;
  c.schemes = {Scheme::hamiltonian, Scheme::s1, Scheme::s2};
  const SchemeReport r = build_scheme_report(c);
  for (const auto& d : r.distances)
    for (double v : d.values) EXPECT_LE(v, 1e-8);
}

TEST(Report, NormAndRobertsonColumns) {
  const SchemeReport r = build_scheme_report(short_config());
  for (const auto& s : r.schemes)
    for (const auto& m : s.moments) {
      EXPECT_NEAR(m.norm, 1.0, 1e-6);
      EXPECT_GE(m.sigma_x * m.sigma_v, 0.5 * (1.0 - 1e-9));
    }
}

TEST(Report, Scheme1MomentsFrozen) {
  const SchemeReport r = build_scheme_report(short_config());
  const auto& s1 = r.series(Scheme::s1);
  for (const auto& m : s1.moments) {
    EXPECT_NEAR(m.mean_v, s1.moments.front().mean_v, 1e-10);
    EXPECT_NEAR(m.sigma_v, s1.moments.front().sigma_v, 1e-10);
  }
}

TEST(Report, SerialAndParallelIdentical) {
  ReportOptions serial;
  serial.exec = Execution::serial;
  const SchemeReport a = build_scheme_report(short_config(), serial);
  const SchemeReport b = build_scheme_report(short_config());
  for (std::size_t s = 0; s < a.schemes.size(); ++s)
    for (std::size_t j = 0; j < a.times.size(); ++j) EXPECT_EQ(a.schemes[s].densities[j], b.schemes[s].densities[j]);
}

TEST(Report, AuditRowsFinite) {
  ReportOptions o;
  o.audit = true;
  const SchemeReport r = build_scheme_report(short_config(), o);
  EXPECT_GE(r.audit.size(), 10u);
  for (const auto& row : r.audit) {
    EXPECT_TRUE(std::isfinite(row.printed) && std::isfinite(row.derived) && std::isfinite(row.deviation)) << row.name;
  }
}

TEST(GridPlan, ConfiguredGridSufficientForShortRun) {
  ScenarioConfig c = short_config();
  c.schemes = {Scheme::hamiltonian, Scheme::s1};
  const GridPlan plan = plan_grid(c, {});
  EXPECT_TRUE(plan.sufficient);
  EXPECT_FALSE(plan.extended);
  EXPECT_TRUE(plan.warnings.empty());
}

TEST(GridPlan, Scheme3CompressionExtendsOrAborts) {
  ScenarioConfig c;
  c.schemes = {Scheme::s3};
  c.t_end = 6.0;
  const GridPlan plan = plan_grid(c, {});
  EXPECT_FALSE(plan.sufficient);
  EXPECT_TRUE(plan.extended);
  ASSERT_FALSE(plan.warnings.empty());
  EXPECT_NE(plan.warnings.front().find("S3"), std::string::npos);
  EXPECT_GE(plan.grid.k_max(), std::exp(3.0) * 8.0);
  ReportOptions strict;
  strict.allow_grid_extension = false;
  EXPECT_THROW(plan_grid(c, strict), NumericalError);
}

TEST(Runner, WritesThreeFiles) {
  const fs::path dir = scratch_dir("files");
  std::ostringstream log;
  EXPECT_EQ(run_scenario(short_config(), {dir, false, true}, log), kExitOk);
  for (const char* f : {"densities.csv", "moments.csv", "summary.json"}) EXPECT_TRUE(fs::exists(dir / f)) << f;
  std::ifstream dens(dir / "densities.csv");
  std::string header;
  std::getline(dens, header);
  EXPECT_EQ(header, "t,k,scheme,density");
  std::ifstream mom(dir / "moments.csv");
  std::getline(mom, header);
  EXPECT_EQ(header, "t,scheme,mean_x,mean_v,sigma_x,sigma_v,norm");
  const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
  EXPECT_EQ(summary.at("status"), 0);
  EXPECT_EQ(summary.at("distances").size(), 6u);
  fs::remove_all(dir);
}

TEST(Runner, Deterministic) {
  const fs::path a = scratch_dir("det_a"), b = scratch_dir("det_b");
  std::ostringstream log;
  ASSERT_EQ(run_scenario(short_config(), {a, true, true}, log), kExitOk);
  ASSERT_EQ(run_scenario(short_config(), {b, true, true}, log), kExitOk);
  for (const char* f : {"densities.csv", "moments.csv", "summary.json"}) EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(Runner, StrictFreeParticle) {
  ScenarioConfig c = short_config();
  c.params.A = 0.0;
  c.strict = true;
  c.schemes = {Scheme::hamiltonian, Scheme::s1, Scheme::s2};
  const fs::path dir = scratch_dir("strict");
  std::ostringstream log;
  EXPECT_EQ(run_scenario(c, {dir, false, true}, log), kExitOk) << log.str();
  const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
  bool saw_free = false;
  for (const auto& check : summary.at("strict").at("checks")) {
    EXPECT_TRUE(check.at("pass").get<bool>()) << check.dump();
    if (check.at("name").get<std::string>().rfind("free_particle", 0) == 0) saw_free = true;
  }
  EXPECT_TRUE(saw_free);
  fs::remove_all(dir);
}

TEST(Runner, StrictDrivenRunPasses) {
  ScenarioConfig c = short_config();
  c.strict = true;
  const fs::path dir = scratch_dir("strict_driven");
  std::ostringstream log;
  EXPECT_EQ(run_scenario(c, {dir, false, true}, log), kExitOk) << log.str();
  fs::remove_all(dir);
}

TEST(Runner, ExitCodes) {
  std::ostringstream log;
  ScenarioConfig bad = short_config();
  bad.samples = 1;
  EXPECT_EQ(run_scenario(bad, {scratch_dir("bad"), false, true}, log), kExitConfig);

  ScenarioConfig big;
  big.schemes = {Scheme::s3};
  big.t_end = 40.0;
  EXPECT_EQ(run_scenario(big, {scratch_dir("big"), false, false}, log), kExitNumerical);
  EXPECT_NE(log.str().find("S3"), std::string::npos);

  const fs::path file = scratch_dir("blocker");
  std::ofstream(file) << "x";
  EXPECT_EQ(run_scenario(short_config(), {file / "sub", false, true}, log), kExitIo);
  fs::remove(file);
}

TEST(Runner, OutputRootFromEnvironment) {
  ::setenv("DRIVENQ_OUT_ROOT", "/tmp/drivenq_root", 1);
  EXPECT_EQ(resolve_out_dir({}), fs::path("/tmp/drivenq_root/drivenq_out"));
  ::unsetenv("DRIVENQ_OUT_ROOT");
  EXPECT_EQ(resolve_out_dir({}), fs::path("drivenq_out"));
  EXPECT_EQ(resolve_out_dir({"/x/y", false, true}), fs::path("/x/y"));
}
