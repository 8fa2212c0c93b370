#pragma once

// Scheme comparison: evolves the Hamiltonian solution and the three
// constant-of-motion solutions from one initial packet and tabulates
// densities, moments, pairwise density distances and the audit of the
// published closed forms.

#include <string>
#include <vector>

#include "drivenq/characteristics.hpp"
#include "drivenq/config.hpp"
#include "drivenq/core.hpp"
#include "drivenq/observables.hpp"

namespace drivenq {

struct SchemeSeries {
  Scheme scheme;
  std::vector<RVector> densities;  // on SchemeReport::output_k, one row per sample
  std::vector<MomentSet> moments;  // one per sample
};

struct DistanceSeries {
  Scheme a;
  Scheme b;
  RVector values;  // one per sample
};

/// One published-versus-derived comparison. All three numbers are finite.
struct AuditRow {
  std::string name;
  std::string quantity;
  double t = 0.0;
  double printed = 0.0;
  double derived = 0.0;
  double deviation = 0.0;
};

/// Working grid chosen for a scenario, plus why it differs from the configured one.
struct GridPlan {
  MomentumGrid grid;
  bool extended = false;
  bool sufficient = true;  // configured grid covers every selected scheme
  double required_k_min = 0.0;
  double required_k_max = 0.0;
  double required_spacing = 0.0;
  std::vector<std::string> warnings{};
};

struct ReportOptions {
  bool allow_grid_extension = true;
  bool audit = false;
  std::size_t max_grid_points = std::size_t{1} << 20;
  Execution exec = Execution::parallel;
};

struct SchemeReport {
  GridPlan plan;
  RVector times{};
  RVector output_k{};  // decimated working grid used for density output
  std::vector<SchemeSeries> schemes{};
  std::vector<DistanceSeries> distances{};  // every selected pair, a before b in config order
  std::vector<AuditRow> audit{};

  const SchemeSeries& series(Scheme s) const;
  const DistanceSeries& distance(Scheme a, Scheme b) const;
};

/// Affine problem for a selected scheme (derived variant).
AffineProblem scheme_problem_for(Scheme scheme, const PhysicalParams& params, Profile initial);

/// Support: every k whose characteristic foot lies within k0 +- 8 sigma_k at any
/// sample time. Resolution: the largest phase slope on that support plus the
/// packet's position half-width must stay below pi / dk. Throws NumericalError
/// when the grid is insufficient and extension is disabled or would exceed
/// max_grid_points.
GridPlan plan_grid(const ScenarioConfig& config, const ReportOptions& options);

SchemeReport build_scheme_report(const ScenarioConfig& config, const ReportOptions& options = {});

/// Published-versus-derived audit rows; the Hamiltonian closed form on the configured grid, the rest on `grid`.
std::vector<AuditRow> build_audit(const ScenarioConfig& config, const MomentumGrid& grid);

}  // namespace drivenq
