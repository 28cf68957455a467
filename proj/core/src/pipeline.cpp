#include "hcyl/pipeline.hpp"

#include <cmath>
#include <optional>

#include "hcyl/errors.hpp"
#include "hcyl/parallel.hpp"

namespace hcyl {

SolvedModes solve_modes(int M, const ElasticMaterial& material, const CylinderGeometry& geom,
                        const AxialLoad& load, const PipelineOptions& options) {
  if (M < 0) throw DomainError("mode count must be non-negative");
  geom.validate();
  const auto count = static_cast<std::size_t>(M) + 1;
  std::vector<std::optional<ModeSolution>> solved(count);
  std::vector<ModeRecord> records(count);

  SeriesOrderOptions order_options;
  order_options.ceiling = options.N_ceiling;
  order_options.grid = options.truncation_grid;

  parallel_for(
      count,
      [&](std::size_t m) {
        const int k = 2 * static_cast<int>(m) + 1;
        const auto choice = select_series_order(k, options.epsilon_tol, material, geom, order_options);
        ModeOptions mode_options;
        mode_options.extended_precision = options.extended_precision;
        mode_options.bound = std::exp(choice.log_bound);
        solved[m].emplace(solve_mode(k, material, geom, load, choice.order, mode_options));
        records[m] = {k,
                      choice.order,
                      mode_options.bound,
                      choice.log_bound,
                      choice.denominator,
                      solved[m]->condition(),
                      k == 1};
      },
      options.threads);

  SolvedModes out;
  out.set.material = material;
  out.set.geom = geom;
  out.set.load = load;
  out.set.modes.reserve(count);
  for (auto& s : solved) {
    for (const auto& w : s->warnings()) out.warnings.push_back(w);
    out.set.modes.push_back(std::move(*s));
  }
  out.report.M = M;
  out.report.epsilon_tol = options.epsilon_tol;
  out.report.modes = std::move(records);
  if (M >= 1) {
    const auto tails = l2_tail_bounds(M, material, geom, load);
    out.report.l2_bound_u1 = tails.u1;
    out.report.l2_bound_u3 = tails.u3;
  }
  return out;
}

}  // namespace hcyl
