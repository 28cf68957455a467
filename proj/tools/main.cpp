#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hcyl/errors.hpp"
#include "hcyl/run.hpp"

namespace {

enum ExitCode : int { kOk = 0, kFailure = 1, kConfig = 2, kNumeric = 3, kVerify = 4 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Series solution of an axially loaded hollow elastic cylinder"};
  std::string config;
  std::string output_dir;
  std::string grid;
  int modes = -1;
  bool verify = false;
  bool quiet = false;
  app.add_option("--config", config, "Configuration file (key = value)")->required();
  app.add_option("--output-dir", output_dir, "Directory for the output files");
  app.add_flag("--verify", verify, "Cross-check modes k = 1, 3, 5 against the finite-difference oracle");
  app.add_option("--modes", modes, "Last mode index M (modes k = 1, 3, ..., 2M+1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--grid", grid, "Sampling grid NRxNZ, e.g. 200x600");
  app.add_flag("-q,--quiet", quiet, "No progress output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every other command-line problem is a configuration error
    return app.exit(e) == 0 ? kOk : kConfig;
  }

  try {
    auto spec = hcyl::parse_config(config);
    if (!output_dir.empty()) spec.output_dir = output_dir;
    if (verify) spec.verify = true;
    if (modes > 0) {
      spec.M = modes;
      spec.target_l2_u1.reset();
      spec.target_l2_u3.reset();
    }
    if (!grid.empty()) std::tie(spec.grid_nrho, spec.grid_nz) = hcyl::parse_grid(grid);
    spec.validate();

    const auto start = std::chrono::steady_clock::now();
    const auto result = hcyl::run(spec, quiet ? nullptr : &std::cerr);
    if (!quiet) {
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      for (const auto& e : result.extrema) {
        std::cout << e.quantity << ": max |.| = " << e.max_abs << " at rho = " << e.rho
                  << " m, z = " << e.z << " m\n";
      }
      std::cerr << "done in " << seconds << " s\n";
    }
    return kOk;
  } catch (const hcyl::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const hcyl::DomainError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const hcyl::NumericError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const hcyl::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
