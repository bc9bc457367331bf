#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramcut::cli {

/// Collected output of one subcommand; the runner writes it out and digests it.
struct Invocation {
  std::ostringstream out;
  /// path -> bytes, in write order by path.
  std::map<std::string, std::string> files;
  std::optional<std::uint64_t> seed;
};

struct ConstantsParams {
  std::optional<unsigned> d;
  std::string q;
  bool table = false;
  unsigned max_d = 10;
  std::string format = "csv";
};

struct SectorSimParams {
  unsigned d = 3;
  std::string q = "2";
  std::uint64_t horizon = 0;
  std::uint64_t trajectories = 1;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string n;
  double s = 0.0;
  std::string samples;
};

struct SectorExactParams {
  unsigned d = 3;
  std::string q = "2";
  unsigned horizon = 0;
  std::optional<long> r_max;
  std::vector<long> start;
  bool use_float = false;
  std::string points;
};

struct AnalyzeParams {
  std::vector<std::string> graphs;
  std::string coloring;
  std::uint32_t start = 0;
  bool worst = false;
  unsigned horizon = 100;
  std::vector<double> eps{0.25};
  bool lazy = false;
  std::string mode = "auto";
  std::string profile;
  std::string report;
  bool no_spectral = false;
  double cutoff_eps = 0.25;
  std::optional<double> expect_second;
  double expect_tolerance = 1e-6;
  unsigned collision = 0;
};

struct CayleyParams {
  std::string generators;
  std::size_t cap = 1'000'000;
  std::string emit;
  bool symmetrize = false;
};

struct PredictParams {
  unsigned d = 3;
  std::string q = "2";
  std::string n;
  double s = 0.0;
};

void cmd_constants(const ConstantsParams& params, Invocation& inv);
void cmd_sector_sim(const SectorSimParams& params, Invocation& inv);
void cmd_sector_exact(const SectorExactParams& params, Invocation& inv);
void cmd_analyze(const AnalyzeParams& params, Invocation& inv);
void cmd_cayley(const CayleyParams& params, Invocation& inv);
void cmd_predict(const PredictParams& params, Invocation& inv);

/// Thrown when an optional assertion requested on the command line fails.
class AssertionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ramcut::cli
