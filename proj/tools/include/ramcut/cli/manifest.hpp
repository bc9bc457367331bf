#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ramcut::cli {

struct OutputDigest {
  std::uint64_t fnv1a64 = 0;
  std::size_t bytes = 0;
};

/// Everything needed to re-run a subcommand and check that it reproduced.
struct RunManifest {
  std::string tool_version;
  std::string subcommand;
  /// Arguments after the program name, with --manifest removed.
  std::vector<std::string> arguments;
  std::optional<std::uint64_t> seed;
  /// RAMCUT_* environment variables in effect.
  std::map<std::string, std::string> environment;
  OutputDigest stdout_digest;
  /// Output path -> digest of the bytes written there.
  std::map<std::string, OutputDigest> outputs;
};

OutputDigest digest(const std::string& bytes);

std::string to_json(const RunManifest& manifest);
/// Throws ParseError on malformed manifests.
RunManifest manifest_from_json(const std::string& text);

}  // namespace ramcut::cli
