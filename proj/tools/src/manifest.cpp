#include "ramcut/cli/manifest.hpp"

#include "ramcut/error.hpp"

#include <json.hpp>

#include <cstdio>

namespace ramcut::cli {

using nlohmann::json;

namespace {

std::string hex64(std::uint64_t value) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(value));
  return buffer;
}

json digest_json(const OutputDigest& d) { return {{"fnv1a64", hex64(d.fnv1a64)}, {"bytes", d.bytes}}; }

OutputDigest digest_from(const json& j) {
  OutputDigest d;
  d.fnv1a64 = std::stoull(j.at("fnv1a64").get<std::string>(), nullptr, 16);
  d.bytes = j.at("bytes").get<std::size_t>();
  return d;
}

}  // namespace

OutputDigest digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return {h, bytes.size()};
}

std::string to_json(const RunManifest& manifest) {
  json j;
  j["tool"] = "ramcut";
  j["version"] = manifest.tool_version;
  j["subcommand"] = manifest.subcommand;
  j["arguments"] = manifest.arguments;
  j["seed"] = manifest.seed ? json(*manifest.seed) : json(nullptr);
  j["environment"] = manifest.environment;
  j["stdout"] = digest_json(manifest.stdout_digest);
  json outputs = json::object();
  for (const auto& [path, d] : manifest.outputs) outputs[path] = digest_json(d);
  j["outputs"] = outputs;
  return j.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    RunManifest m;
    m.tool_version = j.at("version").get<std::string>();
    m.subcommand = j.at("subcommand").get<std::string>();
    m.arguments = j.at("arguments").get<std::vector<std::string>>();
    if (!j.at("seed").is_null()) m.seed = j.at("seed").get<std::uint64_t>();
    m.environment = j.at("environment").get<std::map<std::string, std::string>>();
    m.stdout_digest = digest_from(j.at("stdout"));
    for (const auto& [path, d] : j.at("outputs").items()) m.outputs[path] = digest_from(d);
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed manifest: ") + e.what(), 0);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed manifest digest: ") + e.what(), 0);
  }
}

}  // namespace ramcut::cli
