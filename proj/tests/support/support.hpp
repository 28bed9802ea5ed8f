#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "corpex/corpus.hpp"
#include "corpex/index.hpp"
#include "corpex/node.hpp"
#include "corpex/scope.hpp"
#include "oracles/brute_force.hpp"

namespace support {

std::filesystem::path data_path(const std::string& name);
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

std::vector<corpex::ParsedDocument> fixture_docs();
/// Built once and shared.
const corpex::Index& fixture_index();
/// Documents d1, d2 and d4.
corpex::Scope fixture_focus();

oracle::Node to_oracle(const corpex::NodeSpec& node);
std::set<std::size_t> doc_set(const corpex::Scope& scope);

/// Fresh directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  ScratchDir();
  ~ScratchDir();
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

/// Changes the working directory for the lifetime of the object.
class WorkingDir {
 public:
  explicit WorkingDir(const std::filesystem::path& dir);
  ~WorkingDir();

 private:
  std::filesystem::path previous_;
};

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

/// Runs the command line in-process; "corpex" is prepended.
CliResult run_cli(std::vector<std::string> args);

/// Synthetic vertical text with a Zipf-like vocabulary, used for timing.
std::string synthetic_vertical(std::size_t tokens, std::size_t docs, unsigned seed);

}  // namespace support
