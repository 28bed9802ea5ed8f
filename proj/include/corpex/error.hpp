#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace corpex {

enum class Errc {
  MalformedLine,
  UnclosedDoc,
  DuplicateDocId,
  BadArity,
  NonAlphabetic,
  EmptyCorpus,
  BadMagic,
  VersionMismatch,
  TruncatedFile,
  CorruptFile,
  EmptyScope,
  QuerySyntax,
  ZeroCorpus,
  BadSmoothing,
  ZeroCooccurrence,
  NodeAbsent,
  UntaggedScope,
  UnknownFormat,
  Io,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure in the library surfaces as this exception. `location` is a
/// 1-based line number for parse errors and a 0-based character offset for
/// query syntax errors; it is empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<std::uint64_t> location = std::nullopt);

  Errc code() const noexcept { return code_; }
  std::optional<std::uint64_t> location() const noexcept { return location_; }

 private:
  Errc code_;
  std::optional<std::uint64_t> location_;
};

}  // namespace corpex
