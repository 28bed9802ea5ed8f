#include "corpex/error.hpp"

namespace corpex {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedLine: return "MalformedLine";
    case Errc::UnclosedDoc: return "UnclosedDoc";
    case Errc::DuplicateDocId: return "DuplicateDocId";
    case Errc::BadArity: return "BadArity";
    case Errc::NonAlphabetic: return "NonAlphabetic";
    case Errc::EmptyCorpus: return "EmptyCorpus";
    case Errc::BadMagic: return "BadMagic";
    case Errc::VersionMismatch: return "VersionMismatch";
    case Errc::TruncatedFile: return "TruncatedFile";
    case Errc::CorruptFile: return "CorruptFile";
    case Errc::EmptyScope: return "EmptyScope";
    case Errc::QuerySyntax: return "QuerySyntax";
    case Errc::ZeroCorpus: return "ZeroCorpus";
    case Errc::BadSmoothing: return "BadSmoothing";
    case Errc::ZeroCooccurrence: return "ZeroCooccurrence";
    case Errc::NodeAbsent: return "NodeAbsent";
    case Errc::UntaggedScope: return "UntaggedScope";
    case Errc::UnknownFormat: return "UnknownFormat";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message,
             std::optional<std::uint64_t> location)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      location_(location) {}

}  // namespace corpex
