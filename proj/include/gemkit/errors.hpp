#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gemkit {

enum class Errc {
  InvalidDimension,
  InvalidVertex,
  InvalidColor,
  LoopEdge,
  DuplicateColorAtVertex,
  MissingNonFinalColor,
  Disconnected,
  OddBoundaryCount,
  NonPositiveH,
  SamplingExhausted,
  NoBoundary,
  InternalInconsistency,
  NotRegular,
  NotADipole,
  WeldMismatch,
  NoSuchEdge,
  NonIntegralGenusForBipartite,
  Dimension,
  Precondition,
  ResidueShape,
  InvalidColorPair,
  ParseError,
  IoError,
  StoreCorrupt,
};

std::string_view errc_name(Errc code);

// Single exception type for the library; the code identifies the failure.
class GemError : public std::runtime_error {
 public:
  GemError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidDimension: return "InvalidDimension";
    case Errc::InvalidVertex: return "InvalidVertex";
    case Errc::InvalidColor: return "InvalidColor";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateColorAtVertex: return "DuplicateColorAtVertex";
    case Errc::MissingNonFinalColor: return "MissingNonFinalColor";
    case Errc::Disconnected: return "Disconnected";
    case Errc::OddBoundaryCount: return "OddBoundaryCount";
    case Errc::NonPositiveH: return "NonPositiveH";
    case Errc::SamplingExhausted: return "SamplingExhausted";
    case Errc::NoBoundary: return "NoBoundary";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NotADipole: return "NotADipole";
    case Errc::WeldMismatch: return "WeldMismatch";
    case Errc::NoSuchEdge: return "NoSuchEdge";
    case Errc::NonIntegralGenusForBipartite: return "NonIntegralGenusForBipartite";
    case Errc::Dimension: return "Dimension";
    case Errc::Precondition: return "Precondition";
    case Errc::ResidueShape: return "ResidueShape";
    case Errc::InvalidColorPair: return "InvalidColorPair";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
    case Errc::StoreCorrupt: return "StoreCorrupt";
  }
  return "Unknown";
}

}  // namespace gemkit
