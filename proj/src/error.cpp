#include "m2mkd/error.hpp"

namespace m2mkd {

const char* err_name(Err e) {
  switch (e) {
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::NonFiniteValue: return "NonFiniteValue";
    case Err::NonScalarLoss: return "NonScalarLoss";
    case Err::GraphConsumed: return "GraphConsumed";
    case Err::LabelOutOfRange: return "LabelOutOfRange";
    case Err::NonPositiveTemperature: return "NonPositiveTemperature";
    case Err::BadK: return "BadK";
    case Err::MissingParameter: return "MissingParameter";
    case Err::BadArgs: return "BadArgs";
    case Err::PartitionMismatch: return "PartitionMismatch";
    case Err::SlotOutOfRange: return "SlotOutOfRange";
    case Err::WidthMismatch: return "WidthMismatch";
    case Err::ModuleCountMismatch: return "ModuleCountMismatch";
    case Err::UnresolvedSpec: return "UnresolvedSpec";
    case Err::MissingGrad: return "MissingGrad";
    case Err::DataEmpty: return "DataEmpty";
    case Err::InsufficientSamples: return "InsufficientSamples";
    case Err::KExceedsClasses: return "KExceedsClasses";
    case Err::NonFiniteLoss: return "NonFiniteLoss";
    case Err::BadMagic: return "BadMagic";
    case Err::TruncatedFile: return "TruncatedFile";
    case Err::CountMismatch: return "CountMismatch";
    case Err::IoError: return "IoError";
    case Err::CorruptHeader: return "CorruptHeader";
    case Err::VersionUnsupported: return "VersionUnsupported";
    case Err::ConfigError: return "ConfigError";
    case Err::ManifestMismatch: return "ManifestMismatch";
  }
  return "UnknownError";
}

int err_exit_code(Err e) {
  switch (e) {
    case Err::BadArgs:
    case Err::UnresolvedSpec:
    case Err::ConfigError:
    case Err::ManifestMismatch:
    case Err::VersionUnsupported:
      return 2;
    case Err::DataEmpty:
    case Err::InsufficientSamples:
    case Err::BadMagic:
    case Err::TruncatedFile:
    case Err::CountMismatch:
    case Err::IoError:
    case Err::CorruptHeader:
      return 3;
    case Err::NonFiniteValue:
    case Err::NonFiniteLoss:
      return 4;
    default:
      return 1;
  }
}

}  // namespace m2mkd
