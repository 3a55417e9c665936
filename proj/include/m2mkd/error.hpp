#pragma once

#include <stdexcept>
#include <string>

namespace m2mkd {

// Every failure the library can raise, by contract name.
enum class Err {
  // tensor / autodiff
  ShapeMismatch,
  NonFiniteValue,
  NonScalarLoss,
  GraphConsumed,
  LabelOutOfRange,
  NonPositiveTemperature,
  // blocks
  BadK,
  MissingParameter,
  // partition / assembly
  BadArgs,
  PartitionMismatch,
  SlotOutOfRange,
  WidthMismatch,
  ModuleCountMismatch,
  UnresolvedSpec,
  // training
  MissingGrad,
  DataEmpty,
  InsufficientSamples,
  KExceedsClasses,
  NonFiniteLoss,
  // data / io
  BadMagic,
  TruncatedFile,
  CountMismatch,
  IoError,
  CorruptHeader,
  VersionUnsupported,
  // harness
  ConfigError,
  ManifestMismatch,
};

const char* err_name(Err e);

// Process exit code classes used by the CLI: 2 config, 3 data, 4 numeric, 1 other.
int err_exit_code(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& message)
      : std::runtime_error(std::string(err_name(code)) + ": " + message), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace m2mkd
