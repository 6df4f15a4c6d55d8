#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dbr {

enum class ErrorCode {
  LoopEdge,
  VertexOutOfRange,
  UnknownFamily,
  BadParams,
  Disconnected,
  NotBipartite,
  NoConvergence,
  SignFailure,
  DegenerateMesh,
  ZeroWeight,
  WrongCase,
  InconsistentWeights,
  ParseError,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::SignFailure: return "SignFailure";
    case ErrorCode::DegenerateMesh: return "DegenerateMesh";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::WrongCase: return "WrongCase";
    case ErrorCode::InconsistentWeights: return "InconsistentWeights";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Carries the odd cycle found while two-coloring.
class NotBipartiteError : public Error {
 public:
  explicit NotBipartiteError(std::vector<int> odd_cycle)
      : Error(ErrorCode::NotBipartite,
              "odd cycle of length " + std::to_string(odd_cycle.size())),
        cycle_(std::move(odd_cycle)) {}

  const std::vector<int>& odd_cycle() const { return cycle_; }

 private:
  std::vector<int> cycle_;
};

}  // namespace dbr
