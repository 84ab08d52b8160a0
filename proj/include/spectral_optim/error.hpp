// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spo {

enum class ErrorCode {
  InvalidArgument = 1,
  Parse,
  Io,
  NotConverged,
  Infeasible,
  Unbounded,
  Degenerate,
  SizeLimit,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown by the power method when the iterates fail to settle within the
/// configured iteration cap. Carries the last normalized iterate and its
/// spectral-radius estimate so callers can still inspect them.
class PowerNotConverged : public Error {
 public:
  PowerNotConverged(std::vector<double> last_iterate, double last_rho,
                    int iterations)
      : Error(ErrorCode::NotConverged, "power method did not converge"),
        last_iterate_(std::move(last_iterate)),
        last_rho_(last_rho),
        iterations_(iterations) {}

  const std::vector<double>& last_iterate() const noexcept {
    return last_iterate_;
  }
  double last_rho() const noexcept { return last_rho_; }
  int iterations() const noexcept { return iterations_; }

 private:
  std::vector<double> last_iterate_;
  double last_rho_;
  int iterations_;
};

}  // namespace spo
