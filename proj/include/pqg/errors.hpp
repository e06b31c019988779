// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace pqg {

/// Quadrature or series failed to reach the requested tolerance.
class numerical_error : public std::runtime_error {
  public:
    numerical_error(std::string const& what, double residual = 0.0)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const { return residual_; }

  private:
    double residual_;
};

}  // namespace pqg
