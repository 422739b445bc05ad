// SPDX-License-Identifier: Apache-2.0
#ifndef CYRES_ERRORS_HPP
#define CYRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyres {

// Base class for all recoverable numerical/contract failures.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public Error {
public:
  using Error::Error;
};

// Evaluation requested exactly at a branch point nu_m^2 of the surface.
class RamificationPointError : public Error {
public:
  using Error::Error;
};

class H1ViolationError : public Error {
public:
  using Error::Error;
};

class PreconditionViolated : public Error {
public:
  using Error::Error;
};

class TailBoundExceeded : public Error {
public:
  using Error::Error;
};

// |D| dipped below the configured floor on a contour; caller must shrink or
// shift the contour.
class ContourTooClose : public Error {
public:
  using Error::Error;
};

class NonIntegerWinding : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

class IllConditioned : public Error {
public:
  explicit IllConditioned(const std::string& what, double cond_estimate = 0.0)
      : Error(what), cond(cond_estimate) {}
  double cond;
};

// Smith engine: a vanishing order could not be determined strictly inside the
// truncation window.  Never guessed.
class IndeterminateOrder : public Error {
public:
  using Error::Error;
};

class IdenticallySingular : public Error {
public:
  using Error::Error;
};

// smatrix_multiplicity disagreed with the resolvent-side winding count.
class DisagreementWithResolvent : public Error {
public:
  using Error::Error;
};

}  // namespace cyres

#endif
