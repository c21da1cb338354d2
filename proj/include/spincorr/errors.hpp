#pragma once

#include <stdexcept>

namespace spincorr {

/// An operation was asked of a model that cannot support it, e.g. marginals
/// from a tally that resolves no per-party outcomes.
class UnsupportedModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An estimate was requested from an empty tally.
class EmptyRunError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A conditioning cell received no trials.
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spincorr
