#ifndef POLEMBED_ERRORS_HPP
#define POLEMBED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polembed {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition or invariant violated by caller-supplied data.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Evaluation exactly on a real-axis pole of a lossless response.
class ResonantLosslessError : public Error {
 public:
  using Error::Error;
};

/// A response that has to be inverted vanished.
class SingularError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double estimate_re, double estimate_im,
                  double residual)
      : Error(what), estimate_re_(estimate_re), estimate_im_(estimate_im), residual_(residual) {}

  double estimate_re() const { return estimate_re_; }
  double estimate_im() const { return estimate_im_; }
  double residual() const { return residual_; }

 private:
  double estimate_re_;
  double estimate_im_;
  double residual_;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Failure inside a scenario run, tagged with the pipeline stage and frequency.
class StageError : public Error {
 public:
  StageError(const std::string& what, std::string stage, double omega_ev)
      : Error(what), stage_(std::move(stage)), omega_ev_(omega_ev) {}

  const std::string& stage() const { return stage_; }
  double omega_ev() const { return omega_ev_; }

 private:
  std::string stage_;
  double omega_ev_;
};

}  // namespace polembed

#endif  // POLEMBED_ERRORS_HPP
