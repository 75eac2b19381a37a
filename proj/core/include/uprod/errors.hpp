#ifndef UPROD_ERRORS_HPP
#define UPROD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "uprod/report.hpp"

namespace uprod {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// A square map that is not invertible; carries the rank found.
class NotBijective : public Error {
 public:
  NotBijective(std::size_t rank, std::size_t dim)
      : Error("map is not bijective: rank " + std::to_string(rank) + " < " +
              std::to_string(dim)),
        rank_(rank),
        dim_(dim) {}
  std::size_t rank() const { return rank_; }
  std::size_t dim() const { return dim_; }

 private:
  std::size_t rank_;
  std::size_t dim_;
};

class NotInjective : public Error {
 public:
  using Error::Error;
};

/// No convolution inverse of the identity exists; `side` is "left" or "right".
class NoAntipode : public Error {
 public:
  explicit NoAntipode(std::string side)
      : Error("no antipode: the " + side + " antipode equation is inconsistent"),
        side_(std::move(side)) {}
  const std::string& side() const { return side_; }

 private:
  std::string side_;
};

/// The multiplication map A (x) H -> E is singular.
class NotFactorization : public Error {
 public:
  NotFactorization(std::size_t rank, std::size_t dim)
      : Error("not a factorization: multiplication map has rank " +
              std::to_string(rank) + " of " + std::to_string(dim)),
        rank_(rank),
        dim_(dim) {}
  std::size_t rank() const { return rank_; }
  std::size_t rank_deficit() const { return dim_ - rank_; }

 private:
  std::size_t rank_;
  std::size_t dim_;
};

/// An enumeration bound was hit; the answer is undecided.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed document or CLI input.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A construction whose preconditions were checked and failed. The report
/// names the failing checks.
class PreconditionFailed : public Error {
 public:
  PreconditionFailed(const std::string& what, Report report)
      : Error(what + ": " + report.failure_summary()), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

}  // namespace uprod

#endif  // UPROD_ERRORS_HPP
