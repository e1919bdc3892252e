#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fairauction {

enum class ErrorKind
{
  // instance validation
  UnknownResourceInBid,
  DuplicateBidderBid,
  MatrixResourceMismatch,
  NegativeAmount,
  DuplicateResource,
  DuplicateBidder,
  EmptyBid,
  TooManyResources,
  // model operations
  UnknownResource,
  OverlappingSets,
  // solver
  EmptyAuction,
  InstanceTooLarge,
  // payments
  NotAWinner,
  ZeroBidApportionment,
  ZeroAuctioneerValuation,
  NonPositiveUtilitySum,
  // i/o and cross-checks
  ParseError,
  OracleMismatch,
  InternalInvariant,
};

std::string_view to_string(ErrorKind kind);

/// True for errors caused by bad input rather than a broken invariant.
bool is_input_error(ErrorKind kind);

class AuctionError : public std::runtime_error
{
public:
  AuctionError(ErrorKind kind, std::string const &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message)
    , kind_(kind)
  {}

  ErrorKind kind() const noexcept
  {
    return kind_;
  }

private:
  ErrorKind kind_;
};

struct Violation
{
  ErrorKind   kind;
  std::string subject;  // offending bidder id, resource id or both
  std::string message;
};

/// Thrown by validate_instance with every violation found, not just the first.
class ValidationError : public AuctionError
{
public:
  explicit ValidationError(std::vector<Violation> violations);

  std::vector<Violation> const &violations() const noexcept
  {
    return violations_;
  }

  bool contains(ErrorKind kind) const;

private:
  std::vector<Violation> violations_;
};

class ParseError : public AuctionError
{
public:
  /// `line`/`column` are 1-based; 0 means the position is given by `path`.
  ParseError(std::string const &message, std::size_t line, std::size_t column,
             std::string path = {});

  std::size_t line() const noexcept
  {
    return line_;
  }
  std::size_t column() const noexcept
  {
    return column_;
  }
  std::string const &path() const noexcept
  {
    return path_;
  }

private:
  std::size_t line_;
  std::size_t column_;
  std::string path_;
};

}  // namespace fairauction
