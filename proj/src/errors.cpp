#include "fairauction/errors.hpp"

#include <algorithm>

namespace fairauction {

std::string_view to_string(ErrorKind kind)
{
  switch (kind)
  {
  case ErrorKind::UnknownResourceInBid:
    return "UnknownResourceInBid";
  case ErrorKind::DuplicateBidderBid:
    return "DuplicateBidderBid";
  case ErrorKind::MatrixResourceMismatch:
    return "MatrixResourceMismatch";
  case ErrorKind::NegativeAmount:
    return "NegativeAmount";
  case ErrorKind::DuplicateResource:
    return "DuplicateResource";
  case ErrorKind::DuplicateBidder:
    return "DuplicateBidder";
  case ErrorKind::EmptyBid:
    return "EmptyBid";
  case ErrorKind::TooManyResources:
    return "TooManyResources";
  case ErrorKind::UnknownResource:
    return "UnknownResource";
  case ErrorKind::OverlappingSets:
    return "OverlappingSets";
  case ErrorKind::EmptyAuction:
    return "EmptyAuction";
  case ErrorKind::InstanceTooLarge:
    return "InstanceTooLarge";
  case ErrorKind::NotAWinner:
    return "NotAWinner";
  case ErrorKind::ZeroBidApportionment:
    return "ZeroBidApportionment";
  case ErrorKind::ZeroAuctioneerValuation:
    return "ZeroAuctioneerValuation";
  case ErrorKind::NonPositiveUtilitySum:
    return "NonPositiveUtilitySum";
  case ErrorKind::ParseError:
    return "ParseError";
  case ErrorKind::OracleMismatch:
    return "OracleMismatch";
  case ErrorKind::InternalInvariant:
    return "InternalInvariant";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind)
{
  return kind != ErrorKind::OracleMismatch && kind != ErrorKind::InternalInvariant;
}

namespace {

std::string summarize(std::vector<Violation> const &violations)
{
  std::string out = std::to_string(violations.size()) + " violation(s)";
  for (auto const &v : violations)
  {
    out += "\n  ";
    out += to_string(v.kind);
    out += " [" + v.subject + "] " + v.message;
  }
  return out;
}

ErrorKind first_kind(std::vector<Violation> const &violations)
{
  return violations.empty() ? ErrorKind::InternalInvariant : violations.front().kind;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
  : AuctionError(first_kind(violations), summarize(violations))
  , violations_(std::move(violations))
{}

bool ValidationError::contains(ErrorKind kind) const
{
  return std::any_of(violations_.begin(), violations_.end(),
                     [kind](Violation const &v) { return v.kind == kind; });
}

namespace {

std::string describe_position(std::string const &message, std::size_t line, std::size_t column,
                              std::string const &path)
{
  if (line > 0)
  {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }
  if (!path.empty())
  {
    return "at " + path + ": " + message;
  }
  return message;
}

}  // namespace

ParseError::ParseError(std::string const &message, std::size_t line, std::size_t column,
                       std::string path)
  : AuctionError(ErrorKind::ParseError, describe_position(message, line, column, path))
  , line_(line)
  , column_(column)
  , path_(std::move(path))
{}

}  // namespace fairauction
