#pragma once

#include <stdexcept>
#include <string>

namespace ircolor {

/// Base of every exception the library throws.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A vertex index outside 0..n-1.
class IndexError : public Error
{
  public:
    using Error::Error;
};

/// An edge {v, v}.
class LoopError : public Error
{
  public:
    using Error::Error;
};

/// Malformed graph6 or edge-list input.
class FormatError : public Error
{
  public:
    using Error::Error;
};

class UnsupportedSizeError : public Error
{
  public:
    using Error::Error;
};

/// A parameter outside the documented range of an operation.
class ParameterError : public Error
{
  public:
    using Error::Error;
};

/// An input that violates an operation's precondition (e.g. non-bipartite input to a bipartite-only check).
class PreconditionError : public Error
{
  public:
    using Error::Error;
};

/// Graph too large for the exhaustive oracle.
class SizeCapError : public Error
{
  public:
    using Error::Error;
};

/// Thrown from inside a search when its cancellation token fires.
class Cancelled : public Error
{
  public:
    Cancelled() : Error("search cancelled") {}
};

} // namespace ircolor
