#pragma once

#include <stdexcept>
#include <string>

namespace lpasa
{
//! Failure categories surfaced through the C API as status codes.
enum class ErrorCode
{
    config,            //!< invalid grid/schedule/CLI configuration
    exponent,          //!< p = -n or too close to the pole
    unsupported_kind,  //!< operation undefined for this body kind
    precondition,      //!< caller-side precondition violated
    degenerate_body,   //!< empty or origin-free construction result
    geometry,          //!< construction failed (tangency, convexity)
    parse,             //!< malformed body specification
    io,                //!< file could not be read/written
    internal,          //!< should not happen for convex inputs
};

class Error : public std::runtime_error
{
  public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, std::string const& what)
{
    throw Error(code, what);
}

char const* to_string(ErrorCode code) noexcept;

}  // namespace lpasa
