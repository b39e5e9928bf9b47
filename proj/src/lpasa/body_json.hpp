#pragma once

#include <string>

#include "bodies.hpp"

namespace lpasa
{
/*!
 * Build a body from a JSON object {"kind": ..., parameters...}.
 *
 * The schema is documented in docs/body_schema.md. Unknown kinds raise
 * unsupported_kind; missing or mistyped fields raise parse errors; numeric
 * preconditions are left to the factories.
 */
ConvexBody body_from_json(std::string const& text);

//! Read a file and parse it with body_from_json.
ConvexBody body_from_file(std::string const& path);

}  // namespace lpasa
