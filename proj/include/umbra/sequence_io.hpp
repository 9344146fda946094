#pragma once

#include <string>
#include <string_view>

#include "umbra/seqcore.hpp"

namespace umbra::seq {

/// Parses {"terms": ["p/q", "p", ...]}. Rationals are strings so nothing passes
/// through floating point. Bare JSON integers are accepted as well.
/// Throws ParseError carrying the line/column of the offending text.
Sequence parse_sequence(std::string_view text);

/// Inverse of parse_sequence; canonical "p/q" or "p" strings.
std::string format_sequence(const Sequence& a);

}  // namespace umbra::seq
