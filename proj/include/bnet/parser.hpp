#pragma once

#include <string>
#include <string_view>

#include "bnet/network.hpp"

namespace bnet {

/**
 * \brief Parses the `.bn` line format.
 *
 *     # comment
 *     name, expression
 *
 * Expressions use `!`, `&`, `|`, parentheses and the literals `0`/`1`, with
 * precedence NOT > AND > OR. Targets may be referenced before their own line.
 * Variable order is line order.
 *
 * Throws ParseError (with line and column) on syntax errors, unknown
 * identifiers, duplicate targets and empty input.
 */
BooleanNetwork parse_network(std::string_view text);

BooleanNetwork load_network(const std::string& path);

}  // namespace bnet
