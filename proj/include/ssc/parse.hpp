#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "ssc/polynomial.hpp"

namespace ssc {

/// Extra syntax accepted by the glue-statement reader: `#inv(expr)` calls
/// `inverse` with the parsed argument and uses its result.
struct ParseHooks {
  std::function<Polynomial(const Polynomial& arg, std::size_t offset)> inverse;
};

/// Parses the expression grammar: integers, `a/b` literals, variables,
/// `+ - * ^` and parentheses. Offsets in errors count bytes from the start
/// of `text`.
Polynomial parse_poly(std::string_view text, std::span<const std::string> names,
                      MonomialOrder order = MonomialOrder::grevlex(),
                      const ParseHooks& hooks = {});

/// True if `name` is a legal user identifier (no reserved '#' prefix).
bool is_user_identifier(std::string_view name);

}  // namespace ssc
