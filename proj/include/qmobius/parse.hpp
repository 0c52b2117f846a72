/**
 * @file parse.hpp
 * @brief Surface-syntax parser for algebra elements.
 *
 * Grammar: '+'/'-' sums, '*' products, '/' division by a scalar subexpression,
 * '^' integer powers, star(...) for the involution, parentheses. Scalars are
 * integers, fractions via '/', 'i', and q-powers 'q', 'q^n', 'q^(n/2)'.
 * Generators are bare identifiers: a, as, b, bs (function algebra, plus the
 * sphere aliases A, B, Bs) and kinv, k, e, es (enveloping algebra).
 */
#pragma once

#include <qmobius/action.hpp>

#include <stdexcept>
#include <string>

namespace qmobius {

class ParseError : public std::runtime_error {
public:
    size_t position;
    ParseError(const std::string& message, size_t pos)
        : std::runtime_error(message + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

enum class Algebra { Funq, Uq };

Element parse_element(const EngineContext& ctx, const std::string& text, Algebra algebra);

} // namespace qmobius
