#pragma once
#include <string>

#include "strand/quiver.hpp"

namespace strand {

/* Presentation text format:
 *
 *   algebra "<name>"
 *   char <any|2>
 *   vertex <id> [<id> ...]
 *   arrow <name> <source> <target>
 *   relations
 *   <term> [(+|-) <term>]*
 *
 * where <term> is an optional integer coefficient followed by '*' and a
 * product of arrow names and parenthesized groups; '^n' repeats a
 * parenthesized group, e.g. delta*(beta*lambda*delta)^2.  Powers expand at
 * parse time.  Relation monomials are normalized: within each relation the
 * terms are sorted lexicographically by path and scaled so the leading
 * coefficient is 1 (sign-normalized when no modulus is in play). */
Presentation parse_presentation(const std::string& text);

/* Canonical serialization: byte-exact for equal presentations (tokens
 * separated by single spaces, relations one per line, catalog order). */
std::string serialize_presentation(const Presentation& pres);

std::string relation_text(const Quiver& q, const Relation& rel);

}  // namespace strand
