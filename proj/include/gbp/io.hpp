#pragma once

// Poset text documents:
//
//   # comment lines start with '#'
//   poset <n>
//   cover <i> <j>        zero or more, 0-based, i below j
//   label <i> <name>     optional
//
// Blank lines are ignored. Pairs need not be covers; duplicates and
// transitive pairs are absorbed into the canonical form.

#include <string>
#include <string_view>
#include <vector>

#include "gbp/poset.hpp"

namespace gbp {

struct PosetDocument {
  Poset poset;
  // Comment text without the leading "# ", in file order.
  std::vector<std::string> comments;
};

// Throws SyntaxError (with the 1-based line), CycleDetected, IndexOutOfRange.
PosetDocument parse_document(std::string_view text);
Poset parse_poset(std::string_view text);

// Comments first, then the header, sorted cover lines and labels.
std::string format_document(const PosetDocument& doc);
std::string format_poset(const Poset& p);

PosetDocument read_document(const std::string& path);
void write_text(const std::string& path, std::string_view text);

}  // namespace gbp
