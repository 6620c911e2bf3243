#pragma once

#include <iosfwd>
#include <string>

#include "linext/poset.hpp"

namespace linext {

// Line format, UTF-8. Lines starting with '#' are comments.
//   e <name>      declare an element (declaration order fixes indices)
//   r <x> <y>     declare x < y (any relation; reduced automatically)
poset parse_poset_text(std::istream& in);
poset parse_poset_text(const std::string& text);
std::string poset_to_text(const poset& p);

// JSON mirror: {"elements": [...], "relations": [[x, y], ...]}.
poset parse_poset_json(const std::string& text);
std::string poset_to_json(const poset& p);

// Reads either format; a leading '{' selects JSON.
poset load_poset_file(const std::string& path);

}  // namespace linext
