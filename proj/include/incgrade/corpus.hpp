#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "incgrade/poset.hpp"

namespace incgrade {

/// Names of the bundled posets: chains c1..c4, antichain1..antichain4, the
/// four-element "example" poset, the "diamond" and the disjoint union
/// "c2_plus_c3".
const std::vector<std::string>& corpus_names();

/// Throws InputError for an unknown name.
Poset corpus_poset(std::string_view name);

bool is_corpus_name(std::string_view name);

/// Directory holding the JSON copies of the corpus (<name>.json).
std::string corpus_directory();

}  // namespace incgrade
