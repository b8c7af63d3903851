#pragma once

#include <string>
#include <vector>

#include "unistrat/game_format.hpp"

namespace unistrat {

// Shipped example games, embedded so the CLI works without data files.
// The same texts are installed under fixtures/ for reading and editing.
std::vector<std::string> fixture_names();
const std::string& fixture_text(const std::string& name);  // InputError if unknown
GameFile load_fixture(const std::string& name);

}  // namespace unistrat
