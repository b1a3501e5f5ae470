#pragma once

#include "bsnake/tableaux.hpp"

#include <string>
#include <vector>

namespace bsnake {

// Deterministic SVG 1.1 drawing of paths in the strip; the eps offsets on
// the spin column are exaggerated for visibility.
std::string svg_paths(const Algebra& alg, const std::vector<Path>& paths);

// Grid of letter tokens, one row per diagram row, "." for absent boxes.
std::string ascii_tableau(const Tableau& t);

} // namespace bsnake
