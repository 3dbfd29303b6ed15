#pragma once

#include <string>

#include "vancalc/assembler.hpp"

namespace vancalc {

// p horizontal, q vertical; cells show total multiplicity, '*' marks cells with
// non-invariant eigenvalue classes, which are listed below the grid.
std::string render_diagram(const HodgeDeligneDiagram& d, const std::string& title = "");

std::string render_spectrum(const WeightedSpectrum& s, const std::string& title = "");

// Rows j = n, n-1 over columns i = 0, 1, 2, with ranks and eigenvalue breakdown.
std::string render_e2(const E2Table& t);

std::string render_solution(const VsSolution& s);

}  // namespace vancalc
