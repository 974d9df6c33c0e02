#pragma once

#include <string>
#include <vector>

#include "hcf/shift.hpp"

namespace hcf {

// open-prototypes, b5ii, b5iii, b5iv, alg-id, alg-mir2, alg-mir1mir2
const std::vector<std::string>& figure_names();
std::string plot_figure(const std::string& name);  // UnknownFigure

// Exemplar irregular words ending in -2+i, one per form (a)-(d).
const std::vector<Word>& algorithm_form_words();

}  // namespace hcf
