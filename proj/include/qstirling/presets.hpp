#pragma once

#include <string>
#include <vector>

#include "qstirling/cycle.hpp"

namespace qstirling {

// Figure presets bundle the captions' parameter choices. Values the captions
// do not state (temperature ratios, r lists, legend values, surface domains)
// are fixed here and echoed in the note.
struct PresetTable {
    std::string name;
    std::string note;
    SweepTable table;
};

PresetTable build_figure_preset(const std::string& name);

std::vector<std::string> figure_preset_names();

}  // namespace qstirling
