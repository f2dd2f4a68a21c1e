#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "evoparam/tree.hpp"

namespace evoparam {

// Toroidal food grid for the artificial-ant benchmark. Text format: one row
// per line, `#` food, `.` empty, `S` start cell (ant faces east).
struct AntTrail {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> food; // row-major
    int start_row = 0;
    int start_col = 0;
    int food_total = 0;
    int step_budget = 600;

    bool has_food(int row, int col) const {
        return food[static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
                    static_cast<std::size_t>(col)] != 0;
    }

    static AntTrail parse(std::string_view text, int step_budget = 600);
    static AntTrail load(const std::filesystem::path& path, int step_budget = 600);
};

// Runs the controller repeatedly until the step budget elapses; move and
// turn each cost one step, the food sensor is free. Returns cells of food
// eaten. The controller must be built from the ant primitive set.
int ant_simulate(const ProgramTree& controller, const PrimitiveSet& pset, const AntTrail& trail);

} // namespace evoparam
