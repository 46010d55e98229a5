#ifndef HALFCUBE_TOOLS_COMMANDS_HPP
#define HALFCUBE_TOOLS_COMMANDS_HPP

#include "report.hpp"

#include "halfcube/homology.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>

namespace halfcube::cli {

struct RunConfig {
    std::optional<std::filesystem::path> cache_dir;
    Certification certification = Certification::Snf;
    /// Largest boundary map (rows + cols) a command may reduce.
    std::uint64_t max_cells = 50000;
    int threads = 0;
};

Report cmd_faces(int n);
Report cmd_betti(int n, int k, const RunConfig& config);
Report cmd_morse(int n, int k, const RunConfig& config);
Report cmd_orbits(int n, bool extended);
Report cmd_triangle(int rows);
Report cmd_verify(int n_max, const RunConfig& config);

} // namespace halfcube::cli

#endif
