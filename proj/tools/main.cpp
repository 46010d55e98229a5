// halfcube: face census, homology, Morse matching, orbits and triangle checks
// for the half cube complexes. Exit status is 0 only if every check passes.
#include "commands.hpp"

#include "halfcube/cache.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <iostream>

using namespace halfcube;
using namespace halfcube::cli;

int main(int argc, char** argv)
{
    CLI::App app{"Half cube complexes: faces, homology, Morse matchings, symmetry"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "table";
    std::string cache_dir;
    std::string cert = "snf";
    int threads = 0;
    std::uint64_t max_cells = 50000;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--cache-dir", cache_dir, "Cache directory (overrides HALFCUBE_CACHE_DIR)");
    app.add_option("--threads", threads, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
    app.add_option("--max-cells", max_cells, "Skip boundary maps touching more cells than this")
        ->capture_default_str();

    int n = 0, k = 0, n_max = 6, rows = 6;
    bool extended = false;

    auto* faces = app.add_subcommand("faces", "Face census against the closed forms");
    faces->add_option("--n", n, "Dimension")->required()->check(CLI::Range(4, 12));

    auto* betti = app.add_subcommand("betti", "Homology of C_{n,k}");
    betti->add_option("--n", n, "Dimension")->required()->check(CLI::Range(4, 12));
    betti->add_option("--k", k, "Deletion parameter, 3 <= k <= n")->required()->check(CLI::Range(3, 12));
    betti->add_option("--cert", cert, "Torsion certificate")
        ->check(CLI::IsMember({"rank", "modp", "snf"}))
        ->capture_default_str();

    auto* morse = app.add_subcommand("morse", "The matching V_k on C_{n,k}");
    morse->add_option("--n", n, "Dimension")->required()->check(CLI::Range(4, 12));
    morse->add_option("--k", k, "Deletion parameter, 3 <= k <= n")->required()->check(CLI::Range(3, 12));

    auto* orb = app.add_subcommand("orbits", "W(D_n) orbits of faces");
    orb->add_option("--n", n, "Dimension")->required()->check(CLI::Range(4, 10));
    orb->add_flag("--extended", extended, "Add the extra reflection (n = 4 only)");

    auto* tri = app.add_subcommand("triangle", "Triangle rows by four routes");
    tri->add_option("--rows", rows, "Last row")->check(CLI::Range(0, 200))->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Full verification sweep");
    verify->add_option("--n-max", n_max, "Largest dimension")->check(CLI::Range(4, 10))->capture_default_str();
    verify->add_option("--cert", cert, "Torsion certificate")
        ->check(CLI::IsMember({"rank", "modp", "snf"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if ((betti->parsed() || morse->parsed()) && k > n)
            throw CLI::ValidationError("--k", "must not exceed --n");
        if (orb->parsed() && extended && n != 4)
            throw CLI::ValidationError("--extended", "the extra reflection exists only for n = 4");
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    RunConfig config;
    config.cache_dir = resolve_cache_dir(cache_dir);
    config.certification = parse_certification(cert);
    config.max_cells = max_cells;
    config.threads = threads;
    if (threads > 0)
        omp_set_num_threads(threads);

    try {
        Report report;
        if (faces->parsed())
            report = cmd_faces(n);
        else if (betti->parsed())
            report = cmd_betti(n, k, config);
        else if (morse->parsed())
            report = cmd_morse(n, k, config);
        else if (orb->parsed())
            report = cmd_orbits(n, extended);
        else if (tri->parsed())
            report = cmd_triangle(rows);
        else
            report = cmd_verify(n_max, config);
        render(report, parse_format(format), std::cout);
        return report.ok() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
