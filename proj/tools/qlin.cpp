// Command line front end: parses arguments into an Invocation, runs it,
// prints the report.  Exit codes: 0 success, 1 bad input or usage,
// 2 mathematically refused operation.

#include <iostream>

#include <CLI11.hpp>

#include "qlin/errors.hpp"
#include "qlin/io.hpp"

namespace {

struct Options {
    qlin::Invocation inv;
};

void add_output_flags(CLI::App* cmd, Options& opt) {
    cmd->add_flag("--json", opt.inv.json, "emit the report as JSON");
}

void add_float_flags(CLI::App* cmd, Options& opt) {
    cmd->add_flag("--float", opt.inv.allow_float,
                  "allow the floating point fallback where exactness is lost");
    cmd->add_option("--tol", opt.inv.tol, "residual tolerance for float checks");
}

CLI::App* leaf(CLI::App& app, Options& opt, const std::string& name,
               const std::string& help, std::size_t min_files, std::size_t max_files) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("files", opt.inv.paths, "input files ('-' reads stdin)")
        ->expected(static_cast<int>(min_files), static_cast<int>(max_files));
    add_output_flags(cmd, opt);
    return cmd;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact linear algebra toolkit"};
    app.name("qlin"); // stable usage text regardless of the invocation path
    app.require_subcommand(1);

    leaf(app, opt, "charpoly", "characteristic polynomial, trace, determinant", 1, 1);
    leaf(app, opt, "jordan", "Jordan normal form with the conjugating basis", 1, 1);
    CLI::App* cmd = leaf(app, opt, "spectrum",
                         "rational eigenvalues and the unsplit remainder", 1, 1);
    add_float_flags(cmd, opt);
    leaf(app, opt, "signature", "inertia indices of a quadratic form", 1, 1);
    leaf(app, opt, "sylvester", "leading principal minors and positivity", 1, 1);
    leaf(app, opt, "diagonalize-form", "diagonalizing basis for a quadratic form", 1, 1);

    CLI::App* sub = app.add_subcommand("subspace", "subspace arithmetic");
    sub->require_subcommand(1);
    for (const char* op : {"sum", "intersect", "quotient", "annihilator"}) {
        std::size_t files = (op[0] == 's' || op[0] == 'i') ? 2 : 1;
        CLI::App* c = sub->add_subcommand(op, "");
        c->add_option("files", opt.inv.paths, "input files ('-' reads stdin)")
            ->expected(static_cast<int>(files));
        add_output_flags(c, opt);
    }

    leaf(app, opt, "adjoint", "adjoint operator, standard or given metric", 1, 2);
    cmd = leaf(app, opt, "rotation", "canonical form of a rotation, dims 2 and 3", 1, 1);
    add_float_flags(cmd, opt);

    CLI::App* quad = app.add_subcommand("quadric", "quadric classification");
    quad->require_subcommand(1);
    for (const char* op : {"classify", "canonical"}) {
        CLI::App* c = quad->add_subcommand(op, "");
        c->add_option("files", opt.inv.paths, "input files ('-' reads stdin)")
            ->expected(1);
        add_output_flags(c, opt);
        add_float_flags(c, opt);
    }

    leaf(app, opt, "frame-change", "point coordinates in another frame", 3, 3);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e); // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1; // any usage problem is an input error
    }

    CLI::App* chosen = app.get_subcommands().front();
    opt.inv.command = chosen->get_name();
    if (!chosen->get_subcommands().empty())
        opt.inv.subcommand = chosen->get_subcommands().front()->get_name();

    try {
        qlin::Report rep = qlin::run_command(opt.inv);
        std::cout << qlin::render(rep, opt.inv.json);
        return 0;
    } catch (const qlin::DomainError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return 2;
    } catch (const qlin::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
