#include "skewpbw/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace skewpbw;

int main(int argc, char** argv) {
    CLI::App app{"Groebner bases, syzygies and Tor/Ext presentations over bijective skew PBW "
                 "extensions of Q"};
    app.footer("Commands: groebner, syzygy, presentation, resolution, tensor, tor, hom, ext,\n"
               "dual, grade, transpose, torsion, stably-free, torsion-free, torsion-module,\n"
               "reflexive.\n"
               "Usage: skewpbw <command> <session-file> [module names...] [flags]");

    std::string command, session_path;
    std::vector<std::string> names;
    std::string side = "left", delta_a = "paper", format = "text";
    int degree = 0, maxbound = -1;

    app.add_option("command", command, "subcommand to run")->required();
    app.add_option("session", session_path, "session file")->required();
    app.add_option("names", names, "module / matrix / presentation names");
    app.add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
    app.add_option("--r", degree, "homological degree for tor/ext");
    app.add_option("--max", maxbound, "bound for grade / resolution length");
    app.add_option("--delta-a", delta_a, "presentation convention for A: paper ([1]) or empty")
        ->check(CLI::IsMember({"paper", "empty"}));
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    std::ifstream in(session_path);
    if (!in) {
        std::cerr << "error: cannot open session file '" << session_path << "'\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    try {
        Session session = parse_session(buffer.str());
        CommandOptions opt;
        opt.side = side == "right" ? Side::right : Side::left;
        opt.conv = delta_a == "empty" ? DeltaAConvention::empty : DeltaAConvention::paper;
        opt.r = degree;
        opt.max = maxbound;
        opt.format = format == "json" ? Format::json : Format::text;
        std::cout << run_command(session, command, names, opt) << "\n";
        return 0;
    } catch (const SkewError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
