#pragma once

#include "skewpbw/render.hpp"
#include "skewpbw/session.hpp"

namespace skewpbw {

struct CommandOptions {
    Side side = Side::left;
    DeltaAConvention conv = DeltaAConvention::paper;
    int r = 0;       // tor/ext degree
    int max = -1;    // grade / resolution bound; -1 picks the default
    Format format = Format::text;
};

// Subcommands: groebner, syzygy, presentation, resolution, tensor, tor, hom,
// ext, dual, grade, transpose, torsion, stably-free, torsion-free,
// torsion-module, reflexive. Names resolve to session modules, matrices or
// presentations; the bare name "A" is the ring as a module over itself.
// Deterministic output for fixed inputs.
std::string run_command(const Session& session, const std::string& command,
                        const std::vector<std::string>& args, const CommandOptions& opt);

} // namespace skewpbw
