#include "skewpbw/commands.hpp"

#include "skewpbw/error.hpp"

namespace skewpbw {

namespace {

using nlohmann::json;

const std::string& need_arg(const std::vector<std::string>& args, size_t idx,
                            const char* what) {
    if (idx >= args.size())
        fail(ErrorCode::bad_argument, std::string("missing argument: ") + what);
    return args[idx];
}

bool is_ring_name(const Session& s, const std::string& name) {
    return name == "A" && !s.modules.count(name) && !s.matrices.count(name) &&
           !s.presentations.count(name);
}

// generator-columns view of a name (presentations contribute their relation
// columns, which is what groebner/syzygy act on)
MatrixA resolve_gens(const Session& s, const std::string& name) {
    if (auto it = s.modules.find(name); it != s.modules.end())
        return it->second;
    if (auto it = s.matrices.find(name); it != s.matrices.end())
        return it->second;
    if (auto it = s.presentations.find(name); it != s.presentations.end())
        return it->second.delta;
    if (is_ring_name(s, name)) {
        VectorA one(1);
        one.entries[0] = poly_one(*s.algebra);
        return mat_from_cols(1, {one});
    }
    fail(ErrorCode::unknown_name, "'" + name + "' is not defined in the session");
}

Presentation resolve_presentation(const Session& s, const std::string& name, Side side) {
    if (auto it = s.presentations.find(name); it != s.presentations.end())
        return it->second;
    if (is_ring_name(s, name)) {
        Presentation p = ring_presentation(s.algebra, DeltaAConvention::empty);
        p.side = side;
        return p;
    }
    MatrixA gens = resolve_gens(s, name);
    return presentation(s.algebra, side, gens);
}

json verdict_json(const Algebra& a, const TestVerdict& v) {
    json out;
    out["verdict"] = verdict_name(v.verdict);
    out["note"] = v.note;
    if (v.witness)
        out["witness"] = homology_json(a, *v.witness);
    return out;
}

std::string render_verdict(const Algebra& a, const TestVerdict& v) {
    std::string s = std::string("verdict: ") + verdict_name(v.verdict) + "\nnote: " + v.note;
    if (v.witness) {
        s += "\nwitness:\n";
        s += render_homology(a, *v.witness);
    }
    return s;
}

json presentation_json(const Algebra& a, const Presentation& p) {
    json out;
    out["side"] = side_name(p.side);
    out["rank"] = p.rank;
    out["delta"] = matrix_json(a, p.delta);
    return out;
}

std::string render_presentation(const Algebra& a, const Presentation& p) {
    return std::string("side: ") + side_name(p.side) + "\nrank: " + std::to_string(p.rank) +
           "\ndelta:\n" + render_matrix(a, p.delta);
}

std::string emit(const json& doc, const std::string& text, Format format) {
    if (format == Format::json)
        return doc.dump(2);
    return text;
}

} // namespace

std::string run_command(const Session& session, const std::string& command,
                        const std::vector<std::string>& args, const CommandOptions& opt) {
    const AlgebraPtr& alg = session.algebra;
    json doc;
    doc["format"] = 1;
    doc["command"] = command;

    if (command == "groebner") {
        MatrixA gens = resolve_gens(session, need_arg(args, 0, "module name"));
        GroebnerBasis g = buchberger(alg, opt.side, gens);
        json elems = json::array();
        std::string text = "side: " + std::string(side_name(opt.side)) +
                           "\nelements: " + std::to_string(g.elements.size());
        for (const auto& e : g.elements) {
            elems.push_back(vector_json(*alg, e));
            text += "\n  " + render_vector(*alg, e);
        }
        doc["side"] = side_name(opt.side);
        doc["elements"] = elems;
        return emit(doc, text, opt.format);
    }

    if (command == "syzygy") {
        MatrixA gens = resolve_gens(session, need_arg(args, 0, "module name"));
        MatrixA z = syzygy(alg, opt.side, gens);
        doc["side"] = side_name(opt.side);
        doc["syzygy"] = matrix_json(*alg, z);
        return emit(doc,
                    "side: " + std::string(side_name(opt.side)) + "\nsyzygy:\n" +
                        render_matrix(*alg, z),
                    opt.format);
    }

    if (command == "presentation") {
        Presentation p = resolve_presentation(session, need_arg(args, 0, "module name"), opt.side);
        doc["presentation"] = presentation_json(*alg, p);
        return emit(doc, render_presentation(*alg, p), opt.format);
    }

    if (command == "resolution") {
        Presentation p = resolve_presentation(session, need_arg(args, 0, "module name"), opt.side);
        int cap = opt.max > 0 ? opt.max : alg->nvars() + 2;
        Resolution res = free_resolution(alg, p, cap);
        json mats = json::array();
        std::string text = "length: " + std::to_string(res.length()) + "\nranks: " +
                           std::to_string(p.rank);
        for (size_t i = 0; i < res.mats.size(); ++i) {
            mats.push_back(matrix_json(*alg, res.mats[i]));
            text += " <- " + std::to_string(res.mats[i].ncols());
        }
        for (size_t i = 0; i < res.mats.size(); ++i)
            text += "\nF" + std::to_string(i + 1) + ":\n" + render_matrix(*alg, res.mats[i]);
        doc["length"] = res.length();
        doc["matrices"] = mats;
        return emit(doc, text, opt.format);
    }

    if (command == "tensor" || command == "tor" || command == "hom" || command == "ext") {
        Presentation m =
            resolve_presentation(session, need_arg(args, 0, "first module"), opt.side);
        Presentation n =
            resolve_presentation(session, need_arg(args, 1, "second module"), opt.side);
        HomologyResult h;
        if (command == "tensor")
            h = tensor_presentation(alg, m, n);
        else if (command == "tor")
            h = tor(alg, m, n, opt.r);
        else if (command == "hom")
            h = hom(alg, m, n);
        else
            h = ext(alg, m, n, opt.r);
        doc["result"] = homology_json(*alg, h);
        return emit(doc, render_homology(*alg, h), opt.format);
    }

    if (command == "dual") {
        Presentation m =
            resolve_presentation(session, need_arg(args, 0, "module name"), opt.side);
        HomologyResult h = dual_module(alg, m, opt.conv);
        doc["result"] = homology_json(*alg, h);
        return emit(doc, render_homology(*alg, h), opt.format);
    }

    if (command == "grade") {
        Presentation m =
            resolve_presentation(session, need_arg(args, 0, "module name"), opt.side);
        int bound = opt.max >= 0 ? opt.max : alg->nvars() + 2;
        auto g = grade(alg, m, bound, opt.conv);
        if (g) {
            doc["grade"] = *g;
            return emit(doc, "grade: " + std::to_string(*g), opt.format);
        }
        doc["grade"] = nullptr;
        doc["infinity_up_to"] = bound;
        return emit(doc, "grade: infinity up to " + std::to_string(bound), opt.format);
    }

    if (command == "transpose") {
        Presentation m =
            resolve_presentation(session, need_arg(args, 0, "module name"), opt.side);
        Presentation t = transpose_module(m);
        doc["presentation"] = presentation_json(*alg, t);
        return emit(doc, render_presentation(*alg, t), opt.format);
    }

    if (command == "torsion") {
        Presentation m =
            resolve_presentation(session, need_arg(args, 0, "module name"), opt.side);
        HomologyResult h = torsion_presentation(alg, m);
        doc["result"] = homology_json(*alg, h);
        return emit(doc, render_homology(*alg, h), opt.format);
    }

    if (command == "stably-free" || command == "torsion-free" || command == "torsion-module" ||
        command == "reflexive") {
        Presentation m =
            resolve_presentation(session, need_arg(args, 0, "module name"), opt.side);
        TestVerdict v;
        if (command == "stably-free")
            v = stably_free_test(alg, m, opt.max > 0 ? opt.max : alg->nvars() + 2);
        else if (command == "torsion-free")
            v = torsion_free_test(alg, m);
        else if (command == "torsion-module")
            v = torsion_module_test(alg, m, opt.conv);
        else
            v = reflexive_test(alg, m);
        doc["result"] = verdict_json(*alg, v);
        return emit(doc, render_verdict(*alg, v), opt.format);
    }

    fail(ErrorCode::unknown_command, "'" + command + "'");
}

} // namespace skewpbw
