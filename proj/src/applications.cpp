#include "skewpbw/applications.hpp"

namespace skewpbw {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::yes: return "Yes";
    case Verdict::no: return "No";
    case Verdict::inconclusive: return "Inconclusive";
    }
    return "?";
}

TestVerdict stably_free_test(const AlgebraPtr& a, const Presentation& m, int max_len) {
    HomologyResult e1 = ext(a, m, ring_presentation(a, DeltaAConvention::empty), 1);
    if (!e1.zero)
        return {Verdict::no, e1, "Ext^1(M, A) != 0"};
    Resolution res = free_resolution(a, m, max_len);
    if (res.length() <= 1)
        return {Verdict::yes, e1, "Ext^1(M, A) = 0 and the presentation extends to 0 -> A^s -> A^r -> M -> 0"};
    return {Verdict::inconclusive, e1,
            "Ext^1(M, A) = 0 but the computed resolution is longer than 1"};
}

HomologyResult dual_module(const AlgebraPtr& a, const Presentation& m, DeltaAConvention conv) {
    return hom(a, m, ring_presentation(a, conv));
}

std::optional<int> grade(const AlgebraPtr& a, const Presentation& m, int max_i,
                         DeltaAConvention conv) {
    for (int i = 0; i <= max_i; ++i) {
        HomologyResult h = ext(a, m, ring_presentation(a, conv), i);
        if (!h.zero)
            return i;
    }
    return std::nullopt;
}

Presentation transpose_module(const Presentation& m) {
    Presentation t;
    t.side = flip(m.side);
    t.rank = m.delta.ncols();
    // zero columns of the transpose come from generators without relations
    // (free summands), which do not affect the transposed module
    t.delta = mat_prune_zero_cols(mat_transpose(m.delta));
    t.complete = true;
    return t;
}

HomologyResult torsion_presentation(const AlgebraPtr& a, const Presentation& m) {
    return ext(a, transpose_module(m), ring_presentation(a, DeltaAConvention::empty), 1);
}

TestVerdict torsion_free_test(const AlgebraPtr& a, const Presentation& m) {
    HomologyResult t = torsion_presentation(a, m);
    if (t.zero)
        return {Verdict::yes, t, "Ext^1(M^T, A) = 0"};
    return {Verdict::no, t, "Ext^1(M^T, A) != 0"};
}

TestVerdict torsion_module_test(const AlgebraPtr& a, const Presentation& m,
                                DeltaAConvention conv) {
    HomologyResult d = dual_module(a, m, conv);
    if (d.zero)
        return {Verdict::yes, d, "M^* = 0"};
    return {Verdict::no, d, "M^* != 0"};
}

TestVerdict reflexive_test(const AlgebraPtr& a, const Presentation& m) {
    Presentation t = transpose_module(m);
    Presentation ring = ring_presentation(a, DeltaAConvention::empty);
    HomologyResult e1 = ext(a, t, ring, 1);
    if (!e1.zero)
        return {Verdict::no, e1, "Ext^1(M^T, A) != 0"};
    HomologyResult e2 = ext(a, t, ring, 2);
    if (!e2.zero)
        return {Verdict::no, e2, "Ext^2(M^T, A) != 0"};
    return {Verdict::yes, std::nullopt, "Ext^1(M^T, A) = Ext^2(M^T, A) = 0"};
}

} // namespace skewpbw
