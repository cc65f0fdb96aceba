#pragma once

#include "skewpbw/homological.hpp"

namespace skewpbw {

enum class Verdict { yes, no, inconclusive };

const char* verdict_name(Verdict v);

struct TestVerdict {
    Verdict verdict = Verdict::inconclusive;
    std::optional<HomologyResult> witness;
    std::string note;
};

// Ext^1(M, A) != 0 => No (with the nonvanishing Ext as witness). Ext^1 = 0 and
// projective dimension <= 1 => Yes. Ext^1 = 0 with a longer resolution =>
// Inconclusive (the cited criterion needs 0 -> A^s -> A^r -> M -> 0).
TestVerdict stably_free_test(const AlgebraPtr& a, const Presentation& m, int max_len);

// M^* = Hom(M, A) under the chosen Delta_A convention; a right module.
HomologyResult dual_module(const AlgebraPtr& a, const Presentation& m, DeltaAConvention conv);

// min{ i <= max_i : Ext^i(M, A) != 0 }, or nullopt when all vanish up to the
// bound (reported as "infinity up to max_i", never as j = infinity). Ext^0
// goes through hom under the Delta_A convention; higher degrees do not depend
// on it.
std::optional<int> grade(const AlgebraPtr& a, const Presentation& m, int max_i,
                         DeltaAConvention conv);

// Transposed module: presentation with the entrywise-literal transpose of the
// relation matrix on the opposite side. The output is marked complete: the
// transposed chain continues with zero matrices, matching the convention that
// makes the torsion/reflexiveness computations read off the input presentation.
Presentation transpose_module(const Presentation& m);

// t(M) presented as Ext^1(M^T, A).
HomologyResult torsion_presentation(const AlgebraPtr& a, const Presentation& m);

// Yes iff Ext^1(M^T, A) = 0.
TestVerdict torsion_free_test(const AlgebraPtr& a, const Presentation& m);

// Yes iff M^* = 0 under the chosen convention.
TestVerdict torsion_module_test(const AlgebraPtr& a, const Presentation& m,
                                DeltaAConvention conv);

// Yes iff Ext^1(M^T, A) = Ext^2(M^T, A) = 0.
TestVerdict reflexive_test(const AlgebraPtr& a, const Presentation& m);

} // namespace skewpbw
