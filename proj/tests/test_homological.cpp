#include "doctest.h"
#include "oracle/commutative.hpp"
#include "test_helpers.hpp"

using namespace skewpbw;
using namespace skewpbw::testing;

namespace {

MatrixA worked_module_gens(const AlgebraPtr& qp) {
    return cols_from_strings(qp, 4,
                             {"1,0,1,0", "0,1,0,1", "x,x,0,0", "y,0,0,0", "0,0,0,y^2",
                              "0,0,y,x"});
}

Presentation residue_field(const AlgebraPtr& c) {
    return presentation_from_delta(c, Side::left, 1, cols_from_strings(c, 1, {"x", "y"}));
}

oracle::KeyOrder oracle_order(const AlgebraPtr& a) {
    oracle::KeyOrder ord;
    ord.base = a->order().base;
    ord.top = a->order().strategy == ModuleStrategy::top;
    return ord;
}

oracle::Element to_oracle(const VectorA& v, const oracle::KeyOrder& ord) {
    oracle::Element e = oracle::make_element(ord);
    for (int pos = 0; pos < v.rank(); ++pos)
        for (const auto& t : v.entries[pos].terms)
            oracle::add_term(e, oracle::Key{pos, std::vector<unsigned>(t.mono.e.begin(),
                                                                       t.mono.e.end())},
                             t.coeff);
    return e;
}

VectorA from_oracle(const AlgebraPtr& a, const oracle::Element& e, int rank) {
    VectorA v(rank);
    std::vector<std::vector<Term>> buckets(rank);
    for (const auto& [k, c] : e) {
        Monomial m(a->nvars());
        for (size_t i = 0; i < k.e.size(); ++i)
            m.e[i] = k.e[i];
        buckets[k.pos].push_back({c, m});
    }
    for (int pos = 0; pos < rank; ++pos)
        v.entries[pos] = poly_normalize(a->order(), std::move(buckets[pos]));
    return v;
}

} // namespace

TEST_CASE("kron block conventions") {
    auto qp = quantum_plane();
    MatrixA q = cols_from_strings(qp, 2, {"x, y", "1, x*y"});
    SUBCASE("I1 (x) Q = Q") { CHECK(kron(*qp, mat_identity(*qp, 1), q) == q); }
    SUBCASE("I3 (x) [1] = I3") {
        MatrixA one = cols_from_strings(qp, 1, {"1"});
        CHECK(kron(*qp, mat_identity(*qp, 3), one) == mat_identity(*qp, 3));
    }
    SUBCASE("[x] (x) I2 = diag(x, x)") {
        MatrixA xmat = cols_from_strings(qp, 1, {"x"});
        MatrixA k = kron(*qp, xmat, mat_identity(*qp, 2));
        CHECK(k.rows == 2);
        CHECK(k.ncols() == 2);
        CHECK(k.at(0, 0) == parse_poly(qp, "x"));
        CHECK(k.at(1, 1) == parse_poly(qp, "x"));
        CHECK(k.at(0, 1).is_zero());
        CHECK(k.at(1, 0).is_zero());
    }
    SUBCASE("mixed-shape identity law") {
        CHECK(kron(*qp, mat_identity(*qp, 2), kron(*qp, mat_identity(*qp, 3), q)) ==
              kron(*qp, mat_identity(*qp, 6), q));
    }
    SUBCASE("transpose distributes entrywise") {
        MatrixA p = cols_from_strings(qp, 1, {"x", "y"});
        CHECK(mat_transpose(kron(*qp, p, q)) == kron(*qp, mat_transpose(p), mat_transpose(q)));
    }
}

TEST_CASE("tensor presentation") {
    auto qp = quantum_plane();
    SUBCASE("A (x) N recovers N's presentation") {
        Rng rng(5150);
        for (int trial = 0; trial < 10; ++trial) {
            MatrixA ngens(2);
            for (int k = 0; k < 2; ++k)
                ngens.cols.push_back(random_vector(rng, *qp, 2, 2, 2));
            Presentation n = presentation(qp, Side::left, ngens);
            HomologyResult t =
                tensor_presentation(qp, ring_presentation(qp, DeltaAConvention::empty), n);
            CHECK(t.ambient == n.rank);
            CHECK(module_equal(qp, Side::left, t.relations, n.delta));
        }
    }
    SUBCASE("A (x) A is free of rank 1") {
        auto ring = ring_presentation(qp, DeltaAConvention::empty);
        HomologyResult t = tensor_presentation(qp, ring, ring);
        CHECK(t.ambient == 1);
        CHECK(t.relations.ncols() == 0);
        CHECK_FALSE(t.zero);
    }
    SUBCASE("commutative <x,y> (x) <x,y> matches the oracle-built relations") {
        auto c = commutative_xy();
        oracle::KeyOrder ord = oracle_order(c);
        MatrixA gens = cols_from_strings(c, 1, {"x", "y"});
        Presentation m = presentation(c, Side::left, gens);
        HomologyResult t = tensor_presentation(c, m, m);
        REQUIRE(t.ambient == 4);
        // oracle route: syzygies of <x, y> via elimination, then the same
        // block assembly computed with oracle arithmetic
        std::vector<oracle::Element> of = {to_oracle(gens.cols[0], ord),
                                           to_oracle(gens.cols[1], ord)};
        std::vector<oracle::Element> oz = oracle::syzygies(of, 1, 2, ord);
        MatrixA syzm(2);
        for (const auto& e : oz)
            syzm.cols.push_back(from_oracle(c, e, 2));
        MatrixA expected = mat_hconcat(kron(*c, syzm, mat_identity(*c, 2)),
                                       kron(*c, mat_identity(*c, 2), syzm));
        CHECK(module_equal(c, Side::left, t.relations, expected));
    }
    SUBCASE("non-central generators are rejected") {
        MatrixA bad = cols_from_strings(qp, 1, {"x"});
        Presentation m = presentation(qp, Side::left, bad);
        CHECK_THROWS_WITH_AS(tensor_presentation(qp, m, m),
                             doctest::Contains("NotCentralizing"), SkewError);
    }
}

TEST_CASE("tor") {
    SUBCASE("tor(A, N, r) vanishes for r >= 1") {
        auto qp = quantum_plane();
        Rng rng(61);
        for (int trial = 0; trial < 5; ++trial) {
            MatrixA ngens(2);
            for (int k = 0; k < 2; ++k)
                ngens.cols.push_back(random_vector(rng, *qp, 2, 2, 2));
            Presentation n = presentation(qp, Side::left, ngens);
            auto ring = ring_presentation(qp, DeltaAConvention::empty);
            CHECK(tor(qp, ring, n, 1).zero);
            CHECK(tor(qp, ring, n, 2).zero);
        }
    }
    SUBCASE("Koszul dimensions of Tor(k, k) over Q[x,y]") {
        auto c = commutative_xy();
        Presentation k = residue_field(c);
        std::vector<uint64_t> dims;
        for (int r = 0; r <= 3; ++r) {
            HomologyResult t = tor(c, k, k, r);
            auto qd = qdimension(c, t.side, t.relations, t.ambient);
            REQUIRE(qd.has_value());
            dims.push_back(*qd);
            CHECK(static_cast<int>(t.generators.size()) == t.ambient);
        }
        CHECK(dims == std::vector<uint64_t>{1, 2, 1, 0});
        CHECK_FALSE(tor(c, k, k, 1).zero);
        CHECK(tor(c, k, k, 3).zero);
    }
    SUBCASE("degrees past the resolution vanish") {
        auto c = commutative_xy();
        Presentation k = residue_field(c);
        CHECK(tor(c, k, k, 5).zero);
    }
}

TEST_CASE("hom") {
    auto qp = quantum_plane();
    SUBCASE("Hom(A, N) is N as a right module") {
        Rng rng(4710);
        for (int trial = 0; trial < 8; ++trial) {
            MatrixA ngens(2);
            for (int k = 0; k < 2; ++k) {
                VectorA v(2);
                v.entries[0] = random_central_poly(rng, *qp, 2, 1);
                v.entries[1] = random_central_poly(rng, *qp, 2, 1);
                ngens.cols.push_back(v);
            }
            ngens = mat_prune_zero_cols(ngens);
            if (ngens.ncols() == 0)
                continue;
            Presentation n = presentation(qp, Side::left, ngens);
            n.gens = ngens;
            HomologyResult h = hom(qp, ring_presentation(qp, DeltaAConvention::empty), n);
            CHECK(h.side == Side::right);
            CHECK(h.ambient == n.rank);
            CHECK(module_equal(qp, Side::right, h.relations, n.delta));
        }
    }
    SUBCASE("Hom(A, A) = A") {
        auto ring = ring_presentation(qp, DeltaAConvention::empty);
        HomologyResult h = hom(qp, ring, ring);
        CHECK(h.ambient == 1);
        CHECK(h.relations.ncols() == 0);
        CHECK_FALSE(h.zero);
    }
    SUBCASE("worked module: U is module-equal to the identity and M* = 0") {
        Presentation m = presentation(qp, Side::left, worked_module_gens(qp));
        HomologyResult h = hom(qp, m, ring_presentation(qp, DeltaAConvention::paper));
        CHECK(module_equal(qp, Side::right, h.subquotient.numerator, mat_identity(*qp, 6)));
        CHECK(h.zero);
    }
    SUBCASE("non-central target generators are rejected") {
        MatrixA bad = cols_from_strings(qp, 1, {"x"});
        Presentation n = presentation(qp, Side::left, bad);
        n.gens = bad;
        CHECK_THROWS_WITH_AS(hom(qp, ring_presentation(qp, DeltaAConvention::empty), n),
                             doctest::Contains("NotCentralizing"), SkewError);
    }
}

TEST_CASE("ext") {
    auto qp = quantum_plane();
    SUBCASE("published chain: Ext^1(M, A) = A^3/<S'>") {
        MatrixA f1 = cols_from_strings(
            qp, 6,
            {"0, -x*y^2, y^2, -x*y, x, 0", "-y^2, x*y, y, x+y, 0, y",
             "y^3, 0, 0, -y^2, x, -y^2"});
        Presentation paper_chain = presentation_from_delta(qp, Side::left, 6, f1);
        paper_chain.complete = true;
        HomologyResult e1 =
            ext(qp, paper_chain, ring_presentation(qp, DeltaAConvention::empty), 1);
        CHECK(e1.side == Side::right);
        CHECK(e1.ambient == 3);
        MatrixA sprime = cols_from_strings(qp, 3,
                                           {"0, y^2, -y^3", "x*y^2, -x*y, 0", "-y^2, -y, 0",
                                            "x*y, -x-y, y^2", "-x, 0, -x", "0, -y, y^2"});
        CHECK(module_equal(qp, Side::right, e1.relations, sprime));
        CHECK_FALSE(e1.zero);
    }
    SUBCASE("honest route from the generators is nonzero in rank 2") {
        Presentation m = presentation(qp, Side::left, worked_module_gens(qp));
        HomologyResult e1 = ext(qp, m, ring_presentation(qp, DeltaAConvention::empty), 1);
        CHECK(e1.ambient == 2);
        CHECK_FALSE(e1.zero);
        CHECK(static_cast<int>(e1.generators.size()) == e1.ambient);
    }
    SUBCASE("Ext^r(A, N) vanishes for r >= 1") {
        Rng rng(8);
        MatrixA ngens(1);
        ngens.cols.push_back([&] {
            VectorA v(1);
            v.entries[0] = random_central_poly(rng, *qp, 2, 1);
            return v;
        }());
        Presentation n = presentation(qp, Side::left, ngens);
        n.gens = ngens;
        auto ring = ring_presentation(qp, DeltaAConvention::empty);
        CHECK(ext(qp, ring, n, 1).zero);
        CHECK(ext(qp, ring, n, 2).zero);
    }
    SUBCASE("Koszul self-duality over Q[x,y]") {
        auto c = commutative_xy();
        Presentation k = residue_field(c);
        auto ring_paper = ring_presentation(c, DeltaAConvention::paper);
        auto ring_empty = ring_presentation(c, DeltaAConvention::empty);
        CHECK(ext(c, k, ring_empty, 0).zero);  // honest Hom(k, A) = 0
        CHECK(ext(c, k, ring_paper, 0).zero);
        CHECK(ext(c, k, ring_empty, 1).zero);
        HomologyResult e2 = ext(c, k, ring_empty, 2);
        CHECK_FALSE(e2.zero);
        CHECK(qdimension(c, e2.side, e2.relations, e2.ambient) == 1);
    }
}

TEST_CASE("identities against the unit module on random small modules") {
    for (auto alg : {quantum_plane(), commutative_xy()}) {
        Rng rng(1414);
        auto ring_empty = ring_presentation(alg, DeltaAConvention::empty);
        for (int trial = 0; trial < 6; ++trial) {
            int rank = 1 + rng.below(2);
            MatrixA ngens(rank);
            int cnt = 1 + rng.below(2);
            for (int k = 0; k < cnt; ++k) {
                VectorA v(rank);
                for (int i = 0; i < rank; ++i)
                    v.entries[i] = random_central_poly(rng, *alg, 2, 1);
                ngens.cols.push_back(v);
            }
            ngens = mat_prune_zero_cols(ngens);
            if (ngens.ncols() == 0)
                continue;
            Presentation n = presentation(alg, Side::left, ngens);
            n.gens = ngens;

            HomologyResult t = tensor_presentation(alg, ring_empty, n);
            CHECK(t.ambient == n.rank);
            CHECK(module_equal(alg, Side::left, t.relations, n.delta));

            CHECK(tor(alg, ring_empty, n, 1).zero);
            CHECK(tor(alg, ring_empty, n, 2).zero);

            HomologyResult h = hom(alg, ring_empty, n);
            CHECK(h.ambient == n.rank);
            CHECK(module_equal(alg, Side::right, h.relations, n.delta));

            CHECK(ext(alg, ring_empty, n, 1).zero);
            CHECK(ext(alg, ring_empty, n, 2).zero);
        }
    }
}

TEST_CASE("commutative tor/ext agree with classical expectations for ideals") {
    auto c = commutative_xy();
    Presentation k = residue_field(c);
    // <x> is free, so its higher Tor vanishes
    Presentation px = presentation(c, Side::left, cols_from_strings(c, 1, {"x"}));
    px.gens = cols_from_strings(c, 1, {"x"});
    CHECK(tor(c, px, k, 1).zero);
    // dimension shift along 0 -> <x,y> -> A -> k -> 0:
    // Tor_1(<x,y>, k) = Tor_2(k, k) = k and Tor_2(<x,y>, k) = 0
    Presentation mxy = presentation(c, Side::left, cols_from_strings(c, 1, {"x", "y"}));
    mxy.gens = cols_from_strings(c, 1, {"x", "y"});
    HomologyResult t1 = tor(c, mxy, k, 1);
    auto qd = qdimension(c, t1.side, t1.relations, t1.ambient);
    REQUIRE(qd.has_value());
    CHECK(*qd == 1);
    CHECK(tor(c, mxy, k, 2).zero);
}
