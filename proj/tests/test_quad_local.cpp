#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "bcdim/errors.hpp"
#include "bcdim/quad_local.hpp"

using namespace bcdim;

TEST_CASE("quadratic extension classes require odd primes") {
    CHECK_THROWS_AS(QuadExtClass(QuadExtKind::RamifiedPi, 2), unsupported_input);
    CHECK_THROWS_AS(QuadExtClass(QuadExtKind::Unramified, 4), invalid_input);
    CHECK_THROWS_AS(QuadExtClass(QuadExtKind::Unramified, 1), invalid_input);
    const QuadExtClass u(QuadExtKind::Unramified, 7);
    CHECK_FALSE(u.ramified());
    CHECK(QuadExtClass(QuadExtKind::RamifiedEpsPi, 3).ramified());
}

TEST_CASE("relative invariants (e, f, d)") {
    CHECK(rel_data(QuadExtClass(QuadExtKind::Unramified, 5)) == RelQuadExt(1, 2, 0));
    CHECK(rel_data(QuadExtClass(QuadExtKind::RamifiedPi, 5)) == RelQuadExt(2, 1, 1));
    CHECK(rel_data(QuadExtClass(QuadExtKind::RamifiedEpsPi, 5)) == RelQuadExt(2, 1, 1));
    CHECK_THROWS_AS(RelQuadExt(2, 1, 0), invalid_input); // tame different must be 1
    CHECK_THROWS_AS(RelQuadExt(1, 2, 1), invalid_input);
    CHECK_THROWS_AS(RelQuadExt(2, 2, 1), invalid_input); // e*f = 2 violated
}

TEST_CASE("field construction") {
    CHECK_THROWS_AS(ImagQuadField(1), invalid_input);   // disc -1 is even-type
    CHECK_THROWS_AS(ImagQuadField(5), invalid_input);   // 5 = 1 mod 4
    CHECK_THROWS_AS(ImagQuadField(27), invalid_input);  // not squarefree
    CHECK_THROWS_AS(ImagQuadField(-3), invalid_input);

    const ImagQuadField K(15);
    CHECK(K.disc == -15);
    CHECK(K.ramified_primes == std::vector<long long>{3, 5});

    const ImagQuadField K7 = ImagQuadField::from_disc(-7);
    CHECK(K7.D == 7);
    CHECK(K7.ramified_primes == std::vector<long long>{7});
    CHECK_THROWS_AS(ImagQuadField::from_disc(7), invalid_input);
}

TEST_CASE("splitting of rational primes") {
    const ImagQuadField K = ImagQuadField::from_disc(-7);
    CHECK(splitting_type(K, 11) == Splitting::Split);   // (-7|11) = +1
    CHECK(splitting_type(K, 3) == Splitting::Inert);    // (-7|3) = -1
    CHECK(splitting_type(K, 5) == Splitting::Inert);
    CHECK(splitting_type(K, 7) == Splitting::Ramified);
    CHECK(splitting_type(K, 2) == Splitting::Split);    // -7 = 1 mod 8
    CHECK(splitting_type(K, 23) == Splitting::Split);
    CHECK_THROWS_AS(splitting_type(K, 12), invalid_input);
}

TEST_CASE("local completion at ramified primes") {
    // disc = -3 at p = 3: cofactor -1 is a non-residue mod 3.
    CHECK(localize(ImagQuadField(3), 3).kind == QuadExtKind::RamifiedEpsPi);
    // disc = -7 at p = 7: cofactor -1 is a non-residue mod 7.
    CHECK(localize(ImagQuadField(7), 7).kind == QuadExtKind::RamifiedEpsPi);
    // disc = -15 at p = 3: cofactor -5 = 1 mod 3 is a residue.
    CHECK(localize(ImagQuadField(15), 3).kind == QuadExtKind::RamifiedPi);
    // disc = -15 at p = 5: cofactor -3 = 2 mod 5 is a non-residue.
    CHECK(localize(ImagQuadField(15), 5).kind == QuadExtKind::RamifiedEpsPi);
    // disc = -11 at p = 11: cofactor -1, and (-1|11) = -1.
    CHECK(localize(ImagQuadField(11), 11).kind == QuadExtKind::RamifiedEpsPi);

    CHECK(localize(ImagQuadField(15), 5).p == 5);
    CHECK_THROWS_AS(localize(ImagQuadField(15), 7), invalid_input); // unramified p
    CHECK_THROWS_AS(localize(ImagQuadField(7), 2), invalid_input);
}

TEST_CASE("compositum invariants over each factor") {
    const long long ps[] = {3, 5, 7, 11};
    const QuadExtKind kinds[] = {QuadExtKind::Unramified, QuadExtKind::RamifiedPi,
                                 QuadExtKind::RamifiedEpsPi};
    for (long long p : ps) {
        for (QuadExtKind k1 : kinds) {
            for (QuadExtKind k2 : kinds) {
                const QuadExtClass e1(k1, p), e2(k2, p);
                if (k1 == k2) {
                    CHECK_THROWS_AS(compositum_over(e1, e2), invalid_input);
                    continue;
                }
                const CompositumRel rel = compositum_over(e1, e2);
                // The biquadratic compositum is unramified over a ramified
                // factor and ramified over the unramified factor.
                CHECK(rel.over_first == (e1.ramified() ? RelQuadExt(1, 2, 0)
                                                       : RelQuadExt(2, 1, 1)));
                CHECK(rel.over_second == (e2.ramified() ? RelQuadExt(1, 2, 0)
                                                        : RelQuadExt(2, 1, 1)));
            }
        }
    }
    CHECK_THROWS_AS(compositum_over(QuadExtClass(QuadExtKind::Unramified, 3),
                                    QuadExtClass(QuadExtKind::RamifiedPi, 5)),
                    invalid_input);
}
