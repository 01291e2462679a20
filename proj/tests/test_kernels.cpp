#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_util.hpp"
#include "voatwist/kernels.hpp"

using namespace voatwist;

namespace {
const std::vector<std::string> ZW{"z1", "w"};
}

TEST_CASE("kernel closed forms at small indices") {
    CHECK(f_kernel({Exponent(0), 0})
              .rational_equal(MultiPointFunction::inv_difference(ZW, "z1", "w", 1)));
    MultiPointFunction expect10 = MultiPointFunction::inv_difference(ZW, "z1", "w", 1)
                                      .mul_power("z1", Exponent(-1))
                                      .mul_power("w", Exponent(1));
    CHECK(f_kernel({Exponent(1), 0}).rational_equal(expect10));

    // oracle for (1,1): d_w(w/(z-w)) = z/(z-w)^2, then z^{-1} z/(z-w)^2
    MultiPointFunction wover = MultiPointFunction::inv_difference(ZW, "z1", "w", 1)
                                   .mul_power("w", Exponent(1));
    MultiPointFunction dw = wover.derivative("w");
    MultiPointFunction direct = MultiPointFunction::inv_difference(ZW, "z1", "w", 2)
                                    .mul_power("z1", Exponent(1));
    CHECK(dw.rational_equal(direct));
    CHECK(f_kernel({Exponent(1), 1})
              .rational_equal(MultiPointFunction::inv_difference(ZW, "z1", "w", 2)));
}

TEST_CASE("kernel expansions at infinity and zero, leading terms") {
    for (Exponent n : {Exponent(1, 2), Exponent(-1), Exponent(3, 2)}) {
        SeriesMPF inf = f_kernel_expansion({n, 0}, ExpansionSite::at_infinity("z1"),
                                           -n - Exponent(4));
        for (long long j = 0; j < 3; ++j) {
            auto it = inf.terms.find(-n - Exponent(j + 1));
            REQUIRE(it != inf.terms.end());
            CHECK(it->second.rational_equal(
                MultiPointFunction::power({"w"}, "w", n + Exponent(j), 1)));
        }
        SeriesMPF zer = f_kernel_expansion({n, 0}, ExpansionSite::at_zero("z1"),
                                           -n + Exponent(4));
        for (long long j = 0; j < 3; ++j) {
            auto it = zer.terms.find(Exponent(j) - n);
            REQUIRE(it != zer.terms.end());
            CHECK(it->second.rational_equal(
                MultiPointFunction::power({"w"}, "w", n - Exponent(j + 1), -1)));
        }
    }
}

TEST_CASE("kernel diagonal expansion against the binomial series oracle") {
    // F_{1/2,0} near z = w: sum_p binom(-1/2, p) w^{-p} (z-w)^{p-1}
    SeriesMPF s = f_kernel_expansion({Exponent(1, 2), 0},
                                     ExpansionSite::at_diagonal("z1", "w"), Exponent(3));
    for (long long p = 0; p < 4; ++p) {
        auto it = s.terms.find(Exponent(p - 1));
        REQUIRE(it != s.terms.end());
        CHECK(it->second.rational_equal(
            MultiPointFunction::power({"w"}, "w", Exponent(-p), binomial(Rational(-1, 2), p))));
    }
    auto it = s.terms.find(Exponent(-1));
    CHECK(it->second.rational_equal(MultiPointFunction::constant({"w"}, 1)));
    auto it0 = s.terms.find(Exponent(0));
    CHECK(it0->second.rational_equal(
        MultiPointFunction::power({"w"}, "w", Exponent(-1), Rational(-1, 2))));
}

TEST_CASE("closed-form expansions match the generic expander") {
    for (long long half = -4; half <= 4; ++half) {
        Exponent n(half, 2);
        for (int i = 0; i <= 2; ++i) {
            MultiPointFunction F = f_kernel({n, i});
            for (auto site : {ExpansionSite::at_zero("z1"), ExpansionSite::at_infinity("z1"),
                              ExpansionSite::at_diagonal("z1", "w")}) {
                Exponent trunc = site.tag == ExpansionSite::AtInfinity ? -n - Exponent(7)
                                                                       : -n + Exponent(6);
                if (site.tag == ExpansionSite::AtDiagonal) trunc = Exponent(6);
                SeriesMPF generic = F.expand(site, trunc);
                SeriesMPF closed = f_kernel_expansion({n, i}, site, trunc);
                for (auto& [e, c] : closed.terms) {
                    if (!generic.window.contains(e)) continue;
                    auto it = generic.terms.find(e);
                    MultiPointFunction g =
                        it == generic.terms.end() ? MultiPointFunction::zero({"w"}) : it->second;
                    CHECK(c.rational_equal(g));
                }
                for (auto& [e, c] : generic.terms)
                    if (closed.window.contains(e) && !closed.terms.count(e))
                        CHECK(c.is_zero());
            }
        }
    }
}

TEST_CASE("recurrence defect vanishes") {
    CHECK(kernel_recurrence_defect(Exponent(0), 0).is_zero());
    CHECK(kernel_recurrence_defect(Exponent(1, 2), 1).is_zero());
    CHECK(kernel_recurrence_defect(Exponent(-3, 2), 2).is_zero());
    for (long long half = -4; half <= 4; ++half)
        for (int i = 0; i <= 4; ++i)
            CHECK(kernel_recurrence_defect(Exponent(half, 2), i).is_zero());
}

TEST_CASE("derivative identities for kernels") {
    for (long long half = -3; half <= 3; ++half) {
        Exponent n(half, 2);
        for (int i = 0; i <= 3; ++i) {
            MultiPointFunction dw = f_kernel({n, i}).derivative("w");
            MultiPointFunction rhs = f_kernel({n, i + 1}) * Rational(i + 1);
            CHECK(dw.rational_equal(rhs));
            MultiPointFunction dz = f_kernel({n, i}).derivative("z1");
            MultiPointFunction rhs2 = f_kernel({n + Exponent(1), i + 1}) * Rational(-(i + 1));
            CHECK(dz.rational_equal(rhs2));
        }
    }
}

TEST_CASE("residue sum formula on the twisted line") {
    // z^{-1/2}/(z-w) with T=2, r=1: curve residues 0 at 0, -2 at infinity,
    // +1 at the branch point (classical P^1 oracle on dz/(z-w))
    MultiPointFunction f = MultiPointFunction::inv_difference(ZW, "z1", "w", 1)
                               .mul_power("z1", Exponent(-1, 2));
    MultiPointFunction s = f.mul_power("z1", Exponent(1, 2));
    CHECK(s.residue_at_zero("z1").is_zero());
    CHECK(s.residue_at_infinity("z1").rational_equal(MultiPointFunction::constant({"w"}, 1)));
    CHECK(s.residue_at_diagonal("z1", "w")
              .rational_equal(MultiPointFunction::constant({"w"}, 1)));
    PuiseuxSeries total = residue_sum(f, 1, 2, Exponent(8));
    CHECK(total.is_zero());

    // constants have no poles at all
    CHECK(residue_sum(MultiPointFunction::constant(ZW, Rational(3)), 0, 2, Exponent(4)).is_zero());

    // kernels with the fractional prefactor absorbed
    for (long long m = -2; m <= 2; ++m)
        for (int i = 0; i <= 2; ++i) {
            MultiPointFunction F = f_kernel({Exponent(m), i});
            CHECK(residue_sum(F, 0, 2, Exponent(8)).is_zero());
        }

    MultiPointFunction bad = MultiPointFunction::inv_difference(ZW, "z1", "w", 1)
                                 .mul_power("z1", Exponent(-1, 2));
    CHECK_THROWS_AS((void)residue_sum(bad, 0, 2, Exponent(4)), NotSingleValued);
}

TEST_CASE("residue sum vanishes on random admissible functions") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        long long r = trial % 2;
        MultiPointFunction f = testutil::random_two_point(rng, 2, r);
        PuiseuxSeries total = residue_sum(f, r, 2, Exponent(10));
        CHECK(total.is_zero());
    }
}
