#include <doctest.h>

#include <random>

#include "sextic/classify.hpp"

using namespace sextic;

namespace {

CoordinateJets random_unit_jets(std::mt19937& rng, int trunc) {
    std::uniform_int_distribution<long> c(-2, 2);
    std::uniform_int_distribution<int> e(0, 4);
    Germ x = Germ::var_u(), y = Germ::var_v();
    for (int i = 0; i < 3; ++i) {
        int a = e(rng), b = e(rng);
        if (a + b >= 2) x.set_coeff(a, b, x.coeff(a, b) + Scalar(c(rng)));
        int a2 = e(rng), b2 = e(rng);
        if (a2 + b2 >= 2) y.set_coeff(a2, b2, y.coeff(a2, b2) + Scalar(c(rng)));
    }
    return CoordinateJets(x.truncated(trunc), y.truncated(trunc));
}

} // namespace

TEST_CASE("classification of the normal forms") {
    CHECK(classify(parse_germ("v^2 + u^3")) == SingularityType::A(2));
    CHECK(classify(parse_germ("v^3 + u^4")) == SingularityType::E(6));
    CHECK(classify(parse_germ("v^3 + u^6")) == SingularityType::B(3, 6));
    CHECK(classify(parse_germ("v^2 + u^2")) == SingularityType::A(1));
    CHECK(classify(parse_germ("u v")) == SingularityType::A(1));
    CHECK(classify(parse_germ("v^2 u + u^3")) == SingularityType::D(4));
    CHECK(classify(parse_germ("v^2 u + u^7")) == SingularityType::D(8));
    CHECK(classify(parse_germ("v^3 + v u^3")) == SingularityType::E(7));
    CHECK(classify(parse_germ("v^3 + u^5")) == SingularityType::E(8));
}

TEST_CASE("classification of every catalog normal form round-trips") {
    for (const auto& t : catalog_all_types()) {
        Germ f = catalog_normal_form(t);
        int trunc = std::max(16, catalog_mu(t) + 4);
        CAPTURE(t.str());
        CHECK(classify(f, trunc) == t);
        CHECK(milnor_number(f) == catalog_mu(t));
    }
}

TEST_CASE("normal coordinates: A-series square completion") {
    // (y - x^2)^2 - x^5 is A4 in disguise; v = y - x^2 up to higher order
    Germ f = parse_germ("(v - u^2)^2 - u^5");
    CHECK(classify(f) == SingularityType::A(4));
    CoordinateJets jets = normal_coordinates(f, SingularityType::A(4));
    Germ model = substitute(f.truncated(16), jets);
    // f(jets) = v^2 - u^5 modulo degree 6 (up to sign conventions of completion)
    CHECK(equal_mod(model, parse_germ("v^2 - u^5"), 6));

    // identity on an exact normal form
    Germ a2 = parse_germ("v^2 + u^3");
    CoordinateJets j2 = normal_coordinates(a2, SingularityType::A(2));
    CHECK(substitute(a2, j2).truncated(16) == a2.truncated(16));

    // y^2 + 2x^2 y + x^4 + x^7 = (y + x^2)^2 + x^7 is A6
    Germ f3 = parse_germ("v^2 + 2u^2 v + u^4 + u^7");
    CHECK(classify(f3) == SingularityType::A(6));
    Germ model3 = substitute(f3.truncated(16), normal_coordinates(f3, SingularityType::A(6)));
    CHECK(equal_mod(model3, parse_germ("v^2 + u^7"), 8));
}

TEST_CASE("normal coordinates reach a convenient non-degenerate model") {
    for (const auto& t : catalog_all_types()) {
        if (catalog_mu(t) > 12) continue; // keep the unit suite quick
        Germ f = catalog_normal_form(t);
        // twist by a mild unit-jet change and recover the model
        CoordinateJets twist(Germ::var_u() + Germ::monomial(0, 2, Scalar(1)).truncated(16),
                             (Germ::var_v() + Germ::monomial(2, 0, Scalar(1))).truncated(16));
        Germ g = substitute(f.truncated(16), twist);
        CAPTURE(t.str());
        SingularityType found = classify(g);
        CHECK(found == t);
    }
}

TEST_CASE("delta invariants") {
    CHECK(delta_invariant(SingularityType::D(4)) == 3);
    CHECK(delta_invariant(SingularityType::A(5)) == 3);
    CHECK(delta_invariant(SingularityType::A(2)) == 1);
    CHECK(delta_invariant(SingularityType::E(6)) == 3);
    CHECK(delta_invariant(SingularityType::E(7)) == 4);
    CHECK(delta_invariant(SingularityType::B(6, 6)) == 15);
}

TEST_CASE("plucker diagnostic") {
    auto D4 = SingularityType::D(4);
    auto A5 = SingularityType::A(5);
    CHECK_FALSE(plucker_check({D4, D4, D4, D4}));          // 4 D4: 12 > 10
    CHECK(plucker_check({SingularityType::A(2), SingularityType::A(2), SingularityType::A(2),
                         SingularityType::A(2), SingularityType::A(2), SingularityType::A(2)}));
    CHECK(plucker_check({A5, A5, A5})); // 9 <= 10
    CHECK_FALSE(plucker_check({D4, D4, D4, A5}));
}

TEST_CASE("classification is invariant under unit jets") {
    std::mt19937 rng(4242);
    std::vector<SingularityType> sample{SingularityType::A(2), SingularityType::A(5), SingularityType::D(4),
                                        SingularityType::D(6), SingularityType::E(6), SingularityType::E(7),
                                        SingularityType::B(3, 6)};
    for (const auto& t : sample) {
        Germ f = catalog_normal_form(t);
        for (int i = 0; i < 7; ++i) {
            CoordinateJets jets = random_unit_jets(rng, 12);
            Germ g = substitute(f.truncated(12), jets);
            CAPTURE(t.str());
            CHECK(classify(g, 12) == t);
        }
    }
}

TEST_CASE("principal tangential direction meets the curve with multiplicity >= 4") {
    // L_v = v + a u^2 against the normal forms, for A_j (j>=3), E, D_k (k>=5)
    std::vector<SingularityType> sample{SingularityType::A(3), SingularityType::A(5), SingularityType::E(6),
                                        SingularityType::E(7), SingularityType::E(8), SingularityType::D(5),
                                        SingularityType::D(7)};
    for (const auto& t : sample) {
        Germ f = catalog_normal_form(t);
        for (long a : {0L, 1L, -1L}) {
            Germ L = Germ::var_v() + Germ::monomial(2, 0, Scalar(a));
            CAPTURE(t.str());
            // intersection_at_least also covers E7 at a = 0, where v divides f
            CHECK(intersection_at_least(L, f, 4));
        }
    }
}

TEST_CASE("declared type mismatches are hard errors") {
    Germ f = parse_germ("v^2 + u^3");
    CHECK_THROWS_AS(normal_coordinates(f, SingularityType::A(3)), verification_error);
    LocalData ok = analyze_germ(f, SingularityType::A(2), std::nullopt);
    CHECK(ok.type == SingularityType::A(2));
    CHECK_THROWS_AS(analyze_germ(f, SingularityType::A(4), std::nullopt), verification_error);
}

TEST_CASE("Sp germs with a non-unit face constant") {
    // (v^2 - 2u^3)^2 + (uv)^3: same resolution combinatorics, shift c = 2
    Germ f = parse_germ("(v^2 - 2u^3)^2 + u^3 v^3");
    CHECK(classify(f) == SingularityType::Sp(1));
    LocalData data = analyze_germ(f, std::nullopt, std::nullopt);
    CHECK(data.rho == std::vector<int>{0, 0, 1, 3, 6});
    CHECK(data.ideals[4].equivalent(parse_ideal("<u^4, v^2 - 2u^3, v^3, u^2 v>")));
    CHECK(sp_face_shift(f) == Scalar(2));
}

TEST_CASE("multiplier ideals for other curve degrees") {
    // the same germ contributes differently on a degree-8 curve
    Germ cusp = parse_germ("v^2 + u^3");
    CHECK(multiplier_ideal_monomial(cusp, 5, 8).is_unit());
    CHECK(multiplier_ideal_monomial(cusp, 7, 8).equivalent(parse_ideal("<u, v>")));
    LocalData data = analyze_germ(cusp, std::nullopt, std::nullopt, 16, 8);
    CHECK(data.rho.size() == 7);
    // threshold floor(6k/8) - |Q| + 1 first turns positive at k = 7
    CHECK(data.rho == std::vector<int>{0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("conjugate tangent lines: Unknown over Q, resolved by user jets over Q(s)") {
    // C6,6-equisingular germ whose double tangent lines are u = +-sqrt(2) v:
    // (u^2 - 2v^2)^2 + (u + s v)^6 + (u - s v)^6 expands rationally
    Germ f = parse_germ("(u^2 - 2v^2)^2 + 2u^6 + 30 u^4 v^2 + 60 u^2 v^4 + 8 v^6");
    CHECK(classify(f).is_unknown());
    CHECK_THROWS_AS(analyze_germ(f, std::nullopt, std::nullopt), unsupported_germ);

    // over Q(s), s^2 = 2, the user may supply the splitting coordinates
    auto field = std::make_shared<const NumberField>(std::vector<long>{-2, 0, 1});
    Scalar s = Scalar::generator(field);
    Scalar half{rat_of(1, 2)};
    // x = (u + v)/2, y = (u - v)/(2s): the inverse of (u,v) -> (u+sv, u-sv)
    Germ x = Germ::monomial(1, 0, half) + Germ::monomial(0, 1, half);
    Germ y = Germ::monomial(1, 0, half / s) + Germ::monomial(0, 1, -(half / s));
    CoordinateJets user(std::move(x), std::move(y));
    LocalData data = analyze_germ(f.promote(field), std::nullopt, user);
    CHECK(data.type == SingularityType::C(6, 6));
    CHECK(data.rho == std::vector<int>{0, 0, 1, 3, 5});
}

TEST_CASE("analyze_germ produces the expected local data") {
    LocalData a2 = analyze_germ(parse_germ("v^2 + u^3"), std::nullopt, std::nullopt);
    CHECK(a2.rho == std::vector<int>{0, 0, 0, 0, 1});
    CHECK(a2.ideals[4].equivalent(parse_ideal("<u, v>")));

    LocalData sp1 = analyze_germ(parse_germ("(v^2 - u^3)^2 + u^3 v^3"), std::nullopt, std::nullopt);
    CHECK(sp1.type == SingularityType::Sp(1));
    CHECK(sp1.rho == std::vector<int>{0, 0, 1, 3, 6});
    CHECK(sp1.ideals[4].equivalent(parse_ideal("<u^4, v^2 - u^3, v^3, u^2 v>")));

    // smooth points are rejected
    CHECK_THROWS_AS(analyze_germ(parse_germ("v + u^2"), std::nullopt, std::nullopt), verification_error);
}
