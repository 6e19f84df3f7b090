#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cubic/symbols.hpp"
#include "oracles.hpp"

using namespace cubic;
using namespace cubic::tower;
using namespace cubic::symbols;

namespace {

TowerField complex_tower(int n) {
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("l" + std::to_string(i));
    return TowerField(BaseField::complex(), vars);
}

ClassVector cv_of(const TowerField& F, const MonomialElement& m, int ell = 3) {
    return class_of(m, F, ell);
}

CohomologyClass random_class(std::mt19937& rng, const TowerField& F, int degree, int ell = 3) {
    std::size_t d = class_dim(F, ell);
    CohomologyClass c(ell, class_generator_names(F, ell), base_class_dim(F.base, ell), {},
                      degree);
    std::uniform_int_distribution<int> coeff(0, ell - 1);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(d) - 1);
    int terms = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> mono;
        while (static_cast<int>(mono.size()) < degree) {
            int g = pick(rng);
            if (std::find(mono.begin(), mono.end(), g) == mono.end()) mono.push_back(g);
        }
        std::sort(mono.begin(), mono.end());
        c.add_term(mono, coeff(rng));
    }
    return c;
}

}  // namespace

TEST_CASE("symbol of independent variables is a basis monomial") {
    TowerField F = complex_tower(2);
    auto s = symbol(F, 3, {cv_of(F, MonomialElement::variable("l1")),
                           cv_of(F, MonomialElement::variable("l2"))});
    CHECK(s.terms().size() == 1);
    CHECK(s.terms().begin()->first == std::vector<int>{0, 1});
    CHECK(s.terms().begin()->second == 1);
    CHECK(s.to_text() == "1*(l1^l2)");
}

TEST_CASE("symbol is alternating") {
    TowerField F = complex_tower(2);
    auto l1 = cv_of(F, MonomialElement::variable("l1"));
    auto s = symbol(F, 3, {l1, l1});
    CHECK(s.is_zero());
    CHECK(s.degree() == 2);
}

TEST_CASE("bilinearity: (l1*l2, l2) = (l1, l2)") {
    TowerField F = complex_tower(2);
    auto prod = cv_of(F, MonomialElement::variable("l1") * MonomialElement::variable("l2"));
    auto l2 = cv_of(F, MonomialElement::variable("l2"));
    auto s = symbol(F, 3, {prod, l2});
    auto expected = symbol(F, 3, {cv_of(F, MonomialElement::variable("l1")), l2});
    CHECK(s == expected);
}

TEST_CASE("cup with zero and squares") {
    TowerField F = complex_tower(3);
    auto e1 = symbol(F, 3, {cv_of(F, MonomialElement::variable("l1"))});
    auto zero = CohomologyClass::zero(3, class_generator_names(F, 3), 0, 1);
    CHECK(cup(e1, zero).is_zero());
    // (e1 + e2) cup (e1 + e2) = 0 for odd ell
    auto sum = e1;
    sum.add_term({1}, 1);
    CHECK(cup(sum, sum).is_zero());
}

TEST_CASE("residue examples") {
    TowerField F = complex_tower(2);
    auto w = symbol(F, 3, {cv_of(F, MonomialElement::variable("l1")),
                           cv_of(F, MonomialElement::variable("l2"))});
    auto r = residue(w, "l2");
    CHECK(r.to_text() == "1*(l1)");
    auto e1 = symbol(F, 3, {cv_of(F, MonomialElement::variable("l1"))});
    CHECK(residue(e1, "l2").is_zero());
    CHECK_THROWS_AS(residue(e1, "l1"), precondition_error);
}

TEST_CASE("long chain residue is nonzero") {
    TowerField F(BaseField::finite(7), {"l1", "l2", "l3", "l4", "l5"});
    std::vector<ClassVector> classes{cv_of(F, MonomialElement::from_rational(3))};
    for (const auto& v : F.variables) classes.push_back(cv_of(F, MonomialElement::variable(v)));
    auto chain = symbol(F, 3, classes);
    CHECK_FALSE(chain.is_zero());
    auto witness = nonvanishing_witness(chain);
    REQUIRE(witness.size() == 1);
    CHECK(witness[0] == "u^l1^l2^l3^l4^l5");
    auto r = residue(chain, "l5");
    CHECK_FALSE(r.is_zero());
    CHECK(r.to_text() == "2*(u^l1^l2^l3^l4)");
}

TEST_CASE("specialize keeps the v-free part") {
    TowerField F(BaseField::finite(7), {"l1", "l2"});
    auto a = cv_of(F, MonomialElement::from_rational(3));
    auto l1 = cv_of(F, MonomialElement::variable("l1"));
    auto l2 = cv_of(F, MonomialElement::variable("l2"));
    // alpha = (a, l1) + (l1, l2)
    auto alpha = symbol(F, 3, {a, l1});
    auto second = symbol(F, 3, {l1, l2});
    for (const auto& [m, c] : second.terms()) alpha.add_term(m, c);
    auto s = specialize(alpha, "l2");
    CHECK(s == symbol(F.drop_outermost(), 3, {class_of(MonomialElement::from_rational(3),
                                                        F.drop_outermost(), 3),
                                              class_of(MonomialElement::variable("l1"),
                                                       F.drop_outermost(), 3)}));
    CHECK(specialize(symbol(F, 3, {l1}), "l2") == symbol(F.drop_outermost(), 3,
          {class_of(MonomialElement::variable("l1"), F.drop_outermost(), 3)}));
}

TEST_CASE("expansion with repeats vanishes") {
    TowerField F = complex_tower(2);
    auto prod = cv_of(F, MonomialElement::variable("l1") * MonomialElement::variable("l2"));
    auto l1 = cv_of(F, MonomialElement::variable("l1"));
    auto l2 = cv_of(F, MonomialElement::variable("l2"));
    CHECK(symbol(F, 3, {prod, l1, l2}).is_zero());
}

TEST_CASE("tokens are inert generators") {
    TowerField F = complex_tower(1);
    GeometricToken token{"(x+jy)/(x+y)"};
    auto s = symbol(F, 3, {cv_of(F, MonomialElement::variable("l1"))}, {token});
    CHECK_FALSE(s.is_zero());
    CHECK(s.degree() == 2);
    // The token survives the residue at l1 (it counts as a base generator).
    auto r = residue(s, "l1");
    CHECK_FALSE(r.is_zero());
    CHECK(r.tokens() == std::vector<std::string>{"(x+jy)/(x+y)"});
    // Sign: the token generator sits after l1 in the monomial order.
    CHECK(r.terms().begin()->second == 3 - 1);
}

TEST_CASE("shape errors") {
    TowerField F2 = complex_tower(2);
    TowerField F3 = complex_tower(3);
    auto a = symbol(F2, 3, {cv_of(F2, MonomialElement::variable("l1"))});
    auto b = symbol(F3, 3, {cv_of(F3, MonomialElement::variable("l1"))});
    CHECK_THROWS_AS(cup(a, b), shape_error);
    ClassVector bad{3, {1, 0, 0}};
    CHECK_THROWS_AS(symbol(F2, 3, {bad}), shape_error);
    CHECK_THROWS_AS(symbol(F2, 2, {}), unsupported_error);
}

TEST_CASE("graded commutativity and splitting on random classes") {
    std::mt19937 rng(987654);
    TowerField F = complex_tower(4);
    for (int trial = 0; trial < 400; ++trial) {
        int p = std::uniform_int_distribution<int>(0, 3)(rng);
        int q = std::uniform_int_distribution<int>(0, 3)(rng);
        auto alpha = random_class(rng, F, p);
        auto beta = random_class(rng, F, q);
        auto ab = cup(alpha, beta);
        auto ba = cup(beta, alpha);
        if ((p * q) % 2 == 1) {
            // negate ba mod 3
            auto neg = CohomologyClass::zero(3, ba.tower_gens(), ba.base_gens(), ba.degree());
            for (const auto& [m, c] : ba.terms()) neg.add_term(m, 3 - c);
            CHECK(ab == neg);
        } else {
            CHECK(ab == ba);
        }

        if (p >= 1) {
            auto alpha2 = random_class(rng, F, p);
            auto res = residue(alpha2, "l4");
            auto spec = specialize(alpha2, "l4");
            auto v = symbol(F, 3, {cv_of(F, MonomialElement::variable("l4"))});
            auto reconstructed = cup(lift(res, "l4"), v);
            auto lifted_spec = lift(spec, "l4");
            for (const auto& [m, c] : lifted_spec.terms()) reconstructed.add_term(m, c);
            CHECK(reconstructed == alpha2);
        }
    }
}

TEST_CASE("normal form agrees with the dense tensor oracle") {
    std::mt19937 rng(13579);
    TowerField F = complex_tower(5);
    int checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        int p = std::uniform_int_distribution<int>(1, 3)(rng);
        int q = std::uniform_int_distribution<int>(0, 2)(rng);
        auto alpha = random_class(rng, F, p);
        auto beta = random_class(rng, F, q);

        auto dense_a = oracles::dense_from_normal_form(alpha);
        auto dense_b = oracles::dense_from_normal_form(beta);
        auto dense_prod = oracles::dense_cup(dense_a, dense_b);
        CHECK(oracles::dense_equal(dense_prod,
                                   oracles::dense_from_normal_form(cup(alpha, beta))));

        auto dense_res = oracles::dense_residue_at_last(dense_a);
        CHECK(oracles::dense_equal(dense_res,
                                   oracles::dense_from_normal_form(residue(alpha, "l5"))));
        auto dense_spec = oracles::dense_specialize_at_last(dense_a);
        CHECK(oracles::dense_equal(dense_spec,
                                   oracles::dense_from_normal_form(specialize(alpha, "l5"))));
        ++checked;
    }
    CHECK(checked == 500);
}

TEST_CASE("basis independence of nonvanishing") {
    TowerField F(BaseField::finite(7), {"l1", "l2"});
    MonomialElement a = MonomialElement::from_rational(3);
    MonomialElement shifted = a * MonomialElement::variable("l1", 3);
    CHECK(class_of(a, F, 3) == class_of(shifted, F, 3));
    auto s1 = symbol(F, 3, {cv_of(F, a), cv_of(F, MonomialElement::variable("l2"))});
    auto s2 = symbol(F, 3, {cv_of(F, shifted), cv_of(F, MonomialElement::variable("l2"))});
    CHECK(is_zero(s1) == is_zero(s2));
}
