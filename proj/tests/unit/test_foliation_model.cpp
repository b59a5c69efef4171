#include <catch_amalgamated.hpp>

#include <functional>

#include "fixtures.hpp"
#include "strata/error.hpp"
#include "strata/foliation_model.hpp"
#include "strata/random.hpp"

using namespace strata;

namespace {

ResidueModel two_on_unit(Rational a, Rational b) {
    ResidueModel m;
    m.assign(0, 0, a);
    m.assign(1, 0, b);
    return m;
}

// Searches m in [0, bound]^|J| \ {0} with Σ m_i λ_i = 0, symbol by symbol
// (the symbols are independent over Q).
bool resonant_by_search(const ResidueModel& m, const Stratum& j, int bound) {
    const auto members = j.members();
    std::vector<int> coeff(members.size(), 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
        if (pos == members.size()) {
            if (std::all_of(coeff.begin(), coeff.end(), [](int c) { return c == 0; })) return false;
            std::map<std::size_t, Rational> sums;
            for (std::size_t t = 0; t < members.size(); ++t) {
                const auto& r = m.residue(members[t]);
                sums[r.symbol] += coeff[t] * r.scale;
            }
            return std::all_of(sums.begin(), sums.end(), [](const auto& kv) { return kv.second == 0; });
        }
        for (int c = 0; c <= bound; ++c) {
            coeff[pos] = c;
            if (rec(pos + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

TEST_CASE("classify_stratum examples", "[foliation_model]") {
    const auto m = fixtures::r1_residues();
    const auto nodal = classify_stratum(m, {0, 2});
    CHECK(nodal.kind == StratumClass::Kind::NodalCorner);
    CHECK(nodal.partition.plus == Stratum{0});
    CHECK(nodal.partition.minus == Stratum{2});
    CHECK(classify_stratum(m, {0, 1}).kind == StratumClass::Kind::RealSaddle);
    CHECK(classify_stratum(m, {1, 2, 3}).kind == StratumClass::Kind::Complex);
    CHECK(classify_stratum(m, {1}).kind == StratumClass::Kind::TooSmall);
    CHECK(classify_stratum(m, {}).kind == StratumClass::Kind::TooSmall);
    CHECK_THROWS_AS(classify_stratum(m, {0, 7}), Error);
}

TEST_CASE("same non-real symbol gives a real ratio", "[foliation_model]") {
    ResidueModel m;
    const auto alpha = m.table.add("alpha", SymbolKind::NonReal);
    m.assign(0, alpha, 1);
    m.assign(1, alpha, -2);
    CHECK(ratio_is_real(m, 0, 1));
    CHECK(classify_stratum(m, {0, 1}).kind == StratumClass::Kind::NodalCorner);
}

TEST_CASE("derive_nodal_data examples", "[foliation_model]") {
    const auto r1 = fixtures::r1_structure();
    const auto n = derive_nodal_data(r1, fixtures::r1_residues());
    CHECK(n.strata() == StratumSet{{0, 2}, {1, 2}, {0, 1, 2}});
    CHECK(n.entries.at({0, 2}).same_as({{0}, {2}}));
    CHECK(n.entries.at({1, 2}).same_as({{1}, {2}}));
    CHECK(n.entries.at({0, 1, 2}).same_as({{0, 1}, {2}}));
    CHECK(validate_nodal_data(r1, n).valid());

    const auto remark = derive_nodal_data(fixtures::full_triangle(), fixtures::remark_residues());
    CHECK(remark.strata() == StratumSet{{0, 1}});
    CHECK_FALSE(remark.contains(Stratum{0, 1, 2}));

    ResidueModel positive;
    for (IndexId i = 0; i < 3; ++i) positive.assign(i, 0, Rational(i + 1, 2));
    CHECK(derive_nodal_data(fixtures::full_triangle(), positive).entries.empty());

    ResidueModel partial;
    partial.assign(0, 0, 1);
    CHECK_THROWS_AS(derive_nodal_data(fixtures::full_triangle(), partial), Error);
}

TEST_CASE("classification is invariant under common positive rescaling", "[foliation_model]") {
    auto m = fixtures::r1_residues();
    const auto r1 = fixtures::r1_structure();
    const auto before = derive_nodal_data(r1, m);
    for (auto& [i, r] : m.assignment) r.scale *= Rational(7, 3);
    const auto after = derive_nodal_data(r1, m);
    CHECK(before.strata() == after.strata());
    for (const auto& [j, p] : before.entries) CHECK(after.entries.at(j) == p);
}

TEST_CASE("negating one scale moves that component across partitions", "[foliation_model]") {
    auto m = fixtures::r2_residues();
    const auto full = fixtures::full_triangle();
    m.assignment.at(1).scale = -m.assignment.at(1).scale;
    const auto n = derive_nodal_data(full, m);
    // Signs now +, -, -.
    CHECK(n.strata() == StratumSet{{0, 1}, {0, 2}, {0, 1, 2}});
    CHECK(n.entries.at({0, 1, 2}).same_as({{0}, {1, 2}}));
}

TEST_CASE("resonance_check examples", "[foliation_model]") {
    const auto r = resonance_check(two_on_unit(1, -1), {0, 1});
    CHECK(r.resonant);
    CHECK(r.witness == std::vector<BigInt>{1, 1});
    CHECK_FALSE(resonance_check(two_on_unit(2, 3), {0, 1}).resonant);

    ResidueModel distinct;
    const auto mu = distinct.table.add("mu", SymbolKind::RealPositive);
    distinct.assign(0, 0, 1);
    distinct.assign(1, mu, -1);
    CHECK_FALSE(resonance_check(distinct, {0, 1}).resonant);

    const auto w = resonance_check(two_on_unit(Rational(2, 3), Rational(-5, 4)), {0, 1});
    REQUIRE(w.resonant);
    CHECK(Rational(w.witness[0]) * Rational(2, 3) + Rational(w.witness[1]) * Rational(-5, 4) == 0);
    CHECK(w.witness == std::vector<BigInt>{15, 8});
}

TEST_CASE("resonance agrees with bounded coefficient search", "[foliation_model]") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        ResidueModel m;
        const auto mu = m.table.add("mu", SymbolKind::RealPositive);
        const auto alpha = m.table.add("alpha", SymbolKind::NonReal);
        const std::size_t syms[3] = {0, mu, alpha};
        for (IndexId i = 0; i < 3; ++i) {
            Rational scale(rng.between(1, 3), rng.between(1, 3));
            if (rng.chance(1, 2)) scale = -scale;
            m.assign(i, syms[rng.index(3)], scale);
        }
        const Stratum j{0, 1, 2};
        CHECK(resonance_check(m, j).resonant == resonant_by_search(m, j, 9));
    }
}

TEST_CASE("is_gh_simple_corner examples", "[foliation_model]") {
    CHECK(is_gh_simple_corner(fixtures::r1_residues(), {0, 1, 2}).simple);
    const auto bad = is_gh_simple_corner(two_on_unit(1, -1), {0, 1});
    CHECK_FALSE(bad.simple);
    CHECK_THAT(bad.diagnostic, Catch::Matchers::ContainsSubstring("radial/dicritical-type resonance"));
    CHECK(is_gh_simple_corner(two_on_unit(1, 4), {0, 1}).simple);
}

TEST_CASE("nodal_reduction_steps examples", "[foliation_model]") {
    CHECK(nodal_reduction_steps(Rational(5, 2)) == 3);
    CHECK(nodal_reduction_steps(Rational(3)) == 3);
    CHECK(nodal_reduction_steps(Rational(1, 3)) == 1);
    CHECK_THROWS_AS(nodal_reduction_steps(Rational(0)), Error);
    CHECK_THROWS_AS(nodal_reduction_steps(Rational(-1, 2)), Error);
    for (int p = 1; p < 40; ++p) {
        for (int q = 1; q < 7; ++q) {
            const Rational l(p, q);
            const auto k = nodal_reduction_steps(l);
            CHECK((Rational(k - 1) < l && l <= Rational(k)));
        }
    }
}

TEST_CASE("residue model rejects zero scales and unknown symbols", "[foliation_model]") {
    ResidueModel m;
    CHECK_THROWS_AS(m.assign(0, 0, 0), Error);
    CHECK_THROWS_AS(m.assign(0, 5, 1), Error);
    CHECK_THROWS_AS(m.residue(3), Error);
}

TEST_CASE("rational parsing", "[foliation_model]") {
    CHECK(parse_rational("-1/1") == Rational(-1));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("+7") == Rational(7));
    CHECK(format_rational(Rational(-3, 2)) == "-3/2");
    CHECK(format_rational(Rational(4)) == "4");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("1/"), Error);
}
