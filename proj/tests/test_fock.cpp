#include <doctest.h>

#include "deligne/fock.hpp"
#include "oracles.hpp"

using namespace deligne;

namespace {

FockVector v(std::initializer_list<int> rows) { return FockVector::basis(Partition(rows)); }

std::vector<AnyVector> small_basis(const Mode& mode) {
    std::vector<AnyVector> out;
    if (std::holds_alternative<Tensor>(mode)) {
        for (const auto& b : bipartitions_up_to(4)) out.push_back(BiFockVector::basis(b));
    } else if (std::holds_alternative<Tautological>(mode)) {
        for (int i = -6; i <= 6; ++i) out.push_back(TautVector::basis(i));
    } else if (const auto* w = std::get_if<Wedge>(&mode)) {
        for (const auto& seq : wedge_basis(w->n, 4)) out.push_back(WedgeVector::basis(seq));
    } else {
        for (int n = 0; n <= 5; ++n)
            for (const auto& p : partitions_of(n)) out.push_back(FockVector::basis(p));
    }
    return out;
}

}  // namespace

TEST_CASE("apply_generator examples") {
    CHECK(apply(Gen::F, 0, Plain{}, v({})) == v({1}));
    CHECK(apply(Gen::F, 0, ShiftedDual{0}, v({1})) == v({}));
    CHECK(apply(Gen::F, 0, Tensor{0}, BiFockVector::basis({})) == BiFockVector::basis({Partition({1}), Partition{}}));
    CHECK(apply(Gen::E, 0, Plain{}, v({1})) == v({}));
    CHECK(apply(Gen::F, 1, TwistedDual{}, v({1})).is_zero());
    CHECK(apply(Gen::F, 0, TwistedDual{}, v({1})) == v({}));
    CHECK(apply(Gen::E, -1, ShiftedDual{1}, v({})) == v({1}));
    CHECK(apply(Gen::F, 3, Tautological{}, TautVector::basis(3)) == TautVector::basis(4));
    CHECK(apply(Gen::F, 3, Tautological{}, TautVector::basis(2)).is_zero());
    CHECK(apply(Gen::E, 3, Tautological{}, TautVector::basis(4)) == TautVector::basis(3));
    CHECK(apply(Gen::F, 0, Wedge{2}, WedgeVector::basis({0, -1})) == WedgeVector::basis({1, -1}));
    CHECK(apply(Gen::F, -1, Wedge{2}, WedgeVector::basis({0, -1})).terms.is_zero());
    // Linear extension.
    const FockVector sum = v({1}) + v({1, 1}) + 2 * v({2});
    CHECK(apply(Gen::F, 1, Plain{}, sum) == v({2}) + v({2, 1}));
}

TEST_CASE("the tensor module is the sum of its factors") {
    for (int t = -2; t <= 2; ++t)
        for (const auto& l : bipartitions_up_to(4))
            for (int a = -5; a <= 5; ++a)
                for (Gen g : {Gen::F, Gen::E}) {
                    BiFockVector want;
                    const FockVector black = apply(g, a, Plain{}, FockVector::basis(l.black));
                    const FockVector white = apply(g, a, ShiftedDual{t}, FockVector::basis(l.white));
                    for (const auto& [b, c] : black.terms()) want.add({b, l.white}, c);
                    for (const auto& [w, c] : white.terms()) want.add({l.black, w}, c);
                    CHECK(apply(g, a, Tensor{t}, BiFockVector::basis(l)) == want);
                }
}

TEST_CASE("mode mismatch is rejected") {
    CHECK_THROWS_AS(apply_generator(Gen::F, 0, Tensor{0}, AnyVector{v({})}), std::invalid_argument);
    CHECK_THROWS_AS(apply_generator(Gen::F, 0, Plain{}, AnyVector{TautVector::basis(0)}), std::invalid_argument);
    CHECK_THROWS_AS(apply_generator(Gen::F, 0, Wedge{3}, AnyVector{WedgeVector::basis({0, -1})}),
                    std::invalid_argument);
    CHECK_NOTHROW(apply_generator(Gen::F, 0, Wedge{2}, AnyVector{WedgeVector::basis({0, -1})}));
}

TEST_CASE("omega examples") {
    CHECK(omega(Partition{}) == SlzWeight{{0, 1}});
    CHECK(omega(Partition({1})) == SlzWeight{{1, 1}, {-1, 1}, {0, -1}});
    CHECK(omega(Partition({2, 1})) == SlzWeight{{2, 1}, {-2, 1}, {0, 1}, {1, -1}, {-1, -1}});
}

TEST_CASE("weights change by a simple root when a box is added") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& nu : partitions_of(n))
            for (int c : addable_contents(nu)) {
                SlzWeight diff = omega(*add_box(nu, c));
                for (const auto& [a, k] : omega(nu)) diff[a] -= k;
                std::erase_if(diff, [](const auto& kv) { return kv.second == 0; });
                CHECK(diff == SlzWeight{{c - 1, 1}, {c, -2}, {c + 1, 1}});
            }
}

TEST_CASE("dominance_leq examples") {
    const Bipartition empty{};
    const Bipartition b11{Partition({1}), Partition({1})};
    CHECK(dominance_leq(b11, empty, 0));
    CHECK_FALSE(dominance_leq(empty, b11, 0));
    for (const auto& l : bipartitions_up_to(3)) CHECK(dominance_leq(l, l, 2));
    CHECK_FALSE(dominance_leq(b11, empty, 1));  // different weights at t = 1
}

TEST_CASE("energy") {
    CHECK(energy(std::vector<int>{0, -1, -2, -3}) == 0);
    CHECK(energy(Partition({2, 1})) == 3);
    CHECK(energy(wedge_sequence(Partition({2, 1}), 4)) == 3);
    CHECK(energy(std::vector<int>{1, 0, -2}) == 2);
    CHECK_FALSE(energy(std::vector<int>{-1, -2}).has_value());
    CHECK_THROWS_AS(energy(std::vector<int>{0, 0}), std::invalid_argument);
}

TEST_CASE("pi_n and phi_n") {
    CHECK(pi_n(v({}), 2) == WedgeVector::basis({0, -1}));
    CHECK(pi_n(v({2}), 1) == WedgeVector::basis({2}));
    CHECK(pi_n(v({1, 1}), 2) == WedgeVector::basis({1, 0}));
    CHECK(phi_n(WedgeVector::basis({0, -1, -2})) == WedgeVector::basis({0, -1}));
    CHECK(phi_n(WedgeVector::basis({3, 1, -2})) == WedgeVector::basis({3, 1}));
    CHECK_THROWS_AS(phi_n(WedgeVector::basis({3})), std::invalid_argument);
    CHECK_THROWS_AS(pi_n(v({}), 0), std::invalid_argument);
    for (int n = 1; n <= 6; ++n) {
        const FockVector x = v({3, 1}) - 2 * v({1, 1, 1}) + v({});
        CHECK(phi_n(pi_n(x, n + 1)) == pi_n(x, n));
    }
}

TEST_CASE("pi_n intertwines f_a with the wedge action when no entry falls off") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= 5; ++k)
            for (const auto& nu : partitions_of(k)) {
                if (nu.length() >= n) continue;
                for (int a = -n + 1; a <= 6; ++a)
                    CHECK(pi_n(apply(Gen::F, a, Plain{}, FockVector::basis(nu)), n) ==
                          apply(Gen::F, a, Wedge{n}, pi_n(FockVector::basis(nu), n)));
            }
}

TEST_CASE("wedge basis of the energy filtration") {
    CHECK(wedge_basis(2, 0) == std::vector<std::vector<int>>{{0, -1}});
    CHECK(wedge_basis(1, 2).size() == 3);  // (0), (1), (2)
    CHECK(wedge_basis(2, 2).size() == 4);  // (1,1) adds a fourth
    for (const auto& seq : wedge_basis(3, 4)) {
        const auto e = energy(seq);
        REQUIRE(e.has_value());
        CHECK(*e <= 4);
    }
}

TEST_CASE("commutator_defect examples") {
    CHECK(is_zero(commutator_defect(0, 0, Plain{}, AnyVector{v({})})));
    CHECK(is_zero(commutator_defect(0, 1, Plain{}, AnyVector{v({})})));
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (int i = -5; i <= 5; ++i)
                CHECK(is_zero(commutator_defect(a, b, Tautological{}, AnyVector{TautVector::basis(i)})));
}

TEST_CASE("sl_Z relations in every mode") {
    const std::vector<Mode> modes = {Plain{},     TwistedDual{},  ShiftedDual{2}, ShiftedDual{-3}, Tensor{0},
                                     Tensor{-2},  Tautological{}, Wedge{1},       Wedge{3}};
    for (const auto& mode : modes)
        for (const auto& x : small_basis(mode))
            for (int a = -4; a <= 4; ++a)
                for (int b = -4; b <= 4; ++b) CHECK(is_zero(commutator_defect(a, b, mode, x)));
}

TEST_CASE("h_a examples") {
    // h_a on v_nu is n_a(nu) for the plain module.
    const AnyVector h = apply_h(1, Plain{}, AnyVector{v({1})});
    CHECK(std::get<FockVector>(h) == v({1}));
    const AnyVector h0 = apply_h(0, Plain{}, AnyVector{v({1})});
    CHECK(std::get<FockVector>(h0) == -1 * v({1}));
    const AnyVector ht = apply_h(0, TwistedDual{}, AnyVector{v({1})});
    CHECK(std::get<FockVector>(ht) == v({1}));
}

TEST_CASE("Serre relations on small vectors") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& nu : partitions_of(n))
            for (int a = -3; a <= 3; ++a) {
                const FockVector x = FockVector::basis(nu);
                auto f = [](int c, const FockVector& y) { return apply(Gen::F, c, Plain{}, y); };
                for (int b : {a - 1, a + 1})
                    CHECK((f(a, f(a, f(b, x))) - 2 * f(a, f(b, f(a, x))) + f(b, f(a, f(a, x)))).is_zero());
                CHECK((f(a, f(a + 2, x)) - f(a + 2, f(a, x))).is_zero());
            }
}

TEST_CASE("tautological weights") {
    for (int i = -4; i <= 4; ++i)
        for (int a = -5; a <= 5; ++a) {
            const AnyVector h = apply_h(a, Tautological{}, AnyVector{TautVector::basis(i)});
            // u_i has weight varpi_i - varpi_{i-1}.
            const int want = (a == i ? 1 : 0) - (a == i - 1 ? 1 : 0);
            CHECK(std::get<TautVector>(h) == want * TautVector::basis(i));
        }
}

TEST_CASE("generator_matrix") {
    const BipartitionMatrix m = generator_matrix(Gen::F, 0, 0, 2);
    CHECK(m.row(Bipartition{}) == BipartitionMatrix::Row{{{Partition({1}), Partition{}}, 1}});
    CHECK(m.row({Partition({1}), Partition({1})}) == BipartitionMatrix::Row{{{Partition({1}), Partition{}}, 1}});
}
