#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "omf/omf.hpp"

using namespace omf;

namespace {

const DesignParams kBiplane{121, 16, 2};

// Distribution for an automorphism of order 13: four fixed points, nine
// orbits of length 13.  L = 13.
OrbitDistribution dist13() {
    std::vector<int> s{1, 1, 1, 1, 13, 13, 13, 13, 13, 13, 13, 13, 13};
    return make_distribution(kBiplane, s);
}

// Representative rows of the three block-orbit kinds in that action.
const Row kFixRow{1, 1, 1, 0, 13, 0, 0, 0, 0, 0, 0, 0, 0};    // fixed block
const Row kUnitRow{1, 0, 0, 0, 1, 1, 1, 2, 2, 2, 2, 2, 2};    // meets one fixed point
const Row kZeroRow{0, 0, 0, 0, 2, 2, 2, 2, 4, 2, 2, 0, 0};    // avoids all fixed points

}  // namespace

TEST_CASE("row sum condition", "[kernel]") {
    REQUIRE(check_row_sum(kFixRow, kBiplane));
    REQUIRE(check_row_sum(kUnitRow, kBiplane));
    REQUIRE(check_row_sum(kZeroRow, kBiplane));
    REQUIRE_FALSE(check_row_sum(Row{1, 1, 1, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0}, kBiplane));
}

TEST_CASE("row quadratic condition", "[kernel]") {
    auto d = dist13();

    SECTION("golden rows attain their targets") {
        REQUIRE(row_quadratic(kFixRow, d, 1) == row_quadratic_target(kBiplane, d, 1));
        REQUIRE(row_quadratic(kUnitRow, d, 13) == row_quadratic_target(kBiplane, d, 13));
        REQUIRE(row_quadratic(kZeroRow, d, 13) == row_quadratic_target(kBiplane, d, 13));
        // Spelled out: 13 * (2*12 + 16) = 520 for a length-13 block orbit.
        REQUIRE(row_quadratic_target(kBiplane, d, 13) == 520);
        REQUIRE(row_quadratic_target(kBiplane, d, 1) == 208);
    }

    SECTION("a correct-sum row can still fail the quadratic") {
        Row bad{0, 0, 0, 0, 3, 3, 2, 2, 2, 2, 2, 0, 0};
        REQUIRE(check_row_sum(bad, kBiplane));
        REQUIRE(row_quadratic(bad, d, 13) != row_quadratic_target(kBiplane, d, 13));
    }

    SECTION("fixed-point-free order 11 forces sum of squares 36") {
        auto d11 = make_distribution(kBiplane, std::vector<int>(11, 11));
        // All coefficients are 1, so the scaled quadratic is 11 * sum(gamma^2)
        // and the target 11 * 36.
        REQUIRE(row_quadratic_target(kBiplane, d11, 11) == 11 * 36);
        Row t{4, 3, 2, 1, 1, 1, 1, 1, 1, 1, 0};
        REQUIRE(check_row_sum(t, kBiplane));
        REQUIRE(row_quadratic(t, d11, 11) == 11 * 36);
    }
}

TEST_CASE("pair product condition", "[kernel]") {
    auto d = dist13();

    SECTION("golden pairs attain their targets") {
        // The target depends on the second row's orbit length only.
        REQUIRE(pair_product(kFixRow, kUnitRow, d, 13) ==
                pair_product_target(kBiplane, d, 13));
        REQUIRE(pair_product(kUnitRow, kFixRow, d, 1) ==
                pair_product_target(kBiplane, d, 1));
        REQUIRE(pair_product(kUnitRow, kZeroRow, d, 13) ==
                pair_product_target(kBiplane, d, 13));
        REQUIRE(pair_product_target(kBiplane, d, 13) == 338);
        REQUIRE(pair_product_target(kBiplane, d, 1) == 26);
    }

    SECTION("two all-even rows cannot both avoid the fixed points") {
        // Once the four fixed blocks are placed (each covering one length-13
        // point orbit), pairing against them forces any row that avoids the
        // fixed points to have only even entries.  The scaled product of two
        // such rows is 0 mod 4, but the target 338 is 2 mod 4, so at most
        // one block orbit avoids all four fixed points.
        REQUIRE(pair_product(kZeroRow, kZeroRow, d, 13) % 4 == 0);
        REQUIRE(pair_product_target(kBiplane, d, 13) % 4 == 2);
    }
}

TEST_CASE("prefix bound prunes monotonically", "[kernel]") {
    auto d = dist13();
    int n = d.num_point_orbits();

    SECTION("valid rows satisfy every prefix") {
        for (int m = 0; m <= n; ++m) {
            REQUIRE(prefix_bound_ok(kUnitRow, kUnitRow, m, kBiplane, d, 13, true));
            REQUIRE(prefix_bound_ok(kUnitRow, kZeroRow, m, kBiplane, d, 13, false));
        }
    }

    SECTION("an overfull prefix can never recover") {
        // Against itself, 7 in a length-13 column already contributes
        // 13 * 49 * 13 > 13 * (2*13 + 14).
        Row heavy(n, 0);
        heavy[4] = 7;
        REQUIRE_FALSE(prefix_bound_ok(heavy, heavy, 5, kBiplane, d, 13, true));
        REQUIRE_FALSE(prefix_bound_ok(heavy, heavy, n, kBiplane, d, 13, true));
    }

    SECTION("the same_row flag widens the bound by the design order") {
        // x = 6 gives a scaled prefix of 36*13 = 468, between the
        // distinct-row bound 13*2*13 = 338 and the same-row bound
        // 338 + 13*14 = 520.
        Row r(n, 0);
        r[4] = 6;
        REQUIRE(prefix_bound_ok(r, r, 5, kBiplane, d, 13, true));
        REQUIRE_FALSE(prefix_bound_ok(r, r, 5, kBiplane, d, 13, false));
    }
}

TEST_CASE("dual integrality", "[kernel]") {
    auto d = dist13();

    SECTION("fixed blocks must meet long orbits fully or not at all") {
        REQUIRE(dual_integrality_ok(kFixRow, d, 1));
        Row bad{1, 1, 1, 1, 12, 0, 0, 0, 0, 0, 0, 0, 0};
        REQUIRE(check_row_sum(bad, kBiplane));
        REQUIRE_FALSE(dual_integrality_ok(bad, d, 1));
    }

    SECTION("rows of full orbit length are unconstrained") {
        REQUIRE(dual_integrality_ok(kUnitRow, d, 13));
        REQUIRE(dual_integrality_ok(kZeroRow, d, 13));
    }

    SECTION("intermediate orbit lengths constrain mod omega/gcd") {
        // Omega = 7 against omega = 21: 7*gamma = 0 mod 21 forces gamma = 0 mod 3.
        auto d21 = make_distribution(kBiplane,
                                     std::vector<int>{1, 1, 7, 7, 7, 7, 7, 21, 21, 21, 21});
        Row ok{1, 1, 0, 0, 2, 3, 0, 3, 3, 3, 0};
        Row bad{1, 1, 0, 0, 2, 3, 0, 3, 2, 4, 0};
        REQUIRE(dual_integrality_ok(ok, d21, 7));
        REQUIRE_FALSE(dual_integrality_ok(bad, d21, 7));
    }
}

TEST_CASE("column sums", "[kernel]") {
    auto d = dist13();
    std::vector<Row> rows{kFixRow, kUnitRow, kZeroRow};
    std::vector<int> lens{1, 13, 13};

    SECTION("partial stack within capacity") {
        REQUIRE(column_sums_ok(rows, lens, kBiplane, d, false));
        // The same stack is nowhere near column-complete.
        REQUIRE_FALSE(column_sums_ok(rows, lens, kBiplane, d, true));
    }

    SECTION("overfull column is rejected even when partial") {
        // A fixed column has capacity k*omega = 16, and a length-13 block
        // orbit through that point contributes 13 to it.  One such orbit
        // fits; a second overflows.
        REQUIRE(column_sums_ok({kUnitRow}, {13}, kBiplane, d, false));
        REQUIRE_FALSE(column_sums_ok({kUnitRow, kUnitRow}, {13, 13}, kBiplane, d, false));
    }
}
