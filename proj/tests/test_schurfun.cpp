#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superschur/schurfun.hpp"

using namespace schurfun;
using exactalg::Field;
using shapes::Partition;
using shapes::SkewShape;
using shapes::Tableau;
using supercore::SuperBasis;
using supercore::Word;

namespace {

// Independent counter of classical semistandard fillings (rows weakly
// increasing, columns strictly increasing, entries in 1..m).
long count_ssyt(const SkewShape& sh, int m) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= sh.rows(); ++i)
        for (int j = sh.mu_at(i) + 1; j <= sh.lambda_at(i); ++j) cells.emplace_back(i, j);
    std::map<std::pair<int, int>, int> fill;
    long count = 0;
    std::function<void(size_t)> rec = [&](size_t c) {
        if (c == cells.size()) {
            ++count;
            return;
        }
        auto [i, j] = cells[c];
        for (int e = 1; e <= m; ++e) {
            if (j > sh.mu_at(i) + 1 && e < fill[{i, j - 1}]) continue;
            if (i > 1 && j > sh.mu_at(i - 1) && j <= sh.lambda_at(i - 1) && e <= fill[{i - 1, j}])
                continue;
            fill[{i, j}] = e;
            rec(c + 1);
        }
    };
    rec(0);
    return count;
}

std::vector<std::pair<SkewShape, int>> small_shapes(int max_size) {
    std::vector<std::pair<SkewShape, int>> out;
    for (const auto& lambda : shapes::partitions_up_to(max_size))
        for (const auto& mu : shapes::partitions_up_to(max_size))
            if (!lambda.empty() && shapes::contains(lambda, mu)) out.push_back({{lambda, mu}, 0});
    return out;
}

size_t costandard_count(const SkewShape& sh, const SuperBasis& b) {
    return shapes::enumerate(sh, b, shapes::Pred::Costandard).size();
}

}  // namespace

TEST_CASE("theta on a single cell is a signed identity") {
    for (auto [m, n] : {std::pair{2, 1}, {1, 1}, {0, 3}}) {
        SuperBasis b = SuperBasis::standard(m, n);
        for (bool weyl : {false, true}) {
            ThetaMatrix T = weyl ? build_theta_check({{1}, {}}, b) : build_theta_hat({{1}, {}}, b);
            CHECK(T.matrix.col_labels.size() == static_cast<size_t>(m + n));
            for (const auto& l : T.matrix.col_labels) {
                REQUIRE(T.matrix.cols.at(l).size() == 1);
                auto [rl, c] = *T.matrix.cols.at(l).begin();
                CHECK(rl == l);
                CHECK((c == 1 || c == -1));
            }
            CHECK(rank_of(T.matrix, Field::Q()) == static_cast<size_t>(m + n));
        }
    }
}

TEST_CASE("rank equals the costandard count of the conjugate shape") {
    SuperBasis b11 = SuperBasis::standard(1, 1);
    ThetaMatrix T = build_theta_hat({{2}, {}}, b11);
    CHECK(rank_of(T.matrix, Field::Q()) == 2);
    CHECK(costandard_count({{1, 1}, {}}, b11) == 2);
}

TEST_CASE("two-row shapes with disjoint columns give injective theta") {
    // lambda = (2,1), mu = (1): the rows occupy disjoint columns
    for (auto [m, n] : {std::pair{1, 1}, {2, 0}, {2, 2}}) {
        SuperBasis b = SuperBasis::standard(m, n);
        ThetaMatrix T = build_theta_hat({{2, 1}, {1}}, b);
        CHECK(rank_of(T.matrix, Field::Q()) == T.matrix.col_labels.size());
    }
}

TEST_CASE("diamond examples") {
    SuperBasis b10 = SuperBasis::standard(1, 0);
    CHECK(build_diamond({{3}, {}}, b10).cols.empty());
    CHECK(build_diamond({{1, 1}, {}}, b10).cols.empty());  // twisted divided square is zero

    SuperBasis b20 = SuperBasis::standard(2, 0);
    ColMap d = build_diamond({{1, 1}, {}}, b20);
    REQUIRE(d.col_labels.size() == 1);
    IntVec expect{{"a|b", 1}, {"b|a", -1}};
    auto got = d.cols.begin()->second;
    bool plus = got == expect;
    for (auto& [k, v] : expect) v = -v;
    CHECK((plus || got == expect));
}

TEST_CASE("diamond image lies in the kernel of theta") {
    for (auto [m, n] : {std::pair{1, 1}, {2, 0}, {0, 2}, {2, 2}}) {
        SuperBasis b = SuperBasis::standard(m, n);
        for (auto& [sh, _] : small_shapes(4)) {
            ColMap d = build_diamond(sh, b);
            if (d.cols.empty()) continue;
            ThetaMatrix T = build_theta_hat(shapes::conjugate(sh), b);
            for (const auto& l : d.col_labels)
                CHECK(schurfun::apply(T.matrix, d.cols.at(l)).empty());
        }
    }
}

TEST_CASE("dimension identity") {
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {0, 2}}) {
        SuperBasis b = SuperBasis::standard(m, n);
        for (auto& [sh, _] : small_shapes(4)) {
            size_t theta = rank_of(build_theta_hat(shapes::conjugate(sh), b).matrix, Field::Q());
            size_t cost = costandard_count(sh, b);
            ColMap d = build_diamond(sh, b);
            size_t gamma_dim = d.row_labels.size();
            size_t dia = rank_of(d, Field::Q());
            CHECK(theta == cost);
            CHECK(theta == gamma_dim - dia);
        }
    }
}

TEST_CASE("straighten basics") {
    SuperBasis b20 = SuperBasis::standard(2, 0);
    SkewShape sh{{1, 1}, {}};
    Tableau good{sh, {{1}, {2}}};
    IntVec r = straighten(good, sh, b20);
    CHECK(r == IntVec{{"a|b", 1}});
    Tableau bad{sh, {{2}, {1}}};
    IntVec s = straighten(bad, sh, b20);
    CHECK(s == IntVec{{"a|b", 1}});

    SuperBasis b02 = SuperBasis::standard(0, 2);
    CHECK_THROWS(straighten(Tableau{{{2}, {}}, {{2, 1}}}, {{2}, {}}, b02));
}

TEST_CASE("straighten: descent, span soundness, image consistency") {
    for (auto [m, n] : {std::pair{1, 1}, {2, 0}, {0, 2}}) {
        SuperBasis b = SuperBasis::standard(m, n);
        for (auto& [sh, _] : small_shapes(3)) {
            auto dom = shapes::enumerate(sh, b, shapes::Pred::RowCostandard);
            ColMap d = build_diamond(sh, b);
            std::vector<exactalg::SparseVec> dcols;
            for (const auto& l : d.col_labels) dcols.push_back(instantiate(d.cols.at(l), Field::Q()));
            ThetaMatrix T = build_theta_hat(shapes::conjugate(sh), b);
            Straightener st{sh, b};
            for (const Tableau& t : dom) {
                const IntVec& r = st.run(t);
                std::string lbl = shapes::tableau_label(t);
                for (const auto& [sl, sc] : r) {
                    Tableau s{sh, split_label(sl)};
                    CHECK(shapes::costandard(s, b));
                    if (sl != lbl) {
                        CHECK(shapes::quasi_leq(s, t, b.letters()));
                        CHECK_FALSE(shapes::quasi_leq(t, s, b.letters()));
                    }
                }
                // difference lies in the span of the relations columns
                IntVec diff = r;
                hopf::add_term(diff, lbl, -1);
                CHECK(exactalg::in_span(instantiate(diff, Field::Q()), dcols));
                // the images under theta agree
                IntVec lhs = T.matrix.cols.at(lbl), rhs;
                for (const auto& [sl, sc] : r)
                    for (const auto& [rl, rc] : T.matrix.cols.at(sl))
                        hopf::add_term(rhs, rl, sc * rc);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("leading term of a costandard column") {
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}}) {
        SuperBasis b = SuperBasis::standard(m, n);
        for (auto& [sh, _] : small_shapes(3)) {
            ThetaMatrix T = build_theta_hat(shapes::conjugate(sh), b);
            SkewShape conj = shapes::conjugate(sh);
            for (const Tableau& t : T.domain) {
                if (!shapes::costandard(t, b)) continue;
                Tableau tc = shapes::conjugate(t);
                std::string lead = shapes::tableau_label(tc);
                const IntVec& col = T.matrix.cols.at(shapes::tableau_label(t));
                auto it = col.find(lead);
                REQUIRE(it != col.end());
                CHECK((it->second == 1 || it->second == -1));
                for (const auto& [sl, sc] : col)
                    if (sl != lead) {
                        Tableau s{conj, split_label(sl)};
                        CHECK(shapes::quasi_leq(tc, s, b.letters()));
                    }
            }
        }
    }
}

TEST_CASE("schur_basis sizes") {
    CHECK(schur_basis({{1}, {}}, SuperBasis::standard(2, 1)).count() == 3);
    CHECK(schur_basis({{2}, {}}, SuperBasis::standard(1, 1)).count() == 2);
    // basis vectors independent by construction; spot check a bigger one
    CHECK(schur_basis({{2, 1}, {}}, SuperBasis::standard(2, 1)).count() ==
          rank_of(build_theta_hat({{2, 1}, {}}, SuperBasis::standard(2, 1)).matrix, Field::Q()));
}

TEST_CASE("classical specializations of the module dimension") {
    for (auto& [sh, _] : small_shapes(4)) {
        for (int m = 1; m <= 3; ++m)
            CHECK(schur_complex_dim(sh, m, 0) == count_ssyt(sh, m));
        for (int n = 1; n <= 3; ++n)
            CHECK(schur_complex_dim(sh, 0, n) == count_ssyt(shapes::conjugate(sh), n));
    }
    CHECK(schur_complex_dim({{}, {}}, 2, 2) == 1);
}

TEST_CASE("Weyl-side rank matches the Schur-side rank of the conjugate") {
    for (auto [m, n] : {std::pair{1, 1}, {2, 0}, {0, 2}, {2, 2}}) {
        SuperBasis b = SuperBasis::standard(m, n);
        for (auto& [sh, _] : small_shapes(3)) {
            size_t weyl = rank_of(build_theta_check(shapes::conjugate(sh), b).matrix, Field::Q());
            size_t schur = rank_of(build_theta_hat(sh, b).matrix, Field::Q());
            CHECK(weyl == schur);
        }
    }
}

TEST_CASE("filtration report") {
    SuperBasis m10 = SuperBasis::standard(1, 0), m11 = SuperBasis::standard(1, 1);
    auto rows = filtration_report({{1}, {}}, m11, m10);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].xi == Partition{});
    CHECK(rows[0].graded_dim == 1);  // the second summand
    CHECK(rows[1].xi == Partition{1});
    CHECK(rows[1].graded_dim == 2);  // the first summand
    CHECK(rows[1].dim_L == 3);

    auto r2 = filtration_report({{2}, {}}, m10, m10);
    size_t total = 0;
    for (auto& r : r2) total += r.graded_dim;
    CHECK(total == static_cast<size_t>(schur_complex_dim({{2}, {}}, 2, 0)));

    // a skew case; the internal consistency assertions are the main check
    CHECK_NOTHROW(filtration_report({{2, 1}, {1}}, m11, m10));
    CHECK_NOTHROW(filtration_report({{2, 2}, {1}}, m11, SuperBasis::standard(0, 1)));
}

TEST_CASE("factorization of the defining map") {
    CHECK(factorization_check({{3}, {}}, SuperBasis::standard(1, 1), 1));
    CHECK(factorization_check({{1, 1}, {}}, SuperBasis::standard(1, 1), 1));
    CHECK(factorization_check({{2, 1}, {}}, SuperBasis::standard(2, 0), 1));
    for (int i : {1, 2}) {
        CHECK(factorization_check({{1, 1, 1}, {}}, SuperBasis::standard(1, 1), i));
        CHECK(factorization_check({{2, 1, 1}, {}}, SuperBasis::standard(1, 2), i));
        CHECK(factorization_check({{2, 2, 1}, {1}}, SuperBasis::standard(2, 1), i));
    }
}
