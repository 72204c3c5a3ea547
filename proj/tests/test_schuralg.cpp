#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "superschur/schuralg.hpp"

using namespace schuralg;
using exactalg::Field;
using exactalg::Scalar;
using exactalg::SparseVec;
using shapes::Partition;
using shapes::SkewShape;
using shapes::Tableau;
using supercore::SuperBasis;
using supercore::Word;
using supercore::word_label;

namespace {

IntVec unit(const std::string& label) { return IntVec{{label, 1}}; }

std::string rep_label(const OrbitRep& r) { return pair_label(r.i, r.j); }

bool vec_eq(const IntVec& a, const IntVec& b) {
    IntVec x = a, y = b;
    for (auto it = x.begin(); it != x.end();) it = it->second == 0 ? x.erase(it) : std::next(it);
    for (auto it = y.begin(); it != y.end();) it = it->second == 0 ? y.erase(it) : std::next(it);
    return x == y;
}

// column-by-column composition (a after b)
ActionMatrix mat_mult(const ActionMatrix& a, const ActionMatrix& b, const Field& f) {
    ActionMatrix out;
    out.labels = a.labels;
    for (const auto& c : out.labels) {
        SparseVec v;
        for (const auto& [k, s] : b.cols.at(c).entries) v.axpy(s, a.cols.at(k));
        out.cols[c] = std::move(v);
    }
    (void)f;
    return out;
}

bool mat_eq(const ActionMatrix& a, const ActionMatrix& b) {
    for (const auto& c : a.labels)
        if (!(a.cols.at(c) == b.cols.at(c))) return false;
    return true;
}

bool mat_is_identity(const ActionMatrix& a, const Field& f) {
    for (const auto& c : a.labels) {
        SparseVec e;
        e.set(c, Scalar(f, 1));
        if (!(a.cols.at(c) == e)) return false;
    }
    return true;
}

bool mat_is_zero(const ActionMatrix& a) {
    for (const auto& c : a.labels)
        if (!a.cols.at(c).is_zero()) return false;
    return true;
}

size_t mat_rank(const ActionMatrix& a) {
    exactalg::SparseMat m;
    m.col_labels = a.labels;
    for (const auto& c : a.labels) {
        m.row_labels.push_back(c);
        m.rows.push_back(a.cols.at(c));
    }
    return exactalg::rank(m);
}

// signed embedding of a row-costandard tableau into the tensor power of the
// parity-flipped space: per-row arrangements, rows concatenated in order
IntVec embed_divided(const SuperBasis& b, const Tableau& t) {
    SuperBasis bt = b.twisted();
    std::vector<std::pair<Word, long long>> acc{{{}, 1}};
    for (const auto& row : t.rows) {
        std::vector<std::pair<Word, long long>> next;
        for (const auto& [prefix, c] : acc)
            for (const auto& term : hopf::delta_embed(bt, row)) {
                Word w = prefix;
                w.insert(w.end(), term.word.begin(), term.word.end());
                next.emplace_back(std::move(w), c * term.coeff);
            }
        acc = std::move(next);
    }
    IntVec out;
    for (const auto& [w, c] : acc) hopf::add_term(out, word_label(w), c);
    return out;
}

Tableau tableau_from_label(const SkewShape& shape, const std::string& label) {
    return Tableau{shape, schurfun::split_label(label)};
}

std::vector<Word> all_words(int letters, int d) {
    std::vector<Word> out{{}};
    for (int k = 0; k < d; ++k) {
        std::vector<Word> next;
        for (const Word& w : out)
            for (int x = 1; x <= letters; ++x) {
                Word v = w;
                v.push_back(x);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("basis sizes") {
    for (auto [m, n] : {std::pair{1, 0}, {1, 1}, {2, 1}, {2, 2}})
        CHECK(s_basis(m, n, 1).size() == size_t((m + n) * (m + n)));
    for (int d = 1; d <= 4; ++d) CHECK(s_basis(1, 0, d).size() == 1);
    CHECK(s_basis(0, 1, 2).size() == 1);
    // every rep is strict, canonical, and they are lex-sorted
    SuperBasis b = SuperBasis::standard(1, 1);
    auto reps = s_basis(1, 1, 2);
    for (const auto& r : reps) {
        CHECK(strict_pair(b, r.i, r.j));
        CHECK(canonical_pair(r.i, r.j, 2));
    }
}

TEST_CASE("degree one action is the matrix unit rule") {
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}}) {
        SuperBasis b = SuperBasis::standard(m, n);
        for (const auto& r : s_basis(m, n, 1))
            for (int l = 1; l <= m + n; ++l) {
                IntVec got = act_tensor(b, r, {l}, false);
                if (r.j[0] == l)
                    CHECK(vec_eq(got, unit(word_label(r.i))));
                else
                    CHECK(got.empty());
            }
    }
}

TEST_CASE("weight idempotents") {
    for (auto [m, n, d] : {std::tuple{1, 1, 2}, {2, 1, 2}, {0, 1, 2}, {1, 0, 3}}) {
        SuperBasis b = SuperBasis::standard(m, n);
        auto weights = all_weights(m + n, d);
        auto reps = s_basis(m, n, d);
        for (const auto& mu : weights) {
            OrbitRep e = weight_idempotent(mu);
            for (const auto& r : reps) {
                IntVec left = s_mult(b, e, r);
                IntVec right = s_mult(b, r, e);
                bool li = supercore::weight(r.i, m + n) == mu;
                bool ri = supercore::weight(r.j, m + n) == mu;
                CHECK(vec_eq(left, li ? unit(rep_label(r)) : IntVec{}));
                CHECK(vec_eq(right, ri ? unit(rep_label(r)) : IntVec{}));
            }
            for (const auto& nu : weights) {
                OrbitRep e2 = weight_idempotent(nu);
                IntVec p = s_mult(b, e, e2);
                CHECK(vec_eq(p, mu == nu ? unit(rep_label(e)) : IntVec{}));
            }
        }
        IntVec one = identity_elem(m, n, d);
        for (const auto& r : reps) {
            CHECK(vec_eq(s_mult_vec(b, one, unit(rep_label(r))), unit(rep_label(r))));
            CHECK(vec_eq(s_mult_vec(b, unit(rep_label(r)), one), unit(rep_label(r))));
        }
    }
}

TEST_CASE("associativity") {
    for (auto [m, n, d] : {std::tuple{1, 1, 2}, {2, 1, 2}, {1, 1, 3}}) {
        SuperBasis b = SuperBasis::standard(m, n);
        auto reps = s_basis(m, n, d);
        for (const auto& x : reps)
            for (const auto& y : reps) {
                IntVec xy = s_mult(b, x, y);
                for (const auto& z : reps) {
                    IntVec yz = s_mult(b, y, z);
                    CHECK(vec_eq(s_mult_vec(b, xy, unit(rep_label(z))),
                                 s_mult_vec(b, unit(rep_label(x)), yz)));
                }
            }
    }
}

TEST_CASE("faithfulness of the tensor expansion") {
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            if (m + n == 0) continue;
            SuperBasis b = SuperBasis::standard(m, n);
            const int L = m + n;
            for (int d = 1; d <= 3; ++d) {
                auto reps = s_basis(m, n, d);
                exactalg::SparseMat mat;
                Field f = Field::Q();
                for (const auto& r : reps) {
                    SparseVec row;
                    Word codes(d);
                    for (int t = 0; t < d; ++t) codes[t] = (r.i[t] - 1) * L + r.j[t];
                    for (const Word& arr : hopf::rearrangements(codes)) {
                        Word s(d), tt(d);
                        for (int t = 0; t < d; ++t) {
                            s[t] = (arr[t] - 1) / L + 1;
                            tt[t] = (arr[t] - 1) % L + 1;
                        }
                        row.set(word_label(s) + ":" + word_label(tt),
                                Scalar(f, pair_sgn(b, r.i, r.j, s, tt)));
                    }
                    mat.row_labels.push_back(rep_label(r));
                    mat.rows.push_back(std::move(row));
                }
                CHECK(exactalg::rank(mat) == reps.size());
            }
        }
}

TEST_CASE("module law and place-permutation equivariance") {
    for (auto [m, n, d] : {std::tuple{1, 1, 2}, {2, 1, 2}}) {
        SuperBasis b = SuperBasis::standard(m, n);
        SuperBasis bt = b.twisted();
        auto reps = s_basis(m, n, d);
        auto words = all_words(m + n, d);
        // (a o c) w == a (c w), both twists
        for (const auto& a : reps)
            for (const auto& c : reps) {
                IntVec ac = s_mult(b, a, c);
                for (const Word& w : words)
                    for (bool tw : {false, true}) {
                        IntVec lhs = act_tensor_elem(b, ac, w, tw);
                        IntVec inner = act_tensor(b, c, w, tw);
                        IntVec rhs;
                        for (const auto& [kl, kc] : inner)
                            for (const auto& [rl, rc] :
                                 act_tensor(b, a, supercore::parse_word_label(kl), tw))
                                hopf::add_term(rhs, rl, kc * rc);
                        CHECK(vec_eq(lhs, rhs));
                    }
            }
        // a (w.sigma) == (a w).sigma with the sign rule of the right twist
        std::vector<supercore::Perm> perms;
        supercore::Perm p = supercore::identity_perm(d);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        for (const auto& a : reps)
            for (const Word& w : words)
                for (const auto& sigma : perms)
                    for (bool tw : {false, true}) {
                        const SuperBasis& pb = tw ? bt : b;
                        auto [ws, s1] = supercore::act(pb, w, sigma);
                        IntVec lhs;
                        for (const auto& [kl, kc] : act_tensor(b, a, ws, tw))
                            hopf::add_term(lhs, kl, s1 * kc);
                        IntVec rhs;
                        for (const auto& [kl, kc] : act_tensor(b, a, w, tw)) {
                            auto [ks, s2] =
                                supercore::act(pb, supercore::parse_word_label(kl), sigma);
                            hopf::add_term(rhs, word_label(ks), kc * s2);
                        }
                        CHECK(vec_eq(lhs, rhs));
                    }
    }
}

TEST_CASE("divided power action: weight idempotents and embedding square") {
    struct Case {
        int m, n, max_d;
        int stride;  // sample every stride-th basis element
    };
    for (auto cs : {Case{1, 1, 4, 1}, Case{2, 1, 3, 1}, Case{2, 2, 3, 7}}) {
        SuperBasis b = SuperBasis::standard(cs.m, cs.n);
        for (int d = 1; d <= cs.max_d; ++d) {
            auto reps = s_basis(cs.m, cs.n, d);
            for (const Partition& lambda : shapes::partitions_of(d)) {
                SkewShape sh{lambda, {}};
                auto tabs = shapes::enumerate(sh, b, shapes::Pred::RowCostandard);
                // weight idempotent rule
                for (const auto& t : tabs) {
                    auto wt = supercore::weight(shapes::reading_word(t), cs.m + cs.n);
                    for (const auto& mu : all_weights(cs.m + cs.n, d)) {
                        IntVec got = act_divided(b, weight_idempotent(mu), t);
                        CHECK(vec_eq(got, wt == mu ? unit(shapes::tableau_label(t)) : IntVec{}));
                    }
                }
                // commuting square with the tensor embedding
                for (size_t ri = 0; ri < reps.size(); ri += cs.stride) {
                    const auto& a = reps[ri];
                    for (const auto& t : tabs) {
                        IntVec lhs;
                        for (const auto& [sl, c] : act_divided(b, a, t))
                            for (const auto& [wl, wc] :
                                 embed_divided(b, tableau_from_label(sh, sl)))
                                hopf::add_term(lhs, wl, c * wc);
                        IntVec rhs;
                        for (const auto& [wl, c] : embed_divided(b, t))
                            for (const auto& [kl, kc] :
                                 act_tensor(b, a, supercore::parse_word_label(wl), true))
                                hopf::add_term(rhs, kl, c * kc);
                        CHECK(vec_eq(lhs, rhs));
                    }
                }
            }
        }
    }
}

TEST_CASE("schur module action: identity, projectors, highest weight") {
    Field f = Field::Q();
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}}) {
        SuperBasis b = SuperBasis::standard(m, n);
        for (const Partition& lambda : shapes::partitions_up_to(3)) {
            if (lambda.empty()) continue;
            const int d = std::accumulate(lambda.begin(), lambda.end(), 0);
            SkewShape sigma{lambda, {}};
            auto sb = schurfun::schur_basis(sigma, b);
            if (sb.count() == 0) continue;
            ActionMatrix one = act_schur_elem(identity_elem(m, n, d), sb, f);
            CHECK(mat_is_identity(one, f));
            std::vector<ActionMatrix> projs;
            for (const auto& mu : all_weights(m + n, d))
                projs.push_back(act_schur(weight_idempotent(mu), sb, f));
            ActionMatrix sum;
            sum.labels = one.labels;
            for (const auto& c : sum.labels) sum.cols[c] = {};
            for (size_t i = 0; i < projs.size(); ++i) {
                CHECK(mat_eq(mat_mult(projs[i], projs[i], f), projs[i]));
                for (size_t j = i + 1; j < projs.size(); ++j)
                    CHECK(mat_is_zero(mat_mult(projs[i], projs[j], f)));
                for (const auto& c : sum.labels)
                    sum.cols[c].axpy(Scalar(f, 1), projs[i].cols.at(c));
            }
            CHECK(mat_is_identity(sum, f));
        }
    }
    // the canonical-tableau vector is killed by every raising element
    SuperBasis b21 = SuperBasis::standard(2, 1);
    for (const Partition& lambda : {Partition{1}, {2}, {1, 1}, {2, 2}, {2, 1}}) {
        if (int(shapes::conjugate(lambda).size()) > 2) continue;  // l(lambda') <= m
        const int d = std::accumulate(lambda.begin(), lambda.end(), 0);
        auto sb = schurfun::schur_basis({shapes::conjugate(lambda), {}}, b21);
        std::string cl = shapes::tableau_label(shapes::canonical_tableau(lambda, 2));
        bool found = false;
        for (const auto& t : sb.tableaux) found |= shapes::tableau_label(t) == cl;
        REQUIRE(found);
        for (const auto& rep : n_basis(2, 1, d)) {
            ActionMatrix a = act_schur(rep, sb, Field::Q());
            CHECK(a.cols.at(cl).is_zero());
        }
    }
}

TEST_CASE("raising invariants") {
    SuperBasis b21 = SuperBasis::standard(2, 1);
    for (const Partition& lambda : {Partition{1}, {2}, {1, 1}, {2, 1}, {2, 2}}) {
        if (int(shapes::conjugate(lambda).size()) > 2) continue;
        auto sb = schurfun::schur_basis({shapes::conjugate(lambda), {}}, b21);
        auto inv = n_invariants(sb, Field::Q());
        REQUIRE(inv.size() == 1);
        std::string cl = shapes::tableau_label(shapes::canonical_tableau(lambda, 2));
        CHECK(inv[0].entries.size() == 1);
        CHECK(inv[0].entries.begin()->first == cl);
    }
    // natural module at degree one: the invariant line is the first letter
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}}) {
        SuperBasis b = SuperBasis::standard(m, n);
        auto sb = schurfun::schur_basis({{1}, {}}, b);
        auto inv = n_invariants(sb, Field::Q());
        REQUIRE(inv.size() == 1);
        CHECK(inv[0].entries.begin()->first == "a");
    }
}

TEST_CASE("row-column exchange precedence") {
    // if r is row-equivalent to s and column-equivalent to t, both costandard,
    // then the reading word of s is lex-at-least that of t
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {3, 0}, {0, 3}}) {
        SuperBasis b = SuperBasis::standard(m, n);
        for (int d = 1; d <= 4; ++d)
            for (const Partition& lambda : shapes::partitions_of(d)) {
                SkewShape sh{lambda, {}};
                auto cost = shapes::enumerate(sh, b, shapes::Pred::Costandard);
                auto col_multisets = [&](const Tableau& t) {
                    std::vector<std::vector<int>> cols(lambda[0]);
                    for (int i = 1; i <= int(lambda.size()); ++i)
                        for (int j = 1; j <= lambda[i - 1]; ++j) cols[j - 1].push_back(t.entry(i, j));
                    for (auto& c : cols) std::sort(c.begin(), c.end());
                    return cols;
                };
                for (const auto& s : cost)
                    for (const auto& t : cost) {
                        // enumerate r row-equivalent to s
                        std::vector<std::vector<Word>> rowsets;
                        for (const auto& row : s.rows) rowsets.push_back(hopf::rearrangements(row));
                        std::vector<size_t> idx(rowsets.size(), 0);
                        bool related = false;
                        while (!related) {
                            Tableau r{sh, {}};
                            for (size_t k = 0; k < rowsets.size(); ++k)
                                r.rows.push_back(rowsets[k][idx[k]]);
                            if (col_multisets(r) == col_multisets(t)) related = true;
                            size_t k = 0;
                            while (k < idx.size() && ++idx[k] == rowsets[k].size()) idx[k++] = 0;
                            if (k == idx.size()) break;
                        }
                        if (related) {
                            Word wss = shapes::reading_word(s), wtt = shapes::reading_word(t);
                            CHECK_FALSE(std::lexicographical_compare(wss.begin(), wss.end(),
                                                                     wtt.begin(), wtt.end()));
                        }
                    }
            }
    }
}

TEST_CASE("indecomposability certificate") {
    // every matrix commuting with the whole action fixes the invariant line
    Field f = Field::Q();
    SuperBasis b21 = SuperBasis::standard(2, 1);
    for (const Partition& lambda : {Partition{2}, {1, 1}, {2, 1}}) {
        const int d = std::accumulate(lambda.begin(), lambda.end(), 0);
        auto sb = schurfun::schur_basis({shapes::conjugate(lambda), {}}, b21);
        std::vector<std::string> labels;
        for (const auto& t : sb.tableaux) labels.push_back(shapes::tableau_label(t));
        const size_t D = labels.size();
        auto xlab = [&](size_t r, size_t c) {
            return std::to_string(r) + "," + std::to_string(c);
        };
        exactalg::SparseMat sys;
        for (size_t r = 0; r < D; ++r)
            for (size_t c = 0; c < D; ++c) sys.col_labels.push_back(xlab(r, c));
        int eq = 0;
        for (const auto& rep : s_basis(2, 1, d)) {
            ActionMatrix a = act_schur(rep, sb, f);
            auto entry = [&](size_t r, size_t c) -> Scalar {
                auto it = a.cols.at(labels[c]).entries.find(labels[r]);
                return it == a.cols.at(labels[c]).entries.end() ? Scalar(f, 0) : it->second;
            };
            for (size_t r = 0; r < D; ++r)
                for (size_t c = 0; c < D; ++c) {
                    SparseVec row;  // (A X - X A)[r][c] = 0
                    for (size_t k = 0; k < D; ++k) {
                        Scalar v1 = entry(r, k);
                        if (!v1.is_zero()) {
                            auto cur = row.entries.count(xlab(k, c)) ? row.entries[xlab(k, c)]
                                                                     : Scalar(f, 0);
                            row.set(xlab(k, c), cur + v1);
                        }
                        Scalar v2 = entry(k, c);
                        if (!v2.is_zero()) {
                            auto cur = row.entries.count(xlab(r, k)) ? row.entries[xlab(r, k)]
                                                                     : Scalar(f, 0);
                            row.set(xlab(r, k), cur - v2);
                        }
                    }
                    if (!row.is_zero()) {
                        sys.row_labels.push_back(std::to_string(eq++));
                        sys.rows.push_back(std::move(row));
                    }
                }
        }
        auto commutant = exactalg::kernel_basis(sys);
        REQUIRE(commutant.size() >= 1);
        std::string cl = shapes::tableau_label(shapes::canonical_tableau(lambda, 2));
        for (const auto& X : commutant)
            for (size_t r = 0; r < D; ++r) {
                if (labels[r] == cl) continue;
                size_t c = size_t(std::find(labels.begin(), labels.end(), cl) - labels.begin());
                auto it = X.entries.find(xlab(r, c));
                CHECK((it == X.entries.end() || it->second.is_zero()));
            }
    }
}

TEST_CASE("queer basis and embedding") {
    for (int n = 1; n <= 3; ++n) CHECK(q_basis(n, 1).size() == size_t(2 * n * n));
    // embedded weight idempotents: expansion, orthogonality, identity
    for (auto [n, d] : {std::pair{1, 2}, {1, 3}, {2, 2}}) {
        SuperBasis big = SuperBasis::standard(n, n);
        auto nus = all_weights(n, d);
        for (const auto& nu : nus) {
            IntVec em = q_embed(q_weight_idempotent(nu), n);
            IntVec expect;
            for (const auto& mu : all_weights(2 * n, d)) {
                std::vector<int> plus(mu.begin(), mu.begin() + n);
                std::vector<int> minus(mu.begin() + n, mu.end());
                std::vector<int> tot(n);
                for (int k = 0; k < n; ++k) tot[k] = plus[k] + minus[k];
                if (tot == nu) {
                    OrbitRep e = weight_idempotent(mu);
                    hopf::add_term(expect, rep_label(e), 1);
                }
            }
            CHECK(vec_eq(em, expect));
            for (const auto& nu2 : nus) {
                IntVec em2 = q_embed(q_weight_idempotent(nu2), n);
                IntVec p = s_mult_vec(big, em, em2);
                CHECK(vec_eq(p, nu == nu2 ? em : IntVec{}));
            }
        }
        CHECK(vec_eq(q_identity_elem(n, d), identity_elem(n, n, d)));
    }
    // embedded products stay in the embedded span (subalgebra check)
    {
        const int n = 2, d = 2;
        SuperBasis big = SuperBasis::standard(n, n);
        Field f = Field::Q();
        auto qb = q_basis(n, d);
        std::vector<SparseVec> span;
        std::vector<IntVec> embedded;
        for (const auto& q : qb) {
            embedded.push_back(q_embed(q, n));
            span.push_back(schurfun::instantiate(embedded.back(), f));
        }
        for (size_t i = 0; i < embedded.size(); i += 3)
            for (size_t j = 0; j < embedded.size(); j += 3) {
                IntVec p = s_mult_vec(big, embedded[i], embedded[j]);
                CHECK(exactalg::in_span(schurfun::instantiate(p, f), span));
            }
    }
}

TEST_CASE("queer weight spaces of restricted modules") {
    const int n = 2;
    SuperBasis big = SuperBasis::standard(n, n);
    Field f = Field::Q();
    for (const Partition& lambda : {Partition{2}, {1, 1}, {3}, {2, 1}}) {
        const int d = std::accumulate(lambda.begin(), lambda.end(), 0);
        auto sb = schurfun::schur_basis({shapes::conjugate(lambda), {}}, big);
        if (sb.count() == 0) continue;
        // type-I weight multiplicities from the basis tableaux
        std::map<std::vector<int>, size_t> dims;
        for (const auto& t : sb.tableaux) ++dims[supercore::weight(shapes::reading_word(t), 2 * n)];
        for (const auto& nu : all_weights(n, d)) {
            size_t expect = 0;
            for (const auto& [mu, cnt] : dims) {
                std::vector<int> tot(n);
                for (int k = 0; k < n; ++k) tot[k] = mu[k] + mu[n + k];
                if (tot == nu) expect += cnt;
            }
            ActionMatrix proj = act_schur_elem(q_embed(q_weight_idempotent(nu), n), sb, f);
            CHECK(mat_rank(proj) == expect);
        }
    }
}
