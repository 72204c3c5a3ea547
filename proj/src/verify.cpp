#include "superschur/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "superschur/chars.hpp"
#include "superschur/hopf.hpp"
#include "superschur/schuralg.hpp"
#include "superschur/schurfun.hpp"
#include "superschur/shapes.hpp"
#include "superschur/supercore.hpp"

namespace verify {

using exactalg::Eliminator;
using exactalg::Field;
using exactalg::SparseVec;
using hopf::IntVec;
using shapes::Partition;
using shapes::SkewShape;
using shapes::Tableau;
using supercore::SuperBasis;
using supercore::Word;
using supercore::word_label;

bool Report::ok() const { return failed() == 0; }

size_t Report::failed() const {
    size_t n = 0;
    for (const auto& c : cases)
        if (!c.pass) ++n;
    return n;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"hopf",       "kernel",    "standard",
                                                "straighten", "filtration", "algebra",
                                                "invariants", "characters", "all"};
    return names;
}

namespace {

std::vector<SkewShape> skew_shapes(int max_size) {
    std::vector<SkewShape> out;
    for (const auto& lambda : shapes::partitions_up_to(max_size))
        for (const auto& mu : shapes::partitions_up_to(max_size))
            if (!lambda.empty() && shapes::contains(lambda, mu) &&
                SkewShape{lambda, mu}.size() > 0)
                out.push_back({lambda, mu});
    return out;
}

std::vector<std::pair<int, int>> spaces(const Caps& caps) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a <= caps.m; ++a)
        for (int b = 0; b <= caps.n; ++b)
            if (a + b >= 1) out.push_back({a, b});
    return out;
}

std::string space_str(int a, int b) { return std::to_string(a) + "|" + std::to_string(b); }

void emit(Report& rep, std::string suite, std::string label, bool pass, std::string detail) {
    rep.cases.push_back({std::move(suite), std::move(label), pass, std::move(detail)});
}

// --- hopf suite: dual-pairing oracle for the divided-power product ---------

// Comultiplication of a monomial in the symmetric algebra of the dual space:
// all 2-slot splittings with the sign of slot-1 factors passing earlier
// slot-2 factors; a repeated odd letter inside one slot kills the term.
long long pairing_oracle(const SuperBasis& b, const Word& x, const Word& y, const Word& c) {
    const int d = static_cast<int>(c.size());
    const int r = static_cast<int>(x.size());
    long long total = 0;
    for (int mask = 0; mask < (1 << d); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != r) continue;
        Word a, e;
        long long sign = 1;
        for (int k = 0; k < d; ++k)
            if (mask & (1 << k)) {
                for (int l = 0; l < k; ++l)
                    if (!(mask & (1 << l)) && b.par(c[k]) && b.par(c[l])) sign = -sign;
                a.push_back(c[k]);
            } else {
                e.push_back(c[k]);
            }
        bool zero = false;
        for (size_t k = 1; k < a.size(); ++k)
            if (a[k] == a[k - 1] && b.par(a[k])) zero = true;
        for (size_t k = 1; k < e.size(); ++k)
            if (e[k] == e[k - 1] && b.par(e[k])) zero = true;
        if (!zero && a == x && e == y) total += sign;
    }
    return total;
}

void suite_hopf(Report& rep, const Caps& caps) {
    SuperBasis b = SuperBasis::standard(caps.m, caps.n);
    const int D = std::min(caps.max_deg, 4);
    for (int d1 = 0; d1 <= D; ++d1)
        for (int d2 = 0; d1 + d2 <= D; ++d2) {
            long checked = 0, bad = 0;
            for (const auto& x : hopf::divided_basis(b, d1))
                for (const auto& y : hopf::divided_basis(b, d2)) {
                    auto prod = hopf::div_mult(b, x, y);
                    for (const auto& c : hopf::divided_basis(b, d1 + d2)) {
                        long long expect = pairing_oracle(b, x, y, c);
                        long long got = (prod.coeff != 0 && prod.word == c) ? prod.coeff : 0;
                        ++checked;
                        if (got != expect) ++bad;
                    }
                }
            emit(rep, "hopf",
                 "degrees " + std::to_string(d1) + "+" + std::to_string(d2) + " over " +
                     space_str(caps.m, caps.n),
                 bad == 0, std::to_string(checked) + " products against the pairing oracle");
        }
}

// --- kernel suite: relations land in the kernel of the defining map --------

void suite_kernel(Report& rep, const Caps& caps) {
    auto shps = skew_shapes(caps.max_deg);
    for (auto [a, bdim] : spaces(caps)) {
        SuperBasis b = SuperBasis::standard(a, bdim);
        long checked = 0;
        std::string bad;
        for (const auto& sh : shps) {
            schurfun::ColMap d = schurfun::build_diamond(sh, b);
            if (d.cols.empty()) continue;
            schurfun::ThetaMatrix T = schurfun::build_theta_hat(shapes::conjugate(sh), b);
            for (const auto& l : d.col_labels) {
                ++checked;
                if (!schurfun::apply(T.matrix, d.cols.at(l)).empty() && bad.empty())
                    bad = shapes::shape_str(sh);
            }
        }
        emit(rep, "kernel", "space " + space_str(a, bdim), bad.empty(),
             bad.empty() ? std::to_string(checked) + " relation columns annihilated"
                         : "first failure at shape " + bad);
    }
}

// --- standard suite: rank = costandard count = domain minus relations ------

void suite_standard(Report& rep, const Caps& caps) {
    auto shps = skew_shapes(caps.max_deg);
    for (auto [a, bdim] : spaces(caps)) {
        SuperBasis b = SuperBasis::standard(a, bdim);
        long checked = 0;
        std::string bad;
        for (const auto& sh : shps) {
            size_t theta =
                schurfun::rank_of(schurfun::build_theta_hat(shapes::conjugate(sh), b).matrix,
                                  caps.field);
            size_t cost = shapes::enumerate(sh, b, shapes::Pred::Costandard).size();
            schurfun::ColMap d = schurfun::build_diamond(sh, b);
            size_t dia = schurfun::rank_of(d, caps.field);
            ++checked;
            if ((theta != cost || theta != d.row_labels.size() - dia) && bad.empty())
                bad = shapes::shape_str(sh);
        }
        emit(rep, "standard",
             "space " + space_str(a, bdim) + " field " + caps.field.str(), bad.empty(),
             bad.empty() ? std::to_string(checked) + " shapes: rank = count = dim - relations"
                         : "first failure at shape " + bad);
    }
}

// --- straighten suite -------------------------------------------------------

void suite_straighten(Report& rep, const Caps& caps) {
    auto shps = skew_shapes(caps.max_deg);
    for (auto [a, bdim] : spaces(caps)) {
        SuperBasis b = SuperBasis::standard(a, bdim);
        long checked = 0;
        std::string bad;
        for (const auto& sh : shps) {
            auto dom = shapes::enumerate(sh, b, shapes::Pred::RowCostandard);
            if (dom.empty()) continue;
            schurfun::ColMap d = schurfun::build_diamond(sh, b);
            Eliminator span(caps.field);
            for (const auto& l : d.col_labels)
                span.add(schurfun::instantiate(d.cols.at(l), caps.field));
            schurfun::ThetaMatrix T = schurfun::build_theta_hat(shapes::conjugate(sh), b);
            schurfun::Straightener st{sh, b};
            for (const Tableau& t : dom) {
                ++checked;
                bool good = true;
                const IntVec& r = st.run(t);
                std::string lbl = shapes::tableau_label(t);
                for (const auto& [sl, sc] : r) {
                    Tableau s{sh, schurfun::split_label(sl)};
                    if (!shapes::costandard(s, b)) good = false;
                    if (sl != lbl &&
                        (!shapes::quasi_leq(s, t, b.letters()) ||
                         shapes::quasi_leq(t, s, b.letters())))
                        good = false;
                }
                IntVec diff = r;
                hopf::add_term(diff, lbl, -1);
                if (!span.reduce(schurfun::instantiate(diff, caps.field)).is_zero()) good = false;
                IntVec lhs = T.matrix.cols.at(lbl), rhs;
                for (const auto& [sl, sc] : r)
                    for (const auto& [rl, rc] : T.matrix.cols.at(sl))
                        hopf::add_term(rhs, rl, sc * rc);
                for (auto it = rhs.begin(); it != rhs.end();)
                    it = it->second == 0 ? rhs.erase(it) : std::next(it);
                if (!(lhs == rhs)) good = false;
                if (!good && bad.empty()) bad = shapes::shape_str(sh) + " tableau " + lbl;
            }
        }
        emit(rep, "straighten", "space " + space_str(a, bdim) + " field " + caps.field.str(),
             bad.empty(),
             bad.empty() ? std::to_string(checked) + " rewrites: descent, span, image agreement"
                         : "first failure at " + bad);
    }
}

// --- filtration suite -------------------------------------------------------

void suite_filtration(Report& rep, const Caps& caps) {
    auto shps = skew_shapes(std::min(caps.max_deg, 4));
    auto sp = spaces(caps);
    for (auto [m1, n1] : sp)
        for (auto [m2, n2] : sp) {
            SuperBasis M = SuperBasis::standard(m1, n1), N = SuperBasis::standard(m2, n2);
            long checked = 0;
            std::string bad;
            for (const auto& sh : shps) {
                try {
                    auto rows = schurfun::filtration_report(sh, M, N);
                    size_t total = 0;
                    for (const auto& r : rows) total += r.graded_dim;
                    size_t whole = static_cast<size_t>(
                        schurfun::schur_complex_dim(sh, m1 + m2, n1 + n2));
                    ++checked;
                    if (total != whole && bad.empty()) bad = shapes::shape_str(sh);
                } catch (const std::exception&) {
                    ++checked;
                    if (bad.empty()) bad = shapes::shape_str(sh) + " (internal check)";
                }
            }
            emit(rep, "filtration",
                 "spaces " + space_str(m1, n1) + " + " + space_str(m2, n2), bad.empty(),
                 bad.empty() ? std::to_string(checked) + " shapes: graded sum matches"
                             : "first failure at shape " + bad);
        }
}

// --- algebra suite -----------------------------------------------------------

bool vec_eq(IntVec a, IntVec b) {
    for (auto it = a.begin(); it != a.end();) it = it->second == 0 ? a.erase(it) : std::next(it);
    for (auto it = b.begin(); it != b.end();) it = it->second == 0 ? b.erase(it) : std::next(it);
    return a == b;
}

void suite_algebra(Report& rep, const Caps& caps) {
    for (auto [m, n, d] : std::vector<std::array<int, 3>>{{1, 1, 2}, {2, 1, 2}, {1, 1, 3}}) {
        if (m > caps.m || n > caps.n || d > caps.max_deg) continue;
        SuperBasis b = SuperBasis::standard(m, n);
        auto reps = schuralg::s_basis(m, n, d);
        std::string tag = space_str(m, n) + " degree " + std::to_string(d);

        // associativity over every basis triple
        {
            long bad = 0, checked = 0;
            std::vector<IntVec> units;
            for (const auto& r : reps) {
                IntVec u;
                u[schuralg::pair_label(r.i, r.j)] = 1;
                units.push_back(std::move(u));
            }
            for (size_t x = 0; x < reps.size(); ++x)
                for (size_t y = 0; y < reps.size(); ++y) {
                    IntVec xy = schuralg::s_mult(b, reps[x], reps[y]);
                    for (size_t z = 0; z < reps.size(); ++z) {
                        IntVec yz = schuralg::s_mult(b, reps[y], reps[z]);
                        ++checked;
                        if (!vec_eq(schuralg::s_mult_vec(b, xy, units[z]),
                                    schuralg::s_mult_vec(b, units[x], yz)))
                            ++bad;
                    }
                }
            emit(rep, "algebra", "associativity " + tag, bad == 0,
                 std::to_string(checked) + " triples");
        }

        // weight idempotents: orthogonal, idempotent, sum to the identity
        {
            bool good = true;
            IntVec sum;
            auto ws = schuralg::all_weights(m + n, d);
            for (size_t x = 0; x < ws.size(); ++x) {
                IntVec ex;
                auto rx = schuralg::weight_idempotent(ws[x]);
                ex[schuralg::pair_label(rx.i, rx.j)] = 1;
                for (const auto& [l, c] : ex) hopf::add_term(sum, l, c);
                if (!vec_eq(schuralg::s_mult(b, rx, rx), ex)) good = false;
                for (size_t y = x + 1; y < ws.size(); ++y) {
                    auto ry = schuralg::weight_idempotent(ws[y]);
                    if (!schuralg::s_mult(b, rx, ry).empty()) good = false;
                    if (!schuralg::s_mult(b, ry, rx).empty()) good = false;
                }
            }
            if (!vec_eq(sum, schuralg::identity_elem(m, n, d))) good = false;
            // two-sided unit
            IntVec one = schuralg::identity_elem(m, n, d);
            for (const auto& r : reps) {
                IntVec u;
                u[schuralg::pair_label(r.i, r.j)] = 1;
                if (!vec_eq(schuralg::s_mult_vec(b, one, u), u)) good = false;
                if (!vec_eq(schuralg::s_mult_vec(b, u, one), u)) good = false;
            }
            emit(rep, "algebra", "weight idempotents " + tag, good,
                 std::to_string(ws.size()) + " weights");
        }

        // the tensor action is faithful: the linearized action has full rank
        {
            exactalg::SparseMat mat;
            std::vector<Word> words;
            {
                std::vector<Word> acc{{}};
                for (int k = 0; k < d; ++k) {
                    std::vector<Word> next;
                    for (const Word& w : acc)
                        for (int x = 1; x <= m + n; ++x) {
                            Word v = w;
                            v.push_back(x);
                            next.push_back(std::move(v));
                        }
                    acc = std::move(next);
                }
                words = std::move(acc);
            }
            for (const Word& w : words) mat.col_labels.push_back(word_label(w));
            for (const auto& r : reps) {
                SparseVec row;
                for (const Word& w : words)
                    for (const auto& [kl, kc] : schuralg::act_tensor(b, r, w, false))
                        row.set(word_label(w) + ">" + kl, exactalg::Scalar(caps.field, kc));
                mat.row_labels.push_back(schuralg::pair_label(r.i, r.j));
                mat.rows.push_back(std::move(row));
            }
            // row space rank equals the number of basis elements
            Eliminator e(caps.field);
            for (auto& row : mat.rows) e.add(row);
            emit(rep, "algebra", "faithful tensor action " + tag, e.rank() == reps.size(),
                 "rank " + std::to_string(e.rank()) + " of " + std::to_string(reps.size()));
        }
    }
}

// --- invariants suite --------------------------------------------------------

void suite_invariants(Report& rep, const Caps& caps) {
    for (const Partition& lambda : shapes::partitions_up_to(caps.max_deg)) {
        if (lambda.empty()) continue;
        for (int m = lambda[0]; m <= caps.m; ++m)
            for (int n = 0; n <= caps.n; ++n) {
                SuperBasis b = SuperBasis::standard(m, n);
                auto sb = schurfun::schur_basis({shapes::conjugate(lambda), {}}, b);
                auto inv = schuralg::n_invariants(sb, caps.field);
                std::string cl = shapes::tableau_label(shapes::canonical_tableau(lambda, m));
                bool good = inv.size() == 1 && inv[0].entries.size() == 1 &&
                            inv[0].entries.begin()->first == cl;
                emit(rep, "invariants",
                     "shape " + shapes::shape_str({lambda, {}}) + " space " + space_str(m, n),
                     good,
                     good ? "one invariant line at the canonical tableau"
                          : std::to_string(inv.size()) + " invariant vectors");
            }
    }
}

// --- characters suite ----------------------------------------------------------

void suite_characters(Report& rep, const Caps& caps) {
    for (const Partition& lambda : shapes::partitions_up_to(caps.max_deg)) {
        std::string shp = "shape " + shapes::shape_str({lambda, {}});
        {
            long checked = 0;
            std::string bad;
            for (int m = 0; m <= caps.m; ++m)
                for (int n = 0; n <= caps.n; ++n) {
                    if (m + n == 0) continue;
                    ++checked;
                    if (!chars::verify_char_typeI(lambda, m, n) && bad.empty())
                        bad = "space " + space_str(m, n);
                }
            emit(rep, "characters", shp + " hook identity", bad.empty(),
                 bad.empty() ? std::to_string(checked) + " spaces" : "first failure at " + bad);
        }
        {
            bool good = true;
            for (int n = 1; n <= std::min(caps.n, 2); ++n)
                good = good && chars::verify_char_typeII(lambda, n);
            emit(rep, "characters", shp + " square-space collapse", good,
                 "compared against the doubled-alphabet substitution");
        }
        {
            bool good = true;
            for (int m = 1; m < caps.m; ++m)
                for (int n = 1; n < caps.n; ++n)
                    good = good && chars::truncation_check(lambda, m, n, m + 1, n + 1);
            emit(rep, "characters", shp + " truncation", good,
                 "killing the extra variables recovers the smaller character");
        }
    }
}

}  // namespace

Report run_suite(const std::string& name, const Caps& caps) {
    Report rep;
    bool known = false;
    auto want = [&](const char* s) {
        bool w = name == s || name == "all";
        if (name == s) known = true;
        return w;
    };
    if (name == "all") known = true;
    if (want("hopf")) suite_hopf(rep, caps);
    if (want("kernel")) suite_kernel(rep, caps);
    if (want("standard")) suite_standard(rep, caps);
    if (want("straighten")) suite_straighten(rep, caps);
    if (want("filtration")) suite_filtration(rep, caps);
    if (want("algebra")) suite_algebra(rep, caps);
    if (want("invariants")) suite_invariants(rep, caps);
    if (want("characters")) suite_characters(rep, caps);
    if (!known) throw std::invalid_argument("unknown suite: " + name);
    return rep;
}

}  // namespace verify
