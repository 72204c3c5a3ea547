#include "superschur/schurfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurfun {

using exactalg::Eliminator;
using exactalg::Field;
using exactalg::Scalar;
using exactalg::SparseVec;
using shapes::Partition;
using shapes::SkewShape;
using shapes::Tableau;
using supercore::SuperBasis;
using supercore::Word;

std::string join_rows(const std::vector<Word>& rows) {
    std::string s;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) s.push_back('|');
        s += supercore::word_label(rows[i]);
    }
    return s;
}

std::vector<Word> split_label(const std::string& label) {
    std::vector<Word> rows;
    if (label.empty()) return rows;
    size_t pos = 0;
    while (true) {
        size_t bar = label.find('|', pos);
        rows.push_back(supercore::parse_word_label(
            label.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos)));
        if (bar == std::string::npos) break;
        pos = bar + 1;
    }
    return rows;
}

namespace {

Partition trim(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int word_parity(const SuperBasis& b, const Word& w) {
    int p = 0;
    for (int x : w) p ^= b.par(x);
    return p;
}

// cartesian product of per-row symmetric-power bases, as joined labels
void codomain_labels(const SuperBasis& bp, const SkewShape& shape, std::vector<std::string>& out) {
    std::vector<std::vector<Word>> per_row;
    for (int i = 1; i <= shape.rows(); ++i) per_row.push_back(hopf::sym_basis(bp, shape.row_len(i)));
    std::vector<Word> cur(per_row.size());
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == per_row.size()) {
            out.push_back(join_rows(cur));
            return;
        }
        for (const auto& w : per_row[i]) {
            cur[i] = w;
            rec(i + 1);
        }
    };
    rec(0);
}

ThetaMatrix build_theta(const SkewShape& shape, const SuperBasis& space, bool weyl) {
    if (!shape.valid()) throw std::invalid_argument("invalid shape");
    SuperBasis b = space.untwisted(), bt = b.twisted();
    const SuperBasis& embed_basis = weyl ? b : bt;   // domain side
    const SuperBasis& target_basis = weyl ? bt : b;  // codomain side
    ThetaMatrix T;
    T.shape = shape;
    T.space = b;
    T.parity_bit = shape.size() % 2;
    SkewShape conj = shapes::conjugate(shape);
    // divided-power tuples over the conjugate rows: repeats allowed exactly
    // where the target-side parity is odd
    T.domain = shapes::enumerate(conj, b,
                                 weyl ? shapes::Pred::RowStandard : shapes::Pred::RowCostandard);
    codomain_labels(target_basis, shape, T.matrix.row_labels);
    supercore::Perm sigma = shapes::sigma_shape(shape);
    for (const Tableau& t : T.domain) {
        // expand the embedding of each domain row into the tensor power
        std::vector<std::pair<Word, long long>> terms{{{}, 1}};
        for (const auto& row : t.rows) {
            std::vector<std::pair<Word, long long>> next;
            for (const auto& [w, c] : terms)
                for (const auto& e : hopf::delta_embed(embed_basis, row)) {
                    Word v = w;
                    v.insert(v.end(), e.word.begin(), e.word.end());
                    next.emplace_back(std::move(v), c * e.coeff);
                }
            terms = std::move(next);
        }
        IntVec col;
        for (const auto& [w, c] : terms) {
            // crossing between the twisted and plain tensor powers: the k-th
            // parity shift passes every earlier letter
            int cross = 0;
            for (size_t l = 0; l < w.size(); ++l)
                cross += b.par(w[l]) * static_cast<int>(w.size() - 1 - l);
            auto [w2, s] = supercore::act(target_basis, w, sigma);
            long long coeff = c * s * (cross % 2 ? -1 : 1);
            std::vector<Word> blocks;
            size_t pos = 0;
            bool zero = false;
            for (int i = 1; i <= shape.rows() && !zero; ++i) {
                Word block(w2.begin() + pos, w2.begin() + pos + shape.row_len(i));
                pos += shape.row_len(i);
                auto pr = hopf::sym_project(target_basis, block);
                if (pr.coeff == 0) zero = true;
                coeff *= pr.coeff;
                blocks.push_back(pr.word);
            }
            if (!zero) hopf::add_term(col, join_rows(blocks), coeff);
        }
        std::string lbl = shapes::tableau_label(t);
        T.matrix.col_labels.push_back(lbl);
        T.matrix.cols.emplace(lbl, std::move(col));
    }
    return T;
}

// One relations column: fixed words on the untouched rows, triple (a,b,c)
// replacing rows i and i+1; comultiply b, multiply outward.
IntVec diamond_column(const SuperBasis& bt, const SkewShape& shape, int i, const Word& a,
                      const Word& bw, const Word& c, const std::vector<Word>& rows) {
    int p1 = shape.row_len(i), p2 = shape.row_len(i + 1);
    int u = static_cast<int>(a.size()), v = static_cast<int>(c.size());
    IntVec col;
    for (const auto& sp : hopf::div_comult(bt, bw, p1 - u, p2 - v)) {
        auto r1 = hopf::div_mult(bt, a, sp.left);
        if (r1.coeff == 0) continue;
        auto r2 = hopf::div_mult(bt, sp.right, c);
        if (r2.coeff == 0) continue;
        std::vector<Word> out = rows;
        out[i - 1] = r1.word;
        out[i] = r2.word;
        hopf::add_term(col, join_rows(out), sp.coeff * r1.coeff * r2.coeff);
    }
    return col;
}

}  // namespace

ThetaMatrix build_theta_hat(const SkewShape& shape, const SuperBasis& space) {
    return build_theta(shape, space, false);
}

ThetaMatrix build_theta_check(const SkewShape& shape, const SuperBasis& space) {
    return build_theta(shape, space, true);
}

ColMap build_diamond(const SkewShape& shape, const SuperBasis& space) {
    if (!shape.valid()) throw std::invalid_argument("invalid shape");
    SuperBasis b = space.untwisted(), bt = b.twisted();
    ColMap m;
    for (const Tableau& t : shapes::enumerate(shape, b, shapes::Pred::RowCostandard))
        m.row_labels.push_back(shapes::tableau_label(t));
    const int q = shape.rows();
    for (int i = 1; i < q; ++i) {
        int p1 = shape.row_len(i), p2 = shape.row_len(i + 1);
        for (int u = 0; u < shape.lambda_at(i + 1) - shape.mu_at(i); ++u)
            for (int v = 0; u + v < shape.lambda_at(i + 1) - shape.mu_at(i); ++v) {
                if (u > p1 || v > p2) continue;
                // enumerate the fixed rows and the (a, b, c) triple
                std::vector<std::vector<Word>> slots;
                for (int j = 1; j <= q; ++j)
                    if (j != i && j != i + 1)
                        slots.push_back(hopf::divided_basis(bt, shape.row_len(j)));
                slots.push_back(hopf::divided_basis(bt, u));
                slots.push_back(hopf::divided_basis(bt, p1 - u + p2 - v));
                slots.push_back(hopf::divided_basis(bt, v));
                std::vector<size_t> idx(slots.size(), 0);
                std::vector<Word> pick(slots.size());
                std::function<void(size_t)> rec = [&](size_t k) {
                    if (k == slots.size()) {
                        std::vector<Word> rows(q);
                        size_t s = 0;
                        for (int j = 1; j <= q; ++j)
                            if (j != i && j != i + 1) rows[j - 1] = pick[s++];
                        const Word &a = pick[s], &bw = pick[s + 1], &c = pick[s + 2];
                        IntVec col = diamond_column(bt, shape, i, a, bw, c, rows);
                        if (col.empty()) return;
                        std::string lbl = "D" + std::to_string(i) + ":" + std::to_string(u) + ":" +
                                          std::to_string(v) + ":";
                        for (int j = 1; j <= q; ++j) {
                            if (j == i) {
                                lbl += supercore::word_label(a) + ";" + supercore::word_label(bw) +
                                       ";" + supercore::word_label(c);
                                ++j;  // row i+1 consumed by the triple
                            } else {
                                lbl += supercore::word_label(rows[j - 1]);
                            }
                            if (j < q) lbl.push_back('|');
                        }
                        m.col_labels.push_back(lbl);
                        m.cols.emplace(std::move(lbl), std::move(col));
                        return;
                    }
                    for (const auto& w : slots[k]) {
                        pick[k] = w;
                        rec(k + 1);
                    }
                };
                rec(0);
            }
    }
    return m;
}

const IntVec& Straightener::run(const Tableau& t) {
    std::string lbl = shapes::tableau_label(t);
    auto it = memo_.find(lbl);
    if (it != memo_.end()) return it->second;

    SuperBasis b = space.untwisted(), bt = b.twisted();
    if (!shapes::row_costandard(t, b)) throw std::invalid_argument("tableau not row-costandard");
    if (shapes::costandard(t, b)) return memo_.emplace(lbl, IntVec{{lbl, 1}}).first->second;

    // first adjacent row pair, minimal column violating column-costandardness
    int vi = 0, vj = 0;
    for (int i = 1; i < shape.rows() && !vi; ++i)
        for (int j = shape.mu_at(i) + 1; j <= shape.lambda_at(i + 1); ++j) {
            int x = t.entry(i, j), y = t.entry(i + 1, j);
            if (y < x || (y == x && b.par(x) == 1)) {
                vi = i;
                vj = j;
                break;
            }
        }
    if (!vi) throw std::logic_error("no violation in non-costandard tableau");

    const int i = vi, j0 = vj;
    int y = t.entry(i + 1, j0);
    int hi = j0;
    while (hi + 1 <= shape.lambda_at(i + 1) && t.entry(i + 1, hi + 1) == y) ++hi;
    Word a, bw, c;
    for (int j = shape.mu_at(i) + 1; j < j0; ++j) a.push_back(t.entry(i, j));
    for (int j = j0; j <= shape.lambda_at(i); ++j) bw.push_back(t.entry(i, j));
    for (int j = shape.mu_at(i + 1) + 1; j <= hi; ++j) bw.push_back(t.entry(i + 1, j));
    for (int j = hi + 1; j <= shape.lambda_at(i + 1); ++j) c.push_back(t.entry(i + 1, j));
    std::sort(bw.begin(), bw.end());
    if (!supercore::restricted(bt, bw)) throw std::logic_error("middle word not restricted");

    IntVec col = diamond_column(bt, shape, i, a, bw, c, t.rows);
    auto lead = col.find(lbl);
    if (lead == col.end() || (lead->second != 1 && lead->second != -1))
        throw std::logic_error("straightening leading coefficient not a unit");
    long long c0 = lead->second;

    IntVec result;
    for (const auto& [sl, sc] : col) {
        if (sl == lbl) continue;
        Tableau s{shape, split_label(sl)};
        for (const auto& [rl, rc] : run(s)) hopf::add_term(result, rl, -c0 * sc * rc);
    }
    return memo_.emplace(lbl, std::move(result)).first->second;
}

IntVec straighten(const Tableau& t, const SkewShape& shape, const SuperBasis& space) {
    Straightener s{shape, space};
    return s.run(t);
}

SparseVec instantiate(const IntVec& v, const Field& f) {
    SparseVec out;
    for (const auto& [l, c] : v) out.set(l, Scalar(f, c));
    return out;
}

size_t rank_of(const ColMap& m, const Field& f) {
    Eliminator e(f);
    for (const auto& l : m.col_labels) e.add(instantiate(m.cols.at(l), f));
    return e.rank();
}

size_t theta_rank(const SkewShape& shape, const SuperBasis& space, const Field& f) {
    return rank_of(build_theta_hat(shape, space).matrix, f);
}

IntVec apply(const ColMap& m, const IntVec& v) {
    IntVec out;
    for (const auto& [l, c] : v)
        for (const auto& [rl, rc] : m.cols.at(l)) hopf::add_term(out, rl, c * rc);
    return out;
}

SchurBasis schur_basis(const SkewShape& shape, const SuperBasis& space) {
    ThetaMatrix T = build_theta_hat(shape, space);
    SuperBasis b = space.untwisted();
    SchurBasis sb;
    sb.shape = shape;
    sb.space = b;
    sb.vectors.row_labels = T.matrix.row_labels;
    Eliminator e(Field::Q());
    for (const Tableau& t : T.domain) {
        if (!shapes::costandard(t, b)) continue;
        std::string lbl = shapes::tableau_label(t);
        sb.tableaux.push_back(t);
        sb.vectors.col_labels.push_back(lbl);
        sb.vectors.cols.emplace(lbl, T.matrix.cols.at(lbl));
        e.add(instantiate(T.matrix.cols.at(lbl), Field::Q()));
    }
    if (e.rank() != sb.tableaux.size())
        throw std::runtime_error("standard basis theorem violated");
    return sb;
}

long schur_complex_dim(const SkewShape& shape, int v_dim, int w_dim) {
    return static_cast<long>(schur_basis(shape, SuperBasis::standard(v_dim, w_dim)).count());
}

std::vector<FiltrationRow> filtration_report(const SkewShape& shape, const SuperBasis& space_m,
                                             const SuperBasis& space_n) {
    SuperBasis W = SuperBasis::concat(space_m.untwisted(), space_n.untwisted());
    const int r = space_m.letters();
    ThetaMatrix T = build_theta_hat(shape, W);

    // group image columns by the intermediate partition cut out by the split
    std::map<Partition, std::vector<std::string>> groups;
    std::vector<std::string> non_partition;
    for (const Tableau& t : T.domain) {
        Partition kp = trim(shapes::m_part(t, r));  // conjugate of the candidate
        bool ok = true;
        for (size_t k = 1; k < kp.size(); ++k)
            if (kp[k] > kp[k - 1]) ok = false;
        std::string lbl = shapes::tableau_label(t);
        if (ok)
            groups[shapes::conjugate(kp)].push_back(lbl);
        else
            non_partition.push_back(lbl);
    }

    std::vector<FiltrationRow> out;
    Eliminator e(Field::Q());
    size_t prev = 0;
    for (const Partition& xi : shapes::partitions_between(trim(shape.mu), shape.lambda)) {
        auto it = groups.find(xi);
        if (it != groups.end())
            for (const auto& lbl : it->second)
                e.add(instantiate(T.matrix.cols.at(lbl), Field::Q()));
        size_t dim_l = e.rank(), graded = dim_l - prev;
        prev = dim_l;
        size_t expect = theta_rank({xi, trim(shape.mu)}, space_m, Field::Q()) *
                        theta_rank({shape.lambda, xi}, space_n, Field::Q());
        if (graded != expect) throw std::runtime_error("filtration graded dimension mismatch");
        out.push_back({xi, dim_l, graded});
    }
    // columns whose split is not partition-shaped add nothing new
    for (const auto& lbl : non_partition) e.add(instantiate(T.matrix.cols.at(lbl), Field::Q()));
    if (e.rank() != prev) throw std::runtime_error("filtration does not exhaust the module");
    return out;
}

bool factorization_check(const SkewShape& shape, const SuperBasis& space, int i) {
    const int q = shape.rows();
    if (i < 1 || i >= q) return true;
    SuperBasis b = space.untwisted();
    SkewShape conj = shapes::conjugate(shape);
    ThetaMatrix Th = build_theta_hat(conj, space);

    auto sub = [&](int lo, int hiRow) {  // rows lo..hiRow of the shape, 1-based inclusive
        SkewShape s;
        for (int k = lo; k <= hiRow; ++k) {
            s.lambda.push_back(shape.lambda_at(k));
            s.mu.push_back(shape.mu_at(k));
        }
        s.mu = trim(s.mu);
        return s;
    };
    SkewShape pre = sub(1, i - 1), mid = sub(i, i + 1), suf = sub(i + 2, q);
    ThetaMatrix Tp = build_theta_hat(shapes::conjugate(pre), space);
    ThetaMatrix Tm = build_theta_hat(shapes::conjugate(mid), space);
    ThetaMatrix Ts = build_theta_hat(shapes::conjugate(suf), space);

    const int width = shape.lambda.empty() ? 0 : shape.lambda[0];
    auto pad = [&](std::vector<Word> rows) {
        rows.resize(width);
        return rows;
    };

    for (const Tableau& t : Th.domain) {
        auto piece = [&](int lo, int hiRow) {
            std::vector<Word> rows;
            for (int k = lo; k <= hiRow; ++k) rows.push_back(t.rows[k - 1]);
            return join_rows(rows);
        };
        const IntVec& cp = Tp.matrix.cols.at(piece(1, i - 1));
        const IntVec& cm = Tm.matrix.cols.at(piece(i, i + 1));
        const IntVec& cs = Ts.matrix.cols.at(piece(i + 2, q));
        IntVec result;
        for (const auto& [lp, vp] : cp)
            for (const auto& [lm, vm] : cm)
                for (const auto& [ls, vs] : cs) {
                    std::vector<Word> P = pad(split_label(lp)), Q = pad(split_label(lm)),
                                      R = pad(split_label(ls));
                    // reorder the three column-indexed groups into per-column
                    // triples, with a sign per crossing pair of odd factors
                    std::vector<std::pair<int, int>> blocks;  // (target pos, parity)
                    for (int j = 0; j < width; ++j) blocks.emplace_back(3 * j, word_parity(b, P[j]));
                    for (int j = 0; j < width; ++j)
                        blocks.emplace_back(3 * j + 1, word_parity(b, Q[j]));
                    for (int j = 0; j < width; ++j)
                        blocks.emplace_back(3 * j + 2, word_parity(b, R[j]));
                    long long coeff = vp * vm * vs;
                    // parity shifts of the middle and tail blocks pass the
                    // blocks to their left when the wrappers are merged
                    int p1 = 0, p2 = 0, dm = 0, ds = 0;
                    for (const auto& w : P) p1 ^= word_parity(b, w);
                    for (const auto& w : Q) {
                        p2 ^= word_parity(b, w);
                        dm += static_cast<int>(w.size());
                    }
                    for (const auto& w : R) ds += static_cast<int>(w.size());
                    if ((p1 * (dm + ds) + p2 * ds) % 2) coeff = -coeff;
                    for (size_t x = 0; x < blocks.size(); ++x)
                        for (size_t z = x + 1; z < blocks.size(); ++z)
                            if (blocks[x].first > blocks[z].first && blocks[x].second &&
                                blocks[z].second)
                                coeff = -coeff;
                    std::vector<Word> cols_out;
                    for (int j = 0; j < width && coeff; ++j) {
                        Word w = P[j];
                        w.insert(w.end(), Q[j].begin(), Q[j].end());
                        w.insert(w.end(), R[j].begin(), R[j].end());
                        auto pr = hopf::sym_project(b, w);
                        coeff *= pr.coeff;
                        cols_out.push_back(pr.word);
                    }
                    if (coeff) hopf::add_term(result, join_rows(cols_out), coeff);
                }
        if (result != Th.matrix.cols.at(shapes::tableau_label(t))) return false;
    }
    return true;
}

}  // namespace schurfun
