#include "superschur/schuralg.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace schuralg {

using hopf::add_term;
using supercore::charge;
using supercore::Perm;
using supercore::word_label;

namespace {

std::vector<int> pair_eps(const SuperBasis& b, const Word& iw, const Word& jw) {
    std::vector<int> eps(iw.size());
    for (size_t t = 0; t < iw.size(); ++t) eps[t] = (b.par(iw[t]) + b.par(jw[t])) % 2;
    return eps;
}

std::vector<std::pair<int, int>> zip_pairs(const Word& iw, const Word& jw) {
    std::vector<std::pair<int, int>> p(iw.size());
    for (size_t t = 0; t < iw.size(); ++t) p[t] = {iw[t], jw[t]};
    return p;
}

// One letter per index pair, with the pair's total parity.
SuperBasis pair_space(const SuperBasis& b) {
    const int L = b.letters();
    SuperBasis ps;
    ps.parity.resize(L * L);
    for (int i = 1; i <= L; ++i)
        for (int j = 1; j <= L; ++j) ps.parity[(i - 1) * L + j - 1] = (b.par(i) + b.par(j)) % 2;
    for (int p : ps.parity) (p ? ps.n : ps.m)++;
    return ps;
}

Word pair_codes(const Word& iw, const Word& jw, int L) {
    Word c(iw.size());
    for (size_t t = 0; t < iw.size(); ++t) c[t] = (iw[t] - 1) * L + jw[t];
    return c;
}

std::pair<Word, Word> decode_pairs(const Word& codes, int L) {
    Word iw(codes.size()), jw(codes.size());
    for (size_t t = 0; t < codes.size(); ++t) {
        iw[t] = (codes[t] - 1) / L + 1;
        jw[t] = (codes[t] - 1) % L + 1;
    }
    return {iw, jw};
}

void require_basis_elem(const SuperBasis& b, const OrbitRep& a) {
    if (a.i.size() != a.j.size()) throw std::invalid_argument("pair length mismatch");
    if (!strict_pair(b, a.i, a.j) || !canonical_pair(a.i, a.j, b.letters()))
        throw std::invalid_argument("not a canonical strict pair");
}

void drop_zeros(IntVec& v) {
    for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
}

// All words k with pairs (k_p, fixed_p) running over the pair multiset of
// (iw, jw); emit(k) is called once per distinct k. first selects whether the
// fixed word is matched against the j components (acting side) or the i
// components (composition side).
void match_pairs(const Word& iw, const Word& jw, const Word& fixed, bool fixed_is_second,
                 const std::function<void(const Word&)>& emit) {
    const size_t d = fixed.size();
    std::vector<std::pair<int, int>> keys = zip_pairs(iw, jw);
    std::sort(keys.begin(), keys.end());
    std::vector<int> counts;
    {
        std::vector<std::pair<int, int>> uniq;
        for (const auto& p : keys) {
            if (uniq.empty() || uniq.back() != p) {
                uniq.push_back(p);
                counts.push_back(0);
            }
            ++counts.back();
        }
        keys = uniq;
    }
    Word k(d);
    std::function<void(size_t)> rec = [&](size_t p) {
        if (p == d) {
            emit(k);
            return;
        }
        for (size_t u = 0; u < keys.size(); ++u) {
            if (counts[u] == 0) continue;
            int match = fixed_is_second ? keys[u].second : keys[u].first;
            if (match != fixed[p]) continue;
            k[p] = fixed_is_second ? keys[u].first : keys[u].second;
            --counts[u];
            rec(p + 1);
            ++counts[u];
        }
    };
    rec(0);
}

}  // namespace

std::string pair_label(const Word& i, const Word& j) {
    return word_label(i) + ":" + word_label(j);
}

OrbitRep parse_pair_label(const std::string& s) {
    auto pos = s.find(':');
    if (pos == std::string::npos) throw std::invalid_argument("bad pair label");
    return {supercore::parse_word_label(s.substr(0, pos)),
            supercore::parse_word_label(s.substr(pos + 1))};
}

bool strict_pair(const SuperBasis& b, const Word& i, const Word& j) {
    for (size_t k = 0; k < i.size(); ++k)
        for (size_t l = k + 1; l < i.size(); ++l)
            if ((b.par(i[k]) + b.par(j[k])) % 2 == 1 && (b.par(i[l]) + b.par(j[l])) % 2 == 1 &&
                i[k] == i[l] && j[k] == j[l])
                return false;
    return true;
}

bool canonical_pair(const Word& i, const Word& j, int letters) {
    return supercore::is_sorted_word(pair_codes(i, j, letters));
}

std::vector<OrbitRep> s_basis(int m, int n, int d) {
    SuperBasis b = SuperBasis::standard(m, n);
    SuperBasis ps = pair_space(b);
    std::vector<OrbitRep> out;
    for (const Word& codes : hopf::divided_basis(ps, d)) {
        auto [iw, jw] = decode_pairs(codes, b.letters());
        out.push_back({std::move(iw), std::move(jw)});
    }
    return out;
}

int pair_sgn(const SuperBasis& b, const Word& iw, const Word& jw, const Word& kw,
             const Word& lw) {
    const int L = b.letters();
    SuperBasis ps = pair_space(b);
    auto st1 = supercore::standardize(ps, pair_codes(iw, jw, L));
    auto st2 = supercore::standardize(ps, pair_codes(kw, lw, L));
    if (st1.word != st2.word) throw std::invalid_argument("pairs not in the same orbit");
    return st1.sign * st2.sign;
}

int chr(const SuperBasis& b, const Word& kw, const Word& lw, bool twisted) {
    // sign of evaluating the arrangement of operator pairs (k_t, l_t) on the
    // letters l_s: each operator crosses all earlier input letters
    std::vector<int> delta(lw.size()), eps(lw.size());
    for (size_t t = 0; t < lw.size(); ++t) {
        delta[t] = b.par(lw[t]) ^ (twisted ? 1 : 0);
        eps[t] = (b.par(kw[t]) + b.par(lw[t])) % 2;
    }
    return charge(delta, eps);
}

IntVec s_mult(const SuperBasis& b, const OrbitRep& a, const OrbitRep& c) {
    require_basis_elem(b, a);
    require_basis_elem(b, c);
    if (a.i.size() != c.i.size()) throw std::invalid_argument("degree mismatch");
    const int L = b.letters();
    IntVec out;
    for (const Word& codes : hopf::rearrangements(pair_codes(a.i, a.j, L))) {
        auto [s, h] = decode_pairs(codes, L);
        const int sgn_a = pair_sgn(b, a.i, a.j, s, h);
        match_pairs(c.i, c.j, h, false, [&](const Word& t) {
            if (!canonical_pair(s, t, L) || !strict_pair(b, s, t)) return;
            const int sgn_c = pair_sgn(b, c.i, c.j, h, t);
            // chr of the pair (h,t) against the letters of the pair word (s,h)
            std::vector<int> delta(s.size());
            for (size_t p = 0; p < s.size(); ++p) delta[p] = (b.par(s[p]) + b.par(h[p])) % 2;
            add_term(out, pair_label(s, t), sgn_a * sgn_c * charge(pair_eps(b, h, t), delta));
        });
    }
    drop_zeros(out);
    return out;
}

IntVec s_mult_vec(const SuperBasis& b, const IntVec& x, const IntVec& y) {
    IntVec out;
    for (const auto& [lx, cx] : x)
        for (const auto& [ly, cy] : y) {
            IntVec p = s_mult(b, parse_pair_label(lx), parse_pair_label(ly));
            for (const auto& [l, c] : p) add_term(out, l, cx * cy * c);
        }
    drop_zeros(out);
    return out;
}

std::vector<std::vector<int>> all_weights(int slots, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(slots, 0);
    std::function<void(int, int)> rec = [&](int slot, int left) {
        if (slot == slots - 1) {
            cur[slot] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[slot] = v;
            rec(slot + 1, left - v);
        }
    };
    if (slots == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(0, d);
    return out;
}

OrbitRep weight_idempotent(const std::vector<int>& mu) {
    Word w;
    for (size_t k = 0; k < mu.size(); ++k)
        for (int c = 0; c < mu[k]; ++c) w.push_back(static_cast<int>(k) + 1);
    return {w, w};
}

IntVec identity_elem(int m, int n, int d) {
    IntVec out;
    for (const auto& mu : all_weights(m + n, d)) {
        OrbitRep e = weight_idempotent(mu);
        add_term(out, pair_label(e.i, e.j), 1);
    }
    return out;
}

IntVec act_tensor(const SuperBasis& b, const OrbitRep& a, const Word& w, bool twisted) {
    if (w.size() != a.i.size()) throw std::invalid_argument("degree mismatch");
    IntVec out;
    match_pairs(a.i, a.j, w, true, [&](const Word& k) {
        add_term(out, word_label(k), pair_sgn(b, a.i, a.j, k, w) * chr(b, k, w, twisted));
    });
    drop_zeros(out);
    return out;
}

IntVec act_tensor_elem(const SuperBasis& b, const IntVec& x, const Word& w, bool twisted) {
    IntVec out;
    for (const auto& [l, c] : x)
        for (const auto& [kl, kc] : act_tensor(b, parse_pair_label(l), w, twisted))
            add_term(out, kl, c * kc);
    drop_zeros(out);
    return out;
}

IntVec act_divided(const SuperBasis& b, const OrbitRep& a, const shapes::Tableau& t) {
    if (!shapes::row_costandard(t, b)) throw std::invalid_argument("tableau not row costandard");
    const Word wt = shapes::reading_word(t);
    if (wt.size() != a.i.size()) throw std::invalid_argument("degree mismatch");

    // all tableaux row equivalent to t, as reading words with their signed
    // weight in the tensor expansion of the divided-power rows
    const SuperBasis bt = b.twisted();
    std::vector<std::pair<Word, long long>> r_words{{{}, 1}};
    for (const auto& row : t.rows) {
        std::vector<std::pair<Word, long long>> next;
        for (const auto& [prefix, pc] : r_words)
            for (const auto& term : hopf::delta_embed(bt, row)) {
                Word w = prefix;
                w.insert(w.end(), term.word.begin(), term.word.end());
                next.emplace_back(std::move(w), pc * term.coeff);
            }
        r_words = std::move(next);
    }

    auto pair_multiset = [&](const Word& x, const Word& y) {
        auto p = zip_pairs(x, y);
        std::sort(p.begin(), p.end());
        return p;
    };
    const auto target = pair_multiset(a.i, a.j);

    IntVec out;
    for (const Word& ws : hopf::rearrangements(a.i)) {
        shapes::Tableau s{t.shape, {}};
        size_t pos = 0;
        for (const auto& row : t.rows) {
            s.rows.emplace_back(ws.begin() + pos, ws.begin() + pos + row.size());
            pos += row.size();
        }
        if (!shapes::row_costandard(s, b)) continue;
        long long coef = 0;
        for (const auto& [wr, rsign] : r_words) {
            if (pair_multiset(ws, wr) != target) continue;
            coef += rsign * pair_sgn(b, a.i, a.j, ws, wr) * chr(b, ws, wr, true);
        }
        if (coef != 0) add_term(out, shapes::tableau_label(s), coef);
    }
    drop_zeros(out);
    return out;
}

IntVec act_divided_elem(const SuperBasis& b, const IntVec& x, const shapes::Tableau& t) {
    IntVec out;
    for (const auto& [l, c] : x)
        for (const auto& [kl, kc] : act_divided(b, parse_pair_label(l), t))
            add_term(out, kl, c * kc);
    drop_zeros(out);
    return out;
}

BasisSolver::BasisSolver(const std::vector<std::string>& labels,
                         const std::map<std::string, IntVec>& vectors, const exactalg::Field& f)
    : f_(f), elim_(f), labels_(labels) {
    const exactalg::Scalar one(f, 1);
    for (size_t k = 0; k < labels_.size(); ++k) {
        exactalg::SparseVec sv = schurfun::instantiate(vectors.at(labels_[k]), f);
        std::string tag = std::to_string(k);
        sv.set("~" + std::string(6 - std::min<size_t>(6, tag.size()), '0') + tag, one);
        if (!elim_.add(std::move(sv))) throw std::runtime_error("basis vectors not independent");
    }
}

exactalg::SparseVec BasisSolver::solve(const IntVec& v, const char* outside_msg) const {
    exactalg::SparseVec sv = schurfun::instantiate(v, f_);
    sv.set("~~1", exactalg::Scalar(f_, 1));
    exactalg::SparseVec r = elim_.reduce(std::move(sv));
    for (const auto& [l, s] : r.entries)
        if (l[0] != '~') throw std::runtime_error(outside_msg);
    const exactalg::Scalar alpha = r.entries.at("~~1");
    exactalg::SparseVec out;
    for (size_t k = 0; k < labels_.size(); ++k) {
        std::string tag = std::to_string(k);
        auto it = r.entries.find("~" + std::string(6 - std::min<size_t>(6, tag.size()), '0') + tag);
        if (it != r.entries.end()) out.set(labels_[k], -(it->second / alpha));
    }
    return out;
}

namespace {

// Action of a basis element on a vector written over the codomain labels of
// the defining map (rows of symmetric-power words), via a tensor lift.
IntVec act_codomain(const SuperBasis& b, const OrbitRep& a, const IntVec& v) {
    IntVec out;
    for (const auto& [label, c] : v) {
        std::vector<Word> rows = schurfun::split_label(label);
        Word w;
        for (const Word& r : rows) w.insert(w.end(), r.begin(), r.end());
        for (const auto& [kl, kc] : act_tensor(b, a, w, false)) {
            Word kw = supercore::parse_word_label(kl);
            std::vector<Word> krows;
            long long sign = 1;
            size_t pos = 0;
            for (const Word& r : rows) {
                Word block(kw.begin() + pos, kw.begin() + pos + r.size());
                pos += r.size();
                hopf::WordTerm pr = hopf::sym_project(b, block);
                sign *= pr.coeff;
                if (sign == 0) break;
                krows.push_back(std::move(pr.word));
            }
            if (sign == 0) continue;
            add_term(out, schurfun::join_rows(krows), c * kc * sign);
        }
    }
    drop_zeros(out);
    return out;
}

ActionMatrix act_schur_impl(const OrbitRep& a, const schurfun::SchurBasis& sb,
                            const BasisSolver& solver) {
    ActionMatrix out;
    const SuperBasis& b = sb.space;
    for (const auto& t : sb.tableaux) {
        std::string tl = shapes::tableau_label(t);
        out.labels.push_back(tl);
        out.cols[tl] = solver.solve(act_codomain(b, a, sb.vectors.cols.at(tl)),
                                    "image not invariant");
    }
    return out;
}

BasisSolver make_solver(const schurfun::SchurBasis& sb, const exactalg::Field& f) {
    std::vector<std::string> labels;
    for (const auto& t : sb.tableaux) labels.push_back(shapes::tableau_label(t));
    return BasisSolver(labels, sb.vectors.cols, f);
}

}  // namespace

ActionMatrix act_schur(const OrbitRep& a, const schurfun::SchurBasis& sb,
                       const exactalg::Field& f) {
    return act_schur_impl(a, sb, make_solver(sb, f));
}

ActionMatrix act_schur_elem(const IntVec& x, const schurfun::SchurBasis& sb,
                            const exactalg::Field& f) {
    BasisSolver solver = make_solver(sb, f);
    ActionMatrix out;
    for (const auto& t : sb.tableaux) out.labels.push_back(shapes::tableau_label(t));
    for (const auto& l : out.labels) out.cols[l] = {};
    for (const auto& [pl, c] : x) {
        ActionMatrix m = act_schur_impl(parse_pair_label(pl), sb, solver);
        const exactalg::Scalar cs(f, c);
        for (const auto& l : out.labels) out.cols[l].axpy(cs, m.cols[l]);
    }
    return out;
}

exactalg::SparseVec apply_action(const ActionMatrix& m, const exactalg::SparseVec& v,
                                 const exactalg::Field& f) {
    exactalg::SparseVec out;
    (void)f;
    for (const auto& [l, s] : v.entries) out.axpy(s, m.cols.at(l));
    return out;
}

std::vector<OrbitRep> n_basis(int m, int n, int d) {
    std::vector<OrbitRep> out;
    for (auto& r : s_basis(m, n, d)) {
        bool raising = r.i != r.j;
        for (size_t k = 0; raising && k < r.i.size(); ++k)
            if (r.i[k] > r.j[k]) raising = false;
        if (raising) out.push_back(std::move(r));
    }
    return out;
}

std::vector<exactalg::SparseVec> n_invariants(const schurfun::SchurBasis& sb,
                                              const exactalg::Field& f) {
    const int d = sb.shape.size();
    BasisSolver solver = make_solver(sb, f);
    exactalg::SparseMat m;
    // realized module weights: a raising element maps the weight space of its
    // second index word into the weight space of the first, so anything with
    // an unrealized weight on either side acts as zero
    std::set<std::vector<int>> weights;
    auto content = [&](const auto& letters_of) {
        std::vector<int> w(sb.space.letters(), 0);
        for (int x : letters_of) ++w[x - 1];
        return w;
    };
    for (const auto& t : sb.tableaux) {
        m.col_labels.push_back(shapes::tableau_label(t));
        weights.insert(content(shapes::reading_word(t)));
    }
    int idx = 0;
    for (const auto& rep : n_basis(sb.space.m, sb.space.n, d)) {
        if (!weights.count(content(rep.i)) || !weights.count(content(rep.j))) continue;
        ActionMatrix a = act_schur_impl(rep, sb, solver);
        std::map<std::string, exactalg::SparseVec> rows;  // output label -> equation row
        for (const auto& cl : m.col_labels)
            for (const auto& [ol, s] : a.cols[cl].entries) rows[ol].set(cl, s);
        for (auto& [ol, row] : rows) {
            m.row_labels.push_back(std::to_string(idx) + "#" + ol);
            m.rows.push_back(std::move(row));
        }
        ++idx;
    }
    if (m.rows.empty()) {
        // no raising operators: every basis vector is invariant
        std::vector<exactalg::SparseVec> all;
        for (const auto& cl : m.col_labels) {
            exactalg::SparseVec e;
            e.set(cl, exactalg::Scalar(f, 1));
            all.push_back(std::move(e));
        }
        return all;
    }
    return exactalg::kernel_basis(m);
}

std::string q_label(const QOrbitRep& q) {
    std::string e;
    for (int x : q.eps) e.push_back(x ? '1' : '0');
    return e + ";" + pair_label(q.i, q.j);
}

namespace {
SuperBasis q_space(int n) {
    SuperBasis qs;
    qs.parity.assign(2 * n * n, 0);
    for (int k = n * n; k < 2 * n * n; ++k) qs.parity[k] = 1;
    qs.m = n * n;
    qs.n = n * n;
    return qs;
}
}  // namespace

std::vector<QOrbitRep> q_basis(int n, int d) {
    std::vector<QOrbitRep> out;
    for (const Word& codes : hopf::divided_basis(q_space(n), d)) {
        QOrbitRep q;
        for (int c : codes) {
            const int c0 = c - 1;
            q.eps.push_back(c0 / (n * n));
            q.i.push_back((c0 % (n * n)) / n + 1);
            q.j.push_back((c0 % (n * n)) % n + 1);
        }
        out.push_back(std::move(q));
    }
    return out;
}

IntVec q_embed(const QOrbitRep& q, int n) {
    const size_t d = q.eps.size();
    const int L = 2 * n;
    SuperBasis big = SuperBasis::standard(n, n);
    Word codes(d);
    for (size_t t = 0; t < d; ++t)
        codes[t] = q.eps[t] * n * n + (q.i[t] - 1) * n + (q.j[t] - 1) + 1;
    if (!supercore::is_sorted_word(codes)) throw std::invalid_argument("not canonical");

    std::map<Word, long long> tensor;  // pair-code word -> coefficient
    for (const auto& term : hopf::delta_embed(q_space(n), codes)) {
        for (int mask = 0; mask < (1 << d); ++mask) {
            Word pc(d);
            for (size_t t = 0; t < d; ++t) {
                const int c0 = term.word[t] - 1;
                const int eps = c0 / (n * n);
                const int i = (c0 % (n * n)) / n + 1;
                const int j = (c0 % (n * n)) % n + 1;
                const int bit = (mask >> t) & 1;
                const int a = bit ? n + i : i;
                const int bb = eps == 0 ? (bit ? n + j : j) : (bit ? j : n + j);
                pc[t] = (a - 1) * L + bb;
            }
            tensor[pc] += term.coeff;
        }
    }
    IntVec out;
    for (const auto& [pc, c] : tensor) {
        if (c == 0 || !supercore::is_sorted_word(pc)) continue;
        auto [s, t] = decode_pairs(pc, L);
        if (!strict_pair(big, s, t)) throw std::runtime_error("non-strict canonical term");
        add_term(out, pair_label(s, t), c);
    }
    return out;
}

QOrbitRep q_weight_idempotent(const std::vector<int>& nu) {
    OrbitRep e = weight_idempotent(nu);
    QOrbitRep q;
    q.eps.assign(e.i.size(), 0);
    q.i = e.i;
    q.j = e.j;
    return q;
}

IntVec q_identity_elem(int n, int d) {
    IntVec out;
    for (const auto& nu : all_weights(n, d))
        for (const auto& [l, c] : q_embed(q_weight_idempotent(nu), n)) add_term(out, l, c);
    return out;
}

}  // namespace schuralg
