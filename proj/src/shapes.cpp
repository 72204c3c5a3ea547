#include "superschur/shapes.hpp"

#include <algorithm>
#include <stdexcept>

namespace shapes {

namespace {
bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

Partition trim(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}
}  // namespace

int SkewShape::size() const {
    int d = 0;
    for (int i = 1; i <= rows(); ++i) d += row_len(i);
    return d;
}

bool SkewShape::valid() const {
    if (!is_partition(lambda) || !is_partition(mu)) return false;
    if (mu.size() > lambda.size()) return false;
    for (int i = 1; i <= rows(); ++i)
        if (mu_at(i) > lambda_at(i)) return false;
    return true;
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    c.resize(p[0], 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) ++c[j];
    return c;
}

SkewShape conjugate(const SkewShape& s) { return {conjugate(s.lambda), conjugate(s.mu)}; }

bool lex_less(const Partition& a, const Partition& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        if (x != y) return x < y;
    }
    return false;
}

bool contains(const Partition& outer, const Partition& inner) {
    for (size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > (i < outer.size() ? outer[i] : 0)) return false;
    return true;
}

namespace {
void gen_partitions(int d, int maxpart, Partition& cur, std::vector<Partition>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(d, maxpart); part >= 1; --part) {
        cur.push_back(part);
        gen_partitions(d - part, part, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(d, d, cur, out);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<Partition> partitions_up_to(int d) {
    std::vector<Partition> out;
    for (int k = 0; k <= d; ++k) {
        auto pk = partitions_of(k);
        out.insert(out.end(), pk.begin(), pk.end());
    }
    return out;
}

std::vector<Partition> partitions_between(const Partition& mu, const Partition& lambda) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == lambda.size()) {
            out.push_back(trim(cur));
            return;
        }
        int lo = i < mu.size() ? mu[i] : 0;
        int hi = std::min(lambda[i], i == 0 ? lambda[0] : cur[i - 1]);
        for (int v = lo; v <= hi; ++v) {
            cur.push_back(v);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

supercore::Perm sigma_shape(const SkewShape& s) {
    Partition lc = conjugate(s.lambda), mc = conjugate(s.mu);
    auto lc_at = [&](int j) { return j <= static_cast<int>(lc.size()) ? lc[j - 1] : 0; };
    auto mc_at = [&](int j) { return j <= static_cast<int>(mc.size()) ? mc[j - 1] : 0; };
    supercore::Perm sigma;
    sigma.reserve(s.size());
    for (int i = 1; i <= s.rows(); ++i)
        for (int j = s.mu_at(i) + 1; j <= s.lambda_at(i); ++j) {
            int pos = 0;
            for (int jp = 1; jp < j; ++jp) pos += lc_at(jp) - mc_at(jp);
            sigma.push_back(pos + (i - mc_at(j)));
        }
    return sigma;
}

supercore::Word reading_word(const Tableau& t) {
    supercore::Word w;
    for (const auto& row : t.rows) w.insert(w.end(), row.begin(), row.end());
    return w;
}

std::string tableau_label(const Tableau& t) {
    std::string s;
    for (size_t i = 0; i < t.rows.size(); ++i) {
        if (i) s.push_back('|');
        s += supercore::word_label(t.rows[i]);
    }
    return s;
}

namespace {
bool rows_ok(const Tableau& t, const supercore::SuperBasis& b, int repeat_parity) {
    for (const auto& row : t.rows)
        for (size_t k = 1; k < row.size(); ++k) {
            if (row[k] < row[k - 1]) return false;
            if (row[k] == row[k - 1] && b.par(row[k]) != repeat_parity) return false;
        }
    return true;
}

bool cols_ok(const Tableau& t, const supercore::SuperBasis& b, int repeat_parity) {
    const SkewShape& s = t.shape;
    int width = s.lambda.empty() ? 0 : s.lambda[0];
    for (int j = 1; j <= width; ++j) {
        int prev = 0;
        bool have = false;
        for (int i = 1; i <= s.rows(); ++i) {
            if (j <= s.mu_at(i) || j > s.lambda_at(i)) continue;
            int e = t.entry(i, j);
            if (have) {
                if (e < prev) return false;
                if (e == prev && b.par(e) != repeat_parity) return false;
            }
            prev = e;
            have = true;
        }
    }
    return true;
}
}  // namespace

bool row_standard(const Tableau& t, const supercore::SuperBasis& b) { return rows_ok(t, b, 0); }
bool row_costandard(const Tableau& t, const supercore::SuperBasis& b) { return rows_ok(t, b, 1); }
bool col_standard(const Tableau& t, const supercore::SuperBasis& b) { return cols_ok(t, b, 1); }
bool col_costandard(const Tableau& t, const supercore::SuperBasis& b) { return cols_ok(t, b, 0); }
bool standard(const Tableau& t, const supercore::SuperBasis& b) {
    return row_standard(t, b) && col_standard(t, b);
}
bool costandard(const Tableau& t, const supercore::SuperBasis& b) {
    return row_costandard(t, b) && col_costandard(t, b);
}

Tableau conjugate(const Tableau& t) {
    Tableau c;
    c.shape = conjugate(t.shape);
    c.rows.resize(c.shape.rows());
    for (int i = 1; i <= c.shape.rows(); ++i)
        for (int j = c.shape.mu_at(i) + 1; j <= c.shape.lambda_at(i); ++j)
            c.rows[i - 1].push_back(t.entry(j, i));
    return c;
}

namespace {
// counts[p][q] = number of entries <= q within the first p rows
std::vector<std::vector<int>> prefix_counts(const Tableau& t, int letters) {
    int q_rows = t.shape.rows();
    std::vector<std::vector<int>> c(q_rows + 1, std::vector<int>(letters + 1, 0));
    for (int p = 1; p <= q_rows; ++p) {
        c[p] = c[p - 1];
        for (int e : t.rows[p - 1])
            for (int q = e; q <= letters; ++q) ++c[p][q];
    }
    return c;
}
}  // namespace

QuasiCmp quasi_compare(const Tableau& s, const Tableau& t, int letters) {
    auto cs = prefix_counts(s, letters), ct = prefix_counts(t, letters);
    bool ge = true, le = true;
    for (size_t p = 0; p < cs.size(); ++p)
        for (size_t q = 0; q < cs[p].size(); ++q) {
            if (cs[p][q] < ct[p][q]) ge = false;
            if (cs[p][q] > ct[p][q]) le = false;
        }
    if (ge && !le) return QuasiCmp::Less;
    if (le && !ge) return QuasiCmp::Greater;
    return QuasiCmp::EqualOrIncomparable;
}

bool quasi_leq(const Tableau& s, const Tableau& t, int letters) {
    auto cs = prefix_counts(s, letters), ct = prefix_counts(t, letters);
    for (size_t p = 0; p < cs.size(); ++p)
        for (size_t q = 0; q < cs[p].size(); ++q)
            if (cs[p][q] < ct[p][q]) return false;
    return true;
}

std::vector<Tableau> enumerate(const SkewShape& shape, const supercore::SuperBasis& b, Pred p) {
    std::vector<std::pair<int, int>> cells;  // (row, abs col), row-major
    for (int i = 1; i <= shape.rows(); ++i)
        for (int j = shape.mu_at(i) + 1; j <= shape.lambda_at(i); ++j) cells.emplace_back(i, j);

    const bool row_rule = p != Pred::All;
    const bool col_rule = p == Pred::Standard || p == Pred::Costandard;
    const int row_rep = (p == Pred::RowStandard || p == Pred::Standard) ? 0 : 1;
    const int col_rep = p == Pred::Standard ? 1 : 0;

    Tableau t;
    t.shape = shape;
    t.rows.resize(shape.rows());
    for (int i = 1; i <= shape.rows(); ++i) t.rows[i - 1].assign(shape.row_len(i), 0);

    std::vector<Tableau> out;
    std::function<void(size_t)> rec = [&](size_t c) {
        if (c == cells.size()) {
            out.push_back(t);
            return;
        }
        auto [i, j] = cells[c];
        for (int e = 1; e <= b.letters(); ++e) {
            if (row_rule && j > shape.mu_at(i) + 1) {
                int left = t.entry(i, j - 1);
                if (e < left) continue;
                if (e == left && b.par(e) != row_rep) continue;
            }
            if (col_rule && i > 1 && j > shape.mu_at(i - 1) && j <= shape.lambda_at(i - 1)) {
                int above = t.entry(i - 1, j);
                if (e < above) continue;
                if (e == above && b.par(e) != col_rep) continue;
            }
            t.rows[i - 1][j - 1 - shape.mu_at(i)] = e;
            rec(c + 1);
        }
        t.rows[i - 1][j - 1 - shape.mu_at(i)] = 0;
    };
    rec(0);
    return out;
}

Partition m_part(const Tableau& t, int r) {
    Partition kappa;
    for (int i = 1; i <= t.shape.rows(); ++i) {
        int cnt = 0;
        for (int e : t.rows[i - 1])
            if (e <= r) ++cnt;
        kappa.push_back(t.shape.mu_at(i) + cnt);
    }
    return kappa;
}

bool kappa_monotone_check(const Tableau& s, const Tableau& t, int r, int letters) {
    if (!quasi_leq(s, t, letters)) throw std::invalid_argument("expected s before t in quasi-order");
    Partition ks = m_part(s, r), kt = m_part(t, r);
    return !lex_less(ks, kt);  // kappa(s) >= kappa(t) lexicographically
}

Tableau canonical_tableau(const Partition& lambda, int m) {
    Tableau t;
    t.shape = {lambda, {}};
    for (int part : lambda) {
        std::vector<int> row;
        for (int j = 1; j <= part; ++j)
            row.push_back(j <= m ? j : m + static_cast<int>(t.rows.size()) + 1);
        t.rows.push_back(std::move(row));
    }
    return t;
}

namespace {
Partition parse_parts(const std::string& s) {
    Partition p;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!tok.empty()) p.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return p;
}
}  // namespace

SkewShape parse_shape(const std::string& s) {
    SkewShape shape;
    size_t slash = s.find('/');
    if (slash == std::string::npos) {
        shape.lambda = parse_parts(s);
    } else {
        shape.lambda = parse_parts(s.substr(0, slash));
        shape.mu = parse_parts(s.substr(slash + 1));
    }
    if (!shape.valid()) throw std::invalid_argument("invalid shape: " + s);
    return shape;
}

std::string shape_str(const SkewShape& s) {
    std::string out;
    for (size_t i = 0; i < s.lambda.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(s.lambda[i]);
    }
    if (!s.mu.empty()) {
        out.push_back('/');
        for (size_t i = 0; i < s.mu.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(s.mu[i]);
        }
    }
    return out;
}

}  // namespace shapes
