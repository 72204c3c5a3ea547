#include "superschur/supercore.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace supercore {

SuperBasis SuperBasis::standard(int m, int n, bool pi) {
    SuperBasis b;
    b.m = m;
    b.n = n;
    b.pi_flag = pi;
    b.parity.resize(m + n);
    for (int k = 0; k < m + n; ++k) b.parity[k] = ((k >= m ? 1 : 0) + (pi ? 1 : 0)) % 2;
    return b;
}

SuperBasis SuperBasis::concat(const SuperBasis& a, const SuperBasis& b) {
    SuperBasis c;
    c.m = a.m + b.m;
    c.n = a.n + b.n;
    c.pi_flag = a.pi_flag;
    c.parity = a.parity;
    c.parity.insert(c.parity.end(), b.parity.begin(), b.parity.end());
    return c;
}

SuperBasis SuperBasis::twisted() const {
    SuperBasis b = *this;
    b.pi_flag = !b.pi_flag;
    for (auto& p : b.parity) p ^= 1;
    return b;
}

SuperBasis SuperBasis::untwisted() const { return pi_flag ? twisted() : *this; }

int sgn(const std::vector<int>& eps, const Perm& sigma) {
    if (eps.size() != sigma.size()) throw std::invalid_argument("length mismatch");
    const int d = static_cast<int>(eps.size());
    Perm inv = inverse(sigma);
    int s = 1;
    for (int a = 1; a <= d; ++a)
        for (int b = a + 1; b <= d; ++b)
            if (inv[a - 1] > inv[b - 1] && eps[a - 1] && eps[b - 1]) s = -s;
    return s;
}

int charge(const std::vector<int>& eps, const std::vector<int>& delta) {
    if (eps.size() != delta.size()) throw std::invalid_argument("length mismatch");
    int s = 1;
    for (size_t a = 0; a < eps.size(); ++a)
        for (size_t b = a + 1; b < eps.size(); ++b)
            if (eps[a] && delta[b]) s = -s;
    return s;
}

std::vector<int> parities(const SuperBasis& b, const Word& w) {
    std::vector<int> eps(w.size());
    for (size_t k = 0; k < w.size(); ++k) eps[k] = b.par(w[k]);
    return eps;
}

std::vector<int> weight(const Word& w, int letters) {
    std::vector<int> wt(letters, 0);
    for (int x : w) ++wt[x - 1];
    return wt;
}

bool restricted(const SuperBasis& b, const Word& w) {
    std::vector<int> wt = weight(w, b.letters());
    for (int k = 1; k <= b.letters(); ++k)
        if (b.par(k) == 1 && wt[k - 1] > 1) return false;
    return true;
}

bool is_sorted_word(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

Perm identity_perm(int d) {
    Perm p(d);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

Perm compose(const Perm& s, const Perm& t) {
    Perm r(t.size());
    for (size_t k = 0; k < t.size(); ++k) r[k] = s[t[k] - 1];
    return r;
}

Perm inverse(const Perm& s) {
    Perm r(s.size());
    for (size_t k = 0; k < s.size(); ++k) r[s[k] - 1] = k + 1;
    return r;
}

std::pair<Word, int> act(const SuperBasis& b, const Word& w, const Perm& sigma) {
    if (w.size() != sigma.size()) throw std::invalid_argument("length mismatch");
    Word r(w.size());
    for (size_t k = 0; k < w.size(); ++k) r[k] = w[sigma[k] - 1];
    return {r, sgn(parities(b, w), sigma)};
}

Standardized standardize(const SuperBasis& b, const Word& w) {
    const int d = static_cast<int>(w.size());
    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int c) { return w[a] < w[c]; });
    Standardized out;
    out.word.resize(d);
    out.sigma.resize(d);
    for (int q = 0; q < d; ++q) {
        out.word[q] = w[order[q]];
        out.sigma[order[q]] = q + 1;  // sigma = inverse of the sort order
    }
    out.sign = sgn(parities(b, out.word), out.sigma);
    return out;
}

std::string word_label(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (int x : w) {
        if (x < 1 || x > 26) throw std::invalid_argument("letter out of label range");
        s.push_back(static_cast<char>('a' + x - 1));
    }
    return s;
}

Word parse_word_label(const std::string& s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) w.push_back(c - 'a' + 1);
    return w;
}

}  // namespace supercore
