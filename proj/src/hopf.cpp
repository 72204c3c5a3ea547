#include "superschur/hopf.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopf {

using supercore::SuperBasis;
using supercore::Word;

void add_term(IntVec& v, const std::string& label, long long c) {
    if (c == 0) return;
    auto [it, inserted] = v.emplace(label, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) v.erase(it);
    }
}

long long binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    long long r = 1;
    for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
}

WordTerm div_mult(const SuperBasis& b, const Word& x, const Word& y) {
    Word w = x;
    w.insert(w.end(), y.begin(), y.end());
    auto st = supercore::standardize(b, w);
    if (!supercore::restricted(b, st.word)) return {{}, 0};
    auto wx = supercore::weight(x, b.letters());
    auto wy = supercore::weight(y, b.letters());
    long long c = st.sign;
    for (int k = 1; k <= b.letters(); ++k)
        if (b.par(k) == 0) c *= binomial(wx[k - 1] + wy[k - 1], wx[k - 1]);
    return {st.word, c};
}

namespace {
void submultisets(const std::vector<std::pair<int, int>>& runs, size_t i, int need, Word& left,
                  std::vector<PairTerm>& out, const SuperBasis& b, const Word& x) {
    if (need == 0 || i == runs.size()) {
        if (need != 0) return;
        // complement
        auto lw = supercore::weight(left, b.letters());
        Word right;
        for (auto [letter, mult] : runs)
            for (int c = lw[letter - 1]; c < mult; ++c) right.push_back(letter);
        Word merged = left;
        merged.insert(merged.end(), right.begin(), right.end());
        int sign = supercore::standardize(b, merged).sign;
        out.push_back({left, right, sign});
        return;
    }
    auto [letter, mult] = runs[i];
    for (int take = std::min(need, mult); take >= 0; --take) {
        for (int c = 0; c < take; ++c) left.push_back(letter);
        submultisets(runs, i + 1, need - take, left, out, b, x);
        for (int c = 0; c < take; ++c) left.pop_back();
    }
}
}  // namespace

std::vector<PairTerm> div_comult(const SuperBasis& b, const Word& x, int r, int s) {
    if (r + s != static_cast<int>(x.size())) throw std::invalid_argument("degree mismatch");
    std::vector<std::pair<int, int>> runs;  // (letter, multiplicity)
    for (int e : x) {
        if (!runs.empty() && runs.back().first == e)
            ++runs.back().second;
        else
            runs.emplace_back(e, 1);
    }
    std::vector<PairTerm> out;
    Word left;
    submultisets(runs, 0, r, left, out, b, x);
    std::sort(out.begin(), out.end(),
              [](const PairTerm& a, const PairTerm& c) { return a.left < c.left; });
    return out;
}

std::vector<WordTerm> delta_embed(const SuperBasis& b, const Word& x) {
    Word w = x;
    std::sort(w.begin(), w.end());
    std::vector<WordTerm> out;
    do {
        out.push_back({w, supercore::standardize(b, w).sign});
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

WordTerm sym_project(const SuperBasis& b, const Word& w) {
    auto st = supercore::standardize(b, w);
    for (size_t k = 1; k < st.word.size(); ++k)
        if (st.word[k] == st.word[k - 1] && b.par(st.word[k]) == 1) return {{}, 0};
    return {st.word, st.sign};
}

namespace {
void gen_sorted(const SuperBasis& b, int d, int min_letter, Word& cur,
                std::vector<Word>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (int e = min_letter; e <= b.letters(); ++e) {
        if (b.par(e) == 1 && !cur.empty() && cur.back() == e) continue;
        cur.push_back(e);
        gen_sorted(b, d - 1, e, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Word> divided_basis(const SuperBasis& b, int d) {
    std::vector<Word> out;
    Word cur;
    gen_sorted(b, d, 1, cur, out);
    return out;
}

std::vector<Word> sym_basis(const SuperBasis& b, int d) { return divided_basis(b, d); }

std::vector<Word> rearrangements(const Word& sorted_word) {
    Word w = sorted_word;
    std::sort(w.begin(), w.end());
    std::vector<Word> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace hopf
