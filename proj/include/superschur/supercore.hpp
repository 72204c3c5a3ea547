#pragma once

#include <string>
#include <vector>

namespace supercore {

// Ordered homogeneous basis Z_1 < ... < Z_{m+n} of a superspace k^{m|n}.
// pi_flag flips every parity used in sign computations (the parity-change
// twist is bookkeeping only and never moves data).
struct SuperBasis {
    int m = 0;
    int n = 0;
    bool pi_flag = false;
    std::vector<int> parity;  // effective parity of letter k+1 (flips applied)

    static SuperBasis standard(int m, int n, bool pi = false);
    static SuperBasis concat(const SuperBasis& a, const SuperBasis& b);
    SuperBasis twisted() const;    // same letters, pi_flag toggled
    SuperBasis untwisted() const;  // pi_flag cleared

    int letters() const { return static_cast<int>(parity.size()); }
    int par(int letter) const { return parity[letter - 1]; }  // 1-based
};

using Word = std::vector<int>;  // letters, 1-based
using Perm = std::vector<int>;  // images, 1-based: sigma[k-1] = sigma(k)

int sgn(const std::vector<int>& eps, const Perm& sigma);
int charge(const std::vector<int>& eps, const std::vector<int>& delta);

std::vector<int> parities(const SuperBasis& b, const Word& w);
std::vector<int> weight(const Word& w, int letters);
bool restricted(const SuperBasis& b, const Word& w);  // odd letters multiplicity <= 1
bool is_sorted_word(const Word& w);

Perm identity_perm(int d);
Perm compose(const Perm& s, const Perm& t);  // (s*t)(k) = s(t(k))
Perm inverse(const Perm& s);

// Right action (w.sigma)(k) = w(sigma(k)) with its sign.
std::pair<Word, int> act(const SuperBasis& b, const Word& w, const Perm& sigma);

struct Standardized {
    Word word;   // nondecreasing rearrangement
    Perm sigma;  // w = word . sigma (stable, hence unique)
    int sign;
};
Standardized standardize(const SuperBasis& b, const Word& w);

std::string word_label(const Word& w);
Word parse_word_label(const std::string& s);

}  // namespace supercore
