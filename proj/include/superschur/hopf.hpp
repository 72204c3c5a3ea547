#pragma once

#include <map>
#include <string>
#include <vector>

#include "superschur/supercore.hpp"

namespace hopf {

// Integer-coefficient vector keyed by opaque labels; the exact-linear-algebra
// layer instantiates these over a chosen field.
using IntVec = std::map<std::string, long long>;

void add_term(IntVec& v, const std::string& label, long long c);

long long binomial(int a, int b);

// Divided-power basis elements are sorted restricted words in the given basis
// (restrictedness w.r.t. the basis' effective parities). Symmetric-algebra
// basis elements are sorted words with odd letters multiplicity <= 1.

struct WordTerm {
    supercore::Word word;
    long long coeff;
};

// a * b in the divided power algebra: zero, or +-C * (sorted merge).
WordTerm div_mult(const supercore::SuperBasis& b, const supercore::Word& x,
                  const supercore::Word& y);

// component Gamma^{r+s} -> Gamma^r (x) Gamma^s on a basis element
struct PairTerm {
    supercore::Word left, right;
    long long coeff;
};
std::vector<PairTerm> div_comult(const supercore::SuperBasis& b, const supercore::Word& x, int r,
                                 int s);

// embedding Gamma^d -> tensor power: signed sum over distinct rearrangements
std::vector<WordTerm> delta_embed(const supercore::SuperBasis& b, const supercore::Word& x);

// projection tensor power -> S^d: signed sort, zero on repeated odd letters
WordTerm sym_project(const supercore::SuperBasis& b, const supercore::Word& w);

// all sorted restricted words of length d (divided power basis), lex order
std::vector<supercore::Word> divided_basis(const supercore::SuperBasis& b, int d);
// all sorted words of length d with odd letters multiplicity <= 1 (S^d basis)
std::vector<supercore::Word> sym_basis(const supercore::SuperBasis& b, int d);

// distinct rearrangements of a sorted word, lex order
std::vector<supercore::Word> rearrangements(const supercore::Word& sorted_word);

}  // namespace hopf
