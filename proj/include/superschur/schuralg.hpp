#pragma once

#include <map>
#include <string>
#include <vector>

#include "superschur/exactalg.hpp"
#include "superschur/hopf.hpp"
#include "superschur/schurfun.hpp"
#include "superschur/shapes.hpp"
#include "superschur/supercore.hpp"

namespace schuralg {

using hopf::IntVec;
using supercore::SuperBasis;
using supercore::Word;

// Basis element of the Schur superalgebra: a strict pair of index words,
// canonical (lex-minimal) in its diagonal symmetric-group orbit.
struct OrbitRep {
    Word i, j;
};

std::string pair_label(const Word& i, const Word& j);
OrbitRep parse_pair_label(const std::string& s);

// No two equal index pairs in odd-total-parity positions.
bool strict_pair(const SuperBasis& b, const Word& i, const Word& j);
// Pair sequence sorted by (i_k, j_k).
bool canonical_pair(const Word& i, const Word& j, int letters);

// All strict canonical pairs for the algebra on k^{m|n} in degree d, lex order.
std::vector<OrbitRep> s_basis(int m, int n, int d);

// Sign relating two pair sequences in the same diagonal orbit, computed as
// the product of their standardization signs in the pair alphabet.
int pair_sgn(const SuperBasis& b, const Word& iw, const Word& jw, const Word& kw, const Word& lw);
// Evaluation sign of the operator arrangement (k_t, l_t) on the tensor word l
// (twisted flips every letter parity of the inputs, not of the operators).
int chr(const SuperBasis& b, const Word& kw, const Word& lw, bool twisted);

// Structure constants: product of two basis elements as an integer
// combination of canonical strict pairs.
IntVec s_mult(const SuperBasis& b, const OrbitRep& a, const OrbitRep& c);
IntVec s_mult_vec(const SuperBasis& b, const IntVec& x, const IntVec& y);

// All exponent vectors with the given number of slots summing to d.
std::vector<std::vector<int>> all_weights(int slots, int d);
OrbitRep weight_idempotent(const std::vector<int>& mu);
IntVec identity_elem(int m, int n, int d);

// Action on a tensor word (length-d word in the letters of b); twisted acts
// on the parity-flipped tensor power.
IntVec act_tensor(const SuperBasis& b, const OrbitRep& a, const Word& w, bool twisted);
IntVec act_tensor_elem(const SuperBasis& b, const IntVec& x, const Word& w, bool twisted);

// Action on the tuple-of-twisted-divided-powers module of the shape of t,
// expressed over row-costandard tableau labels.
IntVec act_divided(const SuperBasis& b, const OrbitRep& a, const shapes::Tableau& t);
IntVec act_divided_elem(const SuperBasis& b, const IntVec& x, const shapes::Tableau& t);

// Matrix of a basis element acting on a Schur supermodule in its tableau
// basis coordinates; columns keyed by tableau labels.
struct ActionMatrix {
    std::vector<std::string> labels;
    std::map<std::string, exactalg::SparseVec> cols;
};
ActionMatrix act_schur(const OrbitRep& a, const schurfun::SchurBasis& sb,
                       const exactalg::Field& f);
ActionMatrix act_schur_elem(const IntVec& x, const schurfun::SchurBasis& sb,
                            const exactalg::Field& f);
exactalg::SparseVec apply_action(const ActionMatrix& m, const exactalg::SparseVec& v,
                                 const exactalg::Field& f);

// Strict canonical pairs with i_k <= j_k in every position and i != j
// (the raising part).
std::vector<OrbitRep> n_basis(int m, int n, int d);
// Joint kernel of the raising part acting on the Schur supermodule.
std::vector<exactalg::SparseVec> n_invariants(const schurfun::SchurBasis& sb,
                                              const exactalg::Field& f);

// Expresses a vector in the coordinates of an independent labelled basis,
// reusing one elimination pass across many solves.
class BasisSolver {
public:
    BasisSolver(const std::vector<std::string>& labels,
                const std::map<std::string, IntVec>& vectors, const exactalg::Field& f);
    // coefficients over the basis labels; throws if v is outside the span
    exactalg::SparseVec solve(const IntVec& v, const char* outside_msg) const;

private:
    exactalg::Field f_;
    exactalg::Eliminator elim_;
    std::vector<std::string> labels_;
};

// Basis element of the degree-d algebra of the parity-equivariant
// endomorphisms of k^{n|n}: a parity vector plus an eps-strict index pair,
// canonical as a sorted sequence of triples.
struct QOrbitRep {
    std::vector<int> eps;
    Word i, j;
};

std::string q_label(const QOrbitRep& q);
std::vector<QOrbitRep> q_basis(int n, int d);
// Expansion in the canonical basis of the ambient algebra on k^{n|n}.
IntVec q_embed(const QOrbitRep& q, int n);
QOrbitRep q_weight_idempotent(const std::vector<int>& nu);
IntVec q_identity_elem(int n, int d);

}  // namespace schuralg
