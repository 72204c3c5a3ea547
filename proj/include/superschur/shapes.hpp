#pragma once

#include <functional>
#include <string>
#include <vector>

#include "superschur/supercore.hpp"

namespace shapes {

using Partition = std::vector<int>;  // weakly decreasing, positive parts

struct SkewShape {
    Partition lambda;
    Partition mu;  // may be shorter than lambda; missing parts are 0

    int rows() const { return static_cast<int>(lambda.size()); }
    int mu_at(int i) const {  // 1-based row index
        return i <= static_cast<int>(mu.size()) ? mu[i - 1] : 0;
    }
    int lambda_at(int i) const { return i <= rows() ? lambda[i - 1] : 0; }
    int row_len(int i) const { return lambda_at(i) - mu_at(i); }
    int size() const;
    bool valid() const;  // partitions valid and mu inside lambda
};

Partition conjugate(const Partition& p);
SkewShape conjugate(const SkewShape& s);

bool lex_less(const Partition& a, const Partition& b);      // strict lex <
bool contains(const Partition& outer, const Partition& inner);
std::vector<Partition> partitions_of(int d);                 // |p| = d, lex order
std::vector<Partition> partitions_up_to(int d);              // |p| <= d, incl. empty
std::vector<Partition> partitions_between(const Partition& mu, const Partition& lambda);

supercore::Perm sigma_shape(const SkewShape& s);

struct Tableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows;  // rows[i] has row_len(i+1) entries

    int entry(int i, int j) const {  // 1-based row, absolute column
        return rows[i - 1][j - 1 - shape.mu_at(i)];
    }
};

supercore::Word reading_word(const Tableau& t);
std::string tableau_label(const Tableau& t);

// (Co)standardness w.r.t. the parities of the given basis.
bool row_standard(const Tableau& t, const supercore::SuperBasis& b);
bool row_costandard(const Tableau& t, const supercore::SuperBasis& b);
bool col_standard(const Tableau& t, const supercore::SuperBasis& b);
bool col_costandard(const Tableau& t, const supercore::SuperBasis& b);
bool standard(const Tableau& t, const supercore::SuperBasis& b);
bool costandard(const Tableau& t, const supercore::SuperBasis& b);

Tableau conjugate(const Tableau& t);

enum class QuasiCmp { Less, EqualOrIncomparable, Greater };
QuasiCmp quasi_compare(const Tableau& s, const Tableau& t, int letters);
bool quasi_leq(const Tableau& s, const Tableau& t, int letters);  // s "before or eq" t

enum class Pred { All, RowStandard, RowCostandard, Standard, Costandard };
std::vector<Tableau> enumerate(const SkewShape& shape, const supercore::SuperBasis& b, Pred p);

Partition m_part(const Tableau& t, int r);  // kappa, length = rows of lambda
bool kappa_monotone_check(const Tableau& s, const Tableau& t, int r, int letters);

Tableau canonical_tableau(const Partition& lambda, int m);

SkewShape parse_shape(const std::string& s);
std::string shape_str(const SkewShape& s);

}  // namespace shapes
