#pragma once

#include <map>
#include <string>
#include <vector>

#include "superschur/shapes.hpp"
#include "superschur/supercore.hpp"

namespace chars {

// Sparse integer polynomial in a fixed number of variables, stored by
// exponent vector. Zero coefficients are never kept.
struct MultiPoly {
    int slots = 0;
    std::map<std::vector<int>, long long> terms;

    bool operator==(const MultiPoly& o) const = default;
    bool is_zero() const { return terms.empty(); }
};

MultiPoly poly_zero(int slots);
MultiPoly poly_one(int slots);
void poly_add_term(MultiPoly& p, const std::vector<int>& expo, long long c);
MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);
// Places a into the first a.slots variables and b into the remaining ones
// of an (a.slots + b.slots)-variable polynomial, then multiplies.
MultiPoly poly_concat_mul(const MultiPoly& a, const MultiPoly& b);

// Sorted human-readable term list; the first m variables print as x_i and
// the remaining ones as y_j.
std::string poly_str(const MultiPoly& p, int m);

// Formal character from a table of weight-space dimensions.
MultiPoly character(const std::map<std::vector<int>, long long>& weight_dims, int slots);

// Content exponent vector of a tableau over an (m + n)-letter alphabet.
std::vector<int> tableau_weight(const shapes::Tableau& t, int letters);

// Character of the Schur supermodule of the given partition over k^{m|n},
// read off the contents of its tableau basis.
MultiPoly module_character(const shapes::Partition& lambda, int m, int n);

// Generating function of standard fillings with m even letters.
MultiPoly schur_poly(const shapes::Partition& lambda, int m);
// Generating function of standard fillings of a skew shape; odd_variant uses
// n odd letters (producing the conjugate-shape polynomial in y).
MultiPoly skew_schur_poly(const shapes::SkewShape& shape, int n, bool odd_variant);

// Sum over subpartitions mu of lambda of s_mu(x_1..x_m) * skew odd part in y.
MultiPoly hook_schur(const shapes::Partition& lambda, int m, int n);
// hook_schur with the y variables identified with the x variables.
MultiPoly hall_littlewood(const shapes::Partition& lambda, int n);

bool verify_char_typeI(const shapes::Partition& lambda, int m, int n);
bool verify_char_typeII(const shapes::Partition& lambda, int n);
// Killing the extra variables of the character over k^{m2|n2} recovers the
// character over k^{m|n}.
bool truncation_check(const shapes::Partition& lambda, int m, int n, int m2, int n2);

}  // namespace chars
