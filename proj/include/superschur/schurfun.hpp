#pragma once

#include <map>
#include <string>
#include <vector>

#include "superschur/exactalg.hpp"
#include "superschur/hopf.hpp"
#include "superschur/shapes.hpp"
#include "superschur/supercore.hpp"

namespace schurfun {

using hopf::IntVec;

// Integer sparse matrix stored column-by-column; rows and columns are keyed
// by opaque labels so maps can be composed and instantiated over any field.
struct ColMap {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::map<std::string, IntVec> cols;
};

// The defining map of the Schur supermodule of the given shape:
// domain = tuples of twisted divided powers over the columns of the shape
// (labelled by row-costandard tableaux of the conjugate shape), codomain =
// tuples of symmetric powers over the rows of the shape.
struct ThetaMatrix {
    shapes::SkewShape shape;
    supercore::SuperBasis space;  // untwisted
    std::vector<shapes::Tableau> domain;
    ColMap matrix;
    int parity_bit;  // degree parity of the global twist wrapper
};

ThetaMatrix build_theta_hat(const shapes::SkewShape& shape, const supercore::SuperBasis& space);
// Weyl-side mirror: untwisted divided powers in, twisted symmetric powers out.
ThetaMatrix build_theta_check(const shapes::SkewShape& shape, const supercore::SuperBasis& space);

// Relations map into the tuple-of-twisted-divided-powers space of the shape:
// block sum over adjacent row pairs of comultiply-then-multiply maps.
ColMap build_diamond(const shapes::SkewShape& shape, const supercore::SuperBasis& space);

// Rewrites the basis element of a row-costandard tableau modulo the image of
// the relations map as an integer combination of costandard tableaux.
IntVec straighten(const shapes::Tableau& t, const shapes::SkewShape& shape,
                  const supercore::SuperBasis& space);

// Memoizing straightener for bulk use over a fixed shape and space.
struct Straightener {
    shapes::SkewShape shape;
    supercore::SuperBasis space;

    Straightener(shapes::SkewShape sh, supercore::SuperBasis sp)
        : shape(std::move(sh)), space(std::move(sp)) {}
    const IntVec& run(const shapes::Tableau& t);

   private:
    std::map<std::string, IntVec> memo_;
};

struct SchurBasis {
    shapes::SkewShape shape;
    supercore::SuperBasis space;
    std::vector<shapes::Tableau> tableaux;  // costandard tableaux of the conjugate shape
    ColMap vectors;                         // their images under the defining map
    size_t count() const { return tableaux.size(); }
};
SchurBasis schur_basis(const shapes::SkewShape& shape, const supercore::SuperBasis& space);

long schur_complex_dim(const shapes::SkewShape& shape, int v_dim, int w_dim);

struct FiltrationRow {
    shapes::Partition xi;
    size_t dim_L;
    size_t graded_dim;
};
// Filtration of the module of the shape over the direct sum of two spaces by
// intermediate partitions; self-checks each graded dimension against the
// product of the two smaller module dimensions.
std::vector<FiltrationRow> filtration_report(const shapes::SkewShape& shape,
                                             const supercore::SuperBasis& space_m,
                                             const supercore::SuperBasis& space_n);

// Checks that the defining map equals the three-stage composite that first
// handles rows i and i+1, then the remaining rows, then remerges per column.
bool factorization_check(const shapes::SkewShape& shape, const supercore::SuperBasis& space,
                         int i);

// helpers shared with tests and the verification driver
exactalg::SparseVec instantiate(const IntVec& v, const exactalg::Field& f);
size_t rank_of(const ColMap& m, const exactalg::Field& f);
size_t theta_rank(const shapes::SkewShape& shape, const supercore::SuperBasis& space,
                  const exactalg::Field& f);
IntVec apply(const ColMap& m, const IntVec& v);  // matrix times coefficient vector

std::string join_rows(const std::vector<supercore::Word>& rows);
std::vector<supercore::Word> split_label(const std::string& label);

}  // namespace schurfun
