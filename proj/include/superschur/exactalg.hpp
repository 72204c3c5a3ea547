#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace exactalg {

// Ground field: rationals (p == 0) or a prime field with odd modulus.
struct Field {
    int p = 0;

    static Field Q() { return Field{0}; }
    static Field Fp(int p);  // rejects p < 3, p even, p composite

    bool operator==(const Field&) const = default;
    std::string str() const;
};

class Scalar {
public:
    Scalar() = default;
    Scalar(const Field& f, long v);
    Scalar(const Field& f, const mpq_class& q);

    const Field& field() const { return f_; }
    const mpq_class& value() const { return q_; }
    bool is_zero() const { return q_ == 0; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    bool operator==(const Scalar& o) const;

    std::string str() const;

private:
    void normalize();
    Field f_{};
    mpq_class q_{0};
};

using Label = std::string;

struct SparseVec {
    std::map<Label, Scalar> entries;  // no zeros stored

    bool is_zero() const { return entries.empty(); }
    void set(const Label& l, const Scalar& s);
    void axpy(const Scalar& c, const SparseVec& other);  // *this += c * other
    bool operator==(const SparseVec& o) const;
};

struct SparseMat {
    std::vector<Label> row_labels;
    std::vector<Label> col_labels;
    std::vector<SparseVec> rows;  // rows[i] keyed by column label
};

// Incremental echelon-form accumulator. Rational mode keeps rows as primitive
// integer vectors and eliminates by cross-multiplication with content
// stripping (fraction-free); prime fields reduce residues directly.
class Eliminator {
public:
    explicit Eliminator(const Field& f) : f_(f) {}

    SparseVec reduce(SparseVec v) const;
    bool add(SparseVec v);  // true if the rank grew
    size_t rank() const { return rows_.size(); }
    const Field& field() const { return f_; }

private:
    Field f_;
    std::map<Label, SparseVec> rows_;  // pivot label -> row, leading label = pivot
};

size_t rank(const SparseMat& m);
size_t rank_naive(const SparseMat& m);  // dense textbook elimination (tests)
std::vector<SparseVec> kernel_basis(const SparseMat& m);
bool in_span(const SparseVec& v, const std::vector<SparseVec>& basis);

}  // namespace exactalg
