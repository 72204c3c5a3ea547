#include "superschur/exactalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace exactalg {

Field Field::Fp(int p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("modulus must be an odd prime >= 3");
    for (int q = 3; q * q <= p; q += 2)
        if (p % q == 0) throw std::invalid_argument("modulus must be an odd prime >= 3");
    return Field{p};
}

std::string Field::str() const { return p == 0 ? "q" : "p=" + std::to_string(p); }

Scalar::Scalar(const Field& f, long v) : f_(f), q_(v) { normalize(); }
Scalar::Scalar(const Field& f, const mpq_class& q) : f_(f), q_(q) { normalize(); }

void Scalar::normalize() {
    if (f_.p == 0) {
        q_.canonicalize();
        return;
    }
    mpz_class num = q_.get_num(), den = q_.get_den(), p(f_.p), r;
    if (den != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::runtime_error("division by zero in prime field");
        num *= inv;
    }
    mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    q_ = mpq_class(r);
}

namespace {
void check(const Field& a, const Field& b) {
    if (!(a == b)) throw std::runtime_error("inconsistent scalar field");
}
}  // namespace

Scalar Scalar::operator-() const { return Scalar(f_, mpq_class(-q_)); }
Scalar Scalar::operator+(const Scalar& o) const {
    check(f_, o.f_);
    return Scalar(f_, mpq_class(q_ + o.q_));
}
Scalar Scalar::operator-(const Scalar& o) const {
    check(f_, o.f_);
    return Scalar(f_, mpq_class(q_ - o.q_));
}
Scalar Scalar::operator*(const Scalar& o) const {
    check(f_, o.f_);
    return Scalar(f_, mpq_class(q_ * o.q_));
}
Scalar Scalar::operator/(const Scalar& o) const {
    check(f_, o.f_);
    if (o.is_zero()) throw std::runtime_error("division by zero");
    if (f_.p == 0) return Scalar(f_, mpq_class(q_ / o.q_));
    mpz_class inv, p(f_.p);
    mpz_class d = o.q_.get_num();
    if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::runtime_error("division by zero in prime field");
    return Scalar(f_, mpq_class(q_ * inv));
}
bool Scalar::operator==(const Scalar& o) const { return f_ == o.f_ && q_ == o.q_; }

std::string Scalar::str() const { return q_.get_str(); }

void SparseVec::set(const Label& l, const Scalar& s) {
    if (s.is_zero())
        entries.erase(l);
    else
        entries[l] = s;
}

void SparseVec::axpy(const Scalar& c, const SparseVec& other) {
    if (c.is_zero()) return;
    for (const auto& [l, s] : other.entries) {
        auto it = entries.find(l);
        if (it == entries.end()) {
            entries.emplace(l, c * s);
        } else {
            it->second = it->second + c * s;
            if (it->second.is_zero()) entries.erase(it);
        }
    }
}

bool SparseVec::operator==(const SparseVec& o) const {
    return entries.size() == o.entries.size() &&
           std::equal(entries.begin(), entries.end(), o.entries.begin());
}

namespace {

// Scale a rational vector to a primitive integer vector with positive lead.
void make_primitive(SparseVec& v) {
    if (v.entries.empty()) return;
    const Field f = v.entries.begin()->second.field();
    if (f.p != 0) {  // prime field: normalize leading entry to 1
        Scalar lead = v.entries.begin()->second;
        for (auto& [l, s] : v.entries) s = s / lead;
        return;
    }
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& [l, s] : v.entries)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), s.value().get_den().get_mpz_t());
    for (const auto& [l, s] : v.entries) {
        mpz_class n = s.value().get_num() * (den_lcm / s.value().get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    mpq_class factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (v.entries.begin()->second.value() < 0) factor = -factor;
    for (auto& [l, s] : v.entries) s = Scalar(f, mpq_class(s.value() * factor));
}

}  // namespace

SparseVec Eliminator::reduce(SparseVec v) const {
    make_primitive(v);
    while (!v.entries.empty()) {
        const Label& lead = v.entries.begin()->first;
        auto it = rows_.find(lead);
        if (it == rows_.end()) break;
        const SparseVec& row = it->second;
        Scalar a = row.entries.begin()->second;
        Scalar b = v.entries.begin()->second;
        if (f_.p == 0) {
            // fraction-free: v := a*v - b*row, then strip content
            for (auto& [l, s] : v.entries) s = s * a;
            v.axpy(-b, row);
        } else {
            v.axpy(-(b / a), row);
        }
        make_primitive(v);
    }
    return v;
}

bool Eliminator::add(SparseVec v) {
    v = reduce(std::move(v));
    if (v.entries.empty()) return false;
    Label lead = v.entries.begin()->first;
    rows_.emplace(std::move(lead), std::move(v));
    return true;
}

namespace {
Field matrix_field(const SparseMat& m) {
    bool found = false;
    Field f = Field::Q();
    for (const auto& r : m.rows)
        for (const auto& [l, s] : r.entries) {
            if (!found) {
                f = s.field();
                found = true;
            } else if (!(s.field() == f)) {
                throw std::runtime_error("inconsistent scalar field");
            }
        }
    return f;
}
}  // namespace

size_t rank(const SparseMat& m) {
    Eliminator e(matrix_field(m));
    for (const auto& r : m.rows) e.add(r);
    return e.rank();
}

size_t rank_naive(const SparseMat& m) {
    const size_t nr = m.rows.size(), nc = m.col_labels.size();
    std::vector<std::vector<mpq_class>> a(nr, std::vector<mpq_class>(nc, 0));
    std::map<Label, size_t> colidx;
    for (size_t j = 0; j < nc; ++j) colidx[m.col_labels[j]] = j;
    for (size_t i = 0; i < nr; ++i)
        for (const auto& [l, s] : m.rows[i].entries) a[i][colidx.at(l)] = s.value();
    size_t rk = 0;
    for (size_t c = 0; c < nc && rk < nr; ++c) {
        size_t piv = rk;
        while (piv < nr && a[piv][c] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[piv], a[rk]);
        for (size_t i = rk + 1; i < nr; ++i) {
            if (a[i][c] == 0) continue;
            mpq_class f = a[i][c] / a[rk][c];
            for (size_t j = c; j < nc; ++j) a[i][j] -= f * a[rk][j];
        }
        ++rk;
    }
    return rk;
}

std::vector<SparseVec> kernel_basis(const SparseMat& m) {
    const Field f = matrix_field(m);
    const size_t nc = m.col_labels.size();
    // column vectors over row labels, augmented with '~' coordinate tags
    // ('~' sorts after the label alphabet, so tags never become pivots
    // while real coordinates remain).
    auto tag = [&](size_t j) {
        std::string t = std::to_string(j);
        return "~" + std::string(6 - std::min<size_t>(6, t.size()), '0') + t;
    };
    Eliminator e(f);
    std::vector<SparseVec> kernel;
    const Scalar one(f, 1);
    for (size_t j = 0; j < nc; ++j) {
        SparseVec v;
        for (size_t i = 0; i < m.rows.size(); ++i) {
            auto it = m.rows[i].entries.find(m.col_labels[j]);
            if (it != m.rows[i].entries.end()) v.set(m.row_labels[i], it->second);
        }
        v.set(tag(j), one);
        SparseVec r = e.reduce(std::move(v));
        if (!r.entries.empty() && r.entries.begin()->first[0] == '~') {
            SparseVec k;
            for (const auto& [l, s] : r.entries) {
                size_t idx = std::stoul(l.substr(1));
                k.set(m.col_labels[idx], s);
            }
            kernel.push_back(std::move(k));
        } else {
            e.add(std::move(r));
        }
    }
    return kernel;
}

bool in_span(const SparseVec& v, const std::vector<SparseVec>& basis) {
    Field f = Field::Q();
    if (!v.entries.empty())
        f = v.entries.begin()->second.field();
    else
        for (const auto& b : basis)
            if (!b.entries.empty()) {
                f = b.entries.begin()->second.field();
                break;
            }
    Eliminator e(f);
    for (const auto& b : basis) e.add(b);
    return e.reduce(v).entries.empty();
}

}  // namespace exactalg
