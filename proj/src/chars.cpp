#include "superschur/chars.hpp"

#include <algorithm>
#include <stdexcept>

#include "superschur/schurfun.hpp"

namespace chars {

using shapes::Partition;
using shapes::SkewShape;
using shapes::Tableau;
using supercore::SuperBasis;

MultiPoly poly_zero(int slots) { return MultiPoly{slots, {}}; }

MultiPoly poly_one(int slots) {
    MultiPoly p{slots, {}};
    p.terms[std::vector<int>(slots, 0)] = 1;
    return p;
}

void poly_add_term(MultiPoly& p, const std::vector<int>& expo, long long c) {
    if (static_cast<int>(expo.size()) != p.slots)
        throw std::invalid_argument("exponent vector has wrong length");
    auto it = p.terms.find(expo);
    if (it == p.terms.end()) {
        if (c != 0) p.terms.emplace(expo, c);
        return;
    }
    it->second += c;
    if (it->second == 0) p.terms.erase(it);
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) {
    if (a.slots != b.slots) throw std::invalid_argument("slot mismatch");
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms) poly_add_term(out, e, c);
    return out;
}

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) {
    if (a.slots != b.slots) throw std::invalid_argument("slot mismatch");
    MultiPoly out = poly_zero(a.slots);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e(a.slots);
            for (int k = 0; k < a.slots; ++k) e[k] = ea[k] + eb[k];
            poly_add_term(out, e, ca * cb);
        }
    return out;
}

MultiPoly poly_concat_mul(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = poly_zero(a.slots + b.slots);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e = ea;
            e.insert(e.end(), eb.begin(), eb.end());
            poly_add_term(out, e, ca * cb);
        }
    return out;
}

std::string poly_str(const MultiPoly& p, int m) {
    if (p.terms.empty()) return "0";
    std::string out;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += " + ";
        std::string mono;
        for (int k = 0; k < p.slots; ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (k < m ? "x" : "y") + std::to_string(k < m ? k + 1 : k - m + 1);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty())
            out += std::to_string(c);
        else if (c == 1)
            out += mono;
        else
            out += std::to_string(c) + "*" + mono;
    }
    return out;
}

MultiPoly character(const std::map<std::vector<int>, long long>& weight_dims, int slots) {
    MultiPoly p = poly_zero(slots);
    for (const auto& [mu, dim] : weight_dims) poly_add_term(p, mu, dim);
    return p;
}

std::vector<int> tableau_weight(const Tableau& t, int letters) {
    std::vector<int> w(letters, 0);
    for (const auto& row : t.rows)
        for (int x : row) ++w[x - 1];
    return w;
}

MultiPoly module_character(const Partition& lambda, int m, int n) {
    MultiPoly p = poly_zero(m + n);
    if (lambda.empty()) return poly_one(m + n);
    auto sb = schurfun::schur_basis({lambda, {}}, SuperBasis::standard(m, n));
    for (const Tableau& t : sb.tableaux) poly_add_term(p, tableau_weight(t, m + n), 1);
    return p;
}

namespace {
MultiPoly tableau_gf(const SkewShape& shape, const SuperBasis& b) {
    MultiPoly p = poly_zero(b.letters());
    for (const Tableau& t : shapes::enumerate(shape, b, shapes::Pred::Standard))
        poly_add_term(p, tableau_weight(t, b.letters()), 1);
    return p;
}
}  // namespace

MultiPoly schur_poly(const Partition& lambda, int m) {
    if (lambda.empty()) return poly_one(m);
    return tableau_gf({lambda, {}}, SuperBasis::standard(m, 0));
}

MultiPoly skew_schur_poly(const SkewShape& shape, int n, bool odd_variant) {
    if (shape.size() == 0) return poly_one(n);
    return tableau_gf(shape, odd_variant ? SuperBasis::standard(0, n)
                                         : SuperBasis::standard(n, 0));
}

MultiPoly hook_schur(const Partition& lambda, int m, int n) {
    MultiPoly out = poly_zero(m + n);
    for (const Partition& mu : shapes::partitions_between({}, lambda))
        out = poly_add(out, poly_concat_mul(schur_poly(mu, m),
                                            skew_schur_poly({lambda, mu}, n, true)));
    return out;
}

MultiPoly hall_littlewood(const Partition& lambda, int n) {
    MultiPoly big = hook_schur(lambda, n, n);
    MultiPoly out = poly_zero(n);
    for (const auto& [e, c] : big.terms) {
        std::vector<int> f(n);
        for (int k = 0; k < n; ++k) f[k] = e[k] + e[n + k];
        poly_add_term(out, f, c);
    }
    return out;
}

bool verify_char_typeI(const Partition& lambda, int m, int n) {
    MultiPoly ch = module_character(lambda, m, n);
    if (!(ch == hook_schur(lambda, m, n))) return false;
    // independent route: generating sum of standard fillings of the shape
    MultiPoly gf = lambda.empty() ? poly_one(m + n)
                                  : tableau_gf({lambda, {}}, SuperBasis::standard(m, n));
    return ch == gf;
}

bool verify_char_typeII(const Partition& lambda, int n) {
    MultiPoly big = module_character(lambda, n, n);
    MultiPoly collapsed = poly_zero(n);
    for (const auto& [e, c] : big.terms) {
        std::vector<int> f(n);
        for (int k = 0; k < n; ++k) f[k] = e[k] + e[n + k];
        poly_add_term(collapsed, f, c);
    }
    return collapsed == hall_littlewood(lambda, n);
}

bool truncation_check(const Partition& lambda, int m, int n, int m2, int n2) {
    if (m2 < m || n2 < n) throw std::invalid_argument("target space is not smaller");
    MultiPoly big = module_character(lambda, m2, n2);
    MultiPoly cut = poly_zero(m + n);
    for (const auto& [e, c] : big.terms) {
        bool keep = true;
        for (int k = m; k < m2 && keep; ++k) keep = e[k] == 0;
        for (int k = m2 + n; k < m2 + n2 && keep; ++k) keep = e[k] == 0;
        if (!keep) continue;
        std::vector<int> f(e.begin(), e.begin() + m);
        f.insert(f.end(), e.begin() + m2, e.begin() + m2 + n);
        poly_add_term(cut, f, c);
    }
    return cut == module_character(lambda, m, n);
}

}  // namespace chars
