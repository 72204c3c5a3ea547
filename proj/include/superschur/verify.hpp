#pragma once

#include <string>
#include <vector>

#include "superschur/exactalg.hpp"

namespace verify {

// Bounds for a verification run: shapes up to |lambda| <= max_deg over
// spaces k^{a|b} with a <= m, b <= n (a + b >= 1), linear algebra over field.
struct Caps {
    int max_deg = 3;
    int m = 2;
    int n = 2;
    exactalg::Field field = exactalg::Field::Q();
    unsigned long seed = 0;
};

struct CaseResult {
    std::string suite;
    std::string label;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<CaseResult> cases;
    bool ok() const;
    size_t failed() const;
};

// Suite names: hopf, kernel, standard, straighten, filtration, algebra,
// invariants, characters, all.
const std::vector<std::string>& suite_names();

// Runs one named suite (or every suite for "all"); throws
// std::invalid_argument on an unknown name.
Report run_suite(const std::string& name, const Caps& caps);

}  // namespace verify
