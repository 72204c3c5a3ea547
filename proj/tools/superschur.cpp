#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "superschur/chars.hpp"
#include "superschur/schurfun.hpp"
#include "superschur/shapes.hpp"
#include "superschur/supercore.hpp"
#include "superschur/verify.hpp"

using json = nlohmann::ordered_json;
using exactalg::Field;
using shapes::SkewShape;
using supercore::SuperBasis;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string shape = "1/";
    std::string space = "1,1";
    std::string field = "q";
    std::string type = "I";
    int max_deg = 5;
    unsigned long seed = 0;
    std::string out;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--shape", o.shape, "skew shape, e.g. 2,1/ or 3,1/1");
    cmd->add_option("--space", o.space, "even,odd dimensions, e.g. 2,1");
    cmd->add_option("--field", o.field, "q (rationals) or p=K (odd prime K)");
    cmd->add_option("--type", o.type, "character type: I or II");
    cmd->add_option("--max-deg", o.max_deg, "degree cap for verification suites");
    cmd->add_option("--seed", o.seed, "seed recorded in reports");
    cmd->add_option("--out", o.out, "also write the JSON result to this file");
}

Field parse_field(const std::string& s) {
    if (s == "q") return Field::Q();
    if (s.rfind("p=", 0) == 0) return Field::Fp(std::stoi(s.substr(2)));
    throw std::invalid_argument("field must be q or p=K");
}

std::pair<int, int> parse_space(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("space must be m,n");
    int m = std::stoi(s.substr(0, comma));
    int n = std::stoi(s.substr(comma + 1));
    if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("space must be nonnegative with m+n >= 1");
    return {m, n};
}

json poly_json(const chars::MultiPoly& p, int m) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms) terms.push_back({{"exponents", e}, {"coeff", c}});
    return {{"pretty", chars::poly_str(p, m)}, {"terms", terms}};
}

void deliver(const json& j, const std::string& out) {
    std::string text = j.dump(2);
    std::cout << text << "\n";
    if (!out.empty()) {
        std::ofstream f(out);
        f << text << "\n";
    }
}

int cmd_dim(const Options& o) {
    SkewShape sh = shapes::parse_shape(o.shape);
    if (!sh.valid()) throw CLI::ValidationError("--shape", "invalid skew shape");
    auto [m, n] = parse_space(o.space);
    Field f = parse_field(o.field);
    SuperBasis b = SuperBasis::standard(m, n);

    size_t rank = schurfun::rank_of(schurfun::build_theta_hat(shapes::conjugate(sh), b).matrix, f);
    size_t cost = shapes::enumerate(sh, b, shapes::Pred::Costandard).size();
    size_t gamma = schurfun::build_theta_hat(shapes::conjugate(sh), b).matrix.col_labels.size();
    size_t dia = schurfun::rank_of(schurfun::build_diamond(sh, b), f);
    size_t dim = gamma - dia;

    bool agree = rank == cost && rank == dim;
    deliver({{"shape", shapes::shape_str(sh)},
             {"space", {m, n}},
             {"field", f.str()},
             {"dim", dim},
             {"rank", rank},
             {"costandard_count", cost},
             {"agree", agree}},
            o.out);
    return agree ? kExitOk : kExitMathFail;
}

int cmd_basis(const Options& o) {
    SkewShape sh = shapes::parse_shape(o.shape);
    if (!sh.valid()) throw CLI::ValidationError("--shape", "invalid skew shape");
    auto [m, n] = parse_space(o.space);
    auto sb = schurfun::schur_basis(sh, SuperBasis::standard(m, n));
    json labels = json::array();
    for (const auto& t : sb.tableaux) labels.push_back(shapes::tableau_label(t));
    deliver({{"shape", shapes::shape_str(sh)},
             {"space", {m, n}},
             {"count", sb.count()},
             {"labels", labels}},
            o.out);
    return kExitOk;
}

int cmd_char(const Options& o) {
    SkewShape sh = shapes::parse_shape(o.shape);
    if (!sh.valid() || !sh.mu.empty())
        throw CLI::ValidationError("--shape", "characters need a straight shape");
    auto [m, n] = parse_space(o.space);

    chars::MultiPoly ch, sym;
    int xvars = m;
    if (o.type == "I") {
        ch = chars::module_character(sh.lambda, m, n);
        sym = chars::hook_schur(sh.lambda, m, n);
    } else if (o.type == "II") {
        if (m != n) throw CLI::ValidationError("--space", "type II needs a square space n,n");
        chars::MultiPoly big = chars::module_character(sh.lambda, n, n);
        ch = chars::poly_zero(n);
        for (const auto& [e, c] : big.terms) {
            std::vector<int> f(n);
            for (int k = 0; k < n; ++k) f[k] = e[k] + e[n + k];
            chars::poly_add_term(ch, f, c);
        }
        sym = chars::hall_littlewood(sh.lambda, n);
        xvars = n;
    } else {
        throw CLI::ValidationError("--type", "type must be I or II");
    }

    bool equal = ch == sym;
    deliver({{"shape", shapes::shape_str(sh)},
             {"space", {m, n}},
             {"type", o.type},
             {"character", poly_json(ch, xvars)},
             {"symmetric_side", poly_json(sym, xvars)},
             {"equal", equal}},
            o.out);
    return equal ? kExitOk : kExitMathFail;
}

int cmd_verify(const Options& o, const std::string& suite) {
    verify::Caps caps;
    caps.max_deg = o.max_deg;
    std::tie(caps.m, caps.n) = parse_space(o.space);
    caps.field = parse_field(o.field);
    caps.seed = o.seed;

    verify::Report rep = verify::run_suite(suite, caps);
    json cases = json::array();
    for (const auto& c : rep.cases)
        cases.push_back(
            {{"suite", c.suite}, {"label", c.label}, {"pass", c.pass}, {"detail", c.detail}});
    deliver({{"suite", suite},
             {"config",
              {{"max_deg", caps.max_deg},
               {"space", {caps.m, caps.n}},
               {"field", caps.field.str()},
               {"seed", caps.seed}}},
             {"cases", cases},
             {"failed", rep.failed()},
             {"ok", rep.ok()}},
            o.out);
    return rep.ok() ? kExitOk : kExitMathFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Schur superfunctor calculator"};
    app.require_subcommand(1);
    Options o;

    CLI::App* dim = app.add_subcommand("dim", "dimension self-consistency of one module");
    CLI::App* chr = app.add_subcommand("char", "formal character and its closed form");
    CLI::App* basis = app.add_subcommand("basis", "tableau basis labels of one module");
    CLI::App* ver = app.add_subcommand("verify", "run a named verification suite");
    std::string suite = "all";
    ver->add_option("suite", suite, "one of: hopf kernel standard straighten filtration algebra invariants characters all");
    for (CLI::App* c : {dim, chr, basis, ver}) add_common(c, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    // the verification driver defaults to the full desk-scale caps
    if (ver->parsed() && ver->count("--space") == 0) o.space = "3,3";

    try {
        if (dim->parsed()) return cmd_dim(o);
        if (chr->parsed()) return cmd_char(o);
        if (basis->parsed()) return cmd_basis(o);
        return cmd_verify(o, suite);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitMathFail;
    }
}
