// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <tuple>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "koszul/cli.hpp"
#include "koszul/error.hpp"
#include "koszul/verify.hpp"

using namespace koszul;
using nlohmann::json;

namespace {

constexpr std::size_t kIdentityTrials = 200;
constexpr std::size_t kHomotopyTrials = 50;
constexpr std::size_t kIterateTrials = 100;
constexpr std::uint64_t kSeed = 20240501;

struct Check {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) note << "first failure: " << what;
            ok = false;
        }
    }
};

json run(const std::string& cmd, const std::string& algebra, const std::string& field = "Q",
         std::optional<std::size_t> p_max = std::nullopt, std::optional<std::size_t> w_max = std::nullopt,
         const std::string& side = "homology", const std::string& coeff = "A", const std::string& suite = "") {
    RunConfig cfg;
    cfg.algebra = algebra;
    cfg.field = field;
    cfg.p_max = p_max;
    cfg.w_max = w_max;
    cfg.side = side;
    cfg.coeff = coeff;
    cfg.seed = kSeed;
    cfg.trials = kIdentityTrials;
    CommandResult r = run_command(cmd, suite, cfg);
    json rep = r.report;
    rep["exit_code"] = r.exit_code;
    return rep;
}

std::string trunc(std::size_t n) { return "truncated:" + std::to_string(n); }

/// Weights of the nonzero cells of degree p, with their dims.
std::vector<std::pair<long, std::size_t>> cells_of(const json& payload, std::size_t p) {
    std::vector<std::pair<long, std::size_t>> out;
    for (const auto& e : payload["entries"])
        if (e["degree"].get<std::size_t>() == p && e["dim"].get<std::size_t>() > 0)
            out.emplace_back(e["weight"].get<long>(), e["dim"].get<std::size_t>());
    return out;
}

bool one_dim_cells(const std::vector<std::pair<long, std::size_t>>& cells, long lo, long hi) {
    if (cells.size() != static_cast<std::size_t>(hi - lo + 1)) return false;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].first != lo + static_cast<long>(i) || cells[i].second != 1) return false;
    return true;
}

bool representatives_nonzero(const json& payload) {
    for (const auto& c : payload["classes"])
        for (const auto& row : c["representatives"]) {
            bool nz = false;
            for (const auto& s : row) nz = nz || s.get<std::string>() != "0";
            if (!nz) return false;
        }
    return true;
}

// Criterion 1: HK_0 = A, and for p >= 1 one class x^l ⊗ x^{ν(p)} per l in the printed range.
void homology_table(Check& c, const std::string& field) {
    for (std::size_t N = 2; N <= 5; ++N) {
        json r = run("dims", trunc(N), field, 5, 12, "homology");
        const json& pl = r["payload"];
        const std::string tag = trunc(N) + " over " + field;
        c.require(r["exit_code"] == 0 && pl["complete"] == true, tag + " dims ran");
        if (!c.ok) return;
        c.require(one_dim_cells(cells_of(pl, 0), 0, static_cast<long>(N) - 1), tag + " HK_0 = A");
        for (std::size_t p = 1; p <= 5; ++p) {
            const long nu_p = static_cast<long>(nu(p, N));
            const long lo = p % 2 ? 0 : 1, hi = p % 2 ? static_cast<long>(N) - 2 : static_cast<long>(N) - 1;
            c.require(pl["totals"][p] == N - 1, tag + " total at p=" + std::to_string(p));
            c.require(one_dim_cells(cells_of(pl, p), nu_p + lo, nu_p + hi), tag + " weights at p=" + std::to_string(p));
        }
        c.require(representatives_nonzero(pl), tag + " representatives");
    }
}

// Criterion 2: HK^0 = A, and for p >= 1 one class x^l ⊗ x^{*ν(p)} per l in the printed range.
void cohomology_table(Check& c, const std::string& field) {
    for (std::size_t N = 2; N <= 5; ++N) {
        json r = run("dims", trunc(N), field, 5, 12, "cohomology");
        const json& pl = r["payload"];
        const std::string tag = trunc(N) + " over " + field;
        c.require(r["exit_code"] == 0 && pl["complete"] == true, tag + " dims ran");
        if (!c.ok) return;
        c.require(one_dim_cells(cells_of(pl, 0), 0, static_cast<long>(N) - 1), tag + " HK^0 = A");
        for (std::size_t p = 1; p <= 5; ++p) {
            const long nu_p = static_cast<long>(nu(p, N));
            const long lo = p % 2 ? 1 : 0, hi = p % 2 ? static_cast<long>(N) - 1 : static_cast<long>(N) - 2;
            c.require(pl["totals"][p] == N - 1, tag + " total at p=" + std::to_string(p));
            c.require(one_dim_cells(cells_of(pl, p), lo - nu_p, hi - nu_p), tag + " weights at p=" + std::to_string(p));
        }
        c.require(representatives_nonzero(pl), tag + " representatives");
    }
}

// Criterion 3: higher homology k in degree 0, higher cohomology k·x^{N-1} in degree 0, zero for 1 <= p <= 4.
void higher_tables(Check& c, const std::string& field) {
    for (std::size_t N = 2; N <= 5; ++N) {
        const std::string tag = trunc(N) + " over " + field;
        json h = run("higher", trunc(N), field, 5, 12, "homology")["payload"];
        json co = run("higher", trunc(N), field, 5, 12, "cohomology")["payload"];
        c.require(h.contains("totals") && co.contains("totals"), tag + " higher ran");
        if (!c.ok) return;
        c.require(h["squares_zero"] == true && co["squares_zero"] == true, tag + " squares");
        c.require(one_dim_cells(cells_of(h, 0), 0, 0), tag + " higher HK_0 = k");
        c.require(one_dim_cells(cells_of(co, 0), static_cast<long>(N) - 1, static_cast<long>(N) - 1),
                  tag + " higher HK^0 = k x^{N-1}");
        for (std::size_t p = 1; p <= 4; ++p) {
            c.require(h["totals"][p] == 0, tag + " higher HK_" + std::to_string(p));
            c.require(co["totals"][p] == 0, tag + " higher HK^" + std::to_string(p));
        }
    }
}

// Criterion 4: cochain-level closed forms for all basis operands with p + q <= 5.
void closed_forms(Check& c, const std::string& field) {
    for (std::size_t N = 2; N <= 5; ++N) {
        GradedAlgebra a(catalog(trunc(N), Field::parse(field)), 12);
        KoszulComplex k(a);
        ClosedFormReport r = truncated_closed_form_check(k, 5);
        c.require(r.cup_checks > 0 && r.cap_checks > 0, trunc(N) + " closed forms ran");
        c.require(r.cup_failures == 0, trunc(N) + " cup closed form over " + field);
        c.require(r.cap_failures == 0, trunc(N) + " cap closed form over " + field);
    }
}

void cubic(Check& c) {
    const Field F = Field::rationals();
    for (auto [a, b, cc] : std::vector<std::tuple<int, int, int>>{{1, 2, 5}, {2, 1, 3}}) {
        const std::string name =
            "as_cubic:" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(cc);
        GradedAlgebra A(catalog(name, F), 9);
        KoszulComplex k(A);
        CubicWitness w = cubic_witness(k, F.from_int(a), F.from_int(b));
        c.require(w.matches, name + " value equals (a-b)(xy-yx)(x-y)");
        c.require(w.nonzero, name + " value nonzero");
        c.require(w.outside_relations, name + " (xy-yx)(x-y) outside span(r1, r2)");
    }
}

void suite_check(Check& c, const std::string& algebra, const std::string& suite,
                 const std::vector<std::string>& must_have, std::size_t min_trials = 1, bool need_nontrivial = false) {
    json r = run("verify", algebra, "Q", 5, algebra.rfind("as_cubic", 0) == 0 ? std::optional<std::size_t>(9)
                                                                                         : std::optional<std::size_t>(12),
                 "homology", "A", suite);
    const json& pl = r["payload"];
    c.require(r["exit_code"] == 0 && pl["passed"] == true, algebra + " " + suite + " passed");
    for (const auto& name : must_have) {
        bool found = false;
        for (const auto& p : pl["properties"]) {
            if (p["name"] != name) continue;
            found = true;
            const std::size_t trials = p["trials"].get<std::size_t>();
            c.require(p["passed"] == true && trials >= p["required"].get<std::size_t>() && trials >= min_trials,
                      algebra + " " + name);
            if (need_nontrivial) c.require(p["nontrivial"].get<std::size_t>() > 0, algebra + " " + name + " nontrivial");
        }
        c.require(found, algebra + " has " + name);
    }
}

void identity_suites(Check& c) {
    std::vector<std::string> leib, fund = {"cochain_fundamental_even", "cochain_fundamental_odd",
                                           "chain_fundamental_even",   "chain_fundamental_odd",
                                           "derivation_bracket_cochain_even", "derivation_bracket_cochain_odd",
                                           "derivation_bracket_chain_even",   "derivation_bracket_chain_odd"};
    for (const char* a : {"even", "odd"})
        for (const char* b : {"even", "odd"})
            for (const char* op : {"cup_leibniz_", "cap_left_leibniz_", "cap_right_leibniz_"})
                leib.push_back(std::string(op) + a + "_" + b);
    for (const char* d : {"chain_differential_square_A", "cochain_differential_square_A",
                          "chain_differential_square_k", "cochain_differential_square_k",
                          "bimodule_differential_square"})
        leib.push_back(d);
    for (const char* alg : {"truncated:3", "truncated:4", "as_cubic:1,2,5"}) {
        suite_check(c, alg, "leibniz", leib);
        suite_check(c, alg, "fundamental", fund, kIdentityTrials);
    }
}

void associativity(Check& c) {
    const std::vector<std::string> classes = {"class_cup_associator", "class_cap_associator_left_left",
                                              "class_cap_associator_right_right", "class_cap_associator_middle",
                                              "class_unit"};
    const std::vector<std::string> homotopies = {"cup_associator_homotopy", "cap_associator_homotopy"};
    for (const char* alg : {"truncated:3", "truncated:4"}) {
        std::vector<std::string> all = classes;
        all.insert(all.end(), homotopies.begin(), homotopies.end());
        suite_check(c, alg, "associativity", all);
    }
    suite_check(c, "as_cubic:1,2,5", "associativity", homotopies, kHomotopyTrials, true);
}

void n_differential(Check& c) {
    const std::vector<std::string> ops = {"e_cup_left_nth_power", "cup_e_right_nth_power", "e_cap_left_nth_power",
                                          "cap_e_right_nth_power"};
    for (const char* alg : {"truncated:3", "truncated:4"}) suite_check(c, alg, "n_differential", ops, kIterateTrials);
    suite_check(c, "as_cubic:1,2,5", "n_differential", ops, kIterateTrials);
    suite_check(c, "as_cubic:1,2,5", "n_differential", {"cubic_second_iterate_nonzero"});
}

void koszulity(Check& c) {
    const std::vector<std::string> koszul = {"truncated:2", "truncated:3", "truncated:4", "truncated:5",
                                             "tensor:2,3",  "full:2,3"};
    for (const auto& a : koszul) {
        json r = run("koszulity", a);
        c.require(r["exit_code"] == 0, a + " koszulity ran");
        if (r["exit_code"] != 0) continue;
        const json& pl = r["payload"];
        c.require(pl["verdict"] == "KOSZUL_UP_TO_BOUNDS", a + " verdict");
        c.require(pl["d_squared_zero"] == true, a + " d^2 = 0");
        c.require(pl["degree_zero_is_algebra"] == true && pl["degree_one_zero"] == true, a + " low degrees");
    }
    json r = run("koszulity", "as_cubic:1,2,5");
    c.require(r["exit_code"] == 0, "as_cubic koszulity ran");
    if (r["exit_code"] == 0) {
        const json& pl = r["payload"];
        c.require(pl["d_squared_zero"] == true, "as_cubic d^2 = 0");
        c.require(pl["degree_zero_is_algebra"] == true && pl["degree_one_zero"] == true, "as_cubic low degrees");
    }
}

void comparison(Check& c) {
    const std::vector<std::string> props = {"chi_squares",  "chi_closed_form",    "contraction",   "chain_square",
                                            "cochain_square", "low_degree_iso", "non_morphism_witness",
                                            "class_morphism"};
    for (const char* alg : {"truncated:3", "truncated:4"}) suite_check(c, alg, "comparison", props);
}

// Criterion 11: criteria 1-4 over F_101 and F_1009, with dimension tables identical to Q.
void field_robustness(Check& c) {
    auto tables = [](const std::string& field) {
        json t = json::array();
        for (std::size_t N = 2; N <= 5; ++N)
            for (const char* side : {"homology", "cohomology"}) {
                t.push_back(run("dims", trunc(N), field, 5, 12, side)["payload"]["entries"]);
                t.push_back(run("higher", trunc(N), field, 5, 12, side)["payload"]["entries"]);
            }
        return t.dump();
    };
    const std::string q = tables("Q");
    for (const char* f : {"F_101", "F_1009"}) {
        Check sub;
        homology_table(sub, f);
        cohomology_table(sub, f);
        higher_tables(sub, f);
        closed_forms(sub, f);
        c.require(sub.ok, std::string(f) + ": " + sub.note.str());
        c.require(tables(f) == q, std::string(f) + " tables identical to Q");
    }
}

// Criterion 12: two runs of the full command suite give byte-identical JSON.
void determinism(Check& c) {
    auto full = []() {
        std::string out;
        for (const char* alg : {"truncated:3", "as_cubic:1,2,5"}) {
            const auto wm = std::string(alg).rfind("as_cubic", 0) == 0 ? std::optional<std::size_t>(9)
                                                                       : std::optional<std::size_t>(12);
            for (const char* cmd : {"dims", "higher", "cup_table", "cap_table"})
                for (const char* side : {"homology", "cohomology"}) out += run(cmd, alg, "Q", 4, wm, side).dump() + "\n";
            out += run("koszulity", alg).dump() + "\n";
            for (const auto& s : suite_names()) out += run("verify", alg, "Q", std::nullopt, wm, "homology", "A", s).dump() + "\n";
        }
        return out;
    };
    const std::string a = full(), b = full();
    c.require(!a.empty() && a == b, "reports differ between runs");
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Check&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"truncated homology tables", [](Check& c) { homology_table(c, "Q"); }},
        {"truncated cohomology tables", [](Check& c) { cohomology_table(c, "Q"); }},
        {"higher (co)homology", [](Check& c) { higher_tables(c, "Q"); }},
        {"cup/cap closed forms", [](Check& c) { closed_forms(c, "Q"); }},
        {"cochain non-associativity witness", cubic},
        {"identity suites", identity_suites},
        {"associativity on classes and homotopies", associativity},
        {"N-differentials", n_differential},
        {"Koszulity certification", koszulity},
        {"comparison morphism", comparison},
        {"field robustness F_101, F_1009", field_robustness},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].run(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << (i + 1) << ": " << (c.ok ? "PASS" : "FAIL") << "  " << criteria[i].name;
        if (!c.ok) std::cout << " (" << c.note.str() << ")";
        std::cout << "  [" << std::fixed << std::setprecision(2) << s << "s]" << std::endl;
        if (!c.ok) ++failed;
    }
    std::cout << (failed ? "ACCEPTANCE FAIL: " : "ACCEPTANCE PASS: ") << criteria.size() - failed << "/"
              << criteria.size() << " criteria" << std::endl;
    return failed ? 1 : 0;
}
