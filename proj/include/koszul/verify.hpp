#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "koszul/bar.hpp"

namespace koszul {

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::size_t trials = 200;           // random operands per parity case
    std::size_t homotopy_trials = 50;   // odd triples for the associator homotopies
    std::size_t iterate_trials = 100;   // operands per e_A-operator
    std::size_t p_max = 5;              // class-level degree bound
    std::size_t comparison_p_max = 5;   // χ is built up to this degree
    std::optional<std::pair<Scalar, Scalar>> cubic;  // (a, b) for the cubic catalog entry
};

/// Outcome of one property. A property passes only when it ran at least `required`
/// trials without a failure; informational properties (asserted = false) never fail.
struct PropertyResult {
    std::string name;
    bool asserted = true;
    std::size_t required = 1;
    std::size_t trials = 0;
    std::size_t nontrivial = 0;
    std::size_t failures = 0;
    nlohmann::json detail = nlohmann::json::object();

    bool passed() const { return !asserted || (trials >= required && failures == 0); }
    nlohmann::json to_json() const;
};

struct SuiteResult {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool passed() const;
    const PropertyResult* find(const std::string& name) const;
    nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& suite, const KoszulComplex& k, const SuiteOptions& opt);

/// Cochain-level cup and cap products of basis operands on k[x]/(x^N) against their closed forms.
struct ClosedFormReport {
    std::size_t cup_checks = 0, cup_failures = 0;
    std::size_t cap_checks = 0, cap_failures = 0;
};
ClosedFormReport truncated_closed_form_check(const KoszulComplex& k, std::size_t total_degree);

std::string to_json_string(const Vector& v);
nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const Matrix& m);

}  // namespace koszul
