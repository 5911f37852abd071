#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/koszul_complex.hpp"

namespace koszul {

/// Inclusive weight range of one degree in a homology or cohomology table.
struct WeightWindow {
    long lo = 0;
    long hi = -1;
};

/// Weights of HK_p (total weight w) or HK^p (internal weight n) that the bounds allow.
/// `complete` is set when the window provably contains every nonzero cell.
WeightWindow table_window(const KoszulComplex& k, Coefficients c, Side s, std::size_t p, bool* complete = nullptr);

struct HkEntry {
    std::size_t degree = 0;
    long weight = 0;
    std::size_t dim = 0;
};

struct HkTable {
    Coefficients coefficients = Coefficients::Algebra;
    Side side = Side::Homology;
    std::size_t p_max = 0;
    bool complete = true;
    std::vector<HkEntry> entries;

    std::size_t total(std::size_t p) const;
};

HkTable hk_table(const KoszulComplex& k, Coefficients c, Side s, std::size_t p_max);

struct KoszulityCell {
    std::size_t degree = 0;
    std::size_t weight = 0;
    std::size_t dim = 0;
};

struct KoszulityReport {
    std::size_t p_max = 0;
    std::size_t w_max = 0;
    std::vector<KoszulityCell> cells;  // H_p(K(A)) at weight w for 0 <= p <= p_max
    bool d_squared_zero = true;
    bool degree_zero_is_algebra = true;
    std::optional<KoszulityCell> witness;  // first nonzero positive-degree cell
    std::string verdict;                   // KOSZUL_UP_TO_BOUNDS or NOT_KOSZUL

    std::size_t dim(std::size_t p, std::size_t w) const;
};

/// Exact homology of the bimodule complex K(A) in the given window.
KoszulityReport koszulity_report(const KoszulComplex& k, std::size_t p_max, std::size_t w_max);

}  // namespace koszul
