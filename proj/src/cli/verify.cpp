#include "koszul/verify.hpp"

#include <algorithm>
#include <functional>

#include "koszul/error.hpp"

namespace koszul {

using nlohmann::json;

json to_json(const Vector& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(s.to_string());
    return a;
}

std::string to_json_string(const Vector& v) { return to_json(v).dump(); }

json to_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row_vector(r)));
    return a;
}

json PropertyResult::to_json() const {
    return {{"name", name},         {"asserted", asserted}, {"required", required}, {"trials", trials},
            {"nontrivial", nontrivial}, {"failures", failures}, {"passed", passed()},   {"detail", detail}};
}

bool SuiteResult::passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& r) { return r.passed(); });
}

const PropertyResult* SuiteResult::find(const std::string& name) const {
    for (const auto& r : properties)
        if (r.name == name) return &r;
    return nullptr;
}

json SuiteResult::to_json() const {
    json props = json::array();
    for (const auto& r : properties) props.push_back(r.to_json());
    return {{"suite", suite}, {"passed", passed()}, {"properties", props}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"leibniz",      "fundamental", "associativity",
                                                "n_differential", "brackets",  "comparison"};
    return names;
}

namespace {

constexpr Coefficients kA = Coefficients::Algebra;

struct Outcome {
    bool ok = true;
    bool nontrivial = false;
};

/// Runs body until `want` trials were recorded; nullopt from the body or a bounds
/// exception means the sampled operands did not fit and the attempt is not counted.
void run_trials(PropertyResult& r, std::size_t want, const std::function<std::optional<Outcome>()>& body) {
    r.required = want;
    std::size_t skipped = 0;
    for (std::size_t attempt = 0; r.trials < want && attempt < 20 * want + 20; ++attempt) {
        std::optional<Outcome> o;
        try {
            o = body();
        } catch (const BoundsError&) {
        } catch (const ResourceCapError&) {
        }
        if (!o) {
            ++skipped;
            continue;
        }
        ++r.trials;
        if (o->nontrivial) ++r.nontrivial;
        if (!o->ok) ++r.failures;
    }
    r.detail["skipped"] = skipped;
}

void record(PropertyResult& r, bool ok, bool nontrivial = true) {
    ++r.trials;
    if (nontrivial) ++r.nontrivial;
    if (!ok) ++r.failures;
}

PropertyResult property(std::string name) {
    PropertyResult r;
    r.name = std::move(name);
    return r;
}

PropertyResult info(std::string name) {
    PropertyResult r = property(std::move(name));
    r.asserted = false;
    r.required = 0;
    return r;
}

std::string parity_tag(std::size_t a, std::size_t b) {
    return std::string(a % 2 ? "odd" : "even") + "_" + (b % 2 ? "odd" : "even");
}

/// Operand sampler: degrees by parity, value weights biased to the bottom of A.
class Sampler {
public:
    Sampler(const KoszulComplex& k, Rng& rng) : k_(k), rng_(rng) {
        const GradedAlgebra& a = k.algebra();
        emax_ = a.is_finite() ? *a.top_weight() : 2;
    }

    Rng& rng() { return rng_; }
    std::size_t value_weight() { return rng_.below(emax_ + 1); }
    long cochain_weight(std::size_t p) { return static_cast<long>(value_weight()) - static_cast<long>(k_.nu(p)); }
    std::size_t chain_weight(std::size_t q) { return k_.nu(q) + value_weight(); }
    /// Degree of the given parity in [lo, lo + 3].
    std::size_t degree(std::size_t parity, std::size_t lo) {
        std::size_t d = lo + rng_.below(4);
        if (d % 2 != parity) ++d;
        return d;
    }
    /// Odd degree, 1 three times out of four; higher odd degrees rarely meet W.
    std::size_t small_odd() { return rng_.below(4) ? 1 : 3; }
    KoszulCochain cochain(std::size_t p) { return random_cochain(k_, rng_, kA, p, cochain_weight(p)); }
    KoszulCochain cocycle(std::size_t p) { return random_cocycle(k_, rng_, kA, p, cochain_weight(p)); }
    KoszulChain chain(std::size_t q) { return random_chain(k_, rng_, kA, q, chain_weight(q)); }
    KoszulChain cycle(std::size_t q) { return random_cycle(k_, rng_, kA, q, chain_weight(q)); }
    /// Random derivation together with its weight; the weight ranges over [-1, emax - 1].
    KoszulCochain derivation() {
        long n = static_cast<long>(rng_.below(emax_ + 1)) - 1;
        return random_koszul_derivation(k_, rng_, n);
    }

private:
    const KoszulComplex& k_;
    Rng& rng_;
    std::size_t emax_ = 0;
};

Scalar minus_one(Field f) { return -f.one(); }

// ---------------------------------------------------------------- leibniz

void differential_squares(const KoszulComplex& k, std::size_t p_max, std::vector<PropertyResult>& out) {
    for (Coefficients c : {Coefficients::Algebra, Coefficients::Field}) {
        PropertyResult ch = property("chain_differential_square_" + to_string(c));
        PropertyResult co = property("cochain_differential_square_" + to_string(c));
        for (std::size_t p = 1; p < p_max; ++p) {
            WeightWindow ww = table_window(k, c, Side::Homology, p + 1);
            for (long w = ww.lo; w <= ww.hi; ++w) {
                try {
                    Matrix d1 = k.chain_differential(c, p, static_cast<std::size_t>(w));
                    Matrix d2 = k.chain_differential(c, p + 1, static_cast<std::size_t>(w));
                    record(ch, (d1 * d2).is_zero(), !d1.is_zero() && !d2.is_zero());
                } catch (const BoundsError&) {
                }
            }
            WeightWindow wn = table_window(k, c, Side::Cohomology, p - 1);
            for (long n = wn.lo; n <= wn.hi; ++n) {
                try {
                    Matrix d1 = k.cochain_differential(c, p - 1, n);
                    Matrix d2 = k.cochain_differential(c, p, n);
                    record(co, (d2 * d1).is_zero(), !d1.is_zero() && !d2.is_zero());
                } catch (const BoundsError&) {
                }
            }
        }
        out.push_back(std::move(ch));
        out.push_back(std::move(co));
    }
    PropertyResult bi = property("bimodule_differential_square");
    const GradedAlgebra& a = k.algebra();
    const std::size_t span = a.is_finite() ? 2 * *a.top_weight() : 2;
    for (std::size_t p = 1; p < p_max; ++p) {
        for (std::size_t w = k.nu(p + 1); w <= k.nu(p + 1) + span; ++w) {
            if (!a.is_finite() && w > a.w_max()) break;
            try {
                SparseMatrix d1 = k.bimodule_d(p, w), d2 = k.bimodule_d(p + 1, w);
                record(bi, (d1 * d2).is_zero(), !d1.is_zero() && !d2.is_zero());
            } catch (const BoundsError&) {
            }
        }
    }
    out.push_back(std::move(bi));
}

SuiteResult leibniz_suite(const KoszulComplex& k, const SuiteOptions& opt) {
    SuiteResult res{"leibniz", {}};
    Rng rng(opt.seed);
    Sampler s(k, rng);
    for (std::size_t pp = 0; pp < 2; ++pp) {
        for (std::size_t qp = 0; qp < 2; ++qp) {
            PropertyResult r = property("cup_leibniz_" + parity_tag(pp, qp));
            run_trials(r, opt.trials, [&]() -> std::optional<Outcome> {
                std::size_t p = s.degree(pp, 0), q = s.degree(qp, 0);
                KoszulCochain f = s.cochain(p), g = s.cochain(q);
                KoszulCochain lhs = k.coboundary(cup(k, f, g));
                return Outcome{is_zero(leibniz_cup_residual(k, f, g)), !is_zero(lhs)};
            });
            res.properties.push_back(std::move(r));
        }
    }
    // Cases by the parity of p = deg f and of q - p, with deg z = q > p.
    for (int side = 0; side < 2; ++side) {
        for (std::size_t pp = 0; pp < 2; ++pp) {
            for (std::size_t dp = 0; dp < 2; ++dp) {
                PropertyResult r =
                    property(std::string(side ? "cap_right_leibniz_" : "cap_left_leibniz_") + parity_tag(pp, dp));
                run_trials(r, opt.trials, [&]() -> std::optional<Outcome> {
                    std::size_t p = s.degree(pp, 0), q = p + s.degree(dp, 1);
                    KoszulCochain f = s.cochain(p);
                    KoszulChain z = s.chain(q);
                    if (side == 0) {
                        bool nz = !is_zero(k.boundary(cap_left(k, f, z)));
                        return Outcome{is_zero(leibniz_cap_left_residual(k, f, z)), nz};
                    }
                    bool nz = !is_zero(k.boundary(cap_right(k, z, f)));
                    return Outcome{is_zero(leibniz_cap_right_residual(k, z, f)), nz};
                });
                res.properties.push_back(std::move(r));
            }
        }
    }
    differential_squares(k, opt.p_max, res.properties);
    return res;
}

// ---------------------------------------------------------------- fundamental

SuiteResult fundamental_suite(const KoszulComplex& k, const SuiteOptions& opt) {
    SuiteResult res{"fundamental", {}};
    Rng rng(opt.seed + 1);
    Sampler s(k, rng);
    const GradedAlgebra& a = k.algebra();
    const Field F = k.field();
    KoszulCochain e = euler_cochain(k);

    PropertyResult ec = property("euler_cocycle");
    record(ec, is_zero(k.coboundary(e)));
    res.properties.push_back(std::move(ec));

    PropertyResult es = property("euler_square_zero");
    record(es, is_zero(cup(k, e, e)));
    res.properties.push_back(std::move(es));

    PropertyResult ed = property("euler_derivation");
    const std::size_t mtop = a.is_finite() ? std::min<std::size_t>(*a.top_weight(), 6) : std::min<std::size_t>(a.w_max(), 6);
    for (std::size_t m = 0; m <= mtop; ++m) {
        Matrix d = derivation_matrix(k, e, m);
        Matrix expect = scaled(Matrix::identity(F, a.dim(m)), F.from_int(static_cast<long>(m)));
        record(ed, d == expect, a.dim(m) > 0);
    }
    res.properties.push_back(std::move(ed));

    for (std::size_t pp = 0; pp < 2; ++pp) {
        PropertyResult r = property(std::string("cochain_fundamental_") + (pp ? "odd" : "even"));
        run_trials(r, opt.trials, [&]() -> std::optional<Outcome> {
            KoszulCochain f = s.cochain(s.degree(pp, 0));
            bool nz = !is_zero(k.coboundary(f));
            return Outcome{is_zero(fundamental_cochain_residual(k, f)), nz};
        });
        res.properties.push_back(std::move(r));
    }
    for (std::size_t qp = 0; qp < 2; ++qp) {
        PropertyResult r = property(std::string("chain_fundamental_") + (qp ? "odd" : "even"));
        run_trials(r, opt.trials, [&]() -> std::optional<Outcome> {
            KoszulChain z = s.chain(s.degree(qp, 1));
            bool nz = !is_zero(k.boundary(z));
            return Outcome{is_zero(fundamental_chain_residual(k, z)), nz};
        });
        res.properties.push_back(std::move(r));
    }
    for (std::size_t pp = 0; pp < 2; ++pp) {
        PropertyResult r = property(std::string("derivation_bracket_cochain_") + (pp ? "odd" : "even"));
        run_trials(r, opt.trials, [&]() -> std::optional<Outcome> {
            KoszulCochain d = s.derivation();
            KoszulCochain g = s.cocycle(s.degree(pp, 0));
            bool nz = !is_zero(cup_bracket(k, d, g));
            return Outcome{is_zero(derbra_cochain_residual(k, d, g)), nz};
        });
        res.properties.push_back(std::move(r));
    }
    for (std::size_t qp = 0; qp < 2; ++qp) {
        PropertyResult r = property(std::string("derivation_bracket_chain_") + (qp ? "odd" : "even"));
        run_trials(r, opt.trials, [&]() -> std::optional<Outcome> {
            KoszulCochain d = s.derivation();
            KoszulChain z = s.cycle(s.degree(qp, 1));
            bool nz = !is_zero(cap_bracket(k, d, z));
            return Outcome{is_zero(derbra_chain_residual(k, d, z)), nz};
        });
        res.properties.push_back(std::move(r));
    }
    PropertyResult kd = property("random_derivations_are_cocycles");
    run_trials(kd, opt.trials, [&]() -> std::optional<Outcome> {
        KoszulCochain d = s.derivation();
        return Outcome{is_koszul_derivation(k, d) && is_zero(k.coboundary(d)), !is_zero(d)};
    });
    res.properties.push_back(std::move(kd));
    return res;
}

// ---------------------------------------------------------------- associativity

struct ClassCell {
    std::size_t p;
    long w;
    std::size_t dim;
};

std::vector<ClassCell> class_cells(const KoszulComplex& k, Side side, std::size_t p_max) {
    std::vector<ClassCell> out;
    for (std::size_t p = 0; p <= p_max; ++p) {
        WeightWindow ww = table_window(k, kA, side, p);
        for (long w = ww.lo; w <= ww.hi; ++w) {
            try {
                std::size_t d = side == Side::Homology ? k.homology(kA, p, static_cast<std::size_t>(w)).dim()
                                                       : k.cohomology(kA, p, w).dim();
                if (d) out.push_back({p, w, d});
            } catch (const BoundsError&) {
            }
        }
    }
    return out;
}

bool cochain_is_coboundary(const KoszulComplex& k, const KoszulCochain& f) {
    return k.cohomology(f.coefficients, f.degree, f.weight).is_boundary(KoszulComplex::flatten(f));
}

bool chain_is_boundary(const KoszulComplex& k, const KoszulChain& z) {
    return k.homology(z.coefficients, z.degree, z.weight).is_boundary(z.coords);
}

const char* cap_kind_name(CapAssociator c) {
    switch (c) {
        case CapAssociator::LeftLeft: return "left_left";
        case CapAssociator::RightRight: return "right_right";
        case CapAssociator::Middle: return "middle";
    }
    return "";
}

void class_associators(const KoszulComplex& k, const ClassCalculus& cc, std::size_t p_max,
                       std::vector<PropertyResult>& out) {
    auto co = class_cells(k, Side::Cohomology, p_max);
    auto ho = class_cells(k, Side::Homology, p_max);
    PropertyResult cup_r = property("class_cup_associator");
    for (const auto& x : co)
        for (const auto& y : co)
            for (const auto& z : co) {
                if (x.p + y.p + z.p > p_max) continue;
                for (std::size_t i = 0; i < x.dim; ++i)
                    for (std::size_t j = 0; j < y.dim; ++j)
                        for (std::size_t l = 0; l < z.dim; ++l) {
                            try {
                                KoszulCochain as = associator_cup(k, cc.cocycle(x.p, x.w, i), cc.cocycle(y.p, y.w, j),
                                                                  cc.cocycle(z.p, z.w, l));
                                record(cup_r, cochain_is_coboundary(k, as), !is_zero(as));
                            } catch (const BoundsError&) {
                            }
                        }
            }
    out.push_back(std::move(cup_r));
    for (CapAssociator kind : {CapAssociator::LeftLeft, CapAssociator::RightRight, CapAssociator::Middle}) {
        PropertyResult r = property(std::string("class_cap_associator_") + cap_kind_name(kind));
        for (const auto& x : co)
            for (const auto& y : co)
                for (const auto& z : ho) {
                    if (z.p < x.p + y.p) continue;
                    for (std::size_t i = 0; i < x.dim; ++i)
                        for (std::size_t j = 0; j < y.dim; ++j)
                            for (std::size_t l = 0; l < z.dim; ++l) {
                                try {
                                    KoszulChain as = associator_cap(k, kind, cc.cocycle(x.p, x.w, i),
                                                                    cc.cocycle(y.p, y.w, j),
                                                                    cc.cycle(z.p, static_cast<std::size_t>(z.w), l));
                                    record(r, chain_is_boundary(k, as), !is_zero(as));
                                } catch (const BoundsError&) {
                                }
                            }
                }
        out.push_back(std::move(r));
    }

    // The class of the constant 1 is a two-sided unit.
    PropertyResult unit = property("class_unit");
    const long n0 = 0;
    if (k.cohomology(kA, 0, n0).dim() == 1) {
        for (const auto& x : co) {
            const Matrix& l = cc.cup_constants(0, n0, x.p, x.w);
            const Matrix& r = cc.cup_constants(x.p, x.w, 0, n0);
            Matrix id = Matrix::identity(k.field(), x.dim);
            record(unit, l == id && r == id);
        }
        for (const auto& z : ho) {
            const std::size_t w = static_cast<std::size_t>(z.w);
            const Matrix& l = cc.cap_left_constants(0, n0, z.p, w);
            const Matrix& r = cc.cap_right_constants(z.p, w, 0, n0);
            Matrix id = Matrix::identity(k.field(), z.dim);
            record(unit, l == id && r == id);
        }
    }
    out.push_back(std::move(unit));
}

SuiteResult associativity_suite(const KoszulComplex& k, const SuiteOptions& opt) {
    SuiteResult res{"associativity", {}};
    Rng rng(opt.seed + 2);
    Sampler s(k, rng);
    const std::size_t N = k.algebra().N();

    PropertyResult na = property("cup_associator_nu_additive");
    run_trials(na, opt.trials, [&]() -> std::optional<Outcome> {
        std::size_t odd = rng.below(4);  // index of the odd degree, 3 means none
        std::size_t d[3];
        for (std::size_t i = 0; i < 3; ++i) d[i] = s.degree(i == odd ? 1 : 0, 0);
        KoszulCochain as = associator_cup(k, s.cochain(d[0]), s.cochain(d[1]), s.cochain(d[2]));
        return Outcome{is_zero(as), true};
    });
    res.properties.push_back(std::move(na));

    PropertyResult cn = property("cap_associator_nu_compatible");
    run_trials(cn, opt.trials, [&]() -> std::optional<Outcome> {
        std::size_t p = rng.below(4), q = rng.below(4), r = p + q + rng.below(4);
        if (nu(r - p - q, N) != k.nu(r) - k.nu(p) - k.nu(q)) return std::nullopt;
        KoszulCochain f = s.cochain(p), g = s.cochain(q);
        KoszulChain z = s.chain(r);
        bool ok = is_zero(associator_cap(k, CapAssociator::LeftLeft, g, f, z)) &&
                  is_zero(associator_cap(k, CapAssociator::RightRight, f, g, z)) &&
                  is_zero(associator_cap(k, CapAssociator::Middle, g, f, z));
        return Outcome{ok, true};
    });
    res.properties.push_back(std::move(cn));

    PropertyResult hu = property("cup_associator_homotopy");
    run_trials(hu, opt.homotopy_trials, [&]() -> std::optional<Outcome> {
        std::size_t p = s.small_odd(), q = s.small_odd(), r = s.small_odd();
        KoszulCochain f = s.cochain(p), g = s.cochain(q), h = s.cochain(r);
        KoszulCochain as = associator_cup(k, f, g, h);
        KoszulCochain bu = k.coboundary(associator_homotopy(k, f, g, h));
        axpy(bu, minus_one(k.field()), as);
        return Outcome{is_zero(bu), !is_zero(as)};
    });
    res.properties.push_back(std::move(hu));

    PropertyResult hf = property("cap_associator_homotopy");
    run_trials(hf, opt.homotopy_trials, [&]() -> std::optional<Outcome> {
        std::size_t p = s.small_odd(), q = s.small_odd(), r = p + q + s.small_odd();
        KoszulCochain f = s.cochain(p), g = s.cochain(q);
        KoszulChain z = s.chain(r);
        KoszulChain as = associator_cap(k, CapAssociator::LeftLeft, g, f, z);
        KoszulChain lhs = cap_associator_homotopy(k, g, f, k.boundary(z));
        axpy(lhs, k.field().one(), as);
        return Outcome{is_zero(lhs), !is_zero(as)};
    });
    res.properties.push_back(std::move(hf));

    PropertyResult rc = property("cocycle_associators_are_coboundaries");
    run_trials(rc, opt.homotopy_trials, [&]() -> std::optional<Outcome> {
        std::size_t p = 1 + rng.below(3), q = 1 + rng.below(3), r = 1 + rng.below(3);
        KoszulCochain as = associator_cup(k, s.cocycle(p), s.cocycle(q), s.cocycle(r));
        return Outcome{cochain_is_coboundary(k, as), !is_zero(as)};
    });
    res.properties.push_back(std::move(rc));

    ClassCalculus cc(k);
    class_associators(k, cc, opt.p_max, res.properties);

    if (opt.cubic) {
        PropertyResult cw = property("cubic_cochain_associator");
        try {
            CubicWitness w = cubic_witness(k, opt.cubic->first, opt.cubic->second);
            record(cw, w.matches && w.nonzero && w.outside_relations);
            cw.detail = {{"value", to_json(w.value.coords)},
                         {"expected", to_json(w.expected.coords)},
                         {"matches", w.matches},
                         {"nonzero", w.nonzero},
                         {"outside_relations", w.outside_relations}};
        } catch (const Error& e) {
            record(cw, false);
            cw.detail = {{"error", e.what()}};
        }
        res.properties.push_back(std::move(cw));

        // f = g = e_A and z = 1 ⊗ r_1: some cap associator is nonzero on chains.
        PropertyResult cz = property("cubic_cap_associator_nonzero");
        try {
            const GradedAlgebra& a = k.algebra();
            const WSpace& ws = a.W(k.nu(2));
            Vector c = ws.space.coordinates(a.presentation().relations.at(0).coefficients());
            KoszulChain z = k.chain(kA, 2, k.nu(2), c);
            KoszulCochain e = euler_cochain(k);
            json vals = json::object();
            bool any = false;
            for (CapAssociator kind : {CapAssociator::LeftLeft, CapAssociator::RightRight, CapAssociator::Middle}) {
                KoszulChain as = associator_cap(k, kind, e, e, z);
                vals[cap_kind_name(kind)] = to_json(as.coords);
                any = any || !is_zero(as);
            }
            record(cz, any);
            cz.detail = vals;
        } catch (const Error& e) {
            record(cz, false);
            cz.detail = {{"error", e.what()}};
        }
        res.properties.push_back(std::move(cz));
    }
    return res;
}

// ---------------------------------------------------------------- n_differential

SuiteResult n_differential_suite(const KoszulComplex& k, const SuiteOptions& opt) {
    SuiteResult res{"n_differential", {}};
    Rng rng(opt.seed + 3);
    Sampler s(k, rng);
    const std::size_t N = k.algebra().N();
    for (EulerOperator op : {EulerOperator::CupLeft, EulerOperator::CupRight, EulerOperator::CapLeft,
                             EulerOperator::CapRight}) {
        PropertyResult r = property(to_string(op) + "_nth_power");
        const bool on_chains = op == EulerOperator::CapLeft || op == EulerOperator::CapRight;
        run_trials(r, opt.iterate_trials, [&]() -> std::optional<Outcome> {
            if (on_chains) {
                KoszulChain z = s.chain(N + rng.below(3));
                auto it = euler_iterates(k, op, z, N);
                bool last_zero = it.size() <= N || is_zero(it[N]);
                bool nz = it.size() > N - 1 && !is_zero(it[N - 1]);
                return Outcome{last_zero, nz};
            }
            KoszulCochain f = s.cochain(rng.below(3));
            auto it = euler_iterates(k, op, f, N);
            return Outcome{is_zero(it[N]), !is_zero(it[N - 1])};
        });
        res.properties.push_back(std::move(r));
    }

    ClassCalculus cc(k);
    for (Side side : {Side::Cohomology, Side::Homology}) {
        PropertyResult r = property("class_partial_square_" + to_string(side));
        HigherTable t = higher_table(cc, side, opt.p_max);
        record(r, t.squares_zero);
        json tot = json::array();
        for (std::size_t p = 0; p <= opt.p_max; ++p) tot.push_back(t.total(p));
        r.detail = {{"higher_totals", tot}, {"complete", t.complete}};
        res.properties.push_back(std::move(r));
    }

    if (opt.cubic) {
        PropertyResult r = property("cubic_second_iterate_nonzero");
        KoszulCochain h = constant_one_cochain(k), e = euler_cochain(k);
        auto it = euler_iterates(k, EulerOperator::CupLeft, h, 2);
        KoszulCochain as = associator_cup(k, e, e, h);
        KoszulCochain sum = it[2];
        axpy(sum, k.field().one(), as);
        record(r, !is_zero(it[2]) && is_zero(sum));
        r.detail = {{"second_iterate", to_json(it[2].values)}, {"equals_minus_associator", is_zero(sum)}};
        res.properties.push_back(std::move(r));
    }
    return res;
}

// ---------------------------------------------------------------- brackets

SuiteResult brackets_suite(const KoszulComplex& k, const SuiteOptions& opt) {
    SuiteResult res{"brackets", {}};
    ClassCalculus cc(k);
    auto cells = bracket_experiment(cc, opt.p_max);
    PropertyResult table = info("bracket_ranks");
    PropertyResult proven = property("bracket_zero_where_proven");
    json rows = json::array();
    std::size_t nonzero = 0;
    for (const auto& c : cells) {
        rows.push_back({{"kind", c.kind},
                        {"p", c.p},
                        {"q", c.q},
                        {"weight_p", c.weight_p},
                        {"weight_q", c.weight_q},
                        {"pairs", c.pairs},
                        {"rank", c.rank},
                        {"proven_zero", c.proven_zero}});
        ++table.trials;
        if (c.rank) ++nonzero;
        if (c.proven_zero) record(proven, c.rank == 0, true);
    }
    table.nontrivial = nonzero;
    table.detail = {{"cells", rows}, {"nonzero_cells", nonzero}};
    res.properties.push_back(std::move(table));
    res.properties.push_back(std::move(proven));
    if (is_truncated_polynomial(k.algebra())) {
        PropertyResult gc = property("truncated_graded_commutative");
        for (const auto& c : cells) record(gc, c.rank == 0, true);
        res.properties.push_back(std::move(gc));
    }
    return res;
}

// ---------------------------------------------------------------- comparison

SuiteResult comparison_suite(const KoszulComplex& k, const SuiteOptions& opt) {
    SuiteResult res{"comparison", {}};
    const GradedAlgebra& a = k.algebra();
    const bool finite = a.is_finite();
    const bool truncated = is_truncated_polynomial(a);
    BarComplex b(a);
    const std::size_t pc = finite ? opt.comparison_p_max : std::min<std::size_t>(opt.comparison_p_max, 3);
    Comparison c(k, b, pc);

    PropertyResult sq = property("chi_squares");
    for (std::size_t p = 1; p <= pc; ++p) record(sq, c.square_commutes(p));
    res.properties.push_back(std::move(sq));

    if (truncated) {
        PropertyResult cf = property("chi_closed_form");
        for (std::size_t p = 0; p <= pc; ++p) record(cf, chi_closed_form_truncated(b, p) == c.chi(p, 0));
        res.properties.push_back(std::move(cf));
    }

    Rng rng(opt.seed + 4);
    PropertyResult ct = property("contraction");
    ContractionReport cr = contraction_check(b, rng, finite ? 4 : 3, opt.trials);
    ct.required = opt.trials;
    ct.trials = cr.trials;
    ct.nontrivial = cr.trials;
    ct.failures = cr.failures + cr.s_squared_failures;
    ct.detail = {{"s_squared_failures", cr.s_squared_failures}};
    res.properties.push_back(std::move(ct));

    // Chain and cochain squares on every cell of the window.
    const std::size_t top = finite ? *a.top_weight() : 2;
    PropertyResult chs = property("chain_square");
    for (std::size_t p = 1; p <= pc; ++p)
        for (std::size_t w = k.nu(p); w <= k.nu(p) + top; ++w) {
            if (!finite && w > 5) break;
            try {
                record(chs, c.chain_square_commutes(p, w));
            } catch (const BoundsError&) {
            }
        }
    res.properties.push_back(std::move(chs));
    PropertyResult cos = property("cochain_square");
    const std::size_t pco = finite ? (pc > 0 ? pc - 1 : 0) : 1;
    for (std::size_t p = 0; p <= pco; ++p) {
        const long lo = -static_cast<long>(k.nu(p));
        const long hi = finite ? static_cast<long>(top) - static_cast<long>(k.nu(p)) : 1;
        for (long n = std::max(lo, finite ? lo : -1L); n <= hi; ++n) {
            try {
                record(cos, c.cochain_square_commutes(p, n));
            } catch (const BoundsError&) {
            }
        }
    }
    res.properties.push_back(std::move(cos));

    PropertyResult iso = property("low_degree_iso");
    json cells = json::array();
    const std::size_t w_hi = finite ? k.nu(1) + top : 5;
    const long n_lo = finite ? -static_cast<long>(k.nu(1)) : -1;
    const long n_hi = finite ? static_cast<long>(top) : 1;
    for (const auto& cell : low_degree_iso_check(c, w_hi, n_lo, n_hi)) {
        record(iso, cell.iso, cell.koszul_dim > 0);
        cells.push_back({{"side", cell.side},
                         {"degree", cell.degree},
                         {"weight", cell.weight},
                         {"koszul_dim", cell.koszul_dim},
                         {"hochschild_dim", cell.hochschild_dim},
                         {"iso", cell.iso}});
    }
    iso.detail = {{"cells", cells}, {"partial", b.partial()}};
    res.properties.push_back(std::move(iso));

    if (truncated && a.N() > 2) {
        PropertyResult nm = property("non_morphism_witness");
        NonMorphismWitness w = non_morphism_witness(c);
        record(nm, w.chi_star_f_zero && w.cup_matches && w.cap_matches);
        nm.detail = {{"chi_star_f_zero", w.chi_star_f_zero},
                     {"chi_star_f_cup_d", to_json(w.chi_star_f_cup_d)},
                     {"expected_cup", to_json(w.expected_cup)},
                     {"cup_matches", w.cup_matches},
                     {"cap_matches", w.cap_matches}};
        res.properties.push_back(std::move(nm));
    }
    if (finite) {
        PropertyResult cm = property("class_morphism");
        ClassCalculus cc(k);
        ClassMorphismReport r = class_morphism_check(c, cc, std::min<std::size_t>(4, pc));
        cm.trials = r.cup_checks + r.cap_checks + r.iso_cells;
        cm.nontrivial = cm.trials;
        cm.failures = r.cup_failures + r.cap_failures + r.iso_failures;
        cm.detail = {{"cup_checks", r.cup_checks}, {"cup_failures", r.cup_failures},
                     {"cap_checks", r.cap_checks}, {"cap_failures", r.cap_failures},
                     {"iso_cells", r.iso_cells},   {"iso_failures", r.iso_failures}};
        res.properties.push_back(std::move(cm));
    }
    return res;
}

}  // namespace

SuiteResult run_suite(const std::string& suite, const KoszulComplex& k, const SuiteOptions& opt) {
    if (suite == "leibniz") return leibniz_suite(k, opt);
    if (suite == "fundamental") return fundamental_suite(k, opt);
    if (suite == "associativity") return associativity_suite(k, opt);
    if (suite == "n_differential") return n_differential_suite(k, opt);
    if (suite == "brackets") return brackets_suite(k, opt);
    if (suite == "comparison") return comparison_suite(k, opt);
    throw ConfigError("unknown verify suite '" + suite + "'");
}

ClosedFormReport truncated_closed_form_check(const KoszulComplex& k, std::size_t total_degree) {
    const GradedAlgebra& a = k.algebra();
    if (!is_truncated_polynomial(a)) throw ConfigError("closed forms are for truncated:N");
    const Field F = k.field();
    const std::size_t N = a.N();
    const Scalar c_odd = F.from_int(-static_cast<long>(N * (N - 1) / 2));
    ClosedFormReport rep;
    // Basis operands: (f(x^{ν(p)}) = x^i) and (z = x^j ⊗ x^{ν(q)}).
    auto basis_cochain = [&](std::size_t p, std::size_t i) {
        return k.cochain(kA, p, static_cast<long>(i) - static_cast<long>(k.nu(p)), {F.one()});
    };
    auto expected_cochain = [&](std::size_t p, std::size_t e, const Scalar& c) {
        const long n = static_cast<long>(e) - static_cast<long>(k.nu(p));
        if (e >= N) return std::optional<KoszulCochain>{};
        return std::optional<KoszulCochain>{k.cochain(kA, p, n, {c})};
    };
    for (std::size_t p = 0; p <= total_degree; ++p)
        for (std::size_t q = 0; p + q <= total_degree; ++q)
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) {
                    const bool both_odd = p % 2 && q % 2;
                    KoszulCochain got = cup(k, basis_cochain(p, i), basis_cochain(q, j));
                    const std::size_t e = i + j + (both_odd ? N - 2 : 0);
                    auto want = expected_cochain(p + q, e, both_odd ? c_odd : F.one());
                    ++rep.cup_checks;
                    bool ok = want ? same_shape(got, *want) && got.values == want->values : is_zero(got);
                    if (!ok) ++rep.cup_failures;
                }
    for (std::size_t q = 0; q <= total_degree; ++q)
        for (std::size_t p = 0; p <= q; ++p)
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) {
                    const bool special = p % 2 && (q - p) % 2;
                    KoszulCochain f = basis_cochain(p, i);
                    KoszulChain z = k.chain(kA, q, j + k.nu(q), {F.one()});
                    KoszulChain left = cap_left(k, f, z), right = cap_right(k, z, f);
                    const std::size_t e = i + j + (special ? N - 2 : 0);
                    const std::size_t wout = e + k.nu(q - p);
                    Scalar cl = special ? c_odd : F.one();
                    Scalar cr = special ? -c_odd : ((p * q) % 2 ? -F.one() : F.one());
                    for (int side = 0; side < 2; ++side) {
                        const KoszulChain& got = side ? right : left;
                        ++rep.cap_checks;
                        bool ok;
                        if (e >= N) {
                            ok = is_zero(got);
                        } else {
                            KoszulChain want = k.chain(kA, q - p, wout, {side ? cr : cl});
                            ok = same_shape(got, want) && got.coords == want.coords;
                        }
                        if (!ok) ++rep.cap_failures;
                    }
                }
    return rep;
}

}  // namespace koszul
