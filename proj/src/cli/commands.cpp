#include "koszul/cli.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "koszul/error.hpp"
#include "koszul/verify.hpp"

namespace koszul {

using nlohmann::json;

Bounds default_bounds(std::size_t g) {
    if (g <= 1) return {6, 12};
    if (g == 2) return {5, 9};
    return {4, 6};
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"dims", "koszulity", "higher", "verify", "cup_table", "cap_table"};
    return names;
}

namespace {

struct Context {
    Field field;
    Presentation pres;
    Bounds bounds;
    Coefficients coeff = Coefficients::Algebra;
    Side side = Side::Homology;
    std::optional<std::pair<Scalar, Scalar>> cubic;
};

Coefficients parse_coeff(const std::string& s) {
    if (s == "A") return Coefficients::Algebra;
    if (s == "k") return Coefficients::Field;
    throw ConfigError("coefficients must be A or k, got '" + s + "'");
}

Side parse_side(const std::string& s) {
    if (s == "homology") return Side::Homology;
    if (s == "cohomology") return Side::Cohomology;
    throw ConfigError("side must be homology or cohomology, got '" + s + "'");
}

std::optional<std::pair<Scalar, Scalar>> cubic_parameters(const std::string& name, Field f) {
    const std::string prefix = "as_cubic:";
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    std::string rest = name.substr(prefix.size());
    std::size_t c1 = rest.find(',');
    std::size_t c2 = c1 == std::string::npos ? c1 : rest.find(',', c1 + 1);
    if (c2 == std::string::npos) throw ConfigError("as_cubic needs three parameters a,b,c");
    return std::make_pair(f.parse_scalar(rest.substr(0, c1)), f.parse_scalar(rest.substr(c1 + 1, c2 - c1 - 1)));
}

Context make_context(const RunConfig& cfg) {
    Context c;
    try {
        c.field = Field::parse(cfg.field);
    } catch (const FieldError& e) {
        throw ConfigError(e.what());
    }
    c.pres = catalog(cfg.algebra, c.field);
    c.bounds = default_bounds(c.pres.g());
    if (cfg.p_max) c.bounds.p_max = *cfg.p_max;
    if (cfg.w_max) c.bounds.w_max = *cfg.w_max;
    if (c.bounds.p_max == 0 || c.bounds.w_max == 0) throw ConfigError("bounds must be positive");
    if (cfg.trials == 0) throw ConfigError("trials must be positive");
    c.coeff = parse_coeff(cfg.coeff);
    c.side = parse_side(cfg.side);
    c.cubic = cubic_parameters(cfg.algebra, c.field);
    return c;
}

json config_json(const std::string& command, const std::string& suite, const RunConfig& cfg,
                 const std::optional<Bounds>& b) {
    json j = {{"command", command}, {"algebra", cfg.algebra}, {"field", cfg.field},     {"seed", cfg.seed},
              {"coeff", cfg.coeff},   {"side", cfg.side},       {"trials", cfg.trials}};
    if (command == "verify") j["suite"] = suite;
    if (b) {
        j["p_max"] = b->p_max;
        j["w_max"] = b->w_max;
    }
    return j;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

std::string header(const Context& c, const RunConfig& cfg) {
    std::ostringstream os;
    os << cfg.algebra << " over " << c.field.name() << ", p_max " << c.bounds.p_max << ", w_max " << c.bounds.w_max
       << (c.pres.warnings.empty() ? "" : " (with presentation warnings)") << "\n";
    return os.str();
}

json entries_json(const std::vector<HkEntry>& es) {
    json a = json::array();
    for (const auto& e : es) a.push_back({{"degree", e.degree}, {"weight", e.weight}, {"dim", e.dim}});
    return a;
}

std::string entries_text(const std::vector<HkEntry>& es, const std::string& weight_label) {
    std::ostringstream os;
    os << pad("p", 4) << pad(weight_label, 8) << "dim\n";
    for (const auto& e : es)
        if (e.dim) os << pad(std::to_string(e.degree), 4) << pad(std::to_string(e.weight), 8) << e.dim << "\n";
    return os.str();
}

// ---------------------------------------------------------------- commands

json cmd_dims(const KoszulComplex& k, const Context& c, std::ostringstream& text) {
    HkTable t = hk_table(k, c.coeff, c.side, c.bounds.p_max);
    const bool hom = c.side == Side::Homology;
    json classes = json::array();
    for (const auto& e : t.entries) {
        if (!e.dim) continue;
        const HomologyBasis& hb = hom ? k.homology(c.coeff, e.degree, static_cast<std::size_t>(e.weight))
                                      : k.cohomology(c.coeff, e.degree, e.weight);
        const long vw = hom ? e.weight - static_cast<long>(k.nu(e.degree)) : e.weight + static_cast<long>(k.nu(e.degree));
        classes.push_back({{"degree", e.degree},
                           {"weight", e.weight},
                           {"value_weight", vw},
                           {"w_dim", k.w_dim(e.degree)},
                           {"representatives", to_json(hb.representatives())}});
    }
    json totals = json::array(), wd = json::array();
    for (std::size_t p = 0; p <= c.bounds.p_max; ++p) {
        totals.push_back(t.total(p));
        wd.push_back(k.w_dim(p));
    }
    text << (hom ? "HK_p" : "HK^p") << " with coefficients " << to_string(c.coeff) << (t.complete ? "" : " (partial window)")
         << "\n"
         << entries_text(t.entries, hom ? "weight" : "n") << "totals:";
    for (std::size_t p = 0; p <= c.bounds.p_max; ++p) text << " " << t.total(p);
    text << "\n";
    return {{"side", to_string(c.side)}, {"coefficients", to_string(c.coeff)}, {"complete", t.complete},
            {"entries", entries_json(t.entries)}, {"totals", totals}, {"w_dims", wd}, {"classes", classes}};
}

json cmd_koszulity(const KoszulComplex& k, const Context& c, std::ostringstream& text) {
    KoszulityReport r = koszulity_report(k, c.bounds.p_max, c.bounds.w_max);
    json cells = json::array();
    bool degree_one_zero = true;
    for (const auto& cell : r.cells) {
        if (cell.dim) cells.push_back({{"degree", cell.degree}, {"weight", cell.weight}, {"dim", cell.dim}});
        if (cell.degree == 1 && cell.dim) degree_one_zero = false;
    }
    json j = {{"verdict", r.verdict},
              {"d_squared_zero", r.d_squared_zero},
              {"degree_zero_is_algebra", r.degree_zero_is_algebra},
              {"degree_one_zero", degree_one_zero},
              {"nonzero_cells", cells},
              {"cells_checked", r.cells.size()},
              {"witness", nullptr}};
    if (r.witness) j["witness"] = {{"degree", r.witness->degree}, {"weight", r.witness->weight}, {"dim", r.witness->dim}};
    text << "verdict " << r.verdict << "\n"
         << "d^2 = 0: " << (r.d_squared_zero ? "yes" : "no") << "\n"
         << "H_0(K(A)) = A: " << (r.degree_zero_is_algebra ? "yes" : "no") << "\n"
         << "H_1(K(A)) = 0: " << (degree_one_zero ? "yes" : "no") << "\n";
    if (r.witness) text << "first nonzero cell: p " << r.witness->degree << " weight " << r.witness->weight << "\n";
    return j;
}

json cmd_higher(const KoszulComplex& k, const Context& c, std::ostringstream& text) {
    ClassCalculus cc(k, c.coeff);
    HigherTable t = higher_table(cc, c.side, c.bounds.p_max);
    json totals = json::array();
    for (std::size_t p = 0; p <= c.bounds.p_max; ++p) totals.push_back(t.total(p));
    text << "higher " << to_string(c.side) << " with coefficients " << to_string(c.coeff)
         << (t.complete ? "" : " (partial window)") << "\n"
         << entries_text(t.entries, c.side == Side::Homology ? "weight" : "n") << "totals:";
    for (std::size_t p = 0; p <= c.bounds.p_max; ++p) text << " " << t.total(p);
    text << "\nsquares zero: " << (t.squares_zero ? "yes" : "no") << "\n";
    return {{"side", to_string(c.side)},          {"coefficients", to_string(c.coeff)},
            {"complete", t.complete},             {"squares_zero", t.squares_zero},
            {"entries", entries_json(t.entries)}, {"ordinary", entries_json(t.ordinary)},
            {"totals", totals}};
}

json cmd_verify(const KoszulComplex& k, const Context& c, const RunConfig& cfg, const std::string& suite,
                std::ostringstream& text, bool& passed) {
    SuiteOptions opt;
    opt.seed = cfg.seed;
    opt.trials = cfg.trials;
    opt.p_max = c.bounds.p_max;
    opt.comparison_p_max = std::min<std::size_t>(c.bounds.p_max, 5);
    opt.cubic = c.cubic;
    SuiteResult r = run_suite(suite, k, opt);
    passed = r.passed();
    text << "suite " << suite << ": " << (passed ? "PASS" : "FAIL") << "\n";
    for (const auto& p : r.properties)
        text << "  " << (p.asserted ? (p.passed() ? "PASS " : "FAIL ") : "INFO ") << pad(p.name, 40) << p.trials
             << " trials, " << p.nontrivial << " nontrivial, " << p.failures << " failures\n";
    return r.to_json();
}

struct Cell {
    std::size_t p;
    long w;
    std::size_t dim;
};

std::vector<Cell> nonzero_cells(const KoszulComplex& k, Coefficients c, Side s, std::size_t p_max) {
    std::vector<Cell> out;
    HkTable t = hk_table(k, c, s, p_max);
    for (const auto& e : t.entries)
        if (e.dim) out.push_back({e.degree, e.weight, e.dim});
    return out;
}

json closed_form_json(const KoszulComplex& k, std::size_t p_max, std::ostringstream& text) {
    if (!is_truncated_polynomial(k.algebra())) return nullptr;
    ClosedFormReport r = truncated_closed_form_check(k, std::min<std::size_t>(p_max, 5));
    text << "closed forms: cup " << r.cup_checks - r.cup_failures << "/" << r.cup_checks << ", cap "
         << r.cap_checks - r.cap_failures << "/" << r.cap_checks << "\n";
    return {{"cup_checks", r.cup_checks},
            {"cup_failures", r.cup_failures},
            {"cap_checks", r.cap_checks},
            {"cap_failures", r.cap_failures}};
}

json cmd_cup_table(const KoszulComplex& k, const Context& c, std::ostringstream& text) {
    ClassCalculus cc(k, c.coeff);
    auto cells = nonzero_cells(k, c.coeff, Side::Cohomology, c.bounds.p_max);
    json products = json::array();
    std::size_t nonzero = 0;
    for (const auto& x : cells)
        for (const auto& y : cells) {
            if (x.p + y.p > c.bounds.p_max) continue;
            try {
                const Matrix& m = cc.cup_constants(x.p, x.w, y.p, y.w);
                if (m.rows() == 0 || m.is_zero()) continue;
                ++nonzero;
                products.push_back(
                    {{"p", x.p}, {"n1", x.w}, {"q", y.p}, {"n2", y.w}, {"constants", to_json(m)}});
            } catch (const BoundsError&) {
            }
        }
    text << "cup products of HK^* with coefficients " << to_string(c.coeff) << ": " << cells.size()
         << " nonzero cells, " << nonzero << " nonzero products\n";
    json cl = closed_form_json(k, c.bounds.p_max, text);
    return {{"coefficients", to_string(c.coeff)}, {"cells", cells.size()}, {"products", products},
            {"closed_form", cl}};
}

json cmd_cap_table(const KoszulComplex& k, const Context& c, std::ostringstream& text) {
    ClassCalculus cc(k, c.coeff);
    auto co = nonzero_cells(k, c.coeff, Side::Cohomology, c.bounds.p_max);
    auto ho = nonzero_cells(k, c.coeff, Side::Homology, c.bounds.p_max);
    json left = json::array(), right = json::array();
    for (const auto& x : co)
        for (const auto& z : ho) {
            if (z.p < x.p) continue;
            const std::size_t w = static_cast<std::size_t>(z.w);
            try {
                const Matrix& l = cc.cap_left_constants(x.p, x.w, z.p, w);
                const Matrix& r = cc.cap_right_constants(z.p, w, x.p, x.w);
                if (l.rows() && !l.is_zero())
                    left.push_back({{"p", x.p}, {"n", x.w}, {"q", z.p}, {"w", z.w}, {"constants", to_json(l)}});
                if (r.rows() && !r.is_zero())
                    right.push_back({{"p", x.p}, {"n", x.w}, {"q", z.p}, {"w", z.w}, {"constants", to_json(r)}});
            } catch (const BoundsError&) {
            }
        }
    text << "cap actions of HK^* on HK_* with coefficients " << to_string(c.coeff) << ": " << left.size()
         << " nonzero left, " << right.size() << " nonzero right\n";
    json cl = closed_form_json(k, c.bounds.p_max, text);
    return {{"coefficients", to_string(c.coeff)}, {"left", left}, {"right", right}, {"closed_form", cl}};
}

}  // namespace

CommandResult run_command(const std::string& command, const std::string& suite, const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    CommandResult out;
    std::optional<Bounds> bounds;
    std::ostringstream text;
    json payload;
    try {
        Context c = make_context(cfg);
        bounds = c.bounds;
        GradedAlgebra a(c.pres, c.bounds.w_max);
        KoszulComplex k(a);
        text << header(c, cfg);
        bool passed = true;
        if (command == "dims") {
            payload = cmd_dims(k, c, text);
        } else if (command == "koszulity") {
            payload = cmd_koszulity(k, c, text);
        } else if (command == "higher") {
            payload = cmd_higher(k, c, text);
        } else if (command == "verify") {
            payload = cmd_verify(k, c, cfg, suite, text, passed);
        } else if (command == "cup_table") {
            payload = cmd_cup_table(k, c, text);
        } else if (command == "cap_table") {
            payload = cmd_cap_table(k, c, text);
        } else {
            throw ConfigError("unknown command '" + command + "'");
        }
        payload["warnings"] = c.pres.warnings;
        out.exit_code = passed ? kExitOk : kExitPropertyFailure;
    } catch (const ParseError& e) {
        payload = {{"error", {{"kind", "parse"}, {"message", e.what()}, {"line", e.line}, {"column", e.column}}}};
        out.exit_code = kExitConfig;
    } catch (const ConfigError& e) {
        payload = {{"error", {{"kind", "config"}, {"message", e.what()}}}};
        out.exit_code = kExitConfig;
    } catch (const FieldError& e) {
        payload = {{"error", {{"kind", "config"}, {"message", e.what()}}}};
        out.exit_code = kExitConfig;
    } catch (const ResourceCapError& e) {
        payload = {{"error", {{"kind", "resource"}, {"message", e.what()}}}};
        out.exit_code = kExitResource;
    } catch (const BoundsError& e) {
        payload = {{"error", {{"kind", "bounds"}, {"message", e.what()}}}};
        out.exit_code = kExitResource;
    } catch (const std::exception& e) {
        payload = {{"error", {{"kind", "internal"}, {"message", e.what()}}}};
        out.exit_code = kExitPropertyFailure;
    }
    if (payload.contains("error")) text << "error: " << payload["error"]["message"].get<std::string>() << "\n";
    json timings = json::object();
    if (cfg.timings) {
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        timings["total_seconds"] = s;
    }
    out.report = {{"version", kVersion},
                  {"config", config_json(command, suite, cfg, bounds)},
                  {"payload", payload},
                  {"timings", timings}};
    out.text = text.str();
    return out;
}

}  // namespace koszul
