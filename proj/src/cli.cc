// Copyright 2026 The nicebases Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nb/cli.h"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>

#include "nb/errorbasis.h"
#include "nb/io.h"
#include "nb/qcode.h"
#include "nb/transversal.h"

namespace nb {

void apply_env_overrides(RunConfig &config) {
    auto read = [](const char *name, std::uint64_t &target) {
        if (const char *v = std::getenv(name)) {
            try {
                size_t used = 0;
                std::uint64_t parsed = std::stoull(v, &used);
                if (used != std::string(v).size() || parsed == 0) {
                    throw std::invalid_argument(name);
                }
                target = parsed;
            } catch (const std::exception &) {
                throw std::invalid_argument(std::string("environment variable ") + name + " must be a positive integer");
            }
        }
    };
    read("NICE_MAX_AMBIENT", config.guards.max_ambient);
    read("NICE_MAX_DENSE_DIM", config.guards.max_dense_dim);
}

namespace {

struct Options {
    RunConfig config;
    std::string format = "json";
    std::string output;
    bool no_timing = false;
    std::uint64_t max_ambient = 0;
    std::uint64_t max_dense_dim = 0;

    std::uint32_t shift_clock = 0;
    std::string labeling = "cyclic";
    bool qubit = false;
    bool qubit_det_one = false;

    std::string c_file;
    std::string d_file;
    std::string convention = "auto";
    std::string code_file = "code.json";
    std::string out_file = "code.json";
    size_t e = 1;
    bool exhaustive = false;
    bool table = false;
    bool lenient = false;
    std::string sweep = "weight<=e";
    std::string gate = "all";
};

class Timer {
   public:
    Timer(Report &report, std::string phase)
        : report_(report), phase_(std::move(phase)), start_(std::chrono::steady_clock::now()) {
    }
    ~Timer() {
        std::chrono::duration<double> d = std::chrono::steady_clock::now() - start_;
        report_.time_phase(phase_, d.count());
    }

   private:
    Report &report_;
    std::string phase_;
    std::chrono::steady_clock::time_point start_;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kMaxTableCells = std::uint64_t{1} << 20;
constexpr double kSlowTierCost = 2e8;
constexpr std::uint64_t kSlowTierAmbient = std::uint64_t{1} << 16;

// ------------------------------------------------------------------- basis

struct NamedBasis {
    std::string name;
    ErrorBasis basis;
    std::optional<ShiftClockLabeling> labeling;
};

NamedBasis select_basis(const Options &o) {
    int chosen = (o.shift_clock != 0) + o.qubit + o.qubit_det_one;
    if (chosen != 1) {
        throw UsageError("choose exactly one of --shift-clock N, --qubit, --qubit-det-one");
    }
    if (o.qubit) {
        return {"E_2", qubit_basis(), std::nullopt};
    }
    if (o.qubit_det_one) {
        return {"E'_2", qubit_basis_det_one(), std::nullopt};
    }
    if (o.shift_clock < 2) {
        throw UsageError("--shift-clock needs n >= 2");
    }
    ShiftClockLabeling lab;
    if (o.labeling == "cyclic") {
        lab = ShiftClockLabeling::kCyclic;
    } else if (o.labeling == "shift") {
        lab = ShiftClockLabeling::kShift;
    } else {
        throw UsageError("--labeling must be cyclic or shift");
    }
    return {"E_omega(" + std::to_string(o.shift_clock) + ")", build_shift_clock(o.shift_clock, lab), lab};
}

Json basis_elements_json(const ErrorBasis &b) {
    Json out = Json::array();
    for (size_t k = 0; k < b.size(); k++) {
        Json e{{"label", b.labels[k]}};
        if (b.elements[k].is_monomial()) {
            const MonomialMatrix &m = b.elements[k].monomial();
            e["order"] = m.order();
            e["perm"] = m.perm();
            e["phases"] = m.phases();
        } else {
            e["matrix"] = to_json(b.elements[k].dense());
        }
        out.push_back(e);
    }
    return out;
}

// Checks shared by basis verify and basis egner; returns the structure
// constants when the basis is nice.
std::optional<StructureConstants> verify_basis_checks(Report &report, const ErrorBasis &b) {
    OrthonormalReport o = verify_orthonormal(b);
    std::string ow;
    if (!o.violations.empty()) {
        ow = "tr(E_" + std::to_string(o.violations[0].i) + "^dag E_" + std::to_string(o.violations[0].j) +
             ") = " + o.violations[0].value.to_string();
    } else if (!o.identity_first) {
        ow = "first element is not the identity";
    } else if (!o.correct_count) {
        ow = "wrong number of elements";
    }
    report.check("orthonormal", o.pass, ow, Json{{"pairs_checked", o.pairs_checked}});
    StructureConstants sc;
    try {
        sc = verify_nice(b);
    } catch (const NotNiceError &ex) {
        report.check("nice", false, ex.what());
        return std::nullopt;
    }
    report.check("nice", true);
    GroupReport g = index_group(sc);
    report.check(
        "index_group_axioms", g.is_group(), g.is_group() ? "" : "index table is not a group",
        Json{{"order", g.order}, {"abelian", g.abelian}});
    bool unit = true;
    for (const auto &row : sc.w) {
        for (const auto &w : row) {
            unit = unit && (w * w.conj() == CycInt(1));
        }
    }
    report.check("w_unit_modulus", unit);
    VeryNiceReport v = verify_very_nice(b, sc);
    report.result()["very_nice"] = v.pass;
    report.result()["det_not_one"] = v.det_not_one;
    if (v.det_not_one.empty()) {
        report.check("w_nth_roots_under_det_one", v.w_not_nth_root.empty());
    }
    return sc;
}

Report cmd_basis_build(const Options &o, const std::vector<std::string> &args) {
    Report report("basis build", args);
    NamedBasis nb = select_basis(o);
    report.result()["basis"] = nb.name;
    report.result()["dim"] = nb.basis.dim;
    report.result()["elements"] = basis_elements_json(nb.basis);
    return report;
}

Report cmd_basis_verify(const Options &o, const std::vector<std::string> &args) {
    Report report("basis verify", args);
    NamedBasis nb = select_basis(o);
    report.result()["basis"] = nb.name;
    std::optional<StructureConstants> sc;
    {
        Timer t(report, "verify");
        sc = verify_basis_checks(report, nb.basis);
    }
    if (sc && nb.labeling) {
        std::uint32_t n = nb.basis.dim;
        bool star_ok = true, w_ok = true;
        for (std::uint32_t i = 0; i < n; i++) {
            for (std::uint32_t j = 0; j < n; j++) {
                for (std::uint32_t k = 0; k < n; k++) {
                    for (std::uint32_t l = 0; l < n; l++) {
                        size_t a = i * n + j, b = k * n + l;
                        star_ok = star_ok && sc->star[a][b] == ((i + k) % n) * n + (j + l) % n;
                        std::int64_t exp = static_cast<std::int64_t>(j) * k;
                        if (*nb.labeling == ShiftClockLabeling::kShift) {
                            exp = -exp;
                        }
                        w_ok = w_ok && sc->w[a][b] == CycInt::zeta(n, exp);
                    }
                }
            }
        }
        report.check("star_table_Zn_x_Zn", star_ok);
        report.check(
            *nb.labeling == ShiftClockLabeling::kCyclic ? "w_table_omega^{jk}" : "w_table_omega^{-jk}", w_ok);
    }
    return report;
}

Report cmd_basis_egner(const Options &, const std::vector<std::string> &args) {
    Report report("basis egner", args);
    EgnerResult r;
    try {
        Timer t(report, "closure");
        r = build_egner();
    } catch (const std::exception &ex) {
        report.check("egner_construction", false, ex.what());
        return report;
    }
    report.check("group_order_32", r.group.size() == 32, "", Json(r.group.size()));
    report.check("center_is_plus_minus_identity", r.center.size() == 2, "", Json(r.center.size()));
    for (const auto &[name, ok] : r.relations) {
        report.check("relation " + name, ok);
    }
    report.check("coset_representatives_16", r.basis.size() == 16, "", Json(r.basis.size()));
    std::optional<StructureConstants> sc = verify_basis_checks(report, r.basis);
    if (sc) {
        GroupInvariants mine = group_invariants(sc->star);
        GroupInvariants target = group_invariants(z2_x_d4_table());
        Json profile = Json::object();
        for (const auto &[ord, count] : mine.order_profile) {
            profile[std::to_string(ord)] = count;
        }
        report.result()["index_group"] = {
            {"order", mine.order},
            {"order_profile", profile},
            {"center_size", mine.center_size},
            {"abelianization_size", mine.abelianization_size},
            {"abelianization_exponent", mine.abelianization_exponent},
        };
        report.check("invariants_match_Z2_x_D4", mine == target);
        std::vector<size_t> gens = z2_x_d4_generators();
        std::optional<Isomorphism> iso = find_isomorphism(z2_x_d4_table(), gens, sc->star);
        Json images = Json::array();
        if (iso) {
            for (size_t k : iso->generator_images) {
                images.push_back(r.basis.labels[k]);
            }
        }
        report.check("explicit_isomorphism_Z2_x_D4", iso.has_value(), "", Json{{"t_r_s_images", images}});
    }
    report.result()["elements"] = basis_elements_json(r.basis);
    return report;
}

// -------------------------------------------------------------------- code

PuncturedQuantumCode obtain_code(const Options &o, Report &report) {
    Timer t(report, "load_code");
    const Guards &g = o.config.guards;
    if (!o.c_file.empty()) {
        LinearCodeZn c = to_code(read_generator_file(o.c_file), g);
        std::optional<LinearCodeZn> d;
        if (!o.d_file.empty()) {
            d = to_code(read_generator_file(o.d_file), g);
        }
        return build_code(c, d, parse_convention(o.convention), g);
    }
    std::ifstream in(o.code_file);
    if (!in) {
        throw std::runtime_error("cannot open code cache " + o.code_file + " (run 'code build' or pass --c)");
    }
    return load_code_cache(Json::parse(in), g);
}

std::string first_kl_witness(const KlResult &r) {
    if (r.violations.empty()) {
        return "";
    }
    const KlViolation &v = r.violations[0];
    return v.kind + ": a=" + r.errors[v.a].to_string() + " b=" + r.errors[v.b].to_string() + " <" +
           std::to_string(v.i) + "_L|E_a^dag E_b|" + std::to_string(v.j) + "_L> = " + v.value.to_string();
}

Json kl_summary(const KlResult &r) {
    return Json{{"e", r.e}, {"errors", r.errors.size()}, {"pairs", r.pairs_checked}, {"violations", r.violation_count}};
}

Report cmd_code_build(const Options &o, const std::vector<std::string> &args) {
    Report report("code build", args);
    PuncturedQuantumCode code;
    try {
        code = obtain_code(o, report);
    } catch (const CodeConstructionError &ex) {
        report.check(ex.check, false, ex.what());
        return report;
    }
    for (const auto &c : code.checks) {
        report.check(c.name, c.pass, c.pass ? "" : c.detail);
    }
    report.result()["code"] = code_summary_json(code);
    if (!o.out_file.empty()) {
        std::ofstream out(o.out_file);
        out << code_cache_json(code).dump(2) << "\n";
        report.result()["cache"] = o.out_file;
    }
    return report;
}

Report cmd_code_check(const Options &o, const std::vector<std::string> &args) {
    Report report("code check", args);
    PuncturedQuantumCode code = obtain_code(o, report);
    const Guards &g = o.config.guards;
    report.result()["code"] = code_summary_json(code);

    {
        Timer t(report, "eigenspace");
        EigenspaceReport eig = verify_eigenspace(code);
        Json values = Json::array();
        for (const auto &v : eig.eigenvalues) {
            values.push_back(v ? to_json(*v) : Json(nullptr));
        }
        report.check("eigenspace", eig.pass, eig.witnesses.empty() ? "" : eig.witnesses[0], values);
    }

    std::uint64_t count = count_errors(code.n, code.l, o.e);
    if (o.table && count > 0 && count * count > kMaxTableCells) {
        throw GuardExceeded("lambda_table_cells", count * count, kMaxTableCells);
    }
    bool store = o.table || count * count <= 10000;
    if (o.exhaustive && !o.config.slow) {
        // Inner products of |C'_0|-term states, n^2 per pair.
        double cost = static_cast<double>(count) * static_cast<double>(count) * code.n * code.n *
                      static_cast<double>(code.c0.size());
        if (cost > kSlowTierCost) {
            throw UsageError("the state-level check at this size is slow-tier; pass --slow");
        }
    }
    KlResult fast;
    {
        Timer t(report, "kl_fast");
        fast = kl_check_fast(code, o.e, store, g);
    }
    report.check("kl_fast", fast.pass, first_kl_witness(fast), kl_summary(fast));
    if (o.exhaustive) {
        KlResult ex;
        {
            Timer t(report, "kl_exhaustive");
            ex = kl_check_exhaustive(code, o.e, store, g);
        }
        report.check("kl_exhaustive", ex.pass, first_kl_witness(ex), kl_summary(ex));
        bool agree = ex.pass == fast.pass && ex.violation_count == fast.violation_count && ex.errors == fast.errors &&
                     (!store || ex.table == fast.table);
        report.check("kl_fast_matches_exhaustive", agree);
    }
    if (store) {
        Json errors = Json::array();
        for (const auto &d : fast.errors) {
            errors.push_back(to_json(d));
        }
        Json cells = Json::array();
        for (const auto &cell : fast.table) {
            if (!cell.lambda().is_zero()) {
                cells.push_back(Json{cell.a, cell.b, to_json(cell.lambda())});
            }
        }
        report.result()["lambda_table"] = {{"errors", errors}, {"nonzero", cells}};
    }

    DistanceCertificate cert;
    {
        Timer t(report, "distance");
        cert = distance_certificate(code, o.e, g);
    }
    auto weight_json = [](size_t w) { return w == kInfiniteWeight ? Json("infinite") : Json(w); };
    report.check(
        "distance_min_weight", cert.by_min_weight, "",
        Json{{"min_weight_C'", weight_json(cert.min_weight_cp)},
             {"min_weight_D'", weight_json(cert.min_weight_dp)},
             {"required", 2 * o.e + 1}});
    if (cert.scan_done) {
        report.check(
            "distance_scan", cert.by_scan, "",
            Json{{"scanned", cert.scanned},
                 {"centralizer_hits", cert.centralizer_hits},
                 {"membership_failures", cert.membership_failures},
                 {"logical_hits", cert.logical_hits}});
        report.check("distance_certificates_agree", cert.agree());
    } else {
        report.result()["distance_note"] = cert.note;
    }
    return report;
}

Json syndrome_json(const Word &s) {
    return Json(s);
}

Report cmd_decode_table(const Options &o, const std::vector<std::string> &args) {
    Report report("code decode-table", args);
    PuncturedQuantumCode code = obtain_code(o, report);
    Decoder dec;
    try {
        Timer t(report, "decoder");
        dec = build_decoder(code, o.e, o.config.strict_decoder, o.config.guards);
    } catch (const SyndromeCollision &ex) {
        report.check("distinct_syndromes", false, ex.what());
        return report;
    }
    report.check("distinct_syndromes", true);
    bool roundtrip = true;
    for (const auto &[s, d] : dec.table) {
        roundtrip = roundtrip && syndrome_of(d, code) == s;
    }
    report.check("syndromes_round_trip", roundtrip);
    auto zero = dec.table.find(Word(code.generators.size(), 0));
    report.check("zero_syndrome_is_identity", zero != dec.table.end() && zero->second.is_identity());
    Json entries = Json::array();
    for (const auto &[s, d] : dec.table) {
        entries.push_back(Json{{"syndrome", syndrome_json(s)}, {"correction", to_json(d)}, {"weight", d.weight()}});
    }
    report.result()["decoder"] = {
        {"e", dec.e},
        {"mode", dec.strict ? "strict" : "lenient"},
        {"entries", dec.table.size()},
        {"reachable_syndromes", dec.reachable_syndromes},
        {"absent", dec.reachable_syndromes - dec.table.size()},
        {"table", entries},
    };
    return report;
}

size_t parse_sweep(const std::string &text, size_t e) {
    auto pos = text.find("<=");
    if (pos == std::string::npos) {
        throw UsageError("--sweep must look like weight<=e, all<=2e or all<=K");
    }
    std::string kind = text.substr(0, pos), bound = text.substr(pos + 2);
    if (kind != "weight" && kind != "all") {
        throw UsageError("--sweep must start with weight<= or all<=");
    }
    if (bound == "e") {
        return e;
    }
    if (bound == "2e") {
        return 2 * e;
    }
    size_t used = 0;
    size_t k = 0;
    try {
        k = std::stoul(bound, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != bound.size()) {
        throw UsageError("--sweep bound must be e, 2e or an integer");
    }
    return k;
}

Json sweep_json(const SweepResult &s) {
    Json hist = Json::array();
    for (const auto &[p, count] : s.residuals) {
        hist.push_back(Json{{"a", p.a}, {"b", p.b}, {"count", count}});
    }
    return Json{
        {"max_weight", s.max_weight},
        {"tried", s.tried},
        {"recovered", s.recovered},
        {"misses", s.misses},
        {"invalid_residuals", s.invalid_residuals},
        {"residuals", hist},
    };
}

Report cmd_simulate(const Options &o, const std::vector<std::string> &args) {
    Report report("simulate", args);
    size_t max_weight = parse_sweep(o.sweep, o.e);
    PuncturedQuantumCode code = obtain_code(o, report);
    Decoder dec;
    try {
        Timer t(report, "decoder");
        dec = build_decoder(code, o.e, o.config.strict_decoder, o.config.guards);
    } catch (const SyndromeCollision &ex) {
        report.check("distinct_syndromes", false, ex.what());
        return report;
    }
    Timer t(report, "sweep");
    SweepResult correctable = simulate_sweep(code, dec, std::min(o.e, max_weight), o.config.guards);
    report.check(
        "weight<=e_recovered", correctable.recovered == correctable.tried, "",
        Json{{"tried", correctable.tried}, {"recovered", correctable.recovered}});
    SweepResult full = max_weight <= o.e ? correctable : simulate_sweep(code, dec, max_weight, o.config.guards);
    report.check("residuals_are_logical_errors", full.invalid_residuals == 0 && correctable.invalid_residuals == 0);
    report.result()["sweep"] = sweep_json(full);
    return report;
}

// -------------------------------------------------------------- transversal

void check_gate(Report &report, const PuncturedQuantumCode &code, const std::string &name,
                const std::function<TransversalGate()> &make) {
    try {
        TransversalGate gate = make();
        LogicalActionReport r = verify_logical_action(code, gate);
        report.check(
            "gate " + name, r.pass, r.witness,
            Json{{"induced", to_json(r.induced)}, {"reflected", r.reflected}, {"in_code", r.in_code}});
    } catch (const std::exception &ex) {
        report.check("gate " + name, false, ex.what());
    }
}

Report cmd_transversal(const Options &o, const std::vector<std::string> &args) {
    Report report("transversal verify", args);
    static const std::vector<std::string> kGates{"increment", "phase", "fourier", "cadd", "all"};
    if (std::find(kGates.begin(), kGates.end(), o.gate) == kGates.end()) {
        throw UsageError("--gate must be increment, phase, fourier, cadd or all");
    }
    PuncturedQuantumCode code = obtain_code(o, report);
    Timer t(report, "gates");
    bool all = o.gate == "all";
    if (all || o.gate == "increment") {
        check_gate(report, code, "increment", [&] { return logical_increment(code); });
    }
    if (all || o.gate == "phase") {
        check_gate(report, code, "phase", [&] { return logical_phase(code); });
        try {
            report.result()["phase_vector"] = phase_vector(code);
        } catch (const NoPhaseVector &) {
        }
    }
    if (all || o.gate == "fourier") {
        if (!o.config.slow && ambient_size(code.n, code.l) > kSlowTierAmbient) {
            throw UsageError("Fourier verification on this code is slow-tier; pass --slow");
        }
        check_gate(report, code, "fourier", [&] { return transversal_fourier(code, o.config.guards).gate; });
    }
    if (all || o.gate == "cadd") {
        check_gate(report, code, "cadd", [&] { return logical_cadd(code); });
    }
    if (all) {
        try {
            report.check("logical_clock_shift_relation", verify_clock_shift(code));
            TransversalGate inc = logical_increment(code);
            TransversalGate phase = logical_phase(code);
            bool group_ok = true;
            for (std::uint32_t a = 0; a < code.n; a++) {
                for (std::uint32_t b = 0; b < code.n; b++) {
                    TransversalGate g = compose_gates(gate_power(inc, b), gate_power(phase, a));
                    group_ok = group_ok && verify_logical_action(code, g).pass;
                }
            }
            report.check("transversal_error_group", group_ok);
        } catch (const std::exception &ex) {
            report.check("transversal_error_group", false, ex.what());
        }
    }
    return report;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Exact nice error bases and punctured quantum codes", "nicebases"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output", o.output, "Also write the JSON report to this file");
    app.add_flag("--no-timing", o.no_timing, "Omit the timing section");
    app.add_option("--max-ambient", o.max_ambient, "Cap on exhaustive enumeration size");
    app.add_option("--max-dense-dim", o.max_dense_dim, "Cap on dense matrix dimension");
    app.add_flag("--lenient", o.lenient, "Fill missing decoder syndromes by bounded search");
    app.add_flag("--slow", o.config.slow, "Allow slow-tier work");

    auto add_basis_source = [&o](CLI::App *sub) {
        sub->add_option("--shift-clock", o.shift_clock, "Shift/clock basis E_omega of dimension n");
        sub->add_option("--labeling", o.labeling, "cyclic (D^i C^j) or shift (D^i X^j)");
        sub->add_flag("--qubit", o.qubit, "Qubit basis {I, N, S, NS}");
        sub->add_flag("--qubit-det-one", o.qubit_det_one, "Qubit basis {I, iN, iS, NS}");
    };
    auto add_code_source = [&o](CLI::App *sub) {
        sub->add_option("--c", o.c_file, "Generator file for C");
        sub->add_option("--d", o.d_file, "Generator file for D (default dual(C))");
        sub->add_option("--convention", o.convention, "literal, swapped or auto")
            ->check(CLI::IsMember({"literal", "swapped", "auto"}));
        sub->add_option("--code", o.code_file, "Code cache written by 'code build'");
    };

    std::string action;
    CLI::App *basis = app.add_subcommand("basis", "Error basis constructions");
    basis->require_subcommand(1);
    CLI::App *basis_build = basis->add_subcommand("build", "Print basis elements");
    add_basis_source(basis_build);
    basis_build->callback([&] { action = "basis build"; });
    CLI::App *basis_verify = basis->add_subcommand("verify", "Verify basis axioms");
    add_basis_source(basis_verify);
    basis_verify->callback([&] { action = "basis verify"; });
    basis->add_subcommand("egner", "Non-abelian index group example")->callback([&] { action = "basis egner"; });

    CLI::App *code = app.add_subcommand("code", "Punctured quantum codes");
    code->require_subcommand(1);
    CLI::App *code_build = code->add_subcommand("build", "Build a code and cache it");
    add_code_source(code_build);
    code_build->add_option("--out", o.out_file, "Cache file to write (empty to skip)");
    code_build->callback([&] { action = "code build"; });
    CLI::App *code_check = code->add_subcommand("check", "Eigenspace, error-correction and distance checks");
    add_code_source(code_check);
    code_check->add_option("--e", o.e, "Correctable weight");
    code_check->add_flag("--exhaustive", o.exhaustive, "Also run the state-level check");
    code_check->add_flag("--table", o.table, "Always emit the lambda table");
    code_check->callback([&] { action = "code check"; });
    CLI::App *decode = code->add_subcommand("decode-table", "Syndrome table");
    add_code_source(decode);
    decode->add_option("--e", o.e, "Correctable weight");
    decode->callback([&] { action = "code decode-table"; });
    auto add_simulate = [&](CLI::App *sub) {
        add_code_source(sub);
        sub->add_option("--e", o.e, "Correctable weight");
        sub->add_option("--sweep", o.sweep, "weight<=e, all<=2e or all<=K");
        sub->callback([&] { action = "simulate"; });
    };
    add_simulate(code->add_subcommand("simulate", "Exhaustive recovery sweep"));
    add_simulate(app.add_subcommand("simulate", "Exhaustive recovery sweep"));

    CLI::App *transversal = app.add_subcommand("transversal", "Transversal logical gates");
    transversal->require_subcommand(1);
    CLI::App *tverify = transversal->add_subcommand("verify", "Verify logical actions");
    add_code_source(tverify);
    tverify->add_option("--gate", o.gate, "increment, phase, fourier, cadd or all");
    tverify->callback([&] { action = "transversal verify"; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &ex) {
        return app.exit(ex, out, err);
    } catch (const CLI::ParseError &ex) {
        app.exit(ex, out, err);
        return 2;
    }

    try {
        apply_env_overrides(o.config);
        if (o.max_ambient) {
            o.config.guards.max_ambient = o.max_ambient;
        }
        if (o.max_dense_dim) {
            o.config.guards.max_dense_dim = o.max_dense_dim;
        }
        o.config.strict_decoder = !o.lenient;
        o.config.format = o.format == "text" ? OutputFormat::kText : OutputFormat::kJson;
        o.config.timing = !o.no_timing;

        static const std::map<std::string, std::function<Report(const Options &, const std::vector<std::string> &)>>
            kCommands{
                {"basis build", cmd_basis_build},
                {"basis verify", cmd_basis_verify},
                {"basis egner", cmd_basis_egner},
                {"code build", cmd_code_build},
                {"code check", cmd_code_check},
                {"code decode-table", cmd_decode_table},
                {"simulate", cmd_simulate},
                {"transversal verify", cmd_transversal},
            };
        Report report = kCommands.at(action)(o, args);
        Json j = report.to_json(o.config.timing);
        if (o.config.format == OutputFormat::kJson) {
            out << j.dump(2) << "\n";
        } else {
            out << report.to_text();
        }
        if (!o.output.empty()) {
            std::ofstream file(o.output);
            file << j.dump(2) << "\n";
        }
        return report.all_passed() ? 0 : 1;
    } catch (const UsageError &ex) {
        err << "usage error: " << ex.what() << "\n" << app.help();
        return 2;
    } catch (const std::exception &ex) {
        err << "error: " << ex.what() << "\n";
        return 3;
    }
}

}  // namespace nb
