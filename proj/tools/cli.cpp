// Copyright 2026 The mubking Authors
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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mubking/bell.hpp"
#include "mubking/json_io.hpp"
#include "mubking/meanking.hpp"
#include "mubking/mub.hpp"
#include "mubking/pauli.hpp"
#include "mubking/suite.hpp"
#include "mubking/wigner.hpp"

namespace mubking {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string mode = "galois";
    int dim = 0;
    int p = 0;
    int m = 1;
    int cls = -1;
    int k = 0;
    long trials = 10000;
    std::uint64_t seed = 20050501;
    bool exhaustive = false;
    bool json = false;
    bool csv = false;
    bool weyl = false;
    double tol = 0;
    std::string suite = "all";
    std::string target;
    std::string state_file;
};

std::string polynomial_text(const std::vector<int> &coeffs, char var = 'x') {
    if (coeffs.empty()) {
        return "";
    }
    std::ostringstream out;
    bool first = true;
    for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; d--) {
        int c = coeffs[d];
        if (c == 0) {
            continue;
        }
        if (!first) {
            out << " + ";
        }
        first = false;
        if (c != 1 || d == 0) {
            out << c;
        }
        if (d >= 1) {
            out << var;
        }
        if (d >= 2) {
            out << '^' << d;
        }
    }
    return out.str();
}

std::string complex_text(Complex z) {
    auto clean = [](double x) { return std::abs(x) < 5e-7 ? 0.0 : x; };
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << clean(z.real()) << (clean(z.imag()) < 0 ? "-" : "+")
        << std::abs(clean(z.imag())) << "i";
    return out.str();
}

void print_matrix(std::ostream &out, const Operator &op) {
    for (int r = 0; r < op.rows(); r++) {
        for (int c = 0; c < op.cols(); c++) {
            out << (c ? " " : "  ") << complex_text(op(r, c));
        }
        out << "\n";
    }
}

json header(const ArithmeticContext &ctx, const std::string &command) {
    json h;
    h["tool"] = "mubking";
    h["version"] = kToolVersion;
    h["command"] = command;
    h["mode"] = to_string(ctx.mode());
    h["dim"] = ctx.dim();
    h["characteristic"] = ctx.characteristic();
    if (ctx.is_galois()) {
        h["degree"] = ctx.degree();
        h["modulus"] = ctx.modulus();
        h["polynomial"] = polynomial_text(ctx.modulus());
    } else {
        h["polynomial"] = nullptr;
    }
    return h;
}

void print_header(std::ostream &out, const ArithmeticContext &ctx) {
    out << "mubking " << kToolVersion << "  mode=" << to_string(ctx.mode()) << "  N=" << ctx.dim();
    if (ctx.is_galois()) {
        out << "  GF(" << ctx.characteristic() << "^" << ctx.degree() << ") modulus " << polynomial_text(ctx.modulus());
    } else {
        out << "  Z/" << ctx.dim() << "Z";
    }
    out << "\n";
}

ArithmeticContext checked_context(const Options &o) {
    if (!admissible_dim(o.mode, o.dim)) {
        throw UsageError("dimension " + std::to_string(o.dim) + " is not admissible in " + o.mode + " mode");
    }
    return context_for_dim(parse_mode(o.mode), o.dim);
}

void dump_table(std::ostream &out, const std::string &name, std::span<const Element> table, int n) {
    out << name << "\n";
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < n; c++) {
            out << (c ? "," : "") << table[static_cast<size_t>(r) * n + c];
        }
        out << "\n";
    }
}

json table_json(std::span<const Element> table, int n) {
    json rows = json::array();
    for (int r = 0; r < n; r++) {
        rows.push_back(std::vector<Element>(table.begin() + r * n, table.begin() + (r + 1) * n));
    }
    return rows;
}

int cmd_field(const Options &o, std::ostream &out) {
    int dim = 1;
    if (o.mode == "modular") {
        dim = o.p;
    } else {
        for (int i = 0; i < o.m; i++) {
            dim *= o.p;
        }
        if (!is_prime(o.p)) {
            throw UsageError("--p must be prime in galois mode");
        }
    }
    Options with_dim = o;
    with_dim.dim = dim;
    ArithmeticContext ctx = checked_context(with_dim);
    int n = ctx.dim();
    std::optional<ExtensionContext> ext;
    if (ctx.is_galois()) {
        ext.emplace(ctx);
    }
    if (o.json) {
        json j = header(ctx, "field info");
        j["add"] = table_json(ctx.add_table(), n);
        j["mul"] = table_json(ctx.mul_table(), n);
        j["neg"] = std::vector<Element>(ctx.neg_table().begin(), ctx.neg_table().end());
        j["inv"] = std::vector<Element>(ctx.inv_table().begin(), ctx.inv_table().end());
        json chars = json::array();
        for (Element g = 0; g < n; g++) {
            chars.push_back(complex_to_json(ctx.character(g)));
        }
        j["character"] = chars;
        if (ext) {
            j["extension"] = {
                {"residue", ext->residue()},
                {"linear", ext->linear_coefficient()},
                {"relation", "t^2 = R + b*t"}};
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    print_header(out, ctx);
    if (ext) {
        out << "extension t^2 = " << ext->residue() << " + " << ext->linear_coefficient() << "*t  R=" << ext->residue()
            << "\n";
    }
    dump_table(out, "add", ctx.add_table(), n);
    dump_table(out, "mul", ctx.mul_table(), n);
    out << "inv\n";
    for (Element g = 0; g < n; g++) {
        out << (g ? "," : "") << ctx.inv_table()[g];
    }
    out << "\n";
    return kExitOk;
}

int cmd_pauli(const Options &o, std::ostream &out) {
    ArithmeticContext ctx = checked_context(o);
    int n = ctx.dim();
    if (o.cls > n) {
        throw UsageError("--class must be in 0.." + std::to_string(n));
    }
    PhaseSystem phases = build_phase_system(ctx);
    json ops = json::array();
    std::ostringstream text;
    for (Element a = 0; a < n; a++) {
        for (Element b = 0; b < n; b++) {
            Operator op;
            json entry;
            if (o.cls < 0) {
                op = displacement_v(ctx, a, b);
                entry = {{"shift", a}, {"phase", b}};
                text << "V shift=" << a << " phase=" << b << "\n";
            } else {
                if (b > 0) {
                    break;
                }
                op = displacement_u(ctx, phases, o.cls, a);
                entry = {{"class", o.cls}, {"l", a}};
                text << "U class=" << o.cls << " l=" << a << "\n";
            }
            entry["matrix"] = operator_to_json(op);
            ops.push_back(entry);
            print_matrix(text, op);
        }
    }
    if (o.json) {
        json j = header(ctx, "pauli dump");
        j["operators"] = ops;
        out << j.dump(2) << "\n";
    } else {
        print_header(out, ctx);
        out << text.str();
    }
    return kExitOk;
}

int cmd_mub(const Options &o, std::ostream &out) {
    ArithmeticContext ctx = checked_context(o);
    PhaseSystem phases = build_phase_system(ctx);
    MubFamily family = mub_family(ctx, phases);
    auto report = unbiasedness_report(family, o.tol);
    int n = ctx.dim();
    if (o.json) {
        json j = header(ctx, "mub");
        json bases = json::array();
        for (const auto &b : family.bases) {
            json states = json::array();
            for (int k = 0; k < n; k++) {
                states.push_back(ket_to_json(b.col(k)));
            }
            bases.push_back(states);
        }
        j["bases"] = bases;
        j["unbiased_pairs"] = report.unbiased_pairs;
        j["total_pairs"] = report.total_pairs();
        j["largest_unbiased_set"] = report.largest_unbiased_set;
        if (!ctx.is_galois()) {
            j["conjecture_bound"] = report.conjecture_bound;
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    if (o.csv) {
        out << "basis,k,q,re,im\n";
        out << std::setprecision(17);
        for (int b = 0; b < family.num_bases(); b++) {
            for (int k = 0; k < n; k++) {
                for (int q = 0; q < n; q++) {
                    Complex z = family.bases[b](q, k);
                    out << b << "," << k << "," << q << "," << z.real() << "," << z.imag() << "\n";
                }
            }
        }
        return kExitOk;
    }
    print_header(out, ctx);
    for (int b = 0; b < family.num_bases(); b++) {
        out << "basis " << b << " (column k is |e_k>)\n";
        print_matrix(out, family.bases[b]);
    }
    out << "unbiased pairs " << report.unbiased_pairs << "/" << report.total_pairs() << ", largest unbiased set "
        << report.largest_unbiased_set;
    if (!ctx.is_galois()) {
        out << ", bound p+1 = " << report.conjecture_bound;
    }
    out << "\n";
    return kExitOk;
}

int cmd_verify(const Options &o, std::ostream &out, std::ostream &err) {
    ArithmeticContext ctx = checked_context(o);
    SuiteConfig config;
    config.mode = ctx.mode();
    config.dim = o.dim;
    config.suite = o.target.empty() ? o.suite : o.target;
    config.tol = o.tol;
    config.seed = o.seed;
    config.trials = o.trials;
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), config.suite) == names.end()) {
        throw UsageError("unknown suite '" + config.suite + "'");
    }
    SuiteReport report = run_suite(config);
    if (o.json) {
        json j = header(ctx, "verify");
        j["suite"] = config.suite;
        j["seed"] = config.seed;
        json checks = json::array();
        for (const auto &c : report.checks) {
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"asserted", c.asserted}, {"detail", c.detail}});
        }
        j["checks"] = checks;
        j["ok"] = report.ok();
        out << j.dump(2) << "\n";
    } else {
        print_header(out, ctx);
        for (const auto &c : report.checks) {
            const char *status = c.passed ? "PASS" : (c.asserted ? "FAIL" : "NOTE");
            out << std::left << std::setw(6) << status << std::setw(34) << c.name << c.detail << "\n";
        }
    }
    if (const CheckResult *bad = report.first_failure()) {
        err << "verify: property '" << bad->name << "' failed: " << bad->detail << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_bell(const Options &o, std::ostream &out) {
    ArithmeticContext ctx = checked_context(o);
    int n = ctx.dim();
    if (o.k < 1 || o.k > n) {
        throw UsageError("--k must be in 1.." + std::to_string(n));
    }
    PhaseSystem phases = build_phase_system(ctx);
    json rows = json::array();
    std::ostringstream text;
    text << "m,n,m',n',phase\n";
    for (Element m = 0; m < n; m++) {
        for (Element j = 0; j < n; j++) {
            BellImage img = bell_transform(ctx, phases, o.k, m, j);
            rows.push_back({{"m", m}, {"n", j}, {"m_image", img.m}, {"n_image", img.n}, {"phase", complex_to_json(img.phase)}});
            text << m << "," << j << "," << img.m << "," << img.n << "," << complex_text(img.phase) << "\n";
        }
    }
    if (o.json) {
        json jj = header(ctx, "bell map");
        jj["k"] = o.k;
        jj["map"] = rows;
        out << jj.dump(2) << "\n";
    } else {
        print_header(out, ctx);
        out << text.str();
    }
    return kExitOk;
}

int cmd_king(const Options &o, std::ostream &out, std::ostream &err) {
    ArithmeticContext ctx = checked_context(o);
    PhaseSystem phases = build_phase_system(ctx);
    MubFamily family = mub_family(ctx, phases);
    std::optional<ExtensionContext> ext;
    if (ctx.is_galois()) {
        ext.emplace(ctx);
    }
    MeanKingBasis basis = ext ? mean_king_basis(family, *ext, phases) : mean_king_basis(family, phases);
    ProtocolMode mode = o.exhaustive ? ProtocolMode::exhaustive : ProtocolMode::monte_carlo;
    ProtocolReport report = run_protocol(basis, family, mode, o.trials, o.seed, o.tol);
    if (o.json) {
        json j = header(ctx, "king run");
        j["protocol"] = to_string(report.mode);
        j["seed"] = report.seed;
        j["trials"] = report.trials;
        j["successes"] = report.successes;
        j["success_rate"] = report.success_rate();
        if (ext) {
            j["residue"] = ext->residue();
        }
        json hist = json::array();
        for (const auto &[key, count] : report.histogram) {
            hist.push_back({{"k", key[0]}, {"l", key[1]}, {"i1", key[2]}, {"i2", key[3]}, {"count", count}});
        }
        j["histogram"] = hist;
        out << j.dump(2) << "\n";
    } else {
        print_header(out, ctx);
        out << "protocol " << to_string(report.mode) << "  seed " << report.seed << "\n";
        out << "successes " << report.successes << "/" << report.trials << "  rate " << report.success_rate() << "\n";
    }
    if (report.successes != report.trials) {
        err << "king: inference failed in " << (report.trials - report.successes) << " trials\n";
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_wigner(const Options &o, std::ostream &out, std::ostream &err) {
    ArithmeticContext ctx = checked_context(o);
    if (!ctx.is_galois()) {
        throw UsageError("wigner needs galois mode");
    }
    int n = ctx.dim();
    std::ifstream in(o.state_file);
    if (!in) {
        throw UsageError("cannot read " + o.state_file);
    }
    Operator rho;
    try {
        rho = operator_from_json(json::parse(in));
    } catch (const std::exception &e) {
        throw UsageError("malformed state file: " + std::string(e.what()));
    }
    if (rho.rows() != n) {
        throw UsageError("state dimension " + std::to_string(rho.rows()) + " does not match --dim");
    }
    PhaseSystem phases = build_phase_system(ctx);
    MubFamily family = mub_family(ctx, phases);
    ExtensionContext ext(ctx);
    WignerOperatorSet set = wigner_operator_set(ext, phases, o.tol);
    std::vector<double> grid(static_cast<size_t>(n) * n);
    try {
        for (Element a = 0; a < n; a++) {
            for (Element b = 0; b < n; b++) {
                grid[a * n + b] = wigner_function(set, rho, a, b, o.tol);
            }
        }
    } catch (const std::domain_error &e) {
        err << "wigner: " << e.what() << "\n";
        return kExitFailure;
    }
    // Line sums over every striation against N·<e|rho|e>.
    json marginals = json::array();
    bool marginals_ok = true;
    for (int k = 0; k <= n; k++) {
        json probs = json::array();
        bool ok = true;
        for (Element line = 0; line < n; line++) {
            double sum = 0;
            for (const auto &pt : striation_line(ctx, k, line)) {
                sum += grid[pt.first * n + pt.second];
            }
            Ket e = family.state(k, line);
            double expected = n * (e.adjoint() * rho * e)(0, 0).real();
            ok = ok && std::abs(sum - expected) <= 1e3 * o.tol;
            probs.push_back(sum / n);
        }
        marginals_ok = marginals_ok && ok;
        marginals.push_back({{"basis", k}, {"probabilities", probs}, {"ok", ok}});
    }
    if (o.json) {
        json j = header(ctx, "wigner");
        json rows = json::array();
        for (int a = 0; a < n; a++) {
            rows.push_back(std::vector<double>(grid.begin() + a * n, grid.begin() + (a + 1) * n));
        }
        j["wigner"] = rows;
        j["marginals"] = marginals;
        if (o.weyl) {
            json weyl = json::array();
            for (Element m = 0; m < n; m++) {
                json row = json::array();
                for (Element k = 0; k < n; k++) {
                    row.push_back(complex_to_json(weyl_function(ctx, phases, rho, m, k)));
                }
                weyl.push_back(row);
            }
            j["weyl"] = weyl;
        }
        out << j.dump(2) << "\n";
    } else {
        print_header(out, ctx);
        out << "wigner (row i1, column i2)\n";
        out << std::fixed << std::setprecision(6);
        for (int a = 0; a < n; a++) {
            for (int b = 0; b < n; b++) {
                double v = grid[a * n + b];
                out << (b ? " " : "  ") << std::setw(10) << (std::abs(v) < 5e-7 ? 0.0 : v);
            }
            out << "\n";
        }
        if (o.weyl) {
            out << "weyl (row shift m, column phase n)\n";
            for (Element m = 0; m < n; m++) {
                for (Element k = 0; k < n; k++) {
                    out << (k ? " " : "  ") << complex_text(weyl_function(ctx, phases, rho, m, k));
                }
                out << "\n";
            }
        }
        for (const auto &mg : marginals) {
            out << "marginal basis " << mg["basis"].get<int>() << ": " << (mg["ok"].get<bool>() ? "ok" : "MISMATCH")
                << "\n";
        }
    }
    if (!marginals_ok) {
        err << "wigner: striation marginals do not reproduce the MUB probabilities\n";
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace

bool admissible_dim(const std::string &mode, int dim) {
    if (mode == "galois") {
        static const std::vector<int> dims{2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
        return std::find(dims.begin(), dims.end(), dim) != dims.end();
    }
    if (mode == "modular") {
        return dim >= 3 && dim <= 21 && dim % 2 == 1;
    }
    return false;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    o.tol = default_tolerance();
    CLI::App app{"Mutually unbiased bases, the Mean King problem and discrete Wigner functions", "mubking"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    auto add_common = [&](CLI::App *cmd, bool with_dim) {
        if (with_dim) {
            cmd->add_option("--dim", o.dim, "dimension N")->required();
        }
        cmd->add_option("--mode", o.mode, "arithmetic")->check(CLI::IsMember({"galois", "modular"}));
        cmd->add_option("--tol", o.tol, "comparison tolerance")->check(CLI::PositiveNumber);
        cmd->add_flag("--json", o.json, "JSON output");
    };

    auto *field = app.add_subcommand("field", "field tables");
    auto *field_info = field->add_subcommand("info", "addition and multiplication tables");
    field->require_subcommand(1);
    add_common(field_info, false);
    field_info->add_option("--p", o.p, "characteristic (modulus in modular mode)")->required();
    field_info->add_option("--m", o.m, "extension degree")->check(CLI::Range(1, 8));

    auto *pauli = app.add_subcommand("pauli", "displacement operators");
    auto *pauli_dump = pauli->add_subcommand("dump", "print V operators, or U operators of one class");
    pauli->require_subcommand(1);
    add_common(pauli_dump, true);
    pauli_dump->add_option("--class", o.cls, "commuting class 0..N")->check(CLI::NonNegativeNumber);

    auto *mub = app.add_subcommand("mub", "the N+1 bases");
    add_common(mub, true);
    mub->add_flag("--csv", o.csv, "CSV output");

    auto *verify = app.add_subcommand("verify", "run the property suite");
    add_common(verify, true);
    verify->add_option("target", o.target, "suite name (same as --suite)");
    verify->add_option("--suite", o.suite, "all|field|pauli|mub|bell|king|wigner");
    verify->add_option("--seed", o.seed, "sampling seed");
    verify->add_option("--trials", o.trials, "Monte-Carlo trials")->check(CLI::NonNegativeNumber);

    auto *bell = app.add_subcommand("bell", "Bell states");
    auto *bell_map = bell->add_subcommand("map", "basis-k Bell states in terms of basis-0 ones");
    bell->require_subcommand(1);
    add_common(bell_map, true);
    bell_map->add_option("--k", o.k, "basis 1..N")->required();

    auto *king = app.add_subcommand("king", "Mean King protocol");
    auto *king_run = king->add_subcommand("run", "simulate the protocol");
    king->require_subcommand(1);
    add_common(king_run, true);
    king_run->add_option("--trials", o.trials, "Monte-Carlo trials")->check(CLI::NonNegativeNumber);
    king_run->add_option("--seed", o.seed, "random seed");
    king_run->add_flag("--exhaustive", o.exhaustive, "enumerate every branch");

    auto *wigner = app.add_subcommand("wigner", "Wigner function of a density matrix");
    add_common(wigner, true);
    wigner->add_option("--state", o.state_file, "JSON density matrix of [re, im] pairs")->required();
    wigner->add_flag("--weyl", o.weyl, "also print the Weyl function");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (field_info->parsed()) {
            return cmd_field(o, out);
        }
        if (pauli_dump->parsed()) {
            return cmd_pauli(o, out);
        }
        if (mub->parsed()) {
            return cmd_mub(o, out);
        }
        if (verify->parsed()) {
            return cmd_verify(o, out, err);
        }
        if (bell_map->parsed()) {
            return cmd_bell(o, out);
        }
        if (king_run->parsed()) {
            return cmd_king(o, out, err);
        }
        if (wigner->parsed()) {
            return cmd_wigner(o, out, err);
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const VerificationError &e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::invalid_argument &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace mubking
