#include "ldi/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ldi/report.hpp"

namespace ldi {

namespace {

struct Options {
    std::string file;
    std::string out_path;
    std::string source_path;
    std::int64_t to_p = 0;
    std::int64_t p = 0;
    std::vector<std::int64_t> primes;
    std::int64_t max_weight = -1;
    std::int64_t distance = 0;
    bool json = false;
    bool centered = false;
    bool oracle = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << content;
}

PrimeModulus prime_flag(std::int64_t v, const char *flag) {
    if (!is_prime(v)) throw UsageError(std::string(flag) + " " + std::to_string(v) + " is not prime");
    return PrimeModulus(v);
}

bool parse_error_kind(ErrorKind k) {
    switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::HeaderMismatch:
    case ErrorKind::NonPrimeModulus:
    case ErrorKind::YRequiresQubit:
        return true;
    default:
        return false;
    }
}

void print_matrix(std::ostream &out, const IntMatrix &m, std::size_t split, const std::string &indent = "  ") {
    std::size_t width = 1;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (auto v : m.row(r)) width = std::max(width, std::to_string(v).size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << indent;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c == split && split != 0) out << " |";
            if (c != 0) out << ' ';
            out << std::setw(static_cast<int>(width)) << m(r, c);
        }
        out << '\n';
    }
}

std::string step_text(const TransformStep &s) {
    return std::visit(
        [](const auto &o) -> std::string {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, RowScale>) {
                return "RowScale(" + std::to_string(o.row) + ", " + std::to_string(o.factor) + ")";
            } else if constexpr (std::is_same_v<T, RowAdd>) {
                return "RowAdd(" + std::to_string(o.target) + ", " + std::to_string(o.source) + ", " +
                       std::to_string(o.factor) + ")";
            } else if constexpr (std::is_same_v<T, RowSwap>) {
                return "RowSwap(" + std::to_string(o.a) + ", " + std::to_string(o.b) + ")";
            } else if constexpr (std::is_same_v<T, RegisterSwap>) {
                return "RegisterSwap(" + std::to_string(o.i) + ", " + std::to_string(o.j) + ")";
            } else {
                return "HadamardSwap(" + std::to_string(o.reg) + ")";
            }
        },
        s);
}

std::string opt_text(const std::optional<std::size_t> &v) { return v ? std::to_string(*v) : "-"; }

void emit_json(std::ostream &out, const report::Json &j) { out << j.dump(2) << '\n'; }

int cmd_info(const Options &o, std::ostream &out) {
    const CodeSpec c = parse_code_file(read_file(o.file));
    if (o.json) {
        emit_json(out, report::info(c));
        return kExitOk;
    }
    out << "q = " << c.q().value() << ", n = " << c.n() << ", k = " << c.k()
        << (c.unbounded_entries() ? " (unbounded entries)" : "") << '\n';
    const std::size_t rank = rank_mod(c.generators(), c.q());
    out << "rank mod q = " << rank << (rank == c.k() ? "" : "  (generators are dependent)") << '\n';
    if (rank == c.k()) {
        const EntanglementReport e = min_entanglement(c);
        out << "c = " << e.c << ", s = " << e.s << ", logical qudits n+c-k = "
            << static_cast<std::int64_t>(c.n() + e.c) - static_cast<std::int64_t>(c.k()) << '\n';
        for (const auto &pr : e.noncommuting_pairs) {
            out << "  generators " << pr.i << " and " << pr.j << " do not commute (product " << pr.value << ")\n";
        }
    }
    out << "generators:\n";
    print_matrix(out, c.generators(), c.n());
    if (!c.unbounded_entries()) {
        for (std::size_t i = 0; i < c.k(); ++i) out << "  " << format_pauli_string(c.generator(i)) << '\n';
    }
    return rank == c.k() ? kExitOk : kExitFailed;
}

int cmd_canonical(const Options &o, std::ostream &out) {
    const CodeSpec c = parse_code_file(read_file(o.file));
    const CanonicalForm cf = canonicalize(c);
    if (!o.out_path.empty()) write_file(o.out_path, format_code_file(cf.code, {"canonical form"}));
    if (o.json) {
        emit_json(out, report::canonical(cf));
        return kExitOk;
    }
    out << "canonical form over q = " << cf.code.q().value() << ":\n";
    print_matrix(out, cf.code.generators(), cf.code.n());
    out << "log (" << cf.log.size() << " steps, Hadamard (x, z) -> (-z, x)):\n";
    for (const auto &s : cf.log) out << "  " << step_text(s) << '\n';
    return kExitOk;
}

int cmd_transform(const Options &o, std::ostream &out) {
    const CodeSpec c = parse_code_file(read_file(o.file));
    if (o.to_p == 0) throw UsageError("transform needs --to-p");
    const PrimeModulus p = prime_flag(o.to_p, "--to-p");
    const NRepresentative rep = o.centered ? NRepresentative::Centered : NRepresentative::Exact;
    const TransformResult r = transform(c, p, rep);
    if (!o.out_path.empty()) {
        std::ostringstream l_text;
        for (std::size_t i = 0; i < r.l.rows(); ++i) {
            l_text << (i == 0 ? "" : "; ");
            for (std::size_t j = 0; j < r.l.cols(); ++j) l_text << (j == 0 ? "" : " ") << r.l(i, j);
        }
        write_file(o.out_path, format_code_file(r.output_code(),
                                                {"lifted from q = " + std::to_string(c.q().value()) + " to p = " +
                                                     std::to_string(p.value()) + " (" + r.label() + ")",
                                                 "L = " + l_text.str()}));
    }
    const VerificationReport v = verify(r);
    if (o.json) {
        emit_json(out, report::transform(r, rep));
    } else {
        out << "q = " << c.q().value() << " -> p = " << p.value() << " (" << r.label() << "), nu = "
            << r.decomposition.nu << ", nu^-1 = " << r.decomposition.nu_inv << '\n';
        out << "canonical form:\n";
        print_matrix(out, r.source.code.generators(), c.n());
        out << "L:\n";
        print_matrix(out, r.l, 0);
        out << "output:\n";
        print_matrix(out, r.output, c.n());
        out << "mod-q match: " << v.matches_source_mod_q << ", commutes mod p: " << v.commutes_mod_p
            << ", L lower/q-divisible: " << v.l_lower_and_q_divisible << ", max |entry|: " << v.max_entry_observed
            << '\n';
    }
    return v.passed() ? kExitOk : kExitFailed;
}

int cmd_verify(const Options &o, std::ostream &out) {
    const CodeSpec c = parse_code_file(read_file(o.file));
    const PrimeModulus p = o.p != 0 ? prime_flag(o.p, "--p") : c.q();
    report::Json j;
    j["p"] = p.value();
    bool ok = true;
    if (!o.source_path.empty()) {
        const CodeSpec src = parse_code_file(read_file(o.source_path));
        CanonicalForm canon = canonicalize(src);
        if (canon.code.k() != c.k() || canon.code.n() != c.n()) {
            throw Error(ErrorKind::DimensionMismatch, "source and lifted code have different shapes");
        }
        IntMatrix l(c.k(), c.k());
        for (std::size_t i = 0; i < c.k(); ++i)
            for (std::size_t jj = 0; jj < c.k(); ++jj)
                l(i, jj) = c.generators()(i, c.n() + jj) - canon.code.generators()(i, c.n() + jj);
        const PrimeModulus q = canon.code.q();
        TransformResult r{std::move(canon), p, std::move(l), c.generators(),
                          CommutatorDecomposition{q, p, p.reduce(q.value()), 0, {}}};
        const VerificationReport v = verify(r);
        ok = v.passed();
        j["source_q"] = q.value();
        j["verification"] = report::verification(v);
        if (!o.json) {
            out << "mod-q match: " << v.matches_source_mod_q << "\ncommutes mod " << p.value() << ": "
                << v.commutes_mod_p << "\nL lower/q-divisible: " << v.l_lower_and_q_divisible
                << "\nmax |entry|: " << v.max_entry_observed << '\n';
        }
    } else {
        const bool commutes = commutator_matrix(c.generators(), Modulus::finite(p)).is_zero();
        ok = commutes;
        j["commutes_mod_p"] = commutes;
        j["max_entry_observed"] = c.generators().max_abs();
        if (!o.json) out << "commutes mod " << p.value() << ": " << commutes << '\n';
    }
    j["passed"] = ok;
    if (o.json) emit_json(out, j);
    else out << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitFailed;
}

int cmd_distance(const Options &o, std::ostream &out) {
    const CodeSpec c = parse_code_file(read_file(o.file));
    const PrimeModulus p = o.p != 0 ? prime_flag(o.p, "--p") : c.q();
    const std::size_t cap = o.max_weight < 0 ? c.n() : static_cast<std::size_t>(o.max_weight);
    const DistanceReport d = o.oracle ? oracle_distance(c.generators(), p) : detection_distance(c.generators(), p, cap);
    if (o.json) {
        emit_json(out, report::distance(d));
        return kExitOk;
    }
    out << "distance at p = " << p.value() << ": " << opt_text(d.distance()) << '\n';
    out << "  d_pure = " << opt_text(d.d_pure) << ", d = " << opt_text(d.d)
        << (d.kernel_is_isotropic ? " (every undetectable error is in the group)" : "") << '\n';
    if (d.witness) out << "  witness: " << format_pauli_string(*d.witness) << '\n';
    out << "  degenerate: " << d.degenerate << ", cap hit: " << d.cap_hit << '\n';
    return kExitOk;
}

int cmd_bounds(const Options &o, std::ostream &out) {
    const CodeSpec c = parse_code_file(read_file(o.file));
    std::int64_t d = o.distance;
    if (d == 0 && c.declared().d) d = *c.declared().d;
    if (d <= 0) throw UsageError("bounds needs --distance or a declared d");
    const BoundsReport b = threshold(c, static_cast<std::uint64_t>(d));
    if (o.json) {
        emit_json(out, report::bounds(c, b));
        return kExitOk;
    }
    out << "B = " << b.b.to_string() << '\n' << "p* = " << b.p_star.to_string() << " (d = " << d << ")\n";
    if (d == 1) out << "note: d = 1 uses 0^0 = 1, so p* = 1\n";
    return kExitOk;
}

int cmd_rates(const Options &o, std::ostream &out) {
    const CodeSpec c = parse_code_file(read_file(o.file));
    const EntanglementReport e = min_entanglement(c);
    const RatesReport r = rates(c.n(), c.k(), e.c);
    if (o.json) {
        emit_json(out, report::rates(r));
        return kExitOk;
    }
    out << "n = " << r.n << ", k = " << r.k << ", c = " << r.c << '\n';
    out << "entanglement-assisted rate: " << r.entanglement_assisted.to_string() << '\n';
    out << "trade-off rate: (" << r.tradeoff_rate.to_string() << ", " << r.tradeoff_entanglement.to_string() << ")\n";
    out << "catalytic rate: " << r.catalytic.to_string() << '\n';
    return kExitOk;
}

int cmd_scan(const Options &o, std::ostream &out) {
    const CodeSpec c = parse_code_file(read_file(o.file));
    if (o.primes.empty()) throw UsageError("scan needs --primes");
    std::vector<PrimeModulus> primes;
    for (auto v : o.primes) primes.push_back(prime_flag(v, "--primes"));
    const std::size_t cap = o.max_weight < 0 ? c.n() : static_cast<std::size_t>(o.max_weight);
    const ScanReport s = prime_scan(c, primes, cap);

    bool ok = true;
    for (const auto &e : s.entries) ok = ok && !e.error && e.verification && e.verification->passed();
    if (o.json) {
        emit_json(out, report::scan(s));
        return ok ? kExitOk : kExitFailed;
    }
    out << "source distance: " << opt_text(s.source_distance)
        << (s.source_distance_declared ? " (declared)" : " (measured)") << '\n';
    out << std::setw(6) << "p" << std::setw(18) << "label" << std::setw(10) << "verified" << std::setw(10)
        << "distance" << std::setw(11) << "preserved" << std::setw(10) << "max|e|" << '\n';
    for (const auto &e : s.entries) {
        out << std::setw(6) << e.p.value();
        if (e.error) {
            out << "  error: " << e.error->what() << '\n';
            continue;
        }
        out << std::setw(18) << e.result->label() << std::setw(10) << (e.verification->passed() ? "yes" : "NO")
            << std::setw(10) << opt_text(e.distance->distance()) << std::setw(11)
            << (e.distance_preserved ? (*e.distance_preserved ? "yes" : "no") : "-") << std::setw(10)
            << e.verification->max_entry_observed << '\n';
    }
    return ok ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    out << std::boolalpha;
    CLI::App app{"Qudit stabilizer / entanglement-assisted code toolkit", "ldi"};
    app.require_subcommand(1);
    Options o;

    auto file_cmd = [&](const char *name, const char *desc) {
        CLI::App *sub = app.add_subcommand(name, desc);
        sub->add_option("file", o.file, "code file")->required();
        sub->add_flag("--json", o.json, "emit JSON");
        return sub;
    };
    CLI::App *info = file_cmd("info", "parameters, entanglement and commutator matrix");
    CLI::App *canon = file_cmd("canonical", "bring to [I X2 | Z1 Z2] form");
    canon->add_option("-o", o.out_path, "write the canonical code file");
    CLI::App *trans = file_cmd("transform", "lift to an entanglement-free code over another prime");
    trans->add_option("--to-p", o.to_p, "target prime")->required();
    trans->add_option("-o", o.out_path, "write the lifted code file");
    trans->add_flag("--centered", o.centered, "re-center n_ij into (-p/2, p/2]");
    CLI::App *ver = file_cmd("verify", "check commutation (and, with --source, the full lift contract)");
    ver->add_option("--p", o.p, "prime (default: the file's q)");
    ver->add_option("--source", o.source_path, "original code file the lift was made from");
    CLI::App *dist = file_cmd("distance", "brute-force detection distance");
    dist->add_option("--p", o.p, "prime (default: the file's q)");
    dist->add_option("--max-weight", o.max_weight, "weight cap (default n)");
    dist->add_flag("--oracle", o.oracle, "exhaustive scan over all vectors instead");
    CLI::App *bnd = file_cmd("bounds", "entry bound B and prime threshold p*");
    bnd->add_option("--distance", o.distance, "distance d (default: declared d)");
    CLI::App *rat = file_cmd("rates", "entanglement-assisted, trade-off and catalytic rates");
    CLI::App *scn = file_cmd("scan", "transform, verify and measure distance at several primes");
    scn->add_option("--primes", o.primes, "comma-separated primes")->delimiter(',')->required();
    scn->add_option("--max-weight", o.max_weight, "weight cap (default n)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitParseError;
    }

    try {
        if (info->parsed()) return cmd_info(o, out);
        if (canon->parsed()) return cmd_canonical(o, out);
        if (trans->parsed()) return cmd_transform(o, out);
        if (ver->parsed()) return cmd_verify(o, out);
        if (dist->parsed()) return cmd_distance(o, out);
        if (bnd->parsed()) return cmd_bounds(o, out);
        if (rat->parsed()) return cmd_rates(o, out);
        if (scn->parsed()) return cmd_scan(o, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitParseError;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return parse_error_kind(e.kind()) ? kExitParseError : kExitFailed;
    }
    return kExitParseError;
}

}  // namespace ldi
