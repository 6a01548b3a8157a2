// Command-line front end.
//
// Exit status: 0 = all checks pass / agree, 1 = mathematical disagreement or a
// violated axiom, 2 = usage or I/O error.

#include <dslice/dslice.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace dslice;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

class UsageError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    std::string format = "text";
    std::string out;
    bool numeric = false;
    int precision = 8;
    long resolution = 0;
    std::string test_set = "auto";
};

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    throw UsageError("unsupported --format '" + format + "' for this command");
}

// Writes to --out when given, stdout otherwise.
void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw UsageError("cannot write '" + cfg.out + "'");
    f << text;
    if (!f) throw UsageError("failed writing '" + cfg.out + "'");
}

SeifertMatrix load_matrix(const std::string& spec, int epsilon = 0) {
    try {
        return resolve_matrix(spec, epsilon);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

std::vector<RootOfUnity> resolve_test_set(const SeifertMatrix& m, const RunConfig& cfg) {
    if (cfg.test_set == "auto") return auto_test_set(m, cfg.resolution);
    std::vector<RootOfUnity> out;
    std::stringstream ss(cfg.test_set);
    try {
        for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_root_of_unity(item));
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (out.empty()) throw UsageError("empty --test-set");
    return out;
}

std::string matrix_text(const IntMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "    ";
        for (std::size_t j = 0; j < m.cols(); ++j) os << std::setw(4) << m(i, j);
        os << "\n";
    }
    return os.str();
}

int cmd_pretzel(long p_max, long n_max, const RunConfig& cfg) {
    if (p_max < 1 || n_max < 1) throw UsageError("--p-max and --n-max must be at least 1");
    check_format(cfg.format, {"text", "csv", "json"});
    auto rows = pretzel_scan(p_max, n_max);
    bool all_agree = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.agree(); });
    std::ostringstream os;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"p", r.p}, {"n", r.n}, {"verdict", to_string(r.verdict)},
                           {"closed_form_obstructed", r.closed_form_obstructed}, {"agree", r.agree()}});
        os << json{{"rows", arr}, {"all_agree", all_agree}}.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "p,n,verdict,closed_form_obstructed,agree\n";
        for (const auto& r : rows)
            os << r.p << "," << r.n << "," << to_string(r.verdict) << "," << (r.closed_form_obstructed ? "true" : "false")
               << "," << (r.agree() ? "true" : "false") << "\n";
    } else {
        os << std::left << std::setw(5) << "p" << std::setw(6) << "n" << std::setw(14) << "verdict" << std::setw(13)
           << "closed-form" << "agree\n";
        for (const auto& r : rows)
            os << std::left << std::setw(5) << r.p << std::setw(6) << r.n << std::setw(14) << to_string(r.verdict)
               << std::setw(13) << (r.closed_form_obstructed ? "true" : "false") << (r.agree() ? "yes" : "NO") << "\n";
    }
    emit(cfg, os.str());
    if (!all_agree) std::cerr << "pipeline and closed form disagree on at least one pair\n";
    return all_agree ? kOk : kMathFailure;
}

int cmd_signature(const std::string& matrix_spec, const std::string& omega_text, const RunConfig& cfg) {
    check_format(cfg.format, {"text", "json"});
    SeifertMatrix m = load_matrix(matrix_spec);
    std::optional<RootOfUnity> omega;
    double turn = 0.0;
    if (omega_text.find('/') != std::string::npos) {
        try {
            omega = parse_root_of_unity(omega_text);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        turn = static_cast<double>(omega->k()) / static_cast<double>(omega->m());
    } else {
        if (!cfg.numeric) throw UsageError("omega must be k/m in exact mode (decimal turns need --numeric)");
        try {
            turn = std::stod(omega_text);
        } catch (const std::exception&) {
            throw UsageError("cannot parse omega '" + omega_text + "'");
        }
        turn -= std::floor(turn);
        if (turn == 0.0) throw UsageError("omega = 1 is excluded");
    }

    json report{{"matrix", matrix_spec}, {"omega", omega ? to_string(*omega) : std::to_string(turn)},
                {"mode", cfg.numeric ? "numeric" : "exact"}};
    int value = 0;
    if (cfg.numeric) {
        value = numeric_signature(m, turn, cfg.precision);
        report["precision"] = cfg.precision;
    } else {
        HermitianMatrix h = hermitian_matrix(m, *omega);
        value = m.size() ? signature(h) : 0;
        json cp = json::array();
        for (const auto& c : characteristic_polynomial(h)) cp.push_back(to_string(c));
        report["characteristic_polynomial"] = cp;  // ascending coefficients, z = e^{2 pi i/m}
    }
    report["signature"] = value;
    emit(cfg, cfg.format == "json" ? report.dump(2) + "\n" : std::to_string(value) + "\n");
    return kOk;
}

int cmd_dsbound(const std::string& matrix_spec, const RunConfig& cfg) {
    check_format(cfg.format, {"text", "json"});
    SeifertMatrix m = load_matrix(matrix_spec);
    auto tests = resolve_test_set(m, cfg);
    DsBound b = bing_double_ds_bound(m, tests);
    if (cfg.format == "json") {
        json j = to_json(b);
        j["matrix"] = matrix_spec;
        j["note"] = "lower bound for g_ds of the Bing double; meaningful when the matrix is that of a slice knot";
        emit(cfg, j.dump(2) + "\n");
    } else {
        std::string line = std::to_string(b.bound);
        if (b.witness) line += " at " + to_string(*b.witness) + " (signature " + std::to_string(b.witness_signature) + ")";
        emit(cfg, line + "\n");
    }
    return kOk;
}

int cmd_formcheck(const std::string& matrix_spec, const std::string& epsilon_text, long bound, const RunConfig& cfg) {
    check_format(cfg.format, {"text", "json"});
    int epsilon = 0;
    if (!epsilon_text.empty()) {
        if (epsilon_text == "+1" || epsilon_text == "1") epsilon = 1;
        else if (epsilon_text == "-1") epsilon = -1;
        else throw UsageError("epsilon must be +1 or -1");
    }
    if (bound < 1) throw UsageError("--bound must be at least 1");
    SeifertMatrix m = load_matrix(matrix_spec, epsilon);
    json report{{"matrix", matrix_spec}, {"epsilon", m.epsilon()}};
    std::ostringstream text;
    text << "matrix " << matrix_spec << " (epsilon " << (m.epsilon() > 0 ? "+1" : "-1") << ", rank " << m.size()
         << ")\n";

    SeifertForm form;
    try {
        form = form_from_matrix(m);
    } catch (const NonUnimodular& e) {
        report["unimodular"] = false;
        report["determinant"] = e.determinant().str();
        text << "NonUnimodular: det(psi + epsilon psi^T) = " << e.determinant() << "\n";
        emit(cfg, cfg.format == "json" ? report.dump(2) + "\n" : text.str());
        return kMathFailure;
    }
    const bool sym = form.is_epsilon_symmetric(), uni = form.is_unimodular(), axiom = form.satisfies_form_axiom();
    const bool recovers = form.b * form.t == m.psi();
    const bool axioms_ok = sym && uni && axiom && recovers;
    report["unimodular"] = uni;
    report["axioms"] = {{"epsilon_symmetric", sym}, {"unimodular", uni}, {"form_axiom", axiom}, {"b_t_equals_psi", recovers}};
    report["b"] = int_matrix_to_json(form.b);
    report["t"] = int_matrix_to_json(form.t);
    auto pf = [](bool ok) { return ok ? "pass" : "FAIL"; };
    text << "form axioms: b^T = eps b " << pf(sym) << ", |det b| = 1 " << pf(uni) << ", t^T b = b(I - t) " << pf(axiom)
         << ", b t = psi " << pf(recovers) << "\n";
    text << "  b =\n" << matrix_text(form.b) << "  t =\n" << matrix_text(form.t);

    auto metabolizer = search_metabolizer(m, bound);
    report["metabolizer_bound"] = bound;
    if (metabolizer) {
        report["metabolizer"] = sublattice_to_json(*metabolizer);
        text << "metabolizer (bound " << bound << "): " << to_string(*metabolizer) << "\n";
    } else {
        report["metabolizer"] = nullptr;
        text << "metabolizer (bound " << bound << "): not found\n";
    }

    if (m.size() > 0) {
        auto cert = hyperbolic_obstruction(m, resolve_test_set(m, cfg));
        report["hyperbolic"] = to_json(cert);
        text << "hyperbolic obstruction: " << to_string(cert.verdict);
        if (cert.witness)
            text << " at " << to_string(cert.witness->first) << " (signature " << cert.witness->second << ")";
        text << "\n";
    } else {
        text << "hyperbolic obstruction: rank 0, nothing to test\n";
    }
    emit(cfg, cfg.format == "json" ? report.dump(2) + "\n" : text.str());
    return axioms_ok ? kOk : kMathFailure;
}

int cmd_profile(const std::string& matrix_spec, const RunConfig& cfg) {
    check_format(cfg.format, {"text", "csv", "json"});
    SeifertMatrix m = load_matrix(matrix_spec);
    SignatureProfile prof = signature_profile(m, cfg.resolution);
    std::ostringstream os;
    if (cfg.format == "json") {
        os << to_json(prof).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "kind,from,to,point,value\n";
        std::size_t j = 0;
        for (const auto& arc : prof.arcs) {
            while (j < prof.jumps.size() && prof.jumps[j].bracket_hi <= arc.from) {
                const auto& jp = prof.jumps[j++];
                os << (jp.exact ? "jump" : "approx_jump") << "," << to_string(jp.bracket_lo) << ","
                   << to_string(jp.bracket_hi) << "," << (jp.point ? to_string(*jp.point) : "") << ","
                   << (jp.value ? std::to_string(*jp.value) : "") << "\n";
            }
            os << "arc," << to_string(arc.from) << "," << to_string(arc.to) << "," << to_string(arc.sample) << ","
               << arc.value << "\n";
        }
    } else {
        os << "Alexander polynomial: " << to_string(prof.alexander, "t") << "\n";
        for (const auto& arc : prof.arcs)
            os << "arc (" << to_string(arc.from) << ", " << to_string(arc.to) << ")  sample " << to_string(arc.sample)
               << "  value " << arc.value << "\n";
        for (const auto& jp : prof.jumps) {
            if (jp.exact) os << "jump " << to_string(*jp.point) << "  value " << *jp.value << "\n";
            else
                os << "approximate jump near turn " << jp.approx_turn << " in [" << to_string(jp.bracket_lo) << ", "
                   << to_string(jp.bracket_hi) << "]\n";
        }
    }
    emit(cfg, os.str());
    return kOk;
}

int cmd_longitude(const std::string& path, const RunConfig& cfg) {
    check_format(cfg.format, {"text", "json"});
    Presentation pres = [&] {
        try {
            return presentation_from_json(read_json_file(path));
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }();
    ObstructionReport r = longitude_obstruction(pres);
    if (cfg.format == "json") {
        emit(cfg, to_json(r).dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << to_string(r.verdict) << "\n  target: " << to_string(r.target) << "\n  ideal generator: "
           << to_string(r.gcd) << "\n";
        if (r.witness) os << "  " << *r.witness << "\n";
        emit(cfg, os.str());
    }
    return kOk;
}

int cmd_export(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw UsageError("cannot create '" + dir + "': " + ec.message());
    for (const auto& [name, m] : builtin_matrices()) {
        std::string path = (std::filesystem::path(dir) / (name + ".json")).string();
        std::ofstream f(path);
        if (!f) throw UsageError("cannot write '" + path + "'");
        f << matrix_to_json(name, m).dump(2) << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Link concordance obstructions: Fox calculus, Seifert forms, Levine-Tristram signatures"};
    app.require_subcommand(1);
    RunConfig cfg;

    long p_max = 0, n_max = 0;
    auto* pretzel = app.add_subcommand("pretzel-scan", "Boundary-link obstruction over a (p, n) grid");
    pretzel->add_option("--p-max", p_max, "Largest p")->required();
    pretzel->add_option("--n-max", n_max, "Largest n")->required();
    pretzel->add_option("--format", cfg.format, "text|csv|json");
    pretzel->add_option("--out", cfg.out, "Write the table to this file");

    std::string matrix_spec, omega_text, epsilon_text, presentation_path, export_dir;
    long bound = 2;
    auto* sig = app.add_subcommand("signature", "Levine-Tristram signature at omega = e^{2 pi i k/m}");
    sig->add_option("matrix", matrix_spec, "Built-in name, file, literal, or a#b sum")->required();
    sig->add_option("omega", omega_text, "k/m (or a decimal turn with --numeric)")->required();
    auto* exact_flag = sig->add_flag("--exact", "Exact cyclotomic arithmetic (default)");
    auto* numeric_flag = sig->add_flag("--numeric", cfg.numeric, "Double-precision eigenvalues");
    exact_flag->excludes(numeric_flag);
    sig->add_option("--precision", cfg.precision, "Numeric zero threshold 10^-N");
    sig->add_option("--format", cfg.format, "text|json");
    sig->add_option("--out", cfg.out, "Write output to this file");

    auto* ds = app.add_subcommand("ds-bound", "Bing-double doubly slice genus lower bound");
    ds->add_option("matrix", matrix_spec, "Seifert matrix of a slice knot")->required();
    ds->add_option("--test-set", cfg.test_set, "auto or k/m,k/m,...");
    ds->add_option("--resolution", cfg.resolution, "Largest root-of-unity order for jump detection");
    ds->add_option("--format", cfg.format, "text|json");
    ds->add_option("--out", cfg.out, "Write output to this file");

    auto* form = app.add_subcommand("form-check", "Seifert form axioms, metabolizer search, hyperbolic obstruction");
    form->add_option("matrix", matrix_spec, "Seifert matrix")->required();
    form->add_option("epsilon", epsilon_text, "+1 or -1 (defaults to the matrix's own)");
    form->add_option("--bound", bound, "Metabolizer search coefficient bound")->capture_default_str();
    form->add_option("--test-set", cfg.test_set, "auto or k/m,k/m,...");
    form->add_option("--resolution", cfg.resolution, "Largest root-of-unity order for jump detection");
    form->add_option("--format", cfg.format, "text|json");
    form->add_option("--out", cfg.out, "Write output to this file");

    auto* prof = app.add_subcommand("profile", "Signature function over the circle");
    prof->add_option("matrix", matrix_spec, "Seifert matrix")->required();
    prof->add_option("--resolution", cfg.resolution, "Largest root-of-unity order treated exactly");
    prof->add_option("--format", cfg.format, "text|csv|json");
    prof->add_option("--out", cfg.out, "Write output to this file");

    auto* lon = app.add_subcommand("longitude-check", "Fox-derivative longitude test on a presentation file");
    lon->add_option("presentation", presentation_path, "Presentation JSON file")->required();
    lon->add_option("--format", cfg.format, "text|json");
    lon->add_option("--out", cfg.out, "Write output to this file");

    auto* exp = app.add_subcommand("export-builtins", "Write the built-in matrices as JSON files");
    exp->add_option("dir", export_dir, "Target directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    if (pretzel->parsed() && cfg.format == "text" && pretzel->count("--format") == 0) cfg.format = "csv";

    try {
        if (pretzel->parsed()) return cmd_pretzel(p_max, n_max, cfg);
        if (sig->parsed()) return cmd_signature(matrix_spec, omega_text, cfg);
        if (ds->parsed()) return cmd_dsbound(matrix_spec, cfg);
        if (form->parsed()) return cmd_formcheck(matrix_spec, epsilon_text, bound, cfg);
        if (prof->parsed()) return cmd_profile(matrix_spec, cfg);
        if (lon->parsed()) return cmd_longitude(presentation_path, cfg);
        if (exp->parsed()) return cmd_export(export_dir);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UncertifiableSign& e) {
        std::cerr << "UncertifiableSign: " << e.what() << "\n";
        return kMathFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
