// Command-line front end: every library operation behind stable text I/O.
// Exit codes: 0 success, 1 domain error (e.g. factoring an entangled state),
// 2 I/O or format error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qlink/bell.hpp"
#include "qlink/link_invariant.hpp"
#include "qlink/local_unitary.hpp"
#include "qlink/pure_state.hpp"
#include "qlink/random.hpp"
#include "qlink/yang_baxter.hpp"

namespace {

using namespace qlink;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string num(cplx v) { return num(v.real()) + " " + num(v.imag()); }

int cmd_state_check(const std::string& path, double tol) {
    const PureState s = read_state_file(path);
    const ProductCheck check = is_product(s, tol);
    const PureState relabeled = xor_relabel(s, check.mask);
    std::cout << (check.is_product ? "product" : "entangled") << "\n";
    std::cout << "relabel-mask " << index_to_bits(check.mask, s.qubits()) << "\n";
    for (const Residual& r : criterion_residuals(relabeled))
        std::cout << index_to_bits(r.alpha, s.qubits()) << " " << num(r.value) << " rel "
                  << num(std::abs(r.value) / r.scale) << "\n";
    if (!check.is_product)
        std::cout << "violated-alpha " << index_to_bits(check.failing_alpha, s.qubits()) << "\n";
    return 0;
}

int cmd_state_factor(const std::string& path, double tol) {
    const PureState s = read_state_file(path);
    const Factorization f = factorize(s, tol);  // throws domain_error when entangled
    std::cout << "scalar " << num(f.scalar) << "\n";
    std::cout << "flip-mask " << index_to_bits(f.flip_mask, s.qubits()) << "\n";
    for (std::size_t i = 0; i < f.factors.size(); ++i)
        std::cout << "factor " << (i + 1) << " " << num(f.factors[i].first) << " "
                  << num(f.factors[i].second) << "\n";
    return 0;
}

int cmd_yb_verify(const std::string& path, double tol) {
    const PhaseMatrix m = read_phase_matrix_file(path);
    m.validate();
    const YbeResult r = verify_ybe(m, tol);
    std::cout << "max-deviation " << num(r.max_deviation) << "\n"
              << (r.ok ? "yang-baxter holds" : "yang-baxter fails") << "\n";
    return r.ok ? 0 : 1;
}

int cmd_yb_entangles(const std::string& path, double tol) {
    const PhaseMatrix m = read_phase_matrix_file(path);
    m.validate();
    const bool brute = r_entangles_uniform(m, tol);
    std::cout << (brute ? "entangles uniform state" : "does not entangle uniform state") << "\n";
    if (m.diagonal_lambda())
        std::cout << "closed-form-unentangled "
                  << (r_unentangled_closed_form(m, tol) ? "yes" : "no") << "\n";
    return 0;
}

int cmd_braid_apply(const std::string& matrix_path, const std::string& state_path, int strands,
                    const std::string& word_text, const std::string& out_path) {
    const PhaseMatrix m = read_phase_matrix_file(matrix_path);
    m.validate();
    BraidWord word;
    word.strands = strands;
    std::istringstream ws(word_text);
    std::string tok;
    while (std::getline(ws, tok, ',')) {
        if (tok.empty()) continue;
        const int letter = std::stoi(tok);
        if (letter == 0) throw std::invalid_argument("braid letters are nonzero signed indices");
        word.letters.emplace_back(std::abs(letter), letter > 0 ? 1 : -1);
    }
    const PureState in = read_state_file(state_path);
    if (in.qubits() != strands * m.string_length())
        throw std::invalid_argument("state must have strands*n qubits");
    const PhasedPerm op = braid_operator(word, m);
    const PureState out(in.qubits(), op.apply(in.amplitudes()));
    if (out_path.empty()) {
        write_state(std::cout, out);
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        write_state(f, out);
    }
    return 0;
}

int cmd_link_sum(const std::string& diagram_path, const std::string& matrix_path) {
    const LinkDiagram d = read_diagram_file(diagram_path);
    const PhaseMatrix m = read_phase_matrix_file(matrix_path);
    m.validate();
    const LinkStats s = stats(d);
    std::cout << "w1 " << s.w1 << " w2 " << s.w2 << " lk " << s.lk << " w " << s.w << "\n";
    std::cout << "S_K bruteforce " << num(state_sum_bruteforce(d, m)) << "\n";
    if (m.diagonal_lambda()) std::cout << "S_K closed " << num(state_sum_closed(s, m)) << "\n";
    return 0;
}

int cmd_link_z(const std::string& diagram_path, const std::string& matrix_path) {
    const LinkDiagram d = read_diagram_file(diagram_path);
    const PhaseMatrix m = read_phase_matrix_file(matrix_path);
    m.validate();
    std::cout << "Z_K " << num(z_invariant(stats(d), m)) << "\n";
    return 0;
}

int cmd_link_detect(const std::string& matrix_path, double tol) {
    const PhaseMatrix m = read_phase_matrix_file(matrix_path);
    m.validate();
    const LinkingDetection det = detects_linking(m, tol);
    if (det.detects)
        std::cout << "detects linking, witness " << index_to_bits(det.alpha, m.string_length())
                  << " " << index_to_bits(det.beta, m.string_length()) << "\n";
    else
        std::cout << "does not detect linking\n";
    return 0;
}

int cmd_bell_delta(const std::string& path) {
    const PureState s = read_state_file(path);
    std::cout << "delta " << num(chsh_delta(s, standard_observables())) << "\n";
    return 0;
}

int cmd_bell_scan(int trials, std::uint64_t seed) {
    int violations = 0;
    double max_delta = -1e300;
    for (int t = 0; t < trials; ++t) {
        auto rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        std::normal_distribution<double> g(0.0, 1.0);
        RealTwoQubitState s{g(rng), g(rng), g(rng), g(rng)};
        const double nr = std::sqrt(s.a * s.a + s.b * s.b + s.c * s.c + s.d * s.d);
        s.a /= nr;
        s.b /= nr;
        s.c /= nr;
        s.d /= nr;
        const double delta = delta_closed_form(s);
        max_delta = std::max(max_delta, delta);
        if (violates(s)) ++violations;
    }
    std::cout << "trials " << trials << "\n"
              << "violations " << violations << "\n"
              << "max-delta " << num(max_delta) << "\n";
    return 0;
}

int cmd_bell_maximize(const std::string& path) {
    const PureState s = read_state_file(path);
    const ChshMax m = maximize_chsh(s);
    std::cout << "delta-max " << num(m.delta_max) << "\n"
              << "angles " << num(m.angles[0]) << " " << num(m.angles[1]) << " "
              << num(m.angles[2]) << " " << num(m.angles[3]) << "\n";
    return 0;
}

int cmd_bell_lhv() {
    const LhvCertificate cert = classical_bound();
    for (const LhvRow& row : cert.rows)
        std::printf("%+d %+d %+d %+d -> %+d\n", row.q, row.r, row.s, row.t, row.value);
    std::cout << "classical-bound " << cert.bound << "\n";
    return 0;
}

int cmd_luinv_minors(const std::string& path, int position, double tol) {
    const PureState s = read_state_file(path);
    const int lo = position == 0 ? 1 : position;
    const int hi = position == 0 ? s.qubits() : position;
    for (int k = lo; k <= hi; ++k)
        for (const auto& [spec, value] : all_minors(s, k))
            std::cout << "k " << k << " " << index_to_bits(spec.context_a, s.qubits() - 1) << " "
                      << index_to_bits(spec.context_b, s.qubits() - 1) << " " << num(value) << "\n";
    std::cout << "all-vanish " << (all_minors_vanish(s, tol) ? "yes" : "no") << "\n";
    return 0;
}

int cmd_luinv_scan(int n, int trials, std::uint64_t seed) {
    conjecture_scan(n, trials, seed, &std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement criterion, Yang-Baxter operators, link invariants and CHSH toolkit"};
    app.require_subcommand(1);
    app.footer(
        "File formats ('#' starts a comment everywhere):\n"
        "  state:        header 'qubits N', then one '<bitstring> <re> <im>' line per\n"
        "                nonzero amplitude, e.g.\n"
        "                    qubits 2\n"
        "                    01 0.70710678118654752 0\n"
        "                    10 -0.70710678118654752 0\n"
        "  phase-matrix: header 'phase-matrix n=<N> [lambda=<re> <im>]', then rows\n"
        "                '<alpha> <beta> <angle-in-radians>'; unlisted off-diagonal\n"
        "                entries default to angle 0; diagonal entries must not be\n"
        "                listed when lambda is set, e.g.\n"
        "                    phase-matrix n=1 lambda=1 0\n"
        "                    0 1 1.5707963267948966\n"
        "  diagram:      one crossing per line 'X <comp_a> <comp_b> <+|->', e.g.\n"
        "                    X 1 2 +\n"
        "                    X 1 2 +\n");

    std::string state_path, matrix_path, diagram_path, word_text, out_path;
    double tol = 1e-9;
    int strands = 2, position = 0, trials = 1000, scan_n = 3;
    std::uint64_t seed = 0;

    auto* state = app.add_subcommand("state", "pure-state criterion and factorization");
    auto* state_check = state->add_subcommand("check", "product/entangled verdict with residuals");
    state_check->add_option("--state", state_path, "state file")->required();
    state_check->add_option("--tol", tol, "relative tolerance");
    auto* state_factor = state->add_subcommand("factor", "single-qubit factorization");
    state_factor->add_option("--state", state_path, "state file")->required();
    state_factor->add_option("--tol", tol, "relative tolerance");

    auto* yb = app.add_subcommand("yb", "Yang-Baxter operator analysis");
    auto* yb_verify = yb->add_subcommand("verify", "check the Yang-Baxter equation");
    yb_verify->add_option("--matrix", matrix_path, "phase matrix file")->required();
    yb_verify->add_option("--tol", tol, "deviation tolerance");
    auto* yb_ent = yb->add_subcommand("entangles", "does R entangle the uniform state");
    yb_ent->add_option("--matrix", matrix_path, "phase matrix file")->required();
    yb_ent->add_option("--tol", tol, "criterion tolerance");

    auto* braid = app.add_subcommand("braid", "braid-word operators");
    auto* braid_apply = braid->add_subcommand("apply", "apply a braid word to a state");
    braid_apply->add_option("--matrix", matrix_path, "phase matrix file")->required();
    braid_apply->add_option("--state", state_path, "state file (strands*n qubits)")->required();
    braid_apply->add_option("--strands", strands, "strand count k")->required();
    braid_apply->add_option("--word", word_text, "comma-separated signed generators, e.g. 1,-2,1")
        ->required();
    braid_apply->add_option("--out", out_path, "output state file (default stdout)");

    auto* link = app.add_subcommand("link", "two-component link invariants");
    auto* link_sum = link->add_subcommand("sum", "state sum S_K, brute force and closed form");
    link_sum->add_option("--diagram", diagram_path, "diagram file")->required();
    link_sum->add_option("--matrix", matrix_path, "phase matrix file")->required();
    auto* link_z = link->add_subcommand("z", "topological invariant Z_K");
    link_z->add_option("--diagram", diagram_path, "diagram file")->required();
    link_z->add_option("--matrix", matrix_path, "phase matrix file")->required();
    auto* link_detect = link->add_subcommand("detect", "linking-detection predicate");
    link_detect->add_option("--matrix", matrix_path, "phase matrix file")->required();
    link_detect->add_option("--tol", tol, "detection tolerance");

    auto* bell = app.add_subcommand("bell", "CHSH calculus");
    auto* bell_delta = bell->add_subcommand("delta", "Delta with the standard observables");
    bell_delta->add_option("--state", state_path, "two-qubit state file")->required();
    auto* bell_scan = bell->add_subcommand("scan", "random-state violation census");
    bell_scan->add_option("--trials", trials, "trial count")->required();
    bell_scan->add_option("--seed", seed, "base seed")->required();
    auto* bell_max = bell->add_subcommand("maximize", "grid+refinement CHSH maximizer");
    bell_max->add_option("--state", state_path, "two-qubit state file")->required();
    auto* bell_lhv = bell->add_subcommand("lhv", "exhaustive classical-bound certificate");
    (void)bell_lhv;

    auto* luinv = app.add_subcommand("luinv", "local-unitary minor invariants");
    auto* luinv_minors = luinv->add_subcommand("minors", "all 2x2 minors of a state");
    luinv_minors->add_option("--state", state_path, "state file")->required();
    luinv_minors->add_option("--position", position, "qubit position (default: all)");
    luinv_minors->add_option("--tol", tol, "vanish tolerance");
    auto* luinv_scan = luinv->add_subcommand("scan", "vanishing-minors conjecture probe");
    luinv_scan->add_option("--n", scan_n, "qubit count (2..4)");
    luinv_scan->add_option("--trials", trials, "trial count")->required();
    luinv_scan->add_option("--seed", seed, "base seed")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (state_check->parsed()) return cmd_state_check(state_path, tol);
        if (state_factor->parsed()) return cmd_state_factor(state_path, tol);
        if (yb_verify->parsed()) return cmd_yb_verify(matrix_path, tol);
        if (yb_ent->parsed()) return cmd_yb_entangles(matrix_path, tol);
        if (braid_apply->parsed())
            return cmd_braid_apply(matrix_path, state_path, strands, word_text, out_path);
        if (link_sum->parsed()) return cmd_link_sum(diagram_path, matrix_path);
        if (link_z->parsed()) return cmd_link_z(diagram_path, matrix_path);
        if (link_detect->parsed()) return cmd_link_detect(matrix_path, tol);
        if (bell_delta->parsed()) return cmd_bell_delta(state_path);
        if (bell_scan->parsed()) return cmd_bell_scan(trials, seed);
        if (bell_max->parsed()) return cmd_bell_maximize(state_path);
        if (bell_lhv->parsed()) return cmd_bell_lhv();
        if (luinv_minors->parsed()) return cmd_luinv_minors(state_path, position, tol);
        if (luinv_scan->parsed()) return cmd_luinv_scan(scan_n, trials, seed);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const qlink::ParseError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
