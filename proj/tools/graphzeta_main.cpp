// Command-line front end: computes the four zeta expressions from a
// JSON graph spec, verifies their agreement, and dumps the arc
// partition for inspection.
//
// Exit codes: 0 = pass, 1 = verification mismatch, 2 = input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "graphzeta/arc_partition.hpp"
#include "graphzeta/expressions.hpp"
#include "graphzeta/graph_spec.hpp"
#include "graphzeta/hashimoto.hpp"
#include "graphzeta/ihara.hpp"
#include "graphzeta/report.hpp"
#include "graphzeta/weight_draws.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

using namespace graphzeta;

struct CommonOptions {
    std::string spec_path;
    std::string out = "text";
    std::optional<std::string> preset;
    std::optional<std::string> mode_override;
};

std::size_t oracle_cap() {
    const char* env = std::getenv("ZETA_ORACLE_CAP");
    if (!env) return kDefaultOracleCap;
    try {
        const long long cap = std::stoll(env);
        if (cap <= 0) throw std::invalid_argument("nonpositive");
        return static_cast<std::size_t>(cap);
    } catch (const std::exception&) {
        throw SpecError(SpecError::Kind::parse,
                        "parse error: ZETA_ORACLE_CAP must be a positive integer");
    }
}

std::pair<Digraph, WeightAssignment> load(const CommonOptions& opt, bool& inject_fault) {
    GraphSpec spec = parse_spec_file(opt.spec_path);
    if (opt.preset) spec.preset = *opt.preset;
    inject_fault = spec.inject_fault;
    auto [d, w] = instantiate(spec);
    if (opt.mode_override) {
        if (*opt.mode_override == "general") {
            if (d.mode() == DigraphMode::symmetric_of) d = d.as_general();
        } else if (*opt.mode_override == "symmetric") {
            if (d.mode() == DigraphMode::general)
                throw SpecError(SpecError::Kind::parse,
                                "parse error: cannot reinterpret a general digraph as "
                                "symmetric (involution is never inferred)");
        } else {
            throw SpecError(SpecError::Kind::parse,
                            "parse error: --mode-override must be general or symmetric");
        }
    }
    return {std::move(d), std::move(w)};
}

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("spec", opt.spec_path, "graph spec JSON file")->required();
    cmd->add_option("--out", opt.out, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option_function<std::string>(
           "--preset", [&opt](const std::string& p) { opt.preset = p; },
           "weight preset overriding the file's")
        ->check(CLI::IsMember({"classic", "generalized-weighted"}));
    cmd->add_option_function<std::string>(
        "--mode-override", [&opt](const std::string& m) { opt.mode_override = m; },
        "reinterpret the digraph mode (symmetric -> general only)");
}

void emit(const nlohmann::ordered_json& j, const std::string& text, const std::string& out) {
    if (out == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int run_zeta(const CommonOptions& opt, const std::string& expr, int order) {
    bool inject_fault = false;
    auto [d, w] = load(opt, inject_fault);
    nlohmann::ordered_json j;
    j["expression"] = expr;
    std::string text;
    if (expr == "hashimoto" || expr == "ihara") {
        const Polynomial p = expr == "hashimoto" ? hashimoto_inverse_zeta(d, w)
                                                 : ihara_inverse_zeta(d, w);
        j["coefficients"] = coeff_strings(p);
        if (expr == "ihara")
            j["det_t"] = coeff_strings(block_T(d, w, arc_partition(d)).det);
        text = expr + " coefficients (ascending): ";
        const auto cs = coeff_strings(p);
        for (std::size_t i = 0; i < cs.size(); ++i) text += (i ? ", " : "") + cs[i];
        text += "\n";
        if (expr == "ihara") {
            text += "det_t coefficients (ascending): ";
            const auto ds = coeff_strings(block_T(d, w, arc_partition(d)).det);
            for (std::size_t i = 0; i < ds.size(); ++i) text += (i ? ", " : "") + ds[i];
            text += "\n";
        }
    } else {
        const TruncatedSeries s = expr == "exp"
                                      ? exponential_expression(d, w, order)
                                      : euler_expression(d, w, order, oracle_cap());
        j["order"] = order;
        j["coefficients"] = coeff_strings(s);
        text = expr + " coefficients through t^" + std::to_string(order) + ": ";
        const auto cs = coeff_strings(s);
        for (std::size_t i = 0; i < cs.size(); ++i) text += (i ? ", " : "") + cs[i];
        text += "\n";
    }
    emit(j, text, opt.out);
    return kExitPass;
}

ZetaReport run_one_verification(const Digraph& d, const WeightAssignment& w, int order,
                                bool inject_fault, std::optional<std::uint64_t> seed) {
    const std::size_t cap = oracle_cap();
    const Polynomial hashimoto = hashimoto_inverse_zeta(d, w);
    WeightAssignment ihara_weights = w;
    if (inject_fault && d.arc_count() > 0) {
        // Negative-control hook: mutate a weight after the Hashimoto
        // side is built, so the Ihara side sees different input.
        ihara_weights.tau1[0] += Scalar::one();
    }
    TheoremReport theorem = compose_theorem_report(
        hashimoto, ihara_inverse_zeta(d, ihara_weights),
        block_T(d, ihara_weights, arc_partition(d)).det,
        exponential_expression(d, w, order), euler_expression(d, w, order, cap), order);
    return ZetaReport{seed, std::move(theorem)};
}

int run_verify(const CommonOptions& opt, int order, std::optional<int> seeds,
               std::uint64_t base_seed, bool dump_matrices) {
    bool inject_fault = false;
    auto [d, w] = load(opt, inject_fault);

    std::vector<ZetaReport> runs;
    if (seeds) {
        if (*seeds < 1)
            throw SpecError(SpecError::Kind::parse, "parse error: --seeds must be >= 1");
        for (int i = 0; i < *seeds; ++i) {
            const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
            runs.push_back(run_one_verification(d, draw_weights(d.arc_count(), seed),
                                                order, inject_fault, seed));
        }
    } else {
        runs.push_back(run_one_verification(d, w, order, inject_fault, std::nullopt));
    }

    bool all_pass = true;
    for (const auto& r : runs) all_pass = all_pass && r.theorem.pass();

    nlohmann::ordered_json j;
    j["command"] = "verify";
    j["mode"] = d.mode() == DigraphMode::symmetric_of ? "symmetric" : "general";
    j["vertices"] = d.vertex_count();
    j["arcs"] = d.arc_count();
    j["order"] = order;
    auto& jruns = j["runs"] = nlohmann::ordered_json::array();
    std::string text;
    for (const auto& r : runs) {
        jruns.push_back(report_json(r));
        text += report_text(r) + "\n";
    }
    if (dump_matrices) {
        const auto p = arc_partition(d);
        const auto& weights_used = seeds ? draw_weights(d.arc_count(), base_seed) : w;
        const IharaMatrices m = ihara_matrices(d, weights_used, p);
        const BlockT t = block_T(d, weights_used, p);
        auto& jm = j["matrices"];
        jm["A"] = matrix_json(m.A);
        jm["D"] = matrix_json(m.D);
        jm["X"] = matrix_json(m.X);
        nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
        for (const auto& bd : t.block_dets) blocks.push_back(coeff_strings(bd));
        jm["block_dets"] = std::move(blocks);
        jm["det_t"] = coeff_strings(t.det);
    }
    j["pass"] = all_pass;
    text += std::string("overall: ") + (all_pass ? "pass" : "FAIL") + "\n";
    emit(j, text, opt.out);
    return all_pass ? kExitPass : kExitMismatch;
}

int run_partition(const CommonOptions& opt) {
    bool inject_fault = false;
    auto [d, w] = load(opt, inject_fault);
    (void)w;
    const ArcPartition p = arc_partition(d);

    nlohmann::ordered_json j;
    j["mode"] = d.mode() == DigraphMode::symmetric_of ? "symmetric" : "general";
    auto& jphi = j["phi"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < p.phi.size(); ++i) {
        nlohmann::ordered_json pair;
        pair["pair"] = {p.phi[i].first, p.phi[i].second};
        pair["representatives"] = p.representatives[i];
        jphi.push_back(std::move(pair));
    }
    auto& jblocks = j["blocks"] = nlohmann::ordered_json::array();
    for (const ArcBlock& b : p.blocks) {
        nlohmann::ordered_json jb;
        jb["pair"] = {b.u, b.v};
        jb["representative"] = b.representative;
        jb["arcs"] = b.arcs;
        jb["bracket"] = b.bracket_arcs();
        jb["inverse"] = b.inverse_arcs();
        jblocks.push_back(std::move(jb));
    }
    j["arc_order"] = p.arc_order;

    std::string text;
    text += "phi:";
    for (const auto& [u, v] : p.phi)
        text += " (" + std::to_string(u) + "," + std::to_string(v) + ")";
    text += "\n";
    for (const ArcBlock& b : p.blocks) {
        text += "block (" + std::to_string(b.u) + "," + std::to_string(b.v) +
                ") rep=" + std::to_string(b.representative) + " arcs=[";
        for (std::size_t i = 0; i < b.arcs.size(); ++i)
            text += (i ? "," : "") + std::to_string(b.arcs[i]);
        text += "] bracket_count=" + std::to_string(b.bracket_count) + "\n";
    }
    text += "arc_order:";
    for (ArcId a : p.arc_order) text += " " + std::to_string(a);
    text += "\n";
    emit(j, text, opt.out);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted zeta functions of finite digraphs"};
    app.require_subcommand(1);

    CommonOptions zeta_opt, verify_opt, partition_opt;
    std::string expr = "hashimoto";
    int zeta_order = 10;
    int verify_order = 10;
    std::optional<int> seeds;
    std::uint64_t base_seed = 0;
    bool dump_matrices = false;

    CLI::App* zeta = app.add_subcommand("zeta", "compute one expression of the zeta function");
    add_common(zeta, zeta_opt);
    zeta->add_option("--expr", expr, "which expression")
        ->check(CLI::IsMember({"hashimoto", "ihara", "exp", "euler"}))
        ->capture_default_str();
    zeta->add_option("--order", zeta_order, "truncation order for series expressions")
        ->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "check the four-expression agreement");
    add_common(verify, verify_opt);
    verify->add_option("--order", verify_order, "series truncation order")
        ->capture_default_str();
    verify->add_option_function<int>(
        "--seeds", [&seeds](int n) { seeds = n; },
        "verify N pseudo-random weight draws instead of the file's weights");
    verify->add_option("--seed", base_seed, "base seed for --seeds")->capture_default_str();
    verify->add_flag("--dump-matrices", dump_matrices, "include A, D, X and det T in the report");

    CLI::App* partition = app.add_subcommand("partition", "dump Phi, B(u,v) and the blocks");
    add_common(partition, partition_opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (zeta->parsed()) return run_zeta(zeta_opt, expr, zeta_order);
        if (verify->parsed())
            return run_verify(verify_opt, verify_order, seeds, base_seed, dump_matrices);
        return run_partition(partition_opt);
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const OracleCapExceeded& e) {
        std::cerr << "error: " << e.what()
                  << " (raise ZETA_ORACLE_CAP or lower --order)\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
