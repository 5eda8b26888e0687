#pragma once

// Subcommand logic behind the kempfhn executable. Kept in a header so the unit
// tests can drive it without spawning processes.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "kempf/hn.hpp"
#include "kempf/io.hpp"
#include "kempf/kempf.hpp"

namespace kempf::cli {

enum ExitCode : int { exit_ok = 0, exit_mismatch = 1, exit_input = 2 };

struct RunConfig {
    std::string subcommand;
    std::string input;  // empty or "-" reads stdin
    std::string output; // empty or "-" writes to the given stream
    std::optional<std::int64_t> numeric; // unset means asymptotic
    bool csv = false;
    bool approx = false; // --float
    bool parallel = false;
    std::optional<std::uint64_t> seed;

    // kempf
    std::string graph_csv;
    // stabilize
    std::int64_t m_start = 1;
    std::int64_t cap = stabilization_cap;
    // gen
    std::vector<int> degrees;
    std::string mode = "gieseker";
    std::optional<std::size_t> phi;
    std::string delta = "1";
    std::string g = "1";
    int dim_x = 1;
    // selftest
    std::vector<int> criteria;
};

using SelftestFn = std::function<int(std::ostream&, bool parallel, const std::vector<int>& criteria)>;

namespace detail {

inline std::string approx(const Rational& q) {
    std::ostringstream os;
    os.precision(12);
    os << q.get_d();
    return os.str();
}

inline Json rationals(const std::vector<Rational>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(io::to_json(x));
    return out;
}

inline Json approx_list(const std::vector<Rational>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(approx(x));
    return out;
}

/// Leading coefficient ratio of mu^2 (its exact value in numeric mode).
inline Rational mu2_leading(const ScaleValue& v) {
    return v.mag2_num().is_zero() ? Rational(0) : Rational(v.mag2_num().leading() / v.mag2_den().leading());
}

template <OrderedField F>
std::string str(const F& x) {
    return FieldTraits<F>::str(x);
}

template <OrderedField F>
Json values(const std::vector<F>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(io::to_json(x));
    return out;
}

/// CSV rows i, b_i, w_i, w~_i, Gamma_i for i = 0..t+1 (Gamma_0 left blank).
template <OrderedField F>
std::string graph_csv(const GraphData<F>& g) {
    std::ostringstream os;
    os << "i,b_i,w_i,w_tilde_i,gamma_i\n";
    for (std::size_t i = 0; i < g.b.size(); ++i) {
        os << i << ',' << str(g.b[i]) << ',' << str(g.w[i]) << ',' << str(g.envelope[i]) << ',';
        if (i > 0) os << str(g.gamma[i - 1]);
        os << '\n';
    }
    return os.str();
}

inline std::string read_input(const RunConfig& cfg) {
    if (cfg.input.empty() || cfg.input == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(cfg.input);
    if (!in) throw Error(ErrorCode::parse_error, "cannot open '" + cfg.input + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::invalid_argument, "cannot write '" + path + "'");
    out << text;
}

inline io::Instance load_instance(const RunConfig& cfg) {
    io::Instance inst = io::instance_from_json(io::parse_text(read_input(cfg)));
    const auto violations = validate_lattice(inst.lattice, inst.params);
    if (!violations.empty()) {
        std::string msg = std::to_string(violations.size()) + " violation(s); first: " + violations.front().message;
        if (!violations.front().node_ids.empty()) {
            msg += " (nodes";
            for (int id : violations.front().node_ids) msg += " " + std::to_string(id);
            msg += ")";
        }
        throw Error(ErrorCode::invalid_instance, msg);
    }
    return inst;
}

inline Json chain_json(const Filtration& f) {
    Json out = Json::array();
    for (int id : f.chain) out.push_back(id);
    return out;
}

inline KempfOptions options(const RunConfig& cfg) { return KempfOptions{cfg.parallel, {}, max_enumerated_chains}; }

// --- subcommands ------------------------------------------------------------

inline int project(const RunConfig& cfg, std::string& out) {
    const auto inst = io::cone_from_json(io::parse_text(read_input(cfg)));
    const auto graph = envelope_graph(inst);
    if (cfg.csv) {
        out = graph_csv(graph);
        return exit_ok;
    }
    const auto dir = kempf_direction(inst);
    const auto* mx = std::get_if<Maximizer<Rational>>(&dir);
    // Nonpositive: the maximizer is the origin.
    const std::vector<Rational> gamma = mx ? mx->gamma : std::vector<Rational>(inst.b.size(), Rational(0));
    const Rational mu2 = mx ? mu2_leading(mx->value) : Rational(0);
    Json j;
    j["gamma"] = rationals(gamma);
    j["mu2"] = io::to_json(mu2);
    j["sign"] = mx ? "+" : "0";
    Json rows = Json::array();
    for (std::size_t i = 0; i < graph.b.size(); ++i)
        rows.push_back(Json::array({io::to_json(graph.b[i]), io::to_json(graph.w[i]), io::to_json(graph.envelope[i])}));
    j["graph"] = rows;
    if (cfg.approx) j["approx"] = Json{{"gamma", approx_list(gamma)}, {"mu2", approx(mu2)}};
    out = j.dump(2) + "\n";
    return exit_ok;
}

inline int hn(const RunConfig& cfg, std::string& out) {
    const auto inst = load_instance(cfg);
    const auto& lat = inst.lattice;
    const Filtration f = hn_filtration(lat, inst.params);
    Json quotients = Json::array();
    for (const auto& q : chain_quotients(lat, f)) {
        const Polynomial reduced = stability_polynomial(q, inst.params) * Rational(1, q.rank);
        Json e{{"rank", q.rank}, {"poly", io::to_json(q.hilbert)}, {"eps", q.eps}, {"reduced", to_string(reduced)}};
        if (cfg.approx) e["reduced_leading_approx"] = approx(reduced.leading());
        quotients.push_back(e);
    }
    Json j{{"chain", chain_json(f)}, {"quotients", quotients}};
    out = j.dump(2) + "\n";
    return exit_ok;
}

template <OrderedField F>
Json kempf_json(const RunConfig& cfg, const io::Instance& inst, const ValueMode& mode) {
    const auto res = kempf_filtration<F>(inst.lattice, inst.params, mode, options(cfg));
    Json j;
    j["verdict"] = to_string(res.verdict);
    j["mode"] = to_string(mode);
    j["chain"] = chain_json(res.filtration.chain);
    j["gamma"] = values(res.filtration.gamma);
    j["weights"] = values(res.filtration.weights);
    j["mu2"] = Json{{"sign", to_string(res.value.sign())},
                    {"num", io::to_json(res.value.mag2_num())},
                    {"den", io::to_json(res.value.mag2_den())}};
    if (!cfg.graph_csv.empty() && res.verdict == Verdict::unstable) {
        const auto cone = chain_vector<F>(res.filtration.chain, inst.lattice, inst.params, mode);
        write_file(cfg.graph_csv, graph_csv(envelope_graph(cone)));
        j["graph_csv"] = cfg.graph_csv;
    } else {
        j["graph_csv"] = nullptr;
    }
    if (cfg.approx) {
        if constexpr (std::is_same_v<F, Rational>) {
            j["approx"] = Json{{"gamma", approx_list(res.filtration.gamma)},
                               {"weights", approx_list(res.filtration.weights)},
                               {"mu2", approx(mu2_leading(res.value))}};
        } else {
            // Leading behaviour of mu^2 as m grows: c * m^k.
            const int k = res.value.mag2_num().degree() - res.value.mag2_den().degree();
            j["approx"] = Json{{"mu2_leading", approx(mu2_leading(res.value))},
                               {"mu2_exponent", k}};
        }
    }
    return j;
}

inline int kempf(const RunConfig& cfg, std::string& out) {
    const auto inst = load_instance(cfg);
    const Json j = cfg.numeric ? kempf_json<Rational>(cfg, inst, ValueMode::numeric(*cfg.numeric))
                               : kempf_json<RationalFunction>(cfg, inst, ValueMode::asymptotic());
    out = j.dump(2) + "\n";
    return exit_ok;
}

inline int verify(const RunConfig& cfg, std::string& out) {
    const auto inst = load_instance(cfg);
    const auto rep = verify_equality(inst.lattice, inst.params, options(cfg));
    Json j;
    j["equal"] = rep.equal;
    j["hn"] = rep.hn ? chain_json(*rep.hn) : Json(nullptr);
    j["kempf"] = rep.kempf ? chain_json(*rep.kempf) : Json(nullptr);
    j["verdict"] = to_string(rep.verdict);
    j["properties"] = Json{{"strictly_descending", rep.descending},
                           {"blocks_semistable", rep.blocks_semistable},
                           {"convexity", rep.convex},
                           {"refinement", rep.refinement},
                           {"step_weights", rep.steps}};
    if (!rep.hn_error.empty()) j["hn_error"] = rep.hn_error;
    if (!rep.kempf_error.empty()) j["kempf_error"] = rep.kempf_error;
    out = j.dump(2) + "\n";
    return rep.equal && rep.all_properties() ? exit_ok : exit_mismatch;
}

inline int stabilize(const RunConfig& cfg, std::string& out) {
    const auto inst = load_instance(cfg);
    const std::int64_t m = stabilization_check(inst.lattice, inst.params, cfg.m_start, options(cfg), cfg.cap);
    out = Json{{"m_star", m}}.dump(2) + "\n";
    return exit_ok;
}

inline int gen(const RunConfig& cfg, std::string& out) {
    StabilityParams params;
    params.mode = parse_stability_mode(cfg.mode);
    params.dim_x = cfg.dim_x;
    params.g = parse_rational(cfg.g);
    if (params.mode == StabilityMode::pair) params.delta = Polynomial(parse_rational(cfg.delta));
    io::Instance inst{params, {}};
    if (!cfg.degrees.empty()) {
        inst.lattice = gen_split_bundle(cfg.degrees, params, cfg.phi);
    } else if (cfg.seed) {
        inst.lattice = gen_random_lattice(*cfg.seed, RandomLatticeBounds{}, params);
    } else {
        throw Error(ErrorCode::invalid_argument, "gen needs --degrees or --seed");
    }
    out = io::to_json(inst).dump(2) + "\n";
    return exit_ok;
}

} // namespace detail

/// Runs one subcommand. Output goes to cfg.output when set, otherwise to `out`;
/// diagnostics go to `err`. Returns 0, 1 (verification mismatch) or 2 (input error).
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err, const SelftestFn& selftest = {}) {
    std::string text;
    int code = exit_ok;
    try {
        if (cfg.numeric && *cfg.numeric < 1) throw Error(ErrorCode::bad_m, "--numeric needs M >= 1");
        if (cfg.subcommand == "project") code = detail::project(cfg, text);
        else if (cfg.subcommand == "hn") code = detail::hn(cfg, text);
        else if (cfg.subcommand == "kempf") code = detail::kempf(cfg, text);
        else if (cfg.subcommand == "verify") code = detail::verify(cfg, text);
        else if (cfg.subcommand == "stabilize") code = detail::stabilize(cfg, text);
        else if (cfg.subcommand == "gen") code = detail::gen(cfg, text);
        else if (cfg.subcommand == "selftest") {
            if (!selftest) throw Error(ErrorCode::invalid_argument, "selftest is not available in this build");
            std::ostringstream os;
            code = selftest(os, cfg.parallel, cfg.criteria) == 0 ? exit_ok : exit_mismatch;
            text = os.str();
        } else {
            throw Error(ErrorCode::invalid_argument, "unknown subcommand '" + cfg.subcommand + "'");
        }
        if (cfg.output.empty() || cfg.output == "-") out << text;
        else detail::write_file(cfg.output, text);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
    return code;
}

} // namespace kempf::cli
