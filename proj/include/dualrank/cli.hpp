// cli.hpp - command-line front end, callable in-process
//
// Exit codes: 0 success / predicate true, 1 predicate false or non-existence,
// 2 usage or parse error. Diagnostics go to the error stream only.

#ifndef DUALRANK_CLI_HPP
#define DUALRANK_CLI_HPP

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dualrank/dmpgi.hpp"
#include "dualrank/dual_matrix.hpp"
#include "dualrank/errors.hpp"
#include "dualrank/io.hpp"
#include "dualrank/penrose_lab.hpp"
#include "dualrank/rank_decomposition.hpp"
#include "dualrank/real_linalg.hpp"
#include "dualrank/special_matrices.hpp"

namespace dualrank::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_false = 1;
inline constexpr int exit_usage = 2;

class usage_error : public error {
public:
    using error::error;
};

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

struct Options {
    std::string input;
    std::string output;
    std::string p;
    std::string candidate;
    std::string method = "direct";
    std::size_t samples = 100;
    std::uint64_t seed = 0;
};

namespace detail {

inline std::string read_all(std::istream& is) {
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

inline RealDualMatrix load(const std::string& path, std::istream& fallback) {
    if (path.empty() || path == "-") {
        return parse_dual_matrix(read_all(fallback));
    }
    std::ifstream file(path);
    if (!file) {
        throw usage_error("cannot open '" + path + "'");
    }
    return parse_dual_matrix(read_all(file));
}

class Emitter {
public:
    Emitter(const Options& opts, std::ostream& fallback) : opts_(opts), fallback_(fallback) {}

    void write(const std::string& text) const {
        if (opts_.output.empty() || opts_.output == "-") {
            fallback_ << text;
            return;
        }
        std::ofstream file(opts_.output, std::ios::binary);
        if (!file) {
            throw usage_error("cannot write '" + opts_.output + "'");
        }
        file << text;
    }

private:
    const Options& opts_;
    std::ostream& fallback_;
};

inline const RealMatrix& require_real(const RealDualMatrix& m, const char* what) {
    if (!m.dual().is_zero()) {
        throw usage_error(std::string(what) + " must be a real matrix (zero dual part)");
    }
    return m.real();
}

inline ordered_json factors_json(const DualRankFactors<Rational>& f) {
    ordered_json doc;
    doc["rank"] = f.rank();
    doc["left"] = to_json(f.left);
    doc["right"] = to_json(f.right);
    return doc;
}

inline DmpgiMethod parse_method(const std::string& name) {
    if (name == "direct") return DmpgiMethod::direct;
    if (name == "factor") return DmpgiMethod::factor;
    if (name == "explicit") return DmpgiMethod::explicit_formula;
    throw usage_error("unknown --method '" + name + "' (expected direct, factor or explicit)");
}

inline std::optional<RealMatrix> load_parameter(const Options& opts, std::istream& in) {
    if (opts.p.empty()) return std::nullopt;
    return require_real(load(opts.p, in), "--p");
}

// ---- subcommands -------------------------------------------------------

inline int cmd_rank(const Options& opts, const Streams& io) {
    const auto a = load(opts.input, io.in);
    const auto r = rref(a.real());
    ordered_json doc;
    doc["rank"] = r.rank();
    doc["pivot_cols"] = r.pivot_cols;
    Emitter(opts, io.out).write(format_json(doc));
    return exit_ok;
}

inline int cmd_fullrank(const Options& opts, const Streams& io) {
    const auto a = load(opts.input, io.in);
    const auto fg = full_rank_decompose(a.real());
    ordered_json doc;
    doc["rank"] = fg.rank();
    doc["F"] = to_json(RealDualMatrix(fg.f));
    doc["G"] = to_json(RealDualMatrix(fg.g));
    Emitter(opts, io.out).write(format_json(doc));
    return exit_ok;
}

inline int cmd_pinv(const Options& opts, const Streams& io) {
    const auto a = load(opts.input, io.in);
    const auto& real = require_real(a, "pinv input");
    Emitter(opts, io.out).write(format_dual_matrix(RealDualMatrix(pinv(real))));
    return exit_ok;
}

inline int cmd_exists(const Options& opts, const Streams& io) {
    const auto a = load(opts.input, io.in);
    const auto check = dmpgi_exists(a);
    const std::size_t r = rank(a.real());
    ordered_json doc;
    doc["rank"] = r;
    if (r == 0) {
        doc["decomposition_exists"] = nullptr;
    } else {
        doc["decomposition_exists"] = decomposition_exists(a).holds;
    }
    doc["dmpgi_exists"] = check.holds;
    doc["residual"] = to_json(check.residual);
    Emitter(opts, io.out).write(format_json(doc));
    return check.holds ? exit_ok : exit_false;
}

inline int cmd_ddecomp(const Options& opts, const Streams& io) {
    const auto a = load(opts.input, io.in);
    const auto p = load_parameter(opts, io.in);
    const auto check = decomposition_exists(a);
    if (!check) {
        ordered_json doc;
        doc["exists"] = false;
        doc["residual"] = to_json(check.residual);
        Emitter(opts, io.out).write(format_json(doc));
        io.err << "dual r-rank decomposition does not exist\n";
        return exit_false;
    }
    Emitter(opts, io.out).write(format_json(factors_json(decompose(a, p))));
    return exit_ok;
}

inline int cmd_dmpgi(const Options& opts, const Streams& io) {
    const auto method = parse_method(opts.method);
    const auto a = load(opts.input, io.in);
    Emitter(opts, io.out).write(format_dual_matrix(dmpgi(a, method)));
    return exit_ok;
}

inline int cmd_check_idempotent(const Options& opts, const Streams& io) {
    const auto a = load(opts.input, io.in);
    if (!a.is_square()) throw usage_error("check-idempotent needs a square matrix");
    const bool idem = is_dual_idempotent(a);
    ordered_json doc;
    doc["idempotent"] = idem;
    doc["characterization"] = idempotent_characterization(a);
    if (idem && !a.real().is_zero()) {
        doc["factors_commute"] = factor_commute_is_identity(idempotent_decompose(a));
        doc["dmpgi"] = to_json(idempotent_dmpgi(a));
    }
    Emitter(opts, io.out).write(format_json(doc));
    return idem ? exit_ok : exit_false;
}

inline int cmd_check_ep(const Options& opts, const Streams& io) {
    const auto a = load(opts.input, io.in);
    if (!a.is_square()) throw usage_error("check-ep needs a square matrix");
    ordered_json doc;
    if (!dmpgi_exists(a)) {
        doc["dmpgi_exists"] = false;
        Emitter(opts, io.out).write(format_json(doc));
        io.err << "DMPGI does not exist; EP is undefined\n";
        return exit_false;
    }
    const bool ep = is_dual_ep(a);
    doc["dmpgi_exists"] = true;
    doc["ep"] = ep;
    doc["via_parts"] = ep_via_parts(a);
    if (a.real().is_zero()) {
        doc["via_factors"] = nullptr;
        doc["via_decomposition"] = nullptr;
    } else {
        const auto f = decompose(a);
        doc["via_factors"] = ep_via_factors(f);
        doc["via_decomposition"] = ep_via_decomposition(f);
    }
    Emitter(opts, io.out).write(format_json(doc));
    return ep ? exit_ok : exit_false;
}

inline int cmd_penrose_profile(const Options& opts, const Streams& io) {
    if (opts.candidate.empty()) throw usage_error("penrose-profile needs --candidate");
    const auto a = load(opts.input, io.in);
    const auto x = load(opts.candidate, io.in);
    const auto profile = penrose_profile(a, x);
    ordered_json doc;
    ordered_json eqs = ordered_json::array();
    for (int e = 1; e <= 4; ++e) {
        if (profile.has(e)) eqs.push_back(e);
    }
    doc["profile"] = std::move(eqs);
    Emitter(opts, io.out).write(format_json(doc));
    return exit_ok;
}

inline int cmd_mixed_membership(const Options& opts, const Streams& io) {
    const auto a = load(opts.input, io.in);
    const auto p = load_parameter(opts, io.in);
    if (!decomposition_exists(a)) {
        io.err << "dual r-rank decomposition does not exist\n";
        return exit_false;
    }
    const auto report = verify_mixed_membership(decompose(a, p), opts.samples, opts.seed);

    ordered_json doc;
    doc["samples"] = report.samples;
    doc["seed"] = opts.seed;
    ordered_json claims;
    for (auto c : all_membership_claims) {
        ordered_json t;
        t["equation"] = claimed_equation(c);
        t["passed"] = report.tally(c).passed;
        t["failed"] = report.tally(c).failed;
        claims[to_string(c)] = std::move(t);
    }
    doc["claims"] = std::move(claims);
    doc["failures"] = report.total_failures();
    if (report.first_failure) {
        ordered_json ff;
        ff["sample"] = report.first_failure->sample;
        ff["claim"] = to_string(report.first_failure->claim);
        ff["profile"] = report.first_failure->profile.to_string();
        ff["candidate"] = to_json(report.first_failure->candidate);
        doc["first_failure"] = std::move(ff);
    } else {
        doc["first_failure"] = nullptr;
    }
    Emitter(opts, io.out).write(format_json(doc));
    return report.all_passed() ? exit_ok : exit_false;
}

}  // namespace detail

// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact dual-matrix rank decomposition and DMPGI toolkit", "dualrank"};
    app.require_subcommand(1);
    Options opts;
    const Streams io{in, out, err};

    using Handler = int (*)(const Options&, const Streams&);
    struct Sub {
        const char* name;
        const char* help;
        Handler handler;
    };
    const std::vector<Sub> subs{
        {"rank", "rank and pivot columns of the real part", detail::cmd_rank},
        {"fullrank", "RREF-canonical full-rank factors F, G of the real part", detail::cmd_fullrank},
        {"pinv", "Moore-Penrose inverse of a real matrix", detail::cmd_pinv},
        {"exists", "existence of the dual r-rank decomposition and the DMPGI", detail::cmd_exists},
        {"ddecomp", "dual r-rank decomposition with parameter P", detail::cmd_ddecomp},
        {"dmpgi", "dual Moore-Penrose generalized inverse", detail::cmd_dmpgi},
        {"check-idempotent", "dual idempotent test", detail::cmd_check_idempotent},
        {"check-ep", "dual EP test by four characterizations", detail::cmd_check_ep},
        {"penrose-profile", "which dual Penrose equations a candidate satisfies", detail::cmd_penrose_profile},
        {"mixed-membership", "sampled check of mixed {i}-inverse products", detail::cmd_mixed_membership},
    };

    Handler chosen = nullptr;
    for (const auto& s : subs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("--input", opts.input, "input document (default stdin)");
        sub->add_option("--output", opts.output, "output path (default stdout)");
        const std::string name = s.name;
        if (name == "ddecomp" || name == "mixed-membership") {
            sub->add_option("--p", opts.p, "r x r parameter P (default zero)");
        }
        if (name == "dmpgi") {
            sub->add_option("--method", opts.method, "direct | factor | explicit");
        }
        if (name == "penrose-profile") {
            sub->add_option("--candidate", opts.candidate, "candidate inverse document");
        }
        if (name == "mixed-membership") {
            sub->add_option("--samples", opts.samples, "number of parameter draws");
            sub->add_option("--seed", opts.seed, "RNG seed");
        }
        sub->callback([&chosen, h = s.handler] { chosen = h; });
    }

    std::vector<std::string> argv_storage{"dualrank"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        return chosen(opts, io);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const dimension_error& e) {
        err << "dimension error: " << e.what() << '\n';
        return exit_usage;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return exit_false;
    }
}

}  // namespace dualrank::cli

#endif  // DUALRANK_CLI_HPP
