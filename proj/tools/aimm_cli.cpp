#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "aimm/annihilator.hpp"
#include "aimm/boolfun.hpp"
#include "aimm/constructions.hpp"
#include "aimm/gf2n.hpp"
#include "aimm/univariate.hpp"

using nlohmann::json;
using namespace aimm;

namespace {

// exit codes: 0 clean, 1 verification counterexample, 2 usage error
constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string degree_str(int d) { return d < 0 ? "-inf" : std::to_string(d); }

uint32_t parse_hex_u32(const std::string& text, const char* what) {
    if (text.empty() || text.size() > 8) throw UsageError(std::string(what) + ": bad hex");
    uint32_t v = 0;
    for (char ch : text) {
        int digit;
        if (ch >= '0' && ch <= '9')
            digit = ch - '0';
        else if (ch >= 'a' && ch <= 'f')
            digit = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F')
            digit = ch - 'A' + 10;
        else
            throw UsageError(std::string(what) + ": bad hex digit");
        v = v << 4 | static_cast<uint32_t>(digit);
    }
    return v;
}

FieldSpec make_spec(unsigned n, const std::string& modulus_hex) {
    try {
        if (modulus_hex.empty()) return FieldSpec(n);
        return FieldSpec(n, parse_hex_u32(modulus_hex, "--modulus"));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// Shared input-selection flags: exactly one source per invocation.
struct InputFlags {
    std::string tt_hex;
    std::string anf_text;
    std::string univariate_file;
    std::string construct_name;
    std::string cf_variant = "with-zero";

    void attach(CLI::App* cmd, bool with_construct = true) {
        cmd->add_option("--tt", tt_hex, "truth table as hex, bit i = f(i)");
        cmd->add_option("--anf", anf_text, "ANF string, e.g. \"x1*x2 + x3\"");
        cmd->add_option("--univariate", univariate_file,
                        "JSON file: list of 2^n hex coefficients, index = exponent");
        if (with_construct) {
            cmd->add_option("--construct", construct_name,
                            "named function: carlet-feng | majority");
            cmd->add_option("--cf-variant", cf_variant,
                            "carlet-feng support: with-zero | powers-only")
                ->check(CLI::IsMember({"with-zero", "powers-only"}));
        }
    }

    int source_count() const {
        return (tt_hex.empty() ? 0 : 1) + (anf_text.empty() ? 0 : 1) +
               (univariate_file.empty() ? 0 : 1) + (construct_name.empty() ? 0 : 1);
    }

    TruthTable construct(const FieldSpec& spec) const {
        if (construct_name == "majority") return majority(spec.n());
        if (construct_name == "carlet-feng")
            return carlet_feng(spec, cf_variant == "powers-only" ? CfSupport::powers_only
                                                                 : CfSupport::with_zero);
        throw UsageError("unknown construction: " + construct_name);
    }

    UnivariatePoly load_univariate(const FieldSpec& spec) const {
        std::ifstream in(univariate_file);
        if (!in) throw UsageError("cannot open " + univariate_file);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw UsageError(univariate_file + ": " + e.what());
        }
        if (!j.is_array() || j.size() != spec.order())
            throw UsageError(univariate_file + ": expected a JSON list of " +
                             std::to_string(spec.order()) + " hex coefficients");
        UnivariatePoly g(spec);
        for (uint32_t i = 0; i < spec.order(); ++i) {
            if (!j[i].is_string()) throw UsageError(univariate_file + ": non-string entry");
            try {
                g.set_coeff(i, FieldElement::from_hex(spec, j[i].get<std::string>()).index());
            } catch (const std::invalid_argument& e) {
                throw UsageError(univariate_file + ": " + e.what());
            }
        }
        return g;
    }

    // Boolean view of the input; univariate sources must be Boolean.
    TruthTable truth_table(const FieldSpec& spec) const {
        try {
            if (!tt_hex.empty()) return TruthTable::from_hex(spec.n(), tt_hex);
            if (!anf_text.empty()) return tt_from_anf(AnfPoly::parse(spec.n(), anf_text));
            if (!construct_name.empty()) return construct(spec);
            return load_univariate(spec).to_truth_table();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        } catch (const std::domain_error& e) {
            throw UsageError(e.what());
        }
    }
};

json witness_json(const AiReport& r) {
    if (const AnfPoly* p = std::get_if<AnfPoly>(&r.witness)) return p->to_string();
    const auto& ext = std::get<ExtMultivariatePoly>(r.witness);
    json j = json::object();
    for (const auto& [mask, coeff] : ext.terms())
        j[monomial_to_string(mask)] = FieldElement(ext.spec(), coeff).to_hex();
    return j;
}

json report_json(const AiReport& r) {
    return json{{"n", r.n},       {"ai", r.ai},
                {"mode", to_string(r.mode)}, {"side", to_string(r.side)},
                {"witness", witness_json(r)}, {"elapsed_ms", r.elapsed_ms}};
}

std::string witness_text(const AiReport& r) {
    if (const AnfPoly* p = std::get_if<AnfPoly>(&r.witness)) return p->to_string();
    return std::get<ExtMultivariatePoly>(r.witness).to_string();
}

Basis make_basis(const FieldSpec& spec, const std::string& name) {
    try {
        if (name.empty() || name == "polynomial") return Basis::polynomial(spec);
        if (name == "self-dual") return Basis::self_dual(spec);
        std::vector<FieldElement> elems;
        std::stringstream ss{name};
        std::string part;
        while (std::getline(ss, part, ','))
            elems.push_back(spec.element(parse_hex_u32(part, "--basis")));
        return Basis(spec, elems);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--basis: ") + e.what());
    }
}

void run_parallel(size_t count, unsigned threads, const std::function<void(size_t)>& work) {
    if (threads <= 1) {
        for (size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads && t < count; ++t)
        pool.emplace_back([&] {
            for (size_t i; (i = next.fetch_add(1)) < count;) work(i);
        });
    for (auto& th : pool) th.join();
}

struct AnalyzeResult {
    std::string tt_hex;
    unsigned weight;
    bool balanced;
    int anf_degree;
    AiReport base;
    AiReport ext;
    bool equal;
};

AnalyzeResult analyze_one(const TruthTable& f, const FieldSpec& spec) {
    AiReport base = algebraic_immunity(f);
    AiReport ext = algebraic_immunity_ext(f, spec);
    bool equal = base.ai == ext.ai;
    return AnalyzeResult{f.to_hex(),   f.weight(),      f.is_balanced(),
                         anf_from_tt(f).degree(), std::move(base), std::move(ext),
                         equal};
}

int cmd_analyze(const InputFlags& input, const std::string& batch_file, unsigned n,
                const std::string& modulus_hex, unsigned threads, bool as_json) {
    FieldSpec spec = make_spec(n, modulus_hex);

    if (!batch_file.empty()) {
        std::ifstream in(batch_file);
        if (!in) throw UsageError("cannot open " + batch_file);
        std::vector<TruthTable> fns;
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (line.empty()) continue;
            try {
                fns.push_back(TruthTable::from_hex(n, line));
            } catch (const std::invalid_argument& e) {
                throw UsageError(batch_file + ": " + e.what());
            }
        }
        std::vector<std::optional<AnalyzeResult>> results(fns.size());
        run_parallel(fns.size(), threads,
                     [&](size_t i) { results[i] = analyze_one(fns[i], spec); });
        bool all_equal = true;
        json out = json::array();
        for (const auto& r : results) {
            all_equal = all_equal && r->equal;
            if (as_json)
                out.push_back(json{{"tt", r->tt_hex},
                                   {"base", report_json(r->base)},
                                   {"extension", report_json(r->ext)},
                                   {"equal", r->equal}});
            else
                std::cout << r->tt_hex << " ai_base " << r->base.ai << " ai_ext "
                          << r->ext.ai << " equal " << (r->equal ? "true" : "false")
                          << "\n";
        }
        if (as_json) std::cout << out.dump(2) << "\n";
        return all_equal ? kOk : kCounterexample;
    }

    TruthTable f = input.truth_table(spec);
    AnalyzeResult r = analyze_one(f, spec);
    UnivariatePoly g = interpolate(f, spec);
    if (as_json) {
        std::cout << json{{"n", spec.n()},
                          {"tt", r.tt_hex},
                          {"weight", r.weight},
                          {"balanced", r.balanced},
                          {"anf_degree", r.anf_degree},
                          {"univariate_degree", g.wt_degree()},
                          {"base", report_json(r.base)},
                          {"extension", report_json(r.ext)},
                          {"equal", r.equal}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "n " << spec.n() << "\n"
                  << "tt " << r.tt_hex << "\n"
                  << "weight " << r.weight << "\n"
                  << "balanced " << (r.balanced ? "true" : "false") << "\n"
                  << "anf_degree " << degree_str(r.anf_degree) << "\n"
                  << "univariate_degree " << degree_str(g.wt_degree()) << "\n"
                  << "ai_base " << r.base.ai << "\n"
                  << "side_base " << to_string(r.base.side) << "\n"
                  << "witness_base " << witness_text(r.base) << "\n"
                  << "ai_ext " << r.ext.ai << "\n"
                  << "side_ext " << to_string(r.ext.side) << "\n"
                  << "witness_ext " << witness_text(r.ext) << "\n"
                  << "equal " << (r.equal ? "true" : "false") << "\n";
    }
    return r.equal ? kOk : kCounterexample;
}

int cmd_convert(const InputFlags& input, unsigned n, const std::string& modulus_hex,
                const std::string& target, const std::string& basis_name, bool as_json) {
    FieldSpec spec = make_spec(n, modulus_hex);

    std::optional<UnivariatePoly> g;
    std::optional<TruthTable> f;
    if (!input.univariate_file.empty())
        g = input.load_univariate(spec);
    else
        f = input.truth_table(spec);

    auto to_table = [&]() -> TruthTable {
        if (f) return *f;
        try {
            return g->to_truth_table();
        } catch (const std::domain_error& e) {
            throw UsageError(e.what());
        }
    };

    if (target == "tt") {
        std::string hex = to_table().to_hex();
        std::cout << (as_json ? json(hex).dump() : hex) << "\n";
    } else if (target == "anf") {
        std::string anf = anf_from_tt(to_table()).to_string();
        std::cout << (as_json ? json(anf).dump() : anf) << "\n";
    } else if (target == "univariate") {
        UnivariatePoly poly = g ? *g : interpolate(*f, spec);
        std::cout << json(poly.to_hex_list()).dump() << "\n";
    } else if (target == "multivariate-ext") {
        UnivariatePoly poly = g ? *g : interpolate(*f, spec);
        ExtMultivariatePoly h = to_multivariate(poly, make_basis(spec, basis_name));
        if (as_json) {
            json j = json::object();
            for (const auto& [mask, coeff] : h.terms())
                j[monomial_to_string(mask)] = FieldElement(spec, coeff).to_hex();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << h.to_string() << "\n";
        }
    } else {
        throw UsageError("unknown conversion target: " + target);
    }
    return kOk;
}

int cmd_annihilators(const InputFlags& input, unsigned n, const std::string& modulus_hex,
                     unsigned degree, const std::string& mode, const std::string& side,
                     bool as_json) {
    FieldSpec spec = make_spec(n, modulus_hex);
    TruthTable f = input.truth_table(spec);
    if (side == "f+1") f = f.complement();
    if (degree > spec.n()) throw UsageError("--degree must be at most n");

    std::vector<std::string> lines;
    if (mode == "base")
        for (const AnfPoly& gpoly : annihilator_space(f, degree))
            lines.push_back(gpoly.to_string());
    else
        for (const ExtMultivariatePoly& gpoly : annihilator_space_ext(f, degree, spec))
            lines.push_back(gpoly.to_string());

    if (as_json) {
        std::cout << json{{"n", spec.n()},
                          {"degree", degree},
                          {"mode", mode == "base" ? "base_field" : "extension_field"},
                          {"side", side == "f+1" ? "annihilates_f_plus_1" : "annihilates_f"},
                          {"dimension", lines.size()},
                          {"basis", lines}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "dimension " << lines.size() << "\n";
        for (const std::string& line : lines) std::cout << line << "\n";
    }
    return kOk;
}

int cmd_equiv_sweep(unsigned n, const std::string& modulus_hex, bool exhaustive,
                    int64_t random_count, uint64_t seed, bool seed_given, bool pai,
                    unsigned threads, bool as_json) {
    FieldSpec spec = make_spec(n, modulus_hex);
    if (exhaustive == (random_count > 0))
        throw UsageError("pass exactly one of --exhaustive or --random COUNT");
    if (exhaustive && n > 5)
        throw UsageError("--exhaustive sweeps are limited to n <= 5");
    if (!exhaustive && n > 6) throw UsageError("--random sweeps are limited to n <= 6");
    if (!exhaustive && !seed_given) throw UsageError("--random requires --seed");

    // Functions come from an index so exhaustive sweeps never materialize the
    // whole population; failures are gathered under a lock and sorted by index
    // afterwards, keeping the output independent of thread scheduling.
    size_t total;
    std::function<TruthTable(size_t)> fn_at;
    std::vector<TruthTable> pool;
    if (exhaustive) {
        total = static_cast<size_t>(1) << (1u << n);
        fn_at = [n](size_t v) {
            TruthTable f(n);
            for (uint32_t i = 0; i < f.size(); ++i) f.set(i, (v >> i) & 1);
            return f;
        };
    } else {
        std::mt19937_64 rng(seed);
        for (int64_t t = 0; t < random_count; ++t) pool.push_back(TruthTable::random(n, rng));
        total = pool.size();
        fn_at = [&pool](size_t i) { return pool[i]; };
    }

    std::mutex mu;
    std::vector<size_t> fail_idx;
    run_parallel(total, threads, [&](size_t i) {
        TruthTable f = fn_at(i);
        bool good = pai ? verify_pai_equivalence(f, spec) : verify_equivalence(f, spec);
        if (!good) {
            std::lock_guard<std::mutex> lock(mu);
            fail_idx.push_back(i);
        }
    });
    std::sort(fail_idx.begin(), fail_idx.end());

    size_t passed = total - fail_idx.size();
    std::vector<std::string> failures;
    for (size_t i : fail_idx) failures.push_back(fn_at(i).to_hex());

    const char* label = pai ? "PAI-equivalent" : "equal";
    if (as_json) {
        std::cout << json{{"n", n},
                          {"total", total},
                          {pai ? "pai_equivalent" : "equal", passed},
                          {"failures", failures}}
                         .dump(2)
                  << "\n";
    } else {
        for (const std::string& hex : failures) std::cout << "mismatch tt " << hex << "\n";
        std::cout << passed << "/" << total << " " << label << "\n";
    }
    return failures.empty() ? kOk : kCounterexample;
}

int cmd_pai_check(const InputFlags& input, unsigned n, const std::string& modulus_hex,
                  bool as_json) {
    FieldSpec spec = make_spec(n, modulus_hex);
    TruthTable f = input.truth_table(spec);
    bool base = is_pai(f, Mode::base_field, spec);
    bool ext = is_pai(f, Mode::extension_field, spec);
    if (as_json) {
        std::cout << json{{"n", n},
                          {"tt", f.to_hex()},
                          {"pai_base", base},
                          {"pai_ext", ext},
                          {"equal", base == ext}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "pai_base " << (base ? "true" : "false") << "\n"
                  << "pai_ext " << (ext ? "true" : "false") << "\n"
                  << "equal " << (base == ext ? "true" : "false") << "\n";
    }
    return base == ext ? kOk : kCounterexample;
}

int cmd_construct(const std::string& name, unsigned n, const std::string& modulus_hex,
                  const std::string& cf_variant, bool as_json) {
    FieldSpec spec = make_spec(n, modulus_hex);
    InputFlags input;
    input.construct_name = name;
    input.cf_variant = cf_variant;
    TruthTable f = input.truth_table(spec);
    if (as_json)
        std::cout << json{{"n", n}, {"tt", f.to_hex()}, {"weight", f.weight()}}.dump(2)
                  << "\n";
    else
        std::cout << f.to_hex() << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Algebraic immunity analysis of Boolean functions, over F_2 and over the\n"
        "extension algebra with F_{2^n} coefficients.\n\n"
        "Truth tables are hex integers whose bit i is f(i) (majority of three\n"
        "variables is e8); field elements are hex coordinate vectors over the\n"
        "polynomial basis; the zero polynomial has degree -inf."};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    unsigned n = 0;
    std::string modulus_hex;
    unsigned threads = 1;

    auto add_common = [&](CLI::App* cmd, bool with_threads = false) {
        cmd->add_option("--n", n, "number of variables (1..16)")
            ->required()
            ->check(CLI::Range(1u, 16u));
        cmd->add_option("--modulus", modulus_hex,
                        "field modulus as hex bits (default: smallest irreducible)");
        if (with_threads)
            cmd->add_option("--threads", threads, "worker threads (default 1)")
                ->check(CLI::Range(1u, 256u));
    };

    InputFlags input;
    std::string batch_file;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "weight, degrees, and immunity under both definitions");
    add_common(analyze, true);
    input.attach(analyze);
    analyze->add_option("--file", batch_file, "batch mode: one tt hex per line");

    std::string target, basis_name;
    CLI::App* convert =
        app.add_subcommand("convert", "convert between function representations");
    add_common(convert);
    input.attach(convert);
    convert->add_option("--to", target, "target: tt | anf | univariate | multivariate-ext")
        ->required();
    convert->add_option("--basis", basis_name,
                        "expansion basis: polynomial | self-dual | comma-separated hex");

    unsigned degree = 0;
    std::string mode = "base", side = "f";
    CLI::App* annih =
        app.add_subcommand("annihilators", "basis of an annihilator space");
    add_common(annih);
    input.attach(annih);
    annih->add_option("--degree", degree, "degree bound")->required();
    annih->add_option("--mode", mode, "base | ext")->check(CLI::IsMember({"base", "ext"}));
    annih->add_option("--side", side, "annihilate f or f+1")
        ->check(CLI::IsMember({"f", "f+1"}));

    bool exhaustive = false, pai = false;
    int64_t random_count = 0;
    uint64_t seed = 0;
    CLI::App* sweep = app.add_subcommand(
        "equiv-sweep", "verify base/extension agreement over a population");
    add_common(sweep, true);
    sweep->add_flag("--exhaustive", exhaustive, "all 2^(2^n) functions (n <= 5)");
    sweep->add_option("--random", random_count, "count of seeded random functions (n <= 6)")
        ->check(CLI::PositiveNumber);
    CLI::Option* seed_opt =
        sweep->add_option("--seed", seed, "rng seed (required with --random)");
    sweep->add_flag("--pai", pai, "compare the two PAI checks instead of immunities");

    CLI::App* paicheck =
        app.add_subcommand("pai-check", "perfect algebraic immunity, both modes");
    add_common(paicheck);
    input.attach(paicheck);

    std::string construct_name;
    CLI::App* construct = app.add_subcommand("construct", "emit a named function");
    add_common(construct);
    construct->add_option("--name", construct_name, "carlet-feng | majority")
        ->required()
        ->check(CLI::IsMember({"carlet-feng", "majority"}));
    std::string cf_variant = "with-zero";
    construct->add_option("--cf-variant", cf_variant,
                          "carlet-feng support: with-zero | powers-only")
        ->check(CLI::IsMember({"with-zero", "powers-only"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (analyze->parsed()) {
            if (!batch_file.empty() && input.source_count() != 0)
                throw UsageError("--file replaces the other input sources");
            if (batch_file.empty() && input.source_count() != 1)
                throw UsageError(
                    "pass exactly one of --tt, --anf, --univariate, --construct");
            return cmd_analyze(input, batch_file, n, modulus_hex, threads, as_json);
        }
        if (convert->parsed()) {
            if (input.source_count() != 1)
                throw UsageError(
                    "pass exactly one of --tt, --anf, --univariate, --construct");
            return cmd_convert(input, n, modulus_hex, target, basis_name, as_json);
        }
        if (annih->parsed()) {
            if (input.source_count() != 1)
                throw UsageError(
                    "pass exactly one of --tt, --anf, --univariate, --construct");
            return cmd_annihilators(input, n, modulus_hex, degree, mode, side, as_json);
        }
        if (sweep->parsed())
            return cmd_equiv_sweep(n, modulus_hex, exhaustive, random_count, seed,
                                   seed_opt->count() > 0, pai, threads, as_json);
        if (paicheck->parsed()) {
            if (input.source_count() != 1)
                throw UsageError(
                    "pass exactly one of --tt, --anf, --univariate, --construct");
            return cmd_pai_check(input, n, modulus_hex, as_json);
        }
        if (construct->parsed())
            return cmd_construct(construct_name, n, modulus_hex, cf_variant, as_json);
        throw UsageError("no subcommand");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
