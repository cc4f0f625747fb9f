#include "symdet/cli.hpp"

#include <exception>
#include <optional>

#include "CLI11.hpp"

#include "symdet/classify.hpp"
#include "symdet/partition.hpp"
#include "symdet/render.hpp"
#include "symdet/resolution.hpp"
#include "symdet/verify.hpp"

namespace symdet {

namespace {

struct Config {
    int n = 0;
    std::optional<int> t;
    std::string family;
    std::string format = "table";
    std::string shape;
    int oracle_cap = default_ssyt_cap;
    int n_max = 6;
    int t_max = -1;
};

void add_format(CLI::App* sub, Config& cfg)
{
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
}

int cmd_betti(const Config& cfg, std::ostream& out)
{
    const BettiTable table = betti_table(RingParams::make(cfg.n, *cfg.t));
    if (cfg.format == "json")
        out << to_json(table).dump(2) << '\n';
    else
        out << render_betti_diagram(table);
    return exit_ok;
}

int cmd_classify(const Config& cfg, std::ostream& out)
{
    const Family family = parse_family(cfg.family);
    Classification c;
    switch (family) {
    case Family::symmetric:
        if (!cfg.t)
            throw std::invalid_argument("--t is required for the symmetric family");
        c = classify_symmetric(RingParams::make(cfg.n, *cfg.t));
        break;
    case Family::hankel:
        if (!cfg.t)
            throw std::invalid_argument("--t is required for the hankel family");
        c = classify_hankel(cfg.n, *cfg.t);
        break;
    case Family::pfaffian_square:
        if (cfg.t)
            throw std::invalid_argument("the pfaffian-square family takes no --t");
        c = classify_pfaffian_square(cfg.n);
        break;
    }
    if (cfg.format == "json")
        out << to_json(c).dump(2) << '\n';
    else
        out << render_classification(c);
    return exit_ok;
}

int cmd_schur_rank(const Config& cfg, std::ostream& out)
{
    if (cfg.n < 1)
        throw std::invalid_argument("--n must be positive");
    const Partition shape = Partition::parse(cfg.shape);
    const BigInt rank = schur_rank(shape, cfg.n);
    std::optional<BigInt> oracle;
    if (shape.weight() <= cfg.oracle_cap)
        oracle = ssyt_count(conjugate(shape), cfg.n, cfg.oracle_cap);

    if (cfg.format == "json") {
        Json j{{"shape", shape.to_string()}, {"n", cfg.n}, {"rank", to_decimal(rank)}};
        j["oracle"] = oracle ? Json(to_decimal(*oracle)) : Json(nullptr);
        out << j.dump(2) << '\n';
    } else {
        out << "rank L_(" << shape.to_string() << ") E, dim E = " << cfg.n << ": " << to_decimal(rank) << '\n';
        if (oracle)
            out << "tableau count on conjugate shape: " << to_decimal(*oracle) << '\n';
        else
            out << "tableau count skipped: " << shape.weight() << " boxes exceeds --oracle-cap " << cfg.oracle_cap << '\n';
    }
    return exit_ok;
}

int cmd_partition(const Config& cfg, std::ostream& out)
{
    const Partition p = cfg.shape.find('|') != std::string::npos ? from_hook_notation(HookNotation::parse(cfg.shape))
                                                                 : Partition::parse(cfg.shape);
    const Partition conj = conjugate(p);
    Json hooks = Json::array();
    for (int i = 1; i <= static_cast<int>(p.length()); ++i) {
        Json row = Json::array();
        for (int j = 1; j <= p.row(static_cast<std::size_t>(i)); ++j)
            row.push_back(hook_length(p, i, j));
        hooks.push_back(row);
    }
    const std::optional<std::string> hook = p.empty() ? std::nullopt : std::optional(to_hook_notation(p).to_string());

    if (cfg.format == "json") {
        Json j{{"shape", p.to_string()}, {"weight", p.weight()}, {"conjugate", conj.to_string()}, {"diagonal_rank", diagonal_rank(p)}};
        j["hook_notation"] = hook ? Json(*hook) : Json(nullptr);
        j["hook_lengths"] = hooks;
        out << j.dump(2) << '\n';
    } else {
        out << "shape:         " << p.to_string() << '\n'
            << "weight:        " << p.weight() << '\n'
            << "conjugate:     " << conj.to_string() << '\n'
            << "diagonal rank: " << diagonal_rank(p) << '\n'
            << "hook notation: " << hook.value_or("-") << '\n'
            << "hook lengths:\n";
        for (const auto& row : hooks) {
            out << " ";
            for (const auto& h : row)
                out << ' ' << h.get<int>();
            out << '\n';
        }
    }
    return exit_ok;
}

int cmd_verify(const Config& cfg, const CliHooks& hooks, std::ostream& out, std::ostream& err)
{
    if (cfg.n_max < 2)
        throw std::invalid_argument("--n-max must be at least 2");
    VerifyOptions opts;
    opts.n_max = cfg.n_max;
    opts.t_max = cfg.t_max;
    opts.oracle_cap = cfg.oracle_cap;
    opts.rank = hooks.rank;
    const auto results = run_verify(opts);

    if (cfg.format == "json") {
        Json list = Json::array();
        for (const auto& r : results)
            list.push_back(Json{{"property", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"counterexample", r.counterexample}});
        out << Json{{"n_max", cfg.n_max}, {"t_max", cfg.t_max < 0 ? cfg.n_max - 1 : cfg.t_max}, {"results", list}}.dump(2) << '\n';
    } else {
        for (const auto& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
            if (!r.passed)
                out << ": " << r.counterexample;
            out << '\n';
        }
    }
    for (const auto& r : results) {
        if (!r.passed) {
            err << "verification failed: " << r.name << ": " << r.counterexample << '\n';
            return exit_verify_failed;
        }
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks)
{
    Config cfg;
    CLI::App app{"Betti tables and almost Gorenstein classification of symmetric determinantal rings", "symdet"};
    app.require_subcommand(1);

    auto* betti = app.add_subcommand("betti", "Graded Betti table of S/I_{t+1}(X), X generic symmetric n x n");
    betti->add_option("--n", cfg.n, "Matrix size")->required();
    betti->add_option("--t", cfg.t, "Rank bound; minors of size t+1")->required();
    add_format(betti, cfg);

    auto* classify = app.add_subcommand("classify", "Gorenstein / almost Gorenstein classification");
    classify->add_option("--family", cfg.family, "Ring family")->required()->check(CLI::IsMember({"symmetric", "hankel", "pfaffian-square"}));
    classify->add_option("--n", cfg.n, "Matrix size")->required();
    classify->add_option("--t", cfg.t, "Family parameter (symmetric, hankel)");
    add_format(classify, cfg);

    auto* schur = app.add_subcommand("schur-rank", "Rank of the Schur module L_lambda E");
    schur->add_option("--shape", cfg.shape, "Partition, e.g. 5,4,1")->required();
    schur->add_option("--n", cfg.n, "dim E")->required();
    schur->add_option("--oracle-cap", cfg.oracle_cap, "Largest shape checked by tableau enumeration")->capture_default_str();
    add_format(schur, cfg);

    auto* part = app.add_subcommand("partition", "Conjugate, diagonal rank, hook notation and hook lengths");
    part->add_option("--shape", cfg.shape, "Partition \"4,4,2,1\" or hook notation \"4,3|4,2\"")->required();
    add_format(part, cfg);

    auto* verify = app.add_subcommand("verify", "Run all invariant suites over a parameter grid");
    verify->add_option("--n-max", cfg.n_max, "Largest n in the grid (keep <= 10 for interactive use)")->capture_default_str();
    verify->add_option("--t-max", cfg.t_max, "Largest t in the grid (default n-max - 1)");
    verify->add_option("--oracle-cap", cfg.oracle_cap, "Largest shape checked by tableau enumeration")->capture_default_str();
    add_format(verify, cfg);

    std::vector<const char*> argv{"symdet"};
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (betti->parsed())
            return cmd_betti(cfg, out);
        if (classify->parsed())
            return cmd_classify(cfg, out);
        if (schur->parsed())
            return cmd_schur_rank(cfg, out);
        if (part->parsed())
            return cmd_partition(cfg, out);
        return cmd_verify(cfg, hooks, out, err);
    } catch (const OracleTooLarge& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_verify_failed;
    }
}

} // namespace symdet
