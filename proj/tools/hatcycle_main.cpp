#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hatcycle/constructors.hpp"
#include "hatcycle/dot_export.hpp"
#include "hatcycle/general.hpp"
#include "hatcycle/json_io.hpp"
#include "hatcycle/prover.hpp"
#include "hatcycle/structure.hpp"
#include "hatcycle/verifier.hpp"

// Exit codes: verify uses 0 = winning, 1 = losing, 2 = error; prove uses
// 0 = conclusive certificate, 1 = inconclusive, 2 = error; everything else
// 0 = success, 2 = error.

namespace {

using hatcycle::Assignment;
using hatcycle::CycleStrategy;
using nlohmann::ordered_json;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CycleStrategy load_strategy(const std::string& path) {
    return hatcycle::strategy_from_json(nlohmann::json::parse(read_input(path)));
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

std::uint64_t env_budget(std::uint64_t fallback) {
    const char* v = std::getenv("HATCYCLE_BUDGET");
    if (!v || !*v) return fallback;
    return std::strtoull(v, nullptr, 10);
}

int cmd_verify(const std::string& strategy_path) {
    CycleStrategy f = load_strategy(strategy_path);
    hatcycle::Verdict v = hatcycle::verify(f);
    ordered_json out;
    out["verdict"] = v.winning ? "winning" : "losing";
    if (!v.winning) out["witness"] = hatcycle::assignment_to_json(*v.witness);
    std::cout << out.dump(2) << "\n";
    return v.winning ? 0 : 1;
}

int cmd_construct(int n, const std::string& family, const std::string& out_path) {
    CycleStrategy f = [&] {
        if (family == "chi3") return hatcycle::chi3_strategy(n);
        if (family == "chi2") return hatcycle::chi2_strategy(n);
        if (family == "algebraic") {
            if (n == 3) return hatcycle::algebraic_c3();
            if (n == 4) return hatcycle::algebraic_c4();
            throw hatcycle::DomainError("algebraic strategies exist for n = 3 and n = 4");
        }
        auto w = hatcycle::construct_winning(n);
        if (!w)
            throw hatcycle::DomainError(
                "no winning strategy exists for n = " + std::to_string(n) +
                "; pick --family to build a losing one");
        return *w;
    }();
    write_output(out_path, hatcycle::strategy_to_json(f).dump(2) + "\n");
    return 0;
}

int cmd_classify(const std::string& strategy_path) {
    CycleStrategy f = load_strategy(strategy_path);
    hatcycle::Edge bad;
    auto col = hatcycle::colour_edges(f, &bad);
    ordered_json out;
    out["balanced"] = col.has_value();
    if (!col) {
        out["n"] = f.n;
        out["witness_edge"] =
            ordered_json{{"layer", bad.layer},
                         {"left", static_cast<int>(bad.left)},
                         {"lminus", hatcycle::ell(f, bad, hatcycle::Direction::Minus)},
                         {"lplus", hatcycle::ell(f, bad, hatcycle::Direction::Plus)},
                         {"right", static_cast<int>(bad.right)}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    ordered_json boundaries = ordered_json::array();
    for (int k = 0; k < f.n; ++k) {
        ordered_json edges = ordered_json::array();
        for (hatcycle::Colour b = 0; b < 3; ++b)
            for (hatcycle::Colour c = 0; c < 3; ++c) {
                hatcycle::Edge e{k, b, c};
                edges.push_back(ordered_json{
                    {"colour", hatcycle::to_string(col->at(k, b, c))},
                    {"left", static_cast<int>(b)},
                    {"lminus", hatcycle::ell(f, e, hatcycle::Direction::Minus)},
                    {"lplus", hatcycle::ell(f, e, hatcycle::Direction::Plus)},
                    {"right", static_cast<int>(c)}});
            }
        boundaries.push_back(ordered_json{{"boundary", k}, {"edges", std::move(edges)}});
    }
    auto chi = hatcycle::characteristic(f);
    ordered_json chij;
    if (chi->constant) chij["constant"] = *chi->constant;
    else chij["constant"] = nullptr;
    chij["per_boundary"] = chi->per_boundary;
    out["boundaries"] = std::move(boundaries);
    out["chi"] = std::move(chij);
    out["n"] = f.n;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_count(const std::string& strategy_path) {
    CycleStrategy f = load_strategy(strategy_path);
    ordered_json out;
    out["defeat_count"] = hatcycle::defeat_count(f).to_string();
    out["n"] = f.n;
    out["win_probability"] = hatcycle::win_probability_fixed(f).to_string();
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_prove(int n, const std::string& out_path) {
    hatcycle::ProveBudget budget;
    budget.max_checks = env_budget(budget.max_checks);
    hatcycle::Certificate cert = hatcycle::prove_nonexistence(n, budget);
    write_output(out_path, hatcycle::certificate_to_json(cert).dump(2) + "\n");
    return cert.conclusion == hatcycle::Conclusion::Inconclusive ? 1 : 0;
}

int cmd_general(const std::string& game_path, const std::string& strategy_path) {
    auto game = hatcycle::game_from_json(nlohmann::json::parse(read_input(game_path)));
    auto f = hatcycle::general_strategy_from_json(
        game, nlohmann::json::parse(read_input(strategy_path)));
    int mn = hatcycle::min_over_assignments(game, f,
                                            env_budget(hatcycle::kDefaultGeneralBudget));
    ordered_json out;
    out["min_correct"] = mn;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_export_dot(const std::string& strategy_path) {
    CycleStrategy f = load_strategy(strategy_path);
    auto col = hatcycle::colour_edges(f);
    if (!col)
        throw hatcycle::DomainError("strategy is not balanced; no colouring to draw");
    std::cout << hatcycle::export_dot(f, *col);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"three-colour hat guessing strategies on cycles"};
    app.require_subcommand(1);

    std::string strategy_path, game_path, out_path, family;
    int n = 0;

    auto* verify = app.add_subcommand("verify", "decide winning/losing, print witness");
    verify->add_option("--strategy", strategy_path, "strategy JSON (default stdin)");

    auto* construct = app.add_subcommand("construct", "emit a published strategy");
    construct->add_option("--n", n, "cycle length")->required();
    construct->add_option("--family", family, "chi3 | chi2 | algebraic");
    construct->add_option("--out", out_path, "output file (default stdout)");

    auto* classify = app.add_subcommand("classify", "continuation counts and colouring");
    classify->add_option("--strategy", strategy_path, "strategy JSON (default stdin)");

    auto* count = app.add_subcommand("count", "exact defeat count and win probability");
    count->add_option("--strategy", strategy_path, "strategy JSON (default stdin)");

    auto* prove = app.add_subcommand("prove", "nonexistence certificate for one n");
    prove->add_option("--n", n, "cycle length")->required();
    prove->add_option("--out", out_path, "output file (default stdout)");

    auto* general = app.add_subcommand("general", "guaranteed correct guesses on a digraph");
    general->add_option("--game", game_path, "game JSON")->required();
    general->add_option("--strategy", strategy_path, "general strategy JSON")->required();

    auto* dot = app.add_subcommand("export-dot", "Graphviz view of the coloured graph");
    dot->add_option("--strategy", strategy_path, "strategy JSON (default stdin)");

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return cmd_verify(strategy_path);
        if (construct->parsed()) return cmd_construct(n, family, out_path);
        if (classify->parsed()) return cmd_classify(strategy_path);
        if (count->parsed()) return cmd_count(strategy_path);
        if (prove->parsed()) return cmd_prove(n, out_path);
        if (general->parsed()) return cmd_general(game_path, strategy_path);
        if (dot->parsed()) return cmd_export_dot(strategy_path);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
