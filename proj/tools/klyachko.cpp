#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "klyachko/errors.hpp"
#include "klyachko/groupalg.hpp"
#include "klyachko/lie.hpp"
#include "klyachko/ppart.hpp"
#include "klyachko/report.hpp"
#include "klyachko/theta.hpp"

namespace {

using namespace klyachko;

struct VerifyArgs {
    int n = 3;
    bool randomized = false;
    bool symbolic = false;
    int points = 20;
    std::optional<std::uint64_t> seed;
    int degree = 6;
    int max_size = 3;
    std::string json_path;
};

std::uint64_t resolve_seed(const VerifyArgs& args) {
    if (args.seed) return *args.seed;
    if (const char* env = std::getenv("KLYACHKO_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

RunOptions resolve_mode(const VerifyArgs& args) {
    bool randomized = args.randomized || (!args.symbolic && args.n >= 5);
    if (!randomized) return RunOptions::symbolic();
    return RunOptions::random(args.points, resolve_seed(args));
}

int emit(const VerificationReport& report, const std::string& json_path) {
    std::cout << report.text() << "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << json_path << "\n";
            return 2;
        }
        out << report.json();
    }
    return report.pass() ? 0 : 1;
}

void add_common(CLI::App* cmd, VerifyArgs& args) {
    cmd->add_option("--n", args.n, "degree of the symmetric group")->check(CLI::Range(1, 8));
    cmd->add_flag("--randomized", args.randomized, "exact checks at seeded random points");
    cmd->add_flag("--symbolic", args.symbolic, "fully symbolic checks");
    cmd->add_option("--points", args.points, "points per randomized check")
        ->check(CLI::Range(1, 10000));
    cmd->add_option("--seed", args.seed, "seed for randomized mode (default: KLYACHKO_SEED or 0)");
    cmd->add_option("--json", args.json_path, "write a JSON report to this path");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the multi-parameter Klyachko idempotent"};
    app.require_subcommand(1);

    // show
    CLI::App* show = app.add_subcommand("show", "print elements in presentation (free-variable) form");
    show->require_subcommand(1);
    int show_n = 3;
    std::string show_sigma;
    CLI::App* show_element = show->add_subcommand("element", "the n! coefficients of e_n");
    show_element->add_option("--n", show_n, "degree")->check(CLI::Range(1, 7));
    CLI::App* show_partner = show->add_subcommand("partner", "the n coefficients of theta_n");
    show_partner->add_option("--n", show_n, "degree")->check(CLI::Range(1, 7));
    CLI::App* show_gmaj = show->add_subcommand("gmaj", "the q-major index of one permutation");
    show_gmaj->add_option("--sigma", show_sigma, "one-line permutation, e.g. 213")->required();

    // verify
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    VerifyArgs args;
    CLI::App* v_lie = verify->add_subcommand("lie", "orthogonality to all shuffle products");
    CLI::App* v_dynkin = verify->add_subcommand("dynkin", "left-bracketing oracle");
    CLI::App* v_idem = verify->add_subcommand("idempotent", "e*e=e, theta*e=e, e*theta=theta");
    CLI::App* v_ideal = verify->add_subcommand("ideal", "basis size, supports, spanning scalars");
    CLI::App* v_lemma = verify->add_subcommand("lemma", "the four gamma identities");
    CLI::App* v_pare = verify->add_subcommand("pare", "cyclic sums equal delta_{0,k}");
    CLI::App* v_ppart = verify->add_subcommand("ppartition", "series vs brute-force partitions");
    CLI::App* v_shuffle =
        verify->add_subcommand("shuffle-identity", "scalar products vs generating functions");
    CLI::App* v_theta = verify->add_subcommand("theta", "infinite product expansion");
    CLI::App* v_cyclo = verify->add_subcommand("cyclotomic", "root-of-unity specialization");
    for (CLI::App* cmd : {v_lie, v_dynkin, v_idem, v_ideal, v_lemma, v_pare, v_shuffle, v_cyclo}) {
        add_common(cmd, args);
    }
    add_common(v_ppart, args);
    v_ppart->add_option("--degree", args.degree, "series truncation degree")
        ->check(CLI::Range(0, 24));
    v_theta->add_option("--max-size", args.max_size, "largest symmetric group")
        ->check(CLI::Range(0, 5));
    v_theta->add_option("--degree", args.degree, "series truncation degree")
        ->check(CLI::Range(0, 12));
    v_theta->add_option("--json", args.json_path, "write a JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (show_element->parsed()) {
            std::cout << render_klyachko_presentation(show_n);
            return 0;
        }
        if (show_partner->parsed()) {
            std::cout << render_partner_presentation(show_n);
            return 0;
        }
        if (show_gmaj->parsed()) {
            Permutation sigma = parse_permutation(show_sigma);
            std::cout << render_gmaj_presentation(sigma) << "\n";
            return 0;
        }

        if (v_lie->parsed()) return emit(check_lie_suite(args.n, resolve_mode(args)), args.json_path);
        if (v_dynkin->parsed())
            return emit(check_dynkin_suite(args.n, resolve_mode(args)), args.json_path);
        if (v_idem->parsed())
            return emit(check_idempotency(args.n, resolve_mode(args)), args.json_path);
        if (v_ideal->parsed())
            return emit(check_ideal_suite(args.n, resolve_mode(args)), args.json_path);
        if (v_lemma->parsed())
            return emit(check_lemma_suite(args.n, resolve_mode(args)), args.json_path);
        if (v_pare->parsed()) return emit(check_pare_suite(args.n), args.json_path);
        if (v_ppart->parsed())
            return emit(check_ppartition_suite(args.n, args.degree), args.json_path);
        if (v_shuffle->parsed())
            return emit(check_shuffle_identity_suite(args.n), args.json_path);
        if (v_theta->parsed())
            return emit(check_theta_suite(args.max_size, args.degree), args.json_path);
        if (v_cyclo->parsed()) return emit(check_cyclotomic_suite(args.n), args.json_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
