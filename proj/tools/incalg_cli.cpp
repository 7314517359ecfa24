// Licensed under the Apache License 2.0 (see LICENSE file).

// Command line front end over the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "incalg/incalg.h"

namespace {

constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

int emit(int status, char* text, const std::string& out_path, const std::string& usage) {
    if (status == INCALG_OK && !text) return exit_domain;
    if (status != INCALG_OK) {
        std::cerr << "error: " << incalg_last_error() << "\n";
        if (status != INCALG_ERR_PARSE && status != INCALG_ERR_ARGUMENT) return exit_domain;
        std::cerr << usage;
        return exit_usage;
    }
    std::string payload(text);
    incalg_string_free(text);
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return exit_domain;
    }
    out << payload;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Incidence algebras, interval bialgebras and Moebius functions in exact arithmetic"};
    app.require_subcommand(1);
    app.fallthrough();
    app.failure_message(CLI::FailureMessage::help);
    app.set_version_flag("--version", std::string(incalg_version()));

    bool json = false;
    std::string out_path;
    std::uint64_t seed = 1;
    app.add_flag("--json", json, "Emit JSON instead of CSV");
    app.add_option("--out", out_path, "Write output to a file");
    app.add_option("--seed", seed, "Seed for randomized checks");

    std::function<int(int)> action;
    std::string usage;
    std::string poset_spec, relation_spec, demo_name;
    unsigned bernoulli_n = 0;
    std::size_t mobius_max = 0;

    auto* poset = app.add_subcommand("poset", "Poset commands");
    poset->require_subcommand(1);
    auto* poset_check = poset->add_subcommand("check", "Validate a poset and list its invariants");
    poset_check->add_option("poset", poset_spec, "Generator (boolean:n, chain:n, divisors:N, fan:n) or JSON file")
        ->required();
    poset_check->callback([&] {
        action = [&](int fmt) {
            char* text = nullptr;
            const int status = incalg_poset_check(poset_spec.c_str(), fmt, &text);
            return emit(status, text, out_path, usage);
        };
    });

    auto* relation = app.add_subcommand("relation", "Interval relation commands");
    relation->require_subcommand(1);
    auto* relation_check = relation->add_subcommand("check", "Decide bialgebra compatibility");
    relation_check->add_option("poset", poset_spec)->required();
    relation_check->add_option("relation", relation_spec, "Builtin name or JSON file")->required();
    relation_check->callback([&] {
        action = [&](int fmt) {
            char* text = nullptr;
            const int status = incalg_relation_check(poset_spec.c_str(), relation_spec.c_str(), fmt, &text);
            return emit(status, text, out_path, usage);
        };
    });

    auto* mobius = app.add_subcommand("mobius", "Moebius function on the interval classes");
    mobius->add_option("poset", poset_spec)->required();
    mobius->add_option("relation", relation_spec)->required();
    mobius->callback([&] {
        action = [&](int fmt) {
            char* text = nullptr;
            const int status = incalg_mobius_table(poset_spec.c_str(), relation_spec.c_str(), fmt, &text);
            return emit(status, text, out_path, usage);
        };
    });

    auto* antipode = app.add_subcommand("antipode", "Antipode of the interval bialgebra");
    antipode->add_option("poset", poset_spec)->required();
    antipode->add_option("relation", relation_spec)->required();
    antipode->callback([&] {
        action = [&](int fmt) {
            char* text = nullptr;
            const int status = incalg_antipode_table(poset_spec.c_str(), relation_spec.c_str(), fmt, &text);
            return emit(status, text, out_path, usage);
        };
    });

    auto* bialgebra = app.add_subcommand("bialgebra", "Interval bialgebra commands");
    bialgebra->require_subcommand(1);
    auto* verify = bialgebra->add_subcommand("verify", "Run every axiom check on the interval bialgebra");
    verify->add_option("poset", poset_spec)->required();
    verify->add_option("relation", relation_spec)->required();
    verify->callback([&] {
        action = [&](int fmt) {
            char* text = nullptr;
            const int status = incalg_bialgebra_verify(poset_spec.c_str(), relation_spec.c_str(), seed, fmt, &text);
            return emit(status, text, out_path, usage);
        };
    });

    auto* bernoulli = app.add_subcommand("bernoulli", "Bernoulli numbers beta_0 .. beta_N");
    bernoulli->add_option("--n", bernoulli_n, "Largest index (at most 60)")->required();
    bernoulli->callback([&] {
        action = [&](int fmt) {
            char* text = nullptr;
            const int status = incalg_bernoulli_table(bernoulli_n, fmt, &text);
            return emit(status, text, out_path, usage);
        };
    });

    auto* classical = app.add_subcommand("classical-mobius", "Classical Moebius function mu_1 .. mu_N");
    classical->add_option("--max", mobius_max, "Largest argument (at most 10^6)")->required();
    classical->callback([&] {
        action = [&](int fmt) {
            char* text = nullptr;
            const int status = incalg_classical_mobius_table(mobius_max, fmt, &text);
            return emit(status, text, out_path, usage);
        };
    });

    auto* demo = app.add_subcommand("demo", "Worked examples");
    demo->add_option("name", demo_name,
                     "hamilton, matrix:n, boolean:n, chain:n, divisors:N, fan:n or squarefree:N")
        ->required();
    demo->callback([&] {
        action = [&](int fmt) {
            char* text = nullptr;
            const int status = incalg_demo(demo_name.c_str(), seed, fmt, &text);
            return emit(status, text, out_path, usage);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    usage = app.get_subcommands().front()->help();
    for (auto* sub = app.get_subcommands().front(); !sub->get_subcommands().empty();) {
        sub = sub->get_subcommands().front();
        usage = sub->help();
    }
    return action(json ? INCALG_JSON : INCALG_CSV);
}
