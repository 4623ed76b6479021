// SPDX-License-Identifier: Apache-2.0
//
// gobsel: coordinated grid-of-beams selection for FDD multi-user massive MIMO
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// gobsim: command-line front end.
//
//   gobsim run --config FILE [--seed N] [--out FILE] [--format csv|json]
//              [--policies P1,P2,P3,P4] [--paper-scale] [--workers N]
//   gobsim oracle --small [--instances N] [--seed N]
//   gobsim selftest
//
// Exit codes: 0 ok, 1 check failure, 2 invalid argument, 3 infeasible
// assignment, 4 numerical domain, 5 capacity, 6 I/O.

#include "gobsel/gobsel.hpp"

#include <iomanip>
#include <iostream>

namespace {

int exit_code(gob::ErrorKind k) {
    switch (k) {
    case gob::ErrorKind::invalid_argument: return 2;
    case gob::ErrorKind::infeasible_assignment: return 3;
    case gob::ErrorKind::numerical_domain: return 4;
    case gob::ErrorKind::capacity: return 5;
    case gob::ErrorKind::io: return 6;
    }
    return 1;
}

struct RunArgs {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out = "-";
    std::string format = "csv";
    std::string policies;
    bool paper_scale = false;
    std::optional<int> workers;
};

int cmd_run(const RunArgs& a) {
    gob::ScenarioConfig cfg = gob::load_config(a.config);
    if (a.seed)
        cfg.seed = *a.seed;
    if (!a.policies.empty())
        cfg.policies = gob::parse_policy_list(a.policies);
    if (a.paper_scale)
        cfg.iterations = cfg.paper_iterations;
    if (a.workers)
        cfg.workers = *a.workers;
    const auto fmt = gob::parse_format(a.format);
    cfg.validate();
    const auto res = gob::run_campaign(cfg);
    gob::emit_results(res, cfg, fmt, a.out);
    return 0;
}

int cmd_oracle(int instances, std::uint64_t seed) {
    const auto stats = gob::run_oracle_suite(instances, seed);
    int bad = 0;
    std::cout << "policy,instances,mean_ratio,min_ratio,exceed_count\n";
    for (const auto& s : stats) {
        std::cout << gob::to_string(s.policy) << ',' << s.instances << ',' << std::setprecision(6) << s.mean_ratio
                  << ',' << s.min_ratio << ',' << s.exceed_count << '\n';
        if (s.exceed_count > 0)
            ++bad;
    }
    return bad ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coordinated grid-of-beams selection simulator"};
    app.require_subcommand(1);

    RunArgs ra;
    auto* run = app.add_subcommand("run", "Run a Monte-Carlo campaign");
    run->add_option("--config", ra.config, "Scenario config file")->required();
    run->add_option("--seed", ra.seed, "Override the base seed");
    run->add_option("--out", ra.out, "Output file ('-' for stdout)");
    run->add_option("--format", ra.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    run->add_option("--policies", ra.policies, "Comma-separated subset of P1,P2,P3,P4");
    run->add_flag("--paper-scale", ra.paper_scale, "Use the paper iteration count");
    run->add_option("--workers", ra.workers, "Worker threads")->check(CLI::PositiveNumber);

    bool small = false;
    int instances = 200;
    std::uint64_t oracle_seed = 1;
    auto* oracle = app.add_subcommand("oracle", "Compare hierarchical selection against exhaustive search");
    oracle->add_flag("--small", small, "Random small instances (K=2, M_UE=1)")->required();
    oracle->add_option("--instances", instances, "Instance count")->check(CLI::PositiveNumber);
    oracle->add_option("--seed", oracle_seed, "Base seed");

    auto* selftest = app.add_subcommand("selftest", "Run the invariant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*run)
            return cmd_run(ra);
        if (*oracle)
            return cmd_oracle(instances, oracle_seed);
        if (*selftest)
            return gob::run_self_checks(std::cout) == 0 ? 0 : 1;
    } catch (const gob::Error& e) {
        std::cerr << "gobsim: error [" << gob::to_string(e.kind()) << "]: " << e.detail() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "gobsim: error [internal]: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
