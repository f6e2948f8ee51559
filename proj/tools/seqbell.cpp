// Copyright 2026 The seqbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// seqbell: simulate sequential Bell tests, emit trade-off curves, certify
// observed values and run the verification suite.
//
// Exit codes: 0 ok, 2 bad configuration, 3 inconsistent or unphysical data,
// 4 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seqbell/seqbell.hpp"

namespace {

using namespace seqbell;

constexpr int kExitConfig = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitOracle = 4;

struct Options {
    std::string functional = "chsh";
    std::vector<double> lambdas;
    std::vector<double> observed;
    std::size_t grid = 101;
    std::size_t observers = 2;
    std::size_t dim = 2;
    std::uint64_t seed = kDefaultSeed;
    int restarts = kDefaultRestarts;
    std::string format;
    std::string output;
};

std::uint64_t seed_from_env() {
    if (const char *s = std::getenv("SEQBELL_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception &) {
            throw DomainError(std::string("SEQBELL_SEED is not an unsigned integer: ") + s);
        }
    }
    return kDefaultSeed;
}

/// Writes to --output when given, stdout otherwise.
class Sink {
  public:
    explicit Sink(const std::string &path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw DomainError("cannot open output file " + path);
        }
    }
    std::ostream &get() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

int run_simulate(const Options &o) {
    const FunctionalKind kind = parse_functional(o.functional);
    SequentialTranscript t = kind == FunctionalKind::Chsh ? run_sequence(chsh_optimal_model(o.dim), o.lambdas)
                                                          : run_sequence(elegant_optimal_model(o.dim), o.lambdas);
    Sink sink(o.output);
    if (o.format == "csv") {
        write_transcript_csv(sink.get(), t);
    } else {
        sink.get() << to_json(t).dump(2) << '\n';
    }
    return 0;
}

int run_curve(const Options &o) {
    const auto rows = tradeoff_curve(parse_functional(o.functional), o.grid, o.observers);
    Sink sink(o.output);
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &r : rows) arr.push_back(to_json(r));
        sink.get() << arr.dump(2) << '\n';
    } else {
        write_curve_csv(sink.get(), rows);
    }
    return 0;
}

int run_certify(const Options &o) {
    const FunctionalKind kind = parse_functional(o.functional);
    const auto &v = o.observed;
    CertificationResult r;
    if (kind == FunctionalKind::Chsh && v.size() == 2) {
        r = certify_chsh_pair(v[0], v[1]);
    } else if (kind == FunctionalKind::Elegant && v.size() == 2) {
        r = certify_elegant_pair(v[0], v[1]);
    } else if (kind == FunctionalKind::Elegant && v.size() == 3) {
        r = certify_elegant_triple(v[0], v[1], v[2]);
    } else {
        throw DomainError("certify: chsh takes 2 observed values, elegant takes 2 or 3");
    }
    Sink sink(o.output);
    if (o.format == "csv") {
        write_certification_csv(sink.get(), r);
    } else {
        sink.get() << to_json(r).dump(2) << '\n';
    }
    return 0;
}

int run_verify(const Options &o) {
    if (o.restarts < kMinRestarts) throw DomainError("verify: --restarts must be at least 8");
    const auto reports = run_oracle_suite(o.seed, o.restarts);
    Sink sink(o.output);
    int failed = 0;
    for (const auto &r : reports) {
        sink.get() << to_json(r).dump() << '\n';
        if (!r.passed()) {
            ++failed;
            std::cerr << "FAILED " << r.target << " gap=" << r.gap << '\n';
        }
    }
    std::cerr << reports.size() - failed << "/" << reports.size() << " checks passed\n";
    return failed == 0 ? 0 : kExitOracle;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Sequential Bell tests with unsharp measurements"};
    app.require_subcommand(1);
    Options o;

    auto add_functional = [&](CLI::App *sub) {
        sub->add_option("functional", o.functional, "chsh or elegant")
            ->required()
            ->check(CLI::IsMember({"chsh", "elegant"}));
    };
    auto add_output = [&](CLI::App *sub) {
        sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output,-o", o.output, "output file (default stdout)");
    };

    auto *sim = app.add_subcommand("simulate", "values of every Bob on the optimal model");
    add_functional(sim);
    sim->add_option("--lambdas", o.lambdas, "sharpness of each Bob, comma separated")->required()->delimiter(',');
    sim->add_option("--dim", o.dim, "local dimension")->check(CLI::IsMember({2, 4}));
    add_output(sim);

    auto *curve = app.add_subcommand("curve", "trade-off curve between consecutive Bobs");
    add_functional(curve);
    curve->add_option("--grid", o.grid, "points per sharpness axis")->check(CLI::Range(2, 100000));
    curve->add_option("--observers", o.observers, "2 or 3")->check(CLI::IsMember({2, 3}));
    add_output(curve);

    auto *cert = app.add_subcommand("certify", "sharpness estimates and intervals from observed values");
    add_functional(cert);
    cert->add_option("--observed", o.observed, "observed Bell values, comma separated")
        ->required()
        ->delimiter(',');
    add_output(cert);

    auto *ver = app.add_subcommand("verify", "run the numerical verification suite");
    ver->add_option("--seed", o.seed, "seed (default from SEQBELL_SEED)");
    ver->add_option("--restarts", o.restarts, "restarts per maximisation");
    ver->add_option("--output,-o", o.output, "JSONL output file (default stdout)");

    try {
        o.seed = seed_from_env();
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (*sim) return run_simulate(o);
        if (*curve) return run_curve(o);
        if (*cert) return run_certify(o);
        return run_verify(o);
    } catch (const InconsistencyError &e) {
        std::cerr << "inconsistent: " << e.what() << '\n';
        return kExitInconsistent;
    } catch (const UnphysicalInputError &e) {
        std::cerr << "unphysical: " << e.what() << '\n';
        return kExitInconsistent;
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ContractViolation &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
