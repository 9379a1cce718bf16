// Copyright 2026 The polarspread Authors
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

#include "polarspread/cli.h"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "polarspread/constructions.h"
#include "polarspread/error.h"
#include "polarspread/iso.h"
#include "polarspread/search.h"

namespace polarspread {

using nlohmann::json;

nlohmann::json config_to_json(const RunConfig &c) {
    return {{"command", c.command},
            {"d", c.d},
            {"n", c.n},
            {"method", c.method},
            {"k", c.k},
            {"size", c.size},
            {"format", c.format == Format::Json ? "json" : "text"},
            {"seed", c.seed},
            {"tolerance", c.tolerance},
            {"brute_force", c.brute_force},
            {"from_spread", c.from_spread},
            {"from_file", c.from_file}};
}

namespace {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Outcome {
    json result;
    bool ok = true;
    /// Set for commands whose natural text rendering is a spread.
    std::optional<PartialSpread> spread;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read --from-file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PartialSpread input_spread(const RunConfig &c, const PolarSpace &space) {
    if (!c.from_file.empty()) {
        auto text = read_file(c.from_file);
        auto first = text.find_first_not_of(" \t\r\n");
        Format f = first != std::string::npos && text[first] == '{' ? Format::Json : Format::Text;
        return deserialize_spread(text, f, space);
    }
    if (c.from_spread == "classical") {
        return construct_symplectic_spread(space);
    }
    throw UsageError("--from-spread: unknown spread '" + c.from_spread + "'");
}

void require_rank_two(const RunConfig &c, const std::string &what) {
    if (c.n != 2) {
        throw UsageError(what + " needs --n 2");
    }
}

json spread_summary(const PartialSpread &ps) {
    return {{"size", ps.size()}, {"members", ps.members()}, {"spread", spread_to_json(ps)}};
}

Outcome do_construct(const RunConfig &c, const PolarSpace &space) {
    Outcome o;
    auto s = construct_symplectic_spread(space);
    if (c.method == "classical") {
        auto cert = is_complete(s);
        o.result = spread_summary(s);
        o.result["complete"] = completeness_to_json(cert);
        o.result["is_spread"] = s.is_spread();
        o.ok = cert.complete && s.is_spread();
        o.spread = s;
    } else if (c.method == "tu") {
        require_rank_two(c, "construct --method tu");
        std::vector<std::size_t> outside;
        for (const auto &g : space.generators()) {
            if (!s.contains(g.index)) {
                outside.push_back(g.index);
            }
        }
        std::mt19937_64 rng(c.seed);
        std::size_t u = outside[rng() % outside.size()];
        auto tu = construct_TU(s, space.generator(u));
        auto done = complete_TU(tu);
        o.result = spread_summary(done.spread);
        o.result["u"] = u;
        o.result["tu_size"] = tu.size();
        o.result["extension_count"] = done.extension_count;
        o.result["added"] = done.added ? json(*done.added) : json(nullptr);
        o.result["complete"] = completeness_to_json(done.cert);
        o.ok = done.cert.complete && done.extension_count <= 1;
        o.spread = done.spread;
    } else if (c.method == "sr") {
        require_rank_two(c, "construct --method sr");
        if (c.d % 2 == 0) {
            throw UsageError("construct --method sr needs odd --d");
        }
        auto sr = construct_SR(s, s.members()[0], s.members()[1], c.k);
        auto cert = is_complete(sr);
        o.result = spread_summary(sr);
        o.result["l"] = s.members()[0];
        o.result["m"] = s.members()[1];
        o.result["k"] = c.k;
        o.result["formula_size"] = sr_size(c.d, c.k);
        o.result["complete"] = completeness_to_json(cert);
        o.ok = cert.complete;
        o.spread = sr;
    } else if (c.method == "uset") {
        auto u = find_U_set(s);
        if (!u) {
            o.result = {{"uset", nullptr}};
            o.ok = false;
            return o;
        }
        auto r = unextendible_from_Uset(s, *u);
        o.result = spread_summary(r.completed);
        o.result["uset"] = {{"members", u->members},
                            {"carrier", u->carrier},
                            {"alpha", u->alpha},
                            {"beta", u->beta},
                            {"spread_members_meeting_carrier", u->spread_members_meeting_carrier},
                            {"partition_free", u->partition_free}};
        o.result["base_size"] = r.base.size();
        o.result["base_complete"] = completeness_to_json(r.base_cert);
        o.result["added"] = r.added;
        o.result["complete"] = completeness_to_json(r.cert);
        o.result["is_spread"] = r.completed.is_spread();
        o.ok = r.cert.complete && !r.completed.is_spread();
        o.spread = r.completed;
    } else {
        throw UsageError("--method: construct expects classical, tu, sr or uset");
    }
    return o;
}

Outcome do_verify(const RunConfig &c, const PolarSpace &space) {
    Outcome o;
    if (c.method == "complete") {
        auto ps = input_spread(c, space);
        auto cert = is_complete(ps);
        o.result = {{"size", ps.size()}, {"complete", completeness_to_json(cert)}};
        o.ok = cert.complete;
    } else if (c.method == "regularity") {
        auto ps = input_spread(c, space);
        bool regular = check_regularity(ps);
        o.result = {{"size", ps.size()}, {"regular", regular}};
        o.ok = regular;
    } else if (c.method == "class-roundtrip") {
        std::size_t checked = 0, failures = 0;
        for (const auto &g : space.generators()) {
            auto cls = class_from_generator(g, space);
            if (generator_from_class(cls, space).index != g.index) {
                failures++;
            }
            checked++;
        }
        o.result = {{"generators_checked", checked}, {"failures", failures}};
        o.ok = failures == 0;
    } else {
        throw UsageError("--method: verify expects complete, regularity or class-roundtrip");
    }
    return o;
}

Outcome do_search(const RunConfig &c, const PolarSpace &space) {
    Outcome o;
    SearchOptions opts;
    if (c.method == "exhaustive" || c.method.empty()) {
        opts.mode = SearchMode::Exhaustive;
        auto r = search_maximal(space, opts);
        json hist = json::array();
        for (auto [size, count] : size_histogram(r)) {
            hist.push_back({{"size", size}, {"count", count}});
        }
        o.result = {{"complete_partial_spreads", r.found.size()}, {"nodes", r.nodes}, {"histogram", hist}};
    } else if (c.method == "first-of-size") {
        if (c.size == 0) {
            throw UsageError("--size: first-of-size needs a positive target");
        }
        opts.mode = SearchMode::FirstOfSize;
        opts.target = c.size;
        auto r = search_maximal(space, opts);
        o.result = {{"target", c.size}, {"nodes", r.nodes}, {"found", !r.found.empty()}};
        if (!r.found.empty()) {
            o.result["result"] = spread_summary(r.found.front());
            o.spread = r.found.front();
        }
        o.ok = !r.found.empty();
    } else {
        throw UsageError("--method: search expects exhaustive or first-of-size");
    }
    return o;
}

Outcome do_conjecture(const RunConfig &c, const PolarSpace *space) {
    Outcome o;
    auto report = conjecture_counts(c.d, c.n);
    if (c.brute_force) {
        if (space == nullptr) {
            throw Error(ErrorKind::ScaleExceeded, "no polar space at this scale");
        }
        report.brute_force = brute_force_conjecture(construct_symplectic_spread(*space));
    }
    o.result = conjecture_to_json(report);
    o.ok = !report.chain.implies_violation || report.verdict == Verdict::Violated;
    return o;
}

Outcome do_classify(const RunConfig &c, const PolarSpace &space) {
    Outcome o;
    if (c.d != 2 || c.n != 2) {
        throw UsageError("classify is defined for --d 2 --n 2");
    }
    SearchOptions opts;
    opts.exclude_spreads = true;
    auto r = search_maximal(space, opts);
    auto cls = classify_iso(space, r.found);
    json reps = json::array();
    for (const auto &rep : cls.representatives) {
        reps.push_back(spread_summary(rep));
    }
    o.result = {{"group_order", cls.group_order},
                {"complete_non_spreads", r.found.size()},
                {"orbits", cls.representatives.size()},
                {"representatives", reps}};
    return o;
}

Outcome do_mub(const RunConfig &c, const PolarSpace &space) {
    Outcome o;
    if (!is_prime(c.d)) {
        throw UsageError("--d: mub needs a prime");
    }
    auto ps = input_spread(c, space);
    auto cert = certify_weak_umub(ps, c.tolerance);
    o.result = umub_to_json(cert);
    o.result["bases"] = ps.size();
    o.result["dim"] = ipow(space.d(), space.rank());
    o.ok = cert.valid;
    return o;
}

void flatten(const json &j, const std::string &prefix, std::ostream &out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        }
        return;
    }
    out << prefix << "=" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        if (config.command == "conjecture") {
            std::unique_ptr<PolarSpace> space;
            if (config.brute_force) {
                space = std::make_unique<PolarSpace>(config.d, config.n);
            }
            o = do_conjecture(config, space.get());
        } else {
            if (!is_prime(config.d)) {
                throw UsageError("--d: " + std::to_string(config.d) + " is not a prime");
            }
            PolarSpace space(config.d, config.n);
            if (config.command == "construct") {
                o = do_construct(config, space);
            } else if (config.command == "verify") {
                o = do_verify(config, space);
            } else if (config.command == "search") {
                o = do_search(config, space);
            } else if (config.command == "classify") {
                o = do_classify(config, space);
            } else if (config.command == "mub") {
                o = do_mub(config, space);
            } else {
                throw UsageError("unknown command '" + config.command + "'");
            }
            // The spread refers to the local space; render it before it goes.
            if (o.spread) {
                o.result["_text"] = serialize_spread(*o.spread, Format::Text);
                o.spread.reset();
            }
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::Usage);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::Usage);
    }

    std::optional<std::string> spread_text;
    if (o.result.is_object() && o.result.contains("_text")) {
        spread_text = o.result["_text"].get<std::string>();
        o.result.erase("_text");
    }
    json timing = nullptr;
    if (config.timing) {
        timing = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    }
    json envelope = {{"version", kToolVersion}, {"config", config_to_json(config)}, {"result", o.result}, {"timing", timing}};
    if (config.format == Format::Json) {
        out << envelope.dump(2) << "\n";
    } else {
        std::ostringstream report;
        flatten(envelope, "", report);
        if (spread_text) {
            out << *spread_text;
            std::istringstream lines(report.str());
            std::string line;
            while (std::getline(lines, line)) {
                out << "# " << line << "\n";
            }
        } else {
            out << report.str();
        }
    }
    return static_cast<int>(o.ok ? ExitCode::Ok : ExitCode::Failed);
}

int cli_main(int argc, const char *const *argv) {
    CLI::App app{"Symplectic polar spaces, partial spreads and Pauli classes"};
    app.require_subcommand(1);
    RunConfig config;
    std::string format = "json";

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--d", config.d, "field order (prime)")->capture_default_str();
        sub->add_option("--n", config.n, "rank N")->capture_default_str();
        sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", config.out, "write the report here instead of stdout");
        sub->add_option("--seed", config.seed, "seed for randomized choices")->capture_default_str();
        sub->add_option("--tolerance", config.tolerance, "numeric tolerance")->capture_default_str();
        sub->add_flag("--timing", config.timing, "record wall-clock time in the report");
    };

    auto *construct = app.add_subcommand("construct", "build a partial spread");
    add_common(construct);
    construct->add_option("--method", config.method, "classical | tu | sr | uset")->required();
    construct->add_option("--k", config.k, "k for the sr construction");

    auto *verify = app.add_subcommand("verify", "check a property of a spread or the catalog");
    add_common(verify);
    verify->add_option("--method", config.method, "complete | regularity | class-roundtrip")->required();
    verify->add_option("--from-spread", config.from_spread, "built-in spread");
    verify->add_option("--from-file", config.from_file, "spread file (json or text)");

    auto *search = app.add_subcommand("search", "search complete partial spreads");
    add_common(search);
    search->add_option("--method", config.method, "exhaustive | first-of-size")->capture_default_str();
    search->add_option("--size", config.size, "target size for first-of-size");

    auto *conjecture = app.add_subcommand("conjecture", "evaluate the counting inequality");
    add_common(conjecture);
    conjecture->add_flag("--brute-force", config.brute_force, "sweep subsets of a spread");

    auto *classify = app.add_subcommand("classify", "isomorphism classes of complete non-spreads in W_3(2)");
    add_common(classify);

    auto *mub = app.add_subcommand("mub", "weak unextendibility certificate for a set of bases");
    add_common(mub);
    mub->add_option("--from-spread", config.from_spread, "built-in spread");
    mub->add_option("--from-file", config.from_file, "spread file (json or text)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return static_cast<int>(ExitCode::Usage);
    }
    config.command = app.get_subcommands().front()->get_name();
    config.format = parse_format(format);
    if (config.command == "search" && config.method.empty()) {
        config.method = "exhaustive";
    }

    if (config.out.empty()) {
        return run(config, std::cout, std::cerr);
    }
    std::ostringstream buf;
    int code = run(config, buf, std::cerr);
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
        std::cerr << "error: --out: cannot write '" << config.out << "'\n";
        return static_cast<int>(ExitCode::Usage);
    }
    file << buf.str();
    return code;
}

}  // namespace polarspread
