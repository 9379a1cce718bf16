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

#include "polarspread/serialize.h"

#include <sstream>

#include "polarspread/error.h"

namespace polarspread {

Format parse_format(std::string_view name) {
    if (name == "json") {
        return Format::Json;
    }
    if (name == "text") {
        return Format::Text;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

nlohmann::json spread_to_json(const PartialSpread &ps) {
    const auto &space = ps.space();
    nlohmann::json gens = nlohmann::json::array();
    for (auto m : ps.members()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto &row : space.generator(m).basis.rows()) {
            nlohmann::json r = nlohmann::json::array();
            for (auto c : row.coords) {
                r.push_back(static_cast<int>(c));
            }
            rows.push_back(std::move(r));
        }
        gens.push_back(std::move(rows));
    }
    return {{"d", space.d()}, {"n", space.rank()}, {"generators", std::move(gens)}};
}

std::string serialize_spread(const PartialSpread &ps, Format format) {
    if (format == Format::Json) {
        return spread_to_json(ps).dump() + "\n";
    }
    const auto &space = ps.space();
    std::ostringstream out;
    out << "# d=" << space.d() << " n=" << space.rank() << "\n";
    for (auto m : ps.members()) {
        const auto &rows = space.generator(m).basis.rows();
        for (std::size_t i = 0; i < rows.size(); i++) {
            if (i > 0) {
                out << "|";
            }
            for (std::size_t j = 0; j < rows[i].size(); j++) {
                if (j > 0) {
                    out << ",";
                }
                out << static_cast<int>(rows[i][j]);
            }
        }
        out << "\n";
    }
    return out.str();
}

namespace {

[[noreturn]] void parse_fail(const std::string &what) {
    throw Error(ErrorKind::ParseError, what);
}

Residue checked_digit(long long v, unsigned d) {
    if (v < 0 || v >= static_cast<long long>(d)) {
        parse_fail("digit " + std::to_string(v) + " out of range for d=" + std::to_string(d));
    }
    return static_cast<Residue>(v);
}

FMatrix make_generator(std::vector<FVector> rows, unsigned d, unsigned n) {
    if (rows.size() != n) {
        parse_fail("generator must have " + std::to_string(n) + " rows");
    }
    for (const auto &r : rows) {
        if (r.size() != 2 * n) {
            parse_fail("generator rows must have length " + std::to_string(2 * n));
        }
    }
    FieldSpec f(d);
    return FMatrix(std::move(rows), 2 * n, f);
}

void check_params(unsigned d, unsigned n) {
    if (!is_prime(d) || d > FieldSpec::kMaxPrime) {
        parse_fail("unsupported d=" + std::to_string(d));
    }
    if (n < 1) {
        parse_fail("n must be positive");
    }
}

SpreadData parse_json_spread(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        SpreadData out;
        out.d = j.at("d").get<unsigned>();
        out.n = j.at("n").get<unsigned>();
        check_params(out.d, out.n);
        for (const auto &g : j.at("generators")) {
            std::vector<FVector> rows;
            for (const auto &r : g) {
                FVector v;
                for (const auto &c : r) {
                    v.coords.push_back(checked_digit(c.get<long long>(), out.d));
                }
                rows.push_back(std::move(v));
            }
            out.generators.push_back(make_generator(std::move(rows), out.d, out.n));
        }
        return out;
    } catch (const nlohmann::json::exception &e) {
        parse_fail(std::string("malformed spread JSON: ") + e.what());
    }
}

long long parse_int(const std::string &token) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(token, &used);
    } catch (const std::exception &) {
        parse_fail("bad integer '" + token + "'");
    }
    if (used != token.size()) {
        parse_fail("bad integer '" + token + "'");
    }
    return v;
}

SpreadData parse_text_spread(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    SpreadData out;
    bool header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || (header && line.front() == '#')) {
            continue;
        }
        if (!header) {
            int d = 0, n = 0;
            char tail = 0;
            if (std::sscanf(line.c_str(), "# d=%d n=%d%c", &d, &n, &tail) != 2 || d <= 0 || n <= 0) {
                parse_fail("expected header '# d=<d> n=<n>'");
            }
            out.d = static_cast<unsigned>(d);
            out.n = static_cast<unsigned>(n);
            check_params(out.d, out.n);
            header = true;
            continue;
        }
        std::vector<FVector> rows;
        std::istringstream row_stream(line);
        std::string row;
        while (std::getline(row_stream, row, '|')) {
            FVector v;
            std::istringstream cell_stream(row);
            std::string cell;
            while (std::getline(cell_stream, cell, ',')) {
                v.coords.push_back(checked_digit(parse_int(cell), out.d));
            }
            rows.push_back(std::move(v));
        }
        out.generators.push_back(make_generator(std::move(rows), out.d, out.n));
    }
    if (!header) {
        parse_fail("missing header line");
    }
    return out;
}

}  // namespace

SpreadData parse_spread(std::string_view text, Format format) {
    return format == Format::Json ? parse_json_spread(text) : parse_text_spread(text);
}

PartialSpread deserialize_spread(std::string_view text, Format format, const PolarSpace &space) {
    auto data = parse_spread(text, format);
    if (data.d != space.d() || data.n != space.rank()) {
        throw Error(ErrorKind::DimensionMismatch, "spread file is for W(" + std::to_string(2 * data.n - 1) + "," +
                                                      std::to_string(data.d) + ")");
    }
    std::vector<std::size_t> members;
    for (const auto &g : data.generators) {
        auto idx = space.find_generator(rref(g, space.field()));
        if (!idx) {
            throw Error(ErrorKind::NotIsotropic, "basis " + g.str() + " is not a generator");
        }
        members.push_back(*idx);
    }
    return PartialSpread(space, std::move(members));
}

nlohmann::json ops_to_json(const std::vector<PauliOp> &ops) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &op : ops) {
        std::vector<int> a(op.a.coords.begin(), op.a.coords.end());
        std::vector<int> b(op.b.coords.begin(), op.b.coords.end());
        out.push_back({{"a", a}, {"b", b}, {"phase_exp", op.phase_exp}});
    }
    return out;
}

std::vector<PauliOp> ops_from_json(const nlohmann::json &j) {
    std::vector<PauliOp> out;
    try {
        for (const auto &e : j) {
            PauliOp op;
            for (auto c : e.at("a").get<std::vector<int>>()) {
                op.a.coords.push_back(checked_digit(c, FieldSpec::kMaxPrime));
            }
            for (auto c : e.at("b").get<std::vector<int>>()) {
                op.b.coords.push_back(checked_digit(c, FieldSpec::kMaxPrime));
            }
            op.phase_exp = e.at("phase_exp").get<unsigned>();
            if (op.a.size() != op.b.size()) {
                parse_fail("operator exponent vectors differ in length");
            }
            out.push_back(std::move(op));
        }
    } catch (const nlohmann::json::exception &e) {
        parse_fail(std::string("malformed operator JSON: ") + e.what());
    }
    return out;
}

nlohmann::json completeness_to_json(const CompletenessCert &cert) {
    nlohmann::json j{{"complete", cert.complete}, {"witness", nullptr}};
    if (cert.witness) {
        j["witness"] = *cert.witness;
    }
    return j;
}

nlohmann::json umub_to_json(const UMUBCertificate &cert) {
    nlohmann::json j{{"classes", cert.classes},
                     {"order", cert.order},
                     {"completeness", completeness_to_json(cert.completeness)},
                     {"max_deviation", nullptr},
                     {"target", cert.target},
                     {"tolerance", cert.tolerance},
                     {"valid", cert.valid}};
    if (cert.max_deviation) {
        j["max_deviation"] = *cert.max_deviation;
    }
    return j;
}

nlohmann::json brute_force_to_json(const BruteForceSummary &s) {
    nlohmann::json j{{"subsets", s.subsets},
                     {"exactly_one", s.exactly_one},
                     {"at_least_one", s.at_least_one},
                     {"none", s.none},
                     {"completions_ok", s.completions_ok},
                     {"distinct_covered", s.distinct_covered},
                     {"failing_subset", nullptr},
                     {"holds", s.holds}};
    if (s.failing_subset) {
        j["failing_subset"] = *s.failing_subset;
    }
    return j;
}

nlohmann::json conjecture_to_json(const ConjectureReport &r) {
    nlohmann::json chain{{"gate", r.chain.gate},
                         {"rhs_upper_bound_holds", r.chain.rhs_upper_bound_holds},
                         {"binomial_lower_bound_holds", nullptr},
                         {"implies_violation", r.chain.implies_violation}};
    if (r.chain.binomial_lower_bound_holds) {
        chain["binomial_lower_bound_holds"] = *r.chain.binomial_lower_bound_holds;
    }
    // Big integers are emitted as decimal strings.
    nlohmann::json j{{"d", r.d},
                     {"n", r.n},
                     {"spread_size", r.spread_size},
                     {"subset_size", r.subset_size},
                     {"binomial", r.binomial.str()},
                     {"binomial_exact", r.binomial_exact},
                     {"lhs", r.lhs.str()},
                     {"rhs", r.rhs.str()},
                     {"verdict", verdict_name(r.verdict)},
                     {"inequality_chain", chain},
                     {"brute_force", nullptr}};
    if (r.brute_force) {
        j["brute_force"] = brute_force_to_json(*r.brute_force);
    }
    return j;
}

}  // namespace polarspread
