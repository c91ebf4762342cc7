// Copyright 2026 The nicebases Authors
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

#include "nb/io.h"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace nb {

ParseError::ParseError(const std::string &source, size_t line, const std::string &message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line(line) {
}

namespace {

std::vector<std::string> split_tokens(const std::string &line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

std::uint64_t parse_unsigned(const std::string &tok, const std::string &source, size_t line) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(source, line, "expected a non-negative integer, got '" + tok + "'");
    }
    return v;
}

}  // namespace

GeneratorFile parse_generators(std::istream &in, const std::string &source) {
    GeneratorFile f;
    std::string line;
    size_t line_no = 0;
    bool have_header = false;
    size_t k = 0;
    while (std::getline(in, line)) {
        line_no++;
        std::vector<std::string> toks = split_tokens(line);
        if (toks.empty() || toks[0][0] == '#') {
            continue;
        }
        if (!have_header) {
            if (toks.size() != 3) {
                throw ParseError(source, line_no, "header must be 'n L k'");
            }
            std::uint64_t n = parse_unsigned(toks[0], source, line_no);
            std::uint64_t len = parse_unsigned(toks[1], source, line_no);
            k = parse_unsigned(toks[2], source, line_no);
            if (n < 2 || n > std::numeric_limits<std::uint16_t>::max()) {
                throw ParseError(source, line_no, "modulus n must be in [2, 65535]");
            }
            if (len < 1 || len > 64) {
                throw ParseError(source, line_no, "length L must be in [1, 64]");
            }
            f.n = static_cast<std::uint32_t>(n);
            f.length = static_cast<std::uint32_t>(len);
            have_header = true;
            continue;
        }
        if (f.rows.size() == k) {
            throw ParseError(source, line_no, "more than " + std::to_string(k) + " generator rows");
        }
        if (toks.size() != f.length) {
            throw ParseError(
                source, line_no,
                "expected " + std::to_string(f.length) + " entries, got " + std::to_string(toks.size()));
        }
        Word row;
        for (const auto &tok : toks) {
            std::uint64_t v = parse_unsigned(tok, source, line_no);
            if (v >= f.n) {
                throw ParseError(
                    source, line_no, "entry " + tok + " is out of range [0, " + std::to_string(f.n) + ")");
            }
            row.push_back(static_cast<std::uint32_t>(v));
        }
        f.rows.push_back(std::move(row));
    }
    if (!have_header) {
        throw ParseError(source, line_no, "missing header 'n L k'");
    }
    if (f.rows.size() != k) {
        throw ParseError(
            source, line_no,
            "expected " + std::to_string(k) + " generator rows, found " + std::to_string(f.rows.size()));
    }
    return f;
}

GeneratorFile read_generator_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return parse_generators(in, path);
}

LinearCodeZn to_code(const GeneratorFile &file, const Guards &guards) {
    return LinearCodeZn(file.n, file.length, file.rows, guards);
}

Json to_json(const CycInt &x) {
    Json coeffs = Json::array();
    for (const auto &c : x.coeffs()) {
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
            coeffs.push_back(static_cast<std::int64_t>(c));
        } else {
            coeffs.push_back(c.str());
        }
    }
    return Json{{"order", x.order()}, {"coeffs", coeffs}};
}

CycInt cycint_from_json(const Json &j) {
    std::uint32_t m = j.at("order").get<std::uint32_t>();
    std::vector<BigInt> coeffs;
    for (const auto &c : j.at("coeffs")) {
        coeffs.push_back(c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<std::int64_t>()));
    }
    coeffs.resize(m);
    return CycInt::from_coeffs(m, std::move(coeffs));
}

Json to_json(const ErrorIndex &d) {
    return Json{{"x", d.x}, {"y", d.y}};
}

ErrorIndex error_index_from_json(const Json &j) {
    return ErrorIndex{j.at("x").get<Word>(), j.at("y").get<Word>()};
}

Json to_json(const DenseMatrix &m) {
    Json rows = Json::array();
    for (std::uint32_t r = 0; r < m.dim(); r++) {
        Json row = Json::array();
        for (std::uint32_t c = 0; c < m.dim(); c++) {
            row.push_back(to_json(m.at(r, c)));
        }
        rows.push_back(row);
    }
    return rows;
}

Json code_cache_json(const PuncturedQuantumCode &code) {
    Json gens = Json::array();
    for (const auto &g : code.generators) {
        gens.push_back(to_json(g));
    }
    return Json{
        {"format", "nicebases-code/1"},
        {"n", code.n},
        {"length", code.c.length()},
        {"c_generators", code.c.generators()},
        {"d_generators", code.d.generators()},
        {"convention", convention_name(code.convention)},
        {"generators", gens},
    };
}

PuncturedQuantumCode load_code_cache(const Json &j, const Guards &guards) {
    if (j.value("format", "") != "nicebases-code/1") {
        throw std::runtime_error("not a nicebases code cache");
    }
    std::uint32_t n = j.at("n").get<std::uint32_t>();
    std::uint32_t len = j.at("length").get<std::uint32_t>();
    LinearCodeZn c(n, len, j.at("c_generators").get<std::vector<Word>>(), guards);
    LinearCodeZn d(n, len, j.at("d_generators").get<std::vector<Word>>(), guards);
    PuncturedQuantumCode code = build_code(c, d, parse_convention(j.at("convention").get<std::string>()), guards);
    std::vector<ErrorIndex> cached;
    for (const auto &g : j.at("generators")) {
        cached.push_back(error_index_from_json(g));
    }
    if (cached != code.generators) {
        throw std::runtime_error("code cache: stored generators differ from the rebuilt code");
    }
    return code;
}

Json code_summary_json(const PuncturedQuantumCode &code) {
    Json gens = Json::array();
    for (const auto &g : code.generators) {
        gens.push_back(to_json(g));
    }
    return Json{
        {"n", code.n},
        {"l", code.l},
        {"k_logical", 1},
        {"logical_states", code.n},
        {"convention", convention_name(code.convention)},
        {"literal_passes", code.literal_ok},
        {"swapped_passes", code.swapped_ok},
        {"sizes", {{"C'", code.cp.size()}, {"C'_0", code.c0.size()}, {"D'", code.dp.size()}, {"D'_0", code.d0.size()}}},
        {"e1p", code.e1p},
        {"generators", gens},
    };
}

Report::Report(std::string command, std::vector<std::string> args)
    : command_(std::move(command)), args_(std::move(args)) {
}

void Report::check(const std::string &name, bool pass, const std::string &witness, Json value) {
    checks_.push_back({name, pass, witness, std::move(value)});
}

void Report::time_phase(const std::string &phase, double seconds) {
    timing_.emplace_back(phase, seconds);
}

bool Report::all_passed() const {
    for (const auto &c : checks_) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

Json Report::payload() const {
    Json checks = Json::array();
    for (const auto &c : checks_) {
        Json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.witness.empty()) {
            entry["witness"] = c.witness;
        }
        if (!c.value.is_null()) {
            entry["value"] = c.value;
        }
        checks.push_back(entry);
    }
    return Json{
        {"tool", "nicebases"},
        {"version", kToolVersion},
        {"command", command_},
        {"args", args_},
        {"checks", checks},
        {"all_passed", all_passed()},
        {"result", result_},
    };
}

Json Report::to_json(bool with_timing) const {
    Json j = payload();
    if (with_timing) {
        Json t = Json::object();
        for (const auto &[phase, seconds] : timing_) {
            t[phase] = seconds;
        }
        j["timing"] = t;
    }
    return j;
}

std::string Report::to_text() const {
    std::ostringstream out;
    out << "nicebases " << kToolVersion << " " << command_ << "\n";
    for (const auto &c : checks_) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.witness.empty()) {
            out << "  (" << c.witness << ")";
        }
        out << "\n";
    }
    out << (all_passed() ? "all checks passed" : "some checks failed") << "\n";
    return out.str();
}

}  // namespace nb
