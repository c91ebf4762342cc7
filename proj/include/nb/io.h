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

#ifndef NB_IO_H
#define NB_IO_H

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nb/cyclotomic.h"
#include "nb/exactmat.h"
#include "nb/qcode.h"
#include "nb/zncodes.h"

namespace nb {

using Json = nlohmann::json;

inline constexpr const char *kToolVersion = "0.1.0";

class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &source, size_t line, const std::string &message);
    size_t line;
};

/// Generator matrix text: line 1 is "n L k", then k rows of L integers in
/// [0, n). Blank lines and lines starting with '#' are skipped.
struct GeneratorFile {
    std::uint32_t n = 2;
    std::uint32_t length = 1;
    std::vector<Word> rows;
};

GeneratorFile parse_generators(std::istream &in, const std::string &source = "<input>");
GeneratorFile read_generator_file(const std::string &path);
LinearCodeZn to_code(const GeneratorFile &file, const Guards &guards = {});

Json to_json(const CycInt &x);
CycInt cycint_from_json(const Json &j);
Json to_json(const ErrorIndex &d);
ErrorIndex error_index_from_json(const Json &j);
Json to_json(const DenseMatrix &m);

/// Cache of a built code: the generators of C and D plus the convention and
/// stabilizer generators. Loading rebuilds the code and checks the cached
/// generators against the rebuilt ones.
Json code_cache_json(const PuncturedQuantumCode &code);
PuncturedQuantumCode load_code_cache(const Json &j, const Guards &guards = {});

/// n, l, k_logical, generators.
Json code_summary_json(const PuncturedQuantumCode &code);

struct ReportCheck {
    std::string name;
    bool pass = false;
    std::string witness;
    Json value;
};

/// A command report. `checks` and `result` form the deterministic payload;
/// timing is kept in its own section.
class Report {
   public:
    Report(std::string command, std::vector<std::string> args);

    void check(const std::string &name, bool pass, const std::string &witness = "", Json value = nullptr);
    Json &result() {
        return result_;
    }
    void time_phase(const std::string &phase, double seconds);
    bool all_passed() const;
    const std::vector<ReportCheck> &checks() const {
        return checks_;
    }

    /// {tool, version, command, checks, result}.
    Json payload() const;
    /// payload() plus "timing" unless omitted.
    Json to_json(bool with_timing) const;
    std::string to_text() const;

   private:
    std::string command_;
    std::vector<std::string> args_;
    std::vector<ReportCheck> checks_;
    Json result_ = Json::object();
    std::vector<std::pair<std::string, double>> timing_;
};

}  // namespace nb

#endif
