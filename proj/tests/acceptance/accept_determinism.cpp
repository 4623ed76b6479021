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

// Repeated `gobsim run` with a fixed seed and 1, 2 or 4 workers writes
// byte-identical CSV.

#include "verdict.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>

using namespace gob;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

int main(int argc, char** argv) {
    const std::string name = "deterministic output across worker counts";
    return accept::guarded(name, [&] {
        accept::Clock clock;
        require(argc == 4, "usage: accept_determinism gobsim config outdir");
        const std::string exe = argv[1], conf = argv[2], dir = argv[3];
        const std::vector<int> workers{1, 2, 4, 1, 4};
        std::vector<std::string> outputs;
        for (std::size_t i = 0; i < workers.size(); ++i) {
            const std::string out = dir + "/determinism_" + std::to_string(i) + ".csv";
            const std::string cmd = "\"" + exe + "\" run --config \"" + conf + "\" --seed 11 --workers " +
                                    std::to_string(workers[i]) + " --format csv --out \"" + out + "\"";
            if (std::system(cmd.c_str()) != 0)
                throw IoError("command failed: " + cmd);
            outputs.push_back(slurp(out));
        }
        bool ok = !outputs.front().empty() && outputs.front().find('\n') != std::string::npos;
        for (const auto& o : outputs)
            ok = ok && o == outputs.front();
        const auto rows = std::count(outputs.front().begin(), outputs.front().end(), '\n');
        return accept::verdict(name, ok,
                               std::to_string(outputs.size()) + " runs (workers 1,2,4,1,4), " +
                                   std::to_string(rows) + " lines each, " + (ok ? "identical" : "differ"),
                               clock, 300.0);
    });
}
