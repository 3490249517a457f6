/*
 *  Copyright (C) 2026  fground authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fground/driver.hpp"

namespace {

// Accept the historical single-dash spelling -maxNesting=k.
std::vector<std::string> normalize(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a.rfind("-maxNesting", 0) == 0) a = "-" + a;
        args.push_back(std::move(a));
    }
    return args;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grounder for disjunctive programs with function symbols"};
    fground::RunConfig cfg;
    std::string mode = "ground";
    long long nesting = -1;
    bool nesting_given = false;
    app.add_option("inputs", cfg.inputs, "Program files, concatenated in order (default: stdin)");
    app.add_option("--mode", mode, "parse|rewrite|reorder|depgraph|ground|answersets");
    app.add_option_function<long long>(
        "--maxNesting",
        [&](long long k) {
            nesting = k;
            nesting_given = true;
        },
        "Maximum term nesting level");
    app.add_flag("--show-ids", cfg.show_ids, "Print ground output over term ids with table dumps");
    app.add_flag("--oracle", cfg.oracle, "Use the naive reference grounder")->group("");
    app.add_flag("--stats", cfg.stats, "Print table and matching counters to stderr");

    std::vector<std::string> args = normalize(argc, argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto parsed_mode = fground::parse_mode(mode);
    if (!parsed_mode) {
        std::cerr << "usage error: unknown mode " << mode << "\n";
        return 2;
    }
    cfg.mode = *parsed_mode;
    if (nesting_given) {
        if (nesting < 0) {
            std::cerr << "usage error: --maxNesting must be non-negative\n";
            return 2;
        }
        cfg.max_nesting = static_cast<unsigned>(nesting);
    }

    std::ostringstream text;
    if (cfg.inputs.empty()) {
        text << std::cin.rdbuf();
    }
    for (const auto& path : cfg.inputs) {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "usage error: cannot read " << path << "\n";
            return 2;
        }
        text << in.rdbuf() << "\n";
    }
    return fground::run(cfg, text.str(), std::cout, std::cerr);
}
