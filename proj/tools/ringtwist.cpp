/*
   Copyright 2026 The ringtwist Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "ringtwist/commands.hpp"

namespace rt = ringtwist;

int main(int argc, char** argv) {
    CLI::App app{"ringtwist: algebraic rings over finite fields, Frobenius twists and SL_3 rigidity checks"};
    app.require_subcommand(1);
    rt::CommandOptions opt;
    std::string format = "text";

    auto common = [&](CLI::App* sub) {
        sub->add_option("--max-enumeration", opt.max_enumeration, "Largest point set enumerated")
            ->capture_default_str();
        sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "kv"}))->capture_default_str();
    };
    auto with_input = [&](CLI::App* sub) {
        sub->add_option("--input,input", opt.input, "Input file")->required();
        common(sub);
        return sub;
    };

    std::map<CLI::App*, int (*)(const rt::CommandOptions&, std::ostream&)> commands;
    commands[with_input(app.add_subcommand("verify-ring", "Check associativity, commutativity and the unit"))] =
        rt::cmd_verify_ring;
    commands[with_input(app.add_subcommand("untwist", "Recover a finite-dimensional algebra and its Frobenius twist"))] =
        rt::cmd_untwist;
    commands[with_input(app.add_subcommand("decompose", "Radical, idempotents and local pieces of an algebra"))] =
        rt::cmd_decompose;
    commands[with_input(app.add_subcommand("derivations", "Derivation space of a presentation at its point"))] =
        rt::cmd_derivations;

    auto* demo = app.add_subcommand("rigidity-demo", "End-to-end SL_3(K[X]) representation check");
    demo->add_option("--q", opt.q, "Field size")->capture_default_str();
    demo->add_option("--degree", opt.degree, "Degree bound D for K[X]")->capture_default_str();
    demo->add_option("--samples", opt.samples, "Sampled checks per stage")->capture_default_str();
    demo->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
    common(demo);
    commands[demo] = rt::cmd_rigidity_demo;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? rt::kExitOk : rt::kExitInput;
    }
    opt.format = format == "kv" ? rt::ReportFormat::KeyValue : rt::ReportFormat::Text;
    for (const auto& [sub, fn] : commands)
        if (sub->parsed()) return rt::run_command(fn, opt, std::cout, std::cerr);
    return rt::kExitInput;
}
