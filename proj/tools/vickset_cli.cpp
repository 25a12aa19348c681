// Copyright 2026 The vickset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: single-good and combinatorial auctions,
// enumerations, law checks and expression evaluation.
//
// Exit codes: 0 ok, 1 parse error, 2 validation or usage error, 3 cap
// exceeded, 4 at least one law failed.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vickset/vickset.hpp"

namespace {

using namespace vickset;

constexpr int kLawFailure = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) {
        throw ValidationError("cannot write '" + path + "'");
    }
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

struct SingleArgs {
    std::string bidders;
    std::string grid;
    std::string bidder;
    std::string bids;
    bool first_price = false;
    bool verify = false;
};

int run_single(const SingleArgs& args) {
    Value bidders = parse_value(args.bidders);
    Value grid = parse_value(args.grid);
    Value i = parse_value(args.bidder);
    SingleGoodMechanism m = args.first_price ? first_price_single_good(bidders, grid, i)
                                             : second_price_single_good(bidders, grid, i);
    if (!args.bids.empty()) {
        Value b = parse_value(args.bids);
        if (!domain(m.allocation).contains(b)) {
            throw ValidationError("bid vector is not on the grid");
        }
        std::cout << "allocation " << eval_rel(m.allocation, b) << "\n";
        std::cout << "price " << eval_rel(m.price, b) << "\n";
    } else {
        std::cout << "allocation " << m.allocation.value() << "\n";
        std::cout << "price " << m.price.value() << "\n";
    }
    if (!args.verify) {
        return 0;
    }
    auto violation = find_dom4_violation(m.bidder, m.allocation, m.price);
    std::cout << "dom4 " << bool_text(!violation) << "\n";
    if (violation) {
        std::cout << "dom4_violation bid " << violation->bid.value() << " valuation "
                  << violation->valuation << "\n";
    }
    Relation rb = reducedbid(m.bidder, m.allocation);
    Relation id = identity(range(m.price));
    std::cout << "l24b_compatible "
              << bool_text(compatible(m.price, kernel(rb), id)) << "\n";
    Relation rp = reducedprice(m.price, m.bidder, m.allocation);
    std::cout << "reducedprice_runiq " << bool_text(runiq(rp)) << "\n";
    if (runiq(rp)) {
        auto extraction = extract_fee(m.price, m.bidder, m.allocation);
        Rational a1 = min_of(range(m.allocation)).as_number();
        Relation w = highest_competing_bid_table(m.bidder, m.allocation);
        Relation t = complete_fee(extraction, m.bidder, m.allocation, m.price, w, a1);
        std::cout << "fee " << t.value() << "\n";
        std::cout << "a1 " << a1.to_string() << "\n";
        std::cout << "genvick "
                  << bool_text(genvick_check(m.bidder, m.allocation, m.price, w, t, a1))
                  << "\n";
    }
    return 0;
}

int run_combinatorial(const std::string& path, const std::string& out) {
    CombinatorialInstance inst = parse_instance(read_file(path));
    std::string text = write_outcome(clear_vickrey(inst));
    if (out.empty()) {
        std::cout << text;
    } else {
        write_file(out, text);
    }
    return 0;
}

int enumerate_partitions(const std::vector<std::string>& elements) {
    std::vector<Value> xs;
    for (const auto& e : elements) {
        xs.push_back(parse_value(e));
    }
    for (const auto& p : all_partitions_list(xs)) {
        std::cout << blocks_as_set(p) << "\n";
    }
    return 0;
}

int enumerate_injections(const std::string& x_text, const std::string& y_text) {
    Value x = parse_value(x_text);
    Value y = parse_value(y_text);
    if (!x.is_set() || !y.is_set()) {
        throw TypeError("injections expects two sets");
    }
    for (const auto& r : injections_alg(x.elements(), y)) {
        std::cout << r.value() << "\n";
    }
    return 0;
}

struct LawArgs {
    std::string law;
    std::string profile = "quick";
    std::uint64_t seed = 1;
    std::string report;
};

int check_laws(const LawArgs& args) {
    laws::LawConfig config{laws::parse_profile(args.profile), args.seed};
    std::vector<laws::LawReport> reports;
    if (args.law.empty()) {
        reports = laws::run_all(config);
    } else {
        reports.push_back(laws::run_law(args.law, config));
    }
    std::string text;
    bool all_passed = true;
    for (const auto& r : reports) {
        text += laws::render_report(r) + "\n";
        all_passed = all_passed && r.passed;
        std::cerr << "elapsed " << r.id << " " << r.elapsed_ms << " ms\n";
    }
    std::cout << text;
    if (!args.report.empty()) {
        write_file(args.report, text);
    }
    return all_passed ? 0 : kLawFailure;
}

int eval(const std::string& path, const std::string& expr) {
    if (path.empty() == expr.empty()) {
        throw ValidationError("eval needs exactly one of a file path or --expr");
    }
    std::string text = expr.empty() ? read_file(path) : expr;
    std::cout << eval_expression(text) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite relation algebra and Vickrey auction toolkit", "vickset"};
    app.set_version_flag("--version", std::string("vickset ") + vickset::kVersion);
    app.require_subcommand(1, 1);

    SingleArgs single;
    auto* single_cmd = app.add_subcommand("run-single", "Second-price single-good auction on a bid grid");
    single_cmd->add_option("--bidders", single.bidders, "Bidder set (Value encoding)")->required();
    single_cmd->add_option("--grid", single.grid, "Bid grid (set of numbers)")->required();
    single_cmd->add_option("--bidder", single.bidder, "Bidder of interest")->required();
    single_cmd->add_option("--bids", single.bids, "Evaluate at one bid vector");
    single_cmd->add_flag("--first-price", single.first_price, "Charge the winner its own bid");
    single_cmd->add_flag("--verify", single.verify,
                         "Check dom4, compatibility, reducedprice and genvick");

    std::string instance_path;
    std::string out_path;
    auto* comb_cmd = app.add_subcommand("run-combinatorial", "Clear a combinatorial Vickrey auction");
    comb_cmd->add_option("instance", instance_path, "Instance file")->required();
    comb_cmd->add_option("--out", out_path, "Write the outcome here instead of stdout");

    auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate partitions or injections");
    enum_cmd->require_subcommand(1, 1);
    std::vector<std::string> elements;
    auto* parts_cmd = enum_cmd->add_subcommand("partitions", "All partitions of distinct elements");
    parts_cmd->add_option("elements", elements, "Elements (Value encoding)");
    std::string inj_x;
    std::string inj_y;
    auto* inj_cmd = enum_cmd->add_subcommand("injections", "All injections from X into Y");
    inj_cmd->add_option("X", inj_x, "Source set")->required();
    inj_cmd->add_option("Y", inj_y, "Target set")->required();

    LawArgs law_args;
    auto* laws_cmd = app.add_subcommand("check-laws", "Run the law suite");
    laws_cmd->add_option("--law", law_args.law, "Run a single law by id");
    laws_cmd->add_option("--profile", law_args.profile, "quick or full");
    laws_cmd->add_option("--seed", law_args.seed, "Seed for random phases");
    laws_cmd->add_option("--report", law_args.report, "Also write the report here");

    std::string eval_path;
    std::string eval_expr;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a relation expression");
    eval_cmd->add_option("path", eval_path, "File holding one expression");
    eval_cmd->add_option("--expr", eval_expr, "Expression given inline");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*single_cmd) {
            return run_single(single);
        }
        if (*comb_cmd) {
            return run_combinatorial(instance_path, out_path);
        }
        if (*parts_cmd) {
            return enumerate_partitions(elements);
        }
        if (*inj_cmd) {
            return enumerate_injections(inj_x, inj_y);
        }
        if (*laws_cmd) {
            return check_laws(law_args);
        }
        return eval(eval_path, eval_expr);
    } catch (const vickset::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return vickset::exit_code_for(e.kind());
    }
}
