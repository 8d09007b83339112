// Copyright 2026 The xstate-geometry Authors
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

#include "xstate/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "xstate/hyperplanes.hpp"
#include "xstate/io.hpp"
#include "xstate/nonlocality.hpp"
#include "xstate/regions.hpp"
#include "xstate/verify.hpp"

namespace xstate::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format;
    std::string out_path;
    std::string state_file;
    std::string suite = "all";
    std::uint64_t seed = 42;
    int draws = 1000;
    int resolution = 200;
    double beta0 = 0.0;
    std::string c = "0,0";
    double k = 1.0;
    int type = 1;
};

void emit(const std::string& text, const Options& o, std::ostream& out) {
    if (o.out_path.empty()) {
        out << text;
        if (!out) throw IoError("failed writing to standard output");
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + o.out_path + "' for writing");
    f << text;
    if (!f.flush()) throw IoError("failed writing '" + o.out_path + "'");
}

// "x,y" -> C = (b4, b3) = (x, y)
std::pair<double, double> parse_c(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--c expects \"x,y\"");
    try {
        std::size_t used_x = 0, used_y = 0;
        const std::string xs = text.substr(0, comma), ys = text.substr(comma + 1);
        const double x = std::stod(xs, &used_x);
        const double y = std::stod(ys, &used_y);
        if (used_x != xs.size() || used_y != ys.size()) throw std::invalid_argument("trailing characters");
        return {x, y};
    } catch (const std::exception&) {
        throw UsageError("--c expects two numbers as \"x,y\", got \"" + text + "\"");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "'");
    std::ostringstream s;
    s << f.rdbuf();
    if (f.bad()) throw IoError("failed reading '" + path + "'");
    return s.str();
}

int do_catalog(const Options& o, std::ostream& out) {
    if (o.format == "json") {
        emit(catalog_json() + "\n", o, out);
    } else {
        emit(catalog_table() + census_line() + "\n", o, out);
    }
    return kOk;
}

int do_analyze(const Options& o, std::ostream& out, std::ostream& err) {
    const std::string text = read_file(o.state_file);
    HyperplaneState state;
    try {
        state = parse_state_descriptor(text);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const InvalidStateError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }
    const AnalysisReport rep = analyze_state(state);
    if (rep.region) {
        const RegionClass spectral = !rep.spectral.valid      ? RegionClass::Invalid
                                     : rep.spectral.entangled ? RegionClass::Entangled
                                                              : RegionClass::Separable;
        if (spectral != *rep.region) {
            err << "internal inconsistency: region classification " << region_class_name(*rep.region)
                << " but spectral classification " << region_class_name(spectral) << '\n';
            return kInconsistent;
        }
    }
    emit(analysis_report_json(rep) + "\n", o, out);
    return kOk;
}

int do_region(const Options& o, std::ostream& out) {
    const auto [c4, c3] = parse_c(o.c);
    emit(region_csv(sample_region(o.beta0, c3, c4, o.type, o.resolution)), o, out);
    return kOk;
}

int do_heatmap(const Options& o, std::ostream& out) {
    const auto [c4, c3] = parse_c(o.c);
    emit(heatmap_csv(heatmap_m(o.beta0, c3, c4, o.resolution, o.type)), o, out);
    return kOk;
}

int do_curve(const Options& o, std::ostream& out) {
    const auto [c4, c3] = parse_c(o.c);
    emit(curve_json(constant_m_curve(o.k, o.beta0, c3, c4)) + "\n", o, out);
    return kOk;
}

int do_verify(const Options& o, std::ostream& out) {
    const verify::SuiteReport rep = verify::run_suite(o.suite, o.seed, o.draws);
    emit(verify::format_report(rep), o, out);
    return rep.ok() ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Two-qubit hyperplane states over W(3,2)", "xstate"};
    app.require_subcommand(1, 1);

    auto add_out = [&o](CLI::App* sub) { sub->add_option("--out", o.out_path, "Write output to this file"); };
    auto add_plane = [&o](CLI::App* sub) {
        sub->add_option("--beta0", o.beta0, "beta0")->capture_default_str();
        sub->add_option("--c", o.c, "C = (beta4, beta3) as \"x,y\"")->capture_default_str();
        sub->add_option("--type", o.type, "Type t")->check(CLI::IsMember({1, 2}))->capture_default_str();
    };

    CLI::App* catalog = app.add_subcommand("catalog", "Fano plane table and hyperplane census");
    o.format = "table";
    catalog->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    add_out(catalog);

    CLI::App* analyze = app.add_subcommand("analyze", "Spectral, region and Bell analysis of a state file");
    analyze->add_option("state_file", o.state_file, "JSON state descriptor")->required();
    analyze->add_option("--format", o.format, "json")->check(CLI::IsMember({"json"}));
    add_out(analyze);

    CLI::App* region = app.add_subcommand("region", "Classify a grid over (beta1, beta2) as CSV");
    add_plane(region);
    region->add_option("--resolution", o.resolution)->check(CLI::Range(2, 4000))->capture_default_str();
    add_out(region);

    CLI::App* heatmap = app.add_subcommand("heatmap", "Bell measure over (beta1, beta2) as CSV");
    add_plane(heatmap);
    heatmap->add_option("--resolution", o.resolution)->check(CLI::Range(2, 4000))->capture_default_str();
    add_out(heatmap);

    CLI::App* curve = app.add_subcommand("curve", "Constant-M curve as JSON");
    curve->add_option("--k", o.k, "Level k")->capture_default_str();
    curve->add_option("--beta0", o.beta0, "beta0")->capture_default_str();
    curve->add_option("--c", o.c, "C = (beta4, beta3) as \"x,y\"")->capture_default_str();
    add_out(curve);

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run property suites");
    verify_cmd->add_option("suite", o.suite, "geometry, spectral, region, nonlocality or all")
        ->check(CLI::IsMember({"geometry", "spectral", "region", "nonlocality", "all"}))
        ->capture_default_str();
    verify_cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    verify_cmd->add_option("--draws", o.draws, "Random states per property")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_out(verify_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        if (e.get_name() == "RequiredError" && app.get_subcommands().empty()) {
            err << app.help();
        }
        return kUsage;
    }

    try {
        if (catalog->parsed()) return do_catalog(o, out);
        if (analyze->parsed()) return do_analyze(o, out, err);
        if (region->parsed()) return do_region(o, out);
        if (heatmap->parsed()) return do_heatmap(o, out);
        if (curve->parsed()) return do_curve(o, out);
        if (verify_cmd->parsed()) return do_verify(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return kInconsistent;
    }
    return kUsage;
}

}  // namespace xstate::cli
