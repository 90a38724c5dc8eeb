// Command-line front end: generate complementary array sets, verify sets
// exactly, dump correlation surfaces, run parameter sweeps, and print the
// feasibility comparison.
//
// Exit codes: 0 success/verified, 1 I/O or parse error, 2 validation error,
// 3 verification failed, 4 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "gcas/catalog.hpp"
#include "gcas/construct.hpp"
#include "gcas/io.hpp"
#include "gcas/sweep.hpp"
#include "gcas/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNotVerified = 3;
constexpr int kExitInternal = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
    out << text;
}

gcas::Theorem1Params example1_params() {
    gcas::Theorem1Function fn{gcas::Modulus(6)};
    fn.b = 2;
    fn.m = 1;
    fn.n = 3;
    fn.partitions = {{4, 1, 2, 3}};
    fn.d = {{1, 1, 1}};
    fn.lambda = gcas::IntArray::Zero(5, 4);
    fn.lambda0 = 0;
    return gcas::Theorem1Params(std::move(fn), 3);
}

int cmd_gen(const std::string& params_file, const std::string& output_file,
            const std::string& format, const std::string& strategy_override) {
    std::string text;
    try {
        text = read_file(params_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }

    gcas::ParamsDocument doc{gcas::Theorem1Params{gcas::Theorem1Function{gcas::Modulus(2)}, 2}};
    try {
        doc = gcas::parse_params(text);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: params file does not parse: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    }

    try {
        gcas::ArraySet set{gcas::Modulus(2)};
        gcas::Validation validation;
        if (doc.is_t1()) {
            const auto& params = std::get<gcas::Theorem1Params>(doc.payload);
            validation = gcas::validate_t1(params);
            if (validation.ok()) set = gcas::build_t1_set(params);
        } else {
            auto params = std::get<gcas::Theorem2Params>(doc.payload);
            if (!strategy_override.empty())
                params.offset_strategy = gcas::strategy_from_string(strategy_override);
            validation = gcas::validate_t2(params);
            if (validation.ok()) set = gcas::build_t2_set(params);
        }
        for (const auto& warning : validation.warnings)
            std::cerr << "warning: " << warning << "\n";
        if (!validation.ok()) {
            for (const auto& error : validation.errors) std::cerr << error << "\n";
            return kExitValidation;
        }
        if (const auto dups = set.duplicate_count(); dups > 0)
            std::cerr << "warning: set contains " << dups << " duplicate member(s)\n";
        write_output(output_file,
                     format == "csv" ? gcas::array_set_to_csv(set)
                                     : gcas::serialize_array_set(set));
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

int cmd_verify(const std::string& set_file) {
    gcas::ArraySet set{gcas::Modulus(2)};
    try {
        set = gcas::parse_array_set(read_file(set_file));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    const gcas::VerificationReport report = gcas::check_gcas(set);
    std::cout << gcas::render_report(report);
    return report.is_gcas ? kExitOk : kExitNotVerified;
}

int cmd_example1() {
    try {
        const gcas::ArraySet set = gcas::build_t1_set(example1_params());
        for (std::size_t index = 0; index < set.members.size(); ++index) {
            std::cout << "member " << index << " (n=[";
            for (std::size_t t = 0; t < set.labels[index].size(); ++t) {
                if (t) std::cout << ",";
                std::cout << set.labels[index][t];
            }
            std::cout << "]):\n";
            for (gcas::Int row = 0; row < set.rows(); ++row)
                std::cout << gcas::row_digit_string(set.members[index], row) << "\n";
        }
        const gcas::VerificationReport report = gcas::check_gcas(set);
        std::cout << "peak=" << report.peak << "\n";
        std::cout << "GCAS: " << (report.is_gcas ? "yes" : "no") << " (" << report.set_size
                  << "," << report.rows << "," << report.cols << ")\n";
        return report.is_gcas ? kExitOk : kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

int cmd_sweep(const std::string& bounds_file, const std::string& report_file) {
    gcas::T1SweepBounds t1;
    gcas::T2SweepBounds t2;
    if (!bounds_file.empty()) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(read_file(bounds_file));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitIo;
        }
        if (doc.contains("t1")) {
            const auto& j = doc["t1"];
            t1.bs = j.value("b", t1.bs);
            t1.qs = j.value("q", t1.qs);
            t1.max_mn = j.value("max_mn", t1.max_mn);
            t1.max_cells = j.value("max_cells", t1.max_cells);
            t1.max_set_size = j.value("max_set_size", t1.max_set_size);
            t1.draws = j.value("draws", t1.draws);
            t1.seed = j.value("seed", t1.seed);
        }
        if (doc.contains("t2")) {
            const auto& j = doc["t2"];
            t2.b1s = j.value("b1", t2.b1s);
            t2.b2s = j.value("b2", t2.b2s);
            t2.qs = j.value("q", t2.qs);
            t2.max_m = j.value("max_m", t2.max_m);
            t2.max_n = j.value("max_n", t2.max_n);
            t2.max_set_size = j.value("max_set_size", t2.max_set_size);
            t2.draws = j.value("draws", t2.draws);
            t2.seed = j.value("seed", t2.seed);
        }
    }

    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    const gcas::SweepOutcome outcome = gcas::run_sweep(t1, t2, threads);
    try {
        write_output(report_file, gcas::sweep_csv(outcome));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    std::cout << gcas::sweep_summary(outcome);
    if (outcome.records.empty())
        std::cerr << "warning: bounds exclude every valid parameter tuple\n";
    return outcome.gate_passed() ? kExitOk : kExitNotVerified;
}

int cmd_aacf_dump(const std::string& set_file, const std::string& output_csv) {
    gcas::ArraySet set{gcas::Modulus(2)};
    try {
        set = gcas::parse_array_set(read_file(set_file));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    std::ostringstream out;
    out << "u1,u2,re,im,exact_zero\n";
    char buffer[64];
    for (gcas::Int u1 = -(set.rows() - 1); u1 < set.rows(); ++u1)
        for (gcas::Int u2 = -(set.cols() - 1); u2 < set.cols(); ++u2) {
            const gcas::CyclotomicSum sum = gcas::aacf_set_sum(set, {u1, u2});
            const auto value = gcas::to_complex(sum);
            out << u1 << "," << u2 << ",";
            std::snprintf(buffer, sizeof buffer, "%.6f,%.6f", value.real(), value.imag());
            out << buffer << "," << (gcas::is_zero(sum) ? 1 : 0) << "\n";
        }
    try {
        write_output(output_csv, out.str());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

int cmd_compare(const std::string& bounds_file) {
    gcas::CatalogBounds bounds;
    if (!bounds_file.empty()) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(read_file(bounds_file));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitIo;
        }
        bounds.max_L1 = doc.value("max_L1", bounds.max_L1);
        bounds.max_L2 = doc.value("max_L2", bounds.max_L2);
        bounds.max_set_size = doc.value("max_set_size", bounds.max_set_size);
        bounds.max_q = doc.value("max_q", bounds.max_q);
    }

    std::vector<gcas::CatalogRow> ours;
    for (gcas::Source source : {gcas::Source::Th1, gcas::Source::Th2}) {
        auto rows = gcas::enumerate_feasible(source, bounds);
        ours.insert(ours.end(), rows.begin(), rows.end());
    }
    std::vector<gcas::CatalogRow> prior;
    for (gcas::Source source :
         {gcas::Source::Ref11, gcas::Source::Ref16, gcas::Source::Ref17a,
          gcas::Source::Ref17b, gcas::Source::Ref18a, gcas::Source::Ref18b,
          gcas::Source::Ref12a, gcas::Source::Ref12b}) {
        auto rows = gcas::enumerate_feasible(source, bounds);
        prior.insert(prior.end(), rows.begin(), rows.end());
    }

    std::cout << "== feasible rows (this work) ==\n" << gcas::render_catalog_text(ours);
    std::cout << "== comparison ==\n" << gcas::render_comparison(gcas::compare(ours, prior));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-D Golay complementary array set generator and exact verifier"};
    app.require_subcommand(1);

    std::string params_file, set_file, bounds_file;
    std::string output_file = "-";
    std::string format = "json";
    std::string strategy;

    auto* gen = app.add_subcommand("gen", "build a set from a params file");
    gen->add_option("params", params_file, "params JSON file")->required();
    gen->add_option("--output", output_file, "output path ('-' for stdout)");
    gen->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    gen->add_option("--strategy", strategy, "offset strategy override (t2 only)")
        ->check(CLI::IsMember({"as-printed", "as-printed-scaled", "mirror-t1"}));

    auto* verify = app.add_subcommand("verify", "check a set file exactly");
    verify->add_option("set", set_file, "set JSON file")->required();

    app.add_subcommand("example1", "print and verify the built-in (9,2,8) reference set");

    auto* sweep = app.add_subcommand("sweep", "build+verify over a parameter grid");
    std::string sweep_report = "sweep_report.csv";
    sweep->add_option("--bounds", bounds_file, "bounds JSON file");
    sweep->add_option("--output", sweep_report, "CSV report path");

    auto* dump = app.add_subcommand("aacf-dump", "write the correlation surface as CSV");
    dump->add_option("set", set_file, "set JSON file")->required();
    std::string dump_out = "-";
    dump->add_option("--output", dump_out, "CSV output path");

    auto* comparison = app.add_subcommand("compare", "feasibility comparison table");
    comparison->add_option("--bounds", bounds_file, "bounds JSON file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(params_file, output_file, format, strategy);
        if (verify->parsed()) return cmd_verify(set_file);
        if (app.get_subcommand("example1")->parsed()) return cmd_example1();
        if (sweep->parsed()) return cmd_sweep(bounds_file, sweep_report);
        if (dump->parsed()) return cmd_aacf_dump(set_file, dump_out);
        if (comparison->parsed()) return cmd_compare(bounds_file);
    } catch (const gcas::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
