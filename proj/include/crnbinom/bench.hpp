#pragma once

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "crnbinom/analyze.hpp"
#include "crnbinom/parse.hpp"

namespace crnbinom {

struct BenchOptions {
    unsigned threads = 1;
    ParseOptions parse;
};

struct BenchRow {
    std::string model;
    std::size_t n = 0;
    std::size_t r = 0;
    Verdict verdict = Verdict::UnconditionallyBinomial;
    double t_matrix_ms = 0;
    double t_graph_ms = 0;
    double speedup = 0;  // t_matrix_ms / t_graph_ms
};

struct BenchReport {
    std::vector<BenchRow> rows;              // input order
    std::vector<AnalysisReport> reports;     // full diagnostics, same order
    std::vector<BatchError> errors;
    std::optional<double> median_speedup;    // absent for an empty run
};

namespace detail {

inline std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

inline double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

}  // namespace detail

/// Runs both methods on every model of a corpus (directory of .crn files or
/// a separator-structured batch file). Parse failures are recorded and the
/// run continues; a method disagreement propagates (it is a bug, not data).
inline BenchReport run_bench(const std::filesystem::path& corpus,
                             const BenchOptions& options = {}) {
    const BatchResult batch = parse_batch(corpus, options.parse);
    BenchReport report;
    report.errors = batch.errors;
    report.reports.resize(batch.models.size());

    const unsigned workers =
        std::max(1u, std::min<unsigned>(options.threads, std::max<std::size_t>(batch.models.size(), 1)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= batch.models.size()) break;
            try {
                report.reports[i] =
                    analyze(batch.models[i].name, batch.models[i].network, Method::Both);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                break;
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (const auto& r : report.reports) {
        BenchRow row;
        row.model = r.model;
        row.n = r.species;
        row.r = r.reactions;
        row.verdict = r.verdict;
        row.t_matrix_ms = *r.matrix_ms;
        row.t_graph_ms = *r.graph_ms;
        row.speedup = row.t_matrix_ms / row.t_graph_ms;
        report.rows.push_back(std::move(row));
    }
    if (!report.rows.empty()) {
        std::vector<double> speedups;
        for (const auto& row : report.rows) speedups.push_back(row.speedup);
        report.median_speedup = detail::median(std::move(speedups));
    }
    return report;
}

inline constexpr const char* kCsvHeader = "model,n,r,verdict,t_matrix_ms,t_graph_ms,speedup";

namespace detail {

inline std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        quoted += c;
        if (c == '"') quoted += '"';
    }
    quoted += '"';
    return quoted;
}

}  // namespace detail

/// CSV rendering: '.' decimal separator, LF line endings, one row per model
/// in input order. Everything except the three timing columns is stable
/// across reruns on identical input.
inline std::string to_csv(const BenchReport& report) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& row : report.rows) {
        out += detail::csv_quote(row.model);
        out += ',' + std::to_string(row.n);
        out += ',' + std::to_string(row.r);
        out += ',' + to_string(row.verdict);
        out += ',' + detail::format_fixed(row.t_matrix_ms, 6);
        out += ',' + detail::format_fixed(row.t_graph_ms, 6);
        out += ',' + detail::format_fixed(row.speedup, 6);
        out += '\n';
    }
    return out;
}

/// Parses to_csv output back into rows (round-trip check and downstream
/// tooling). Understands RFC-4180-style quoting for the model column.
inline std::vector<BenchRow> parse_report_csv(const std::string& csv) {
    std::vector<BenchRow> rows;
    std::size_t pos = 0;
    auto read_line = [&](std::string& line) {
        if (pos >= csv.size()) return false;
        std::size_t end = csv.find('\n', pos);
        if (end == std::string::npos) end = csv.size();
        line = csv.substr(pos, end - pos);
        pos = end + 1;
        return true;
    };
    std::string line;
    if (!read_line(line)) throw std::runtime_error("empty CSV");
    if (line != kCsvHeader) throw std::runtime_error("unexpected CSV header: " + line);
    while (read_line(line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t i = 0;
        while (i <= line.size()) {
            std::string field;
            if (i < line.size() && line[i] == '"') {
                ++i;
                while (i < line.size()) {
                    if (line[i] == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                        field += '"';
                        i += 2;
                    } else if (line[i] == '"') {
                        ++i;
                        break;
                    } else {
                        field += line[i++];
                    }
                }
            } else {
                while (i < line.size() && line[i] != ',') field += line[i++];
            }
            fields.push_back(std::move(field));
            if (i < line.size() && line[i] == ',') {
                ++i;
                if (i == line.size()) fields.emplace_back();  // trailing empty field
            } else {
                break;
            }
        }
        if (fields.size() != 7) throw std::runtime_error("bad CSV row: " + line);
        BenchRow row;
        row.model = fields[0];
        row.n = std::stoull(fields[1]);
        row.r = std::stoull(fields[2]);
        if (fields[3] == to_string(Verdict::UnconditionallyBinomial))
            row.verdict = Verdict::UnconditionallyBinomial;
        else if (fields[3] == to_string(Verdict::NotUnconditionallyBinomial))
            row.verdict = Verdict::NotUnconditionallyBinomial;
        else
            throw std::runtime_error("bad verdict: " + fields[3]);
        row.t_matrix_ms = std::stod(fields[4]);
        row.t_graph_ms = std::stod(fields[5]);
        row.speedup = std::stod(fields[6]);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace crnbinom
