#include "dtslice/io/plots.hpp"

#include "dtslice/errors.hpp"
#include "dtslice/io/files.hpp"
#include "dtslice/io/landscape.hpp"
#include "dtslice/io/transition_log.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace dtslice::io {

using nlohmann::json;

namespace {

const char *kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr int kPaletteSize = 10;

constexpr double kWidth = 720, kHeight = 440;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

std::string escape_xml(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void grow(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (!std::isfinite(lo) || !std::isfinite(hi)) {
            lo = 0.0;
            hi = 1.0;
        }
        if (hi == lo) {
            lo -= 0.5;
            hi += 0.5;
        }
    }
};

void axes(std::ostringstream &svg, const std::string &title, const std::string &x_label, const std::string &y_label,
          const Range &xr, const Range &yr) {
    svg << "<rect x='0' y='0' width='" << kWidth << "' height='" << kHeight << "' fill='white'/>\n";
    svg << "<text x='" << kWidth / 2 << "' y='24' text-anchor='middle' font-size='16' font-family='sans-serif'>"
        << escape_xml(title) << "</text>\n";
    svg << "<line x1='" << kLeft << "' y1='" << kHeight - kBottom << "' x2='" << kWidth - kRight << "' y2='"
        << kHeight - kBottom << "' stroke='black'/>\n";
    svg << "<line x1='" << kLeft << "' y1='" << kTop << "' x2='" << kLeft << "' y2='" << kHeight - kBottom
        << "' stroke='black'/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = static_cast<double>(i) / 4.0;
        const double px = kLeft + fx * (kWidth - kLeft - kRight);
        const double py = kHeight - kBottom - fx * (kHeight - kTop - kBottom);
        svg << "<text x='" << px << "' y='" << kHeight - kBottom + 18
            << "' text-anchor='middle' font-size='11' font-family='sans-serif'>" << fmt(xr.lo + fx * (xr.hi - xr.lo))
            << "</text>\n";
        svg << "<text x='" << kLeft - 8 << "' y='" << py + 4
            << "' text-anchor='end' font-size='11' font-family='sans-serif'>" << fmt(yr.lo + fx * (yr.hi - yr.lo))
            << "</text>\n";
    }
    svg << "<text x='" << (kLeft + kWidth - kRight) / 2 << "' y='" << kHeight - 12
        << "' text-anchor='middle' font-size='13' font-family='sans-serif'>" << escape_xml(x_label) << "</text>\n";
    svg << "<text x='16' y='" << (kTop + kHeight - kBottom) / 2
        << "' text-anchor='middle' font-size='13' font-family='sans-serif' transform='rotate(-90 16 "
        << (kTop + kHeight - kBottom) / 2 << ")'>" << escape_xml(y_label) << "</text>\n";
}

} // namespace

std::string render_line_plot(const std::string &title, const std::string &x_label, const std::string &y_label,
                             const std::vector<Series> &series) {
    Range xr, yr;
    for (const Series &s : series) {
        for (double v : s.x)
            xr.grow(v);
        for (double v : s.y)
            yr.grow(v);
    }
    xr.pad();
    yr.pad();
    auto px = [&](double v) { return kLeft + (v - xr.lo) / (xr.hi - xr.lo) * (kWidth - kLeft - kRight); };
    auto py = [&](double v) { return kHeight - kBottom - (v - yr.lo) / (yr.hi - yr.lo) * (kHeight - kTop - kBottom); };

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='" << kHeight << "'>\n";
    axes(svg, title, x_label, y_label, xr, yr);
    for (std::size_t k = 0; k < series.size(); ++k) {
        const Series &s = series[k];
        const char *color = kPalette[k % kPaletteSize];
        svg << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            svg << px(s.x[i]) << "," << py(s.y[i]) << " ";
        svg << "'/>\n";
        const double ly = kTop + 14 + 16 * static_cast<double>(k);
        svg << "<line x1='" << kWidth - kRight - 150 << "' y1='" << ly << "' x2='" << kWidth - kRight - 126 << "' y2='"
            << ly << "' stroke='" << color << "' stroke-width='2'/>\n";
        svg << "<text x='" << kWidth - kRight - 120 << "' y='" << ly + 4
            << "' font-size='12' font-family='sans-serif'>" << escape_xml(s.label) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_bar_plot(const std::string &title, const std::string &y_label,
                            const std::vector<std::string> &labels, const std::vector<double> &values) {
    if (labels.size() != values.size())
        throw ShapeError("render_bar_plot: labels/values length mismatch");
    Range yr;
    yr.grow(0.0);
    for (double v : values)
        yr.grow(v);
    yr.pad();
    Range xr;
    xr.lo = 0.0;
    xr.hi = static_cast<double>(values.size());

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='" << kHeight << "'>\n";
    axes(svg, title, "", y_label, xr, yr);
    const double span = kWidth - kLeft - kRight;
    const double bar_w = span / static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double x0 = kLeft + bar_w * (static_cast<double>(i) + 0.15);
        const double y_base = kHeight - kBottom;
        const double y_top = kHeight - kBottom - (values[i] - yr.lo) / (yr.hi - yr.lo) * (kHeight - kTop - kBottom);
        svg << "<rect x='" << x0 << "' y='" << y_top << "' width='" << bar_w * 0.7 << "' height='" << y_base - y_top
            << "' fill='" << kPalette[i % kPaletteSize] << "'/>\n";
        svg << "<text x='" << x0 + bar_w * 0.35 << "' y='" << y_base + 18
            << "' text-anchor='middle' font-size='11' font-family='sans-serif'>" << escape_xml(labels[i])
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

namespace {

// TSV cells use the JSON double representation, so the table reproduces the
// source values bit-exactly.
std::string cell(double v) { return json(v).dump(); }

std::string curves_table(const std::vector<std::string> &labels, const std::vector<std::vector<double>> &xs,
                         const std::vector<std::vector<double>> &ys, const std::string &x_name) {
    std::string out = x_name;
    for (const std::string &l : labels)
        out += "\t" + l;
    out += "\n";
    std::size_t longest = 0;
    for (const auto &x : xs)
        longest = std::max(longest, x.size());
    for (std::size_t i = 0; i < longest; ++i) {
        // x column comes from the first (longest-prefix) series that covers row i.
        std::string x_cell;
        for (const auto &x : xs)
            if (i < x.size()) {
                x_cell = cell(x[i]);
                break;
            }
        out += x_cell;
        for (std::size_t k = 0; k < ys.size(); ++k)
            out += "\t" + (i < ys[k].size() ? cell(ys[k][i]) : std::string());
        out += "\n";
    }
    return out;
}

} // namespace

std::vector<std::string> emit_plots(const PlotInputs &inputs, const std::string &out_dir) {
    if (inputs.metrics.empty() && inputs.landscapes.empty() && inputs.agreements.empty())
        throw std::invalid_argument("emit_plots: nothing to plot");
    ensure_directory(out_dir);
    std::vector<std::string> written;

    if (!inputs.metrics.empty()) {
        std::vector<Series> reward_series, utility_series;
        std::vector<std::string> labels;
        std::vector<std::vector<double>> xs, reward_ys, utility_ys;
        for (const auto &[label, path] : inputs.metrics) {
            const std::vector<MetricsRow> rows = read_metrics_jsonl(path);
            Series r{label, {}, {}}, u{label, {}, {}};
            for (const MetricsRow &row : rows) {
                r.x.push_back(static_cast<double>(row.round));
                r.y.push_back(row.mean_reward);
                u.x.push_back(static_cast<double>(row.round));
                u.y.push_back(row.mean_utility);
            }
            labels.push_back(label);
            xs.push_back(r.x);
            reward_ys.push_back(r.y);
            utility_ys.push_back(u.y);
            reward_series.push_back(std::move(r));
            utility_series.push_back(std::move(u));
        }
        const std::string reward_svg = out_dir + "/reward_vs_round.svg";
        write_text_file(reward_svg, render_line_plot("Mean reward per round", "round", "mean reward", reward_series));
        written.push_back(reward_svg);
        const std::string utility_svg = out_dir + "/utility_vs_round.svg";
        write_text_file(utility_svg,
                        render_line_plot("Mean utility per round", "round", "mean utility", utility_series));
        written.push_back(utility_svg);
        const std::string reward_tsv = out_dir + "/reward_vs_round.tsv";
        write_text_file(reward_tsv, curves_table(labels, xs, reward_ys, "round"));
        written.push_back(reward_tsv);
        const std::string utility_tsv = out_dir + "/utility_vs_round.tsv";
        write_text_file(utility_tsv, curves_table(labels, xs, utility_ys, "round"));
        written.push_back(utility_tsv);
    }

    if (!inputs.landscapes.empty()) {
        std::vector<Series> series;
        std::vector<std::string> labels;
        std::vector<std::vector<double>> xs, ys;
        for (const auto &[label, path] : inputs.landscapes) {
            const LandscapeResult scan = read_landscape(path);
            series.push_back(Series{label, scan.lambdas, scan.losses});
            labels.push_back(label);
            xs.push_back(scan.lambdas);
            ys.push_back(scan.losses);
        }
        const std::string svg = out_dir + "/loss_landscape.svg";
        write_text_file(svg, render_line_plot("Loss landscape along the gradient direction", "lambda", "loss", series));
        written.push_back(svg);
        const std::string tsv = out_dir + "/loss_landscape.tsv";
        write_text_file(tsv, curves_table(labels, xs, ys, "lambda"));
        written.push_back(tsv);
    }

    if (!inputs.agreements.empty()) {
        std::vector<std::string> labels;
        std::vector<double> values;
        for (const auto &[label, path] : inputs.agreements) {
            const json j = read_json_file(path);
            labels.push_back(label);
            values.push_back(j.at("holdout_agreement").get<double>());
        }
        const std::string svg = out_dir + "/distill_agreement.svg";
        write_text_file(svg, render_bar_plot("Student/teacher greedy agreement", "agreement", labels, values));
        written.push_back(svg);
        std::string tsv_body = "student\tagreement\n";
        for (std::size_t i = 0; i < labels.size(); ++i)
            tsv_body += labels[i] + "\t" + cell(values[i]) + "\n";
        const std::string tsv = out_dir + "/distill_agreement.tsv";
        write_text_file(tsv, tsv_body);
        written.push_back(tsv);
    }
    return written;
}

} // namespace dtslice::io
