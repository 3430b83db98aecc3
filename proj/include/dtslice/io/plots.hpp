#pragma once

#include <string>
#include <vector>

namespace dtslice::io {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// Self-contained SVG renderers; colors are a fixed palette indexed by series
// order, so repeated invocations color runs identically.
std::string render_line_plot(const std::string &title, const std::string &x_label, const std::string &y_label,
                             const std::vector<Series> &series);
std::string render_bar_plot(const std::string &title, const std::string &y_label,
                            const std::vector<std::string> &labels, const std::vector<double> &values);

struct PlotInputs {
    // (legend label, metrics jsonl path)
    std::vector<std::pair<std::string, std::string>> metrics;
    // (legend label, landscape jsonl path)
    std::vector<std::pair<std::string, std::string>> landscapes;
    // (bar label, distill report json path)
    std::vector<std::pair<std::string, std::string>> agreements;
};

// Writes reward/utility/landscape/agreement SVG plots plus sidecar TSV tables
// whose cells reproduce the plotted values bit-exactly. Returns written paths.
std::vector<std::string> emit_plots(const PlotInputs &inputs, const std::string &out_dir);

} // namespace dtslice::io
