// Copyright 2026 The Text Friction Authors. All Rights Reserved.
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

#include "textfriction/plots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "textfriction/error.hpp"

namespace textfriction {
namespace fs = std::filesystem;
namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = 0.0;
  double hi = 1.0;

  void include(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  static Range of(const std::vector<double>& v) {
    Range r{v.empty() ? 0.0 : v.front(), v.empty() ? 1.0 : v.front()};
    for (const double x : v) r.include(x);
    return r;
  }
  Range padded() const {
    const double span = hi - lo;
    const double pad = span > 0.0 ? span * 0.05 : std::max(1.0, std::abs(lo) * 0.05);
    return {lo - pad, hi + pad};
  }
};

// Minimal fixed-size SVG chart with a linear x/y mapping and labeled axes.
class Chart {
 public:
  Chart(std::string title, std::string x_label, std::string y_label, Range x, Range y)
      : title_(std::move(title)), x_label_(std::move(x_label)),
        y_label_(std::move(y_label)), x_(x), y_(y) {}

  double px(double x) const { return kLeft + (x - x_.lo) / (x_.hi - x_.lo) * plot_w(); }
  double py(double y) const { return kTop + (y_.hi - y) / (y_.hi - y_.lo) * plot_h(); }
  double plot_w() const { return kWidth - kLeft - kRight; }
  double plot_h() const { return kHeight - kTop - kBottom; }

  void polyline(const std::vector<std::pair<double, double>>& pts, const char* color) {
    body_ << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) body_ << ' ';
      body_ << fmt("%.2f", px(pts[i].first)) << ',' << fmt("%.2f", py(pts[i].second));
    }
    body_ << "\"/>\n";
  }

  void circle(double x, double y, const char* color) {
    body_ << "<circle cx=\"" << fmt("%.2f", px(x)) << "\" cy=\"" << fmt("%.2f", py(y))
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
  }

  // Data-space rectangle from (x0, y0) to (x1, y1).
  void rect(double x0, double y0, double x1, double y1, const char* color) {
    const double left = std::min(px(x0), px(x1));
    const double top = std::min(py(y0), py(y1));
    body_ << "<rect x=\"" << fmt("%.2f", left) << "\" y=\"" << fmt("%.2f", top)
          << "\" width=\"" << fmt("%.2f", std::abs(px(x1) - px(x0))) << "\" height=\""
          << fmt("%.2f", std::abs(py(y1) - py(y0))) << "\" fill=\"" << color << "\"/>\n";
  }

  void legend(int slot, const std::string& text, const char* color) {
    const double y = kTop + 14.0 * (slot + 1);
    body_ << "<rect x=\"" << kWidth - kRight - 150 << "\" y=\"" << y - 8
          << "\" width=\"10\" height=\"10\" fill=\"" << color << "\"/>\n"
          << "<text x=\"" << kWidth - kRight - 135 << "\" y=\"" << y + 1
          << "\" font-size=\"11\">" << escape_xml(text) << "</text>\n";
  }

  std::string render() const {
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
        << escape_xml(title_) << "</text>\n"
        << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
        << kWidth - kRight << "\" y2=\"" << kHeight - kBottom << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
        << kHeight - kBottom << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= kTicks; ++i) {
      const double xv = x_.lo + (x_.hi - x_.lo) * i / kTicks;
      const double yv = y_.lo + (y_.hi - y_.lo) * i / kTicks;
      svg << "<text x=\"" << fmt("%.2f", px(xv)) << "\" y=\"" << kHeight - kBottom + 15
          << "\" text-anchor=\"middle\" font-size=\"10\">" << fmt("%.4g", xv) << "</text>\n"
          << "<text x=\"" << kLeft - 5 << "\" y=\"" << fmt("%.2f", py(yv) + 3)
          << "\" text-anchor=\"end\" font-size=\"10\">" << fmt("%.4g", yv) << "</text>\n";
    }
    svg << "<text x=\"" << kLeft + plot_w() / 2 << "\" y=\"" << kHeight - 8
        << "\" text-anchor=\"middle\" font-size=\"12\">" << escape_xml(x_label_) << "</text>\n"
        << "<text x=\"14\" y=\"" << kTop + plot_h() / 2 << "\" text-anchor=\"middle\" "
        << "font-size=\"12\" transform=\"rotate(-90 14 " << kTop + plot_h() / 2 << ")\">"
        << escape_xml(y_label_) << "</text>\n"
        << body_.str() << "</svg>\n";
    return svg.str();
  }

 private:
  static constexpr int kWidth = 800;
  static constexpr int kHeight = 400;
  static constexpr int kLeft = 70;
  static constexpr int kRight = 20;
  static constexpr int kTop = 30;
  static constexpr int kBottom = 45;
  static constexpr int kTicks = 5;

  std::string title_;
  std::string x_label_;
  std::string y_label_;
  Range x_;
  Range y_;
  std::ostringstream body_;
};

void write_text(const fs::path& path, const std::string& data, PlotSet& set) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << data;
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
  set.written.push_back(path);
}

std::string row(const char* spec, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, spec, a, b);
  return buf;
}

void emit_profile(const ProfileFile& profile, const fs::path& dir, PlotSet& set) {
  const std::string stem = fs::path(profile.name).stem().string();
  std::string tsv = "window\tfriction\n";
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < profile.values.size(); ++i) {
    tsv += row("%.0f\t%f\n", static_cast<double>(i), profile.values[i]);
    pts.emplace_back(static_cast<double>(i), profile.values[i]);
  }
  write_text(dir / ("profile_" + stem + ".tsv"), tsv, set);

  const Range x{0.0, std::max(1.0, static_cast<double>(profile.values.size()) - 1.0)};
  Chart chart("Friction along " + profile.name, "window (rows)", "friction", x,
              Range::of(profile.values).padded());
  chart.polyline(pts, "steelblue");
  write_text(dir / ("profile_" + stem + ".svg"), chart.render(), set);
}

void emit_scatter(const std::vector<CorpusRecord>& records, const RegressionModel& model,
                  const fs::path& dir, PlotSet& set) {
  std::string tsv = "file\tmean_friction\tstddev\tease\n";
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& r : records) {
    tsv += r.filename + row("\t%f\t%f", r.mean_friction, r.stddev) + fmt("\t%f\n", r.ease);
    xs.push_back(r.mean_friction);
    ys.push_back(r.ease);
  }
  write_text(dir / "scatter.tsv", tsv, set);

  const Range x = Range::of(xs).padded();
  Range y = Range::of(ys);
  for (const double xv : {x.lo, x.hi}) {
    y.include(predict_ease(model, xv));
    y.include(predict_ease(kReferenceModel, xv));
  }
  Chart chart("Reading ease vs. mean friction", "mean friction", "Flesch reading ease", x,
              y.padded());
  chart.polyline({{x.lo, predict_ease(model, x.lo)}, {x.hi, predict_ease(model, x.hi)}},
                 "firebrick");
  chart.polyline({{x.lo, predict_ease(kReferenceModel, x.lo)},
                  {x.hi, predict_ease(kReferenceModel, x.hi)}},
                 "gray");
  for (std::size_t i = 0; i < xs.size(); ++i) chart.circle(xs[i], ys[i], "steelblue");
  chart.legend(0, "texts", "steelblue");
  chart.legend(1, "fit " + fmt("%.3f", model.slope) + " MF " + fmt("%+.1f", model.intercept),
               "firebrick");
  chart.legend(2, "reference 0.225 MF - 687", "gray");
  write_text(dir / "scatter.svg", chart.render(), set);
}

void emit_histogram(const std::vector<CorpusRecord>& records, double bin_width,
                    const fs::path& dir, PlotSet& set) {
  std::vector<double> stddevs;
  for (const auto& r : records) stddevs.push_back(r.stddev);
  const Histogram h = histogram(stddevs, bin_width);
  std::string tsv = "lower\tcount\n";
  double max_count = 1.0;
  for (const auto& b : h.bins) {
    tsv += row("%f\t%.0f\n", b.lower, static_cast<double>(b.count));
    max_count = std::max(max_count, static_cast<double>(b.count));
  }
  write_text(dir / "histogram.tsv", tsv, set);

  const Range x{h.bins.front().lower, h.bins.back().lower + h.bin_width};
  Chart chart("Friction standard deviation", "stddev", "texts", x, Range{0.0, max_count * 1.1});
  for (const auto& b : h.bins) {
    chart.rect(b.lower + h.bin_width * 0.05, 0.0, b.lower + h.bin_width * 0.95,
               static_cast<double>(b.count), "steelblue");
  }
  write_text(dir / "histogram.svg", chart.render(), set);
}

void emit_predicted(const std::vector<CorpusRecord>& records, const fs::path& dir,
                    PlotSet& set) {
  std::string tsv = "file\tmeasured\tpredicted\n";
  Range y{0.0, 0.0};
  for (const auto& r : records) {
    tsv += r.filename + row("\t%f\t%f\n", r.ease, r.predicted_ease);
    y.include(r.ease);
    y.include(r.predicted_ease);
  }
  write_text(dir / "predicted.tsv", tsv, set);

  const auto n = static_cast<double>(records.size());
  Chart chart("Measured and predicted reading ease", "text", "ease", Range{0.0, n},
              y.padded());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const double x = static_cast<double>(i);
    chart.rect(x + 0.1, 0.0, x + 0.5, records[i].ease, "steelblue");
    chart.rect(x + 0.5, 0.0, x + 0.9, records[i].predicted_ease, "darkorange");
  }
  chart.legend(0, "measured", "steelblue");
  chart.legend(1, "predicted", "darkorange");
  write_text(dir / "predicted.svg", chart.render(), set);
}

}  // namespace

PlotSet emit_plots(const std::vector<CorpusRecord>& records,
                   const std::vector<ProfileFile>& profiles,
                   const std::optional<RegressionModel>& model, double bin_width,
                   const fs::path& dir) {
  fs::create_directories(dir);
  PlotSet set;
  for (const auto& p : profiles) emit_profile(p, dir, set);
  if (!records.empty()) {
    emit_scatter(records, model.value_or(kReferenceModel), dir, set);
    emit_histogram(records, bin_width, dir, set);
    emit_predicted(records, dir, set);
  }
  return set;
}

PlotSet plot_run(const fs::path& run_dir, double bin_width) {
  const auto stats = read_statistics(run_dir / kStatisticsFile);
  std::map<std::string, ReadabilityRow> readability;
  for (auto& r : read_readability(run_dir / kReadabilityFile)) {
    readability[r.filename] = r;
  }
  std::map<std::string, double> predicted;
  if (fs::exists(run_dir / kPredictionFile)) {
    for (const auto& p : read_predictions(run_dir / kPredictionFile)) {
      predicted[p.filename] = p.predicted;
    }
  }
  std::optional<RegressionModel> model;
  if (fs::exists(run_dir / kRegressionFile)) model = read_regression(run_dir / kRegressionFile);

  std::vector<CorpusRecord> records;
  std::vector<ProfileFile> profiles;
  for (const auto& s : stats) {
    const auto it = readability.find(s.filename);
    if (it == readability.end()) {
      throw IoError("no readability row for " + s.filename);
    }
    CorpusRecord r{s.filename, s.mean, s.stddev, it->second.ease, it->second.grade, 0.0};
    const auto p = predicted.find(s.filename);
    r.predicted_ease = p != predicted.end()
                           ? p->second
                           : predict_ease(model.value_or(kReferenceModel), s.mean);
    records.push_back(std::move(r));
    const fs::path profile_path = run_dir / dat_name(s.filename);
    if (fs::exists(profile_path)) profiles.push_back(read_profile(profile_path));
  }
  return emit_plots(records, profiles, model, bin_width, run_dir / "plots");
}

}  // namespace textfriction
