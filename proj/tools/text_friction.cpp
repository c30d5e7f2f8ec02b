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

// text_friction: sliding-friction and readability analysis of plain texts.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "textfriction/coefficients.hpp"
#include "textfriction/corpus.hpp"
#include "textfriction/error.hpp"
#include "textfriction/fetch.hpp"
#include "textfriction/kernels.hpp"
#include "textfriction/plots.hpp"

namespace fs = std::filesystem;
using namespace textfriction;

namespace {

constexpr int kDomainExit = 1;
constexpr int kIoExit = 2;

struct Options {
  std::string target;
  std::size_t width = kSurfaceWidth;
  std::optional<double> patch;
  bool strip = false;
  std::string encoding = "utf8";
  double bin_width = kDefaultBinWidth;
  std::string out = ".";
  bool append = false;
  unsigned jobs = 0;
  bool plots = false;
  int delay_ms = 2000;
  std::string base_url = FetchOptions{}.base_url;
};

void add_analysis_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--width", o.width, "Surface width in cells")->capture_default_str();
  cmd->add_option("--patch", o.patch, "Patch coefficient (default: median coefficient)");
  cmd->add_flag("--strip-gutenberg", o.strip, "Remove Project Gutenberg header/footer");
  cmd->add_option("--encoding", o.encoding, "Input encoding")
      ->check(CLI::IsMember({"utf8", "ascii"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Output directory")->capture_default_str();
  cmd->add_flag("--append", o.append, "Append to statistics.dat and readability.dat");
}

RunConfig make_config(const Options& o) {
  RunConfig config;
  config.input = o.target;
  config.width = o.width;
  config.patch = o.patch;
  config.strip_boilerplate = o.strip;
  config.encoding = parse_encoding(o.encoding);
  config.out_dir = o.out;
  config.bin_width = o.bin_width;
  config.append = o.append;
  config.jobs = o.jobs;
  config.validate();
  return config;
}

void write_summary_files(const RunConfig& config, const CorpusRecord& record) {
  const std::vector<CorpusRecord> records{record};
  const auto mode = std::ios::binary | (config.append ? std::ios::app : std::ios::trunc);
  std::ofstream stats(config.out_dir / kStatisticsFile, mode);
  std::ofstream read(config.out_dir / kReadabilityFile, mode);
  if (!stats || !read) throw IoError("cannot write summary files in " + config.out_dir.string());
  write_statistics(stats, records);
  write_readability(read, records);
}

void print_record(const CorpusRecord& r) {
  std::printf("%s\tMF=%.6f\tstddev=%.6f\tease=%.2f\tgrade=%.1f\tpredicted=%.2f\n",
              r.filename.c_str(), r.mean_friction, r.stddev, r.ease, r.grade,
              r.predicted_ease);
}

int run_analyze(const Options& o) {
  const RunConfig config = make_config(o);
  const TextAnalysis analysis = analyze_file(config.input, config);
  if (analysis.invalid_bytes > 0) {
    std::fprintf(stderr, "warning: %zu invalid input bytes dropped\n", analysis.invalid_bytes);
  }
  if (analysis.misordered_markers) {
    std::fprintf(stderr, "warning: END marker precedes START marker; boilerplate kept\n");
  }
  write_summary_files(config, analysis.record);
  print_record(analysis.record);
  return 0;
}

int run_batch(const Options& o) {
  const RunConfig config = make_config(o);
  const BatchResult result = batch(config);
  for (const auto& w : result.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  for (const auto& r : result.records) print_record(r);
  if (result.model) {
    std::printf("regression: ease = %.3f + %.6f MF (r = %.4f, n = %zu)\n",
                result.model->intercept, result.model->slope, result.model->r,
                result.model->n);
  }
  if (o.plots && !result.records.empty()) plot_run(config.out_dir, config.bin_width);
  return 0;
}

int run_fetch(const Options& o) {
  FetchOptions options;
  options.base_url = o.base_url;
  options.delay = std::chrono::milliseconds(o.delay_ms);
  const FetchReport report = fetch_manifest(o.target, o.out, options);
  for (const auto& w : report.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  std::printf("fetched %zu, already present %zu, failed %zu\n", report.fetched,
              report.present, report.failed);
  return 0;
}

int run_plot(const Options& o) {
  if (!(o.bin_width > 0.0)) throw DomainError("bin width must be positive");
  const PlotSet set = plot_run(o.target, o.bin_width);
  std::printf("wrote %zu plot files to %s\n", set.written.size(),
              (fs::path(o.target) / "plots").string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sliding-friction and Flesch readability analysis of plain texts"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "Analyze one text file");
  analyze->add_option("file", o.target, "Input text")->required();
  add_analysis_flags(analyze, o);

  auto* batch_cmd = app.add_subcommand("batch", "Analyze every .txt file in a directory");
  batch_cmd->add_option("dir", o.target, "Corpus directory")->required();
  add_analysis_flags(batch_cmd, o);
  batch_cmd->add_option("--jobs", o.jobs, "Worker threads (0: all cores)");
  batch_cmd->add_flag("--plots", o.plots, "Also write figures to <out>/plots");
  batch_cmd->add_option("--bin-width", o.bin_width, "Histogram bin width for --plots")
      ->capture_default_str();

  auto* fetch = app.add_subcommand("fetch", "Download the texts listed in a manifest");
  fetch->add_option("manifest", o.target, "Manifest TSV")->required();
  fetch->add_option("--out", o.out, "Corpus directory")->capture_default_str();
  fetch->add_option("--delay-ms", o.delay_ms, "Pause between downloads")->capture_default_str();
  fetch->add_option("--base-url", o.base_url, "Mirror base URL")->capture_default_str();

  auto* plot = app.add_subcommand("plot", "Emit TSV and SVG figures for a batch run");
  plot->add_option("rundir", o.target, "Batch output directory")->required();
  plot->add_option("--bin-width", o.bin_width, "Histogram bin width")->capture_default_str();

  auto* table = app.add_subcommand("table", "Print the letter coefficient table as TSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(o);
    if (*batch_cmd) return run_batch(o);
    if (*fetch) return run_fetch(o);
    if (*plot) return run_plot(o);
    if (*table) {
      default_table().write_tsv(std::cout);
      return 0;
    }
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kDomainExit;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIoExit;
  } catch (const fs::filesystem_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIoExit;
  }
  return 0;
}
