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

#include "textfriction/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iterator>
#include <sstream>
#include <thread>

#include "textfriction/error.hpp"
#include "textfriction/readability.hpp"

namespace textfriction {
namespace fs = std::filesystem;
namespace {

std::ofstream open_output(const fs::path& path, bool append = false) {
  std::ofstream out(path, std::ios::binary | (append ? std::ios::app : std::ios::trunc));
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

void write_row(std::ostream& out, const std::string& name, double a, double b) {
  char buf[128];
  const int len = std::snprintf(buf, sizeof buf, "\t%f\t%f\n", a, b);
  out << name;
  out.write(buf, len);
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

double parse_double(const std::string& field, const fs::path& path) {
  char* end = nullptr;
  const double value = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size()) {
    throw IoError(path.string() + ": not a number: '" + field + "'");
  }
  return value;
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

// name<TAB>a<TAB>b rows, skipping blank lines.
template <typename Row>
std::vector<Row> read_triples(const fs::path& path) {
  std::vector<Row> rows;
  for (const auto& line : read_lines(path)) {
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 3) {
      throw IoError(path.string() + ": expected 3 tab-separated fields: " + line);
    }
    rows.push_back(Row{fields[0], parse_double(fields[1], path),
                       parse_double(fields[2], path)});
  }
  return rows;
}

std::vector<fs::path> list_texts(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoError("not a directory: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  return files;
}

}  // namespace

void RunConfig::validate() const {
  if (width == 0 || width > kMaxWidth) {
    throw DomainError("width must be in [1, " + std::to_string(kMaxWidth) + "]");
  }
  if (patch && !(*patch >= 0.0 && *patch <= 1.0)) {
    throw DomainError("patch must lie in [0, 1]");
  }
  if (!(bin_width > 0.0)) throw DomainError("bin width must be positive");
}

double RunConfig::effective_patch() const {
  return patch.value_or(default_table().patch());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return data;
}

std::string dat_name(const fs::path& input) {
  const fs::path name = input.filename();
  if (!name.has_extension()) return name.string() + ".dat";
  return name.stem().string() + ".dat";
}

TextAnalysis analyze_text(std::string_view raw, std::string filename,
                          const RunConfig& config) {
  config.validate();
  Transliteration ascii = transliterate(raw, config.encoding);
  std::string text = std::move(ascii.text);
  bool misordered = false;
  if (config.strip_boilerplate) {
    StrippedText stripped = strip_gutenberg_boilerplate(text);
    text = std::move(stripped.text);
    misordered = stripped.misordered_markers;
  }
  const LetterStream stream = to_letter_stream(text);
  const TextSurface surface = build_surface(stream, default_table(), config.width);

  TextAnalysis analysis;
  analysis.profile = sliding_friction(surface, config.effective_patch());
  analysis.invalid_bytes = ascii.invalid_bytes;
  analysis.dropped_chars = ascii.dropped;
  analysis.letters = stream.size();
  analysis.misordered_markers = misordered;

  const ReadabilityScore score = score_text(text);
  CorpusRecord& rec = analysis.record;
  rec.filename = std::move(filename);
  rec.mean_friction = analysis.profile.mean;
  rec.stddev = analysis.profile.stddev;
  rec.ease = score.ease;
  rec.grade = score.grade;
  rec.predicted_ease = predict_ease(kReferenceModel, rec.mean_friction);
  return analysis;
}

TextAnalysis analyze_file(const fs::path& path, const RunConfig& config) {
  TextAnalysis analysis =
      analyze_text(read_file(path), path.filename().string(), config);
  fs::create_directories(config.out_dir);
  const fs::path out_path = config.out_dir / dat_name(path);
  std::ofstream out = open_output(out_path);
  write_profile(out, analysis.record.filename, analysis.profile);
  finish(out, out_path);
  return analysis;
}

BatchResult batch(const RunConfig& config) {
  config.validate();
  const std::vector<fs::path> files = list_texts(config.input);
  if (files.empty()) {
    throw DomainError("no .txt files in " + config.input.string());
  }
  fs::create_directories(config.out_dir);

  std::vector<std::optional<CorpusRecord>> results(files.size());
  std::vector<std::string> notes(files.size());
  std::vector<std::exception_ptr> failures(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        TextAnalysis analysis = analyze_file(files[i], config);
        if (analysis.misordered_markers) {
          notes[i] = files[i].filename().string() +
                       ": END marker precedes START marker; boilerplate kept";
        }
        results[i] = std::move(analysis.record);
      } catch (const DomainError& e) {
        notes[i] = files[i].filename().string() + ": skipped: " + e.what();
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n_workers =
      std::min<std::size_t>(files.size(), config.jobs ? config.jobs : hw);
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < n_workers; ++i) pool.emplace_back(worker);
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  BatchResult result;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (results[i]) result.records.push_back(std::move(*results[i]));
    if (!notes[i].empty()) result.warnings.push_back(std::move(notes[i]));
  }

  if (result.records.size() >= 2) {
    std::vector<Point> points;
    for (const auto& r : result.records) points.push_back({r.mean_friction, r.ease});
    try {
      result.model = ols_fit(points);
    } catch (const DomainError& e) {
      result.warnings.push_back(std::string("regression skipped: ") + e.what());
    }
  } else {
    result.warnings.push_back("regression skipped: fewer than two analyzed texts");
  }
  const RegressionModel& model = result.model ? *result.model : kReferenceModel;
  for (auto& r : result.records) r.predicted_ease = predict_ease(model, r.mean_friction);

  const fs::path stats_path = config.out_dir / kStatisticsFile;
  std::ofstream stats = open_output(stats_path, config.append);
  write_statistics(stats, result.records);
  finish(stats, stats_path);

  const fs::path read_path = config.out_dir / kReadabilityFile;
  std::ofstream read = open_output(read_path, config.append);
  write_readability(read, result.records);
  finish(read, read_path);

  const fs::path pred_path = config.out_dir / kPredictionFile;
  std::ofstream pred = open_output(pred_path);
  write_predictions(pred, result.records);
  finish(pred, pred_path);

  const fs::path reg_path = config.out_dir / kRegressionFile;
  if (result.model) {
    std::ofstream reg = open_output(reg_path);
    write_regression(reg, *result.model);
    finish(reg, reg_path);
  } else {
    std::error_code ec;
    fs::remove(reg_path, ec);
  }
  return result;
}

void write_statistics(std::ostream& out, const std::vector<CorpusRecord>& records) {
  for (const auto& r : records) write_row(out, r.filename, r.mean_friction, r.stddev);
}

void write_readability(std::ostream& out, const std::vector<CorpusRecord>& records) {
  for (const auto& r : records) write_row(out, r.filename, r.ease, r.grade);
}

void write_predictions(std::ostream& out, const std::vector<CorpusRecord>& records) {
  for (const auto& r : records) write_row(out, r.filename, r.ease, r.predicted_ease);
}

void write_regression(std::ostream& out, const RegressionModel& model) {
  char buf[256];
  const int len = std::snprintf(buf, sizeof buf,
                                "slope\t%f\nintercept\t%f\nr\t%f\nn\t%zu\n",
                                model.slope, model.intercept, model.r, model.n);
  out.write(buf, len);
}

std::vector<StatisticsRow> read_statistics(const fs::path& path) {
  return read_triples<StatisticsRow>(path);
}

std::vector<ReadabilityRow> read_readability(const fs::path& path) {
  return read_triples<ReadabilityRow>(path);
}

std::vector<PredictionRow> read_predictions(const fs::path& path) {
  return read_triples<PredictionRow>(path);
}

RegressionModel read_regression(const fs::path& path) {
  RegressionModel model;
  int seen = 0;
  for (const auto& line : read_lines(path)) {
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 2) throw IoError(path.string() + ": bad line: " + line);
    const double value = parse_double(fields[1], path);
    if (fields[0] == "slope") {
      model.slope = value;
    } else if (fields[0] == "intercept") {
      model.intercept = value;
    } else if (fields[0] == "r") {
      model.r = value;
    } else if (fields[0] == "n") {
      model.n = static_cast<std::size_t>(value);
    } else {
      throw IoError(path.string() + ": unknown key: " + fields[0]);
    }
    ++seen;
  }
  if (seen != 4) throw IoError(path.string() + ": incomplete regression file");
  return model;
}

ProfileFile read_profile(const fs::path& path) {
  const auto lines = read_lines(path);
  if (lines.empty()) throw IoError(path.string() + ": empty profile file");
  ProfileFile profile;
  profile.name = lines.front();
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto fields = split_tabs(lines[i]);
    if (fields.size() != 2) throw IoError(path.string() + ": bad line: " + lines[i]);
    profile.values.push_back(parse_double(fields[0], path));
  }
  return profile;
}

}  // namespace textfriction
