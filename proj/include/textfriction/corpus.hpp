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

#ifndef TEXTFRICTION_CORPUS_HPP_
#define TEXTFRICTION_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "textfriction/analytics.hpp"
#include "textfriction/friction.hpp"
#include "textfriction/preprocess.hpp"

namespace textfriction {

struct RunConfig {
  std::filesystem::path input;
  std::size_t width = kSurfaceWidth;
  std::optional<double> patch;  // unset: the coefficient table's median
  bool strip_boilerplate = false;
  Encoding encoding = Encoding::kUtf8;
  std::filesystem::path out_dir = ".";
  double bin_width = kDefaultBinWidth;
  bool append = false;  // append to statistics.dat / readability.dat
  unsigned jobs = 0;    // 0: one per hardware thread

  // Throws DomainError on width 0 (or above kMaxWidth), a patch outside
  // [0, 1], or a non-positive bin width.
  void validate() const;
  double effective_patch() const;

  static constexpr std::size_t kMaxWidth = 1'000'000;
};

struct CorpusRecord {
  std::string filename;
  double mean_friction = 0.0;
  double stddev = 0.0;
  double ease = 0.0;
  double grade = 0.0;
  double predicted_ease = 0.0;
};

struct TextAnalysis {
  CorpusRecord record;
  FrictionProfile profile;
  std::size_t invalid_bytes = 0;
  std::size_t dropped_chars = 0;
  std::size_t letters = 0;
  bool misordered_markers = false;  // boilerplate left in place
};

// Runs the whole per-text pipeline on raw bytes: transliterate, optionally
// strip boilerplate, score readability on the ASCII text and friction on its
// letter stream. predicted_ease uses kReferenceModel. Throws DomainError for
// texts that are too short or have no words.
TextAnalysis analyze_text(std::string_view raw, std::string filename,
                          const RunConfig& config);

// Reads `path`, analyzes it and writes its profile to
// config.out_dir / dat_name(path). Throws IoError on read or write failure.
TextAnalysis analyze_file(const std::filesystem::path& path,
                          const RunConfig& config);

// "a/b/moby.dick.txt" -> "moby.dick.dat"; a name with no extension gets
// ".dat" appended.
std::string dat_name(const std::filesystem::path& input);

struct BatchResult {
  std::vector<CorpusRecord> records;  // sorted by filename
  std::optional<RegressionModel> model;
  std::vector<std::string> warnings;
};

// Analyzes every *.txt file directly inside config.input, in parallel, and
// writes statistics.dat, readability.dat, fig5.dat and (for two or more
// records) regression.dat to config.out_dir. Texts too short to analyze are
// skipped with a warning. Throws DomainError when no .txt file exists.
BatchResult batch(const RunConfig& config);

// Output file names inside a run directory.
inline constexpr std::string_view kStatisticsFile = "statistics.dat";
inline constexpr std::string_view kReadabilityFile = "readability.dat";
inline constexpr std::string_view kRegressionFile = "regression.dat";
inline constexpr std::string_view kPredictionFile = "fig5.dat";

// Line formats, all "%f" with tab separators and LF endings.
void write_statistics(std::ostream& out, const std::vector<CorpusRecord>& records);
void write_readability(std::ostream& out, const std::vector<CorpusRecord>& records);
void write_predictions(std::ostream& out, const std::vector<CorpusRecord>& records);
void write_regression(std::ostream& out, const RegressionModel& model);

// Parsers for the files above, used by the plot command. Throw IoError on
// malformed input.
struct StatisticsRow {
  std::string filename;
  double mean = 0.0;
  double stddev = 0.0;
};
std::vector<StatisticsRow> read_statistics(const std::filesystem::path& path);

struct ReadabilityRow {
  std::string filename;
  double ease = 0.0;
  double grade = 0.0;
};
std::vector<ReadabilityRow> read_readability(const std::filesystem::path& path);

struct PredictionRow {
  std::string filename;
  double measured = 0.0;
  double predicted = 0.0;
};
std::vector<PredictionRow> read_predictions(const std::filesystem::path& path);

RegressionModel read_regression(const std::filesystem::path& path);

struct ProfileFile {
  std::string name;
  std::vector<double> values;
};
ProfileFile read_profile(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace textfriction

#endif  // TEXTFRICTION_CORPUS_HPP_
