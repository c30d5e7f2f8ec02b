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

#ifndef TEXTFRICTION_PLOTS_HPP_
#define TEXTFRICTION_PLOTS_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "textfriction/analytics.hpp"
#include "textfriction/corpus.hpp"

namespace textfriction {

struct PlotSet {
  std::vector<std::filesystem::path> written;
};

// Writes TSV plot data plus an SVG rendering of each figure to `dir`:
//   profile_<stem>.{tsv,svg}  friction along one text (window index, value)
//   scatter.{tsv,svg}         mean friction vs. ease, fitted and reference lines
//   histogram.{tsv,svg}       stddev histogram
//   predicted.{tsv,svg}       measured vs. predicted ease per text
// `model` defaults to kReferenceModel when absent.
PlotSet emit_plots(const std::vector<CorpusRecord>& records,
                   const std::vector<ProfileFile>& profiles,
                   const std::optional<RegressionModel>& model,
                   double bin_width, const std::filesystem::path& dir);

// Rebuilds records and profiles from a batch output directory and emits
// plots into run_dir / "plots".
PlotSet plot_run(const std::filesystem::path& run_dir,
                 double bin_width = kDefaultBinWidth);

}  // namespace textfriction

#endif  // TEXTFRICTION_PLOTS_HPP_
