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

#ifndef TEXTFRICTION_FETCH_HPP_
#define TEXTFRICTION_FETCH_HPP_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace textfriction {

// One manifest row: title<TAB>ebook id<TAB>file name. '#' starts a comment
// line. An id of "?" marks an edition that has not been pinned.
struct ManifestEntry {
  std::string title;
  std::optional<long> ebook_id;
  std::string filename;
};

// Throws IoError on unreadable files or malformed rows.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

struct FetchOptions {
  std::string base_url = "https://www.gutenberg.org";
  // "{id}" is replaced by the ebook id.
  std::string path_template = "/cache/epub/{id}/pg{id}.txt";
  std::chrono::milliseconds delay{2000};  // between consecutive downloads
  int timeout_seconds = 60;
};

struct FetchReport {
  std::size_t fetched = 0;
  std::size_t present = 0;  // already on disk, not downloaded
  std::size_t failed = 0;
  std::vector<std::string> warnings;
};

// Downloads every manifest entry missing from `dest`. A failed entry is
// reported and the rest continue.
FetchReport fetch_manifest(const std::filesystem::path& manifest,
                           const std::filesystem::path& dest,
                           const FetchOptions& options = {});

}  // namespace textfriction

#endif  // TEXTFRICTION_FETCH_HPP_
