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

#include "textfriction/fetch.hpp"

#include <httplib.h>

#include <fstream>
#include <sstream>
#include <thread>

#include "textfriction/corpus.hpp"
#include "textfriction/error.hpp"

namespace textfriction {
namespace fs = std::filesystem;
namespace {

std::string expand(std::string templ, long id) {
  const std::string token = "{id}";
  const std::string value = std::to_string(id);
  for (std::size_t pos = templ.find(token); pos != std::string::npos;
       pos = templ.find(token, pos + value.size())) {
    templ.replace(pos, token.size(), value);
  }
  return templ;
}

bool plain_filename(const std::string& name) {
  return !name.empty() && name.find('/') == std::string::npos &&
         name.find('\\') == std::string::npos && name != "." && name != "..";
}

}  // namespace

std::vector<ManifestEntry> read_manifest(const fs::path& path) {
  std::istringstream in(read_file(path));
  std::vector<ManifestEntry> entries;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::istringstream row(line);
    for (std::string f; std::getline(row, f, '\t');) fields.push_back(f);
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (fields.size() != 3) throw IoError(where + ": expected title, id, filename");
    ManifestEntry entry{fields[0], std::nullopt, fields[2]};
    if (fields[1] != "?") {
      std::size_t used = 0;
      long id = 0;
      try {
        id = std::stol(fields[1], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != fields[1].size() || id <= 0) {
        throw IoError(where + ": bad ebook id '" + fields[1] + "'");
      }
      entry.ebook_id = id;
    }
    if (!plain_filename(entry.filename)) {
      throw IoError(where + ": file name must not contain a path");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

FetchReport fetch_manifest(const fs::path& manifest, const fs::path& dest,
                           const FetchOptions& options) {
  const auto entries = read_manifest(manifest);
  FetchReport report;
  if (entries.empty()) return report;
  fs::create_directories(dest);

  httplib::Client client(options.base_url);
  client.set_follow_location(true);
  client.set_connection_timeout(options.timeout_seconds);
  client.set_read_timeout(options.timeout_seconds);

  bool first_request = true;
  for (const auto& entry : entries) {
    const fs::path target = dest / entry.filename;
    std::error_code ec;
    if (fs::exists(target, ec) && fs::file_size(target, ec) > 0) {
      ++report.present;
      continue;
    }
    if (!entry.ebook_id) {
      ++report.failed;
      report.warnings.push_back(entry.filename + ": no ebook id pinned for '" +
                                entry.title + "'");
      continue;
    }
    if (!first_request) std::this_thread::sleep_for(options.delay);
    first_request = false;

    const std::string url_path = expand(options.path_template, *entry.ebook_id);
    const auto response = client.Get(url_path);
    if (!response) {
      ++report.failed;
      report.warnings.push_back(entry.filename + ": " + url_path + ": " +
                                httplib::to_string(response.error()));
      continue;
    }
    if (response->status != 200 || response->body.empty()) {
      ++report.failed;
      report.warnings.push_back(entry.filename + ": " + url_path + ": HTTP " +
                                std::to_string(response->status) +
                                (response->body.empty() ? " (empty body)" : ""));
      continue;
    }
    const fs::path partial = fs::path(target).concat(".part");
    {
      std::ofstream out(partial, std::ios::binary | std::ios::trunc);
      out << response->body;
      out.flush();
      if (!out) throw IoError("write failed: " + partial.string());
    }
    fs::rename(partial, target);
    ++report.fetched;
  }
  return report;
}

}  // namespace textfriction
