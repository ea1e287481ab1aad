// Copyright 2026 The Footprint Authors
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

#include "core/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "core/error.hpp"

namespace footprint {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string csv_escape(std::string_view field) {
  bool needs_quotes = field.find_first_of(",\"\n\r") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string profile_csv(const InterestProfile& profile,
                        const CategoryTaxonomy& taxonomy) {
  std::string out = "category,count,mass\n";
  for (size_t l = 0; l < taxonomy.category_count(); ++l) {
    int64_t count = l < profile.counts.size() ? profile.counts[l] : 0;
    out += csv_escape(taxonomy.category_name(l));
    out += ',';
    out += std::to_string(count);
    out += ',';
    if (profile.total > 0) {
      out += format_double(static_cast<double>(count) /
                           static_cast<double>(profile.total));
    }
    out += '\n';
  }
  return out;
}

std::string series_csv(const ConvergenceSeries& series) {
  std::string out = "user_id,visit_index,l1,l2,tv\n";
  for (const ConvergencePoint& point : series.points) {
    out += csv_escape(series.user_id);
    out += ',';
    out += std::to_string(point.visit_index);
    for (const auto& metric : {point.l1, point.l2, point.tv}) {
      out += ',';
      if (metric) out += format_double(*metric);
    }
    out += '\n';
  }
  return out;
}

std::string ranking_csv(const std::vector<RankRow>& rows) {
  std::string out = "tracker_domain,avg_knn,degree\n";
  for (const RankRow& row : rows) {
    out += csv_escape(row.tracker_domain);
    out += ',';
    out += format_double(row.avg_knn);
    out += ',';
    out += std::to_string(row.degree);
    out += '\n';
  }
  return out;
}

std::string edges_tsv(const TrackerGraph& graph) {
  std::string out;
  for (const auto& [page, trackers] : graph.pages()) {
    for (const std::string& tracker : trackers) {
      out += page;
      out += '\t';
      out += tracker;
      out += '\n';
    }
  }
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error::internal("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0x0F]);
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path(), ec);
    if (ec) {
      throw Error::input("cannot create directory " +
                         path.parent_path().string() + ": " + ec.message());
    }
  }
  fs::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error::input("cannot open " + temp.string());
    out.write(contents.data(),
              static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error::input("short write to " + temp.string());
  }
  fs::rename(temp, path, ec);
  if (ec) {
    throw Error::input("cannot rename " + temp.string() + " to " +
                       path.string() + ": " + ec.message());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error::input("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

}  // namespace footprint
