// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/io/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace eegdec::io {

std::string split_name(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::dev: return "dev";
    case Split::test1_heldout_story: return "test1_heldout_story";
    case Split::test2_heldout_subject: return "test2_heldout_subject";
  }
  throw std::logic_error("unreachable split");
}

Split split_from_name(const std::string& name) {
  if (name == "train") return Split::train;
  if (name == "dev") return Split::dev;
  if (name == "test1_heldout_story") return Split::test1_heldout_story;
  if (name == "test2_heldout_subject") return Split::test2_heldout_subject;
  throw std::invalid_argument("unknown split tag: " + name);
}

std::filesystem::path DatasetManifest::resolve(const ManifestEntry& e) const {
  std::filesystem::path p(e.path);
  return p.is_absolute() ? p : base_dir / p;
}

std::vector<ManifestEntry> DatasetManifest::with_split(Split s) const {
  std::vector<ManifestEntry> out;
  for (const auto& e : entries) {
    if (e.split == s) out.push_back(e);
  }
  return out;
}

std::vector<std::string> DatasetManifest::subjects(Split s) const {
  std::set<std::string> uniq;
  for (const auto& e : entries) {
    if (e.split == s) uniq.insert(e.subject_id);
  }
  return {uniq.begin(), uniq.end()};
}

void DatasetManifest::validate() const {
  std::set<std::string> paths;
  std::set<std::string> train_subjects;
  for (const auto& e : entries) {
    if (!paths.insert(e.path).second) {
      throw std::invalid_argument("manifest entry path appears twice: " + e.path);
    }
    if (e.split == Split::train) train_subjects.insert(e.subject_id);
  }
  for (const auto& e : entries) {
    if (e.split == Split::test2_heldout_subject && train_subjects.count(e.subject_id)) {
      throw std::invalid_argument("held-out subject " + e.subject_id +
                                  " also appears in a train entry");
    }
  }
}

void DatasetManifest::save(const std::filesystem::path& path) const {
  validate();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries) {
    arr.push_back({{"path", e.path}, {"subject_id", e.subject_id}, {"split", split_name(e.split)}});
  }
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  os << arr.dump(2) << "\n";
}

DatasetManifest DatasetManifest::load(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open manifest: " + path.string());
  nlohmann::json arr;
  try {
    is >> arr;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed manifest: ") + e.what());
  }
  if (!arr.is_array()) throw std::runtime_error("malformed manifest: expected a JSON list");
  DatasetManifest m;
  m.base_dir = path.parent_path();
  for (const auto& item : arr) {
    ManifestEntry e;
    e.path = item.at("path").get<std::string>();
    e.subject_id = item.at("subject_id").get<std::string>();
    e.split = split_from_name(item.at("split").get<std::string>());
    m.entries.push_back(std::move(e));
  }
  m.validate();
  return m;
}

}  // namespace eegdec::io
