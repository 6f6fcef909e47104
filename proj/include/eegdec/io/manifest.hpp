// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace eegdec::io {

enum class Split { train, dev, test1_heldout_story, test2_heldout_subject };

std::string split_name(Split s);
Split split_from_name(const std::string& name);

struct ManifestEntry {
  std::string path;  // relative to the manifest file's directory, or absolute
  std::string subject_id;
  Split split = Split::train;
};

/// JSON list of {path, subject_id, split}. Paths resolve against the
/// manifest's own directory so a dataset directory can be moved as a unit.
struct DatasetManifest {
  std::vector<ManifestEntry> entries;
  std::filesystem::path base_dir;

  std::filesystem::path resolve(const ManifestEntry& e) const;
  std::vector<ManifestEntry> with_split(Split s) const;
  std::vector<std::string> subjects(Split s) const;  // unique, sorted

  /// Invariants: entry paths unique; no test2 subject appears in a train entry.
  void validate() const;

  void save(const std::filesystem::path& path) const;
  static DatasetManifest load(const std::filesystem::path& path);
};

}  // namespace eegdec::io
