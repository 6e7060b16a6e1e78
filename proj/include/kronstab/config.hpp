// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace kronstab {

/// Runtime knobs shared by every module. Cheap to copy.
struct Config {
  int rank_cap = 60;
  int plethysm_cap = 24;
  /// Worker count for the parallel kernels; 0 keeps the OpenMP default.
  int threads = 0;
  bool use_cache = true;
  /// Empty means resolve from KRONSTAB_CACHE_DIR or the platform cache dir.
  std::optional<std::filesystem::path> cache_dir;
  /// Receives non-fatal diagnostics (corrupt cache files and the like).
  std::function<void(const std::string&)> warn;
  /// Called by long-running kernels with (done, total) work units.
  std::function<void(long long, long long)> progress;
};

const Config& default_config();

std::filesystem::path resolve_cache_dir(const Config& cfg);

void emit_warning(const Config& cfg, const std::string& message);

}  // namespace kronstab
