// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#include "kronstab/config.hpp"

#include <cstdlib>
#include <iostream>

namespace kronstab {

const Config& default_config() {
  static const Config cfg;
  return cfg;
}

std::filesystem::path resolve_cache_dir(const Config& cfg) {
  if (cfg.cache_dir && !cfg.cache_dir->empty()) return *cfg.cache_dir;
  if (const char* env = std::getenv("KRONSTAB_CACHE_DIR"); env && *env) {
    return env;
  }
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "kron-stab";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "kron-stab";
  }
  return std::filesystem::temp_directory_path() / "kron-stab";
}

void emit_warning(const Config& cfg, const std::string& message) {
  if (cfg.warn) {
    cfg.warn(message);
  } else {
    std::cerr << "warning: " << message << '\n';
  }
}

}  // namespace kronstab
