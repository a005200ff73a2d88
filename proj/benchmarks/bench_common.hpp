#pragma once

#include <filesystem>

#include "qec/registry.hpp"

namespace bench {

inline const qec::Registry& reg() {
  static qec::Registry r = qec::Registry::load_dir(
      std::filesystem::path(QEC_SOURCE_DATA_DIR) / "registry");
  return r;
}

}  // namespace bench
