#pragma once

// Catalog JSON files compiled into the library (generated at configure time).

#include <span>
#include <string_view>

namespace multidesign::catalog::detail {

struct EmbeddedFile {
  std::string_view stem;  // file name without ".json"
  std::string_view text;
};

std::span<const EmbeddedFile> embedded_files();

}  // namespace multidesign::catalog::detail
