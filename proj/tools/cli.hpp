#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "vframe/labels.hpp"
#include "vframe/structure.hpp"

namespace vframe::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kCheckFailed = 1,  // validation or hypothesis failure
  kInputError = 2,   // parse, dimension or capacity error
};

struct LoadedStructure {
  StructureCodes codes;
  std::optional<FrameDecomposition> decomposition;
};

// Reads and validates a structure file. Evenness failures name the input
// line; an attached decomposition is checked against (C, D).
LoadedStructure parse_structure_file(const std::filesystem::path& path,
                                     ValidationOptions options = {});

// args excludes the program name. Output goes to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace vframe::cli
