#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "archslice/slicer.hpp"

namespace archslice::cli {

enum class Command { Parse, Graph, Slice };
enum class Format { Text, Json, Dot };

struct CliConfig {
  Command command = Command::Parse;
  std::filesystem::path input_path;
  std::optional<std::filesystem::path> output_path;  // stdout when empty
  Format format = Format::Text;
  SliceDirection direction = SliceDirection::Backward;
  std::string instance;
  std::vector<std::string> elements;  // empty: every element of the instance
};

/// File access seam so tests can run the front end without touching disk.
class FileSystem {
 public:
  virtual ~FileSystem() = default;
  virtual std::optional<std::string> read(const std::filesystem::path& path) = 0;
  virtual bool write(const std::filesystem::path& path, std::string_view data) = 0;
};

class RealFileSystem : public FileSystem {
 public:
  std::optional<std::string> read(const std::filesystem::path& path) override;
  bool write(const std::filesystem::path& path, std::string_view data) override;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;  // parse, validation, criterion
inline constexpr int kExitUsage = 2;       // bad flags or I/O failure

/// Executes one command. Diagnostics go to `err` as `file:line:col: ...`.
int run(const CliConfig& config, FileSystem& fs, std::ostream& out,
        std::ostream& err);

/// Parses `args` (without the program name) and runs the command.
int main(const std::vector<std::string>& args, FileSystem& fs,
         std::ostream& out, std::ostream& err);

}  // namespace archslice::cli
