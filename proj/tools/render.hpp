// Table document model and renderers for the CLI: markdown (default), csv,
// json. Rendering is deterministic; wall time is the only field allowed to
// differ between identical invocations and is emitted on its own line/field.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zetagap::cli {

struct Cell {
  enum class Kind { text, real } kind = Kind::text;
  std::string text;
  double real = 0.0;
};

Cell cell(std::string s);
Cell cell(const char* s);
Cell cell(double v, int significant = 8);

struct TableDoc {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;  // ordered
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> provenance;  // run-manifest notes
  std::vector<std::string> outputs;     // artifact paths written
  std::optional<double> wall_seconds;   // filled just before rendering
};

enum class Format { markdown, csv, json };

std::optional<Format> format_from_string(const std::string& s);

std::string render(const TableDoc& doc, Format format);

}  // namespace zetagap::cli
