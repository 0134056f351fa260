#include "render.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace zetagap::cli {

Cell cell(std::string s) {
  Cell c;
  c.kind = Cell::Kind::text;
  c.text = std::move(s);
  return c;
}

Cell cell(const char* s) { return cell(std::string(s)); }

Cell cell(double v, int significant) {
  Cell c;
  c.kind = Cell::Kind::real;
  c.real = v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, v);
  c.text = buf;
  return c;
}

std::optional<Format> format_from_string(const std::string& s) {
  if (s == "markdown") return Format::markdown;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  return std::nullopt;
}

namespace {

std::string render_markdown(const TableDoc& doc) {
  std::ostringstream os;
  if (!doc.title.empty()) os << "## " << doc.title << "\n\n";
  std::vector<std::size_t> widths(doc.columns.size());
  for (std::size_t i = 0; i < doc.columns.size(); ++i) widths[i] = doc.columns[i].size();
  for (const auto& row : doc.rows)
    for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i)
      widths[i] = std::max(widths[i], row[i].text.size());

  auto emit_row = [&](const std::vector<std::string>& cells) {
    os << "|";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << " " << cells[i];
      for (std::size_t pad = cells[i].size(); pad < widths[i]; ++pad) os << ' ';
      os << " |";
    }
    os << "\n";
  };
  emit_row(doc.columns);
  {
    std::vector<std::string> dashes;
    for (auto w : widths) dashes.push_back(std::string(w, '-'));
    emit_row(dashes);
  }
  for (const auto& row : doc.rows) {
    std::vector<std::string> cells;
    for (const auto& c : row) cells.push_back(c.text);
    cells.resize(doc.columns.size());
    emit_row(cells);
  }
  os << "\n";
  for (const auto& [k, v] : doc.parameters) os << "- " << k << ": " << v << "\n";
  for (const auto& p : doc.provenance) os << "- provenance: " << p << "\n";
  for (const auto& o : doc.outputs) os << "- output: " << o << "\n";
  if (doc.wall_seconds) os << "- wall_time: " << *doc.wall_seconds << " s\n";
  return os.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

std::string render_csv(const TableDoc& doc) {
  std::ostringstream os;
  for (std::size_t i = 0; i < doc.columns.size(); ++i)
    os << (i ? "," : "") << csv_escape(doc.columns[i]);
  os << "\n";
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < doc.columns.size(); ++i)
      os << (i ? "," : "") << csv_escape(i < row.size() ? row[i].text : "");
    os << "\n";
  }
  for (const auto& [k, v] : doc.parameters) os << "# " << k << ": " << v << "\n";
  for (const auto& p : doc.provenance) os << "# provenance: " << p << "\n";
  for (const auto& o : doc.outputs) os << "# output: " << o << "\n";
  if (doc.wall_seconds) os << "# wall_time: " << *doc.wall_seconds << " s\n";
  return os.str();
}

std::string render_json(const TableDoc& doc) {
  nlohmann::ordered_json j;
  j["command"] = doc.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : doc.parameters) params[k] = v;
  j["parameters"] = params;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : doc.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < doc.columns.size() && i < row.size(); ++i) {
      if (row[i].kind == Cell::Kind::real) obj[doc.columns[i]] = row[i].real;
      else obj[doc.columns[i]] = row[i].text;
    }
    rows.push_back(obj);
  }
  j["rows"] = rows;
  j["provenance"] = doc.provenance;
  if (!doc.outputs.empty()) j["outputs"] = doc.outputs;
  if (doc.wall_seconds) j["wall_time_seconds"] = *doc.wall_seconds;
  return j.dump(2) + "\n";
}

}  // namespace

std::string render(const TableDoc& doc, Format format) {
  switch (format) {
    case Format::markdown: return render_markdown(doc);
    case Format::csv: return render_csv(doc);
    case Format::json: return render_json(doc);
  }
  return {};
}

}  // namespace zetagap::cli
