#include "gdss/io/matrix_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "gdss/core/error.hpp"

namespace gdss::io {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == ',' || c == ';' || c == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

mcda::PerformanceMatrix parse_matrix_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::pair<std::string, mcda::Direction>> criteria;
  std::vector<std::string> labels;
  std::vector<std::vector<double>> rows;
  bool haveHeader = false;
  std::size_t lineNo = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineNo;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto toks = split(line);
    if (toks.empty()) continue;
    const auto where = "line " + std::to_string(lineNo) + ": ";
    if (!haveHeader) {
      for (std::size_t i = 0; i < toks.size(); ++i) {
        const auto colon = toks[i].rfind(':');
        if (colon == std::string::npos) {
          if (i == 0) continue;  // corner cell
          throw Error(ErrorCode::InvalidMatrix, where + "criterion '" + toks[i] + "' needs a :max or :min suffix");
        }
        try {
          criteria.emplace_back(toks[i].substr(0, colon), mcda::parse_direction(toks[i].substr(colon + 1)));
        } catch (const Error& e) {
          throw Error(ErrorCode::InvalidMatrix, where + e.what());
        }
      }
      haveHeader = true;
      continue;
    }
    if (toks.size() != criteria.size() + 1) {
      throw Error(ErrorCode::InvalidMatrix, where + "expected a label and " + std::to_string(criteria.size()) +
                                                " values, got " + std::to_string(toks.size()) + " tokens");
    }
    labels.push_back(toks[0]);
    std::vector<double> row;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(toks[i].data(), toks[i].data() + toks[i].size(), v);
      if (ec != std::errc() || ptr != toks[i].data() + toks[i].size()) {
        throw Error(ErrorCode::InvalidMatrix, where + "'" + toks[i] + "' is not a number");
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (!haveHeader) throw Error(ErrorCode::InvalidMatrix, "matrix file has no header row");
  return mcda::PerformanceMatrix::from_labels(std::move(labels), std::move(criteria), std::move(rows));
}

std::string format_matrix_text(const mcda::PerformanceMatrix& matrix) {
  std::string out = "action";
  for (const auto& c : matrix.criteria()) {
    out += ' ';
    out += c.name;
    out += ':';
    out += mcda::direction_name(c.direction);
  }
  out += '\n';
  for (const auto& a : matrix.actions()) {
    out += a.label;
    for (double v : matrix.row(a.index)) {
      char buf[32];
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
      out += ' ';
      out.append(buf, ptr);
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << contents;
  if (!out.flush()) throw Error(ErrorCode::Io, "short write to " + path.string());
}

}  // namespace gdss::io
