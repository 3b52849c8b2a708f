#include "razavy/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace razavy::io {

std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) row += ',';
    row += cells[i];
  }
  row += '\n';
  return row;
}

void JsonWriter::comma() {
  if (first_.empty()) return;
  if (!first_.back()) out_ += ',';
  first_.back() = false;
}

JsonWriter& JsonWriter::begin_object() {
  comma();
  out_ += '{';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  first_.pop_back();
  out_ += '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array(std::string_view key) {
  comma();
  if (!key.empty()) {
    out_ += '"';
    out_ += key;
    out_ += "\":";
  }
  out_ += '[';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  first_.pop_back();
  out_ += ']';
  return *this;
}

JsonWriter& JsonWriter::field(std::string_view key, double v) {
  comma();
  out_ += '"';
  out_ += key;
  out_ += "\":";
  out_ += fmt9(v);
  return *this;
}

JsonWriter& JsonWriter::field(std::string_view key, int v) {
  comma();
  out_ += '"';
  out_ += key;
  out_ += "\":";
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::field(std::string_view key, bool v) {
  comma();
  out_ += '"';
  out_ += key;
  out_ += "\":";
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::field(std::string_view key, std::string_view v) {
  comma();
  out_ += '"';
  out_ += key;
  out_ += "\":\"";
  out_ += v;
  out_ += '"';
  return *this;
}

JsonWriter& JsonWriter::element(double v) {
  comma();
  out_ += fmt9(v);
  return *this;
}

JsonWriter& JsonWriter::element(std::string_view v) {
  comma();
  out_ += '"';
  out_ += v;
  out_ += '"';
  return *this;
}

std::map<std::string, std::string> parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const char* ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": empty key or value");
    kv[key] = val;
  }
  return kv;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

}  // namespace razavy::io
