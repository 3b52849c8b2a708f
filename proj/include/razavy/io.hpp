#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace razavy::io {

// All numbers in emitted files go through this: %.9g, deterministic across
// runs and platforms for the value ranges we produce.
std::string fmt9(double v);

// Minimal CSV assembly: quoting is never needed for our cells (numbers and
// bare identifiers), so rows are plain joins.
std::string csv_row(const std::vector<std::string>& cells);

// Tiny deterministic JSON emitter (flat-ish documents, insertion order kept).
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array(std::string_view key = {});
  JsonWriter& end_array();
  JsonWriter& field(std::string_view key, double v);
  JsonWriter& field(std::string_view key, int v);
  JsonWriter& field(std::string_view key, bool v);
  JsonWriter& field(std::string_view key, std::string_view v);
  // keep string literals away from the bool overload
  JsonWriter& field(std::string_view key, const char* v) {
    return field(key, std::string_view(v));
  }
  JsonWriter& element(double v);
  JsonWriter& element(std::string_view v);
  JsonWriter& element(const char* v) { return element(std::string_view(v)); }
  std::string str() const { return out_; }

 private:
  void comma();
  std::string out_;
  std::vector<bool> first_;  // per nesting level
};

// key=value config files; '#' starts a comment, blank lines ignored.
// Unknown keys are preserved (callers decide what they accept).
std::map<std::string, std::string> parse_config(const std::string& path);

void write_file(const std::string& path, const std::string& content);

}  // namespace razavy::io
