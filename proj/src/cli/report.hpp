#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "kottwitz/sigma_class.hpp"

namespace kottwitz::cli {

using Json = nlohmann::ordered_json;

Json rationals_json(const RatVector& v);
Json integers_json(const IntVector& v);
// {newton: ["p/q", ...], kappa: [ints]}
Json class_json(const SigmaClass& b);
Json levi_json(const Levi& nodes);

// Left-aligned columns separated by two spaces.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void render(std::ostream& out, const std::string& indent = "  ") const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool v);

}  // namespace kottwitz::cli
