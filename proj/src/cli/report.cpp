#include "report.hpp"

#include <algorithm>
#include <ostream>

namespace kottwitz::cli {

Json rationals_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(format_rational(q));
  return out;
}

Json integers_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p())
      out.push_back(x.get_si());
    else
      out.push_back(x.get_str());
  }
  return out;
}

Json class_json(const SigmaClass& b) {
  Json out = Json::object();
  out["newton"] = rationals_json(b.newton);
  out["kappa"] = integers_json(b.kappa.coords());
  return out;
}

Json levi_json(const Levi& nodes) {
  Json out = Json::array();
  for (int n : nodes) out.push_back(n);
  return out;
}

void Table::render(std::ostream& out, const std::string& indent) const {
  std::vector<size_t> width(header_.size());
  for (size_t c = 0; c < header_.size(); ++c) width[c] = header_[c].size();
  for (const auto& row : rows_)
    for (size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text = indent;
    for (size_t c = 0; c < cells.size(); ++c) {
      text += cells[c];
      if (c + 1 < cells.size()) text += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << text << "\n";
  };
  line(header_);
  for (const auto& row : rows_) line(row);
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

}  // namespace kottwitz::cli
