#include "kottwitz/slope_bundle.hpp"

#include <algorithm>
#include <map>

#include "kottwitz/errors.hpp"

namespace kottwitz {

SlopeBundle::SlopeBundle(std::vector<Summand> summands) {
  std::map<Rational, long, std::greater<>> merged;
  for (const auto& s : summands) {
    if (s.copies < 0) throw InvalidArgument("negative number of copies");
    if (s.copies > 0) merged[s.slope] += s.copies;
  }
  for (const auto& [slope, copies] : merged) summands_.push_back({slope, copies});
}

SlopeBundle SlopeBundle::of_degree_rank(const Integer& s, long r) {
  if (r <= 0) throw InvalidArgument("rank must be positive");
  Rational q(s, r);
  q.canonicalize();
  Integer copies = Integer(r) / q.get_den();
  return SlopeBundle({{q, copies.get_si()}});
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

SlopeBundle SlopeBundle::parse(const std::string& text) {
  std::vector<Summand> out;
  std::string rest = text;
  if (trim(rest).empty()) throw InvalidArgument("empty bundle");
  size_t start = 0;
  while (start <= rest.size()) {
    size_t comma = rest.find(',', start);
    std::string token = trim(rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    start = comma == std::string::npos ? rest.size() + 1 : comma + 1;
    if (token.empty()) throw InvalidArgument("empty bundle token in '" + text + "'");
    std::string slope_text = token;
    long copies = 1;
    static const std::string kTimes = "×";
    size_t pos = token.find(kTimes);
    size_t skip = kTimes.size();
    if (pos == std::string::npos) {
      pos = token.find_first_of("x*");
      skip = 1;
    }
    if (pos != std::string::npos) {
      slope_text = token.substr(0, pos);
      Integer c = parse_integer(token.substr(pos + skip));
      if (c <= 0 || !c.fits_slong_p()) throw InvalidArgument("bad copy count in '" + token + "'");
      copies = c.get_si();
    }
    // "s/r" names O([s/r]), which is gcd(s,r) copies of the stable bundle
    Integer s, r;
    auto slash = slope_text.find('/');
    if (slash == std::string::npos) {
      s = parse_integer(slope_text);
      r = 1;
    } else {
      s = parse_integer(slope_text.substr(0, slash));
      r = parse_integer(slope_text.substr(slash + 1));
    }
    if (r <= 0 || !r.fits_slong_p()) throw InvalidArgument("rank must be a positive integer in '" + token + "'");
    SlopeBundle piece = of_degree_rank(s, r.get_si());
    out.push_back({piece.summands_.front().slope, piece.summands_.front().copies * copies});
  }
  return SlopeBundle(std::move(out));
}

long SlopeBundle::rank() const {
  long r = 0;
  for (const auto& s : summands_) r += s.copies * s.slope.get_den().get_si();
  return r;
}

Integer SlopeBundle::degree() const {
  Integer d = 0;
  for (const auto& s : summands_) d += s.slope.get_num() * s.copies;
  return d;
}

Rational SlopeBundle::slope() const {
  if (empty()) throw InvalidArgument("slope of the zero bundle");
  return Rational(degree(), rank());
}

Coweight SlopeBundle::nu() const {
  Coweight v;
  for (const auto& s : summands_)
    for (long i = 0; i < s.copies * s.slope.get_den().get_si(); ++i) v.push_back(s.slope);
  return v;
}

std::vector<std::pair<long, Integer>> SlopeBundle::isotypic_parts() const {
  std::vector<std::pair<long, Integer>> out;
  for (const auto& s : summands_) {
    long r = s.copies * s.slope.get_den().get_si();
    out.emplace_back(r, Integer(s.slope.get_num() * s.copies));
  }
  return out;
}

SlopeBundle SlopeBundle::operator+(const SlopeBundle& other) const {
  auto all = summands_;
  all.insert(all.end(), other.summands_.begin(), other.summands_.end());
  return SlopeBundle(std::move(all));
}

std::string SlopeBundle::to_string() const {
  std::string out;
  for (const auto& s : summands_) {
    if (!out.empty()) out += ",";
    out += format_rational(s.slope) + "×" + std::to_string(s.copies);
  }
  return out;
}

std::string SlopeBundle::display() const {
  if (empty()) return "0";
  std::string out;
  for (const auto& s : summands_) {
    if (!out.empty()) out += "+";
    std::string q = s.slope.get_den() == 1 ? s.slope.get_num().get_str() : s.slope.get_str();
    out += "O(" + q + ")";
    if (s.copies > 1) out += "^" + std::to_string(s.copies);
  }
  return out;
}

}  // namespace kottwitz
