#include <fstream>
#include <map>

#include "kottwitz/arith.hpp"
#include "kottwitz/cli.hpp"
#include "kottwitz/errors.hpp"

namespace kottwitz::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::map<std::string, std::string> read_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidArgument(path + ":" + std::to_string(lineno) + ": expected key = value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw InvalidArgument("config key " + key + " expects a boolean, got '" + v + "'");
}

long parse_long(const std::string& key, const std::string& v) {
  Integer x = parse_integer(v);
  if (!x.fits_slong_p()) throw InvalidArgument("config key " + key + " is out of range");
  return x.get_si();
}

}  // namespace

void apply_config_file(RunConfig& cfg, const std::string& path) {
  for (const auto& [key, value] : read_key_values(path)) {
    if (key == "group") cfg.group = value;
    else if (key == "type") cfg.type = value;
    else if (key == "mu") cfg.mu = value;
    else if (key == "nu") cfg.nu = value;
    else if (key == "eps") cfg.eps = value;
    else if (key == "delta") cfg.delta = value;
    else if (key == "kappa") cfg.kappa = value;
    else if (key == "levi") cfg.levi = value;
    else if (key == "set") cfg.set = value;
    else if (key == "denom_bound") cfg.denom_bound = parse_long(key, value);
    else if (key == "bound") cfg.scan_bound = parse_long(key, value);
    else if (key == "json") cfg.json = parse_bool(key, value);
    else if (key == "serial") cfg.serial = parse_bool(key, value);
    else if (key == "check_witnesses") cfg.check_witnesses = parse_bool(key, value);
    else throw InvalidArgument(path + ": unknown key '" + key + "'");
  }
}

std::string read_group_file(const std::string& path, std::optional<std::string>& levi) {
  auto kv = read_key_values(path);
  for (const auto& [key, value] : kv)
    if (key != "type" && key != "rank" && key != "galois_order" && key != "levi")
      throw InvalidArgument(path + ": unknown key '" + key + "'");
  if (!kv.count("type") || !kv.count("rank")) throw InvalidArgument(path + ": needs type and rank");
  std::string desc = kv["type"] + ":" + kv["rank"];
  if (kv.count("galois_order") && kv["galois_order"] != "1") desc += ":galois=" + kv["galois_order"];
  if (kv.count("levi")) levi = kv["levi"];
  return desc;
}

}  // namespace kottwitz::cli
