#include "telebath/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace telebath {

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc())
    throw std::runtime_error("format_double: conversion failed");
  return std::string(buffer, ptr);
}

std::vector<double> RunConfig::time_grid() const {
  if (t_count < 2)
    throw std::invalid_argument("time grid needs at least two points");
  if (!(t_stop > t_start))
    throw std::invalid_argument("time grid must be strictly increasing");
  std::vector<double> grid(static_cast<std::size_t>(t_count));
  for (int i = 0; i < t_count; ++i)
    grid[static_cast<std::size_t>(i)] =
        t_start + (t_stop - t_start) * i / (t_count - 1);
  return grid;
}

namespace {

nlohmann::json config_to_json(const RunConfig& config) {
  nlohmann::json doc;
  doc["n"] = config.n;
  doc["ka"] = config.ka;
  doc["kA"] = config.kA;
  doc["bath"] = std::string(to_string(config.bath));
  doc["shared"] = std::string(to_string(config.shared));
  doc["r"] = config.r;
  doc["mode"] = std::string(to_string(config.mode));
  doc["t_start"] = config.t_start;
  doc["t_stop"] = config.t_stop;
  doc["t_count"] = config.t_count;
  if (config.input) {
    doc["input"] = {(*config.input)(0), (*config.input)(1),
                    (*config.input)(2)};
  } else {
    doc["input"] = "average";
  }
  doc["out"] = config.out;
  doc["seed"] = config.seed;
  doc["sweep_deltas"] = config.sweep_deltas;
  doc["sweep_rs"] = config.sweep_rs;
  auto labels = nlohmann::json::array();
  for (const BellLabel label : config.sweep_labels)
    labels.push_back(std::string(to_string(label)));
  doc["sweep_labels"] = labels;
  auto modes = nlohmann::json::array();
  for (const AveragingMode mode : config.sweep_modes)
    modes.push_back(std::string(to_string(mode)));
  doc["sweep_modes"] = modes;
  return doc;
}

RunConfig config_from_json(const nlohmann::json& doc) {
  RunConfig config;
  for (const auto& [key, value] : doc.items()) {
    if (key == "n") {
      config.n = value.get<int>();
    } else if (key == "ka") {
      config.ka = value.get<double>();
    } else if (key == "kA") {
      config.kA = value.get<double>();
    } else if (key == "bath") {
      config.bath = bath_model_from_string(value.get<std::string>());
    } else if (key == "shared") {
      config.shared = bell_label_from_string(value.get<std::string>());
    } else if (key == "r") {
      config.r = value.get<double>();
    } else if (key == "mode") {
      config.mode = averaging_mode_from_string(value.get<std::string>());
    } else if (key == "t_start") {
      config.t_start = value.get<double>();
    } else if (key == "t_stop") {
      config.t_stop = value.get<double>();
    } else if (key == "t_count") {
      config.t_count = value.get<int>();
    } else if (key == "input") {
      if (value.is_string()) {
        if (value.get<std::string>() != "average")
          throw std::invalid_argument(
              "config: input must be \"average\" or a 3-vector");
        config.input.reset();
      } else {
        if (!value.is_array() || value.size() != 3)
          throw std::invalid_argument(
              "config: input must be \"average\" or a 3-vector");
        config.input = BlochVector(value[0].get<double>(),
                                   value[1].get<double>(),
                                   value[2].get<double>());
      }
    } else if (key == "out") {
      config.out = value.get<std::string>();
    } else if (key == "seed") {
      config.seed = value.get<std::uint64_t>();
    } else if (key == "sweep_deltas") {
      config.sweep_deltas = value.get<std::vector<double>>();
    } else if (key == "sweep_rs") {
      config.sweep_rs = value.get<std::vector<double>>();
    } else if (key == "sweep_labels") {
      config.sweep_labels.clear();
      for (const auto& entry : value)
        config.sweep_labels.push_back(
            bell_label_from_string(entry.get<std::string>()));
    } else if (key == "sweep_modes") {
      config.sweep_modes.clear();
      for (const auto& entry : value)
        config.sweep_modes.push_back(
            averaging_mode_from_string(entry.get<std::string>()));
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  return config;
}

}  // namespace

std::string RunConfig::to_json() const { return config_to_json(*this).dump(2); }

RunConfig RunConfig::from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& error) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") +
                                error.what());
  }
  try {
    return config_from_json(doc);
  } catch (const nlohmann::json::exception& error) {
    throw std::invalid_argument(std::string("config: bad field type: ") +
                                error.what());
  }
}

RunConfig RunConfig::from_json_file(const std::string& path) {
  std::ifstream stream(path);
  if (!stream)
    throw std::runtime_error("cannot read config file: " + path);
  std::string text((std::istreambuf_iterator<char>(stream)),
                   std::istreambuf_iterator<char>());
  return from_json_text(text);
}

std::string CsvTable::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::error_code ec;
  if (target.has_parent_path())
    std::filesystem::create_directories(target.parent_path(), ec);
  std::ofstream stream(target, std::ios::binary);
  if (!stream)
    throw std::runtime_error("cannot open output file: " + path);
  stream << text;
  if (!stream)
    throw std::runtime_error("write failed: " + path);
}

std::string sidecar_path(const std::string& csv_path) {
  std::filesystem::path path(csv_path);
  path.replace_extension(".json");
  if (path == std::filesystem::path(csv_path)) path += ".meta.json";
  return path.string();
}

}  // namespace telebath
