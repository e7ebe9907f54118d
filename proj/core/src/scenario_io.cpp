#include "jamopt/scenario_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

namespace jamopt {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw ScenarioParseError(message);
}

void reject_unknown_keys(const json& object, const std::string& path,
                         std::initializer_list<const char*> allowed) {
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      fail("unknown field '" + path + item.key() + "'");
    }
  }
}

const json* find(const json& object, const char* key) {
  const auto it = object.find(key);
  return it == object.end() ? nullptr : &*it;
}

double need_number(const json& object, const char* key,
                   const std::string& path) {
  const json* value = find(object, key);
  if (value == nullptr) {
    fail("missing field '" + path + key + "'");
  }
  if (!value->is_number()) {
    fail("field '" + path + key + "' must be a number");
  }
  return value->get<double>();
}

double optional_number(const json& object, const char* key,
                       const std::string& path, double fallback) {
  const json* value = find(object, key);
  if (value == nullptr) {
    return fallback;
  }
  if (!value->is_number()) {
    fail("field '" + path + key + "' must be a number");
  }
  return value->get<double>();
}

ChannelParams parse_channel(const json& object) {
  if (!object.is_object()) {
    fail("field 'channel' must be an object");
  }
  reject_unknown_keys(object, "channel.",
                      {"fc_hz", "c_mps", "exp", "c_los_db", "c_nlos_db",
                       "eta_nlos_mode"});

  ChannelParams params;
  params.carrier_frequency_hz = need_number(object, "fc_hz", "channel.");
  params.light_speed_mps =
      optional_number(object, "c_mps", "channel.", 299'792'458.0);
  params.path_loss_exponent = optional_number(object, "exp", "channel.", 2.0);
  params.excess_los_db = need_number(object, "c_los_db", "channel.");
  params.excess_nlos_db = need_number(object, "c_nlos_db", "channel.");

  const json* mode = find(object, "eta_nlos_mode");
  if (mode == nullptr) {
    fail("missing field 'channel.eta_nlos_mode'");
  }
  if (mode->is_string()) {
    if (mode->get<std::string>() != "equal_mu_los") {
      fail("field 'channel.eta_nlos_mode' must be \"equal_mu_los\" or a "
           "positive number");
    }
    params.eta_nlos = mu_factor(params, PathKind::los);
  } else if (mode->is_number()) {
    params.eta_nlos = mode->get<double>();
  } else {
    fail("field 'channel.eta_nlos_mode' must be \"equal_mu_los\" or a "
         "positive number");
  }
  return params;
}

std::vector<UavRelay> parse_uavs(const json& array) {
  if (!array.is_array()) {
    fail("field 'uavs' must be an array");
  }
  std::vector<UavRelay> uavs;
  uavs.reserve(array.size());
  for (std::size_t i = 0; i < array.size(); ++i) {
    const json& entry = array[i];
    const std::string path = "uavs[" + std::to_string(i) + "].";
    if (!entry.is_object()) {
      fail("field 'uavs[" + std::to_string(i) + "]' must be an object");
    }
    reject_unknown_keys(entry, path, {"x_m", "y_m", "h_m", "power_dbm"});
    UavRelay uav;
    uav.x_m = need_number(entry, "x_m", path);
    uav.y_m = need_number(entry, "y_m", path);
    uav.h_m = need_number(entry, "h_m", path);
    uav.power_dbm = need_number(entry, "power_dbm", path);
    uavs.push_back(uav);
  }
  return uavs;
}

std::string line_of_offset(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
    }
  }
  return std::to_string(line);
}

}  // namespace

Scenario parse_scenario_text(std::string_view text,
                             std::string_view source_name) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& error) {
    fail(std::string(source_name) + ":" +
         line_of_offset(text, error.byte > 0 ? error.byte - 1 : 0) +
         ": " + error.what());
  }
  if (!document.is_object()) {
    fail("scenario document must be a JSON object");
  }
  reject_unknown_keys(document, "",
                      {"distance_m", "tr1_power_dbm", "tr2_power_dbm",
                       "msi_power_dbm", "y_msi_m", "jam_bounds_m", "channel",
                       "uavs"});

  Scenario scenario;
  scenario.distance_m = need_number(document, "distance_m", "");
  scenario.tr1_power_dbm = need_number(document, "tr1_power_dbm", "");
  scenario.tr2_power_dbm = need_number(document, "tr2_power_dbm", "");
  scenario.msi_power_dbm = need_number(document, "msi_power_dbm", "");
  scenario.y_msi_m = optional_number(document, "y_msi_m", "", 0.0);

  const json* bounds = find(document, "jam_bounds_m");
  if (bounds == nullptr) {
    fail("missing field 'jam_bounds_m'");
  }
  if (!bounds->is_array() || bounds->size() != 2 ||
      !(*bounds)[0].is_number() || !(*bounds)[1].is_number()) {
    fail("field 'jam_bounds_m' must be an array of two numbers");
  }
  scenario.jam_lower_m = (*bounds)[0].get<double>();
  scenario.jam_upper_m = (*bounds)[1].get<double>();

  const json* channel = find(document, "channel");
  if (channel == nullptr) {
    fail("missing field 'channel'");
  }
  scenario.channel = parse_channel(*channel);

  const json* uavs = find(document, "uavs");
  if (uavs == nullptr) {
    fail("missing field 'uavs'");
  }
  scenario.uavs = parse_uavs(*uavs);

  return scenario;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream input(path);
  if (!input) {
    throw ScenarioParseError("cannot open scenario file '" + path.string() +
                             "'");
  }
  std::ostringstream buffer;
  buffer << input.rdbuf();
  return parse_scenario_text(buffer.str(), path.string());
}

}  // namespace jamopt
