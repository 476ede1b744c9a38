#include "io/sensors_io.hpp"

#include <fstream>

#include <json.hpp>

#include "util/error.hpp"

namespace npr {

SensorSet read_sensors(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::Io, "cannot open '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        raise(ErrorCode::Parse, "sensors json: " + std::string(e.what()));
    }
    if (!doc.contains("sensors") || !doc["sensors"].is_array())
        raise(ErrorCode::Parse, "sensors json: missing 'sensors' array");

    const auto& arr = doc["sensors"];
    SensorSet sensors;
    sensors.positions.resize(arr.size());
    std::vector<bool> seen(arr.size(), false);
    for (const auto& entry : arr) {
        if (!entry.contains("id") || !entry.contains("position"))
            raise(ErrorCode::Parse, "sensors json: entry lacks id/position");
        const auto id = entry["id"].get<int64_t>();
        if (id < 0 || static_cast<size_t>(id) >= arr.size() || seen[static_cast<size_t>(id)])
            raise(ErrorCode::Parse, "sensors json: ids must be a permutation of 0..n-1");
        const auto& pos = entry["position"];
        if (!pos.is_array() || pos.size() != 3)
            raise(ErrorCode::Parse, "sensors json: position must be [x,y,z]");
        sensors.positions[static_cast<size_t>(id)] = {pos[0].get<float>(), pos[1].get<float>(),
                                                      pos[2].get<float>()};
        seen[static_cast<size_t>(id)] = true;
    }
    return sensors;
}

void write_sensors(const SensorSet& sensors, const std::string& path) {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t i = 0; i < sensors.positions.size(); ++i) {
        const Vec3& p = sensors.positions[i];
        arr.push_back({{"id", i}, {"position", {p.x, p.y, p.z}}});
    }
    nlohmann::json doc{{"sensors", arr}};
    std::ofstream out(path);
    if (!out) raise(ErrorCode::Io, "cannot write '" + path + "'");
    out << doc.dump(2) << '\n';
    if (!out) raise(ErrorCode::Io, "write failed for '" + path + "'");
}

}  // namespace npr
