#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "rigisoc/json_io.hpp"

namespace rigisoc {

// A self-describing workspace file: named levels with their projection
// maps, named objects, and named ramification data.  Names are unique and
// every reference must resolve.
struct Workspace {
  std::map<std::string, Level> levels;
  std::vector<LevelMap> maps;
  std::map<std::string, SkeletonObject> objects;
  std::map<std::string, RamificationDatum> data;

  const Level &level(const std::string &name) const {
    auto it = levels.find(name);
    if (it == levels.end())
      fail("UnknownName", "no level named '" + name + "'");
    return it->second;
  }

  const SkeletonObject &object(const std::string &name) const {
    auto it = objects.find(name);
    if (it == objects.end())
      fail("UnknownName", "no object named '" + name + "'");
    return it->second;
  }

  const RamificationDatum &datum(const std::string &name) const {
    auto it = data.find(name);
    if (it == data.end())
      fail("UnknownName", "no ramification datum named '" + name + "'");
    return it->second;
  }
};

inline Workspace workspace_from_json(const json &j) {
  Workspace ws;
  if (j.contains("levels"))
    for (const auto &entry : j.at("levels")) {
      std::string name = entry.at("name").get<std::string>();
      if (ws.levels.count(name))
        fail("ParseError", "duplicate level name '" + name + "'");
      ws.levels.emplace(name,
                        make_level(name, group_from_json(entry.at("group")),
                                   entry.at("denom").get<long long>()));
    }
  // Second pass: maps may point at any declared level.
  if (j.contains("levels"))
    for (const auto &entry : j.at("levels")) {
      if (!entry.contains("maps"))
        continue;
      const Level &fine = ws.level(entry.at("name").get<std::string>());
      for (const auto &m : entry.at("maps")) {
        const Level &coarse = ws.level(m.at("coarse").get<std::string>());
        ws.maps.push_back(make_level_map(
            fine, coarse,
            make_group_hom(fine.gal, coarse.gal,
                           m.at("proj").get<std::vector<int>>())));
      }
    }
  if (j.contains("objects"))
    for (const auto &entry : j.at("objects")) {
      std::string name = entry.at("name").get<std::string>();
      if (ws.objects.count(name))
        fail("ParseError", "duplicate object name '" + name + "'");
      const Level &level = ws.level(entry.at("level").get<std::string>());
      ws.objects.emplace(name, object_from_json(entry, level));
    }
  if (j.contains("data"))
    for (const auto &entry : j.at("data")) {
      std::string name = entry.at("name").get<std::string>();
      if (ws.data.count(name))
        fail("ParseError", "duplicate datum name '" + name + "'");
      ws.data.emplace(name, datum_from_json(entry));
    }
  return ws;
}

inline json workspace_to_json(const Workspace &ws) {
  json levels = json::array();
  for (const auto &[name, lvl] : ws.levels) {
    json entry{{"name", name},
               {"group", group_to_json(lvl.gal)},
               {"denom", lvl.denom}};
    json maps = json::array();
    for (const auto &m : ws.maps)
      if (m.fine.name == name)
        maps.push_back(
            json{{"coarse", m.coarse.name}, {"proj", m.proj.map}});
    entry["maps"] = std::move(maps);
    levels.push_back(std::move(entry));
  }
  json objects = json::array();
  for (const auto &[name, X] : ws.objects) {
    json entry = object_to_json(X);
    entry.erase("level");
    json row{{"name", name}, {"level", X.level.name}};
    row["dims"] = entry.at("dims");
    objects.push_back(std::move(row));
  }
  json data = json::array();
  for (const auto &[name, d] : ws.data) {
    json entry = datum_to_json(d);
    json row{{"name", name}};
    for (auto &[k, v] : entry.items())
      row[k] = v;
    data.push_back(std::move(row));
  }
  return json{{"levels", std::move(levels)},
              {"objects", std::move(objects)},
              {"data", std::move(data)}};
}

inline Workspace load_workspace_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail("ParseError", "cannot open workspace file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception &e) {
    fail("ParseError", "workspace is not valid JSON: " + std::string(e.what()));
  }
  return workspace_from_json(j);
}

} // namespace rigisoc
