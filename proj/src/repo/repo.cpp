// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "tct/repo/repo.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tct/common/error.hpp"

namespace tct::repo {

using json = nlohmann::ordered_json;

Hash32 theorem_id(const Hash32& code, const std::string& function, const std::string& hypothesis, const Hash32& path) {
  ByteWriter w;
  w.str("tct-theorem-v1");
  w.hash(code);
  w.str(function);
  w.str(hypothesis);
  w.hash(path);
  return sha256(w.data());
}

bool TheoremRepo::add(const Theorem& t) {
  if (theorem_id(t.code, t.function, t.hypothesis, t.path) != t.id) {
    throw Error(Errc::IncompleteEvidence, "theorem id " + t.id.short_hex() + " does not match its statement");
  }
  return by_id_.emplace(t.id, t).second;
}

const Theorem* TheoremRepo::find(const Hash32& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &it->second;
}

std::vector<const Theorem*> TheoremRepo::about(const Hash32& code, const std::string& function) const {
  std::vector<const Theorem*> out;
  for (const auto& [id, t] : by_id_) {
    if (t.code == code && t.function == function) out.push_back(&t);
  }
  return out;
}

std::string TheoremRepo::to_json() const {
  json j;
  j["schema_version"] = kSchemaVersion;
  json list = json::array();
  for (const auto& [id, t] : by_id_) {
    json e;
    e["id"] = t.id.hex();
    e["code"] = t.code.hex();
    e["contract"] = t.contract;
    e["function"] = t.function;
    e["hypothesis"] = t.hypothesis;
    e["path"] = t.path.hex();
    e["goals"] = t.goals;
    e["origin_tx"] = t.origin_tx;
    e["added_at"] = t.added_at;
    list.push_back(std::move(e));
  }
  j["theorems"] = std::move(list);
  return j.dump(2) + "\n";
}

namespace {

Hash32 hash_field(const json& e, const char* key) {
  auto h = Hash32::parse(e.at(key).get<std::string>());
  if (!h) throw Error(Errc::PersistenceFailure, std::string("bad hash in field '") + key + "'");
  return *h;
}

}  // namespace

TheoremRepo TheoremRepo::from_json(const std::string& text) {
  TheoremRepo r;
  try {
    json j = json::parse(text);
    int v = j.at("schema_version").get<int>();
    if (v != kSchemaVersion) {
      throw Error(Errc::PersistenceFailure, "unsupported repository schema version " + std::to_string(v));
    }
    for (const auto& e : j.at("theorems")) {
      Theorem t;
      t.id = hash_field(e, "id");
      t.code = hash_field(e, "code");
      t.contract = e.at("contract").get<std::string>();
      t.function = e.at("function").get<std::string>();
      t.hypothesis = e.at("hypothesis").get<std::string>();
      t.path = hash_field(e, "path");
      t.goals = e.at("goals").get<std::uint32_t>();
      t.origin_tx = e.at("origin_tx").get<std::string>();
      t.added_at = e.at("added_at").get<std::uint64_t>();
      r.add(t);
    }
  } catch (const json::exception& ex) {
    throw Error(Errc::PersistenceFailure, std::string("malformed repository: ") + ex.what());
  }
  return r;
}

void TheoremRepo::save(const std::string& path) const {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(Errc::PersistenceFailure, "cannot write " + tmp);
    f << to_json();
    f.flush();
    if (!f) throw Error(Errc::PersistenceFailure, "cannot write " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Error(Errc::PersistenceFailure, "cannot replace " + path);
  }
}

TheoremRepo TheoremRepo::load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::PersistenceFailure, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return from_json(ss.str());
}

}  // namespace tct::repo
