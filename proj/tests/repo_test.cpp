// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>

#include "tct/common/error.hpp"
#include "tct/repo/repo.hpp"

namespace tct::repo {
namespace {

Theorem sample(const std::string& fn, const std::string& hyp) {
  Theorem t;
  t.code = sha256("code");
  t.contract = "C";
  t.function = fn;
  t.hypothesis = hyp;
  t.path = sha256("path " + fn);
  t.goals = 2;
  t.origin_tx = "tx1";
  t.added_at = 4;
  t.id = theorem_id(t.code, t.function, t.hypothesis, t.path);
  return t;
}

TEST(Repo, IdCoversEveryComponent) {
  Theorem t = sample("f", "true");
  EXPECT_NE(t.id, theorem_id(t.code, "g", t.hypothesis, t.path));
  EXPECT_NE(t.id, theorem_id(t.code, t.function, "x > 0", t.path));
  EXPECT_NE(t.id, theorem_id(t.code, t.function, t.hypothesis, sha256("other")));
  EXPECT_NE(t.id, theorem_id(sha256("other"), t.function, t.hypothesis, t.path));
}

TEST(Repo, AddFindAbout) {
  TheoremRepo r;
  EXPECT_TRUE(r.add(sample("f", "true")));
  EXPECT_FALSE(r.add(sample("f", "true")));
  EXPECT_TRUE(r.add(sample("f", "x > 0")));
  EXPECT_TRUE(r.add(sample("g", "true")));
  EXPECT_EQ(r.size(), 3u);
  EXPECT_EQ(r.about(sha256("code"), "f").size(), 2u);
  EXPECT_TRUE(r.about(sha256("nope"), "f").empty());
  EXPECT_NE(r.find(sample("g", "true").id), nullptr);
}

TEST(Repo, RejectsForgedId) {
  Theorem t = sample("f", "true");
  t.hypothesis = "false";
  TheoremRepo r;
  try {
    r.add(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IncompleteEvidence);
  }
}

TEST(Repo, JsonRoundTripIsByteStable) {
  TheoremRepo r;
  r.add(sample("g", "true"));
  r.add(sample("f", "x > 0"));
  std::string j = r.to_json();
  TheoremRepo back = TheoremRepo::from_json(j);
  EXPECT_EQ(back.to_json(), j);
  EXPECT_EQ(TheoremRepo().to_json(), "{\n  \"schema_version\": 1,\n  \"theorems\": []\n}\n");
}

TEST(Repo, SaveLoadAndBadInput) {
  auto dir = std::filesystem::temp_directory_path() / "tct_repo_test";
  std::filesystem::create_directories(dir);
  TheoremRepo r;
  r.add(sample("f", "true"));
  r.save((dir / "repo.json").string());
  EXPECT_EQ(TheoremRepo::load((dir / "repo.json").string()).to_json(), r.to_json());
  EXPECT_FALSE(std::filesystem::exists(dir / "repo.json.tmp"));
  auto code = [](const std::string& text) {
    try {
      TheoremRepo::from_json(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Usage;
  };
  EXPECT_EQ(code("{\"schema_version\": 2, \"theorems\": []}"), Errc::PersistenceFailure);
  EXPECT_EQ(code("not json"), Errc::PersistenceFailure);
  EXPECT_EQ(code("{\"schema_version\": 1}"), Errc::PersistenceFailure);
  try {
    TheoremRepo::load((dir / "missing.json").string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PersistenceFailure);
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace tct::repo
