#include <random>

#include <gtest/gtest.h>
#include <json.hpp>

#include "support/generators.hpp"
#include "support/states.hpp"
#include "swdrank/errors.hpp"
#include "swdrank/store.hpp"

namespace swdrank {
namespace {

using nlohmann::json;
using testing::read_file;
using testing::TempDir;
using testing::write_file;

EngineState sample_state(std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  auto s = testing::random_state(rng);
  while (!s.state.built()) s = testing::random_state(rng);
  return s.state;
}

void edit_manifest(const TempDir& dir, const std::function<void(json&)>& change) {
  auto manifest = json::parse(read_file(dir / "manifest.json"));
  change(manifest);
  write_file(dir / "manifest.json", manifest.dump());
}

TEST(Store, RoundTrip) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const auto state = testing::random_state(rng).state;
    TempDir dir;
    save_state(state, dir.path());
    const auto loaded = load_state(dir.path());
    EXPECT_EQ(loaded, state) << "trial " << trial;
    EXPECT_EQ(loaded.built(), state.built());
  }
}

TEST(Store, SavesAreByteIdentical) {
  const auto state = sample_state();
  TempDir a, b;
  const auto summary = save_state(state, a.path(), "2024-01-01T00:00:00Z");
  save_state(state, b.path(), "2024-01-01T00:00:00Z");
  for (const auto& name : state_files()) {
    EXPECT_EQ(read_file(a / name), read_file(b / name)) << name;
  }
  EXPECT_EQ(summary.record_counts.at("docs.jsonl"), state.docs.size());
  EXPECT_EQ(summary.record_counts.at("edges.jsonl"), state.relations.size());
}

TEST(Store, OnlyTimestampDiffers) {
  const auto state = sample_state();
  TempDir a, b;
  save_state(state, a.path(), "2024-01-01T00:00:00Z");
  save_state(state, b.path(), "2030-06-30T12:00:00Z");
  auto ma = json::parse(read_file(a / "manifest.json"));
  auto mb = json::parse(read_file(b / "manifest.json"));
  EXPECT_NE(ma, mb);
  ma.erase("created_at");
  mb.erase("created_at");
  EXPECT_EQ(ma, mb);
}

TEST(Store, ManifestFields) {
  const auto state = sample_state();
  TempDir dir;
  save_state(state, dir.path(), "2024-01-01T00:00:00Z");
  const auto m = json::parse(read_file(dir / "manifest.json"));
  EXPECT_EQ(m.at("format_version"), kFormatVersion);
  EXPECT_EQ(m.at("doc_count"), state.docs.size());
  EXPECT_EQ(m.at("edge_count"), state.relations.size());
  EXPECT_EQ(m.at("config_fingerprint"), state.config_fingerprint);
  EXPECT_EQ(m.at("rank_params").at("damping"), state.rank_params.damping);
  for (const auto& name : state_files()) {
    if (name != "manifest.json") {
      EXPECT_TRUE(m.at("records").contains(name)) << name;
    }
  }
}

TEST(Store, UnwritableDirectory) {
  TempDir dir;
  write_file(dir / "plain-file", "x");
  EXPECT_THROW(save_state(sample_state(), dir / "plain-file" / "state"), IoFailure);
}

TEST(Store, WrongRecordCount) {
  TempDir dir;
  save_state(sample_state(), dir.path());
  edit_manifest(dir, [](json& m) { m["records"]["edges.jsonl"] = 100000; });
  try {
    load_state(dir.path());
    FAIL() << "expected CorruptRecord";
  } catch (const CorruptRecord& e) {
    EXPECT_EQ(e.file(), "edges.jsonl");
  }
}

TEST(Store, FutureVersion) {
  TempDir dir;
  save_state(sample_state(), dir.path());
  edit_manifest(dir, [](json& m) { m["format_version"] = kFormatVersion + 1; });
  try {
    load_state(dir.path());
    FAIL() << "expected VersionMismatch";
  } catch (const VersionMismatch& e) {
    EXPECT_EQ(e.found(), kFormatVersion + 1);
  }
}

TEST(Store, MissingFiles) {
  TempDir dir;
  EXPECT_THROW(load_state(dir.path()), MissingFile);
  save_state(sample_state(), dir.path());
  std::filesystem::remove(dir / "index.jsonl");
  try {
    load_state(dir.path());
    FAIL() << "expected MissingFile";
  } catch (const MissingFile& e) {
    EXPECT_EQ(e.name(), "index.jsonl");
  }
}

TEST(Store, GarbageRecord) {
  TempDir dir;
  save_state(sample_state(), dir.path());
  auto docs = read_file(dir / "docs.jsonl");
  docs.replace(0, docs.find('\n'), "{not json");
  write_file(dir / "docs.jsonl", docs);
  try {
    load_state(dir.path());
    FAIL() << "expected CorruptRecord";
  } catch (const CorruptRecord& e) {
    EXPECT_EQ(e.file(), "docs.jsonl");
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(Store, EmptyState) {
  TempDir dir;
  const EngineState empty;
  save_state(empty, dir.path());
  EXPECT_EQ(load_state(dir.path()), empty);
}

}  // namespace
}  // namespace swdrank
