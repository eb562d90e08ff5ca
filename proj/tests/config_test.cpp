#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "swdrank/config.hpp"
#include "swdrank/errors.hpp"

namespace swdrank {
namespace {

TEST(Config, Defaults) {
  const EngineConfig config;
  EXPECT_EQ(config.n, 10u);
  EXPECT_EQ(config.c, 3u);
  EXPECT_EQ(config.top_k, 10u);
  EXPECT_TRUE(config.weighted);
  EXPECT_EQ(config.rank.damping, 0.85);
  EXPECT_EQ(config.rank.epsilon, 1e-8);
  EXPECT_EQ(config.rank.max_iter, 200);
  EXPECT_EQ(config.rank.init_mode, InitMode::InRatio);
  EXPECT_NO_THROW(config.validate());
}

TEST(Config, ParsesEverySection) {
  const auto config = parse_config(R"(# engine settings
[rates]
Imports = 0.4, 0.1   # forward, backward
Extends = 0.2, 0.0

[rank]
damping = 0.5
epsilon = 1e-10
max_iter = 50
init = uniform

[tokenizer]
lowercase = false
min_length = 3
stopwords = foo bar

[query]
n = 4
c = 0
top_k = 7
weighted = false
)");
  EXPECT_EQ(config.rates.size(), 2u);
  EXPECT_EQ(config.rates.at("Imports"), (TransferRates{0.4, 0.1}));
  EXPECT_EQ(config.rank.damping, 0.5);
  EXPECT_EQ(config.rank.epsilon, 1e-10);
  EXPECT_EQ(config.rank.max_iter, 50);
  EXPECT_EQ(config.rank.init_mode, InitMode::Uniform);
  EXPECT_FALSE(config.tokenizer.lowercase);
  EXPECT_EQ(config.tokenizer.min_length, 3u);
  EXPECT_EQ(config.tokenizer.stopwords, (std::set<std::string>{"bar", "foo"}));
  EXPECT_EQ(config.n, 4u);
  EXPECT_EQ(config.c, 0u);
  EXPECT_EQ(config.top_k, 7u);
  EXPECT_FALSE(config.weighted);
}

TEST(Config, TextRoundTrip) {
  EngineConfig config;
  config.rates["TermRef"] = {0.1 + 0.2, 1.0 / 3.0};
  config.rank.damping = 0.7;
  config.c = 8;
  const auto again = parse_config(config.to_text());
  EXPECT_EQ(again.rates, config.rates);
  EXPECT_EQ(again.rank, config.rank);
  EXPECT_EQ(again.tokenizer.stopwords, config.tokenizer.stopwords);
  EXPECT_EQ(again.to_text(), config.to_text());
  EXPECT_EQ(again.fingerprint(), config.fingerprint());
}

TEST(Config, Fingerprint) {
  EngineConfig a, b;
  EXPECT_EQ(a.fingerprint().size(), 16u);
  EXPECT_EQ(a.fingerprint(), b.fingerprint());
  b.rank.damping = 0.8;
  EXPECT_NE(a.fingerprint(), b.fingerprint());
}

TEST(Config, Rejections) {
  EXPECT_THROW(parse_config("[rates]\nImports = 1.5, 0.1\n"), RateOutOfRange);
  EXPECT_THROW(parse_config("[rank]\ndamping = 1\n"), ConfigError);
  EXPECT_THROW(parse_config("[rank]\ndamping = fast\n"), ConfigError);
  EXPECT_THROW(parse_config("[rank]\nspeed = 1\n"), ConfigError);
  EXPECT_THROW(parse_config("[rank]\ninit = random\n"), ConfigError);
  EXPECT_THROW(parse_config("[rates]\nImports = 0.3\n"), ConfigError);
  EXPECT_THROW(parse_config("damping = 0.5\n"), ConfigError);
  EXPECT_THROW(parse_config("[nowhere]\nx = 1\n"), ConfigError);
  EXPECT_THROW(parse_config("[query]\nn = 0\n"), ConfigError);
  EXPECT_THROW(parse_config("[query\n"), ConfigError);
  EXPECT_THROW(parse_config("[query]\nweighted = yes\n"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/engine.toml"), ConfigError);
}

TEST(Config, LoadFromFile) {
  testing::TempDir dir;
  testing::write_file(dir / "engine.toml", "[query]\ntop_k = 3\n");
  const auto config = load_config(dir / "engine.toml");
  EXPECT_EQ(config.top_k, 3u);
  EXPECT_EQ(config.rates, default_document_rates());
}

}  // namespace
}  // namespace swdrank
