#include "swdrank/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "swdrank/errors.hpp"

namespace swdrank {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string located(std::size_t line, const std::string& message) {
  return "config line " + std::to_string(line) + ": " + message;
}

double to_double(std::string_view text, std::size_t line) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(located(line, "expected a number, got '" + std::string(text) + "'"));
  }
  return value;
}

std::size_t to_count(std::string_view text, std::size_t line) {
  text = trim(text);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(located(line, "expected a count, got '" + std::string(text) + "'"));
  }
  return value;
}

bool to_bool(std::string_view text, std::size_t line) {
  text = trim(text);
  if (text == "true") return true;
  if (text == "false") return false;
  throw ConfigError(located(line, "expected true or false"));
}

std::string shortest(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

}  // namespace

void EngineConfig::validate() const {
  for (const auto& [role, r] : rates) {
    for (const double v : {r.forward, r.backward}) {
      if (!std::isfinite(v) || v < 0.0 || v > 1.0) throw RateOutOfRange(role);
    }
  }
  rank.validate();
  if (tokenizer.min_length < 1) throw ConfigError("min_length must be at least 1");
  if (n < 1) throw ConfigError("n must be at least 1");
  if (top_k < 1) throw ConfigError("top_k must be at least 1");
}

std::string EngineConfig::to_text() const {
  std::ostringstream out;
  out << "[rates]\n";
  for (const auto& [role, r] : rates) {
    out << role << " = " << shortest(r.forward) << ", " << shortest(r.backward) << "\n";
  }
  out << "[rank]\n"
      << "damping = " << shortest(rank.damping) << "\n"
      << "epsilon = " << shortest(rank.epsilon) << "\n"
      << "max_iter = " << rank.max_iter << "\n"
      << "init = " << to_string(rank.init_mode) << "\n";
  out << "[tokenizer]\n"
      << "lowercase = " << (tokenizer.lowercase ? "true" : "false") << "\n"
      << "min_length = " << tokenizer.min_length << "\n"
      << "stopwords =";
  for (const auto& word : tokenizer.stopwords) out << " " << word;
  out << "\n[query]\n"
      << "n = " << n << "\n"
      << "c = " << c << "\n"
      << "top_k = " << top_k << "\n"
      << "weighted = " << (weighted ? "true" : "false") << "\n";
  return out.str();
}

std::string EngineConfig::fingerprint() const {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : to_text()) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

EngineConfig parse_config(std::string_view text) {
  EngineConfig config;
  bool rates_seen = false;
  std::string section;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto end = text.find('\n');
    auto line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(located(line_no, "unterminated section"));
      section = std::string(trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(located(line_no, "expected key = value"));
    const std::string key(trim(line.substr(0, eq)));
    const auto value = trim(line.substr(eq + 1));

    if (section == "rates") {
      if (!rates_seen) {
        config.rates.clear();
        rates_seen = true;
      }
      const auto comma = value.find(',');
      if (comma == std::string_view::npos) {
        throw ConfigError(located(line_no, "rates need 'forward, backward'"));
      }
      config.rates[key] = {to_double(value.substr(0, comma), line_no),
                           to_double(value.substr(comma + 1), line_no)};
    } else if (section == "rank") {
      if (key == "damping") {
        config.rank.damping = to_double(value, line_no);
      } else if (key == "epsilon") {
        config.rank.epsilon = to_double(value, line_no);
      } else if (key == "max_iter") {
        config.rank.max_iter = static_cast<int>(to_count(value, line_no));
      } else if (key == "init") {
        config.rank.init_mode = parse_init_mode(value);
      } else {
        throw ConfigError(located(line_no, "unknown key '" + key + "' in [rank]"));
      }
    } else if (section == "tokenizer") {
      if (key == "lowercase") {
        config.tokenizer.lowercase = to_bool(value, line_no);
      } else if (key == "min_length") {
        config.tokenizer.min_length = to_count(value, line_no);
      } else if (key == "stopwords") {
        config.tokenizer.stopwords.clear();
        std::istringstream words{std::string(value)};
        for (std::string w; words >> w;) config.tokenizer.stopwords.insert(w);
      } else {
        throw ConfigError(located(line_no, "unknown key '" + key + "' in [tokenizer]"));
      }
    } else if (section == "query") {
      if (key == "n") {
        config.n = to_count(value, line_no);
      } else if (key == "c") {
        config.c = to_count(value, line_no);
      } else if (key == "top_k") {
        config.top_k = to_count(value, line_no);
      } else if (key == "weighted") {
        config.weighted = to_bool(value, line_no);
      } else {
        throw ConfigError(located(line_no, "unknown key '" + key + "' in [query]"));
      }
    } else {
      throw ConfigError(located(line_no, "key outside a known section"));
    }
  }
  config.validate();
  return config;
}

EngineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace swdrank
