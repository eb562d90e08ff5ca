#include "swdrank/store.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "swdrank/errors.hpp"

namespace swdrank {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kManifest = "manifest.json";
constexpr const char* kDocs = "docs.jsonl";
constexpr const char* kEdges = "edges.jsonl";
constexpr const char* kGraph = "graph.jsonl";
constexpr const char* kRanks = "ranks.jsonl";
constexpr const char* kIndex = "index.jsonl";

json stats_to_json(const BasicMetadata& m) {
  return {{"triple_count", m.triple_count},
          {"class_defs", m.class_defs},
          {"property_defs", m.property_defs},
          {"individual_count", m.individual_count},
          {"has_ontology_annotation", m.has_ontology_annotation},
          {"language_tag", std::string(to_string(m.language_tag))}};
}

BasicMetadata stats_from_json(const json& j) {
  BasicMetadata m;
  m.triple_count = j.at("triple_count").get<std::size_t>();
  m.class_defs = j.at("class_defs").get<std::size_t>();
  m.property_defs = j.at("property_defs").get<std::size_t>();
  m.individual_count = j.at("individual_count").get<std::size_t>();
  m.has_ontology_annotation = j.at("has_ontology_annotation").get<bool>();
  m.language_tag = parse_language_tag(j.at("language_tag").get<std::string>());
  return m;
}

json params_to_json(const RankParams& p) {
  return {{"damping", p.damping},
          {"epsilon", p.epsilon},
          {"max_iter", p.max_iter},
          {"init_mode", std::string(to_string(p.init_mode))}};
}

RankParams params_from_json(const json& j) {
  RankParams p;
  p.damping = j.at("damping").get<double>();
  p.epsilon = j.at("epsilon").get<double>();
  p.max_iter = j.at("max_iter").get<int>();
  p.init_mode = parse_init_mode(j.at("init_mode").get<std::string>());
  return p;
}

std::vector<json> doc_records(const EngineState& state) {
  std::vector<json> out;
  for (const auto& d : state.docs) {
    json keywords = json::object();
    for (const auto& [term, count] : d.keywords) keywords[term] = count;
    out.push_back({{"doc_id", d.doc_id},
                   {"uri", d.uri},
                   {"path", d.path},
                   {"kind", std::string(to_string(d.kind))},
                   {"stats", stats_to_json(d.stats)},
                   {"keywords", std::move(keywords)}});
  }
  return out;
}

std::vector<json> edge_records(const EngineState& state) {
  std::vector<json> out;
  for (const auto& e : state.relations) {
    out.push_back({{"from", e.from_doc},
                   {"to", e.to_doc},
                   {"kind", std::string(to_string(e.kind))},
                   {"predicate", e.via_predicate}});
  }
  return out;
}

std::vector<json> graph_records(const EngineState& state) {
  std::vector<json> out;
  const auto& nodes = state.graph.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out.push_back({{"type", "node"},
                   {"id", i},
                   {"label", nodes[i].label},
                   {"keywords", nodes[i].keywords}});
  }
  for (const auto& e : state.graph.edges()) {
    out.push_back({{"type", "edge"},
                   {"from", e.from},
                   {"to", e.to},
                   {"weight", e.weight},
                   {"role", e.role},
                   {"direction", e.direction == Direction::Forward ? "f" : "b"}});
  }
  return out;
}

std::vector<json> rank_records(const EngineState& state) {
  std::vector<json> out;
  if (!state.ranks) return out;
  const auto& scores = state.ranks->scores;
  for (Eigen::Index i = 0; i < scores.size(); ++i) {
    out.push_back({{"doc_id", i}, {"score", scores[i]}});
  }
  return out;
}

std::vector<json> index_records(const EngineState& state) {
  std::vector<json> out;
  for (const auto& [term, postings] : state.index.postings()) {
    json list = json::array();
    for (const auto& p : postings) list.push_back(json::array({p.doc, p.score}));
    out.push_back({{"term", term}, {"postings", std::move(list)}});
  }
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure(path.string(), "cannot open for writing");
  out << content;
  out.flush();
  if (!out) throw IoFailure(path.string(), "write failed");
}

std::string join_lines(const std::vector<json>& records) {
  std::string text;
  for (const auto& r : records) {
    text += r.dump();
    text += '\n';
  }
  return text;
}

std::vector<std::string> read_lines(const fs::path& dir, const std::string& name) {
  const auto path = dir / name;
  if (!fs::exists(path)) throw MissingFile(name);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure(path.string(), "cannot open for reading");
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  return lines;
}

// Parses each line of `name`, checking the count announced in the manifest.
void for_each_record(const fs::path& dir, const std::string& name, const json& counts,
                     const std::function<void(const json&)>& visit) {
  const auto lines = read_lines(dir, name);
  std::size_t expected = 0;
  try {
    expected = counts.at(name).get<std::size_t>();
  } catch (const json::exception&) {
    throw CorruptRecord(kManifest, 1, "no record count for " + name);
  }
  if (lines.size() != expected) {
    throw CorruptRecord(name, std::min(lines.size(), expected) + 1,
                        "manifest announces " + std::to_string(expected) +
                            " records, file has " + std::to_string(lines.size()));
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      visit(json::parse(lines[i]));
    } catch (const json::exception& e) {
      throw CorruptRecord(name, i + 1, e.what());
    } catch (const CorruptRecord&) {
      throw;
    } catch (const Error& e) {
      throw CorruptRecord(name, i + 1, e.what());
    }
  }
}

std::string escape_literal(const std::string& text) {
  std::string out;
  for (const char ch : text) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(ch);
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& state_files() {
  static const std::vector<std::string> files = {kDocs, kEdges, kGraph, kRanks, kIndex};
  return files;
}

ManifestSummary save_state(const EngineState& state, const fs::path& dir,
                           const std::string& created_at) {
  try {
    fs::create_directories(dir);
  } catch (const fs::filesystem_error& e) {
    throw IoFailure(dir.string(), e.code().message());
  }
  const std::vector<std::pair<std::string, std::vector<json>>> files = {
      {kDocs, doc_records(state)},    {kEdges, edge_records(state)},
      {kGraph, graph_records(state)}, {kRanks, rank_records(state)},
      {kIndex, index_records(state)}};

  ManifestSummary summary{dir, {}};
  json records = json::object();
  for (const auto& [name, lines] : files) {
    write_file(dir / name, join_lines(lines));
    records[name] = lines.size();
    summary.record_counts[name] = lines.size();
  }

  json manifest = {{"format_version", state.format_version},
                   {"created_at", created_at},
                   {"doc_count", state.docs.size()},
                   {"edge_count", state.relations.size()},
                   {"unresolved_references", state.unresolved_references},
                   {"rank_params", params_to_json(state.rank_params)},
                   {"config_fingerprint", state.config_fingerprint},
                   {"records", records},
                   {"built", state.built()}};
  if (state.ranks) {
    manifest["rank_summary"] = {{"iterations_used", state.ranks->iterations_used},
                                {"final_residual", state.ranks->final_residual}};
  }
  write_file(dir / kManifest, manifest.dump(2) + "\n");
  return summary;
}

EngineState load_state(const fs::path& dir) {
  const auto manifest_path = dir / kManifest;
  if (!fs::exists(manifest_path)) throw MissingFile(kManifest);
  json manifest;
  {
    std::ifstream in(manifest_path, std::ios::binary);
    if (!in) throw IoFailure(manifest_path.string(), "cannot open for reading");
    try {
      manifest = json::parse(in);
    } catch (const json::exception& e) {
      throw CorruptRecord(kManifest, 1, e.what());
    }
  }

  EngineState state;
  json counts;
  bool built = false;
  try {
    state.format_version = manifest.at("format_version").get<int>();
    if (state.format_version != kFormatVersion) {
      throw VersionMismatch(state.format_version, kFormatVersion);
    }
    state.config_fingerprint = manifest.at("config_fingerprint").get<std::string>();
    state.unresolved_references = manifest.at("unresolved_references").get<std::size_t>();
    state.rank_params = params_from_json(manifest.at("rank_params"));
    counts = manifest.at("records");
    built = manifest.at("built").get<bool>();
    if (built) {
      RankVector ranks;
      ranks.iterations_used = manifest.at("rank_summary").at("iterations_used").get<int>();
      ranks.final_residual = manifest.at("rank_summary").at("final_residual").get<double>();
      state.ranks = std::move(ranks);
    }
  } catch (const json::exception& e) {
    throw CorruptRecord(kManifest, 1, e.what());
  } catch (const ConfigError& e) {
    throw CorruptRecord(kManifest, 1, e.what());
  }

  for_each_record(dir, kDocs, counts, [&](const json& j) {
    CorpusEntry d;
    d.doc_id = j.at("doc_id").get<DocId>();
    d.uri = j.at("uri").get<std::string>();
    d.path = j.at("path").get<std::string>();
    d.kind = parse_document_kind(j.at("kind").get<std::string>());
    d.stats = stats_from_json(j.at("stats"));
    for (const auto& [term, count] : j.at("keywords").items()) {
      d.keywords[term] = count.get<std::size_t>();
    }
    state.docs.push_back(std::move(d));
  });

  for_each_record(dir, kEdges, counts, [&](const json& j) {
    state.relations.push_back({j.at("from").get<DocId>(), j.at("to").get<DocId>(),
                               parse_relation_kind(j.at("kind").get<std::string>()),
                               j.at("predicate").get<std::string>()});
  });

  std::vector<DataNode> nodes;
  std::vector<TransferEdge> edges;
  for_each_record(dir, kGraph, counts, [&](const json& j) {
    const auto type = j.at("type").get<std::string>();
    if (type == "node") {
      if (j.at("id").get<std::size_t>() != nodes.size()) {
        throw Error("node ids must be dense and in order");
      }
      nodes.push_back({j.at("label").get<std::string>(),
                       j.at("keywords").get<std::set<std::string>>()});
    } else if (type == "edge") {
      const auto direction = j.at("direction").get<std::string>();
      if (direction != "f" && direction != "b") throw Error("bad edge direction");
      edges.push_back({j.at("from").get<NodeId>(), j.at("to").get<NodeId>(),
                       j.at("weight").get<double>(), j.at("role").get<std::string>(),
                       direction == "f" ? Direction::Forward : Direction::Backward});
    } else {
      throw Error("unknown graph record type '" + type + "'");
    }
  });
  try {
    state.graph = TransferDataGraph(std::move(nodes), std::move(edges));
  } catch (const Error& e) {
    throw CorruptRecord(kGraph, 1, e.what());
  }

  std::vector<double> scores;
  for_each_record(dir, kRanks, counts, [&](const json& j) {
    if (j.at("doc_id").get<std::size_t>() != scores.size()) {
      throw Error("rank records must be dense and in order");
    }
    scores.push_back(j.at("score").get<double>());
  });
  if (built) {
    state.ranks->scores = Eigen::Map<const Eigen::VectorXd>(scores.data(),
                                                            Eigen::Index(scores.size()));
  } else if (!scores.empty()) {
    throw CorruptRecord(kRanks, 1, "ranks present in an unbuilt state");
  }

  std::map<std::string, std::vector<Posting>> postings;
  for_each_record(dir, kIndex, counts, [&](const json& j) {
    std::vector<Posting> list;
    for (const auto& p : j.at("postings")) {
      list.push_back({p.at(0).get<DocId>(), p.at(1).get<double>()});
    }
    postings.emplace(j.at("term").get<std::string>(), std::move(list));
  });
  try {
    state.index = InvertedIndex(std::move(postings));
  } catch (const Error& e) {
    throw CorruptRecord(kIndex, 1, e.what());
  }
  return state;
}

std::string write_ntriples(const Document& doc) {
  std::string out;
  if (!doc.uri.empty()) out += "# uri: <" + doc.uri + ">\n";
  for (const auto& t : doc.triples) {
    out += "<" + t.subject + "> <" + t.predicate + "> ";
    out += t.object_is_literal ? "\"" + escape_literal(t.object) + "\"" : "<" + t.object + ">";
    out += " .\n";
  }
  return out;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

}  // namespace swdrank
