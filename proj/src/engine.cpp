#include "swdrank/engine.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "swdrank/errors.hpp"

namespace swdrank {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double micros_since(Clock::time_point start) {
  return std::chrono::duration<double, std::micro>(Clock::now() - start).count();
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure(path.string(), "cannot open for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
  return buffer;
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> values;
  std::stringstream stream(text);
  for (std::string item; std::getline(stream, item, ',');) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw ConfigError("bad grid value '" + item + "'");
    }
    values.push_back(value);
  }
  if (values.empty()) throw ConfigError("empty grid list");
  return values;
}

std::vector<std::string> query_tokens(const std::vector<std::string>& raw,
                                      const TokenizerConfig& tokenizer) {
  std::vector<std::string> terms;
  for (const auto& text : raw) {
    for (auto& token : tokenize(text, tokenizer)) terms.push_back(std::move(token));
  }
  return terms;
}

std::vector<NodeId> as_nodes(const std::vector<DocId>& docs) {
  return {docs.begin(), docs.end()};
}

const RankVector& require_ranks(const EngineState& state) {
  if (!state.ranks) throw Error("state has not been built; run `build` first");
  return *state.ranks;
}

}  // namespace

EngineState ingest_corpus(const fs::path& corpus_dir, const EngineConfig& config,
                          IngestSummary& summary) {
  if (!fs::is_directory(corpus_dir)) {
    throw IoFailure(corpus_dir.string(), "not a directory");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(corpus_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".nt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  summary = {};
  std::vector<Document> docs;
  std::vector<std::string> paths;
  std::set<DocId> used;
  for (const auto& path : files) {
    try {
      const auto source = read_file(path);
      auto uri = read_uri_header(source);
      if (uri.empty()) uri = "file://" + fs::absolute(path).lexically_normal().string();
      const auto id = static_cast<DocId>(docs.size());
      docs.push_back(parse_document(source, std::move(uri), id, used, config.tokenizer));
      used.insert(id);
      paths.push_back(path.lexically_relative(corpus_dir).generic_string());
    } catch (const Error& e) {
      summary.failures.push_back({path.string(), e.what()});
    }
  }

  auto links = link_corpus(docs);
  const auto data = document_data_graph(docs, links.edges);
  const auto schema = document_schema();
  const auto transfer_schema = expand_transfer_schema(schema, config.rates);

  EngineState state;
  state.config_fingerprint = config.fingerprint();
  state.rank_params = config.rank;
  state.unresolved_references = links.unresolved;
  state.graph = derive_transfer_data_graph(data, transfer_schema, check_conformance(data, schema));
  for (std::size_t i = 0; i < docs.size(); ++i) {
    auto& d = docs[i];
    ++summary.kinds[std::string(to_string(d.kind))];
    state.docs.push_back({d.doc_id, d.uri, paths[i], d.kind, d.stats, std::move(d.keywords)});
  }
  state.relations = std::move(links.edges);

  summary.docs = state.docs.size();
  summary.relation_edges = state.relations.size();
  summary.unresolved = links.unresolved;
  summary.internal = links.internal;
  summary.data_edges = data.edges().size();
  summary.transfer_edges = state.graph.edges().size();
  return state;
}

IngestSummary run_ingest(const fs::path& corpus_dir, const fs::path& state_dir,
                         const EngineConfig& config) {
  IngestSummary summary;
  const auto state = ingest_corpus(corpus_dir, config, summary);
  save_state(state, state_dir, utc_timestamp());
  return summary;
}

BuildSummary build_state(EngineState& state, const EngineConfig& config,
                         const BuildOptions& options) {
  RankParams params = config.rank;
  if (options.init) params.init_mode = *options.init;

  BuildSummary summary;
  summary.init_mode = params.init_mode;
  RankVector ranks;
  try {
    ranks = compute_objectrank(state.graph, params);
  } catch (const NotConverged& e) {
    if (!options.allow_unconverged) throw;
    ranks = e.best();
    summary.converged = false;
  }
  summary.iterations_used = ranks.iterations_used;
  summary.final_residual = ranks.final_residual;

  std::map<DocId, KeywordBag> bags;
  for (const auto& d : state.docs) bags.emplace(d.doc_id, d.keywords);
  state.index = build_index(bags, ranks.scores);
  state.ranks = std::move(ranks);
  state.rank_params = params;
  state.config_fingerprint = config.fingerprint();
  summary.indexed_terms = state.index.term_count();
  return summary;
}

BuildSummary run_build(const fs::path& state_dir, const EngineConfig& config,
                       const BuildOptions& options) {
  auto state = load_state(state_dir);
  const auto summary = build_state(state, config, options);
  save_state(state, state_dir, utc_timestamp());
  return summary;
}

QueryResult run_query(const EngineState& state, const std::vector<std::string>& raw_terms,
                      const QueryOptions& options, const TokenizerConfig& tokenizer) {
  const auto& ranks = require_ranks(state);
  const auto start = Clock::now();

  QueryResult result;
  result.terms = query_tokens(raw_terms, tokenizer);
  if (result.terms.empty()) throw NoMatch();
  result.seeds = top_n(state.index, result.terms, options.n);
  result.timings.seed_us = micros_since(start);

  const auto build_start = Clock::now();
  const auto sub = build_subgraph(state.graph, ranks.scores, as_nodes(result.seeds), options.c);
  result.timings.build_us = micros_since(build_start);
  result.subgraph_nodes = sub.nodes.size();
  result.subgraph_edges = sub.edges.size();

  const auto hits_start = Clock::now();
  SubGraphParams params;
  params.n = options.n;
  params.inlink_cap = options.c;
  params.weighted = options.weighted;
  try {
    const auto scores = hits(sub, params);
    const auto lists = dual_lists(scores, options.top_k);
    result.authorities = lists.authorities;
    result.hubs = lists.hubs;
    result.hits_iterations = scores.iterations_used;
  } catch (const DegenerateSubGraph&) {
    result.degenerate = true;
    for (const auto seed : result.seeds) {
      if (result.authorities.size() == options.top_k) break;
      result.authorities.push_back({seed, ranks.scores[Eigen::Index(seed)]});
    }
  }
  result.timings.hits_us = micros_since(hits_start);
  result.timings.total_us = micros_since(start);
  return result;
}

std::string format_query_table(const EngineState& state, const QueryResult& result) {
  auto uri_of = [&](DocId doc) -> const std::string& {
    return state.docs.at(static_cast<std::size_t>(doc)).uri;
  };
  std::ostringstream out;
  out << "query:";
  for (const auto& t : result.terms) out << " " << t;
  out << "\nseeds:";
  for (const auto s : result.seeds) out << " " << s;
  out << "\nsub-graph: " << result.subgraph_nodes << " nodes, " << result.subgraph_edges
      << " edges\n";
  if (result.degenerate) {
    out << "notice: sub-graph has no links; showing seeds by ObjectRank\n";
  }
  auto table = [&](const char* title, const std::vector<RankedDoc>& list) {
    out << "\n" << title << "\n";
    out << "  rank  doc     weight      uri\n";
    for (std::size_t i = 0; i < list.size(); ++i) {
      char line[64];
      std::snprintf(line, sizeof line, "  %4zu  %-6lld  %.8f  ", i + 1,
                    static_cast<long long>(list[i].doc), list[i].weight);
      out << line << uri_of(list[i].doc) << "\n";
    }
  };
  table(result.degenerate ? "seeds (ObjectRank)" : "authorities", result.authorities);
  if (!result.degenerate) table("hubs", result.hubs);
  out << "\ntimings (us): seeds " << fixed(result.timings.seed_us, 1) << ", sub-graph "
      << fixed(result.timings.build_us, 1) << ", hits " << fixed(result.timings.hits_us, 1)
      << ", total " << fixed(result.timings.total_us, 1) << "\n";
  return out.str();
}

std::string format_query_json(const QueryResult& result, bool with_timings) {
  using nlohmann::json;
  auto list = [](const std::vector<RankedDoc>& docs) {
    json out = json::array();
    for (const auto& d : docs) out.push_back({{"doc_id", d.doc}, {"weight", d.weight}});
    return out;
  };
  json j = {{"terms", result.terms},
            {"seeds", result.seeds},
            {"subgraph_nodes", result.subgraph_nodes},
            {"subgraph_edges", result.subgraph_edges},
            {"degenerate", result.degenerate},
            {"hits_iterations", result.hits_iterations},
            {"authorities", list(result.authorities)},
            {"hubs", list(result.hubs)}};
  if (with_timings) {
    j["timings"] = {{"seed_us", result.timings.seed_us},
                    {"build_us", result.timings.build_us},
                    {"hits_us", result.timings.hits_us},
                    {"total_us", result.timings.total_us}};
  }
  return j.dump();
}

void parse_grid(const std::string& text, BenchOptions& options) {
  std::stringstream stream(text);
  for (std::string part; std::getline(stream, part, ';');) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw ConfigError("grid part '" + part + "' lacks '='");
    const auto key = part.substr(0, eq);
    const auto values = parse_list(part.substr(eq + 1));
    if (key == "n") {
      if (std::find(values.begin(), values.end(), 0u) != values.end()) {
        throw ConfigError("grid n values must be >= 1");
      }
      options.n_values = values;
    } else if (key == "c") {
      options.c_values = values;
    } else {
      throw ConfigError("unknown grid key '" + key + "'");
    }
  }
}

std::vector<BenchRow> run_bench(const EngineState& state, const BenchOptions& options,
                                const TokenizerConfig& tokenizer) {
  require_ranks(state);
  if (options.reps == 0) throw ConfigError("reps must be at least 1");
  auto queries = options.queries;
  if (queries.empty()) queries = most_frequent_terms(state.index, 20);

  // Reference authorities: HITS over every forward link of the graph.
  std::vector<NodeId> all(state.graph.node_count());
  for (NodeId v = 0; v < all.size(); ++v) all[v] = v;
  std::set<DocId> reference;
  if (!all.empty()) {
    SubGraph full;
    full.nodes = all;
    for (const auto& e : state.graph.edges()) {
      if (e.direction == Direction::Forward) full.edges.push_back({e.from, e.to, e.weight});
    }
    SubGraphParams params;
    params.weighted = options.weighted;
    try {
      for (const auto& d : dual_lists(hits(full, params), options.top_k).authorities) {
        reference.insert(d.doc);
      }
    } catch (const DegenerateSubGraph&) {
    }
  }

  std::vector<BenchRow> rows;
  for (const auto n : options.n_values) {
    for (const auto c : options.c_values) {
      BenchRow row{n, c};
      std::size_t samples = 0;
      std::size_t answered = 0;
      for (const auto& query : queries) {
        QueryResult result;
        try {
          QueryOptions qo{n, c, options.top_k, options.weighted};
          for (std::size_t rep = 0; rep < options.reps; ++rep) {
            result = run_query(state, {query}, qo, tokenizer);
            row.build_us += result.timings.build_us;
            row.hits_us += result.timings.hits_us;
            row.total_us += result.timings.total_us;
            ++samples;
          }
        } catch (const NoMatch&) {
          continue;
        }
        ++answered;
        row.subgraph_nodes += double(result.subgraph_nodes);
        std::size_t common = 0;
        for (const auto& d : result.authorities) common += reference.count(d.doc);
        row.overlap_at_k += double(common) / double(options.top_k);
      }
      if (samples > 0) {
        row.build_us /= double(samples);
        row.hits_us /= double(samples);
        row.total_us /= double(samples);
      }
      if (answered > 0) {
        row.subgraph_nodes /= double(answered);
        row.overlap_at_k /= double(answered);
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "n,c,subgraph_nodes,build_us,hits_us,total_us,overlap_at_k\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.c) + "," + fixed(r.subgraph_nodes, 3) +
           "," + fixed(r.build_us, 2) + "," + fixed(r.hits_us, 2) + "," + fixed(r.total_us, 2) +
           "," + fixed(r.overlap_at_k, 4) + "\n";
  }
  return out;
}

DocumentReport run_inspect(const EngineState& state, const std::string& key) {
  const CorpusEntry* found = nullptr;
  DocId id = -1;
  const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), id);
  if (ec == std::errc() && ptr == key.data() + key.size()) {
    for (const auto& d : state.docs) {
      if (d.doc_id == id) found = &d;
    }
  }
  if (!found) {
    for (const auto& d : state.docs) {
      if (d.uri == key) found = &d;
    }
  }
  if (!found) throw UnknownDocument(key);

  DocumentReport report;
  report.entry = *found;
  if (state.ranks && found->doc_id < state.ranks->scores.size()) {
    report.score = state.ranks->scores[Eigen::Index(found->doc_id)];
  }
  for (const auto& e : state.relations) {
    if (e.from_doc == found->doc_id) report.outgoing[e.kind].push_back(e);
    if (e.to_doc == found->doc_id) report.incoming[e.kind].push_back(e);
  }
  return report;
}

std::string format_report(const DocumentReport& report, std::size_t keyword_sample) {
  const auto& d = report.entry;
  std::ostringstream out;
  out << "doc " << d.doc_id << "  " << d.uri << "\n"
      << "path: " << d.path << "\n"
      << "kind: " << to_string(d.kind) << "\n"
      << "language: " << to_string(d.stats.language_tag) << "\n"
      << "triples: " << d.stats.triple_count << "  classes: " << d.stats.class_defs
      << "  properties: " << d.stats.property_defs
      << "  individuals: " << d.stats.individual_count
      << "  ontology annotation: " << (d.stats.has_ontology_annotation ? "yes" : "no") << "\n"
      << "objectrank: " << (report.score ? fixed(*report.score, 8) : std::string("(not built)"))
      << "\n";
  auto section = [&](const char* title,
                     const std::map<RelationKind, std::vector<RelationEdge>>& edges,
                     bool outgoing) {
    out << title << ":";
    if (edges.empty()) out << " none";
    out << "\n";
    for (const auto& [kind, list] : edges) {
      out << "  " << relation_code(kind) << " (" << to_string(kind) << "):";
      for (const auto& e : list) out << " " << (outgoing ? e.to_doc : e.from_doc);
      out << "\n";
    }
  };
  section("relations out", report.outgoing, true);
  section("relations in", report.incoming, false);

  std::vector<std::pair<std::size_t, std::string>> words;
  for (const auto& [term, count] : d.keywords) words.emplace_back(count, term);
  std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  out << "keywords (" << d.keywords.size() << "):";
  for (std::size_t i = 0; i < words.size() && i < keyword_sample; ++i) {
    out << " " << words[i].second << "(" << words[i].first << ")";
  }
  out << "\n";
  return out.str();
}

}  // namespace swdrank
