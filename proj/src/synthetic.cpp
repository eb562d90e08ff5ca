#include "swdrank/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <string_view>

#include "swdrank/errors.hpp"

namespace swdrank::synthetic {
namespace {

constexpr std::array<std::string_view, 4> kRoles = {"TermRef", "Imports", "Extends",
                                                    "PriorVersion"};

constexpr std::array<std::string_view, 64> kWords = {
    "ranking",   "semantic",  "ontology",   "search",    "web",        "document",
    "authority", "hub",       "graph",      "link",      "metadata",   "index",
    "query",     "keyword",   "relation",   "class",     "property",   "instance",
    "reasoning", "inference", "retrieval",  "agent",     "resource",   "schema",
    "person",    "paper",     "author",     "conference", "citation",  "journal",
    "library",   "catalog",   "music",      "album",     "artist",     "city",
    "country",   "river",     "protein",    "gene",      "drug",       "disease",
    "course",    "student",   "university", "product",   "price",      "vendor",
    "sensor",    "device",    "network",    "service",   "workflow",   "process",
    "event",     "location",  "time",       "measure",   "unit",       "organism",
    "species",   "habitat",   "vehicle",    "engine"};

// Skewed toward the head of the list so a few words are very common.
std::string_view pick_word(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  const auto idx = static_cast<std::size_t>(double(kWords.size()) * u * u);
  return kWords[std::min(idx, kWords.size() - 1)];
}

std::string phrase(std::mt19937_64& rng, int words) {
  std::string text;
  for (int i = 0; i < words; ++i) {
    if (i) text += ' ';
    text += pick_word(rng);
  }
  return text;
}

std::string doc_uri(std::size_t i) {
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "http://example.org/swd/%04zu", i);
  return buffer;
}

constexpr const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
constexpr const char* kLabel = "http://www.w3.org/2000/01/rdf-schema#label";
constexpr const char* kSubClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
constexpr const char* kOwlClass = "http://www.w3.org/2002/07/owl#Class";
constexpr const char* kOwlOntology = "http://www.w3.org/2002/07/owl#Ontology";
constexpr const char* kImports = "http://www.w3.org/2002/07/owl#imports";
constexpr const char* kTermRef = "http://www.w3.org/2002/07/owl#termRef";
constexpr const char* kPriorVersion = "http://www.w3.org/2002/07/owl#priorVersion";
constexpr const char* kTitle = "http://purl.org/dc/elements/1.1/title";

void statement(std::string& out, const std::string& s, const char* p, const std::string& o) {
  out += "<" + s + "> <" + p + "> <" + o + "> .\n";
}

void literal(std::string& out, const std::string& s, const char* p, const std::string& o) {
  out += "<" + s + "> <" + p + "> \"" + o + "\" .\n";
}

}  // namespace

TransferDataGraph power_law_graph(std::size_t nodes, std::uint64_t seed,
                                  std::size_t links_per_node, const RateTable& rates) {
  std::mt19937_64 rng(seed);
  DataGraph data;
  std::vector<NodeId> bag;  // node v appears (in-degree + 1) times
  for (std::size_t i = 0; i < nodes; ++i) {
    const auto v = data.add_node(kDocumentLabel);
    const auto links = std::min(links_per_node, bag.size());
    for (std::size_t k = 0; k < links; ++k) {
      std::uniform_int_distribution<std::size_t> pick(0, bag.size() - 1);
      std::uniform_int_distribution<std::size_t> role(0, kRoles.size() - 1);
      const auto target = bag[pick(rng)];
      if (data.add_edge(v, target, std::string(kRoles[role(rng)]))) bag.push_back(target);
    }
    bag.push_back(v);
  }
  const auto schema = document_schema();
  return derive_transfer_data_graph(data, expand_transfer_schema(schema, rates),
                                    check_conformance(data, schema));
}

std::vector<CorpusFile> corpus(std::size_t docs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<std::string>> classes(docs);
  std::vector<std::size_t> bag;
  std::vector<CorpusFile> files;
  files.reserve(docs);

  for (std::size_t i = 0; i < docs; ++i) {
    const auto uri = doc_uri(i);
    const double kind = unit(rng);
    const bool defines = kind < 0.45 || kind >= 0.8;
    const bool asserts = kind >= 0.45;
    std::string text = "# uri: <" + uri + ">\n";
    literal(text, uri, kTitle, phrase(rng, 3));

    if (defines) {
      statement(text, uri, kRdfType, kOwlOntology);
      const int count = 2 + int(unit(rng) * 3);
      for (int c = 0; c < count; ++c) {
        const auto cls = uri + "#C" + std::to_string(c);
        classes[i].push_back(cls);
        statement(text, cls, kRdfType, kOwlClass);
        literal(text, cls, kLabel, phrase(rng, 2));
      }
    }

    if (i > 0) {
      const int links = 1 + int(-std::log(1.0 - unit(rng)) * 1.5);
      for (int l = 0; l < links; ++l) {
        std::uniform_int_distribution<std::size_t> pick(0, bag.size() - 1);
        const auto target = bag[pick(rng)];
        const double choice = unit(rng);
        if (defines && choice < 0.35) {
          statement(text, uri, kImports, doc_uri(target));
        } else if (defines && choice < 0.75 && !classes[target].empty()) {
          const auto& base = classes[target][std::size_t(unit(rng) * double(classes[target].size()))];
          statement(text, classes[i].front(), kSubClassOf, base);
        } else if (choice > 0.95) {
          statement(text, uri, kPriorVersion, doc_uri(target));
        } else {
          statement(text, uri + "#ref" + std::to_string(l), kTermRef, doc_uri(target));
        }
        bag.push_back(target);
      }
    }

    if (asserts) {
      const int count = 2 + int(unit(rng) * 4);
      for (int k = 0; k < count; ++k) {
        const auto ind = uri + "#i" + std::to_string(k);
        std::string type = "http://example.org/vocab#Thing";
        if (!classes[i].empty() && unit(rng) < 0.5) type = classes[i].back();
        statement(text, ind, kRdfType, type);
        literal(text, ind, kLabel, phrase(rng, 2 + int(unit(rng) * 3)));
      }
    }
    bag.push_back(i);

    char name[32];
    std::snprintf(name, sizeof name, "doc%04zu.nt", i);
    files.push_back({name, std::move(text)});
  }
  return files;
}

void write_corpus(const std::vector<CorpusFile>& files, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoFailure(dir.string(), ec.message());
  for (const auto& f : files) {
    std::ofstream out(dir / f.name, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure((dir / f.name).string(), "cannot open for writing");
    out << f.text;
  }
}

}  // namespace swdrank::synthetic
