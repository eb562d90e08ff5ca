#include "golden.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

#include "generators.hpp"

namespace swdrank::testing {
namespace {

using nlohmann::json;

std::vector<RankedDoc> read_list(const json& array) {
  std::vector<RankedDoc> list;
  for (const auto& item : array) {
    list.push_back({item.at("doc_id").get<DocId>(), item.at("weight").get<double>()});
  }
  return list;
}

json write_list(const std::vector<RankedDoc>& list) {
  json array = json::array();
  for (const auto& item : list) array.push_back({{"doc_id", item.doc}, {"weight", item.weight}});
  return array;
}

}  // namespace

Golden load_golden(const std::filesystem::path& path) {
  const auto doc = json::parse(read_file(path));
  Golden g;
  g.query = doc.at("query").get<std::string>();
  g.n = doc.at("n").get<std::size_t>();
  g.c = doc.at("c").get<std::size_t>();
  g.damping = doc.at("damping").get<double>();
  g.authorities = read_list(doc.at("authorities"));
  g.hubs = read_list(doc.at("hubs"));
  return g;
}

std::string dump_golden(const Golden& golden) {
  json doc = {{"query", golden.query},
              {"n", golden.n},
              {"c", golden.c},
              {"damping", golden.damping},
              {"authorities", write_list(golden.authorities)},
              {"hubs", write_list(golden.hubs)}};
  return doc.dump(2) + "\n";
}

std::string compare_ranked(const std::vector<RankedDoc>& actual,
                           const std::vector<RankedDoc>& expected, double tolerance,
                           double tie) {
  std::ostringstream why;
  if (actual.size() != expected.size()) {
    why << "length " << actual.size() << " != " << expected.size();
    return why.str();
  }
  std::size_t begin = 0;
  while (begin < expected.size()) {
    std::size_t end = begin + 1;
    while (end < expected.size() &&
           std::abs(expected[end].weight - expected[begin].weight) <= tie) {
      ++end;
    }
    std::set<DocId> want, got;
    for (std::size_t i = begin; i < end; ++i) {
      want.insert(expected[i].doc);
      got.insert(actual[i].doc);
    }
    if (want != got) {
      why << "positions " << begin << ".." << end - 1 << " hold different documents";
      return why.str();
    }
    for (std::size_t i = begin; i < end; ++i) {
      const auto match = std::find_if(actual.begin() + std::ptrdiff_t(begin),
                                      actual.begin() + std::ptrdiff_t(end),
                                      [&](const RankedDoc& r) { return r.doc == expected[i].doc; });
      if (std::abs(match->weight - expected[i].weight) > tolerance) {
        why << "doc " << expected[i].doc << " weight " << match->weight << " vs "
            << expected[i].weight;
        return why.str();
      }
    }
    begin = end;
  }
  return {};
}

}  // namespace swdrank::testing
