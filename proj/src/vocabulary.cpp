#include "swdrank/vocabulary.hpp"

#include <array>
#include <utility>

namespace swdrank::vocab {
namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 4>
    kPrefixes{{{"rdf:", kRdf}, {"rdfs:", kRdfs}, {"owl:", kOwl}, {"daml:", kDaml}}};

}  // namespace

std::string expand(std::string_view iri) {
  for (const auto& [prefix, ns] : kPrefixes) {
    if (iri.starts_with(prefix) && !iri.substr(prefix.size()).starts_with("//")) {
      return std::string(ns).append(iri.substr(prefix.size()));
    }
  }
  return std::string(iri);
}

bool is_vocabulary_term(std::string_view iri) {
  for (const auto& entry : kPrefixes) {
    if (iri.starts_with(entry.second)) return true;
  }
  return false;
}

}  // namespace swdrank::vocab
