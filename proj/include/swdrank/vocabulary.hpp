#ifndef SWDRANK_VOCABULARY_HPP
#define SWDRANK_VOCABULARY_HPP

#include <string>
#include <string_view>

// Namespaces of the RDF family vocabularies and a fixed prefix table.
namespace swdrank::vocab {

inline constexpr std::string_view kRdf =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kDaml = "http://www.daml.org/2001/03/daml+oil#";

/// Expands `owl:`, `rdfs:`, `rdf:` and `daml:` prefixed names to full IRIs.
/// Anything else is returned unchanged.
std::string expand(std::string_view iri);

/// Full IRI of a term in one of the built-in namespaces.
inline std::string rdf(std::string_view local) {
  return std::string(kRdf).append(local);
}
inline std::string rdfs(std::string_view local) {
  return std::string(kRdfs).append(local);
}
inline std::string owl(std::string_view local) {
  return std::string(kOwl).append(local);
}
inline std::string daml(std::string_view local) {
  return std::string(kDaml).append(local);
}

/// True when `iri` lives in one of the four built-in vocabulary namespaces.
bool is_vocabulary_term(std::string_view iri);

}  // namespace swdrank::vocab

#endif  // SWDRANK_VOCABULARY_HPP
