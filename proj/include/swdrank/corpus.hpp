#ifndef SWDRANK_CORPUS_HPP
#define SWDRANK_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "swdrank/tokenizer.hpp"

namespace swdrank {

using DocId = std::int64_t;

struct Triple {
  std::string subject;
  std::string predicate;
  std::string object;
  bool object_is_literal = false;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// SWO is a term-defining ontology, SWDB an individual-asserting database.
enum class DocumentKind { SWO, SWDB, Hybrid };

enum class RelationKind { TermRef, Imports, Extends, PriorVersion, None };

enum class LanguageTag { RDF, RDFS, OWL, DAML, UNKNOWN };

struct BasicMetadata {
  std::size_t triple_count = 0;
  std::size_t class_defs = 0;
  std::size_t property_defs = 0;
  std::size_t individual_count = 0;
  bool has_ontology_annotation = false;
  LanguageTag language_tag = LanguageTag::UNKNOWN;

  friend bool operator==(const BasicMetadata&, const BasicMetadata&) = default;
};

using KeywordBag = std::map<std::string, std::size_t>;

struct Document {
  DocId doc_id = 0;
  std::string uri;
  std::vector<Triple> triples;
  DocumentKind kind = DocumentKind::SWDB;
  KeywordBag keywords;
  BasicMetadata stats;
};

struct RelationEdge {
  DocId from_doc = 0;
  DocId to_doc = 0;
  RelationKind kind = RelationKind::None;
  std::string via_predicate;

  friend bool operator==(const RelationEdge&, const RelationEdge&) = default;
  friend auto operator<=>(const RelationEdge&, const RelationEdge&) = default;
};

struct LinkResult {
  std::vector<RelationEdge> edges;  // sorted, duplicates removed
  std::size_t unresolved = 0;       // object IRI resolved to no document
  std::size_t internal = 0;         // object resolved to the containing doc
};

std::string_view to_string(DocumentKind kind);
std::string_view to_string(RelationKind kind);
std::string_view to_string(LanguageTag tag);
/// Short relation code: TM/IN, IM, EX, PV (or "-" for None).
std::string_view relation_code(RelationKind kind);
DocumentKind parse_document_kind(std::string_view text);
RelationKind parse_relation_kind(std::string_view text);
LanguageTag parse_language_tag(std::string_view text);

/// Parses the line-oriented triple format. `used_ids` is the caller's
/// corpus; passing an id already in it raises DuplicateId.
Document parse_document(std::string_view source, std::string uri, DocId doc_id,
                        const std::set<DocId>& used_ids = {},
                        const TokenizerConfig& tokenizer = {});

/// Reads the optional `# uri: <IRI>` header from the first line.
std::string read_uri_header(std::string_view source);

RelationKind classify_relation(std::string_view predicate);

DocumentKind classify_document(const std::vector<Triple>& triples);

BasicMetadata compute_metadata(const std::vector<Triple>& triples);

KeywordBag extract_keywords(const Document& doc,
                            const TokenizerConfig& config = {});

/// Local name of an IRI: the fragment, else the last non-empty path segment.
std::string_view local_name(std::string_view iri);

/// True for `scheme:rest` with a letter-led scheme.
bool is_absolute_iri(std::string_view iri);

LinkResult link_corpus(const std::vector<Document>& docs);

}  // namespace swdrank

#endif  // SWDRANK_CORPUS_HPP
