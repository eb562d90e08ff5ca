#include "swdrank/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "swdrank/errors.hpp"
#include "swdrank/vocabulary.hpp"

namespace swdrank {
namespace {

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Cursor over one statement line.
class LineReader {
 public:
  LineReader(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  bool at(char ch) const { return pos_ < text_.size() && text_[pos_] == ch; }

  std::string iri(const char* role) {
    skip_space();
    if (!at('<')) fail(std::string("expected <IRI> for ") + role);
    const auto close = text_.find('>', pos_ + 1);
    if (close == std::string_view::npos) fail("unterminated IRI");
    std::string value(text_.substr(pos_ + 1, close - pos_ - 1));
    if (value.empty()) fail(std::string("empty IRI for ") + role);
    pos_ = close + 1;
    return value;
  }

  std::string literal() {
    std::string value;
    ++pos_;  // opening quote
    while (pos_ < text_.size()) {
      const char ch = text_[pos_++];
      if (ch == '"') return value;
      if (ch != '\\') {
        value.push_back(ch);
        continue;
      }
      if (pos_ >= text_.size()) break;
      switch (text_[pos_++]) {
        case '"': value.push_back('"'); break;
        case '\\': value.push_back('\\'); break;
        case 'n': value.push_back('\n'); break;
        case 't': value.push_back('\t'); break;
        case 'r': value.push_back('\r'); break;
        default: fail("unknown escape in literal");
      }
    }
    fail("unterminated literal");
  }

  void finish() {
    skip_space();
    if (!at('.')) fail("expected terminating '.'");
    ++pos_;
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters after '.'");
  }

  [[noreturn]] void fail(const std::string& detail) const {
    throw MalformedLine(line_, detail);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

Triple parse_statement(std::string_view text, std::size_t line) {
  LineReader reader(text, line);
  Triple t;
  t.subject = reader.iri("subject");
  t.predicate = reader.iri("predicate");
  reader.skip_space();
  if (reader.at('"')) {
    t.object = reader.literal();
    t.object_is_literal = true;
    if (t.object.empty()) reader.fail("empty literal");
  } else {
    t.object = reader.iri("object");
  }
  reader.finish();
  if (!is_absolute_iri(t.subject)) reader.fail("subject is not an absolute IRI");
  if (!is_absolute_iri(t.predicate)) reader.fail("predicate is not an absolute IRI");
  return t;
}

const std::string& rdf_type() {
  static const std::string iri = vocab::rdf("type");
  return iri;
}

bool is_term_definition_class(std::string_view object) {
  static const std::unordered_set<std::string> classes = {
      vocab::rdfs("Class"), vocab::owl("Class"), vocab::rdf("Property")};
  return classes.contains(std::string(object));
}

bool is_class_def(std::string_view object) {
  static const std::unordered_set<std::string> classes = {
      vocab::rdfs("Class"), vocab::owl("Class"), vocab::daml("Class")};
  return classes.contains(std::string(object));
}

bool is_property_def(std::string_view object) {
  static const std::unordered_set<std::string> classes = {
      vocab::rdf("Property"), vocab::owl("ObjectProperty"),
      vocab::owl("DatatypeProperty"), vocab::owl("AnnotationProperty"),
      vocab::daml("Property"), vocab::daml("ObjectProperty"),
      vocab::daml("DatatypeProperty")};
  return classes.contains(std::string(object));
}

bool is_ontology_annotation(const Triple& t) {
  static const std::unordered_set<std::string> predicates = {
      vocab::owl("versionInfo"), vocab::owl("imports"), vocab::owl("priorVersion"),
      vocab::owl("backwardCompatibleWith"), vocab::owl("incompatibleWith"),
      vocab::daml("versionInfo"), vocab::daml("imports")};
  if (predicates.contains(t.predicate)) return true;
  return t.predicate == rdf_type() && !t.object_is_literal &&
         (t.object == vocab::owl("Ontology") || t.object == vocab::daml("Ontology"));
}

bool is_individual_assertion(const Triple& t) {
  return t.predicate == rdf_type() && !t.object_is_literal &&
         !vocab::is_vocabulary_term(t.object);
}

bool is_definition(const Triple& t) {
  return t.predicate == rdf_type() && !t.object_is_literal &&
         is_term_definition_class(t.object);
}

void add_tokens(KeywordBag& bag, std::string_view text, const TokenizerConfig& config) {
  for (auto& token : tokenize(text, config)) ++bag[std::move(token)];
}

std::string_view namespace_of(std::string_view iri) {
  const auto hash = iri.find('#');
  return hash == std::string_view::npos ? iri : iri.substr(0, hash);
}

}  // namespace

std::string_view to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::SWO: return "SWO";
    case DocumentKind::SWDB: return "SWDB";
    case DocumentKind::Hybrid: return "Hybrid";
  }
  return "SWDB";
}

std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::TermRef: return "TermRef";
    case RelationKind::Imports: return "Imports";
    case RelationKind::Extends: return "Extends";
    case RelationKind::PriorVersion: return "PriorVersion";
    case RelationKind::None: return "None";
  }
  return "None";
}

std::string_view to_string(LanguageTag tag) {
  switch (tag) {
    case LanguageTag::RDF: return "RDF";
    case LanguageTag::RDFS: return "RDFS";
    case LanguageTag::OWL: return "OWL";
    case LanguageTag::DAML: return "DAML";
    case LanguageTag::UNKNOWN: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string_view relation_code(RelationKind kind) {
  switch (kind) {
    case RelationKind::TermRef: return "TM/IN";
    case RelationKind::Imports: return "IM";
    case RelationKind::Extends: return "EX";
    case RelationKind::PriorVersion: return "PV";
    case RelationKind::None: return "-";
  }
  return "-";
}

DocumentKind parse_document_kind(std::string_view text) {
  for (auto kind : {DocumentKind::SWO, DocumentKind::SWDB, DocumentKind::Hybrid}) {
    if (to_string(kind) == text) return kind;
  }
  throw Error("unknown document kind '" + std::string(text) + "'");
}

RelationKind parse_relation_kind(std::string_view text) {
  for (auto kind : {RelationKind::TermRef, RelationKind::Imports,
                    RelationKind::Extends, RelationKind::PriorVersion,
                    RelationKind::None}) {
    if (to_string(kind) == text) return kind;
  }
  throw Error("unknown relation kind '" + std::string(text) + "'");
}

LanguageTag parse_language_tag(std::string_view text) {
  for (auto tag : {LanguageTag::RDF, LanguageTag::RDFS, LanguageTag::OWL,
                   LanguageTag::DAML, LanguageTag::UNKNOWN}) {
    if (to_string(tag) == text) return tag;
  }
  throw Error("unknown language tag '" + std::string(text) + "'");
}

bool is_absolute_iri(std::string_view iri) {
  const auto colon = iri.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == iri.size()) {
    return false;
  }
  if (!std::isalpha(static_cast<unsigned char>(iri.front()))) return false;
  return std::all_of(iri.begin(), iri.begin() + static_cast<std::ptrdiff_t>(colon),
                     [](char ch) {
                       const auto b = static_cast<unsigned char>(ch);
                       return std::isalnum(b) || ch == '+' || ch == '-' || ch == '.';
                     });
}

std::string_view local_name(std::string_view iri) {
  const auto hash = iri.rfind('#');
  if (hash != std::string_view::npos && hash + 1 < iri.size()) {
    return iri.substr(hash + 1);
  }
  if (hash != std::string_view::npos) iri = iri.substr(0, hash);
  while (!iri.empty() && iri.back() == '/') iri.remove_suffix(1);
  const auto cut = iri.find_last_of("/:");
  return cut == std::string_view::npos ? iri : iri.substr(cut + 1);
}

std::string read_uri_header(std::string_view source) {
  const auto end = source.find('\n');
  auto first = trim(source.substr(0, end));
  constexpr std::string_view kHeader = "# uri:";
  if (!first.starts_with(kHeader)) return {};
  first = trim(first.substr(kHeader.size()));
  if (first.size() < 2 || first.front() != '<' || first.back() != '>') return {};
  return std::string(first.substr(1, first.size() - 2));
}

Document parse_document(std::string_view source, std::string uri, DocId doc_id,
                        const std::set<DocId>& used_ids,
                        const TokenizerConfig& tokenizer) {
  if (used_ids.contains(doc_id)) throw DuplicateId(doc_id);
  Document doc;
  doc.doc_id = doc_id;
  doc.uri = std::move(uri);
  std::size_t line_no = 0;
  while (!source.empty()) {
    ++line_no;
    const auto end = source.find('\n');
    const auto line = trim(source.substr(0, end));
    source = end == std::string_view::npos ? std::string_view{} : source.substr(end + 1);
    if (line.empty() || line.front() == '#') continue;
    doc.triples.push_back(parse_statement(line, line_no));
  }
  doc.kind = classify_document(doc.triples);
  doc.stats = compute_metadata(doc.triples);
  doc.keywords = extract_keywords(doc, tokenizer);
  return doc;
}

RelationKind classify_relation(std::string_view predicate) {
  static const std::unordered_map<std::string, RelationKind> table = [] {
    std::unordered_map<std::string, RelationKind> t;
    for (const char* p : {"owl:termRef", "daml:termRef"}) {
      t.emplace(vocab::expand(p), RelationKind::TermRef);
    }
    for (const char* p : {"owl:imports", "daml:imports"}) {
      t.emplace(vocab::expand(p), RelationKind::Imports);
    }
    for (const char* p :
         {"rdfs:subClassOf", "rdfs:subPropertyOf", "owl:disjointWith",
          "owl:equivalentClass", "owl:equivalentProperty", "owl:complementOf",
          "owl:inverseOf", "owl:intersectionOf", "owl:unionOf",
          "daml:sameClassAs", "daml:samePropertyAs", "daml:inverseOf",
          "daml:disjointWith", "daml:complementOf", "daml:unionOf",
          "daml:disjointUnionOf", "daml:intersectionOf"}) {
      t.emplace(vocab::expand(p), RelationKind::Extends);
    }
    for (const char* p :
         {"owl:priorVersion", "owl:DeprecatedProperty", "owl:DeprecatedClass",
          "owl:backwardCompatibleWith", "owl:incompatibleWith"}) {
      t.emplace(vocab::expand(p), RelationKind::PriorVersion);
    }
    return t;
  }();
  const auto it = table.find(vocab::expand(predicate));
  return it == table.end() ? RelationKind::None : it->second;
}

DocumentKind classify_document(const std::vector<Triple>& triples) {
  bool definitions = false;
  bool individuals = false;
  for (const auto& t : triples) {
    definitions = definitions || is_definition(t);
    individuals = individuals || is_individual_assertion(t);
  }
  if (definitions && individuals) return DocumentKind::Hybrid;
  if (definitions) return DocumentKind::SWO;
  return DocumentKind::SWDB;
}

BasicMetadata compute_metadata(const std::vector<Triple>& triples) {
  BasicMetadata meta;
  meta.triple_count = triples.size();
  std::set<std::string> individuals;
  bool owl = false, daml = false, rdfs = false;
  auto note_namespace = [&](std::string_view iri) {
    owl = owl || iri.starts_with(vocab::kOwl);
    daml = daml || iri.starts_with(vocab::kDaml);
    rdfs = rdfs || iri.starts_with(vocab::kRdfs);
  };
  for (const auto& t : triples) {
    note_namespace(t.predicate);
    if (t.predicate == rdf_type() && !t.object_is_literal) {
      note_namespace(t.object);
      if (is_class_def(t.object)) ++meta.class_defs;
      if (is_property_def(t.object)) ++meta.property_defs;
    }
    if (is_individual_assertion(t)) individuals.insert(t.subject);
    meta.has_ontology_annotation = meta.has_ontology_annotation || is_ontology_annotation(t);
  }
  meta.individual_count = individuals.size();
  if (owl) {
    meta.language_tag = LanguageTag::OWL;
  } else if (daml) {
    meta.language_tag = LanguageTag::DAML;
  } else if (rdfs) {
    meta.language_tag = LanguageTag::RDFS;
  } else {
    meta.language_tag = LanguageTag::RDF;
  }
  return meta;
}

KeywordBag extract_keywords(const Document& doc, const TokenizerConfig& config) {
  KeywordBag bag;
  for (const auto& t : doc.triples) {
    add_tokens(bag, local_name(t.subject), config);
    if (t.object_is_literal) {
      add_tokens(bag, t.object, config);
    } else {
      add_tokens(bag, local_name(t.object), config);
    }
  }
  return bag;
}

LinkResult link_corpus(const std::vector<Document>& docs) {
  std::unordered_map<std::string, DocId> by_uri;
  std::unordered_map<std::string, std::vector<DocId>> definers;
  std::unordered_map<DocId, const Document*> by_id;
  for (const auto& doc : docs) {
    if (!by_id.emplace(doc.doc_id, &doc).second) throw DuplicateId(doc.doc_id);
    by_uri.emplace(doc.uri, doc.doc_id);
    for (const auto& t : doc.triples) {
      auto& list = definers[t.subject];
      if (list.empty() || list.back() != doc.doc_id) list.push_back(doc.doc_id);
    }
  }
  for (auto& entry : definers) {
    auto& list = entry.second;
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  auto resolve_term = [&](const std::string& iri) -> std::optional<DocId> {
    const auto it = definers.find(iri);
    if (it == definers.end()) return std::nullopt;
    const auto ns = namespace_of(iri);
    for (const DocId id : it->second) {
      if (by_id.at(id)->uri == ns) return id;
    }
    return it->second.front();
  };

  LinkResult result;
  for (const auto& doc : docs) {
    for (const auto& t : doc.triples) {
      const auto kind = classify_relation(t.predicate);
      if (kind == RelationKind::None) continue;
      std::optional<DocId> target;
      if (!t.object_is_literal) {
        if (kind == RelationKind::Imports || kind == RelationKind::PriorVersion) {
          if (const auto it = by_uri.find(t.object); it != by_uri.end()) {
            target = it->second;
          }
        }
        if (!target) target = resolve_term(t.object);
      }
      if (!target) {
        ++result.unresolved;
      } else if (*target == doc.doc_id) {
        ++result.internal;
      } else {
        result.edges.push_back({doc.doc_id, *target, kind, t.predicate});
      }
    }
  }
  std::sort(result.edges.begin(), result.edges.end());
  result.edges.erase(std::unique(result.edges.begin(), result.edges.end()),
                     result.edges.end());
  return result;
}

}  // namespace swdrank
