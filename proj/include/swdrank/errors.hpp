#ifndef SWDRANK_ERRORS_HPP
#define SWDRANK_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swdrank {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- corpus ----------------------------------------------------------------

class MalformedLine : public Error {
 public:
  explicit MalformedLine(std::size_t line, const std::string& detail = {})
      : Error("malformed line " + std::to_string(line) +
              (detail.empty() ? "" : ": " + detail)),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateId : public Error {
 public:
  explicit DuplicateId(std::int64_t id)
      : Error("duplicate document id " + std::to_string(id)), id_(id) {}
  std::int64_t id() const { return id_; }

 private:
  std::int64_t id_;
};

// ---- graph -----------------------------------------------------------------

class UnknownLabel : public Error {
 public:
  UnknownLabel(std::size_t node, const std::string& label)
      : Error("node " + std::to_string(node) + " has label '" + label +
              "' which is not in the schema"),
        node_(node) {}
  std::size_t node() const { return node_; }

 private:
  std::size_t node_;
};

class UnmappableEdge : public Error {
 public:
  UnmappableEdge(std::size_t edge, const std::string& what)
      : Error("edge " + std::to_string(edge) + " (" + what +
              ") has no matching schema edge"),
        edge_(edge) {}
  std::size_t edge() const { return edge_; }

 private:
  std::size_t edge_;
};

class MissingRate : public Error {
 public:
  explicit MissingRate(const std::string& role)
      : Error("no transfer rate configured for role '" + role + "'") {}
};

class RateOutOfRange : public Error {
 public:
  explicit RateOutOfRange(const std::string& role)
      : Error("transfer rate for role '" + role + "' is outside [0, 1]") {}
};

// ---- ranking ---------------------------------------------------------------

class EmptyGraph : public Error {
 public:
  EmptyGraph() : Error("graph has no nodes") {}
};

class MassExceedsOne : public Error {
 public:
  explicit MassExceedsOne(std::vector<std::size_t> nodes)
      : Error(describe(nodes)), nodes_(std::move(nodes)) {}
  const std::vector<std::size_t>& nodes() const { return nodes_; }

 private:
  static std::string describe(const std::vector<std::size_t>& nodes) {
    std::string text = "outgoing transfer mass exceeds 1 at node(s)";
    const std::size_t shown = nodes.size() < 20 ? nodes.size() : 20;
    for (std::size_t i = 0; i < shown; ++i) text += " " + std::to_string(nodes[i]);
    if (shown < nodes.size()) {
      text += " ... (" + std::to_string(nodes.size()) + " total)";
    }
    return text;
  }

  std::vector<std::size_t> nodes_;
};

class SingularSystem : public Error {
 public:
  SingularSystem() : Error("linear system is singular") {}
};

// ---- index / query ---------------------------------------------------------

class MissingScore : public Error {
 public:
  explicit MissingScore(std::int64_t doc)
      : Error("document " + std::to_string(doc) + " has no rank score"),
        doc_(doc) {}
  std::int64_t doc() const { return doc_; }

 private:
  std::int64_t doc_;
};

class NoMatch : public Error {
 public:
  NoMatch() : Error("no document matches the query") {}
};

class DegenerateSubGraph : public Error {
 public:
  DegenerateSubGraph() : Error("sub-graph has no edges; HITS is undefined") {}
};

class UnknownDocument : public Error {
 public:
  explicit UnknownDocument(const std::string& key)
      : Error("unknown document '" + key + "'") {}
};

// ---- persistence / configuration -------------------------------------------

class IoFailure : public Error {
 public:
  IoFailure(const std::string& path, const std::string& cause)
      : Error("I/O failure on " + path + ": " + cause) {}
};

class VersionMismatch : public Error {
 public:
  VersionMismatch(int found, int expected)
      : Error("state format_version " + std::to_string(found) +
              " is not supported (expected " + std::to_string(expected) + ")"),
        found_(found),
        expected_(expected) {}
  int found() const { return found_; }
  int expected() const { return expected_; }

 private:
  int found_;
  int expected_;
};

class CorruptRecord : public Error {
 public:
  CorruptRecord(const std::string& file, std::size_t line,
                const std::string& detail = {})
      : Error("corrupt record in " + file + " at line " + std::to_string(line) +
              (detail.empty() ? "" : ": " + detail)),
        file_(file),
        line_(line) {}
  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

class MissingFile : public Error {
 public:
  explicit MissingFile(const std::string& name)
      : Error("missing state file " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace swdrank

#endif  // SWDRANK_ERRORS_HPP
