#pragma once

#include <compare>
#include <string>

namespace locus {

enum class EntityKind { Statement, Function };

// A localizable program unit. Statement entities are (file, line); function
// entities carry a qualified name plus a [start_line, end_line] span.
// Identity is (kind, file, line) for statements and (kind, file, name) for
// functions; ordering is (file, line, name), which fixes the serialization
// order inside ranking tie groups.
struct Entity {
  EntityKind kind = EntityKind::Statement;
  std::string file;
  int line = 0;      // statement line, or function start line
  int end_line = 0;  // function kind only
  std::string name;  // function kind only (qualified, e.g. "outer.inner")

  static Entity statement(std::string file, int line);
  static Entity function(std::string file, std::string name, int start_line,
                         int end_line);

  bool is_statement() const { return kind == EntityKind::Statement; }

  // Rendered form used in CSV output: "file:line" or "file:name:start-end".
  std::string render() const;

  friend bool operator==(const Entity& a, const Entity& b) {
    return a.kind == b.kind && a.file == b.file && a.line == b.line &&
           a.name == b.name;
  }
  friend bool operator!=(const Entity& a, const Entity& b) { return !(a == b); }
  friend bool operator<(const Entity& a, const Entity& b) {
    if (a.file != b.file) return a.file < b.file;
    if (a.line != b.line) return a.line < b.line;
    if (a.name != b.name) return a.name < b.name;
    return a.kind < b.kind;
  }
};

}  // namespace locus
