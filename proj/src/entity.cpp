#include "locus/entity.hpp"

#include <utility>

namespace locus {

Entity Entity::statement(std::string file, int line) {
  Entity e;
  e.kind = EntityKind::Statement;
  e.file = std::move(file);
  e.line = line;
  return e;
}

Entity Entity::function(std::string file, std::string name, int start_line,
                        int end_line) {
  Entity e;
  e.kind = EntityKind::Function;
  e.file = std::move(file);
  e.name = std::move(name);
  e.line = start_line;
  e.end_line = end_line;
  return e;
}

std::string Entity::render() const {
  if (kind == EntityKind::Statement)
    return file + ":" + std::to_string(line);
  return file + ":" + name + ":" + std::to_string(line) + "-" +
         std::to_string(end_line);
}

}  // namespace locus
