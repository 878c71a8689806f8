#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ordifind/bitset.hpp"
#include "ordifind/relation.hpp"

namespace ordifind {

/// Raised for malformed context files. line() is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class ContextFormat { kBurmeister, kCsv };

/// A formal context (G, M, I). Objects and attributes are addressed by their
/// position in the input; names only matter at I/O boundaries.
///
/// The incidence is kept twice: rows (object -> attributes) and columns
/// (attribute -> objects), so both derivations are plain intersection loops.
/// Immutable after construction.
class FormalContext {
 public:
  FormalContext() = default;
  /// Throws std::invalid_argument on duplicate names or a relation whose shape
  /// does not match the name lists.
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                Relation incidence);

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_attributes() const { return attributes_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }

  const Relation& incidence() const { return incidence_; }
  bool has(std::size_t g, std::size_t m) const { return incidence_.contains(g, m); }
  std::size_t num_incidences() const { return num_incidences_; }

  /// g′
  const Bitset& object_row(std::size_t g) const { return incidence_.row(g); }
  /// m′
  const Bitset& attribute_column(std::size_t m) const { return columns_[m]; }

  /// A′: the attributes shared by every object of A (all of M for A = ∅).
  Bitset derive_extent(const Bitset& objects) const;
  std::vector<std::size_t> derive_extent(const std::vector<std::size_t>& objects) const;

  /// B′: the objects having every attribute of B (all of G for B = ∅).
  Bitset derive_intent(const Bitset& attributes) const;
  std::vector<std::size_t> derive_intent(const std::vector<std::size_t>& attributes) const;

  /// Index lookup by name; throws std::invalid_argument if unknown.
  std::size_t object_index(std::string_view name) const;
  std::size_t attribute_index(std::string_view name) const;

  bool operator==(const FormalContext& o) const {
    return objects_ == o.objects_ && attributes_ == o.attributes_ && incidence_ == o.incidence_;
  }

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  Relation incidence_;
  std::vector<Bitset> columns_;
  std::size_t num_incidences_ = 0;
};

FormalContext parse_context(std::string_view text, ContextFormat format);
std::string serialize_context(const FormalContext& ctx, ContextFormat format);

/// Picks the format from a file extension (.csv -> CSV, otherwise Burmeister).
ContextFormat format_for_path(std::string_view path);
FormalContext load_context(const std::string& path);

}  // namespace ordifind
