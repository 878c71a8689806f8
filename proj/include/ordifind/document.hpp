#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ordifind/context.hpp"
#include "ordifind/factorize.hpp"
#include "ordifind/lattice.hpp"
#include "ordifind/metrics.hpp"

namespace ordifind {

inline constexpr std::string_view kDocumentVersion = "ordifind-factorization/1";

/// Schema violations when reading a factorization document.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DocumentTick {
  std::size_t position;              // 1-based
  ConceptId concept_id;
  std::vector<std::size_t> gained;   // attribute indices, ascending

  bool operator==(const DocumentTick&) const = default;
};

struct DocumentFactor {
  std::vector<DocumentTick> ticks;
  std::vector<ConceptId> chain;
  std::size_t new_coverage = 0;
  std::size_t size = 0;

  bool operator==(const DocumentFactor&) const = default;
};

struct DocumentStats {
  std::size_t concepts = 0;
  std::size_t cover_edges = 0;
  std::size_t factors = 0;
  std::size_t incidences = 0;

  bool operator==(const DocumentStats&) const = default;
};

/// Self-contained exchange format consumed by the exploration UI. Tick
/// labels are stored as per-tick attribute gains; cumulative sets are
/// rebuilt by the reader.
struct FactorizationDocument {
  std::string version{kDocumentVersion};
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  /// Per-object attribute indices. Absent for --no-incidence exports.
  std::optional<std::vector<std::vector<std::size_t>>> incidence;
  std::vector<DocumentFactor> factors;
  DocumentStats stats;

  bool operator==(const FactorizationDocument&) const = default;
};

FactorizationDocument make_document(const FormalContext& ctx, const ConceptLattice& lat,
                                    const Factorization& factorization,
                                    bool include_incidence = true);

/// Deterministic JSON (sorted keys, two-space indent, trailing newline).
std::string export_document(const FactorizationDocument& doc);
std::string export_factorization(const FormalContext& ctx, const ConceptLattice& lat,
                                 const Factorization& factorization, bool include_incidence = true);

/// Throws DocumentError on malformed JSON or schema mismatch.
FactorizationDocument import_document(std::string_view json_text);

/// Rebuilds the context stored in a document (requires incidence).
FormalContext document_context(const FactorizationDocument& doc);

/// Factorization stored in a document, over document_context(doc). The
/// covered relation is the full incidence, as for any complete factorization.
Factorization document_factorization(const FactorizationDocument& doc);

/// Position of object g in factor i computed from the document alone.
std::size_t document_position(const FactorizationDocument& doc, std::size_t factor,
                              std::size_t g);

/// rank_objects computed from the document alone.
std::vector<RankedObject> document_rank(const FactorizationDocument& doc, const Selection& sel);

struct PlotPoint {
  std::string object;
  std::size_t x;  // position in the largest factor
  std::size_t y;  // position in the second largest factor (0 if absent)

  bool operator==(const PlotPoint&) const = default;
};

/// Coordinates of every object on the two largest factors (by relation size,
/// ties by factor order).
std::vector<PlotPoint> plot2d(const FormalContext& ctx, const Factorization& factorization);

/// Debug dump of concepts and covers with names.
std::string lattice_to_json(const FormalContext& ctx, const ConceptLattice& lat);

}  // namespace ordifind
