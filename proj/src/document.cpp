#include "ordifind/document.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace ordifind {

using nlohmann::json;

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DocumentError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DocumentError(std::string("field '") + key + "': " + e.what());
  }
}

void check_indices(const std::vector<std::size_t>& v, std::size_t n, const char* what) {
  for (std::size_t i : v)
    if (i >= n) throw DocumentError(std::string(what) + " index " + std::to_string(i) + " out of range");
}

Bitset required_attributes(const FactorizationDocument& doc, const Selection& sel) {
  if (sel.positions.size() != doc.factors.size())
    throw std::invalid_argument("selection has " + std::to_string(sel.positions.size()) +
                                " positions for " + std::to_string(doc.factors.size()) + " factors");
  Bitset required(doc.attributes.size());
  for (std::size_t i = 0; i < doc.factors.size(); ++i) {
    const auto& ticks = doc.factors[i].ticks;
    if (sel.positions[i] > ticks.size())
      throw std::invalid_argument("position " + std::to_string(sel.positions[i]) + " of factor " +
                                  std::to_string(i + 1) + " out of range");
    for (std::size_t t = 0; t < sel.positions[i]; ++t)
      for (std::size_t m : ticks[t].gained) required.set(m);
  }
  return required;
}

const std::vector<std::vector<std::size_t>>& require_incidence(const FactorizationDocument& doc) {
  if (!doc.incidence) throw DocumentError("document was exported without incidence");
  return *doc.incidence;
}

}  // namespace

FactorizationDocument make_document(const FormalContext& ctx, const ConceptLattice& lat,
                                    const Factorization& factorization, bool include_incidence) {
  FactorizationDocument doc;
  doc.objects = ctx.objects();
  doc.attributes = ctx.attributes();
  if (include_incidence) {
    doc.incidence.emplace();
    for (std::size_t g = 0; g < ctx.num_objects(); ++g)
      doc.incidence->push_back(ctx.object_row(g).indices());
  }
  for (const auto& f : factorization.factors) {
    DocumentFactor df;
    df.new_coverage = f.new_coverage;
    df.size = f.size;
    df.chain = f.chain.concept_ids;
    for (std::size_t t = 0; t < f.ticks.size(); ++t)
      df.ticks.push_back({t + 1, f.ticks[t].concept_id, f.ticks[t].gained.indices()});
    doc.factors.push_back(std::move(df));
  }
  doc.stats = {lat.size(), lat.num_cover_edges(), factorization.factors.size(),
               ctx.num_incidences()};
  return doc;
}

std::string export_document(const FactorizationDocument& doc) {
  json j;
  j["version"] = doc.version;
  j["objects"] = doc.objects;
  j["attributes"] = doc.attributes;
  j["incidence"] = doc.incidence ? json(*doc.incidence) : json(nullptr);
  j["factors"] = json::array();
  for (const auto& f : doc.factors) {
    json jf;
    jf["new_coverage"] = f.new_coverage;
    jf["size"] = f.size;
    jf["chain"] = f.chain;
    jf["ticks"] = json::array();
    for (const auto& t : f.ticks)
      jf["ticks"].push_back({{"position", t.position}, {"concept", t.concept_id}, {"gained", t.gained}});
    j["factors"].push_back(std::move(jf));
  }
  j["stats"] = {{"concepts", doc.stats.concepts},
                {"cover_edges", doc.stats.cover_edges},
                {"factors", doc.stats.factors},
                {"incidences", doc.stats.incidences}};
  return j.dump(2) + "\n";
}

std::string export_factorization(const FormalContext& ctx, const ConceptLattice& lat,
                                 const Factorization& factorization, bool include_incidence) {
  return export_document(make_document(ctx, lat, factorization, include_incidence));
}

FactorizationDocument import_document(std::string_view json_text) {
  json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded()) throw DocumentError("document is not valid JSON");
  if (!j.is_object()) throw DocumentError("document root must be an object");

  FactorizationDocument doc;
  doc.version = field<std::string>(j, "version");
  if (doc.version != kDocumentVersion)
    throw DocumentError("unsupported document version '" + doc.version + "'");
  doc.objects = field<std::vector<std::string>>(j, "objects");
  doc.attributes = field<std::vector<std::string>>(j, "attributes");
  if (!j.contains("incidence")) throw DocumentError("missing field 'incidence'");
  if (!j["incidence"].is_null()) {
    doc.incidence = field<std::vector<std::vector<std::size_t>>>(j, "incidence");
    if (doc.incidence->size() != doc.objects.size())
      throw DocumentError("incidence has " + std::to_string(doc.incidence->size()) +
                          " rows for " + std::to_string(doc.objects.size()) + " objects");
    for (const auto& row : *doc.incidence) check_indices(row, doc.attributes.size(), "attribute");
  }

  const json& factors = j.contains("factors") ? j["factors"] : json();
  if (!factors.is_array()) throw DocumentError("field 'factors' must be an array");
  for (const auto& jf : factors) {
    DocumentFactor f;
    f.new_coverage = field<std::size_t>(jf, "new_coverage");
    f.size = field<std::size_t>(jf, "size");
    f.chain = field<std::vector<ConceptId>>(jf, "chain");
    const json& ticks = jf.contains("ticks") ? jf["ticks"] : json();
    if (!ticks.is_array()) throw DocumentError("field 'ticks' must be an array");
    for (const auto& jt : ticks) {
      DocumentTick t{field<std::size_t>(jt, "position"), field<ConceptId>(jt, "concept"),
                     field<std::vector<std::size_t>>(jt, "gained")};
      if (t.position != f.ticks.size() + 1) throw DocumentError("tick positions must be 1, 2, ...");
      check_indices(t.gained, doc.attributes.size(), "attribute");
      f.ticks.push_back(std::move(t));
    }
    doc.factors.push_back(std::move(f));
  }

  const json& stats = j.contains("stats") ? j["stats"] : json();
  doc.stats = {field<std::size_t>(stats, "concepts"), field<std::size_t>(stats, "cover_edges"),
               field<std::size_t>(stats, "factors"), field<std::size_t>(stats, "incidences")};
  return doc;
}

FormalContext document_context(const FactorizationDocument& doc) {
  const auto& incidence = require_incidence(doc);
  Relation rel(doc.objects.size(), doc.attributes.size());
  for (std::size_t g = 0; g < incidence.size(); ++g)
    for (std::size_t m : incidence[g]) rel.insert(g, m);
  return FormalContext(doc.objects, doc.attributes, std::move(rel));
}

Factorization document_factorization(const FactorizationDocument& doc) {
  Factorization out;
  for (const auto& df : doc.factors) {
    OrdinalFactor f;
    f.chain.concept_ids = df.chain;
    f.new_coverage = df.new_coverage;
    f.size = df.size;
    for (const auto& t : df.ticks)
      f.ticks.push_back({t.concept_id, Bitset::from_indices(doc.attributes.size(), t.gained)});
    out.factors.push_back(std::move(f));
  }
  out.covered = document_context(doc).incidence();
  return out;
}

std::size_t document_position(const FactorizationDocument& doc, std::size_t factor, std::size_t g) {
  const auto& incidence = require_incidence(doc);
  if (factor >= doc.factors.size() || g >= doc.objects.size())
    throw std::invalid_argument("factor or object index out of range");
  Bitset row = Bitset::from_indices(doc.attributes.size(), incidence[g]);
  std::size_t r = 0;
  for (const auto& t : doc.factors[factor].ticks) {
    bool supported =
        std::all_of(t.gained.begin(), t.gained.end(), [&](std::size_t m) { return row.test(m); });
    if (!supported) break;
    ++r;
  }
  return r;
}

std::vector<RankedObject> document_rank(const FactorizationDocument& doc, const Selection& sel) {
  const auto& incidence = require_incidence(doc);
  Bitset required = required_attributes(doc, sel);
  std::vector<RankedObject> out;
  for (std::size_t g = 0; g < doc.objects.size(); ++g) {
    Bitset row = Bitset::from_indices(doc.attributes.size(), incidence[g]);
    out.push_back({g, required.count_and_not(row)});
  }
  std::stable_sort(out.begin(), out.end(), [](const RankedObject& a, const RankedObject& b) {
    return a.distance < b.distance;
  });
  return out;
}

std::vector<PlotPoint> plot2d(const FormalContext& ctx, const Factorization& factorization) {
  std::vector<std::size_t> order(factorization.factors.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return factorization.factors[a].size > factorization.factors[b].size;
  });
  std::vector<PlotPoint> out;
  for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
    PlotPoint p{ctx.objects()[g], 0, 0};
    if (order.size() > 0) p.x = position(ctx, factorization.factors[order[0]], g);
    if (order.size() > 1) p.y = position(ctx, factorization.factors[order[1]], g);
    out.push_back(std::move(p));
  }
  return out;
}

std::string lattice_to_json(const FormalContext& ctx, const ConceptLattice& lat) {
  auto names = [](const Bitset& b, const std::vector<std::string>& all) {
    json arr = json::array();
    b.for_each([&](std::size_t i) { arr.push_back(all[i]); });
    return arr;
  };
  json j;
  j["top"] = lat.top();
  j["bottom"] = lat.bottom();
  j["concepts"] = json::array();
  for (ConceptId id = 0; id < lat.size(); ++id) {
    const auto& c = lat.concept_at(id);
    j["concepts"].push_back({{"id", id},
                             {"extent", names(c.extent, ctx.objects())},
                             {"intent", names(c.intent, ctx.attributes())},
                             {"upper_covers", lat.upper_covers(id)}});
  }
  return j.dump(2) + "\n";
}

}  // namespace ordifind
