#include "ordifind/context.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace ordifind {

namespace {

void check_unique(const std::vector<std::string>& names, const char* kind) {
  std::unordered_map<std::string_view, std::size_t> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto [it, fresh] = seen.emplace(names[i], i);
    if (!fresh)
      throw std::invalid_argument(std::string("duplicate ") + kind + " name '" + names[i] + "'");
  }
}

void check_indices(const std::vector<std::size_t>& idx, std::size_t n, const char* kind) {
  for (std::size_t i : idx)
    if (i >= n)
      throw std::invalid_argument(std::string(kind) + " index " + std::to_string(i) +
                                  " out of range (size " + std::to_string(n) + ")");
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::size_t parse_count(const std::vector<std::string>& lines, std::size_t i) {
  if (i >= lines.size()) throw ParseError(i + 1, "unexpected end of file, expected a count");
  std::string t = trim(lines[i]);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
    throw ParseError(i + 1, "expected a non-negative count, got '" + lines[i] + "'");
  return value;
}

FormalContext parse_burmeister(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty() || trim(lines[0]) != "B")
    throw ParseError(1, "missing Burmeister magic line 'B'");
  // Line 2 is conventionally blank but some writers store a context name there.
  std::size_t i = 2;
  const std::size_t n_objects = parse_count(lines, i++);
  const std::size_t n_attributes = parse_count(lines, i++);
  if (i < lines.size() && trim(lines[i]).empty()) ++i;

  auto read_names = [&](std::size_t n, const char* kind) {
    std::vector<std::string> names;
    names.reserve(n);
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (i >= lines.size())
        throw ParseError(i + 1, std::string("unexpected end of file while reading ") + kind +
                                    " names");
      if (!seen.emplace(lines[i], i).second)
        throw ParseError(i + 1, std::string("duplicate ") + kind + " name '" + lines[i] + "'");
      names.push_back(lines[i]);
    }
    return names;
  };
  auto objects = read_names(n_objects, "object");
  auto attributes = read_names(n_attributes, "attribute");

  Relation incidence(n_objects, n_attributes);
  for (std::size_t g = 0; g < n_objects; ++g, ++i) {
    if (i >= lines.size()) throw ParseError(i + 1, "unexpected end of file while reading rows");
    std::string row = trim(lines[i]);
    if (row.size() != n_attributes)
      throw ParseError(i + 1, "row has " + std::to_string(row.size()) + " cells, expected " +
                                  std::to_string(n_attributes));
    for (std::size_t m = 0; m < n_attributes; ++m) {
      char c = row[m];
      if (c == 'X' || c == 'x')
        incidence.insert(g, m);
      else if (c != '.')
        throw ParseError(i + 1, std::string("invalid cell '") + c + "'");
    }
  }
  for (; i < lines.size(); ++i)
    if (!trim(lines[i]).empty()) throw ParseError(i + 1, "trailing content after incidence rows");
  return FormalContext(std::move(objects), std::move(attributes), std::move(incidence));
}

std::vector<std::string> split_csv_record(const std::string& line, std::size_t line_no) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    char c = line[k];
    if (quoted) {
      if (c == '"') {
        if (k + 1 < line.size() && line[k + 1] == '"') {
          cur += '"';
          ++k;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw ParseError(line_no, "unterminated quoted field");
  cells.push_back(std::move(cur));
  return cells;
}

FormalContext parse_csv(std::string_view text) {
  auto lines = split_lines(text);
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) return FormalContext({}, {}, Relation(0, 0));

  auto header = split_csv_record(lines[0], 1);
  std::vector<std::string> attributes(header.begin() + 1, header.end());
  {
    std::unordered_map<std::string, std::size_t> seen;
    for (const auto& a : attributes)
      if (!seen.emplace(a, 0).second) throw ParseError(1, "duplicate attribute name '" + a + "'");
  }

  std::vector<std::string> objects;
  std::vector<std::vector<std::size_t>> rows;
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = split_csv_record(lines[i], i + 1);
    if (cells.size() != attributes.size() + 1)
      throw ParseError(i + 1, "row has " + std::to_string(cells.size()) + " cells, expected " +
                                  std::to_string(attributes.size() + 1));
    if (!seen.emplace(cells[0], i).second)
      throw ParseError(i + 1, "duplicate object name '" + cells[0] + "'");
    objects.push_back(cells[0]);
    std::vector<std::size_t> row;
    for (std::size_t m = 0; m < attributes.size(); ++m) {
      std::string v = trim(cells[m + 1]);
      if (v == "1" || v == "x" || v == "X")
        row.push_back(m);
      else if (!(v.empty() || v == "0"))
        throw ParseError(i + 1, "invalid cell '" + v + "'");
    }
    rows.push_back(std::move(row));
  }
  Relation incidence(objects.size(), attributes.size());
  for (std::size_t g = 0; g < rows.size(); ++g)
    for (std::size_t m : rows[g]) incidence.insert(g, m);
  return FormalContext(std::move(objects), std::move(attributes), std::move(incidence));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos && trim(s) == s) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             Relation incidence)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      incidence_(std::move(incidence)) {
  check_unique(objects_, "object");
  check_unique(attributes_, "attribute");
  if (incidence_.num_objects() != objects_.size() ||
      incidence_.num_attributes() != attributes_.size())
    throw std::invalid_argument("incidence shape does not match object/attribute lists");
  columns_.assign(attributes_.size(), Bitset(objects_.size()));
  for (std::size_t g = 0; g < objects_.size(); ++g)
    incidence_.row(g).for_each([&](std::size_t m) { columns_[m].set(g); });
  num_incidences_ = incidence_.size();
}

Bitset FormalContext::derive_extent(const Bitset& objects) const {
  if (objects.size() != num_objects())
    throw std::invalid_argument("object set has wrong universe size");
  Bitset out = Bitset::full(num_attributes());
  objects.for_each([&](std::size_t g) { out &= incidence_.row(g); });
  return out;
}

std::vector<std::size_t> FormalContext::derive_extent(const std::vector<std::size_t>& objects) const {
  check_indices(objects, num_objects(), "object");
  return derive_extent(Bitset::from_indices(num_objects(), objects)).indices();
}

Bitset FormalContext::derive_intent(const Bitset& attributes) const {
  if (attributes.size() != num_attributes())
    throw std::invalid_argument("attribute set has wrong universe size");
  Bitset out = Bitset::full(num_objects());
  attributes.for_each([&](std::size_t m) { out &= columns_[m]; });
  return out;
}

std::vector<std::size_t> FormalContext::derive_intent(
    const std::vector<std::size_t>& attributes) const {
  check_indices(attributes, num_attributes(), "attribute");
  return derive_intent(Bitset::from_indices(num_attributes(), attributes)).indices();
}

std::size_t FormalContext::object_index(std::string_view name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return i;
  throw std::invalid_argument("unknown object '" + std::string(name) + "'");
}

std::size_t FormalContext::attribute_index(std::string_view name) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i)
    if (attributes_[i] == name) return i;
  throw std::invalid_argument("unknown attribute '" + std::string(name) + "'");
}

FormalContext parse_context(std::string_view text, ContextFormat format) {
  return format == ContextFormat::kCsv ? parse_csv(text) : parse_burmeister(text);
}

std::string serialize_context(const FormalContext& ctx, ContextFormat format) {
  std::ostringstream out;
  if (format == ContextFormat::kBurmeister) {
    out << "B\n\n" << ctx.num_objects() << '\n' << ctx.num_attributes() << "\n\n";
    for (const auto& o : ctx.objects()) out << o << '\n';
    for (const auto& a : ctx.attributes()) out << a << '\n';
    for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
      for (std::size_t m = 0; m < ctx.num_attributes(); ++m) out << (ctx.has(g, m) ? 'X' : '.');
      out << '\n';
    }
  } else {
    for (const auto& a : ctx.attributes()) out << ',' << csv_field(a);
    out << '\n';
    for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
      out << csv_field(ctx.objects()[g]);
      for (std::size_t m = 0; m < ctx.num_attributes(); ++m) out << ',' << (ctx.has(g, m) ? '1' : '0');
      out << '\n';
    }
  }
  return out.str();
}

ContextFormat format_for_path(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    if (path.size() < suffix.size()) return false;
    auto tail = path.substr(path.size() - suffix.size());
    for (std::size_t i = 0; i < suffix.size(); ++i)
      if (std::tolower(static_cast<unsigned char>(tail[i])) != suffix[i]) return false;
    return true;
  };
  return ends_with(".csv") ? ContextFormat::kCsv : ContextFormat::kBurmeister;
}

FormalContext load_context(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_context(buf.str(), format_for_path(path));
}

}  // namespace ordifind
