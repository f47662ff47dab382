#include "rposet/io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <optional>
#include <sstream>

namespace rposet {
namespace {

constexpr std::size_t kMaxDocumentElements = std::size_t{1} << 22;

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  throw PosetError(ErrorKind::syntax_error, "line " + std::to_string(line) + ": " + what, line);
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

ElementId parse_id(std::string_view s, std::size_t n, std::size_t line) {
  const auto v = parse_count(s);
  if (!v) syntax_error(line, "malformed element id '" + std::string(s) + "'");
  if (*v >= n) syntax_error(line, "element id " + std::string(s) + " out of range for n=" + std::to_string(n));
  return static_cast<ElementId>(*v);
}

}  // namespace

RealisticPoset parse_poset(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<std::optional<Rational>> coords;
  std::vector<Relation> rel;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokenize(line);
    if (tok.empty()) continue;

    if (!n) {
      if (tok.size() != 3 || tok[0] != "poset" || tok[1] != "v1" || tok[2].substr(0, 2) != "n=")
        syntax_error(line_no, "expected header 'poset v1 n=<count>'");
      n = parse_count(tok[2].substr(2));
      if (!n) syntax_error(line_no, "malformed element count");
      if (*n > kMaxDocumentElements) syntax_error(line_no, "element count too large");
      coords.assign(*n, std::nullopt);
      continue;
    }
    if (tok[0] == "e") {
      if (tok.size() != 3) syntax_error(line_no, "element record needs 'e <id> <coord>'");
      const ElementId id = parse_id(tok[1], *n, line_no);
      if (coords[id]) syntax_error(line_no, "element " + std::to_string(id) + " declared twice");
      try {
        coords[id] = Rational::parse(tok[2]);
      } catch (const std::invalid_argument& e) {
        syntax_error(line_no, e.what());
      }
    } else if (tok[0] == "r") {
      if (tok.size() != 3) syntax_error(line_no, "relation record needs 'r <a> <b>'");
      rel.emplace_back(parse_id(tok[1], *n, line_no), parse_id(tok[2], *n, line_no));
    } else {
      syntax_error(line_no, "unknown record '" + std::string(tok[0]) + "'");
    }
  }
  if (!n) syntax_error(line_no, "missing header");

  std::vector<Rational> values;
  values.reserve(*n);
  for (std::size_t i = 0; i < *n; ++i) {
    if (!coords[i]) syntax_error(line_no, "element " + std::to_string(i) + " has no record");
    values.push_back(*coords[i]);
  }
  return RealisticPoset::build(std::move(values), rel);
}

std::string format_poset(const RealisticPoset& p, const std::vector<std::string>& comments) {
  std::string out = "poset v1 n=" + std::to_string(p.size()) + "\n";
  for (const auto& c : comments) out += "# " + c + "\n";
  for (ElementId x = 0; x < p.size(); ++x) out += "e " + std::to_string(x) + " " + p.coord(x).str() + "\n";
  for (auto [a, b] : p.hasse_covers()) out += "r " + std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

namespace {

constexpr std::array<const char*, 12> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
};

std::string node_name(ElementId x) { return "n" + std::to_string(x); }

}  // namespace

std::string export_dot(const RealisticPoset& p, const DotOverlay& overlay) {
  std::ostringstream os;
  os << "digraph poset {\n";
  if (p.empty()) {
    os << "}\n";
    return os.str();
  }
  os << "  rankdir=BT;\n  node [shape=ellipse];\n";

  std::vector<int> chain_of(p.size(), -1);
  if (const auto* chains = std::get_if<ChainPartition>(&overlay))
    for (std::size_t i = 0; i < chains->chains.size(); ++i)
      for (ElementId x : chains->chains[i]) chain_of[x] = static_cast<int>(i);

  for (ElementId x = 0; x < p.size(); ++x) {
    os << "  " << node_name(x) << " [label=\"" << x << "@" << p.coord(x) << "\"";
    if (chain_of[x] >= 0)
      os << ", style=filled, fillcolor=\"" << kPalette[static_cast<std::size_t>(chain_of[x]) % kPalette.size()]
         << "\", comment=\"chain " << chain_of[x] << "\"";
    os << "];\n";
  }
  if (const auto* layering = std::get_if<AntichainPartition>(&overlay)) {
    for (std::size_t i = 0; i < layering->layers.size(); ++i) {
      os << "  { rank=same;";
      for (ElementId x : layering->layers[i]) os << " " << node_name(x) << ";";
      os << " }  // layer " << i << "\n";
    }
  }
  for (auto [a, b] : p.hasse_covers()) os << "  " << node_name(a) << " -> " << node_name(b) << ";\n";
  os << "}\n";
  return os.str();
}

void Report::verdict(std::string key, bool ok, const std::string& detail) {
  if (!ok) failed_ = true;
  add(std::move(key), ok ? "pass" : (detail.empty() ? "fail" : "fail(" + detail + ")"));
}

std::string Report::render() const {
  std::string out;
  for (const auto& [k, v] : lines_) out += k + "=" + v + "\n";
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace rposet
