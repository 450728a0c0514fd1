#include "closcount/poset_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace closcount {

namespace {

std::vector<long long> parse_fields(const std::string& line, std::size_t line_no) {
  std::istringstream fields(line);
  std::vector<long long> values;
  std::string token;
  while (fields >> token) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ParseError(line_no, "expected an integer, got '" + token + "'");
    values.push_back(v);
  }
  return values;
}

}  // namespace

Poset parse_edge_text(std::istream& in) {
  std::optional<std::size_t> n;
  std::vector<CoverEdge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto values = parse_fields(line, line_no);
    if (values.empty()) continue;
    if (!n) {
      if (values.size() != 1 || values[0] < 0)
        throw ParseError(line_no, "first line must hold the element count");
      n = static_cast<std::size_t>(values[0]);
      continue;
    }
    if (values.size() != 2) throw ParseError(line_no, "expected a pair 'u v'");
    for (long long v : values)
      if (v < 0 || static_cast<std::size_t>(v) >= *n)
        throw ParseError(line_no, "element id " + std::to_string(v) + " outside 0.." +
                                      std::to_string(*n == 0 ? 0 : *n - 1));
    edges.push_back({static_cast<Element>(values[0]), static_cast<Element>(values[1])});
  }
  if (!n) throw ParseError(line_no, "missing element count");
  return Poset::from_cover_edges(*n, edges);
}

Poset parse_structured(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto upto = text.substr(0, std::min<std::size_t>(e.byte, text.size()));
    throw ParseError(1 + std::count(upto.begin(), upto.end(), '\n'), e.what());
  }
  try {
    auto n = doc.at("n").get<std::size_t>();
    std::vector<CoverEdge> edges;
    for (const auto& pair : doc.value("edges", json::array())) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError(0, "edges must be [u, v] pairs");
      auto u = pair[0].get<long long>(), v = pair[1].get<long long>();
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
        throw ParseError(0, "edge endpoint outside 0..n-1");
      edges.push_back({static_cast<Element>(u), static_cast<Element>(v)});
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc["labels"].get<std::vector<std::string>>();
    if (!labels.empty() && labels.size() != n) throw ParseError(0, "labels must have n entries");
    return Poset::from_cover_edges(n, edges, std::move(labels));
  } catch (const json::exception& e) {
    throw ParseError(0, e.what());
  }
}

Poset parse_poset(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_structured(text);
  std::istringstream in{std::string(text)};
  return parse_edge_text(in);
}

Poset load_poset_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_poset(buffer.str());
}

std::string write_edge_text(const Poset& p) {
  std::ostringstream os;
  os << p.size() << '\n';
  for (const CoverEdge& e : p.covers()) os << e.lower << ' ' << e.upper << '\n';
  return os.str();
}

std::string write_structured(const Poset& p) {
  nlohmann::json doc;
  doc["n"] = p.size();
  auto edges = nlohmann::json::array();
  for (const CoverEdge& e : p.covers()) edges.push_back({e.lower, e.upper});
  doc["edges"] = std::move(edges);
  if (p.has_labels()) doc["labels"] = p.labels();
  return doc.dump() + "\n";
}

}  // namespace closcount
