#include "shiftkit/report.hpp"

#include <algorithm>
#include <sstream>

namespace shiftkit {

namespace {

std::string grid(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out.str();
}

std::string cell(std::uint64_t v) { return v == 0 ? "." : std::to_string(v); }

}  // namespace

std::string render_betti(const BettiTable& table) {
  int i_max = 0;
  int j_min = 0;
  int j_max = 0;
  bool first = true;
  for (const auto& [key, v] : table.entries()) {
    (void)v;
    const int j = key.second - key.first;
    i_max = std::max(i_max, key.first);
    j_min = first ? j : std::min(j_min, j);
    j_max = first ? j : std::max(j_max, j);
    first = false;
  }
  if (first) return "(empty)\n";
  std::vector<std::string> header{"j\\i"};
  for (int i = 0; i <= i_max; ++i) header.push_back(std::to_string(i));
  std::vector<std::vector<std::string>> rows;
  for (int j = j_min; j <= j_max; ++j) {
    std::vector<std::string> row{std::to_string(j) + ":"};
    for (int i = 0; i <= i_max; ++i) row.push_back(cell(table.strand(i, j)));
    rows.push_back(std::move(row));
  }
  return grid(header, rows);
}

std::string render_alpha(const AnnihilatorTable& table) {
  const int rows_n = table.ring() == Ring::Exterior ? table.n() : table.n() + 1;
  int j_max = 0;
  for (const auto& [key, v] : table.entries()) {
    (void)v;
    j_max = std::max(j_max, key.second);
  }
  std::vector<std::string> header{"i\\j"};
  for (int j = 0; j <= j_max; ++j) header.push_back(std::to_string(j));
  std::vector<std::vector<std::string>> rows;
  for (int i = 1; i <= rows_n; ++i) {
    std::vector<std::string> row{std::to_string(i) + ":"};
    for (int j = 0; j <= j_max; ++j) row.push_back(cell(table.at(i, j)));
    rows.push_back(std::move(row));
  }
  return grid(header, rows);
}

std::string render_facets(const std::vector<Mask>& faces) {
  std::ostringstream out;
  for (std::size_t k = 0; k < faces.size(); ++k) out << (k ? " " : "") << render_set(faces[k]);
  return out.str();
}

std::string render_f_vector(const FVector& f) {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < f.counts.size(); ++k) out << (k ? ", " : "") << f.counts[k];
  out << ")";
  return out.str();
}

std::string render_checks(const std::vector<Check>& checks) {
  std::ostringstream out;
  for (const Check& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << " [" << c.detail << "]";
    out << '\n';
  }
  return out.str();
}

Json betti_json(const BettiTable& table, const std::string& kind, Ring ring, int n) {
  Json entries = Json::array();
  for (const auto& [key, v] : table.entries()) {
    entries.push_back(Json::array({key.first, key.second - key.first, v}));
  }
  return Json{{"kind", kind}, {"ring", to_string(ring)}, {"n", n}, {"entries", entries}};
}

Json alpha_json(const AnnihilatorTable& table) {
  Json entries = Json::array();
  for (const auto& [key, v] : table.entries()) entries.push_back(Json::array({key.first, key.second, v}));
  return Json{{"kind", "alpha"}, {"ring", to_string(table.ring())}, {"n", table.n()}, {"entries", entries}};
}

Json complex_json(const SimplicialComplex& delta) {
  Json facets = Json::array();
  for (Mask f : delta.facets()) facets.push_back(vertices(f));
  return Json{{"n", delta.n()}, {"facets", facets}, {"f_vector", f_vector(delta).counts}};
}

Json ideal_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const Exponents& e : ideal.exponents()) {
    std::vector<int> idx;
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (int c = 0; c < e[k]; ++c) idx.push_back(static_cast<int>(k) + 1);
    }
    gens.push_back(idx);
  }
  return Json{{"ring", to_string(ideal.ring())}, {"n", ideal.n()}, {"generators", gens}};
}

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const Check& c : checks) {
    out.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return out;
}

}  // namespace shiftkit
