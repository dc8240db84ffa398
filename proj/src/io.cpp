#include "shiftkit/io.hpp"

#include <fstream>
#include <sstream>

#include "shiftkit/error.hpp"

namespace shiftkit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::StabilityViolation: return "StabilityViolation";
    case ErrorKind::NotShifted: return "NotShifted";
    case ErrorKind::ParameterInfeasible: return "ParameterInfeasible";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DependentSequence: return "DependentSequence";
    case ErrorKind::GenericityFailure: return "GenericityFailure";
    case ErrorKind::ShiftMismatch: return "ShiftMismatch";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
  }
  return "Unknown";
}

namespace {

struct Line {
  int number;
  std::string keyword;
  std::vector<long long> values;
};

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& what) {
  fail(ErrorKind::Parse, source + ":" + std::to_string(line) + ": " + what);
}

// Tokenized non-comment lines; every token after the keyword must be an
// integer except for the "ring" line.
std::vector<Line> tokenize(std::istream& in, const std::string& source, std::string* ring) {
  std::vector<Line> out;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    std::istringstream ls(text);
    std::string keyword;
    if (!(ls >> keyword) || keyword[0] == '#') continue;
    Line line{number, keyword, {}};
    if (keyword == "ring") {
      std::string value;
      std::string extra;
      if (!(ls >> value) || (ls >> extra)) parse_fail(source, number, "expected \"ring E\" or \"ring S\"");
      if (ring == nullptr) parse_fail(source, number, "unexpected ring line in a complex file");
      if (!ring->empty()) parse_fail(source, number, "duplicate ring line");
      if (value != "E" && value != "S") parse_fail(source, number, "unknown ring \"" + value + "\"");
      *ring = value;
      continue;
    }
    std::string token;
    while (ls >> token) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || used == 0) {
        parse_fail(source, number, "expected an integer, got \"" + token + "\"");
      }
      line.values.push_back(v);
    }
    out.push_back(std::move(line));
  }
  return out;
}

int read_n(const std::vector<Line>& lines, const std::string& source, int limit) {
  if (lines.empty()) parse_fail(source, 0, "missing \"n\" line");
  const Line& first = lines.front();
  if (first.keyword != "n") parse_fail(source, first.number, "expected \"n <int>\" first");
  if (first.values.size() != 1) parse_fail(source, first.number, "\"n\" takes one integer");
  const long long n = first.values[0];
  if (n < 0 || n > limit) {
    parse_fail(source, first.number, "n must lie in 0.." + std::to_string(limit));
  }
  return static_cast<int>(n);
}

}  // namespace

SimplicialComplex parse_complex(std::istream& in, const std::string& source) {
  const auto lines = tokenize(in, source, nullptr);
  const int n = read_n(lines, source, kMaxComplexVertices);
  std::vector<Mask> faces;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.keyword != "f") parse_fail(source, line.number, "unknown keyword \"" + line.keyword + "\"");
    Mask face = 0;
    for (long long v : line.values) {
      if (v < 1 || v > n) parse_fail(source, line.number, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if ((face & bit(static_cast<int>(v))) != 0) {
        parse_fail(source, line.number, "repeated vertex " + std::to_string(v));
      }
      face |= bit(static_cast<int>(v));
    }
    faces.push_back(face);
  }
  return closure_from_faces(n, faces);
}

MonomialIdeal parse_ideal(std::istream& in, const std::string& source) {
  std::string ring;
  const auto lines = tokenize(in, source, &ring);
  if (ring.empty()) parse_fail(source, 0, "missing \"ring\" line");
  const int limit = ring == "E" ? kMaxVariables : kMaxSymmetricVariables;
  const int n = read_n(lines, source, limit);
  std::vector<Exponents> gens;
  bool repeated = false;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.keyword != "g") parse_fail(source, line.number, "unknown keyword \"" + line.keyword + "\"");
    if (line.values.empty()) parse_fail(source, line.number, "a generator needs at least one index");
    Exponents e(static_cast<std::size_t>(n), 0);
    for (long long v : line.values) {
      if (v < 1 || v > n) parse_fail(source, line.number, "index " + std::to_string(v) + " outside 1.." + std::to_string(n));
      int& slot = e[static_cast<std::size_t>(v - 1)];
      if (slot > 0) {
        if (ring == "E") parse_fail(source, line.number, "repeated index in an exterior monomial");
        repeated = true;
      }
      if (slot >= kMaxSymmetricDegree) parse_fail(source, line.number, "exponent too large");
      ++slot;
    }
    gens.push_back(std::move(e));
  }
  try {
    if (repeated) return minimalize(n, gens);
    std::vector<Mask> masks;
    for (const auto& e : gens) masks.push_back(support_of(e));
    return minimalize(ring == "E" ? Ring::Exterior : Ring::SymmetricSquarefree, n, masks);
  } catch (const Error& e) {
    parse_fail(source, 0, e.what());
  }
}

InputKind detect_kind(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword) || keyword[0] == '#') continue;
    if (keyword == "ring") return InputKind::Ideal;
    if (keyword == "n") return InputKind::Complex;
    parse_fail(source, 0, "cannot tell a complex from an ideal: first keyword \"" + keyword + "\"");
  }
  parse_fail(source, 0, "empty input");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SimplicialComplex read_complex_file(const std::string& path) {
  std::istringstream in(read_text_file(path));
  return parse_complex(in, path);
}

MonomialIdeal read_ideal_file(const std::string& path) {
  std::istringstream in(read_text_file(path));
  return parse_ideal(in, path);
}

std::string write_complex(const SimplicialComplex& delta) {
  std::ostringstream out;
  out << "n " << delta.n() << "\n";
  for (Mask f : delta.facets()) {
    if (f == 0) continue;
    out << "f";
    for (int v : vertices(f)) out << " " << v;
    out << "\n";
  }
  return out.str();
}

std::string write_ideal(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "ring " << (ideal.ring() == Ring::Exterior ? "E" : "S") << "\n";
  out << "n " << ideal.n() << "\n";
  for (const Exponents& e : ideal.exponents()) {
    out << "g";
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (int c = 0; c < e[k]; ++c) out << " " << k + 1;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace shiftkit
