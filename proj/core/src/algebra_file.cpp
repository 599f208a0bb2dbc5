#include "superlie/algebra_file.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "superlie/errors.hpp"

namespace superlie {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> words;
};

/// Splits the input into non-empty lines of whitespace-separated words.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream words(text);
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(std::move(w));
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::size_t parse_count(const std::string& word, std::size_t line, const char* what) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(word, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("expected a non-negative integer for ") + what + ", got '" + word + "'", line);
  }
  if (used != word.size() || word.front() == '-' || word.front() == '+') {
    throw ParseError(std::string("expected a non-negative integer for ") + what + ", got '" + word + "'", line);
  }
  return value;
}

Scalar parse_value(const std::string& word, std::size_t line) {
  try {
    return parse_scalar(word);
  } catch (const Error& e) {
    throw ParseError(e.what(), line);
  }
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

LieSuperAlgebra parse_algebra(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ParseError("empty algebra file");
  const Line& header = lines.front();
  if (header.words.size() != 4 || header.words[0] != "superalgebra") {
    throw ParseError("expected 'superalgebra <name> <m> <n>'", header.number);
  }
  const std::size_t m = parse_count(header.words[2], header.number, "m");
  const std::size_t n = parse_count(header.words[3], header.number, "n");
  if (m + n == 0) throw ParseError("algebra has dimension 0", header.number);

  std::size_t pos = 1;
  std::vector<std::string> labels;
  if (pos < lines.size() && lines[pos].words.front() == "labels") {
    const Line& l = lines[pos++];
    labels.assign(l.words.begin() + 1, l.words.end());
    if (labels.size() != m + n) {
      throw ParseError("expected " + std::to_string(m + n) + " labels, got " + std::to_string(labels.size()),
                       l.number);
    }
    if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
      throw ParseError("duplicate label", l.number);
    }
  }
  LieSuperAlgebra alg = [&] {
    try {
      return LieSuperAlgebra(m, n, labels, header.words[1]);
    } catch (const Error& e) {
      throw ParseError(e.what(), header.number);
    }
  }();

  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (; pos < lines.size(); ++pos) {
    const Line& l = lines[pos];
    if (l.words.size() != 4) throw ParseError("expected '<i> <j> <k> <value>'", l.number);
    const std::size_t i = parse_count(l.words[0], l.number, "i");
    const std::size_t j = parse_count(l.words[1], l.number, "j");
    const std::size_t k = parse_count(l.words[2], l.number, "k");
    for (std::size_t idx : {i, j, k}) {
      if (idx < 1 || idx > m + n) {
        throw ParseError("index " + std::to_string(idx) + " outside 1.." + std::to_string(m + n), l.number);
      }
    }
    if (!seen.emplace(i, j, k).second) {
      throw ParseError("duplicate entry " + std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(k),
                       l.number);
    }
    const Scalar value = parse_value(l.words[3], l.number);
    if (is_zero(value)) continue;
    if (alg.parity(i - 1) + alg.parity(j - 1) != alg.parity(k - 1)) {
      throw ParseError("entry " + std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(k) +
                           " breaks parity homogeneity",
                       l.number);
    }
    alg.set_structure_constant(i - 1, j - 1, k - 1, value);
  }
  return alg;
}

LieSuperAlgebra load_algebra(const std::filesystem::path& path) {
  std::ifstream in = open(path);
  return parse_algebra(in);
}

std::string serialize_algebra(const LieSuperAlgebra& l) {
  std::ostringstream os;
  os << "superalgebra " << (l.name().empty() ? "unnamed" : l.name()) << ' ' << l.even_dim() << ' ' << l.odd_dim()
     << "\nlabels";
  for (const auto& label : l.labels()) os << ' ' << label;
  os << '\n';
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = 0; j < l.dim(); ++j) {
      for (std::size_t k = 0; k < l.dim(); ++k) {
        const Scalar c = l.structure_constant(i, j, k);
        if (!is_zero(c)) os << i + 1 << ' ' << j + 1 << ' ' << k + 1 << ' ' << to_string(c) << '\n';
      }
    }
  }
  return os.str();
}

RationalMatrix parse_matrix(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ParseError("empty matrix file");
  const Line& header = lines.front();
  if (header.words.size() != 2 || header.words[0] != "matrix") throw ParseError("expected 'matrix <n>'", header.number);
  const std::size_t n = parse_count(header.words[1], header.number, "n");
  if (n == 0) throw ParseError("matrix has size 0", header.number);
  if (lines.size() != n + 1) {
    const std::size_t at = lines.size() > n + 1 ? lines[n + 1].number : lines.back().number;
    throw ParseError("expected " + std::to_string(n) + " rows, got " + std::to_string(lines.size() - 1), at);
  }
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Line& l = lines[r + 1];
    if (l.words.size() != n) {
      throw ParseError("expected " + std::to_string(n) + " entries, got " + std::to_string(l.words.size()), l.number);
    }
    for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_value(l.words[c], l.number);
  }
  return m;
}

RationalMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in = open(path);
  return parse_matrix(in);
}

KacSubspaceFile parse_kac_subspace(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ParseError("empty subspace file");
  const Line& header = lines.front();
  if (header.words.size() != 2 || header.words[0] != "sym") throw ParseError("expected 'sym <n>'", header.number);
  KacSubspaceFile out;
  out.generators = parse_count(header.words[1], header.number, "n");
  for (std::size_t pos = 1; pos < lines.size(); ++pos) {
    const Line& l = lines[pos];
    if (l.words.front() == "inner" && l.words.size() == 1) {
      if (out.inner) throw ParseError("duplicate 'inner'", l.number);
      out.inner = true;
      continue;
    }
    if (l.words.front() == "all" && l.words.size() == 1) {
      if (out.all) throw ParseError("duplicate 'all'", l.number);
      out.all = true;
      continue;
    }
    if (l.words.front() != "vector" || l.words.size() < 2) {
      throw ParseError("expected 'inner', 'all' or 'vector <c>:<label> ...'", l.number);
    }
    std::vector<std::pair<Scalar, std::string>> terms;
    for (std::size_t w = 1; w < l.words.size(); ++w) {
      const std::string& word = l.words[w];
      const auto colon = word.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == word.size()) {
        throw ParseError("expected '<c>:<label>', got '" + word + "'", l.number);
      }
      terms.emplace_back(parse_value(word.substr(0, colon), l.number), word.substr(colon + 1));
    }
    out.vectors.push_back(std::move(terms));
    out.lines.push_back(l.number);
  }
  return out;
}

KacSubspaceFile load_kac_subspace(const std::filesystem::path& path) {
  std::ifstream in = open(path);
  return parse_kac_subspace(in);
}

}  // namespace superlie
