#include "nearvec/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "nearvec/error.hpp"

namespace nearvec {
namespace {

std::vector<std::vector<std::string>> content_lines(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    lines.push_back(std::move(tokens));
  }
  return lines;
}

std::int64_t header_int(const std::string& token, const char* what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " '" + token + "'");
  }
}

struct Header {
  std::int64_t q = 0;
  std::int64_t n = 0;
};

Header read_header(const std::vector<std::vector<std::string>>& lines) {
  if (lines.empty()) throw ParseError("empty matrix file");
  const auto& h = lines[0];
  if (h.size() != 3 || h[0] != "DN") throw ParseError("expected header 'DN <q> <n>'");
  return {header_int(h[1], "q"), header_int(h[2], "n")};
}

Matrix read_body(const std::vector<std::vector<std::string>>& lines, const NearfieldPtr& nf) {
  if (lines.size() < 2 || lines[1].size() != 2) throw ParseError("expected size line '<k> <m>'");
  const std::int64_t k = header_int(lines[1][0], "row count");
  const std::int64_t m = header_int(lines[1][1], "column count");
  if (k <= 0) throw ParseError("no rows");
  if (m <= 0) throw ParseError("no columns");
  if (lines.size() - 2 != static_cast<std::size_t>(k)) {
    throw ParseError("expected " + std::to_string(k) + " rows, found " +
                     std::to_string(lines.size() - 2));
  }
  std::vector<Vector> rows;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    if (lines[i].size() != static_cast<std::size_t>(m)) {
      throw ParseError("row " + std::to_string(i - 1) + " has " + std::to_string(lines[i].size()) +
                       " entries, expected " + std::to_string(m));
    }
    Vector row;
    for (const auto& tok : lines[i]) row.push_back(parse_element(*nf, tok));
    rows.push_back(std::move(row));
  }
  return Matrix(nf, static_cast<std::size_t>(m), std::move(rows));
}

}  // namespace

Matrix parse_matrix(std::string_view text, std::uint64_t max_order) {
  const auto lines = content_lines(text);
  const Header h = read_header(lines);
  return read_body(lines, Nearfield::build(h.q, h.n, max_order));
}

Matrix parse_matrix(std::string_view text, const NearfieldPtr& nf) {
  const auto lines = content_lines(text);
  const Header h = read_header(lines);
  if (static_cast<std::uint64_t>(h.q) != nf->q() || static_cast<std::uint64_t>(h.n) != nf->n()) {
    throw ParseError("header DN " + std::to_string(h.q) + " " + std::to_string(h.n) +
                     " does not match nearfield DN " + std::to_string(nf->q()) + " " +
                     std::to_string(nf->n()));
  }
  return read_body(lines, nf);
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string format_vector(const Nearfield& nf, std::span<const Element> v, ElementStyle style) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_element(nf, v[i], style);
  }
  return out;
}

std::string format_matrix(const Matrix& m, ElementStyle style,
                          const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "DN " + std::to_string(m.nf().q()) + " " + std::to_string(m.nf().n()) + "\n";
  out += std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (const auto& r : m.row_list()) out += format_vector(m.nf(), r, style) + "\n";
  return out;
}

}  // namespace nearvec
