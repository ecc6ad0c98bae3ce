#include "exalg/io.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace exalg {

namespace {

using nlohmann::json;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Signed decimal integer literal -> mpz; ParseError otherwise.
mpz_class parse_mpz(std::string_view s, const std::string& where) {
  std::string_view body = s;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) body.remove_prefix(1);
  if (!all_digits(body)) fail(Errc::ParseError, where + ": bad integer literal '" + std::string(s) + "'");
  return mpz_class(std::string(s), 10);
}

Scalar parse_scalar_at(const Field& F, std::string_view s, const std::string& where) {
  if (s.empty()) fail(Errc::ParseError, where + ": empty field-element literal");
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    if (!F.is_rationals())
      fail(Errc::ParseError, where + ": fraction literal '" + std::string(s) + "' over " + F.name());
    mpz_class num = parse_mpz(s.substr(0, slash), where);
    mpz_class den = parse_mpz(s.substr(slash + 1), where);
    if (den == 0) fail(Errc::ParseError, where + ": zero denominator in '" + std::string(s) + "'");
    return F.from_rational(mpq_class(num, den));
  }
  return F.from_integer(parse_mpz(s, where));
}

std::vector<std::vector<std::string>> tokenized_lines(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::size_t len = end - start;
    if (len > 0 && text[start + len - 1] == '\r') --len;  // CRLF input
    std::istringstream iss{std::string(text.substr(start, len))};
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    lines.push_back(std::move(toks));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::size_t parse_size(const std::string& s, const std::string& where) {
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    fail(Errc::ParseError, where + ": dimension '" + s + "' out of range");
  }
}

// One plain-format matrix starting at *line (0-based, advanced past the
// consumed block); blank lines before the header are skipped.
Matrix parse_plain_at(const Field& F, const std::vector<std::vector<std::string>>& lines,
                      std::size_t* line) {
  std::size_t ln = *line;
  while (ln < lines.size() && lines[ln].empty()) ++ln;
  if (ln >= lines.size()) fail(Errc::ParseError, "missing matrix header line");
  const auto& hdr = lines[ln];
  if (hdr.size() != 2 || !all_digits(hdr[0]) || !all_digits(hdr[1]))
    fail(Errc::ParseError, "line " + std::to_string(ln + 1) + ": expected header 'm n'");
  std::string where = "line " + std::to_string(ln + 1);
  std::size_t m = parse_size(hdr[0], where), n = parse_size(hdr[1], where);
  if (m == 0 || n == 0)
    fail(Errc::ZeroDimension, "line " + std::to_string(ln + 1) + ": zero-dimension matrix");
  std::vector<Scalar> entries;
  entries.reserve(m * n);
  for (std::size_t i = 1; i <= m; ++i) {
    ++ln;
    while (ln < lines.size() && lines[ln].empty()) ++ln;
    if (ln >= lines.size())
      fail(Errc::ParseError, "expected " + std::to_string(m) + " rows, got " + std::to_string(i - 1));
    const auto& row = lines[ln];
    if (row.size() != n)
      fail(Errc::ParseError, "line " + std::to_string(ln + 1) + ": row " + std::to_string(i) +
                                 " has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(n));
    for (std::size_t j = 0; j < n; ++j)
      entries.push_back(parse_scalar_at(F, row[j], "line " + std::to_string(ln + 1)));
  }
  *line = ln + 1;
  return Matrix::from_entries(F, m, n, std::move(entries));
}

Matrix matrix_from_json(const Field& F, const json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    fail(Errc::ParseError, "JSON matrix needs field/rows/cols/entries");
  if (!j["field"].is_string() || !j["rows"].is_number_unsigned() ||
      !j["cols"].is_number_unsigned())
    fail(Errc::ParseError, "JSON field must be a string, rows/cols unsigned numbers");
  Field jf = parse_field(j["field"].get<std::string>());
  if (!(jf == F))
    fail(Errc::FieldMismatch, "JSON carries " + jf.name() + ", expected " + F.name());
  std::size_t m = j["rows"].get<std::size_t>(), n = j["cols"].get<std::size_t>();
  if (m == 0 || n == 0) fail(Errc::ZeroDimension, "zero-dimension JSON matrix");
  const json& rows = j["entries"];
  if (!rows.is_array() || rows.size() != m)
    fail(Errc::ParseError, "JSON entries must hold " + std::to_string(m) + " rows");
  std::vector<Scalar> entries;
  entries.reserve(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != n)
      fail(Errc::ParseError, "JSON row " + std::to_string(i + 1) + " must hold " +
                                 std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) {
      const json& cell = row[k];
      std::string where = "entry (" + std::to_string(i + 1) + ", " + std::to_string(k + 1) + ")";
      if (cell.is_string())
        entries.push_back(parse_scalar_at(F, cell.get<std::string>(), where));
      else if (cell.is_number_integer())
        entries.push_back(F.from_integer(static_cast<long long>(cell.get<std::int64_t>())));
      else
        fail(Errc::ParseError, where + ": expected a string or integer literal");
    }
  }
  return Matrix::from_entries(F, m, n, std::move(entries));
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::ParseError, e.what());
  }
}

}  // namespace

Field parse_field(std::string_view s) {
  if (s == "q" || s == "Q") return Field::rationals();
  std::string_view digits;
  if (s.rfind("gf:", 0) == 0) {
    digits = s.substr(3);
  } else if ((s.rfind("GF(", 0) == 0 || s.rfind("gf(", 0) == 0) && s.back() == ')') {
    digits = s.substr(3, s.size() - 4);
  } else {
    fail(Errc::ParseError, "bad field '" + std::string(s) + "' (want q or gf:<p>)");
  }
  if (!all_digits(digits)) fail(Errc::ParseError, "bad GF modulus '" + std::string(digits) + "'");
  return Field::gf(parse_size(std::string(digits), "field"));
}

Scalar parse_scalar(const Field& F, std::string_view s) {
  return parse_scalar_at(F, s, "literal");
}

Matrix parse_matrix(const Field& F, std::string_view text, Format fmt) {
  if (fmt == Format::json) return matrix_from_json(F, parse_json_text(text));
  auto lines = tokenized_lines(text);
  std::size_t cursor = 0;
  Matrix a = parse_plain_at(F, lines, &cursor);
  for (std::size_t ln = cursor; ln < lines.size(); ++ln)
    if (!lines[ln].empty())
      fail(Errc::ParseError, "line " + std::to_string(ln + 1) + ": trailing input after the matrix");
  return a;
}

std::vector<Matrix> parse_matrices(const Field& F, std::string_view text, Format fmt) {
  std::vector<Matrix> out;
  if (fmt == Format::json) {
    json j = parse_json_text(text);
    if (j.is_object()) {
      out.push_back(matrix_from_json(F, j));
      return out;
    }
    if (!j.is_array()) fail(Errc::ParseError, "expected a JSON matrix object or array of them");
    for (const auto& item : j) out.push_back(matrix_from_json(F, item));
    return out;
  }
  auto lines = tokenized_lines(text);
  std::size_t cursor = 0;
  while (true) {
    while (cursor < lines.size() && lines[cursor].empty()) ++cursor;
    if (cursor >= lines.size()) break;
    out.push_back(parse_plain_at(F, lines, &cursor));
  }
  if (out.empty()) fail(Errc::ParseError, "no matrix in input");
  return out;
}

std::string serialize(const Matrix& a, Format fmt) {
  if (fmt == Format::json) {
    json rows = json::array();
    for (std::size_t i = 1; i <= a.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 1; j <= a.cols(); ++j) row.push_back(a.entry(i, j).str());
      rows.push_back(std::move(row));
    }
    json j{{"field", a.field().name()},
           {"rows", a.rows()},
           {"cols", a.cols()},
           {"entries", std::move(rows)}};
    return j.dump();
  }
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      if (j > 1) out += ' ';
      out += a.entry(i, j).str();
    }
    out += '\n';
  }
  return out;
}

std::string serialize(const Poly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i > 0) out += ", ";
    out += p.coeffs()[i].str();
  }
  out += "]";
  return out;
}

}  // namespace exalg
