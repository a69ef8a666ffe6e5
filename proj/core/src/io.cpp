#include "hopfz/io.hpp"

#include <json.hpp>

#include <cctype>

namespace hopfz::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where.empty() ? what : where + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " +
                     std::to_string(column));
  }
}

const json& field(const json& obj, const std::string& where, const char* name) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) fail(where, std::string("missing field '") + name + "'");
  return *it;
}

std::string path(const std::string& where, const char* name) {
  return where.empty() ? name : where + "." + name;
}

std::string index_path(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

void check_format(const json& doc, const char* expected) {
  const json& f = field(doc, "", "format");
  if (!f.is_string() || f.get<std::string>() != expected)
    fail("format", std::string("expected \"") + expected + "\"");
}

Integer read_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  if (!v.is_string()) fail(where, "expected an integer or decimal string");
  const std::string s = v.get<std::string>();
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) fail(where, "expected a decimal integer, got \"" + s + "\"");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      fail(where, "expected a decimal integer, got \"" + s + "\"");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

int read_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  const long long x = v.get<long long>();
  if (x < -1000000000LL || x > 1000000000LL) fail(where, "integer out of range");
  return static_cast<int>(x);
}

std::string read_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

const json& read_array(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  return v;
}

Word read_word(const Alphabet& alpha, const json& v, const std::string& where) {
  Word w;
  const json& arr = read_array(v, where);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string id = read_string(arr[i], index_path(where, i));
    auto letter = alpha.find(id);
    if (!letter) fail(index_path(where, i), "unknown generator '" + id + "'");
    w.push_back(*letter);
  }
  return w;
}

json word_json(const Alphabet& alpha, const Word& w) {
  json out = json::array();
  for (Letter l : w) out.push_back(alpha[l].id);
  return out;
}

json generators_json(const std::vector<Generator>& gens) {
  json out = json::array();
  for (const auto& g : gens) out.push_back({{"id", g.id}, {"degree", g.degree}});
  return out;
}

std::vector<Generator> read_generators(const json& v, const std::string& where) {
  std::vector<Generator> gens;
  const json& arr = read_array(v, where);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = index_path(where, i);
    gens.push_back({read_string(field(arr[i], at, "id"), path(at, "id")),
                    read_int(field(arr[i], at, "degree"), path(at, "degree"))});
  }
  return gens;
}

AlphabetPtr build_alphabet(std::vector<Generator> gens, const std::string& where) {
  try {
    return make_alphabet(std::move(gens));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

json element_json(const Element& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.sorted_terms())
    terms.push_back({{"word", word_json(*x.alphabet(), w)}, {"coeff", c.get_str()}});
  return {{"text", x.to_string()}, {"terms", terms}};
}

json int_vector_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

IntVector read_int_vector(const json& v, const std::string& where) {
  IntVector out;
  const json& arr = read_array(v, where);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(read_integer(arr[i], index_path(where, i)));
  return out;
}

} // namespace

// --- presentations -------------------------------------------------------------

HopfPresentation parse_presentation(std::string_view text) {
  const json doc = parse_json(text);
  check_format(doc, kPresentationFormat);
  AlphabetPtr alpha = build_alphabet(read_generators(field(doc, "", "generators"), "generators"),
                                     "generators");
  const int top = read_int(field(doc, "", "truncation_degree"), "truncation_degree");

  std::map<Letter, TensorSquareElement> reduced;
  if (auto it = doc.find("reduced_coproducts"); it != doc.end()) {
    const json& arr = read_array(*it, "reduced_coproducts");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string at = index_path("reduced_coproducts", i);
      const std::string id = read_string(field(arr[i], at, "generator"), path(at, "generator"));
      auto g = alpha->find(id);
      if (!g) fail(path(at, "generator"), "unknown generator '" + id + "'");
      if (reduced.count(*g)) fail(path(at, "generator"), "duplicate entry for '" + id + "'");
      TensorSquareElement t(alpha);
      const std::string terms_at = path(at, "terms");
      const json& terms = read_array(field(arr[i], at, "terms"), terms_at);
      for (std::size_t j = 0; j < terms.size(); ++j) {
        const std::string tat = index_path(terms_at, j);
        t.add_term(read_word(*alpha, field(terms[j], tat, "left"), path(tat, "left")),
                   read_word(*alpha, field(terms[j], tat, "right"), path(tat, "right")),
                   read_integer(field(terms[j], tat, "coeff"), path(tat, "coeff")));
      }
      reduced.emplace(*g, std::move(t));
    }
  }
  try {
    return HopfPresentation(alpha, std::move(reduced), top);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail("reduced_coproducts", e.what());
  }
}

std::string emit_presentation(const HopfPresentation& p) {
  const Alphabet& alpha = *p.alphabet();
  json coproducts = json::array();
  for (Letter g = 0; g < alpha.size(); ++g) {
    const TensorSquareElement& t = p.reduced_coproduct_of(g);
    if (t.is_zero()) continue;
    json terms = json::array();
    for (const auto& [pair, c] : t.sorted_terms())
      terms.push_back({{"left", word_json(alpha, pair.first)},
                       {"right", word_json(alpha, pair.second)},
                       {"coeff", c.get_str()}});
    coproducts.push_back({{"generator", alpha[g].id}, {"terms", terms}});
  }
  json doc = {{"format", kPresentationFormat},
              {"generators", generators_json(alpha.generators())},
              {"reduced_coproducts", coproducts},
              {"truncation_degree", p.truncation_degree()}};
  return doc.dump(2) + "\n";
}

// --- complexes -----------------------------------------------------------------

koszul::SimplicialComplex parse_complex(std::string_view text) {
  const json doc = parse_json(text);
  check_format(doc, kComplexFormat);
  const int m = read_int(field(doc, "", "vertices"), "vertices");
  const bool maximal = doc.contains("maximal_faces");
  if (maximal == doc.contains("faces"))
    fail("", "exactly one of 'maximal_faces' and 'faces' is required");
  const char* name = maximal ? "maximal_faces" : "faces";
  std::vector<std::vector<int>> faces;
  const json& arr = read_array(doc.at(name), name);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = index_path(name, i);
    std::vector<int> face;
    const json& f = read_array(arr[i], at);
    for (std::size_t j = 0; j < f.size(); ++j) face.push_back(read_int(f[j], index_path(at, j)));
    faces.push_back(std::move(face));
  }
  try {
    return maximal ? koszul::SimplicialComplex::from_maximal_faces(m, faces)
                   : koszul::SimplicialComplex::from_faces(m, faces);
  } catch (const Error& e) {
    fail(name, e.what());
  }
}

std::string emit_complex(const koszul::SimplicialComplex& k) {
  json doc = {{"format", kComplexFormat},
              {"vertices", k.vertex_count()},
              {"maximal_faces", k.maximal_faces()}};
  return doc.dump(2) + "\n";
}

// --- certificates --------------------------------------------------------------

std::string emit_certificate(const ObstructionCertificate& cert) {
  AlphabetPtr alpha = make_alphabet(cert.alphabet);
  json columns = json::array();
  for (const Word& w : cert.system.columns) columns.push_back(word_json(*alpha, w));
  json rows = json::array();
  for (const auto& [l, r] : cert.system.rows)
    rows.push_back({{"left", word_json(*alpha, l)}, {"right", word_json(*alpha, r)}});
  json matrix = json::array();
  for (std::size_t r = 0; r < cert.system.matrix.rows(); ++r)
    matrix.push_back(int_vector_json(cert.system.matrix.row(r)));
  json doc = {{"format", kCertificateFormat},
              {"alphabet", generators_json(cert.alphabet)},
              {"generator", cert.generator},
              {"degree", cert.degree},
              {"columns", columns},
              {"rows", rows},
              {"matrix", matrix},
              {"rhs", int_vector_json(cert.system.rhs)},
              {"witness",
               {{"functional", int_vector_json(cert.witness.functional)},
                {"modulus", cert.witness.modulus.get_str()},
                {"residue", cert.witness.residue.get_str()}}},
              {"equations", cert.equations()}};
  return doc.dump(2) + "\n";
}

ObstructionCertificate parse_certificate(std::string_view text) {
  const json doc = parse_json(text);
  check_format(doc, kCertificateFormat);
  ObstructionCertificate cert;
  cert.alphabet = read_generators(field(doc, "", "alphabet"), "alphabet");
  AlphabetPtr alpha = build_alphabet(cert.alphabet, "alphabet");
  cert.generator = read_string(field(doc, "", "generator"), "generator");
  cert.degree = read_int(field(doc, "", "degree"), "degree");

  const json& columns = read_array(field(doc, "", "columns"), "columns");
  for (std::size_t i = 0; i < columns.size(); ++i)
    cert.system.columns.push_back(read_word(*alpha, columns[i], index_path("columns", i)));
  const json& rows = read_array(field(doc, "", "rows"), "rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string at = index_path("rows", i);
    cert.system.rows.emplace_back(read_word(*alpha, field(rows[i], at, "left"), path(at, "left")),
                                  read_word(*alpha, field(rows[i], at, "right"), path(at, "right")));
  }
  const json& matrix = read_array(field(doc, "", "matrix"), "matrix");
  if (matrix.size() != cert.system.rows.size()) fail("matrix", "row count differs from 'rows'");
  std::vector<IntVector> entries;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    entries.push_back(read_int_vector(matrix[i], index_path("matrix", i)));
    if (entries.back().size() != cert.system.columns.size())
      fail(index_path("matrix", i), "column count differs from 'columns'");
  }
  cert.system.matrix = IntMatrix::from_rows(entries, cert.system.columns.size());
  cert.system.rhs = read_int_vector(field(doc, "", "rhs"), "rhs");
  if (cert.system.rhs.size() != cert.system.rows.size()) fail("rhs", "length differs from 'rows'");

  const json& w = field(doc, "", "witness");
  cert.witness.functional = read_int_vector(field(w, "witness", "functional"), "witness.functional");
  cert.witness.modulus = read_integer(field(w, "witness", "modulus"), "witness.modulus");
  cert.witness.residue = read_integer(field(w, "witness", "residue"), "witness.residue");
  return cert;
}

std::string emit_change_of_basis(const ChangeOfBasis& change) {
  json gens = json::array();
  const Alphabet& alpha = *change.alphabet;
  for (Letter g = 0; g < alpha.size(); ++g)
    gens.push_back({{"id", alpha[g].id},
                    {"correction", element_json(change.corrections[g])},
                    {"image", element_json(change.new_generators[g])}});
  return json{{"generators", gens}}.dump(2) + "\n";
}

// --- element syntax ------------------------------------------------------------

Element parse_element(const AlphabetPtr& alphabet, std::string_view text) {
  Element out(alphabet);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto error = [&](const std::string& what) -> ParseError {
    return ParseError("element '" + std::string(text) + "', column " + std::to_string(i + 1) +
                      ": " + what);
  };
  auto is_id_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_id_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };

  skip();
  if (i == text.size()) throw error("empty input");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw error("expected '+' or '-'");
    }
    first = false;

    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    skip();
    if (i < text.size() && text[i] == '*') {
      if (digits.empty()) throw error("'*' without a coefficient");
      ++i;
      skip();
    }
    Word w;
    if (i < text.size() && is_id_start(text[i])) {
      while (true) {
        std::string id;
        while (i < text.size() && is_id_char(text[i])) id += text[i++];
        auto letter = alphabet->find(id);
        if (!letter) throw error("unknown generator '" + id + "'");
        w.push_back(*letter);
        if (i < text.size() && text[i] == '|') {
          ++i;
          if (i == text.size() || !is_id_start(text[i])) throw error("expected a generator after '|'");
          continue;
        }
        break;
      }
    } else if (digits.empty()) {
      throw error("expected a coefficient or a word");
    }
    Integer c = digits.empty() ? Integer(1) : Integer(digits);
    out.add_term(w, sign * c);
  }
  return out;
}

} // namespace hopfz::io
