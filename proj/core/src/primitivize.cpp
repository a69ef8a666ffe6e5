#include "hopfz/primitivize.hpp"

#include <algorithm>
#include <sstream>

namespace hopfz {

CorrectionSystem correction_system(const HopfPresentation& p, Letter g) {
  const AlphabetPtr& alpha = p.alphabet();
  const int d = alpha->degree(g);
  CorrectionSystem sys;
  if (d >= 2) sys.columns = decomposable_basis(*alpha, d);

  std::vector<TensorSquareElement> images;
  images.reserve(sys.columns.size());
  for (const Word& w : sys.columns)
    images.push_back(reduced_coproduct(p, Element::word(alpha, w)));
  const TensorSquareElement& target = p.reduced_coproduct_of(g);

  std::vector<WordPair> rows;
  for (const auto& img : images)
    for (const auto& [pair, c] : img.terms()) rows.push_back(pair);
  for (const auto& [pair, c] : target.terms()) rows.push_back(pair);
  std::sort(rows.begin(), rows.end(),
            [&](const WordPair& a, const WordPair& b) { return alpha->pair_less(a, b); });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  sys.rows = std::move(rows);

  sys.matrix = IntMatrix(sys.rows.size(), sys.columns.size());
  sys.rhs.assign(sys.rows.size(), Integer(0));
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    const auto& [left, right] = sys.rows[r];
    for (std::size_t c = 0; c < images.size(); ++c)
      sys.matrix(r, c) = images[c].coefficient(left, right);
    sys.rhs[r] = -target.coefficient(left, right);
  }
  return sys;
}

std::string ObstructionCertificate::equations() const {
  std::ostringstream os;
  const std::size_t n = system.columns.size();
  for (std::size_t r = 0; r < system.rows.size(); ++r) {
    if (r) os << "; ";
    bool first = true;
    for (std::size_t c = 0; c < n; ++c) {
      const Integer& k = system.matrix(r, c);
      if (k == 0) continue;
      const Integer mag = abs(k);
      if (first) os << (k < 0 ? "-" : "");
      else os << (k < 0 ? " - " : " + ");
      if (mag != 1) os << mag.get_str();
      os << "λ";
      if (n > 1) os << c + 1;
      first = false;
    }
    if (first) os << '0';
    os << " = " << system.rhs[r].get_str();
  }
  return os.str();
}

PrimitivizeOutcome primitivize_generator(const HopfPresentation& p, Letter g) {
  const AlphabetPtr& alpha = p.alphabet();
  if (g >= alpha->size()) throw AlphabetError("generator index out of range");
  CorrectionSystem sys = correction_system(p, g);
  IntSolveResult sol = solve_integer(sys.matrix, sys.rhs);
  if (!sol.solvable()) {
    ObstructionCertificate cert;
    cert.alphabet = alpha->generators();
    cert.degree = alpha->degree(g);
    cert.generator = (*alpha)[g].id;
    cert.system = std::move(sys);
    cert.witness = std::move(*sol.witness);
    return cert;
  }
  GeneratorCorrection out{Element(alpha), std::move(sol.kernel_basis)};
  for (std::size_t c = 0; c < sys.columns.size(); ++c)
    out.correction.add_term(sys.columns[c], sol.particular[c]);
  return out;
}

PrimitivizeOutcome primitivize_generator(const HopfPresentation& p, std::string_view id) {
  return primitivize_generator(p, p.alphabet()->index_of(id));
}

IsoCandidate ChangeOfBasis::from_lie_hopf() const {
  IsoCandidate f;
  f.images = new_generators;
  return f;
}

IsoCandidate ChangeOfBasis::to_lie_hopf() const {
  return invert_triangular(from_lie_hopf(), alphabet);
}

LieHopfDecision lie_hopf_decision(const HopfPresentation& p) {
  const int top = p.truncation_degree();
  for (const auto& report : {verify_coassociativity(p, top), verify_counit(p, top)})
    if (!report.passed)
      throw PresentationError("invalid presentation: " + report.check + " fails at '" +
                              report.failing_element + "' (" + report.detail + ")");

  const AlphabetPtr& alpha = p.alphabet();
  std::vector<Letter> order(alpha->size());
  for (Letter g = 0; g < alpha->size(); ++g) order[g] = g;
  std::stable_sort(order.begin(), order.end(),
                   [&](Letter a, Letter b) { return alpha->degree(a) < alpha->degree(b); });

  ChangeOfBasis change{alpha, {}, {}};
  change.corrections.assign(alpha->size(), Element(alpha));
  change.new_generators.assign(alpha->size(), Element(alpha));
  for (Letter g : order) {
    PrimitivizeOutcome outcome = primitivize_generator(p, g);
    if (auto* cert = std::get_if<ObstructionCertificate>(&outcome))
      return LieHopfDecision{std::move(*cert)};
    auto& corr = std::get<GeneratorCorrection>(outcome);
    change.new_generators[g] = Element::word(alpha, Word{g}) + corr.correction;
    change.corrections[g] = std::move(corr.correction);
  }
  return LieHopfDecision{std::move(change)};
}

bool check_certificate(const ObstructionCertificate& cert, const HopfPresentation& p) {
  const AlphabetPtr& alpha = p.alphabet();
  if (cert.alphabet != alpha->generators())
    throw AlphabetError("certificate alphabet does not match the presentation");
  const Letter g = alpha->index_of(cert.generator);
  if (alpha->degree(g) != cert.degree)
    throw AlphabetError("certificate degree does not match generator '" + cert.generator + "'");

  const CorrectionSystem rebuilt = correction_system(p, g);
  if (rebuilt.columns != cert.system.columns || rebuilt.rows != cert.system.rows ||
      !(rebuilt.matrix == cert.system.matrix) || rebuilt.rhs != cert.system.rhs)
    return false;
  return verify_witness(rebuilt.matrix, rebuilt.rhs, cert.witness);
}

} // namespace hopfz
