#pragma once

// Versioned JSON documents for presentations, simplicial complexes,
// certificates and changes of basis, plus a small text syntax for elements.
//
// Integers are written as decimal strings; readers also accept plain JSON
// integers. Every parse failure is a ParseError naming the offending field,
// or the line and column for malformed JSON.

#include "hopfz/error.hpp"
#include "hopfz/hopf.hpp"
#include "hopfz/koszul.hpp"
#include "hopfz/primitivize.hpp"

#include <string>
#include <string_view>

namespace hopfz::io {

inline constexpr const char* kPresentationFormat = "hopfz-presentation/1";
inline constexpr const char* kComplexFormat = "hopfz-complex/1";
inline constexpr const char* kCertificateFormat = "hopfz-certificate/1";
inline constexpr const char* kReportFormat = "hopfz-report/1";

/// {"format", "generators": [{id, degree}], "reduced_coproducts":
///  [{generator, terms: [{left: [ids], right: [ids], coeff}]}],
///  "truncation_degree"}
HopfPresentation parse_presentation(std::string_view text);
/// Canonical form: generators in alphabet order, only nonzero coproducts,
/// terms in the canonical pair order.
std::string emit_presentation(const HopfPresentation& p);

/// {"format", "vertices": m, "maximal_faces": [[...]]} or "faces" in place
/// of "maximal_faces" (then it must be closed under subsets).
koszul::SimplicialComplex parse_complex(std::string_view text);
std::string emit_complex(const koszul::SimplicialComplex& k);

std::string emit_certificate(const ObstructionCertificate& cert);
ObstructionCertificate parse_certificate(std::string_view text);

/// {"generators": [{id, correction, image}]}, each element as
/// {"text", "terms": [{word: [ids], coeff}]}.
std::string emit_change_of_basis(const ChangeOfBasis& change);

/// "w3 - 3w2|w1 + 2*w1|w1|w1", "1", "0". Words are generator ids joined by
/// '|'; a bare integer is a multiple of the unit.
Element parse_element(const AlphabetPtr& alphabet, std::string_view text);

} // namespace hopfz::io
