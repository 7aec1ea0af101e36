#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hkdet/arith.hpp"
#include "hkdet/counting.hpp"
#include "hkdet/rational_polynomial.hpp"

namespace hkdet {

/// Closed forms for the 2 x n counts, named by row/column bound pattern
/// (row bounds before the semicolon, column bounds after it).
enum class ClosedFormId {
  INF_QM1,       // (inf, inf; q-1, ..., q-1)
  INF_R_INF,     // (inf, r; inf, ..., inf)
  INF_R_QM1,     // (inf, r; q-1, ..., q-1)
  HK_2N,         // (inf, inf; inf, ..., inf)
  MULT_2N,       // leading coefficient of HK_2N
  INF_R_INFQM1,  // (inf, r; inf, q-1, ..., q-1)
  QM1_R_QM1,     // (q-1, r; q-1, ..., q-1)
  QM1_R_INF,     // (q-1, r; inf, ..., inf)
};

inline constexpr ClosedFormId kBoundPatternForms[] = {
    ClosedFormId::INF_QM1,      ClosedFormId::INF_R_INF, ClosedFormId::INF_R_QM1,
    ClosedFormId::INF_R_INFQM1, ClosedFormId::QM1_R_QM1, ClosedFormId::QM1_R_INF};

std::string_view name(ClosedFormId id);
bool uses_r(ClosedFormId id);

/// The count query whose value the form predicts (not defined for MULT_2N).
CountQuery matching_query(ClosedFormId id, int n, std::int64_t q, std::int64_t r = 0);

/// Evaluates the closed form. Integral for every id except MULT_2N.
/// Throws std::invalid_argument for n < 2, q < 1, r >= q, or a missing r.
Rational eval_closed_form(ClosedFormId id, int n, std::int64_t q,
                          std::optional<std::int64_t> r = std::nullopt);

/// HK function of the 2 x n case as an exact polynomial of degree n + 1.
RationalPolynomial hk_polynomial_2n(int n);

/// n/2 + n/(n+1)!
Rational hk_multiplicity_2n(int n);

/// Multiplicity through Stirling numbers of the second kind, with
/// d = m + n - 1.
Rational ey_multiplicity(int m, int n);

}  // namespace hkdet
