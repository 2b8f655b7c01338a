#pragma once

#include <string_view>

#include "opde/appell.hpp"
#include "opde/matrix.hpp"

namespace opde {

enum class GoldenKind { B1, B2, C1, C2, W1, W2, S1, S2, T1, T2, V1, V2, Y1, Y2, Z1, Z2 };

inline constexpr GoldenKind kGoldenKinds[] = {
    GoldenKind::B1, GoldenKind::B2, GoldenKind::C1, GoldenKind::C2, GoldenKind::W1, GoldenKind::W2,
    GoldenKind::S1, GoldenKind::S2, GoldenKind::T1, GoldenKind::T2, GoldenKind::V1, GoldenKind::V2,
    GoldenKind::Y1, GoldenKind::Y2, GoldenKind::Z1, GoldenKind::Z2};

std::string_view golden_name(GoldenKind k);

/// Smallest degree for which the closed form is stated.
int golden_min_degree(GoldenKind k);

/// Entry-by-entry evaluation of the closed-form monic Appell matrices (band
/// structure as displayed, zeros elsewhere). V, Y, Z are in the Q form
/// P_n = V Q_n + Y Q_{n-1} + Z Q_{n-2}. Throws IndexOutOfPrintedRange below
/// golden_min_degree.
RationalMatrix golden_matrix(const AppellParams& p, int n, GoldenKind which);

}  // namespace opde
