#pragma once

#include "zetaforge/series.hpp"
#include "zetaforge/upoly.hpp"
#include "zetaforge/zeta_form.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace zetaforge {

/// J_n(u) = int_0^1 (z(1-z))^n / (1-uz)^(n+1) dz = (P(u) + Q(u) L(u)) / u^(2n+1)
/// with L(u) = -Log(1-u). P and Q are polynomials in u.
struct InnerProfile {
    unsigned n = 0;
    UPoly P;
    UPoly Q;
};

InnerProfile inner_profile(unsigned n);

enum class Family { zeta2, zeta3, zeta4 };

std::string_view family_name(Family f);
/// Throws std::invalid_argument for anything but "zeta2", "zeta3", "zeta4".
Family parse_family(std::string_view name);
/// The zeta index each family targets: 2, 3 or 4.
unsigned family_weight(Family f);

struct FamilySpec {
    Family family = Family::zeta4;
    unsigned n = 0;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Reduces a family integral to pieces N(x,y) Log^k(xy) / (1-xy)^t.
///
/// The inner z (and w) integrations are done in closed form through the
/// inner profile, L = -Log(xy) is expanded by powers, and common powers of
/// (1 - xy) are cancelled between numerator and denominator (t stays >= 1).
/// Pieces come out ordered by k; zero pieces are dropped.
std::vector<IntegrandPiece> assemble_pieces(FamilySpec spec);

struct StructuralReport {
    std::vector<unsigned> nonzero_zeta;  ///< indices with nonzero coefficient
    bool target_only = false;            ///< no zeta(a) except the family's own
};

struct ComputedForm {
    FamilySpec spec;
    ZetaForm form;
    StructuralReport report;
};

StructuralReport structural_report(Family family, const ZetaForm& form);

/// Exact value of the family integral: the sum of integrate_piece over the
/// assembled pieces. Propagates NonCancellingDivergence.
ComputedForm compute_form(FamilySpec spec);

}  // namespace zetaforge
