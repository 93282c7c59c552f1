#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace meanforge {

/// Pairwise mean differences M_XY = X - Y, X above Y in the ordering
/// H <= G <= N1 <= N3 <= N2 <= A <= S. The first eleven carry closed-form
/// generating functions f, f', f''; the rest are evaluated as plain mean
/// differences only.
enum class DifferenceKind {
    SA, SN2, SN3, SN1, SG, SH,
    AN2, AN3, AN1, AG, AH,
    N2N3, N2N1, N2G, N2H,
    N3N1, N3G, N3H,
    N1G, N1H,
};

inline constexpr int kDifferenceKindCount = 20;

std::string_view difference_name(DifferenceKind k);
std::optional<DifferenceKind> parse_difference_kind(std::string_view name);
bool has_closed_forms(DifferenceKind k);

namespace closed {

template <class T> T cf_sqrt(T x) { return std::sqrt(x); }
#ifdef __SIZEOF_FLOAT128__
__float128 cf_sqrt(__float128 x);  // defined where quadmath is linked
#endif

// x^(3/2) and x^(5/2) without pow(); all closed forms below reduce to
// square roots and rational arithmetic.
template <class T> T cf_p32(T x) { return x * cf_sqrt(x); }
template <class T> T cf_p52(T x) { return x * x * cf_sqrt(x); }

// Generating function f with M(a,b) = a * f(b/a), one per closed-form kind,
// transcribed from the displayed expressions. Two transcriptions deviate
// from the display on purpose: f_N2G's trailing term is 4*sqrt(x) (the
// displayed 4x does not reproduce N2 - G, while the displayed f' and f''
// are exactly the derivatives of the 4*sqrt(x) form), and f1_AN2's
// denominator carries the sqrt(x) factor of the true derivative.

template <class T> T f_sa(T x)  { return cf_sqrt((x * x + 1) / 2) - (x + 1) / 2; }
template <class T> T f1_sa(T x) { return x / (cf_sqrt(T(2)) * cf_sqrt(x * x + 1)) - T(1) / 2; }
template <class T> T f2_sa(T x) { return 2 / cf_p32(2 * x * x + 2); }

template <class T> T f_sn3(T x)  { return cf_sqrt((x * x + 1) / 2) - (x + cf_sqrt(x) + 1) / 3; }
template <class T> T f1_sn3(T x) {
    return (6 * cf_p32(x) - (2 * cf_sqrt(x) + 1) * cf_sqrt(2 * (x * x + 1)))
         / (6 * cf_sqrt(2 * x * (x * x + 1)));
}
template <class T> T f2_sn3(T x) {
    const T c = cf_p32(2 * x * x + 2);
    return (24 * cf_p32(x) + c) / (12 * cf_p32(x) * c);
}

template <class T> T f_sn2(T x) {
    return (2 * cf_sqrt(x * x + 1) - (cf_sqrt(x) + 1) * cf_sqrt(x + 1)) / (2 * cf_sqrt(T(2)));
}
template <class T> T f1_sn2(T x) {
    return (4 * cf_p32(x) * cf_sqrt(x + 1) - (2 * x + cf_sqrt(x) + 1) * cf_sqrt(x * x + 1))
         / (4 * cf_sqrt(2 * x * (x + 1) * (x * x + 1)));
}
template <class T> T f2_sn2(T x) {
    return ((cf_p32(x) + 1) * cf_p32(x * x + 1) + 8 * cf_p32(x) * cf_p32(x + 1))
         / (8 * cf_sqrt(T(2)) * cf_p32(x * (x + 1) * (x * x + 1)));
}

template <class T> T f_sn1(T x) {
    const T s = cf_sqrt(x) + 1;
    return (2 * cf_sqrt(2 * (x * x + 1)) - s * s) / 4;
}
template <class T> T f1_sn1(T x) {
    return (4 * cf_p32(x) - (cf_sqrt(x) + 1) * cf_sqrt(2 * (x * x + 1)))
         / (4 * cf_sqrt(2 * x * (x * x + 1)));
}
template <class T> T f2_sn1(T x) {
    const T c = cf_p32(2 * x * x + 2);
    return (16 * cf_p52(x) + x * c) / (8 * cf_p52(x) * c);
}

template <class T> T f_sg(T x)  { return cf_sqrt((x * x + 1) / 2) - cf_sqrt(x); }
template <class T> T f1_sg(T x) {
    return (cf_sqrt(T(2)) * cf_p32(x) - cf_sqrt(x * x + 1)) / (2 * cf_sqrt(x * (x * x + 1)));
}
template <class T> T f2_sg(T x) {
    return 1 / (cf_sqrt(T(2)) * cf_p32(x * x + 1)) + 1 / (4 * cf_p32(x));
}

template <class T> T f_sh(T x) { return cf_sqrt((x * x + 1) / 2) - 2 * x / (x + 1); }
template <class T> T f1_sh(T x) {
    const T q = (x + 1) * (x + 1);
    const T r = cf_sqrt(2 * (x * x + 1));
    return (x * q - 2 * r) / (q * r);
}
template <class T> T f2_sh(T x) {
    const T cube = (x + 1) * (x + 1) * (x + 1);
    const T c = cf_p32(2 * x * x + 2);
    return 2 * (cube + 2 * c) / (cube * c);
}

template <class T> T f_an2(T x) {
    return (2 * (x + 1) - (cf_sqrt(x) + 1) * cf_sqrt(2 * (x + 1))) / 4;
}
template <class T> T f1_an2(T x) {
    const T r = cf_sqrt(2 * x * (x + 1));
    return (2 * r - (2 * x + cf_sqrt(x) + 1)) / (4 * r);
}
template <class T> T f2_an2(T x) { return (cf_p32(x) + 1) / (4 * cf_p32(x) * cf_p32(2 * x + 2)); }

template <class T> T f_ag(T x)  { const T s = cf_sqrt(x) - 1; return s * s / 2; }
template <class T> T f1_ag(T x) { return (cf_sqrt(x) - 1) / (2 * cf_sqrt(x)); }
template <class T> T f2_ag(T x) { return 1 / (4 * cf_p32(x)); }

template <class T> T f_ah(T x)  { return (x - 1) * (x - 1) / (2 * (x + 1)); }
template <class T> T f1_ah(T x) { return (x - 1) * (x + 3) / (2 * (x + 1) * (x + 1)); }
template <class T> T f2_ah(T x) { return 4 / ((x + 1) * (x + 1) * (x + 1)); }

template <class T> T f_n2n1(T x) {
    const T s = cf_sqrt(x) + 1;
    return (s * cf_sqrt(2 * (x + 1)) - s * s) / 4;
}
template <class T> T f1_n2n1(T x) {
    return (2 * x + cf_sqrt(x) + 1 - (cf_sqrt(x) + 1) * cf_sqrt(2 * (x + 1)))
         / (4 * cf_sqrt(2 * x * (x + 1)));
}
template <class T> T f2_n2n1(T x) {
    const T c = cf_p32(2 * x + 2);
    return (c - 2 * (cf_p32(x) + 1)) / (8 * cf_p32(x) * c);
}

template <class T> T f_n2g(T x) {
    return ((cf_sqrt(x) + 1) * cf_sqrt(2 * (x + 1)) - 4 * cf_sqrt(x)) / 4;
}
template <class T> T f1_n2g(T x) {
    return (2 * x + 1 + cf_sqrt(x) - 2 * cf_sqrt(2 * (x + 1))) / (4 * cf_sqrt(2 * x * (x + 1)));
}
template <class T> T f2_n2g(T x) {
    const T c = cf_p32(2 * x + 2);
    return (c - (cf_p32(x) + 1)) / (4 * cf_p32(x) * c);
}

/// Dispatch on kind; only valid for the eleven closed-form kinds.
template <class T> T f(DifferenceKind k, T x) {
    switch (k) {
        case DifferenceKind::SA:   return f_sa(x);
        case DifferenceKind::SN2:  return f_sn2(x);
        case DifferenceKind::SN3:  return f_sn3(x);
        case DifferenceKind::SN1:  return f_sn1(x);
        case DifferenceKind::SG:   return f_sg(x);
        case DifferenceKind::SH:   return f_sh(x);
        case DifferenceKind::AN2:  return f_an2(x);
        case DifferenceKind::AG:   return f_ag(x);
        case DifferenceKind::AH:   return f_ah(x);
        case DifferenceKind::N2N1: return f_n2n1(x);
        case DifferenceKind::N2G:  return f_n2g(x);
        default:                   return T(0);
    }
}

template <class T> T f1(DifferenceKind k, T x) {
    switch (k) {
        case DifferenceKind::SA:   return f1_sa(x);
        case DifferenceKind::SN2:  return f1_sn2(x);
        case DifferenceKind::SN3:  return f1_sn3(x);
        case DifferenceKind::SN1:  return f1_sn1(x);
        case DifferenceKind::SG:   return f1_sg(x);
        case DifferenceKind::SH:   return f1_sh(x);
        case DifferenceKind::AN2:  return f1_an2(x);
        case DifferenceKind::AG:   return f1_ag(x);
        case DifferenceKind::AH:   return f1_ah(x);
        case DifferenceKind::N2N1: return f1_n2n1(x);
        case DifferenceKind::N2G:  return f1_n2g(x);
        default:                   return T(0);
    }
}

template <class T> T f2(DifferenceKind k, T x) {
    switch (k) {
        case DifferenceKind::SA:   return f2_sa(x);
        case DifferenceKind::SN2:  return f2_sn2(x);
        case DifferenceKind::SN3:  return f2_sn3(x);
        case DifferenceKind::SN1:  return f2_sn1(x);
        case DifferenceKind::SG:   return f2_sg(x);
        case DifferenceKind::SH:   return f2_sh(x);
        case DifferenceKind::AN2:  return f2_an2(x);
        case DifferenceKind::AG:   return f2_ag(x);
        case DifferenceKind::AH:   return f2_ah(x);
        case DifferenceKind::N2N1: return f2_n2n1(x);
        case DifferenceKind::N2G:  return f2_n2g(x);
        default:                   return T(0);
    }
}

}  // namespace closed
}  // namespace meanforge
