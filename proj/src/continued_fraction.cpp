#include "gammacf/continued_fraction.hpp"

#include <utility>

namespace gammacf {
namespace {

// Integer polynomial from ascending decimal coefficients.
Polynomial ipoly(std::initializer_list<const char*> coeffs) {
    std::vector<BigRational> c;
    c.reserve(coeffs.size());
    for (const char* s : coeffs) {
        c.push_back(BigRational::parse(s));
    }
    return Polynomial(std::move(c));
}

// scale * num / den, kept as written.
RationalFunction term(const char* scale, const Polynomial& num, const Polynomial& den) {
    return RationalFunction(num * BigRational::parse(scale), den);
}

Polynomial n2() { return Polynomial({0, 0, 1}); }

}  // namespace

CFCoefficients CFCoefficients::prefix(int k) const {
    if (k < 0 || k > depth()) {
        throw Error(ErrorCode::InvalidIndex, "prefix length " + std::to_string(k));
    }
    return {std::vector<BigRational>(a.begin(), a.begin() + k)};
}

CFCoefficients CFCoefficients::extended(const BigRational& value) const {
    CFCoefficients r = *this;
    r.a.push_back(value);
    return r;
}

RationalFunction build_cf(const CFCoefficients& coeffs) {
    const int k = coeffs.depth();
    if (k < 1) {
        throw Error(ErrorCode::InvalidArgument, "continued fraction needs at least a_1");
    }
    if (k == 1) {
        return RationalFunction(Polynomial::constant(coeffs.a[0]), poly_n());
    }
    const RationalFunction n(poly_n());
    RationalFunction tail = RationalFunction(Polynomial({coeffs.a[static_cast<size_t>(k - 1)], 1}));
    for (int j = k - 2; j >= 1; --j) {
        if (tail.is_zero()) {
            throw Error(ErrorCode::DegenerateTail, "level " + std::to_string(j + 2) + " vanishes");
        }
        tail = n + RationalFunction(Polynomial({0, coeffs.a[static_cast<size_t>(j)]})) / tail;
    }
    if (tail.is_zero()) {
        throw Error(ErrorCode::DegenerateTail, "level 2 vanishes");
    }
    return RationalFunction(coeffs.a[0]) / tail;
}

CFCoefficients theorem1_coefficients() {
    // Even-indexed entries; each odd entry a_{2j+1} is -a_{2j}.
    static const char* even[] = {"1/6", "3/5", "79/126", "7230/6241", "4146631/3833346",
                                 "306232774533/179081182865"};
    CFCoefficients c;
    c.a.push_back(rat(1, 2));
    for (const char* v : even) {
        const BigRational a = BigRational::parse(v);
        c.a.push_back(a);
        c.a.push_back(-a);
    }
    return c;
}

std::vector<BigRational> tabulated_rate_constants() {
    static const char* table[] = {
        "-1/12",
        "-1/72",
        "1/120",
        "1/200",
        "-79/25200",
        "-6241/3175200",
        "241/105840",
        "58081/22018248",
        "-262445/91974960",
        "-2755095121/892586949408",
        "20169451/3821257440",
        "406806753641401/45071152103463200",
        "-71521421431/5152068292800",
    };
    std::vector<BigRational> c;
    for (const char* s : table) {
        c.push_back(BigRational::parse(s));
    }
    return c;
}

RationalFunction appendix_form(int k) {
    const RationalFunction half_over_n = term("1", ipoly({"1"}), ipoly({"0", "2"}));
    switch (k) {
        case 1:
            return half_over_n;
        case 2:
            return term("1", ipoly({"3"}), ipoly({"1", "6"}));
        case 3:
            return half_over_n - term("1/12", ipoly({"1"}), n2());
        case 4:
            return term("1", ipoly({"13", "30"}), ipoly({"1", "6", "10"}) * rat(6));
        case 5:
            return half_over_n - term("5", ipoly({"1"}), ipoly({"1", "0", "10"}) * rat(6));
        case 6:
            return term("5", ipoly({"281", "348", "756"}), ipoly({"79", "600", "790", "1260"}) * rat(6));
        case 7:
            return half_over_n - term("79/1200", ipoly({"1"}), n2()) -
                   term("147", ipoly({"1"}), ipoly({"10", "0", "21"}) * rat(400));
        case 8:
            return term("1", ipoly({"964337", "2646000", "2599730", "2621220"}),
                        ipoly({"19039", "144600", "315210", "303660", "262122"}) * rat(20));
        case 9:
            return half_over_n - term("7", ipoly({"871", "0", "790"}),
                                      ipoly({"241", "0", "3990", "0", "3318"}) * rat(20));
        case 10:
            return term("7",
                        ipoly({"108237701", "208886046", "523341290", "210464400", "230000760"}),
                        ipoly({"12649849", "107768934", "209431110", "395365320", "174158502",
                               "161000532"}) *
                            rat(20));
        case 11:
            return half_over_n - term("52489/894348", ipoly({"1"}), n2()) -
                   term("1", ipoly({"1237227621", "0", "584280400"}),
                        ipoly({"3549", "0", "13020", "0", "5302"}) * rat(4471740));
        case 12:
            return term("1",
                        ipoly({"3604759235968501", "11032319618513046", "17366281558290420",
                               "19958033982902400", "7661417445218460", "4964130389017800"}),
                        ipoly({"1058674313539", "9019254081474", "22801779033180", "33088387754520",
                               "33925126033722", "13474242079452", "7879572046060"}) *
                            rat(1260));
        case 13:
            return half_over_n -
                   term("1", ipoly({"39577260671", "0", "66288226620", "0", "15762446700"}),
                        ipoly({"20169451", "0", "434410620", "0", "646328298", "0", "150118540"}) *
                            rat(1260));
        default:
            throw Error(ErrorCode::OutOfTable, "no closed form for depth " + std::to_string(k));
    }
}

ApproximantFamily approximant_family(int depth) {
    if (depth < 1 || depth > kTabulatedDepth) {
        throw Error(ErrorCode::OutOfTable, "family depth " + std::to_string(depth));
    }
    ApproximantFamily f{theorem1_coefficients().prefix(depth), {}};
    for (int k = 1; k <= depth; ++k) {
        f.closed_forms.push_back(build_cf(f.coeffs.prefix(k)));
    }
    return f;
}

std::array<bool, kTabulatedDepth> validate_appendix() {
    std::array<bool, kTabulatedDepth> ok{};
    const CFCoefficients a = theorem1_coefficients();
    for (int k = 1; k <= kTabulatedDepth; ++k) {
        ok[static_cast<size_t>(k - 1)] = ratfun_equal(build_cf(a.prefix(k)), appendix_form(k));
    }
    return ok;
}

}  // namespace gammacf
