#include "gammacf/scans.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <thread>

namespace gammacf {

std::string_view to_string(Inequality which) {
    switch (which) {
        case Inequality::Lu2: return "lu2";
        case Inequality::Lu3: return "lu3";
        case Inequality::Thm2R10: return "thm2_r10";
        case Inequality::Thm2R11: return "thm2_r11";
    }
    return "unknown";
}

std::string_view to_string(DerivativeBound which) {
    switch (which) {
        case DerivativeBound::FR10: return "f_r10";
        case DerivativeBound::GR11: return "g_r11";
    }
    return "unknown";
}

size_t ScanReport::violations() const {
    return static_cast<size_t>(std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return !r.holds; }));
}

namespace {

void check_range(long first, long last) {
    if (first < 1 || last < first) {
        throw Error(ErrorCode::InvalidArgument,
                    "scan range " + std::to_string(first) + ":" + std::to_string(last) + " is empty or starts below 1");
    }
}

// Splits [first, last] into contiguous chunks, one per worker; each worker
// fills its own slice of `rows`, so ordering is deterministic.
void run_chunked(long first, long last, unsigned threads,
                 const std::function<void(long, long, CheckRow*)>& work, std::vector<CheckRow>& rows) {
    const long count = last - first + 1;
    rows.resize(static_cast<size_t>(count));
    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<long>(workers, count));
    if (workers <= 1) {
        work(first, last, rows.data());
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const long per = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const long a = first + static_cast<long>(w) * per;
        const long b = std::min(last, a + per - 1);
        if (a > b) {
            break;
        }
        pool.emplace_back([&, a, b, w] {
            try {
                work(a, b, rows.data() + (a - first));
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

struct Bounds {
    std::string quantity;
    BigRational lower;
    BigRational upper;
};

Bounds inequality_bounds(Inequality which, long n) {
    const BigRational bn(n);
    switch (which) {
        case Inequality::Lu2:
            return {"gamma - r2(n)", rat(1, 72) / (bn + 1).pow(3), rat(1, 72) / bn.pow(3)};
        case Inequality::Lu3:
            return {"r3(n) - gamma", rat(1, 120) / (bn + 1).pow(4), rat(1, 120) / (bn - 1).pow(4)};
        case Inequality::Thm2R10: {
            const BigRational c = bound_constant_d1() / 132;
            return {"gamma - r10(n)", c / (bn + 1).pow(11), c / bn.pow(11)};
        }
        case Inequality::Thm2R11: {
            const BigRational c = bound_constant_d2() / 156;
            return {"r11(n) - gamma", c / (bn + 1).pow(12), c / bn.pow(12)};
        }
    }
    return {};
}

int inequality_depth(Inequality which) {
    switch (which) {
        case Inequality::Lu2: return 2;
        case Inequality::Lu3: return 3;
        case Inequality::Thm2R10: return 10;
        case Inequality::Thm2R11: return 11;
    }
    return 0;
}

// gamma - r_k(n) for these depths is positive below gamma, so the checked
// quantity flips sign with the side r_k approaches from.
bool from_below(Inequality which) { return which == Inequality::Lu2 || which == Inequality::Thm2R10; }

enum class Decision { Holds, Violated, Inconclusive };

Decision decide(const Interval& v, const std::optional<BigRational>& lower,
                const std::optional<BigRational>& upper) {
    bool holds = true;
    if (lower) {
        if (!v.above(*lower)) {
            if (mpfr_cmp_q(v.hi(), lower->mpq().get_mpq_t()) <= 0) {
                return Decision::Violated;
            }
            holds = false;
        }
    }
    if (upper) {
        if (!v.below(*upper)) {
            if (mpfr_cmp_q(v.lo(), upper->mpq().get_mpq_t()) >= 0) {
                return Decision::Violated;
            }
            holds = false;
        }
    }
    return holds ? Decision::Holds : Decision::Inconclusive;
}

// Evaluates `value(bits)` with escalation until `decide` is conclusive.
template <typename F>
CheckRow escalate(long n, std::string quantity, std::optional<BigRational> lower,
                  std::optional<BigRational> upper, const ScanOptions& opts, Precision& max_used, F value) {
    for (Precision bits = opts.precision; bits <= opts.cap; bits *= 2) {
        CheckRow row{n, quantity, lower, upper, value(bits), false};
        const Decision d = decide(row.value, lower, upper);
        if (d != Decision::Inconclusive) {
            row.holds = d == Decision::Holds;
            max_used = std::max(max_used, bits);
            return row;
        }
    }
    throw Error(ErrorCode::PrecisionExhausted,
                quantity + " at n = " + std::to_string(n) + " unresolved at " + std::to_string(opts.cap) + " bits");
}

}  // namespace

ScanReport scan_inequalities(Inequality which, long first, long last, const ScanOptions& opts) {
    check_range(first, last);
    if (which == Inequality::Lu3 && first < 2) {
        throw Error(ErrorCode::InvalidArgument, "the r3 upper bound needs n >= 2");
    }
    ScanReport rep{std::string(to_string(which)), first, last, {}, 0};
    const int k = inequality_depth(which);
    const bool below = from_below(which);
    Precision max_used = 0;
    std::mutex used_mutex;

    run_chunked(first, last, opts.threads, [&](long a, long b, CheckRow* out) {
        Precision local_max = 0;
        BigRational h = harmonic(a);
        for (long n = a; n <= b; ++n) {
            if (n > a) {
                h += rat(1, n);
            }
            Bounds bounds = inequality_bounds(which, n);
            *out++ = escalate(n, bounds.quantity, bounds.lower, bounds.upper, opts, local_max, [&](Precision bits) {
                const Interval gamma = Interval::euler_gamma(bits + 32);
                const Interval r = eval_rk(n, k, h, bits + 32);
                return (below ? gamma - r : r - gamma).rounded(bits);
            });
        }
        std::lock_guard lock(used_mutex);
        max_used = std::max(max_used, local_max);
    }, rep.rows);
    rep.max_precision = max_used;
    return rep;
}

ScanReport scan_monotonicity(int k, long first, long last, const ScanOptions& opts) {
    check_range(first, last);
    if (k != 10 && k != 11) {
        throw Error(ErrorCode::InvalidArgument, "monotonicity scan covers r10 and r11 only");
    }
    const bool increasing = k == 10;
    ScanReport rep{"monotonicity_r" + std::to_string(k), first, last, {}, 0};
    const RationalFunction& r = approximant(k);
    const std::string quantity = "r" + std::to_string(k) + "(n) - r" + std::to_string(k) + "(n+1)";
    Precision max_used = 0;
    std::mutex used_mutex;

    run_chunked(first, last, opts.threads, [&](long a, long b, CheckRow* out) {
        Precision local_max = 0;
        BigRational r_next = r.eval(BigRational(a));
        for (long n = a; n <= b; ++n) {
            const BigRational r_n = r_next;
            r_next = r.eval(BigRational(n + 1));
            const BigRational exact_part = r_next - r_n - rat(1, n + 1);
            const BigRational log_arg = rat(n + 1, n);
            std::optional<BigRational> lower, upper;
            (increasing ? upper : lower) = BigRational(0);
            *out++ = escalate(n, quantity, lower, upper, opts, local_max, [&](Precision bits) {
                return (ln_interval(log_arg, bits + 32) + exact_part).rounded(bits);
            });
        }
        std::lock_guard lock(used_mutex);
        max_used = std::max(max_used, local_max);
    }, rep.rows);
    rep.max_precision = max_used;
    return rep;
}

ScanReport scan_bracket_order(long first, long last) {
    check_range(first, last);
    ScanReport rep{"bracket_order", first, last, {}, 0};
    const RationalFunction& r10 = approximant(10);
    const RationalFunction& r11 = approximant(11);
    for (long n = first; n <= last; ++n) {
        const BigRational gap = r10.eval(BigRational(n)) - r11.eval(BigRational(n));
        CheckRow row{n, "r11(n) - r10(n)", BigRational(0), std::nullopt, Interval::from_rational(gap, 64),
                     gap.sign() > 0};
        rep.rows.push_back(std::move(row));
    }
    rep.max_precision = 64;
    return rep;
}

const RationalFunction& bound_derivative(DerivativeBound which) {
    // d/dx ln(1 + 1/x) = -1/(x (x+1)).
    static const RationalFunction f_prime = [] {
        const RationalFunction inv_x1(Polynomial({1}), Polynomial({1, 1}));
        const RationalFunction dlog(Polynomial({-1}), Polynomial({0, 1, 1}));
        const RationalFunction& r = approximant(10);
        return inv_x1.derivative() - dlog - r.shifted(1).derivative() + r.derivative();
    }();
    static const RationalFunction g_prime = [] {
        const RationalFunction inv_x1(Polynomial({1}), Polynomial({1, 1}));
        const RationalFunction dlog(Polynomial({-1}), Polynomial({0, 1, 1}));
        const RationalFunction& r = approximant(11);
        return dlog - inv_x1.derivative() - r.derivative() + r.shifted(1).derivative();
    }();
    return which == DerivativeBound::FR10 ? f_prime : g_prime;
}

DerivativeCheck derivative_bound_check(DerivativeBound which, const BigRational& x) {
    if (x < BigRational(1)) {
        throw Error(ErrorCode::InvalidArgument, "derivative bounds are stated for x >= 1");
    }
    const bool f = which == DerivativeBound::FR10;
    const BigRational d = f ? bound_constant_d1() : bound_constant_d2();
    const int power = f ? 13 : 14;
    DerivativeCheck c;
    c.which = which;
    c.x = x;
    c.value = -bound_derivative(which).eval(x);
    c.lower = d / (x + 1).pow(power);
    c.upper = d / (x + rat(1, 2)).pow(power);
    c.holds = c.lower < c.value && c.value < c.upper;
    return c;
}

}  // namespace gammacf
