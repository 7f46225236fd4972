#include "a2x/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace a2x {
namespace {

// 15-point Gauss-Kronrod rule: abscissae and weights on [-1, 1]
// (positive half; the rule is symmetric). Even indices embed the
// 7-point Gauss rule used for the error estimate.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526, 0.949107912342758524526189684048,
    0.864864423359769072789712788641, 0.741531185599394439863864773281,
    0.586087235467691130294144838259, 0.405845151377397166906606412077,
    0.207784955007898467600689403773, 0.0,
};
constexpr double kKronrodW[8] = {
    0.022935322010529224963732008059, 0.063092092629978553290700663189,
    0.104790010322250183839876322542, 0.140653259715525918745189590510,
    0.169004726639267902826583426599, 0.190350578064785409913256402421,
    0.204432940075298892414161999235, 0.209482141084727828012999174892,
};
constexpr double kGaussW[4] = {
    0.129484966168869693270611432679, 0.279705391489276667901467771424,
    0.381830050505118944950369775489, 0.417959183673469387755102040816,
};

struct Panel {
    double a;
    double b;
    double estimate;
    double error;
};

template <class F>
Panel evaluate_panel(const F& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double kronrod = kKronrodW[7] * f(mid);
    double gauss = kGaussW[3] * f(mid);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kNodes[i];
        const double pair = f(mid - dx) + f(mid + dx);
        kronrod += kKronrodW[i] * pair;
        if (i % 2 == 1) gauss += kGaussW[i / 2] * pair;
    }
    return {a, b, half * kronrod, std::abs(half * (kronrod - gauss))};
}

bool worse(const Panel& x, const Panel& y) { return x.error < y.error; }

}  // namespace

void QuadratureSpec::validate() const {
    if (!(relative_tolerance > 0.0)) throw validation_error("relative tolerance must be positive");
    if (!(absolute_tolerance > 0.0)) throw validation_error("absolute tolerance must be positive");
    if (max_subdivisions < 0) throw validation_error("max subdivisions must be >= 0");
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_tol, int max_subdivisions) {
    if (a == b) return 0.0;

    std::vector<Panel> panels;
    panels.push_back(evaluate_panel(f, a, b));
    double total = panels.front().estimate;
    double err = panels.front().error;

    const auto resync = [&] {
        total = 0.0;
        err = 0.0;
        for (const Panel& p : panels) {
            total += p.estimate;
            err += p.error;
        }
    };

    int splits = 0;
    while (err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (splits >= max_subdivisions) {
            throw nonconvergence_error("quadrature did not converge within the subdivision budget");
        }
        ++splits;
        std::pop_heap(panels.begin(), panels.end(), worse);
        const Panel worst = panels.back();
        panels.pop_back();
        total -= worst.estimate;
        err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        for (const Panel& half :
             {evaluate_panel(f, worst.a, mid), evaluate_panel(f, mid, worst.b)}) {
            total += half.estimate;
            err += half.error;
            panels.push_back(half);
            std::push_heap(panels.begin(), panels.end(), worse);
        }
        // Kill accumulated cancellation drift in the running sums.
        if (splits % 256 == 0) resync();
    }

    resync();
    return total;
}

}  // namespace a2x
