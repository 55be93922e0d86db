#include "nng/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace nng {

namespace {

// Kronrod nodes on [0, 1] (positive half) with Kronrod and Gauss weights.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kKronrod[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGauss[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = kKronrod[7] * fc;
    double gauss = kGauss[3] * fc;
    for (int k = 0; k < 7; ++k) {
        const double dx = half * kNodes[k];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kKronrod[k] * pair;
        if (k % 2 == 1) gauss += kGauss[k / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol, int max_intervals) {
    QuadratureResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::priority_queue<Segment> queue;
    Segment first = gauss_kronrod(f, a, b);
    double total = first.value;
    double error = first.error;
    queue.push(first);

    while (error > std::max(abs_tol, rel_tol * std::abs(total)) &&
           static_cast<int>(queue.size()) < max_intervals) {
        const Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            queue.push(worst);   // cannot split further
            break;
        }
        const Segment left = gauss_kronrod(f, worst.a, mid);
        const Segment right = gauss_kronrod(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }

    // Re-sum to shed the drift of the running updates.
    out.value = 0.0;
    out.error = 0.0;
    std::vector<Segment> segments;
    while (!queue.empty()) {
        segments.push_back(queue.top());
        queue.pop();
    }
    for (const Segment& s : segments) {
        out.value += s.value;
        out.error += s.error;
    }
    out.intervals = static_cast<int>(segments.size());
    out.converged = out.error <= std::max(abs_tol, rel_tol * std::abs(out.value));
    return out;
}

} // namespace nng
