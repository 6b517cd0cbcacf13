#include "strichartz/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace strichartz {

namespace {

// Legendre P_n(x) and its derivative by the three-term recurrence.
std::pair<double, double> legendre(std::size_t n, double x)
{
    double p0 = 1.0, p1 = x;
    if (n == 0) return {1.0, 0.0};
    for (std::size_t k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

QuadRule build_gauss_legendre(std::size_t n)
{
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pi = 3.14159265358979323846;
    std::size_t m = (n + 1) / 2;
    for (std::size_t i = 0; i < m; ++i) {
        // Tricomi-style initial guess, then Newton.
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double p, dp;
        for (int it = 0; it < 100; ++it) {
            std::tie(p, dp) = legendre(n, x);
            double dx = -p / dp;
            x += dx;
            if (std::abs(dx) < 1e-15) break;
        }
        std::tie(p, dp) = legendre(n, x);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

std::mutex g_gl_mutex;
std::map<std::size_t, QuadRule> g_gl_cache;

// QUADPACK 15-point Kronrod extension of 7-point Gauss.
const double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
const double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct GkResult {
    double integral;
    double error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fc = f(c);
    double result_g = fc * kWg[3];
    double result_k = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        double f1 = f(c - x);
        double f2 = f(c + x);
        result_k += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) result_g += kWg[j / 2] * (f1 + f2);
    }
    result_g *= h;
    result_k *= h;
    double err = std::abs(result_k - result_g);
    return {result_k, err};
}

} // namespace

const QuadRule& gauss_legendre(std::size_t n)
{
    if (n == 0) throw std::invalid_argument("gauss_legendre: n must be positive");
    std::lock_guard<std::mutex> lock(g_gl_mutex);
    auto it = g_gl_cache.find(n);
    if (it == g_gl_cache.end()) it = g_gl_cache.emplace(n, build_gauss_legendre(n)).first;
    return it->second;
}

QuadRule gauss_legendre(std::size_t n, double a, double b)
{
    const QuadRule& base = gauss_legendre(n);
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    for (std::size_t i = 0; i < n; ++i) {
        rule.nodes[i] = c + h * base.nodes[i];
        rule.weights[i] = h * base.weights[i];
    }
    return rule;
}

double integrate_adaptive_split(const std::function<double(double)>& f, double a, double b,
                                const std::vector<double>& split_points, double abs_tol,
                                std::size_t max_intervals)
{
    if (!(b > a)) return 0.0;

    struct Interval {
        double a, b, integral, error;
    };
    std::vector<Interval> stack;
    std::vector<double> cuts;
    cuts.push_back(a);
    for (double s : split_points)
        if (s > a && s < b) cuts.push_back(s);
    cuts.push_back(b);

    double total = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        GkResult r = gk15(f, cuts[i], cuts[i + 1]);
        stack.push_back({cuts[i], cuts[i + 1], r.integral, r.error});
        total += r.integral;
        total_err += r.error;
    }

    std::size_t used = stack.size();
    while (total_err > abs_tol) {
        // Refine the interval with the largest error estimate.
        std::size_t worst = 0;
        for (std::size_t i = 1; i < stack.size(); ++i)
            if (stack[i].error > stack[worst].error) worst = i;
        if (stack[worst].error == 0.0) break;
        if (++used > max_intervals)
            throw std::runtime_error("integrate_adaptive: subdivision budget exhausted");

        Interval iv = stack[worst];
        double mid = 0.5 * (iv.a + iv.b);
        if (mid <= iv.a || mid >= iv.b) break; // interval at rounding width
        GkResult left = gk15(f, iv.a, mid);
        GkResult right = gk15(f, mid, iv.b);
        total += left.integral + right.integral - iv.integral;
        total_err += left.error + right.error - iv.error;
        stack[worst] = {iv.a, mid, left.integral, left.error};
        stack.push_back({mid, iv.b, right.integral, right.error});
    }
    return total;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, std::size_t max_intervals)
{
    return integrate_adaptive_split(f, a, b, {}, abs_tol, max_intervals);
}

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        double max_panel_width, std::size_t points_per_panel)
{
    if (!(b > a)) return 0.0;
    std::size_t panels = static_cast<std::size_t>(std::ceil((b - a) / max_panel_width));
    if (panels < 1) panels = 1;
    const QuadRule& base = gauss_legendre(points_per_panel);
    const double w = (b - a) / panels;
    double sum = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
        const double pa = a + p * w;
        const double c = pa + 0.5 * w;
        const double h = 0.5 * w;
        double panel = 0.0;
        for (std::size_t i = 0; i < points_per_panel; ++i)
            panel += base.weights[i] * f(c + h * base.nodes[i]);
        sum += panel * h;
    }
    return sum;
}

} // namespace strichartz
