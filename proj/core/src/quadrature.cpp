#include "duet/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "duet/error.hpp"

namespace duet {

namespace {

// Kronrod 15-point abscissae (positive half) and weights, with the embedded
// 7-point Gauss weights, as tabulated in QUADPACK's qk15.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double a = 0.0;
  double b = 0.0;
  bool tail = false;  // integration variable is t with omega = split / t
  std::vector<double> value;
  std::vector<double> error;
  std::vector<double> magnitude;
};

class PanelRule {
 public:
  PanelRule(const VectorIntegrand& f, std::size_t dim, double split)
      : f_(f), dim_(dim), split_(split), fv_(dim), fm_(dim), resg_(dim), resk_(dim),
        resabs_(dim), fvals_(15 * dim) {}

  void apply(Panel& p) {
    const double center = 0.5 * (p.a + p.b);
    const double half = 0.5 * (p.b - p.a);
    p.value.assign(dim_, 0.0);
    p.error.assign(dim_, 0.0);
    p.magnitude.assign(dim_, 0.0);
    std::fill(resg_.begin(), resg_.end(), 0.0);
    std::fill(resk_.begin(), resk_.end(), 0.0);
    std::fill(resabs_.begin(), resabs_.end(), 0.0);

    // Node k in 0..14: k < 7 left nodes, 7 center, > 7 right nodes.
    for (int k = 0; k < 15; ++k) {
      const int j = k < 7 ? k : (k == 7 ? 7 : 14 - k);
      const double x = k < 7 ? center - half * kXgk[j] : center + half * kXgk[j];
      eval(x, p.tail);
      const double wk = kWgk[j];
      // Gauss nodes are the odd Kronrod indices (1, 3, 5) and the center.
      double wg = 0.0;
      if (j == 7) wg = kWg[3];
      else if (j % 2 == 1) wg = kWg[j / 2];
      for (std::size_t c = 0; c < dim_; ++c) {
        fvals_[k * dim_ + c] = fv_[c];
        resk_[c] += wk * fv_[c];
        resg_[c] += wg * fv_[c];
        resabs_[c] += wk * std::abs(fv_[c]);
        p.magnitude[c] += wk * fm_[c];
      }
    }
    for (std::size_t c = 0; c < dim_; ++c) {
      const double mean = 0.5 * resk_[c];
      double asc = 0.0;
      for (int k = 0; k < 15; ++k) {
        const int j = k < 7 ? k : (k == 7 ? 7 : 14 - k);
        asc += kWgk[j] * std::abs(fvals_[k * dim_ + c] - mean);
      }
      const double result = resk_[c] * half;
      const double abs_h = std::abs(half);
      double err = std::abs((resk_[c] - resg_[c]) * half);
      const double resasc = asc * abs_h;
      const double resabs = resabs_[c] * abs_h;
      if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
      if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
        err = std::max(50.0 * kEps * resabs, err);
      p.value[c] = result;
      p.error[c] = err;
      p.magnitude[c] *= abs_h;
    }
    evaluations_ += 15;
  }

  std::size_t evaluations() const { return evaluations_; }

 private:
  void eval(double x, bool tail) {
    if (!tail) {
      f_(x, fv_.data(), fm_.data());
      return;
    }
    const double omega = split_ / x;
    const double jac = split_ / (x * x);
    f_(omega, fv_.data(), fm_.data());
    for (std::size_t c = 0; c < dim_; ++c) {
      fv_[c] *= jac;
      fm_[c] *= jac;
    }
  }

  const VectorIntegrand& f_;
  std::size_t dim_;
  double split_;
  std::vector<double> fv_, fm_, resg_, resk_, resabs_, fvals_;
  std::size_t evaluations_ = 0;
};

}  // namespace

QuadratureResult integrate_half_line(const VectorIntegrand& f, std::size_t dim, double split,
                                     std::vector<double> breakpoints, double rel_tol, double abs_tol,
                                     std::size_t max_panels) {
  if (dim == 0) throw InvalidParameter("quadrature: integrand dimension must be > 0");
  if (!(split > 0.0) || !std::isfinite(split))
    throw InvalidParameter("quadrature: split frequency must be finite and > 0");
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw InvalidParameter("quadrature: tolerances must be > 0");

  std::vector<double> cuts{0.0};
  for (double b : breakpoints)
    if (std::isfinite(b) && b > 0.0 && b < split) cuts.push_back(b);
  cuts.push_back(split);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [split](double x, double y) { return std::abs(x - y) <= 1e-12 * split; }),
             cuts.end());

  PanelRule rule(f, dim, split);
  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) panels.push_back(Panel{cuts[i], cuts[i + 1], false, {}, {}, {}});
  // The tail is split once at t = 1/2 (omega = 2 split) and t = 1/8.
  panels.push_back(Panel{0.0, 0.125, true, {}, {}, {}});
  panels.push_back(Panel{0.125, 0.5, true, {}, {}, {}});
  panels.push_back(Panel{0.5, 1.0, true, {}, {}, {}});
  for (auto& p : panels) rule.apply(p);

  QuadratureResult out;
  out.value.assign(dim, 0.0);
  out.error.assign(dim, 0.0);
  out.magnitude.assign(dim, 0.0);
  std::vector<double> tol(dim);

  auto totals = [&]() {
    std::fill(out.value.begin(), out.value.end(), 0.0);
    std::fill(out.error.begin(), out.error.end(), 0.0);
    std::fill(out.magnitude.begin(), out.magnitude.end(), 0.0);
    for (const auto& p : panels)
      for (std::size_t c = 0; c < dim; ++c) {
        out.value[c] += p.value[c];
        out.error[c] += p.error[c];
        out.magnitude[c] += p.magnitude[c];
      }
    bool done = true;
    for (std::size_t c = 0; c < dim; ++c) {
      tol[c] = std::max({abs_tol, rel_tol * std::abs(out.value[c]), 50.0 * kEps * out.magnitude[c]});
      if (out.error[c] > tol[c]) done = false;
    }
    return done;
  };

  while (!totals()) {
    if (panels.size() >= max_panels) {
      out.panels = panels.size();
      out.evaluations = rule.evaluations();
      out.converged = false;
      return out;
    }
    // Refine the panel contributing the largest share of any unmet budget.
    std::size_t worst = 0;
    double worst_score = -1.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      double score = 0.0;
      for (std::size_t c = 0; c < dim; ++c)
        if (out.error[c] > tol[c]) score = std::max(score, panels[i].error[c] / tol[c]);
      if (score > worst_score) {
        worst_score = score;
        worst = i;
      }
    }
    Panel left = panels[worst];
    Panel right = panels[worst];
    const double mid = 0.5 * (left.a + left.b);
    if (!(mid > left.a && mid < left.b)) {
      // Panel cannot be bisected further in floating point.
      out.panels = panels.size();
      out.evaluations = rule.evaluations();
      out.converged = false;
      return out;
    }
    left.b = mid;
    right.a = mid;
    rule.apply(left);
    rule.apply(right);
    panels[worst] = std::move(left);
    panels.insert(panels.begin() + static_cast<std::ptrdiff_t>(worst) + 1, std::move(right));
  }
  out.panels = panels.size();
  out.evaluations = rule.evaluations();
  out.converged = true;
  return out;
}

ScalarQuadrature integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, double abs_tol, std::size_t max_panels) {
  if (!(b > a)) throw InvalidParameter("quadrature: interval must satisfy b > a");
  // Reuse the vector engine on a finite range by folding [a, b] into the
  // non-tail pool: shift to [0, b - a] and cut the tail off with a zero integrand.
  const double width = b - a;
  VectorIntegrand g = [&](double w, double* v, double* m) {
    if (w >= width) {
      v[0] = 0.0;
      m[0] = 0.0;
      return;
    }
    v[0] = f(a + w);
    m[0] = std::abs(v[0]);
  };
  const QuadratureResult r = integrate_half_line(g, 1, width, {}, rel_tol, abs_tol, max_panels);
  if (!r.converged) throw ConvergenceError("quadrature: interval integration did not converge");
  return {r.value[0], r.error[0]};
}

}  // namespace duet
