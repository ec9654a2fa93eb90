#include "zpm/quadrature.hpp"

#include <cmath>

namespace zpm {

PanelRule make_panel_rule(double upper, double max_panel) {
  if (!(upper > 0.0) || !(max_panel > 0.0))
    fail(ErrorKind::invalid_input, "panel rule needs positive extent");
  using boost::math::quadrature::gauss;
  using boost::math::quadrature::gauss_kronrod;
  // Boost stores the non-negative half of each symmetric rule; Gauss node m
  // coincides with Kronrod node 2m.
  const auto& kx = gauss_kronrod<double, 15>::abscissa();
  const auto& kw = gauss_kronrod<double, 15>::weights();
  const auto& gw = gauss<double, 7>::weights();
  auto gauss_weight = [&](std::size_t i) { return i % 2 == 0 ? gw[i / 2] : 0.0; };

  std::vector<double> ref_x;
  std::vector<double> ref_k;
  std::vector<double> ref_g;
  for (std::size_t i = kx.size(); i-- > 1;) {
    ref_x.push_back(-kx[i]);
    ref_k.push_back(kw[i]);
    ref_g.push_back(gauss_weight(i));
  }
  for (std::size_t i = 0; i < kx.size(); ++i) {
    ref_x.push_back(kx[i]);
    ref_k.push_back(kw[i]);
    ref_g.push_back(gauss_weight(i));
  }

  const auto panels = static_cast<std::size_t>(std::ceil(upper / max_panel));
  const double h = upper / static_cast<double>(panels);
  PanelRule rule;
  rule.nodes.reserve(panels * ref_x.size());
  rule.kronrod_weights.reserve(panels * ref_x.size());
  rule.gauss_weights.reserve(panels * ref_x.size());
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = (static_cast<double>(p) + 0.5) * h;
    for (std::size_t i = 0; i < ref_x.size(); ++i) {
      rule.nodes.push_back(mid + 0.5 * h * ref_x[i]);
      rule.kronrod_weights.push_back(0.5 * h * ref_k[i]);
      rule.gauss_weights.push_back(0.5 * h * ref_g[i]);
    }
  }
  return rule;
}

}  // namespace zpm
