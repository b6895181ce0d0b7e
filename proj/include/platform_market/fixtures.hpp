#pragma once

#include <map>
#include <string>

#include "platform_market/market.hpp"

namespace pmkt {

struct FixtureParams {
  long n = 0;                  // fig2, fig4
  Rational eps = Rational(0);  // fig2..fig5
  Rational alpha = Rational(0);  // fig3
  Rational x = Rational(0);      // fig4
  Rational big = Rational(0);    // fig5's H
};

struct Fixture {
  std::string name;
  Market market;
  std::map<std::string, std::string> params;  // for reports
};

// fig1                       — 4 buyers, 3 sellers, no pure equilibrium at α=1/2
// fig2(n, eps)               — homogeneous, no edges; values n+ε, n/2, …, n/n
// fig3(alpha, eps)           — 3x3 ring; cross value (2−α)/(1−α) − ε
// fig4(n, x, eps)            — general-valuation chain; PoA → n
// fig5(eps, big)             — min-price pathology (H = big)
Fixture generate_fixture(const std::string& name, const FixtureParams& params);

}  // namespace pmkt
