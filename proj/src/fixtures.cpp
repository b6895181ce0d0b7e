#include "platform_market/fixtures.hpp"

#include "platform_market/errors.hpp"

namespace pmkt {

namespace {

std::vector<std::vector<Rational>> zeros(int n, int m) {
  return std::vector<std::vector<Rational>>(n, std::vector<Rational>(m, Rational(0)));
}

Adjacency no_edges(int n, int m) {
  return Adjacency(n, std::vector<uint8_t>(m, 0));
}

Fixture fig1() {
  auto v = zeros(4, 3);
  v[0][0] = 1;
  v[1][0] = rat(61, 20);  // 3.05
  v[1][1] = 1;
  v[1][2] = rat(23, 20);  // 1.15
  v[2][1] = rat(11, 10);  // 1.1
  v[2][2] = 1;
  v[3][2] = rat(1, 20);  // 0.05
  auto g = no_edges(4, 3);
  g[0][0] = g[1][1] = g[2][2] = 1;
  return {"fig1", Market::create(std::move(v), std::move(g)), {}};
}

Fixture fig2(long n, const Rational& eps) {
  if (n < 1) fail("BadParams", "fig2 needs n >= 1");
  if (eps < 0) fail("BadParams", "fig2 needs eps >= 0");
  auto v = zeros(static_cast<int>(n), static_cast<int>(n));
  for (int i = 0; i < n; ++i) {
    Rational val = i == 0 ? Rational(n) + eps : rat(n, i + 1);
    for (int j = 0; j < n; ++j) v[i][j] = val;
  }
  return {"fig2", Market::create(std::move(v), no_edges(n, n)), {}};
}

Fixture fig3(const Rational& alpha, const Rational& eps) {
  if (alpha < 0 || alpha >= 1) fail("BadParams", "fig3 needs alpha in [0,1)");
  if (eps < 0) fail("BadParams", "fig3 needs eps >= 0");
  Rational cross = (Rational(2) - alpha) / (Rational(1) - alpha) - eps;
  auto v = zeros(3, 3);
  v[0][0] = v[1][1] = v[2][2] = 1;
  v[1][0] = cross;  // B values a
  v[0][2] = cross;  // A values c
  v[2][1] = cross;  // C values b
  auto g = no_edges(3, 3);
  g[0][0] = g[1][1] = g[2][2] = 1;
  return {"fig3", Market::create(std::move(v), std::move(g)), {}};
}

Fixture fig4(long n, const Rational& x, const Rational& eps) {
  if (n < 2) fail("BadParams", "fig4 needs n >= 2");
  if (eps < 0) fail("BadParams", "fig4 needs eps >= 0");
  Rational nr(n), n1(n - 1);
  auto v = zeros(static_cast<int>(n), static_cast<int>(n));
  v[0][n - 1] = 1;
  v[0][0] = (nr * x / n1 + nr) / (x + nr) - eps;
  for (long i = 2; i <= n; ++i) v[i - 1][n - 1] = x;
  for (long i = 2; i <= n - 1; ++i)
    v[i - 1][i - 1] = nr * nr * x / ((x + nr) * n1) + Rational(i - 1) * eps;
  for (long i = 2; i <= n; ++i) v[i - 1][i - 2] = nr * x / n1;
  auto g = no_edges(n, n);
  for (long k = 0; k + 1 < n; ++k) g[k][k] = 1;
  return {"fig4", Market::create(std::move(v), std::move(g)), {}};
}

Fixture fig5(const Rational& eps, const Rational& big) {
  if (eps < 0 || big < 0) fail("BadParams", "fig5 needs eps, H >= 0");
  auto v = zeros(4, 4);
  v[0][0] = 1;
  v[1][1] = 1;
  v[2][2] = 1;
  v[3][3] = 1;
  v[0][1] = eps;  // A values b
  v[2][3] = 1;    // C values d
  v[1][0] = 3;    // B values a
  v[3][2] = big;  // D values c
  auto g = no_edges(4, 4);
  g[0][0] = g[1][1] = g[2][2] = g[3][3] = 1;
  g[0][1] = 1;
  g[2][3] = 1;
  return {"fig5", Market::create(std::move(v), std::move(g)), {}};
}

}  // namespace

Fixture generate_fixture(const std::string& name, const FixtureParams& p) {
  Fixture f;
  if (name == "fig1") {
    f = fig1();
  } else if (name == "fig2") {
    f = fig2(p.n, p.eps);
    f.params["n"] = std::to_string(p.n);
    f.params["eps"] = rational_str(p.eps);
  } else if (name == "fig3") {
    f = fig3(p.alpha, p.eps);
    f.params["alpha"] = rational_str(p.alpha);
    f.params["eps"] = rational_str(p.eps);
  } else if (name == "fig4") {
    f = fig4(p.n, p.x, p.eps);
    f.params["n"] = std::to_string(p.n);
    f.params["x"] = rational_str(p.x);
    f.params["eps"] = rational_str(p.eps);
  } else if (name == "fig5") {
    f = fig5(p.eps, p.big);
    f.params["eps"] = rational_str(p.eps);
    f.params["H"] = rational_str(p.big);
  } else {
    fail("UnknownFixture", "no fixture named '" + name + "'");
  }
  return f;
}

}  // namespace pmkt
