#include <random>
#include <set>

#include "doctest.h"
#include "dcgr/graymaps.hpp"

using namespace dcgr;

namespace {

std::size_t hamming(const std::vector<Coeff>& a, const std::vector<Coeff>& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

// Words of the Z_q code spanned by m orthogonal to every row of m.
std::uint64_t z_hull(const ZMatrix& m, unsigned q) {
  std::uint64_t h = 0;
  for (const auto& w : row_space(m, q)) {
    bool ok = true;
    for (const auto& row : m) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < w.size(); ++i) acc += std::uint64_t{w[i]} * row[i];
      ok = ok && acc % q == 0;
    }
    h += ok;
  }
  return h;
}

DCCode random_code(const RingPtr& r, std::size_t n, std::mt19937_64& rng) {
  std::vector<RingElement> a;
  for (std::size_t i = 0; i < n; ++i) a.push_back(RingElement::from_index(r, rng() % r->order_u64()));
  return DCCode(r, std::move(a));
}

}  // namespace

TEST_CASE("four-square parameters") {
  const auto g3 = four_square_params(3);
  CHECK(std::array<unsigned, 4>{g3.k, g3.s, g3.t, g3.r} == std::array<unsigned, 4>{4, 3, 1, 1});
  CHECK(g3.det == 1);
  const auto g7 = four_square_params(7);
  CHECK(std::array<unsigned, 4>{g7.k, g7.s, g7.t, g7.r} == std::array<unsigned, 4>{8, 7, 5, 3});
  CHECK(g7.det == 38);
  CHECK_THROWS_AS(four_square_params(5), DomainError);
  CHECK_THROWS_AS(four_square_params(9), DomainError);
  for (unsigned p : {3u, 7u, 11u, 19u, 23u, 31u, 43u}) {
    const auto g = four_square_params(p);
    CAPTURE(p);
    CHECK(g.k * g.k + g.s * g.s + g.t * g.t + g.r * g.r == 3 * p * p);
    CHECK(g.det % p != 0);
    CHECK(g.k < p * p);
    for (const auto& d : g.all_decompositions) {
      const auto [k, s, t, r] = d.ksrt;
      CHECK(k * k + s * s + t * t + r * r == 3 * p * p);
      CHECK((k >= s && s >= t && t >= r));
    }
  }
  // Exhaustive count of non-increasing solutions for 27.
  CHECK(four_square_decompositions(3).size() == 3);
}

TEST_CASE("phi on ring elements") {
  auto r = GaloisRing::quadratic(3);
  const auto g = four_square_params(3);
  CHECK(phi(RingElement::one(r), g) == std::pair<Coeff, Coeff>{4, 1});
  CHECK(phi(RingElement::zero(r), g) == std::pair<Coeff, Coeff>{0, 0});
  CHECK(phi(RingElement::variable(r), g) == std::pair<Coeff, Coeff>{3, 1});
  CHECK_THROWS_AS(phi(RingElement::one(GaloisRing::quadratic(7)), g), ContextError);
  CHECK_THROWS_AS(phi(RingElement::one(GaloisRing::with_degree(3, 4)), g), ContextError);

  for (unsigned p : {3u, 7u}) {
    auto ring = GaloisRing::quadratic(p);
    const auto gp = four_square_params(p);
    std::set<std::pair<Coeff, Coeff>> seen;
    for (std::uint64_t i = 0; i < ring->order_u64(); ++i) seen.insert(phi(RingElement::from_index(ring, i), gp));
    CHECK(seen.size() == ring->order_u64());
  }
}

TEST_CASE("phi generator matrix block form") {
  auto r = GaloisRing::quadratic(3);
  const auto g = four_square_params(3);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 50; ++it) {
    const std::size_t n = 1 + rng() % 5;
    const auto code = random_code(r, n, rng);
    const auto m = phi_generator_matrix(code, g);
    REQUIRE(m.size() == 2 * n);
    REQUIRE(m[0].size() == 4 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& a = code.coefficients()[(j + n - i) % n];
        const long long a0 = a[0], a1 = a[1];
        const long long id = i == j;
        auto md = [](long long v) { return static_cast<Coeff>(((v % 9) + 9) % 9); };
        REQUIRE(m[i][j] == md(4 * id));
        REQUIRE(m[i][n + j] == md(id));
        REQUIRE(m[i][2 * n + j] == md(4 * a0 + 3 * a1));
        REQUIRE(m[i][3 * n + j] == md(a0 + a1));
        REQUIRE(m[n + i][j] == md(3 * id));
        REQUIRE(m[n + i][n + j] == md(id));
        REQUIRE(m[n + i][2 * n + j] == md(3 * a0 - 4 * a1));
        REQUIRE(m[n + i][3 * n + j] == md(a0 - a1));
      }
    }
  }
  // a = yx: A0 = 0, A1 = X.
  const auto m = phi_generator_matrix(DCCode::from_digits(r, "10", "00"), g);
  CHECK(m == ZMatrix{{4, 0, 1, 0, 0, 3, 0, 1},
                     {0, 4, 0, 1, 3, 0, 1, 0},
                     {3, 0, 1, 0, 0, 5, 0, 8},
                     {0, 3, 0, 1, 5, 0, 8, 0}});
}

TEST_CASE("phi image equals the row space") {
  auto r = GaloisRing::quadratic(3);
  const auto g = four_square_params(3);
  for (const auto& code : {DCCode::from_digits(r, "41", "51"), DCCode::from_digits(r, "10", "00")}) {
    const auto space = row_space(phi_generator_matrix(code, g), 9);
    CHECK(space.size() == 6561);
    const auto gm = generator_matrix(code);
    std::set<ZVector> image;
    for (std::uint64_t i = 0; i < 81 * 81; ++i) {
      const RingElement m0 = RingElement::from_index(r, i % 81), m1 = RingElement::from_index(r, i / 81);
      std::vector<RingElement> word;
      for (std::size_t c = 0; c < 4; ++c) word.push_back(m0 * gm[0][c] + m1 * gm[1][c]);
      image.insert(phi(word, g, 2));
    }
    CHECK(std::set<ZVector>(space.begin(), space.end()) == image);
  }
}

TEST_CASE("duality preservation") {
  auto r = GaloisRing::quadratic(3);
  const auto g = four_square_params(3);
  std::mt19937_64 rng(19);
  for (int it = 0; it < 200; ++it) {
    const auto code = random_code(r, 1 + rng() % 2, rng);
    const auto d = check_duality_preservation(code, g);
    REQUIRE(d.holds());
  }
  const auto sd = DCCode::from_digits(r, "10", "00");
  const auto gsd = phi_generator_matrix(sd, g);
  CHECK(z_hull(gsd, 9) == 6561);  // self-dual over Z_9
  const auto t1 = DCCode::from_digits(r, "41", "51");
  CHECK(z_hull(phi_generator_matrix(t1, g), 9) == hull_size(t1));
  const auto lcd = DCCode::from_digits(r, "12", "01");
  REQUIRE(is_lcd(lcd));
  CHECK(z_hull(phi_generator_matrix(lcd, g), 9) == 1);
}

TEST_CASE("orthogonality transport") {
  std::mt19937_64 rng(23);
  for (unsigned p : {3u, 7u}) {
    auto ring = GaloisRing::quadratic(p);
    const auto g = four_square_params(p);
    const unsigned q = p * p;
    for (int it = 0; it < 10000; ++it) {
      const std::size_t N = 1 + rng() % 4;
      std::vector<RingElement> u, v;
      for (std::size_t i = 0; i < N; ++i) {
        u.push_back(RingElement::from_index(ring, rng() % ring->order_u64()));
        v.push_back(RingElement::from_index(ring, rng() % ring->order_u64()));
      }
      if (!is_unit(u.back())) u.back() += RingElement::one(ring);
      RingElement acc = RingElement::zero(ring);
      for (std::size_t i = 0; i + 1 < N; ++i) acc += u[i] * v[i];
      v.back() = -(acc * gr_inverse(u.back()));
      const auto pu = phi(u, g), pv = phi(v, g);
      std::uint64_t dot = 0;
      for (std::size_t i = 0; i < pu.size(); ++i) dot += std::uint64_t{pu[i]} * pv[i];
      REQUIRE(dot % q == 0);
    }
  }
}

TEST_CASE("lb_gray table and isometry") {
  const std::vector<std::vector<Coeff>> table = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}, {1, 1, 1}, {1, 2, 0},
                                                 {1, 0, 2}, {2, 2, 2}, {2, 0, 1}, {2, 1, 0}};
  const std::vector<unsigned> weights = {0, 2, 2, 3, 2, 2, 3, 2, 2};
  for (Coeff x = 0; x < 9; ++x) {
    CHECK(lb_gray(x, 3) == table[x]);
    CHECK(lb_weight(x, 3) == weights[x]);
  }
  // Phi is not additive.
  std::vector<Coeff> sum(3);
  for (int i = 0; i < 3; ++i) sum[i] = (lb_gray(1, 3)[i] + lb_gray(2, 3)[i]) % 3;
  CHECK(sum != lb_gray(3, 3));

  for (unsigned p : {3u, 7u, 11u}) {
    const unsigned q = p * p;
    std::set<std::vector<Coeff>> images;
    for (Coeff x = 0; x < q; ++x) {
      images.insert(lb_gray(x, p));
      std::size_t w = 0;
      for (auto c : lb_gray(x, p)) w += c != 0;
      REQUIRE(w == lb_weight(x, p));
      for (Coeff y = 0; y < q; ++y) REQUIRE(hamming(lb_gray(x, p), lb_gray(y, p)) == lb_weight((x + q - y) % q, p));
    }
    CHECK(images.size() == q);
  }
}
