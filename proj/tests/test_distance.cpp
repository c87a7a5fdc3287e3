#include <random>

#include "doctest.h"
#include "dcgr/distance.hpp"

using namespace dcgr;

namespace {

unsigned z_weight(const ZVector& w) {
  unsigned s = 0;
  for (auto c : w) s += c != 0;
  return s;
}

unsigned lb_image_weight(const ZVector& w, unsigned p) {
  unsigned s = 0;
  for (auto c : w)
    for (auto b : lb_gray(c, p)) s += b != 0;
  return s;
}

// Minima over the Z_q row space of the phi generator matrix.
DistancePair row_space_distances(const DCCode& code, const GrayParams& g) {
  DistancePair d{UINT32_MAX, UINT32_MAX};
  for (const auto& w : row_space(phi_generator_matrix(code, g), g.p * g.p)) {
    if (z_weight(w) == 0) continue;
    d.d_phi = std::min(d.d_phi, z_weight(w));
    d.d_lb = std::min(d.d_lb, lb_image_weight(w, g.p));
  }
  return d;
}

}  // namespace

TEST_CASE("n = 2 table codes") {
  auto r = GaloisRing::quadratic(3);
  const auto g = four_square_params(3);
  const auto lcd = DCCode::from_digits(r, "41", "51");
  const auto sd = DCCode::from_digits(r, "10", "00");

  const auto a = enumerate_min_distance(lcd, g, DistanceTarget::phi);
  CHECK(a.min_distance == 4u);
  CHECK(a.exact);
  CHECK(a.codewords == 6561);
  CHECK(a.enumerated == 6560);
  CHECK(a.length == 8);
  CHECK(enumerate_min_distance(lcd, g, DistanceTarget::phi_then_lb).min_distance == 10u);
  CHECK(enumerate_min_distance(sd, g, DistanceTarget::phi).min_distance == 3u);
  const auto b = enumerate_min_distance(sd, g, DistanceTarget::phi_then_lb);
  CHECK(b.min_distance == 6u);
  CHECK(b.length == 24);
  CHECK(b.alphabet == "F_p");
}

TEST_CASE("message space agrees with the row space") {
  std::mt19937_64 rng(5);
  for (unsigned p : {3u, 7u}) {
    auto r = GaloisRing::quadratic(p);
    const auto g = four_square_params(p);
    const std::size_t max_n = p == 3 ? 2 : 1;
    for (int it = 0; it < 30; ++it) {
      const std::size_t n = 1 + rng() % max_n;
      std::vector<RingElement> a;
      for (std::size_t i = 0; i < n; ++i) a.push_back(RingElement::from_index(r, rng() % r->order_u64()));
      const DCCode code(r, a);
      const auto want = row_space_distances(code, g);
      const auto got = min_distances(code, g);
      CAPTURE(p);
      CAPTURE(n);
      CHECK(got.d_phi == want.d_phi);
      CHECK(got.d_lb == want.d_lb);
    }
  }
}

TEST_CASE("histogram") {
  auto r = GaloisRing::quadratic(3);
  const auto g = four_square_params(3);
  const auto code = DCCode::from_digits(r, "41", "51");
  std::vector<std::uint64_t> want(9, 0);
  for (const auto& w : row_space(phi_generator_matrix(code, g), 9)) ++want[z_weight(w)];
  DistanceOptions opt;
  opt.histogram = true;
  opt.threads = 3;
  CHECK(enumerate_min_distance(code, g, DistanceTarget::phi, opt).histogram == want);
  const auto lb = enumerate_min_distance(code, g, DistanceTarget::phi_then_lb, opt);
  std::uint64_t total = 0;
  for (auto v : lb.histogram) total += v;
  CHECK(total == 6561);
}

TEST_CASE("codeword-wise weight expansion") {
  std::mt19937_64 rng(11);
  for (unsigned p : {3u, 7u}) {
    auto r = GaloisRing::quadratic(p);
    const auto g = four_square_params(p);
    for (int it = 0; it < 200; ++it) {
      const std::size_t n = 1 + rng() % 4;
      std::vector<RingElement> a, m;
      for (std::size_t i = 0; i < n; ++i) {
        a.push_back(RingElement::from_index(r, rng() % r->order_u64()));
        m.push_back(RingElement::from_index(r, rng() % r->order_u64()));
      }
      const auto gm = generator_matrix(DCCode(r, a));
      std::vector<RingElement> word(2 * n, RingElement::zero(r));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < 2 * n; ++c) word[c] += m[i] * gm[i][c];
      const auto z = phi(word, g, n);
      REQUIRE(lb_image_weight(z, p) >= 2 * z_weight(z));
    }
  }
  auto r = GaloisRing::quadratic(3);
  const auto g = four_square_params(3);
  for (const auto& lit : {std::pair{"41", "51"}, std::pair{"10", "00"}, std::pair{"811", "081"}}) {
    const auto d = min_distances(DCCode::from_digits(r, lit.first, lit.second), g);
    CHECK(d.d_lb >= 2 * d.d_phi);
  }
}

TEST_CASE("n = 3 table code") {
  auto r = GaloisRing::quadratic(3);
  const auto g = four_square_params(3);
  const auto code = DCCode::from_digits(r, "811", "081");
  DistanceOptions opt;
  opt.threads = 4;
  const auto d = min_distances(code, g, opt);
  CHECK(d.d_phi == 6);
  CHECK(d.d_lb == 12);
  CHECK(is_self_dual(code));
  CHECK_FALSE(is_lcd(code));
}

TEST_CASE("n = 4 table codes") {
  auto r = GaloisRing::quadratic(3);
  const auto g = four_square_params(3);
  DistanceOptions opt;
  opt.threads = 4;
  const auto lcd = DCCode::from_digits(r, "3651", "6505");
  CHECK(is_lcd(lcd));
  const auto dl = min_distances(lcd, g, opt);
  CHECK(dl.d_phi == 5);
  CHECK(dl.d_lb == 12);
  const auto sd = DCCode::from_digits(r, "6731", "4752");
  CHECK(is_self_dual(sd));
  const auto ds = min_distances(sd, g, opt);
  CHECK(ds.d_phi == 6);
  CHECK(ds.d_lb == 12);
}

TEST_CASE("thread counts and bound-only mode") {
  auto r = GaloisRing::quadratic(3);
  const auto g = four_square_params(3);
  const auto code = DCCode::from_digits(r, "811", "081");
  DistanceOptions o1;
  o1.histogram = true;
  const auto base = enumerate_min_distance(code, g, DistanceTarget::phi_then_lb, o1);
  for (unsigned t : {4u, 16u}) {
    DistanceOptions o = o1;
    o.threads = t;
    const auto rep = enumerate_min_distance(code, g, DistanceTarget::phi_then_lb, o);
    CHECK(rep.min_distance == base.min_distance);
    CHECK(rep.histogram == base.histogram);
    CHECK(rep.enumerated == base.enumerated);
  }

  DistanceOptions bound;
  bound.threads = 4;
  bound.stop_at = 12;
  const auto hit = enumerate_min_distance(code, g, DistanceTarget::phi_then_lb, bound);
  CHECK(hit.below_stop);
  CHECK_FALSE(hit.min_distance.has_value());
  bound.stop_at = 11;
  const auto miss = enumerate_min_distance(code, g, DistanceTarget::phi_then_lb, bound);
  CHECK_FALSE(miss.below_stop);
  CHECK(miss.min_distance == 12u);
}

TEST_CASE("budget") {
  auto r = GaloisRing::quadratic(3);
  const auto g = four_square_params(3);
  DistanceOptions opt;
  opt.budget = 1000;
  const auto code = DCCode::from_digits(r, "811", "081");
  try {
    enumerate_min_distance(code, g, DistanceTarget::phi, opt);
    FAIL("no budget error");
  } catch (const DistanceBudgetError& e) {
    CHECK(e.required() == 531441);
    REQUIRE(e.upper_bound().has_value());
    CHECK(*e.upper_bound() >= 6);
  }
  CHECK_THROWS_AS(enumerate_min_distance(DCCode::from_digits(r, "41", "51"), four_square_params(7),
                                         DistanceTarget::phi),
                  ContextError);
}

TEST_CASE("random search") {
  DistanceOptions opt;
  opt.threads = 4;
  CHECK(random_search(3, 2, CodeKind::self_dual, 1, 0, opt).empty());
  const auto sd = random_search(3, 2, CodeKind::self_dual, 7, 40, opt);
  REQUIRE_FALSE(sd.empty());
  // exhaustive over all self-dual codes of length 4
  unsigned best = 0;
  const auto all = generate_all_self_dual(3, 2);
  CHECK(all.size() == 4);
  for (const auto& c : all) best = std::max(best, min_distances(c, four_square_params(3)).d_lb);
  CHECK(best == 6);
  CHECK(sd.front().d_lb == best);
  for (const auto& h : sd) CHECK(h.self_dual);
  const auto lcd = random_search(3, 2, CodeKind::lcd, 7, 40, opt);
  REQUIRE_FALSE(lcd.empty());
  for (const auto& h : lcd) CHECK(h.lcd);
  const auto again = random_search(3, 2, CodeKind::lcd, 7, 40);
  REQUIRE(again.size() == lcd.size());
  for (std::size_t i = 0; i < lcd.size(); ++i) {
    CHECK(again[i].a1 == lcd[i].a1);
    CHECK(again[i].a0 == lcd[i].a0);
  }
  // n divisible by p: rejection sampling
  CHECK_NOTHROW(random_search(3, 3, CodeKind::lcd, 2, 5, opt));
}
