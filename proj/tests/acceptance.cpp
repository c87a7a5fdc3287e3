// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when the set of failing criteria equals the set given with
// --expect-fail (comma separated, default empty). Anything else exits 1.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "dcgr/format.hpp"

using namespace dcgr;

namespace {

// Limits, in seconds.
constexpr double kTableN2Seconds = 5.0;
constexpr double kTableN3Seconds = 60.0;
constexpr double kCountSeconds = 120.0;
constexpr double kEquivalenceSeconds = 60.0;
constexpr double kYamadaSeconds = 30.0;
constexpr double kEntropyTolerance = 1e-10;

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void expect(bool ok, const std::string& what) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
};

template <class T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome table_n2() {
  Outcome o;
  auto r = GaloisRing::quadratic(3);
  const auto g = four_square_params(3);
  struct Row {
    const char *a1, *a0;
    bool want_lcd, want_sd;
    unsigned d_phi, d_lb;
  };
  for (const Row& row : {Row{"41", "51", true, false, 4, 6}, Row{"10", "00", false, true, 3, 10}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto code = DCCode::from_digits(r, row.a1, row.a0);
    const auto cls = classify_by_matrix(code);
    const auto d = min_distances(code, g);
    const double t = seconds_since(t0);
    const std::string id = std::string(row.a1) + "|" + row.a0;
    if (row.want_lcd) o.expect(cls.lcd, id + " LCD (hull size " + show(hull_size(code)) + ")");
    if (row.want_sd) o.expect(cls.self_dual, id + " self-dual");
    o.expect(d.d_phi == row.d_phi, id + " d_phi = " + show(d.d_phi) + ", want " + show(row.d_phi));
    o.expect(d.d_lb == row.d_lb, id + " d_Phi = " + show(d.d_lb) + ", want " + show(row.d_lb));
    o.expect(t < kTableN2Seconds, id + " " + show(t) + " s");
  }
  return o;
}

Outcome table_n3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  auto r = GaloisRing::quadratic(3);
  const auto code = DCCode::from_digits(r, "811", "081");
  const auto cls = classify_by_matrix(code);
  const auto d = min_distances(code, four_square_params(3));
  const double t = seconds_since(t0);
  o.expect(d.d_phi == 6, "d_phi = " + show(d.d_phi) + ", want 6");
  o.expect(d.d_lb == 12, "d_Phi = " + show(d.d_lb) + ", want 12");
  o.expect(cls.self_dual != cls.lcd, std::string("classified as ") + (cls.self_dual ? "self-dual" : "") +
                                         (cls.lcd ? "LCD" : "") + (!cls.self_dual && !cls.lcd ? "neither" : "") +
                                         "; the " + (cls.self_dual ? "LCD" : "self-dual") + " listing is wrong");
  o.expect(t < kTableN3Seconds, show(t) + " s");
  return o;
}

Outcome counts() {
  Outcome o;
  auto timed = [&](const std::string& what, auto fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double t = seconds_since(t0);
    o.expect(t < kCountSeconds, what + " " + show(t) + " s");
  };
  timed("n=1", [&] {
    const auto sd = count_self_dual(3, 1);
    const auto lcd = count_lcd(3, 1);
    o.expect(sd.oracle_value == BigInt(2) && sd.formula_value == 2, "n=1 self-dual " + sd.formula_value.str());
    o.expect(lcd.oracle_value == BigInt(63) && lcd.formula_value == 63, "n=1 LCD " + lcd.formula_value.str());
  });
  timed("n=5", [&] {
    const auto sd = count_self_dual(3, 5);
    const auto lcd = count_lcd(3, 5);
    o.expect(sd.constituents.size() == 3 && sd.constituents[1].oracle == BigInt(90), "n=5 constituent self-dual 90");
    o.expect(lcd.constituents.size() == 3 && lcd.constituents[1].oracle == BigInt(5751), "n=5 constituent LCD 5751");
    o.expect(sd.oracle_value == BigInt(16200) && sd.formula_value == 16200,
             "n=5 self-dual total " + sd.formula_value.str());
  });
  timed("n=7", [&] {
    auto r = GaloisRing::quadratic(3);
    const auto pair = oracle_pair_constituents(CrtContext::create(r, 7)->local(1).ring(), {}, 1, 0);
    const auto sd = count_self_dual(3, 7);
    o.expect(pair.units == 530712, "n=7 unit count " + pair.units.str());
    o.expect(sd.oracle_value == BigInt(1061424) && sd.formula_value == 1061424,
             "n=7 self-dual total " + sd.formula_value.str());
  });
  return o;
}

Outcome equivalences() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  auto r = GaloisRing::quadratic(3);
  const auto crt = CrtContext::create(r, 5);
  for (std::size_t i = 1; i < crt->size(); ++i) {
    const auto& local = crt->local(i).ring();
    const auto sd = oracle_constituent_selfdual(local, crt->conj_power(i));
    const auto lcd = oracle_constituent_lcd(local, crt->conj_power(i));
    const std::string id = "constituent " + show(i) + " (" + show(local->order_u64()) + " elements)";
    o.expect(local->order_u64() == 6561, id + " size");
    o.expect(sd.sets_equal && sd.count == sd.system_count, id + " self-dual system: " + show(sd.count) + " solutions");
    o.expect(lcd.sets_equal, id + " non-LCD system: " + show(lcd.non_lcd) + " elements");
  }
  const double t = seconds_since(t0);
  o.expect(t < kEquivalenceSeconds, show(t) + " s");
  return o;
}

Outcome pair_counts() {
  Outcome o;
  auto r = GaloisRing::quadratic(3);
  const auto pair = oracle_pair_constituents(CrtContext::create(r, 7)->local(1).ring(), {}, 2024, 100);
  const BigInt u = 729;
  const BigInt proof = (u * u - u) * (u * u - u) + u * u * u;
  const BigInt statement = u * u * u * u - u * u + u;
  o.expect(pair.lcd_unit_class == (u * u - u) * (u * u - u), "unit class " + pair.lcd_unit_class.str());
  o.expect(pair.lcd_nonunit_class == u * u * u, "non-unit class " + pair.lcd_nonunit_class.str());
  o.expect(pair.lcd_pairs == proof, "pairs " + pair.lcd_pairs.str() + " = (u'^2-u')^2+u'^3");
  o.expect(pair.lcd_pairs != statement, "u'^4-u'^2+u' = " + statement.str() + " refuted");
  o.expect(pair.spot_checks >= 100 && pair.spot_checks_agree, show(pair.spot_checks) + " full c' scans agree");
  return o;
}

Outcome yamada() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (auto ring : {GaloisRing::with_degree(3, 2), GaloisRing::with_degree(3, 4)}) {
    const auto teich = teichmuller_set(ring);
    std::uint64_t good = 0, total = 0;
    for (const auto& a : teich) {
      for (const auto& b : teich) {
        const auto s = yamada_add(a, b);
        good += s.t0 + s.t1.scaled(3) == a + b && is_teichmuller(s.t0) && is_teichmuller(s.t1);
        ++total;
      }
    }
    o.expect(good == total && total == teich.size() * teich.size(),
             "degree " + show(ring->degree()) + ": " + show(good) + "/" + show(total) + " pairs");
  }
  const double t = seconds_since(t0);
  o.expect(t < kYamadaSeconds, show(t) + " s");
  return o;
}

Outcome gray() {
  Outcome o;
  for (unsigned p : {3u, 7u}) {
    auto r = GaloisRing::quadratic(p);
    const auto g = four_square_params(p);
    std::set<std::pair<Coeff, Coeff>> seen;
    for (std::uint64_t i = 0; i < r->order_u64(); ++i) seen.insert(phi(RingElement::from_index(r, i), g));
    o.expect(seen.size() == r->order_u64(), "phi bijective for p=" + show(p));
  }
  auto r = GaloisRing::quadratic(3);
  const auto g = four_square_params(3);
  std::mt19937_64 rng(200);
  int held = 0;
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + rng() % 2;
    std::vector<RingElement> a;
    for (std::size_t i = 0; i < n; ++i) a.push_back(RingElement::from_index(r, rng() % r->order_u64()));
    held += check_duality_preservation(DCCode(r, a), g).holds();
  }
  o.expect(held == 200, "duality preserved for " + show(held) + "/200 codes");

  const std::vector<std::vector<Coeff>> table = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}, {1, 1, 1}, {1, 2, 0},
                                                 {1, 0, 2}, {2, 2, 2}, {2, 0, 1}, {2, 1, 0}};
  const std::vector<unsigned> weights = {0, 2, 2, 3, 2, 2, 3, 2, 2};
  bool same = true;
  for (Coeff x = 0; x < 9; ++x) same = same && lb_gray(x, 3) == table[x] && lb_weight(x, 3) == weights[x];
  o.expect(same, "Phi table for p=3");

  int iso = 0;
  for (Coeff x = 0; x < 9; ++x) {
    for (Coeff y = 0; y < 9; ++y) {
      unsigned d = 0;
      for (int i = 0; i < 3; ++i) d += lb_gray(x, 3)[i] != lb_gray(y, 3)[i];
      iso += d == lb_weight((x + 9 - y) % 9, 3);
    }
  }
  o.expect(iso == 81, "Phi translation isometry on " + show(iso) + "/81 pairs");
  return o;
}

Outcome hensel() {
  Outcome o;
  for (unsigned p : {3u, 7u, 11u}) {
    auto ring = GaloisRing::quadratic(p);
    int good = 0, total = 0;
    for (std::uint64_t n = 1; n <= 25; ++n) {
      if (n % p == 0) continue;
      const auto fs = factor_xn_minus_1(ring, n);
      good += fs.product() == RingPoly::x_pow_minus_one(ring, n);
      ++total;
    }
    o.expect(good == total, "p=" + show(p) + ": " + show(good) + "/" + show(total) + " products");
  }
  return o;
}

Outcome bounds() {
  Outcome o;
  for (unsigned p : {3u, 7u, 11u}) {
    for (auto kind : {CodeKind::self_dual, CodeKind::lcd}) {
      const double target = 1.0 / ((kind == CodeKind::self_dual ? 8.0 : 4.0) * p);
      const double delta = asymptotic_delta(p, kind);
      const double err = std::abs(entropy(p, delta) - target);
      o.expect(err <= kEntropyTolerance, "p=" + show(p) + " " + to_string(kind) + " delta " + show(delta) +
                                             " error " + show(err));
    }
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  auto r = GaloisRing::quadratic(3);
  const auto g = four_square_params(3);
  const auto code = DCCode::from_digits(r, "811", "081");
  std::vector<std::string> dist, count, search;
  for (unsigned t : {1u, 4u, 16u}) {
    DistanceOptions d;
    d.threads = t;
    d.histogram = true;
    dist.push_back(to_json(enumerate_min_distance(code, g, DistanceTarget::phi_then_lb, d), false).dump());
    OracleOptions oo;
    oo.threads = t;
    count.push_back(to_json(count_lcd(3, 5, oo)).dump());
    Json hits = Json::array();
    for (const auto& h : random_search(3, 2, CodeKind::lcd, 42, 30, d)) hits.push_back(to_json(h));
    search.push_back(hits.dump());
  }
  auto all_same = [](const std::vector<std::string>& v) { return v[0] == v[1] && v[1] == v[2]; };
  o.expect(all_same(dist), "distance report, threads 1/4/16");
  o.expect(all_same(count), "LCD count with oracle, threads 1/4/16");
  o.expect(all_same(search), "random search seed 42, threads 1/4/16");
  Json again = Json::array();
  for (const auto& h : random_search(3, 2, CodeKind::lcd, 42, 30)) again.push_back(to_json(h));
  o.expect(again.dump() == search[0], "random search repeat");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--expect-fail") {
      std::stringstream ss(argv[i + 1]);
      std::string tok;
      while (std::getline(ss, tok, ',')) expected.insert(std::stoi(tok));
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"table rows n=2", table_n2},
      {"table row n=3", table_n3},
      {"counting oracles", counts},
      {"digit-system equivalences", equivalences},
      {"pair class counts", pair_counts},
      {"Teichmuller addition", yamada},
      {"Gray maps", gray},
      {"Hensel round trip", hensel},
      {"asymptotic bound evaluator", bounds},
      {"determinism", determinism},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) failed.insert(id);
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
              << seconds_since(t0) << " s)\n";
    for (const auto& l : o.lines) std::cout << "    " << l << '\n';
  }
  std::cout << "summary: " << criteria.size() - failed.size() << "/" << criteria.size() << " passed\n";
  if (failed != expected) {
    std::cout << "failing set differs from --expect-fail\n";
    return 1;
  }
  return 0;
}
