// dc: double circulant codes over GR(p^2, p^4).
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dcgr/format.hpp"

using namespace dcgr;

namespace {

struct Config {
  unsigned p = 3;
  std::uint64_t n = 0;
  std::string a1, a0;
  std::string kind = "self_dual";
  std::optional<std::uint64_t> seed;
  std::uint64_t iters = 1000;
  std::string target = "phi";
  std::string budget;
  unsigned threads = 1;
  std::string format = "json";
  bool no_oracle = false;
  bool histogram = false;
  std::optional<unsigned> stop_at;
};

std::uint64_t budget_of(const Config& c) {
  if (c.budget.empty()) return default_budget();
  std::size_t pos = 0;
  const double v = std::stod(c.budget, &pos);
  if (pos != c.budget.size() || v < 1.0 || v >= 1.8e19) throw DomainError("bad --budget: " + c.budget);
  return static_cast<std::uint64_t>(v);
}

void require_prime(unsigned p) {
  if (p < 3 || !is_prime(p)) throw DomainError("p must be an odd prime");
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// key: value lines; nested values are printed compactly.
void print(const Json& j, const std::string& format, const std::string& csv = {}) {
  if (format == "json") {
    std::cout << j.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << csv;
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (k != "schema") std::cout << k << ": " << scalar_text(v) << '\n';
    }
  } else {
    for (const auto& row : j) std::cout << scalar_text(row) << '\n';
  }
}

DCCode code_of(const Config& c) {
  require_prime(c.p);
  if (c.a1.empty() || c.a0.empty()) throw DomainError("--a1 and --a0 are required");
  return DCCode::from_digits(GaloisRing::quadratic(c.p), c.a1, c.a0);
}

int cmd_factor(const Config& c) {
  require_prime(c.p);
  const auto f = factor_xn_minus_1(GaloisRing::quadratic(c.p), c.n);
  std::ostringstream csv;
  csv << "index,degree,kind,partner\n";
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const auto& g = f.factors[i];
    csv << i << ',' << g.degree() << ',' << to_string(g.kind) << ',' << (g.partner ? std::to_string(*g.partner) : "")
        << '\n';
  }
  print(to_json(f), c.format, csv.str());
  return 0;
}

int cmd_check(const Config& c) {
  const auto code = code_of(c);
  const auto m = classify_by_matrix(code);
  const auto poly = classify_by_polynomial(code);
  Json j;
  j["schema"] = kSchema;
  j["p"] = c.p;
  j["n"] = code.n();
  j["a1"] = c.a1;
  j["a0"] = c.a0;
  j["self_dual"] = m.self_dual;
  j["lcd"] = m.lcd;
  j["polynomial_agrees"] = poly == m;
  if (code.n() % c.p != 0) {
    j["constituents_agree"] = classify_by_constituents(crt_decompose(code)) == m;
  } else {
    j["constituents_agree"] = nullptr;
  }
  try {
    j["hull_size"] = hull_size(code, budget_of(c));
  } catch (const BudgetError&) {
    j["hull_size"] = nullptr;
  }
  std::ostringstream csv;
  csv << "a1,a0,self_dual,lcd\n" << c.a1 << ',' << c.a0 << ',' << m.self_dual << ',' << m.lcd << '\n';
  print(j, c.format, csv.str());
  return 0;
}

int cmd_count(const Config& c) {
  require_prime(c.p);
  OracleOptions opt;
  opt.threads = c.threads;
  if (!c.budget.empty() || std::getenv("DC_BUDGET")) opt.budget = budget_of(c);
  const auto kind = parse_code_kind(c.kind);
  const auto r = kind == CodeKind::self_dual ? count_self_dual(c.p, c.n, opt, !c.no_oracle)
                                             : count_lcd(c.p, c.n, opt, !c.no_oracle);
  std::ostringstream csv;
  csv << "factor,kind,degree,u,formula,oracle\n";
  for (const auto& k : r.constituents) {
    csv << k.factor << ',' << to_string(k.kind) << ',' << k.degree << ',' << k.u << ',' << k.formula << ','
        << (k.oracle ? k.oracle->str() : "") << '\n';
  }
  print(to_json(r), c.format, csv.str());
  return 0;
}

int cmd_enumerate(const Config& c) {
  require_prime(c.p);
  const auto kind = parse_code_kind(c.kind);
  const auto budget = budget_of(c);
  std::vector<DCCode> codes;
  if (kind == CodeKind::self_dual && c.n % c.p != 0) {
    codes = generate_all_self_dual(c.p, c.n, budget, c.threads);
  } else {
    auto r = GaloisRing::quadratic(c.p);
    const auto total = checked_pow(r->order_u64(), static_cast<unsigned>(c.n));
    if (!total || *total > budget) throw BudgetError("enumerate: too many codes", total.value_or(UINT64_MAX), budget);
    for (std::uint64_t idx = 0; idx < *total; ++idx) {
      std::vector<RingElement> a;
      for (std::uint64_t i = 0, v = idx; i < c.n; ++i, v /= r->order_u64())
        a.push_back(RingElement::from_index(r, v % r->order_u64()));
      DCCode code(r, std::move(a));
      if (kind == CodeKind::lcd ? is_lcd(code) : is_self_dual(code)) codes.push_back(std::move(code));
    }
  }
  Json list = Json::array();
  std::ostringstream csv;
  csv << "a1,a0\n";
  for (const auto& code : codes) {
    const auto [a1, a0] = code.to_digits();
    list.push_back({{"a1", a1}, {"a0", a0}});
    csv << a1 << ',' << a0 << '\n';
  }
  Json j;
  j["schema"] = kSchema;
  j["p"] = c.p;
  j["n"] = c.n;
  j["kind"] = to_string(kind);
  j["count"] = codes.size();
  j["codes"] = list;
  print(j, c.format, csv.str());
  return 0;
}

int cmd_search(const Config& c) {
  require_prime(c.p);
  if (!c.seed) throw DomainError("search needs --seed");
  DistanceOptions opt;
  opt.budget = budget_of(c);
  opt.threads = c.threads;
  const auto kind = parse_code_kind(c.kind);
  const auto hits = random_search(c.p, c.n, kind, *c.seed, c.iters, opt);
  Json list = Json::array();
  std::ostringstream csv;
  csv << "a1,a0,self_dual,lcd,d_phi,d_lb\n";
  for (const auto& h : hits) {
    list.push_back(to_json(h));
    csv << h.a1 << ',' << h.a0 << ',' << h.self_dual << ',' << h.lcd << ',' << h.d_phi << ',' << h.d_lb << '\n';
  }
  Json j;
  j["schema"] = kSchema;
  j["p"] = c.p;
  j["n"] = c.n;
  j["kind"] = to_string(kind);
  j["seed"] = *c.seed;
  j["iterations"] = c.iters;
  j["best"] = list;
  print(j, c.format, csv.str());
  return 0;
}

int cmd_distance(const Config& c) {
  const auto code = code_of(c);
  DistanceOptions opt;
  opt.budget = budget_of(c);
  opt.threads = c.threads;
  opt.histogram = c.histogram || c.format == "csv";
  opt.stop_at = c.stop_at;
  try {
    const auto r = enumerate_min_distance(code, four_square_params(c.p), parse_distance_target(c.target), opt);
    print(to_json(r), c.format, histogram_csv(r));
  } catch (const DistanceBudgetError& e) {
    std::cerr << "error: " << e.what() << " (" << e.required() << " messages, budget " << e.budget() << ")";
    if (e.upper_bound()) std::cerr << "; distance <= " << *e.upper_bound() << " from the scanned prefix";
    std::cerr << '\n';
    return 1;
  }
  return 0;
}

int cmd_gray(const Config& c) {
  const auto g = four_square_params(c.p);
  Json j = to_json(g);
  j["lb_table"] = lb_table_json(c.p);
  std::ostringstream csv;
  csv << "x,r0,r1,image,weight\n";
  for (Coeff x = 0; x < c.p * c.p; ++x) {
    csv << x << ',' << x % c.p << ',' << x / c.p << ',';
    for (auto b : lb_gray(x, c.p)) csv << b;
    csv << ',' << lb_weight(x, c.p) << '\n';
  }
  print(j, c.format, csv.str());
  return 0;
}

int cmd_bound(const Config& c) {
  require_prime(c.p);
  std::ostringstream sd, lcd;
  sd << std::fixed << std::setprecision(12) << asymptotic_delta(c.p, CodeKind::self_dual);
  lcd << std::fixed << std::setprecision(12) << asymptotic_delta(c.p, CodeKind::lcd);
  Json j;
  j["schema"] = kSchema;
  j["p"] = c.p;
  j["self_dual"] = sd.str();
  j["lcd"] = lcd.str();
  print(j, c.format, "kind,delta\nself_dual," + sd.str() + "\nlcd," + lcd.str() + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"double circulant codes over GR(p^2, p^4)"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* s) {
    s->add_option("--p", c.p, "prime p");
    s->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv", "text"}));
    s->add_option("--threads", c.threads)->check(CLI::Range(1u, 1024u));
    s->add_option("--budget", c.budget, "enumeration budget, e.g. 1e8 (default: DC_BUDGET or 1e8)");
  };
  auto with_n = [&](CLI::App* s) { s->add_option("--n", c.n)->required()->check(CLI::PositiveNumber); };
  auto with_code = [&](CLI::App* s) {
    s->add_option("--a1", c.a1, "y-part digits, highest power first")->required();
    s->add_option("--a0", c.a0, "constant-part digits, highest power first")->required();
    s->add_option("--n", c.n, "ignored; n is the literal length");
  };
  auto with_kind = [&](CLI::App* s) { s->add_option("--kind", c.kind)->check(CLI::IsMember({"self_dual", "sd", "lcd"})); };

  std::map<std::string, int (*)(const Config&)> commands = {
      {"factor", cmd_factor}, {"check", cmd_check},     {"count", cmd_count}, {"enumerate", cmd_enumerate},
      {"search", cmd_search}, {"distance", cmd_distance}, {"gray", cmd_gray}, {"bound", cmd_bound}};

  auto* factor = app.add_subcommand("factor", "factor x^n - 1 over GR(p^2, 2)");
  common(factor);
  with_n(factor);
  auto* check = app.add_subcommand("check", "self-dual / LCD classification");
  common(check);
  with_code(check);
  auto* count = app.add_subcommand("count", "number of self-dual or LCD codes");
  common(count);
  with_n(count);
  with_kind(count);
  count->add_flag("--no-oracle", c.no_oracle, "skip the brute-force oracle");
  auto* enumerate = app.add_subcommand("enumerate", "list every code of a kind");
  common(enumerate);
  with_n(enumerate);
  with_kind(enumerate);
  auto* search = app.add_subcommand("search", "seeded random search for good codes");
  common(search);
  with_n(search);
  with_kind(search);
  search->add_option("--seed", c.seed)->required();
  search->add_option("--iters", c.iters);
  auto* distance = app.add_subcommand("distance", "exact minimum distance of a Gray image");
  common(distance);
  with_code(distance);
  distance->add_option("--target", c.target)->check(CLI::IsMember({"phi", "lb", "phi_then_lb"}));
  distance->add_flag("--histogram", c.histogram);
  distance->add_option("--stop-at", c.stop_at, "bound-only mode");
  auto* gray = app.add_subcommand("gray", "Gray map parameters and the F_p table");
  common(gray);
  auto* bound = app.add_subcommand("bound", "asymptotic relative distance bounds");
  common(bound);

  CLI11_PARSE(app, argc, argv);
  try {
    for (auto* s : app.get_subcommands()) return commands.at(s->get_name())(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
