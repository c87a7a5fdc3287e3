#include "dcgr/distance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "dcgr/parallel.hpp"

namespace dcgr {

std::string to_string(DistanceTarget t) { return t == DistanceTarget::phi ? "phi" : "phi_then_lb"; }

DistanceTarget parse_distance_target(const std::string& s) {
  if (s == "phi") return DistanceTarget::phi;
  if (s == "lb" || s == "phi_then_lb") return DistanceTarget::phi_then_lb;
  throw DomainError("unknown distance target: " + s);
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("DC_BUDGET")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v >= 1.0 && v < 1.8e19) return static_cast<std::uint64_t>(v);
  }
  return 100'000'000;
}

namespace {

struct Partial {
  unsigned min_phi = UINT32_MAX;
  unsigned min_lb = UINT32_MAX;
  std::uint64_t visited = 0;
  std::vector<std::uint64_t> hist;
};

// Tables are costly for p = 7 (2401^2 entries); keep one per ring.
std::shared_ptr<const ElementTables> tables_for(const RingPtr& ring) {
  static std::mutex mu;
  static std::map<const void*, std::shared_ptr<const ElementTables>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[ring.get()];
  if (!slot || slot->ring() != ring) slot = std::make_shared<const ElementTables>(ring);
  return slot;
}

// Scans messages [begin, end) in odometer order. The parity half m*A is updated
// incrementally: changing digit i by delta adds delta * a_{j-i} to coordinate j.
class Engine {
 public:
  Engine(const DCCode& code, const GrayParams& g) : tp_(tables_for(code.ring())), t_(*tp_), n_(code.n()) {
    const std::uint32_t order = t_.order();
    hw_.resize(order);
    lw_.resize(order);
    for (std::uint32_t e = 0; e < order; ++e) {
      const auto [u, w] = phi(t_.element(static_cast<std::uint16_t>(e)), g);
      hw_[e] = static_cast<std::uint16_t>((u != 0) + (w != 0));
      lw_[e] = static_cast<std::uint16_t>(lb_weight(u, g.p) + lb_weight(w, g.p));
    }
    for (const auto& c : code.coefficients()) a_.push_back(t_.index(c));
  }

  Partial run(std::uint64_t begin, std::uint64_t end, DistanceTarget target, bool histogram,
              std::optional<unsigned> stop_at, std::atomic<bool>& stop) const {
    Partial out;
    if (begin >= end) return out;
    const std::uint32_t order = t_.order();
    const std::size_t n = n_;
    if (histogram) out.hist.assign(max_weight(target) + 1, 0);

    std::vector<std::uint16_t> m(n), par(n, 0);
    std::uint64_t idx = begin;
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = static_cast<std::uint16_t>(idx % order);
      idx /= order;
    }
    unsigned wh = 0, wl = 0;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) par[j] = t_.add(par[j], t_.mul(m[i], a_[(j + n - i) % n]));
    }
    for (std::size_t j = 0; j < n; ++j) {
      wh += hw_[m[j]] + hw_[par[j]];
      wl += lw_[m[j]] + lw_[par[j]];
    }

    for (std::uint64_t k = begin; k < end; ++k) {
      if (k != 0) {
        out.min_phi = std::min(out.min_phi, wh);
        out.min_lb = std::min(out.min_lb, wl);
        if (histogram) ++out.hist[target == DistanceTarget::phi ? wh : wl];
        ++out.visited;
        if (stop_at && (target == DistanceTarget::phi ? wh : wl) <= *stop_at) {
          stop.store(true, std::memory_order_relaxed);
          return out;
        }
      }
      if ((k & 0xfff) == 0 && stop.load(std::memory_order_relaxed)) return out;
      // next message
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint16_t old = m[i];
        const std::uint16_t nw = static_cast<std::uint16_t>(old + 1u == order ? 0 : old + 1);
        const std::uint16_t delta = t_.add(nw, t_.neg(old));
        wh = wh - hw_[old] + hw_[nw];
        wl = wl - lw_[old] + lw_[nw];
        m[i] = nw;
        for (std::size_t j = 0; j < n; ++j) {
          const std::uint16_t v = t_.add(par[j], t_.mul(delta, a_[(j + n - i) % n]));
          wh = wh - hw_[par[j]] + hw_[v];
          wl = wl - lw_[par[j]] + lw_[v];
          par[j] = v;
        }
        if (nw != 0) break;
      }
    }
    return out;
  }

  unsigned max_weight(DistanceTarget target) const {
    return static_cast<unsigned>(4 * n_ * (target == DistanceTarget::phi ? 1 : t_.ring()->p()));
  }

 private:
  std::shared_ptr<const ElementTables> tp_;
  const ElementTables& t_;
  std::size_t n_;
  std::vector<std::uint16_t> a_, hw_, lw_;
};

struct Scan {
  Partial merged;
  bool stopped = false;
  std::uint64_t total = 0;
};

Scan scan(const DCCode& code, const GrayParams& g, DistanceTarget target, const DistanceOptions& opt) {
  const Engine engine(code, g);
  const auto total = checked_pow(code.ring()->order_u64(), static_cast<unsigned>(code.n()));
  const bool over = !total || *total > opt.budget;
  const std::uint64_t end = over ? opt.budget : *total;
  std::atomic<bool> stop{false};
  const auto parts = parallel_ranges(end, std::max(1u, opt.threads), [&](std::uint64_t b, std::uint64_t e) {
    return engine.run(b, e, target, opt.histogram, opt.stop_at, stop);
  });
  Scan out;
  out.total = total.value_or(UINT64_MAX);
  out.stopped = stop.load();
  if (opt.histogram) out.merged.hist.assign(engine.max_weight(target) + 1, 0);
  for (const auto& p : parts) {
    out.merged.min_phi = std::min(out.merged.min_phi, p.min_phi);
    out.merged.min_lb = std::min(out.merged.min_lb, p.min_lb);
    out.merged.visited += p.visited;
    for (std::size_t w = 0; w < p.hist.size(); ++w) out.merged.hist[w] += p.hist[w];
  }
  if (over && !out.stopped) {
    const unsigned best = target == DistanceTarget::phi ? out.merged.min_phi : out.merged.min_lb;
    throw DistanceBudgetError("distance: message space exceeds the budget", out.total, opt.budget,
                              best == UINT32_MAX ? std::nullopt : std::optional<unsigned>(best));
  }
  return out;
}

}  // namespace

DistanceReport enumerate_min_distance(const DCCode& code, const GrayParams& g, DistanceTarget target,
                                      const DistanceOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  DistanceReport r;
  std::tie(r.a1, r.a0) = code.to_digits();
  r.p = g.p;
  r.n = code.n();
  r.target = target;
  r.alphabet = target == DistanceTarget::phi ? "Z_p2" : "F_p";
  r.length = 4 * code.n() * (target == DistanceTarget::phi ? 1 : g.p);
  r.budget = opt.budget;
  phi(RingElement::one(code.ring()), g);  // ring check
  const Scan s = scan(code, g, target, opt);
  r.codewords = s.total;
  if (s.stopped) {
    r.below_stop = true;
  } else {
    r.enumerated = s.merged.visited;
    const unsigned d = target == DistanceTarget::phi ? s.merged.min_phi : s.merged.min_lb;
    if (d != UINT32_MAX) r.min_distance = d;
    r.exact = true;
    r.histogram = s.merged.hist;
    if (opt.histogram && !r.histogram.empty()) r.histogram[0] = 1;  // the zero word
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

DistancePair min_distances(const DCCode& code, const GrayParams& g, const DistanceOptions& opt) {
  DistanceOptions o = opt;
  o.histogram = false;
  o.stop_at.reset();
  const Scan s = scan(code, g, DistanceTarget::phi, o);
  if (s.merged.visited == 0) return {};
  return {s.merged.min_phi, s.merged.min_lb};
}

std::vector<SearchHit> random_search(unsigned p, std::size_t n, CodeKind kind, std::uint64_t seed,
                                     std::uint64_t iterations, const DistanceOptions& opt) {
  if (n == 0) throw DomainError("random_search: n must be positive");
  auto ring = GaloisRing::quadratic(p);
  const auto g = four_square_params(p);
  std::mt19937_64 rng(seed);
  std::optional<SelfDualSampler> sampler;
  if (kind == CodeKind::self_dual && n % p != 0) sampler.emplace(p, n);

  auto uniform_code = [&] {
    std::vector<RingElement> a;
    for (std::size_t i = 0; i < n; ++i) a.push_back(RingElement::from_index(ring, rng() % ring->order_u64()));
    return DCCode(ring, std::move(a));
  };

  std::set<std::vector<std::uint64_t>> seen;
  std::vector<SearchHit> hits;
  for (std::uint64_t it = 0; it < iterations; ++it) {
    std::optional<DCCode> code;
    if (sampler) {
      if (sampler->size() == 0) break;
      code = sampler->code(rng() % sampler->size());
    } else {
      code = uniform_code();
      if (kind == CodeKind::lcd ? !is_lcd(*code) : !is_self_dual(*code)) continue;
    }
    std::vector<std::uint64_t> key;
    for (const auto& c : code->coefficients()) key.push_back(c.index());
    if (!seen.insert(key).second) continue;
    const auto d = min_distances(*code, g, opt);
    const auto cls = classify_by_polynomial(*code);
    SearchHit h;
    std::tie(h.a1, h.a0) = code->to_digits();
    h.self_dual = cls.self_dual;
    h.lcd = cls.lcd;
    h.d_phi = d.d_phi;
    h.d_lb = d.d_lb;
    hits.push_back(std::move(h));
  }

  std::vector<SearchHit> front;
  for (const auto& h : hits) {
    const bool dominated = std::any_of(hits.begin(), hits.end(), [&](const SearchHit& o) {
      return o.d_phi >= h.d_phi && o.d_lb >= h.d_lb && (o.d_phi > h.d_phi || o.d_lb > h.d_lb);
    });
    if (!dominated) front.push_back(h);
  }
  std::sort(front.begin(), front.end(), [](const SearchHit& l, const SearchHit& r) {
    return std::tie(r.d_lb, r.d_phi, l.a1, l.a0) < std::tie(l.d_lb, l.d_phi, r.a1, r.a0);
  });
  return front;
}

}  // namespace dcgr
