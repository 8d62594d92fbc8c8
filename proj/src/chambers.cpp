#include "mono/chambers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace mono {

namespace {

double proj(std::complex<double> z, double phi) {
  return (z * std::polar(1.0, phi)).real();
}

double height(std::complex<double> z, double phi) {
  return (z * std::polar(1.0, phi)).imag();
}

}  // namespace

std::vector<StokesRay> stokes_rays(const std::vector<std::complex<double>>& u,
                                   double tol) {
  std::vector<StokesRay> rays;
  int n = static_cast<int>(u.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::complex<double> d = u[i] - u[j];
      if (std::abs(d) <= tol) continue;
      std::complex<double> dir = std::complex<double>(0, -1) * std::conj(d);
      rays.push_back({i + 1, j + 1, std::arg(dir)});
    }
  return rays;
}

bool is_admissible(const std::vector<std::complex<double>>& u, double phi,
                   double tol) {
  for (auto& ray : stokes_rays(u)) {
    double d = std::remainder(ray.angle - phi, M_PI);
    if (std::abs(d) < tol) return false;
  }
  return true;
}

LexOrder lexicographic_order(const std::vector<std::complex<double>>& u,
                             double phi, double tol) {
  int n = static_cast<int>(u.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    double pa = proj(u[a], phi), pb = proj(u[b], phi);
    if (std::abs(pa - pb) <= tol) return a < b;
    return pa < pb;
  });
  LexOrder out;
  for (int i : idx) out.order.push_back(i + 1);
  std::vector<int> group{idx[0]};
  for (int k = 1; k < n; ++k) {
    if (std::abs(proj(u[idx[k]], phi) - proj(u[idx[k - 1]], phi)) <= tol) {
      group.push_back(idx[k]);
    } else {
      if (group.size() > 1) {
        std::vector<int> g;
        for (int m : group) g.push_back(m + 1);
        out.ties.push_back(g);
      }
      group = {idx[k]};
    }
  }
  if (group.size() > 1) {
    std::vector<int> g;
    for (int m : group) g.push_back(m + 1);
    out.ties.push_back(g);
  }
  return out;
}

BraidWord track_braid(const std::vector<std::vector<std::complex<double>>>& samples,
                      double phi, double tol) {
  if (samples.size() < 2)
    throw std::invalid_argument("need at least two samples");
  size_t n = samples[0].size();
  if (n < 2) throw std::invalid_argument("need at least two coordinates");
  for (auto& s : samples)
    if (s.size() != n) throw std::invalid_argument("ragged sample list");

  if (!is_admissible(samples.front(), phi, tol))
    throw std::domain_error("initial configuration is not admissible");
  if (!is_admissible(samples.back(), phi, tol))
    throw std::domain_error("final configuration is not admissible");

  LexOrder start = lexicographic_order(samples.front(), phi, tol);
  if (!start.ties.empty())
    throw std::domain_error("initial projections are tied");
  std::vector<int> slot(n);  // slot -> 0-based original index
  for (size_t k = 0; k < n; ++k) slot[k] = start.order[k] - 1;

  BraidWord word;
  struct Event {
    double t;
    int a, b;  // original indices, a < b
  };

  for (size_t m = 0; m + 1 < samples.size(); ++m) {
    const auto& u0 = samples[m];
    const auto& u1 = samples[m + 1];
    std::vector<Event> events;
    for (size_t a = 0; a + 1 < n; ++a)
      for (size_t b = a + 1; b < n; ++b) {
        double g0 = proj(u0[a] - u0[b], phi);
        double g1 = proj(u1[a] - u1[b], phi);
        if (m > 0 && std::abs(g0) <= tol)
          throw std::domain_error("projection tie at an interior sample; refine the path");
        if (std::abs(g1) <= tol && m + 2 < samples.size())
          throw std::domain_error("projection tie at an interior sample; refine the path");
        if (g0 * g1 < 0 && std::abs(g0) > tol && std::abs(g1) > tol)
          events.push_back({g0 / (g0 - g1), static_cast<int>(a), static_cast<int>(b)});
      }
    std::sort(events.begin(), events.end(),
              [](const Event& x, const Event& y) { return x.t < y.t; });

    size_t k = 0;
    while (k < events.size()) {
      size_t k2 = k + 1;
      while (k2 < events.size() && events[k2].t - events[k].t < 1e-12) ++k2;
      // Simultaneous group: strand sets must be pairwise disjoint.
      for (size_t p = k; p < k2; ++p)
        for (size_t q = p + 1; q < k2; ++q)
          if (events[p].a == events[q].a || events[p].a == events[q].b ||
              events[p].b == events[q].a || events[p].b == events[q].b)
            throw std::domain_error(
                "simultaneous crossings share a strand; refine the path");

      std::vector<std::pair<int, Event>> by_slot;  // (min slot, event)
      for (size_t p = k; p < k2; ++p) {
        int pa = -1, pb = -1;
        for (size_t s = 0; s < n; ++s) {
          if (slot[s] == events[p].a) pa = static_cast<int>(s);
          if (slot[s] == events[p].b) pb = static_cast<int>(s);
        }
        if (std::abs(pa - pb) != 1)
          throw std::domain_error("crossing of non-adjacent strands; refine the path");
        by_slot.push_back({std::min(pa, pb), events[p]});
      }
      std::sort(by_slot.begin(), by_slot.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });

      for (auto& [kslot, ev] : by_slot) {
        double t = ev.t;
        std::complex<double> lo = u0[slot[kslot]] + t * (u1[slot[kslot]] - u0[slot[kslot]]);
        std::complex<double> hi =
            u0[slot[kslot + 1]] + t * (u1[slot[kslot + 1]] - u0[slot[kslot + 1]]);
        double h = height(lo - hi, phi);
        if (std::abs(h) <= tol)
          throw std::domain_error("strands collide; the path leaves the configuration space");
        int letter = static_cast<int>(kslot) + 1;
        word.letters.push_back(h < 0 ? letter : -letter);
        std::swap(slot[kslot], slot[kslot + 1]);
      }
      k = k2;
    }
  }

  LexOrder end = lexicographic_order(samples.back(), phi, tol);
  if (!end.ties.empty()) throw std::domain_error("final projections are tied");
  for (size_t s = 0; s < n; ++s)
    if (end.order[s] - 1 != slot[s])
      throw std::logic_error("tracked order disagrees with the final configuration");
  return word;
}

TrackInput track_input_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  TrackInput in;
  in.phi = j.at("phi").get<double>();
  for (auto& js : j.at("samples")) {
    std::vector<std::complex<double>> row;
    for (auto& jz : js) {
      if (!jz.is_array() || jz.size() != 2)
        throw std::invalid_argument("samples entries must be [re, im] pairs");
      row.push_back({jz[0].get<double>(), jz[1].get<double>()});
    }
    in.samples.push_back(std::move(row));
  }
  return in;
}

std::string track_input_to_json(const TrackInput& in) {
  nlohmann::json j;
  j["phi"] = in.phi;
  nlohmann::json js = nlohmann::json::array();
  for (auto& row : in.samples) {
    nlohmann::json jr = nlohmann::json::array();
    for (auto& z : row) jr.push_back({z.real(), z.imag()});
    js.push_back(jr);
  }
  j["samples"] = js;
  return j.dump(2) + "\n";
}

}  // namespace mono
